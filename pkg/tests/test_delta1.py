import math

import pytest

from dyncolor import CapacityExceeded, Delta1Coloring, EdgeExists, EdgeMissing
from dyncolor.oracle import OracleGraph


def test_init_all_color_one():
    s = Delta1Coloring(5, mcap=8, dcap=3)
    assert s.colors() == [1] * 5
    assert s.threshold == 4  # ceil(sqrt(16))


def test_threshold_rounds_up():
    assert Delta1Coloring(3, mcap=5, dcap=2).threshold == math.ceil(math.sqrt(10))


def test_conflict_recolors_one_endpoint():
    s = Delta1Coloring(3, mcap=3, dcap=2)
    s.insert(0, 1)
    assert s.get_color(0) != s.get_color(1)
    assert s.metrics.recolorings == 1


def test_capacity_and_contract_errors():
    s = Delta1Coloring(4, mcap=2, dcap=1)
    s.insert(0, 1)
    with pytest.raises(EdgeExists):
        s.insert(1, 0)
    with pytest.raises(CapacityExceeded):
        s.insert(1, 2)
    s.insert(2, 3)
    with pytest.raises(CapacityExceeded):
        s.insert(0, 2)
    with pytest.raises(EdgeMissing):
        s.delete(0, 3)


def test_high_vertex_promotion_and_demotion():
    # mcap=8 gives T=4: a star centre becomes high at its fourth edge
    s = Delta1Coloring(6, mcap=8, dcap=5)
    for leaf in range(1, 5):
        s.insert(0, leaf)
        s.audit()
    assert 0 in s.high
    assert s.used_colors(0) == {s.color[x] for x in range(1, 5)}
    assert s.color[0] not in s.used_colors(0)
    s.delete(0, 4)
    assert 0 not in s.high
    assert not any(s.count[0])
    s.audit()


def test_high_vertex_picks_smallest_free_color():
    s = Delta1Coloring(8, mcap=8, dcap=7)
    for leaf in range(1, 5):
        s.insert(0, leaf)
    s.recolor(0)
    assert s.color[0] == min(s.free_colors(0))


def test_random_churn_with_audit(rng):
    n = 48
    s = Delta1Coloring(n, mcap=120, dcap=10)
    g = OracleGraph(n)
    for _ in range(2500):
        if len(g) and rng.random() < 0.4:
            u, v = rng.choice(g.edges())
            r0 = s.metrics.recolorings
            s.delete(u, v)
            g.remove(u, v)
            assert s.metrics.recolorings == r0
        else:
            u, v = rng.sample(range(n), 2)
            if (u, v) in g:
                continue
            r0 = s.metrics.recolorings
            try:
                s.insert(u, v)
            except CapacityExceeded:
                continue
            g.add(u, v)
            assert s.metrics.recolorings - r0 <= 1
        assert not g.violations(s.colors())
        assert max(s.colors()) <= s.dcap + 1
        s.audit()
    assert s.max_work <= 4 * (s.threshold + 2 * math.isqrt(2 * s.mcap) + 2)
