from dyncolor import Implicit2Coloring, InsertOutcome
from dyncolor.oracle import OracleGraph


def test_first_edge_single_flag_write():
    s = Implicit2Coloring(2)
    s.insert(0, 1)
    assert s.get_color(0) != s.get_color(1)
    assert s.metrics.recolorings == 1


def test_random_trace(rng):
    n = 128
    s = Implicit2Coloring(n)
    g = OracleGraph(n)
    for _ in range(1500):
        u, v = rng.sample(range(n), 2)
        if (u, v) in g:
            continue
        odd = g.closes_odd_cycle(u, v)
        r0 = s.metrics.recolorings
        assert (s.insert(u, v) is InsertOutcome.REJECTED) == odd
        assert s.metrics.recolorings - r0 <= 1
        if not odd:
            g.add(u, v)
    assert not g.violations(s.colors())


def test_reinserting_existing_edge_is_harmless():
    s = Implicit2Coloring(3)
    s.insert(0, 1)
    before = s.colors()
    assert s.insert(0, 1) is InsertOutcome.ADDED
    assert s.colors() == before


def test_bulk_colors_match_single_queries(rng):
    n = 200
    s = Implicit2Coloring(n)
    for _ in range(1500):
        u, v = rng.sample(range(n), 2)
        s.insert(u, v)
    bulk = s.colors()
    assert bulk == [s.get_color(v) for v in range(n)]
