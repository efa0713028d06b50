import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import ColorTally, DynGraph, EdgeExists, EdgeMissing, LinkedSet, Metrics
from dyncolor import SelfLoop, VertexOutOfRange


def test_single_edge_degrees():
    g = DynGraph(4)
    g.add_edge(0, 1)
    assert g.degree[0] == g.degree[1] == 1
    assert g.has_edge(1, 0)


def test_duplicate_and_bad_edges():
    g = DynGraph(3)
    g.add_edge(0, 1)
    with pytest.raises(EdgeExists):
        g.add_edge(1, 0)
    with pytest.raises(SelfLoop):
        g.add_edge(2, 2)
    with pytest.raises(VertexOutOfRange):
        g.add_edge(0, 3)
    with pytest.raises(EdgeMissing):
        g.remove_edge(0, 2)


def test_add_remove_inverse():
    g = DynGraph(2)
    g.add_edge(0, 1)
    g.remove_edge(0, 1)
    assert g.degree == [0, 0] and g.m == 0 and not g.has_edge(0, 1)


def test_random_adds_match_set_oracle(rng):
    n = 30
    g = DynGraph(n)
    ref = set()
    while len(ref) < 100:
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key in ref:
            continue
        ref.add(key)
        g.add_edge(u, v)
    for u in range(n):
        for v in range(n):
            assert g.has_edge(u, v) == ((min(u, v), max(u, v)) in ref)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 11), st.integers(0, 11)), max_size=200))
def test_interleaved_updates_match_oracle(pairs):
    n = 12
    g = DynGraph(n)
    ref = set()
    for u, v in pairs:
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in ref:
            g.remove_edge(u, v)
            ref.discard(key)
        else:
            g.add_edge(u, v)
            ref.add(key)
    assert set(g.edges()) == ref
    assert g.m == len(ref)
    for v in range(n):
        nbrs = {y for x, y in ref if x == v} | {x for x, y in ref if y == v}
        assert set(g.neighbors(v)) == nbrs
        assert g.degree[v] == len(nbrs)


def test_linked_set_iteration_survives_removal():
    s = LinkedSet(10)
    for i in (3, 7, 1, 9):
        s.add(i)
    assert list(s) == [9, 1, 7, 3]
    for i in s:
        s.remove(i)
    assert len(s) == 0 and s.first() == -1
    assert 3 not in s


def test_color_tally_tracks_distinct_maximum():
    m = Metrics()
    t = ColorTally(3, 4, m)
    t.move(1, 2)
    t.move(1, 3)
    assert m.distinct_colors_max == 3
    t.move(3, 2)
    t.move(2, 1)
    assert t.distinct == 2
    assert m.distinct_colors_max == 3
    assert m.as_dict()["distinct_colors_max"] == 3
