import random

from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import ParityDsu
from dyncolor.oracle import (OracleGraph, Snapshot, bfs_bipartition, component_sizes,
                             connected_bfs, is_forest, max_density_exact,
                             max_density_sampled, proper_check)


def test_even_cycle_bipartite():
    s = Snapshot.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = bfs_bipartition(s)
    assert b.is_bipartite and proper_check(s, b.sides)


def test_triangle_witness():
    s = Snapshot.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    b = bfs_bipartition(s)
    assert not b.is_bipartite
    cyc = b.odd_cycle
    assert len(cyc) % 2 == 1
    for a, c in zip(cyc, cyc[1:] + cyc[:1]):
        assert (min(a, c), max(a, c)) in s.edges


def test_connected_and_sizes_trivia():
    s = Snapshot.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert connected_bfs(s, 5, 5)
    assert not connected_bfs(s, 0, 5)
    assert component_sizes(s) == [5, 5, 5, 5, 5, 1]


def test_proper_check_trivia():
    assert proper_check(Snapshot.from_edges(3, []), [1, 1, 1])
    assert not proper_check(Snapshot.from_edges(2, [(0, 1)]), [2, 2])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 13), st.integers(0, 13)), max_size=40))
def test_oracles_agree(pairs):
    n = 14
    edges = [(u, v) for u, v in pairs if u != v]
    s = Snapshot.from_edges(n, edges)
    b = bfs_bipartition(s)
    if b.is_bipartite:
        assert proper_check(s, b.sides)
    else:
        cyc = b.odd_cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
    sizes = component_sizes(s)
    d = ParityDsu(n)
    for v in range(n):
        d.makeset(v)
    for u, v in s.edges:
        ru, rv = d.find(u)[0], d.find(v)[0]
        if ru != rv:
            d.union_link(ru, rv, True)
    for u in range(n):
        assert sizes[u] == d.size[d.find(u)[0]]
        for v in range(n):
            assert connected_bfs(s, u, v) == (d.find(u)[0] == d.find(v)[0])


def test_density_checks():
    k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    assert max_density_exact(4, k4) == 2
    path = [(v, v + 1) for v in range(5)]
    assert max_density_exact(6, path) == 1
    assert is_forest(6, path) and not is_forest(4, k4)
    assert max_density_sampled(4, k4, random.Random(1)) <= 2


def test_oracle_graph_mirror():
    g = OracleGraph(4)
    g.add(0, 1)
    g.add(1, 2)
    assert g.closes_odd_cycle(0, 2) and not g.closes_odd_cycle(0, 3)
    g.remove(0, 1)
    assert (1, 0) not in g and g.component(0) == {0}
    assert g.violations([1, 2, 2, 1]) == [(1, 2)]
