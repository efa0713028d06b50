import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import EdgeExists, EdgeMissing, HdtConnectivity
from dyncolor.ett import EulerTourForest
from dyncolor.oracle import OracleGraph


def test_ett_link_cut_sizes():
    f = EulerTourForest(6)
    f.link(0, 1)
    f.link(1, 2)
    f.link(3, 4)
    assert f.size(0) == 3 and f.size(4) == 2 and f.size(5) == 1
    assert sorted(f.vertices(2)) == [0, 1, 2]
    f.cut(0, 1)
    assert not f.connected(0, 2) and f.size(2) == 2


def test_ett_flag_search():
    f = EulerTourForest(5)
    for v in range(1, 5):
        f.link(v - 1, v)
    assert f.find_flagged(0, 1) is None
    f.set_flags(3, 1)
    assert f.find_flagged(0, 1) == 3
    f.set_flags(3, 0)
    assert f.find_flagged(4, 1) is None


def test_delete_outcomes():
    h = HdtConnectivity(4)
    for u, v in ((0, 1), (1, 2), (2, 3), (3, 0)):
        h.insert(u, v)
    assert not h.is_tree_edge(3, 0)
    out = h.delete(3, 0)
    assert out.kind == "nontree" and out.code == 0
    h.insert(3, 0)
    out = h.delete(1, 2)
    assert out.kind == "replaced" and out.edge in {(3, 0), (0, 3)}
    assert h.connected(1, 2)
    out = h.delete(0, 1)
    assert out.kind == "split" and out.code == -1
    assert not h.connected(0, 1)


def _side(edges, start):
    adj = {}
    for x, y in edges:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    seen = {start}
    stack = [start]
    while stack:
        for y in adj.get(stack.pop(), ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def test_replacement_crosses_the_cut(rng):
    n = 32
    h = HdtConnectivity(n)
    present = set()
    replaced = 0
    for _ in range(3000):
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key in present:
            forest = h.tree_edges() - {key}
            out = h.delete(u, v)
            present.discard(key)
            if out.kind == "replaced":
                replaced += 1
                x, y = out.edge
                side = _side(forest, u)
                assert (x in side) != (y in side)
                assert v not in side
        else:
            h.insert(u, v)
            present.add(key)
    assert replaced > 0
    h.check_invariants()


def test_duplicate_and_missing():
    h = HdtConnectivity(3)
    h.insert(0, 1)
    with pytest.raises(EdgeExists):
        h.insert(1, 0)
    with pytest.raises(EdgeMissing):
        h.delete(1, 2)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=300))
def test_toggle_sequences_match_bfs(pairs):
    n = 16
    h = HdtConnectivity(n)
    g = OracleGraph(n)
    for u, v in pairs:
        if u == v:
            continue
        if (u, v) in g:
            h.delete(u, v)
            g.remove(u, v)
        else:
            h.insert(u, v)
            g.add(u, v)
        for x in (u, v):
            comp = g.component(x)
            assert h.component_size(x) == len(comp)
            for y in range(n):
                assert h.connected(x, y) == (y in comp)
    h.check_invariants()
