import pytest

from dyncolor import ArbColoring, EdgeMissing, Orientation, OrientationError
from dyncolor.bench import generate
from dyncolor.oracle import OracleGraph


def test_new_edge_leaves_lower_outdegree_endpoint():
    o = Orientation(4, delta=4)
    assert o.insert(0, 1)[:2] == (0, 1)
    assert o.insert(0, 2)[:2] == (2, 0)  # outdeg(0)=1 > outdeg(2)=0
    assert o.tail(1, 0) == 0


def test_flush_reverses_all_out_edges():
    o = Orientation(4, delta=1)
    o.insert(0, 1)
    o.insert(2, 3)
    # both endpoints already have one out-edge, so 0 goes over and flushes
    tail, head, flips = o.insert(0, 2)
    assert tail == 0
    assert (0, 1) in flips and (0, 2) in flips
    assert o.tail(0, 1) == 1
    assert all(o.outdeg(v) <= 1 for v in range(4))
    assert o.reorientations == len(flips)


def test_triangle_with_tight_delta():
    o = Orientation(3, delta=1)
    o.insert(0, 1)
    o.insert(1, 2)
    o.insert(2, 0)
    assert all(o.outdeg(v) <= 1 for v in range(3))


def test_overdense_graph_trips_guard():
    o = Orientation(6, delta=1)
    with pytest.raises(OrientationError):
        for u in range(6):
            for v in range(u + 1, 6):
                o.insert(u, v)


def test_delete_missing():
    s = ArbColoring(3, gamma=1, dcap=2)
    with pytest.raises(EdgeMissing):
        s.delete(0, 1)


def test_conflict_recolors_head():
    s = ArbColoring(3, gamma=1, dcap=2)
    s.insert(0, 1)
    tail = s.orientation.tail(0, 1)
    head = 1 - tail
    assert s.color[head] != 1 and s.color[tail] == 1


@pytest.mark.parametrize("gamma", [1, 2, 4])
def test_union_of_forests_keeps_bound(gamma):
    n = 64
    trace = generate(f"bounded-arboricity({n},{gamma},0.3,3000)", seed=gamma)
    dcap = n - 1
    s = ArbColoring(n, gamma, dcap)
    g = OracleGraph(n)
    for ev in trace.events:
        r0 = s.metrics.recolorings
        if ev.kind == "I":
            s.insert(ev.u, ev.v)
            g.add(ev.u, ev.v)
            assert s.metrics.recolorings - r0 <= 1
        else:
            s.delete(ev.u, ev.v)
            g.remove(ev.u, ev.v)
            assert s.metrics.recolorings == r0
        assert max(s.orientation.outdeg(v) for v in range(n)) <= 4 * gamma
        assert not g.violations(s.colors())
    s.audit()
