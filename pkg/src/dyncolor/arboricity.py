"""(Δ+1)-coloring for graphs of bounded arboricity.

Edges are kept oriented with out-degree at most ``4 * gamma``.  A vertex
tracks the colors of its *in*-neighbours exactly (per-color counts plus the
set of colors with zero count); the few out-neighbours are checked on the fly
when the vertex has to be recolored.  A vertex is responsible for telling its
out-neighbours its color.
"""

from __future__ import annotations

from .errors import (CapacityExceeded, EdgeExists, EdgeMissing, OrientationError,
                     PaletteExhausted, SelfLoop, VertexOutOfRange)
from .graph import ColorTally, DynGraph, LinkedSet, Metrics


class Orientation:
    """Out-degree-bounded orientation maintained by threshold flushing.

    A new edge points away from the endpoint with the smaller out-degree.
    Whenever some vertex exceeds ``delta`` out-edges, all of its out-edges are
    reversed; this repeats until no vertex is over the threshold.
    """

    def __init__(self, n: int, delta: int):
        self.n = n
        self.delta = delta
        self.out = [LinkedSet(n) for _ in range(n)]
        self.reorientations = 0
        self.m = 0

    def outdeg(self, v: int) -> int:
        return self.out[v].size

    def tail(self, u: int, v: int) -> int:
        """The endpoint the edge ``{u, v}`` points away from."""
        if v in self.out[u]:
            return u
        if u in self.out[v]:
            return v
        raise EdgeMissing((u, v))

    def insert(self, u: int, v: int) -> tuple[int, int, list[tuple[int, int]]]:
        """Orient a new edge; returns ``(tail, head, flips)``.

        ``flips`` lists every reversal in order, ``(x, y)`` meaning the edge
        that pointed ``x -> y`` now points ``y -> x``.
        """
        out = self.out
        if v in out[u] or u in out[v]:
            raise EdgeExists((u, v))
        tail, head = (u, v) if out[u].size <= out[v].size else (v, u)
        out[tail].add(head)
        self.m += 1
        flips: list[tuple[int, int]] = []
        delta = self.delta
        if out[tail].size <= delta:
            return tail, head, flips
        budget = 64 * (self.m + self.n) * (self.n.bit_length() + 1)
        stack = [tail]
        while stack:
            w = stack.pop()
            if out[w].size <= delta:
                continue
            for z in list(out[w]):
                out[w].remove(z)
                out[z].add(w)
                flips.append((w, z))
                if out[z].size == delta + 1:
                    stack.append(z)
            if len(flips) > budget:
                raise OrientationError("flush did not settle; arboricity bound violated?")
        self.reorientations += len(flips)
        return tail, head, flips

    def delete(self, u: int, v: int) -> tuple[int, int]:
        tail = self.tail(u, v)
        head = v if tail == u else u
        self.out[tail].remove(head)
        self.m -= 1
        return tail, head


class ArbColoring:
    """Coloring with palette ``1..dcap+1`` on a graph of arboricity ``gamma``."""

    name = "arb"
    explicit = True
    fully_dynamic = True

    def __init__(self, n: int, gamma: int, dcap: int):
        if gamma < 1 or dcap < 1:
            raise ValueError("gamma and dcap must be positive")
        self.n = n
        self.gamma = gamma
        self.dcap = dcap
        self.palette = dcap + 1
        self.g = DynGraph(n)
        self.orientation = Orientation(n, 4 * gamma)
        self.color = [1] * n
        self.count = [[0] * (self.palette + 1) for _ in range(n)]
        all_colors = ((1 << (self.palette + 1)) - 1) & ~1
        self.free = [all_colors] * n  # bit c set iff no in-neighbour wears c
        self.metrics = Metrics()
        self._tally = ColorTally(n, self.palette, self.metrics)

    @property
    def steps(self) -> int:
        return self.orientation.reorientations + self.g.m

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    def get_color(self, v: int) -> int:
        self._check(v)
        self.metrics.queries += 1
        return self.color[v]

    def colors(self) -> list[int]:
        return list(self.color)

    def free_colors(self, v: int) -> set[int]:
        return {c for c in range(1, self.palette + 1) if self.free[v] >> c & 1}

    def _add(self, v: int, c: int) -> None:
        row = self.count[v]
        row[c] += 1
        if row[c] == 1:
            self.free[v] &= ~(1 << c)

    def _sub(self, v: int, c: int) -> None:
        row = self.count[v]
        row[c] -= 1
        if row[c] == 0:
            self.free[v] |= 1 << c

    def update_orientation(self, u: int, v: int, kind: str) -> None:
        """Re-orient after the edge change ``kind`` ('inserted' or 'deleted')
        and keep in-neighbour color counts in step."""
        color = self.color
        if kind == "inserted":
            tail, head, flips = self.orientation.insert(u, v)
            self._add(head, color[tail])
            for x, y in flips:
                self._sub(y, color[x])
                self._add(x, color[y])
        elif kind == "deleted":
            tail, head = self.orientation.delete(u, v)
            self._sub(head, color[tail])
        else:
            raise ValueError(kind)

    def insert(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        g = self.g
        if u == v:
            raise SelfLoop(u)
        if g.has_edge(u, v):
            raise EdgeExists((u, v))
        if g.degree[u] + 1 > self.dcap or g.degree[v] + 1 > self.dcap:
            raise CapacityExceeded(f"degree would exceed dcap={self.dcap}")
        self.metrics.updates += 1
        g.add_edge(u, v)
        self.update_orientation(u, v, "inserted")
        if self.color[u] == self.color[v]:
            # the flush may have turned the new edge around; recolor its head
            if self.orientation.tail(u, v) == u:
                self.recolor(v)
            else:
                self.recolor(u)

    def recolor(self, v: int) -> None:
        color = self.color
        old = color[v]
        marks = 1 << old
        out = self.orientation.out[v]
        for w in out:
            marks |= 1 << color[w]
        candidates = self.free[v] & ~marks
        if not candidates:
            raise PaletteExhausted(v)
        c = (candidates & -candidates).bit_length() - 1
        color[v] = c
        self._tally.move(old, c)
        self.metrics.recolorings += 1
        for w in out:
            self._sub(w, old)
            self._add(w, c)

    def delete(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v or not self.g.has_edge(u, v):
            raise EdgeMissing((u, v))
        self.metrics.updates += 1
        self.g.remove_edge(u, v)
        self.update_orientation(u, v, "deleted")

    def audit(self) -> None:
        """Recount in-neighbour colors and check the orientation from scratch."""
        g = self.g
        o = self.orientation
        for v in range(self.n):
            assert o.outdeg(v) <= o.delta, v
            out = set(o.out[v])
            nbrs = set(g.neighbor_set(v))
            assert out <= nbrs, v
            want = [0] * (self.palette + 1)
            for z in nbrs - out:
                assert v in o.out[z], (z, v)
                want[self.color[z]] += 1
            assert self.count[v] == want, v
            for c in range(1, self.palette + 1):
                assert bool(self.free[v] >> c & 1) == (want[c] == 0), (v, c)
