"""Fully dynamic (Δ+1)-coloring with worst-case O(sqrt(m)) updates.

Vertices of degree at least ``T = ceil(sqrt(2 * mcap))`` are *high*; there
are at most ``sqrt(2 * mcap)`` of them.  A high vertex keeps a per-color
neighbour count and the derived used/free color sets, so it can pick a free
color without scanning its neighbours.  A low vertex scans its (short)
neighbour list instead.  A recolored vertex notifies only its high
neighbours, found by walking the high list.
"""

from __future__ import annotations

import math

from .errors import (CapacityExceeded, EdgeExists, EdgeMissing, PaletteExhausted,
                     SelfLoop, VertexOutOfRange)
from .graph import ColorTally, DynGraph, LinkedSet, Metrics


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Delta1Coloring:
    """Proper coloring from the palette ``1..dcap+1``.

    ``mcap`` bounds the number of simultaneously present edges and ``dcap``
    the maximum degree; both are promises checked on every insert.
    """

    name = "delta1"
    explicit = True
    fully_dynamic = True

    def __init__(self, n: int, mcap: int, dcap: int):
        if n < 1 or mcap < 1 or dcap < 1:
            raise ValueError("n, mcap and dcap must be positive")
        self.n = n
        self.mcap = mcap
        self.dcap = dcap
        self.palette = dcap + 1
        self.threshold = math.isqrt(2 * mcap - 1) + 1  # ceil(sqrt(2 * mcap))
        self.g = DynGraph(n)
        self.color = [1] * n
        self.count = [[0] * (self.palette + 1) for _ in range(n)]
        self.used = [0] * n  # bit c set iff some neighbour wears c (high vertices only)
        self.high = LinkedSet(n)
        self._all_colors = ((1 << (self.palette + 1)) - 1) & ~1
        self._mark = [0] * (self.palette + 2)
        self._stamp = 0
        self.metrics = Metrics()
        self._tally = ColorTally(n, self.palette, self.metrics)
        self.work = 0
        self.last_work = 0
        self.max_work = 0

    @property
    def steps(self) -> int:
        return self.work

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    # -- queries -----------------------------------------------------------

    def get_color(self, v: int) -> int:
        self._check(v)
        self.metrics.queries += 1
        return self.color[v]

    def colors(self) -> list[int]:
        return list(self.color)

    def free_colors(self, v: int) -> set[int]:
        mask = self._all_colors & ~self.used[v]
        return {c for c in range(1, self.palette + 1) if mask >> c & 1}

    def used_colors(self, v: int) -> set[int]:
        return {c for c in range(1, self.palette + 1) if self.used[v] >> c & 1}

    # -- bookkeeping -------------------------------------------------------

    def _inc(self, x: int, c: int) -> None:
        row = self.count[x]
        row[c] += 1
        if row[c] == 1:
            self.used[x] |= 1 << c

    def _dec(self, x: int, c: int) -> None:
        row = self.count[x]
        row[c] -= 1
        if row[c] == 0:
            self.used[x] &= ~(1 << c)

    def _count_in(self, x: int, y: int) -> None:
        d = self.g.degree[x]
        if d == self.threshold:
            self.high.add(x)
            color = self.color
            for z in self.g.neighbor_set(x):
                self._inc(x, color[z])
            self.last_work += d
        elif d > self.threshold:
            self._inc(x, self.color[y])
            self.last_work += 1

    def _count_out(self, x: int, y: int) -> None:
        d = self.g.degree[x]
        if d == self.threshold - 1:
            self.high.remove(x)
            row = self.count[x]
            mask = self.used[x]
            while mask:
                c = _lowest_bit(mask)
                row[c] = 0
                mask &= mask - 1
                self.last_work += 1
            self.used[x] = 0
        elif d >= self.threshold:
            self._dec(x, self.color[y])
            self.last_work += 1

    def _finish(self) -> None:
        self.work += self.last_work
        if self.last_work > self.max_work:
            self.max_work = self.last_work

    # -- updates -----------------------------------------------------------

    def insert(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        g = self.g
        if u == v:
            raise SelfLoop(u)
        if g.has_edge(u, v):
            raise EdgeExists((u, v))
        if g.m + 1 > self.mcap:
            raise CapacityExceeded(f"edge count would exceed mcap={self.mcap}")
        if g.degree[u] + 1 > self.dcap or g.degree[v] + 1 > self.dcap:
            raise CapacityExceeded(f"degree would exceed dcap={self.dcap}")
        self.metrics.updates += 1
        self.last_work = 1
        g.add_edge(u, v)
        # both endpoints count the new edge before any recoloring, so the
        # conflicting color is already marked used at v
        self._count_in(u, v)
        self._count_in(v, u)
        if self.color[u] == self.color[v]:
            self.recolor(v)
        self._finish()

    def recolor(self, v: int) -> None:
        """Give ``v`` a color no neighbour wears and notify its high neighbours."""
        old = self.color[v]
        if v in self.high:
            free = self._all_colors & ~self.used[v]
            if not free:
                raise PaletteExhausted(v)
            c = _lowest_bit(free)
            self.last_work += 1
        else:
            self._stamp += 1
            stamp = self._stamp
            mark = self._mark
            color = self.color
            for z in self.g.neighbor_set(v):
                mark[color[z]] = stamp
            self.last_work += self.g.degree[v]
            c = 1
            while mark[c] == stamp:
                c += 1
            if c > self.palette:
                raise PaletteExhausted(v)
        self.color[v] = c
        self._tally.move(old, c)
        self.metrics.recolorings += 1
        nbrs = self.g.neighbor_set(v)
        for w in self.high:
            if w in nbrs:
                self._dec(w, old)
                self._inc(w, c)
        self.last_work += len(self.high)

    def delete(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v or not self.g.has_edge(u, v):
            raise EdgeMissing((u, v))
        self.metrics.updates += 1
        self.last_work = 1
        self.g.remove_edge(u, v)
        self._count_out(u, v)
        self._count_out(v, u)
        self._finish()

    # -- diagnostics -------------------------------------------------------

    def audit(self) -> None:
        """Recount every high vertex's tables from scratch and compare."""
        g = self.g
        t = self.threshold
        highs = set(self.high)
        assert len(highs) <= math.sqrt(2 * self.mcap) + 1e-9
        for v in range(self.n):
            assert (v in highs) == (g.degree[v] >= t), v
            row = self.count[v]
            if v in highs:
                want = [0] * (self.palette + 1)
                for z in g.neighbor_set(v):
                    want[self.color[z]] += 1
                assert row == want, v
                used = 0
                for c in range(1, self.palette + 1):
                    if want[c]:
                        used |= 1 << c
                assert self.used[v] == used, v
            else:
                assert not any(row), v
                assert self.used[v] == 0, v
