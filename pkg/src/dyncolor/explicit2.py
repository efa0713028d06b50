"""Incremental explicit 2-coloring that flips the smaller component.

Every vertex stores its current color.  When an edge joins two components
whose endpoints share a color, the smaller component is flipped wholesale;
a vertex is only ever flipped while on the smaller side of a merge, so it
flips at most ``log2 n`` times.
"""

from __future__ import annotations

from .errors import EdgeExists, SelfLoop, VertexOutOfRange
from .graph import InsertOutcome, Metrics


class Explicit2Coloring:
    name = "inc2"
    explicit = True
    fully_dynamic = False

    def __init__(self, n: int):
        self.n = n
        self.color = [True] * n
        self.comp = list(range(n))
        self.members: list[list[int] | None] = [[v] for v in range(n)]
        self.flips = [0] * n
        self._edges: set[tuple[int, int]] = set()
        self.metrics = Metrics()
        self.steps = 0

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    def get_color(self, v: int) -> bool:
        self._check(v)
        self.metrics.queries += 1
        return self.color[v]

    def colors(self) -> list[bool]:
        return list(self.color)

    def component_size(self, v: int) -> int:
        return len(self.members[self.comp[v]])

    def insert(self, u: int, v: int) -> InsertOutcome:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(u)
        key = (u, v) if u < v else (v, u)
        if key in self._edges:
            raise EdgeExists(key)
        m = self.metrics
        m.updates += 1
        color = self.color
        cu, cv = self.comp[u], self.comp[v]
        if cu == cv:
            if color[u] == color[v]:
                m.rejections += 1
                return InsertOutcome.REJECTED
            self._edges.add(key)
            return InsertOutcome.ADDED
        big, small = cu, cv
        if len(self.members[cv]) > len(self.members[cu]):
            big, small = cv, cu
        moved = self.members[small]
        if color[u] == color[v]:
            flips = self.flips
            for x in moved:
                color[x] = not color[x]
                flips[x] += 1
            m.recolorings += len(moved)
        comp = self.comp
        for x in moved:
            comp[x] = big
        self.members[big].extend(moved)
        self.members[small] = None
        self.steps += len(moved)
        self._edges.add(key)
        m.distinct_colors_max = 2
        return InsertOutcome.ADDED
