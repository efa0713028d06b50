"""Incremental implicit 2-coloring on a parity union-find.

No color is stored anywhere: a root is TRUE by convention and every other
vertex's color is its side relative to the root.  Merging two components
whose endpoints agree flips the attached component through one flag write.
"""

from __future__ import annotations

import numpy as np

from .errors import SelfLoop
from .graph import InsertOutcome, Metrics
from .paritydsu import ParityDsu


class Implicit2Coloring:
    name = "incimp2"
    explicit = False
    fully_dynamic = False

    def __init__(self, n: int):
        self.n = n
        self.dsu = ParityDsu(n)
        for v in range(n):
            self.dsu.makeset(v)
        self.metrics = Metrics()

    @property
    def steps(self) -> int:
        return self.dsu.steps

    def get_color(self, v: int) -> bool:
        _, side = self.dsu.find(v)
        self.metrics.queries += 1
        return side

    def peek(self, v: int) -> bool:
        """Like :meth:`get_color` but not counted as a query."""
        return self.dsu.find(v)[1]

    def colors(self) -> list[bool]:
        """All colors at once by pointer jumping over the parent array;
        leaves the union-find untouched."""
        par = np.asarray(self.dsu.parent, dtype=np.int64)
        same = np.asarray(self.dsu.flag, dtype=bool)
        while True:
            up = par[par]
            if np.array_equal(up, par):
                return same.tolist()
            same = same == same[par]
            par = up

    def insert(self, x: int, y: int) -> InsertOutcome:
        if x == y:
            raise SelfLoop(x)
        x_root, x_color = self.dsu.find(x)
        y_root, y_color = self.dsu.find(y)
        m = self.metrics
        m.updates += 1
        if x_root == y_root:
            if x_color == y_color:
                m.rejections += 1
                return InsertOutcome.REJECTED
            return InsertOutcome.ADDED
        relative = x_color != y_color
        self.dsu.union_link(x_root, y_root, relative)
        if not relative:
            # the attached root's composed color changed from TRUE to FALSE
            m.recolorings += 1
        m.distinct_colors_max = 2
        return InsertOutcome.ADDED
