"""Incremental explicit coloring of bipartite graphs with ``1 + 2*ceil(log2 n)``
colors and at most one recoloring per insert.

Each union-find root keeps two status words: ``w1`` for its own side of the
bipartition and ``w2`` for the opposite side.  Color ``c`` occupies bit
``W - c``, and a set bit means "no vertex on that side wears ``c``", so the
least color unused on the far side is the leading-zero count of ``w2`` + 1.
"""

from __future__ import annotations

from .errors import AlreadyPresent, NotPresent, PaletteExhausted, SelfLoop
from .graph import ColorTally, InsertOutcome, Metrics
from .paritydsu import ParityDsu


def palette_width(n: int) -> int:
    return 1 + 2 * max(0, (n - 1).bit_length())


def color_bit(color: int, width: int) -> int:
    return 1 << (width - color)


def select_free_color(word: int, width: int) -> int:
    """Least color whose bit is set in ``word`` (leading zeros + 1)."""
    word &= (1 << width) - 1
    if not word:
        raise PaletteExhausted(width)
    return width - word.bit_length() + 1


class LogColoring:
    name = "inclog"
    explicit = True
    fully_dynamic = False

    def __init__(self, n: int):
        self.n = n
        self.width = palette_width(n)
        self.dsu = ParityDsu(n)
        self.color = [0] * n
        self.w1 = [0] * n
        self.w2 = [0] * n
        self.metrics = Metrics()
        self._tally = ColorTally(n, self.width, self.metrics)
        for x in range(n):
            self.makeset_explicit(x)

    @property
    def steps(self) -> int:
        return self.dsu.steps

    def makeset_explicit(self, x: int) -> None:
        if x in self.dsu:
            raise AlreadyPresent(x)
        self.dsu.makeset(x)
        full = (1 << self.width) - 1
        self.color[x] = 1
        self.w1[x] = full & ~color_bit(1, self.width)
        self.w2[x] = full

    def get_color(self, v: int) -> int:
        if v not in self.dsu:
            raise NotPresent(v)
        self.metrics.queries += 1
        return self.color[v]

    def colors(self) -> list[int]:
        return list(self.color)

    def insert(self, x: int, y: int) -> InsertOutcome:
        if x == y:
            raise SelfLoop(x)
        dsu = self.dsu
        x_root, x_flag = dsu.find(x)
        y_root, y_flag = dsu.find(y)
        m = self.metrics
        m.updates += 1
        if x_root == y_root:
            if x_flag == y_flag:
                m.rejections += 1
                return InsertOutcome.REJECTED
            # the two parts of a component may share a color (e.g. closing a
            # 4-cycle), so an edge inside one component can still conflict
            if self.color[x] == self.color[y]:
                self._recolor_p1(x if x_flag else y, x_root)
            return InsertOutcome.ADDED
        same_side = x_flag != y_flag
        root = dsu.union_link(x_root, y_root, same_side)
        other = y_root if root == x_root else x_root
        w1, w2 = self.w1, self.w2
        if same_side:
            w1[root] &= w1[other]
            w2[root] &= w2[other]
        else:
            w1[root], w2[root] = w1[root] & w2[other], w2[root] & w1[other]
        if self.color[x] == self.color[y]:
            # x's cached flag is relative to its old root; ask again
            _, x_side = dsu.find(x)
            self._recolor_p1(x if x_side else y, root)
        return InsertOutcome.ADDED

    def _recolor_p1(self, target: int, root: int) -> None:
        """Give ``target`` (in the root's part) the least color unused in the
        opposite part."""
        c = select_free_color(self.w2[root], self.width)
        self._tally.move(self.color[target], c)
        self.color[target] = c
        self.w1[root] &= ~color_bit(c, self.width)
        self.metrics.recolorings += 1
