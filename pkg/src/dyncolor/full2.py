"""Fully dynamic implicit 2-coloring of bipartite graphs.

The color of a vertex is the stored color of its tree root, negated when
its depth in the spanning forest is odd.  Connectivity (and replacement
edges on deletion) comes from :class:`HdtConnectivity`; depths come from a
link-cut copy of the top-level spanning forest.  Only a split writes a
stored color, so an update recolors at most one vertex.
"""

from __future__ import annotations

from .errors import AuxVertexInUse, EdgeExists, EdgeMissing, SelfLoop, VertexOutOfRange
from .graph import InsertOutcome, Metrics
from .hdt import HdtConnectivity
from .linkcut import LcForest

ADDED = InsertOutcome.ADDED
REJECTED = InsertOutcome.REJECTED


class Full2Coloring:
    """Implicit 2-coloring of a bipartite graph on vertices ``0..n-1``.

    Two extra auxiliary vertices (``n`` and ``n + 1``) are allocated for
    :meth:`connected_via_coloring` and are not addressable by callers.
    """

    name = "full2"
    explicit = False
    fully_dynamic = True

    def __init__(self, n: int):
        self.n = n
        self.aux = (n, n + 1)
        total = n + 2
        self.hdt = HdtConnectivity(total)
        self.forest = LcForest(total)
        self._stored = [True] * total
        self.metrics = Metrics()

    @property
    def steps(self) -> int:
        return self.hdt.steps + self.forest.steps

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    def _color(self, v: int) -> bool:
        r = self.forest.find_root(v)
        if self.forest.path_length(v) & 1:
            return not self._stored[r]
        return self._stored[r]

    def _write(self, v: int, color: bool) -> None:
        if self._stored[v] != color:
            self._stored[v] = color
            self.metrics.recolorings += 1

    # -- queries -----------------------------------------------------------

    def get_color(self, v: int) -> bool:
        self._check(v)
        self.metrics.queries += 1
        return self._color(v)

    def peek(self, v: int) -> bool:
        """Like :meth:`get_color` but not counted as a query."""
        self._check(v)
        return self._color(v)

    def colors(self) -> list[bool]:
        """Observable colors of all real vertices (not counted as queries)."""
        return [self._color(v) for v in range(self.n)]

    def forest_edges(self) -> set[tuple[int, int]]:
        out = set()
        for v in range(self.n + 2):
            p = self.forest.parent(v)
            if p is not None:
                out.add((min(v, p), max(v, p)))
        return out

    # -- updates -----------------------------------------------------------

    def insert(self, u: int, v: int) -> InsertOutcome:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(u)
        if self.hdt.has_edge(u, v):
            raise EdgeExists((u, v))
        self.metrics.updates += 1
        return self._insert(u, v)

    def _insert(self, u: int, v: int) -> InsertOutcome:
        cu = self._color(u)
        cv = self._color(v)
        if self.hdt.connected(u, v):
            if cu == cv:
                self.metrics.rejections += 1
                return REJECTED
            self.hdt.insert(u, v)
            return ADDED
        self.hdt.insert(u, v)
        # u's old root stops being a root, so its stored color needs no write
        self.forest.evert(u)
        self.forest.link(u, v)
        self.metrics.distinct_colors_max = 2
        return ADDED

    def delete(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v or not self.hdt.has_edge(u, v):
            raise EdgeMissing((u, v))
        self.metrics.updates += 1
        self._delete(u, v)

    def _delete(self, u: int, v: int) -> None:
        child = None
        if self.hdt.is_tree_edge(u, v):
            child = u if self.forest.parent(u) == v else v
            child_color = self._color(child)
        outcome = self.hdt.delete(u, v)
        if outcome.kind == "nontree":
            return
        self.forest.cut(child)
        if outcome.kind == "replaced":
            x, y = outcome.edge
            # re-hang the detached side so the surviving root stays authoritative
            if self.forest.find_root(x) != child:
                x, y = y, x
            self.forest.evert(x)
            self.forest.link(x, y)
        else:
            self._write(child, child_color)

    # -- connectivity through the coloring interface -----------------------

    def connected_via_coloring(self, u: int, v: int) -> bool:
        """Decide connectivity of ``u`` and ``v`` with color probes and
        tentative edges to the two auxiliary vertices.

        Every auxiliary edge is removed again, and any component flipped by
        the probe is flipped back, so the real graph and its colors are left
        exactly as found.
        """
        self._check(u)
        self._check(v)
        a, b = self.aux
        if self.hdt.component_size(a) != 1 or self.hdt.component_size(b) != 1:
            raise AuxVertexInUse(self.aux)
        self.metrics.queries += 1
        cu = self._color(u)
        cv = self._color(v)
        added = []

        def probe(x: int, y: int) -> bool:
            if self._insert(x, y) is REJECTED:
                return True
            added.append((x, y))
            return False

        if cu == cv:
            probe(a, u)
            probe(b, v)
            answer = probe(a, b)
        else:
            probe(a, u)
            answer = probe(a, v)
        for x, y in reversed(added):
            self._delete(x, y)
        for w, c in ((u, cu), (v, cv)):
            if self._color(w) != c:
                self._flip_component(w)
        return answer

    def _flip_component(self, w: int) -> None:
        a, b = self.aux
        cw = self._color(w)
        if self._color(a) == cw:
            x = a
        elif self._color(b) == cw:
            x = b
        else:
            # a and b share the other color: one probe edge flips a
            self._insert(a, b)
            self._delete(a, b)
            x = a
        self._insert(w, x)
        self._delete(w, x)
