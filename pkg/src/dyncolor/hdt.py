"""Fully dynamic connectivity with leveled spanning forests.

Levels run from ``top = ceil(log2 n)`` down to 0.  ``F_i`` is a spanning
forest of the edges whose level is at most ``i``, so ``F_top`` spans the
whole graph.  Edges enter at ``top`` and only ever move down; a tree of
``F_i`` never holds more than ``n // 2**(top - i)`` vertices, which bounds
how often an edge can be pushed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EdgeExists, EdgeMissing, SelfLoop, VertexOutOfRange
from .ett import NONTREE_FLAG, TREE_FLAG, EulerTourForest


@dataclass(frozen=True)
class DeleteOutcome:
    """Result of :meth:`HdtConnectivity.delete`.

    ``kind`` is ``"nontree"``, ``"replaced"`` or ``"split"``; ``edge`` is the
    promoted replacement edge for ``"replaced"`` and None otherwise.
    """

    kind: str
    edge: tuple[int, int] | None = None

    @property
    def code(self):
        """Legacy return value: 0 for non-tree, the edge, or -1 on a split."""
        if self.kind == "nontree":
            return 0
        if self.kind == "split":
            return -1
        return self.edge


NON_TREE = DeleteOutcome("nontree")
SPLIT = DeleteOutcome("split")


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class HdtConnectivity:
    def __init__(self, n: int):
        self.n = n
        self.top = max(1, (n - 1).bit_length())
        self._forests = [EulerTourForest(n) for _ in range(self.top + 1)]
        self._level: dict[tuple[int, int], int] = {}
        self._is_tree: dict[tuple[int, int], bool] = {}
        self._tadj: list[dict[int, set[int]]] = [{} for _ in range(self.top + 1)]
        self._nadj: list[dict[int, set[int]]] = [{} for _ in range(self.top + 1)]
        self.pushes = 0

    @property
    def steps(self) -> int:
        return self.pushes + sum(f.steps for f in self._forests)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    def _refresh(self, i: int, x: int) -> None:
        bits = 0
        if self._tadj[i].get(x):
            bits |= TREE_FLAG
        if self._nadj[i].get(x):
            bits |= NONTREE_FLAG
        self._forests[i].set_flags(x, bits)

    def _attach(self, adj: list[dict[int, set[int]]], i: int, x: int, y: int) -> None:
        adj[i].setdefault(x, set()).add(y)
        adj[i].setdefault(y, set()).add(x)
        self._refresh(i, x)
        self._refresh(i, y)

    def _detach(self, adj: list[dict[int, set[int]]], i: int, x: int, y: int) -> None:
        adj[i][x].discard(y)
        adj[i][y].discard(x)
        self._refresh(i, x)
        self._refresh(i, y)

    # -- public API --------------------------------------------------------

    def connected(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return self._forests[self.top].connected(u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._level

    def is_tree_edge(self, u: int, v: int) -> bool:
        return self._is_tree[_key(u, v)]

    def level(self, u: int, v: int) -> int:
        return self._level[_key(u, v)]

    def component_size(self, v: int) -> int:
        self._check(v)
        return self._forests[self.top].size(v)

    def tree_edges(self) -> set[tuple[int, int]]:
        return {k for k, t in self._is_tree.items() if t}

    def insert(self, u: int, v: int) -> bool:
        """Add edge ``(u, v)``; returns True when it became a tree edge."""
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(u)
        key = _key(u, v)
        if key in self._level:
            raise EdgeExists(key)
        top = self.top
        self._level[key] = top
        if self._forests[top].connected(u, v):
            self._is_tree[key] = False
            self._attach(self._nadj, top, u, v)
            return False
        self._is_tree[key] = True
        self._forests[top].link(u, v)
        self._attach(self._tadj, top, u, v)
        return True

    def delete(self, u: int, v: int) -> DeleteOutcome:
        self._check(u)
        self._check(v)
        key = _key(u, v)
        if key not in self._level:
            raise EdgeMissing(key)
        lvl = self._level.pop(key)
        if not self._is_tree.pop(key):
            self._detach(self._nadj, lvl, u, v)
            return NON_TREE
        self._detach(self._tadj, lvl, u, v)
        for i in range(lvl, self.top + 1):
            self._forests[i].cut(u, v)
        for i in range(lvl, self.top + 1):
            found = self._search_level(i, u, v)
            if found is not None:
                return DeleteOutcome("replaced", found)
        return SPLIT

    def _search_level(self, i: int, u: int, v: int) -> tuple[int, int] | None:
        forest = self._forests[i]
        small = u if forest.size(u) <= forest.size(v) else v
        # the smaller side moves down one level, keeping F_{i-1} trees small
        while True:
            x = forest.find_flagged(small, TREE_FLAG)
            if x is None:
                break
            for y in list(self._tadj[i][x]):
                self._detach(self._tadj, i, x, y)
                self._level[_key(x, y)] = i - 1
                self._forests[i - 1].link(x, y)
                self._attach(self._tadj, i - 1, x, y)
                self.pushes += 1
        while True:
            x = forest.find_flagged(small, NONTREE_FLAG)
            if x is None:
                return None
            for y in list(self._nadj[i][x]):
                key = _key(x, y)
                self._detach(self._nadj, i, x, y)
                if not forest.connected(y, small):
                    self._is_tree[key] = True
                    self._attach(self._tadj, i, x, y)
                    for j in range(i, self.top + 1):
                        self._forests[j].link(x, y)
                    return (x, y)
                self._level[key] = i - 1
                self._attach(self._nadj, i - 1, x, y)
                self.pushes += 1

    # -- diagnostics -------------------------------------------------------

    def check_invariants(self) -> None:
        """Assert the level invariants; linear in the structure size."""
        top = self.top
        for key, lvl in self._level.items():
            x, y = key
            assert 0 <= lvl <= top, (key, lvl)
            if self._is_tree[key]:
                assert y in self._tadj[lvl].get(x, ()), key
                for j in range(top + 1):
                    assert self._forests[j].has_edge(x, y) == (j >= lvl), (key, j)
            else:
                assert y in self._nadj[lvl].get(x, ()), key
                assert self._forests[lvl].connected(x, y), key
        for i in range(top + 1):
            bound = self.n >> (top - i)
            forest = self._forests[i]
            seen = set()
            for v in range(self.n):
                if v in seen:
                    continue
                members = list(forest.vertices(v))
                seen.update(members)
                if len(members) > 1:
                    assert len(members) <= bound, (i, len(members), bound)
                assert forest.size(v) == len(members)
            for v in range(self.n):
                want = ((TREE_FLAG if self._tadj[i].get(v) else 0)
                        | (NONTREE_FLAG if self._nadj[i].get(v) else 0))
                assert forest.flags(v) == want, (i, v)
