"""Euler-tour forests stored as splay-tree sequences.

A tree's tour holds one *loop* node per vertex and two *arc* nodes per tree
edge.  Every node carries a two-bit flag word; aggregates over a splay
subtree give the number of loop nodes (component size) and the OR of flags,
which is enough to locate a vertex that still has candidate edges.
"""

from __future__ import annotations

from typing import Iterator

TREE_FLAG = 1
NONTREE_FLAG = 2


class _Node:
    __slots__ = ("left", "right", "parent", "vertex", "is_loop",
                 "own", "agg", "loops", "count")

    def __init__(self, vertex: int, is_loop: bool):
        self.left = None
        self.right = None
        self.parent = None
        self.vertex = vertex
        self.is_loop = is_loop
        self.own = 0
        self.agg = 0
        self.loops = 1 if is_loop else 0
        self.count = 1


def _update(x: _Node) -> None:
    loops = 1 if x.is_loop else 0
    count = 1
    agg = x.own
    a = x.left
    if a is not None:
        loops += a.loops
        count += a.count
        agg |= a.agg
    b = x.right
    if b is not None:
        loops += b.loops
        count += b.count
        agg |= b.agg
    x.loops = loops
    x.count = count
    x.agg = agg


class EulerTourForest:
    """Dynamic forest on ``0..n-1`` answering connectivity and tree sizes."""

    def __init__(self, n: int):
        self.n = n
        self._loop: list[_Node | None] = [None] * n
        self._arcs: dict[tuple[int, int], _Node] = {}
        self.steps = 0

    # -- splay primitives --------------------------------------------------

    def _rotate(self, x: _Node) -> None:
        p = x.parent
        g = p.parent
        if p.left is x:
            b = x.right
            p.left = b
            x.right = p
        else:
            b = x.left
            p.right = b
            x.left = p
        if b is not None:
            b.parent = p
        p.parent = x
        x.parent = g
        if g is not None:
            if g.left is p:
                g.left = x
            else:
                g.right = x
        _update(p)
        _update(x)
        self.steps += 1

    def _splay(self, x: _Node) -> None:
        rotate = self._rotate
        while True:
            p = x.parent
            if p is None:
                return
            g = p.parent
            if g is not None:
                if (g.left is p) == (p.left is x):
                    rotate(p)
                else:
                    rotate(x)
            rotate(x)

    def _join(self, a: _Node | None, b: _Node | None) -> _Node | None:
        if a is None:
            return b
        if b is None:
            return a
        x = a
        while x.right is not None:
            x = x.right
        self._splay(x)
        x.right = b
        b.parent = x
        _update(x)
        return x

    def _reroot(self, x: _Node) -> _Node:
        """Rotate the tour so that it starts at ``x``; returns the new root."""
        self._splay(x)
        a = x.left
        if a is None:
            return x
        a.parent = None
        x.left = None
        _update(x)
        return self._join(x, a)

    def _node(self, v: int) -> _Node:
        x = self._loop[v]
        if x is None:
            x = self._loop[v] = _Node(v, True)
        return x

    def _position(self, x: _Node) -> int:
        self._splay(x)
        return x.left.count if x.left is not None else 0

    # -- queries -----------------------------------------------------------

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return True
        a = self._loop[u]
        b = self._loop[v]
        if a is None or b is None:
            return False
        self._splay(a)
        self._splay(b)
        return a.parent is not None

    def size(self, v: int) -> int:
        """Number of vertices in the tree containing ``v``."""
        x = self._loop[v]
        if x is None:
            return 1
        self._splay(x)
        return x.loops

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def vertices(self, v: int) -> Iterator[int]:
        """Vertices of the tree containing ``v`` in tour order."""
        x = self._loop[v]
        if x is None:
            yield v
            return
        self._splay(x)
        stack = []
        node = x
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            if node.is_loop:
                yield node.vertex
            node = node.right

    # -- flags -------------------------------------------------------------

    def set_flags(self, v: int, bits: int) -> None:
        x = self._loop[v]
        if x is None:
            if not bits:
                return
            x = self._node(v)
        if x.own == bits:
            return
        self._splay(x)
        x.own = bits
        _update(x)

    def flags(self, v: int) -> int:
        x = self._loop[v]
        return 0 if x is None else x.own

    def find_flagged(self, v: int, bit: int) -> int | None:
        """Some vertex in ``v``'s tree whose own flags include ``bit``."""
        x = self._loop[v]
        if x is None:
            return None
        self._splay(x)
        if not x.agg & bit:
            return None
        while True:
            self.steps += 1
            a = x.left
            if a is not None and a.agg & bit:
                x = a
            elif x.own & bit:
                break
            else:
                x = x.right
        self._splay(x)
        return x.vertex

    # -- structural updates ------------------------------------------------

    def link(self, u: int, v: int) -> None:
        """Join the trees of ``u`` and ``v`` with edge ``(u, v)``."""
        tu = self._reroot(self._node(u))
        tv = self._reroot(self._node(v))
        a_uv = _Node(u, False)
        a_vu = _Node(v, False)
        self._arcs[(u, v)] = a_uv
        self._arcs[(v, u)] = a_vu
        self._join(self._join(self._join(tu, a_uv), tv), a_vu)

    def cut(self, u: int, v: int) -> None:
        """Remove tree edge ``(u, v)``, splitting its tree in two."""
        a = self._arcs.pop((u, v))
        b = self._arcs.pop((v, u))
        if self._position(a) > self._position(b):
            a, b = b, a
        # tour is X a Y b Z; Y becomes one tree and X Z the other
        self._splay(a)
        x_part = a.left
        rest = a.right
        if x_part is not None:
            x_part.parent = None
        rest.parent = None
        a.left = a.right = None
        self._splay(b)
        y_part = b.left
        z_part = b.right
        if y_part is not None:
            y_part.parent = None
        if z_part is not None:
            z_part.parent = None
        b.left = b.right = None
        self._join(x_part, z_part)
