"""Link-cut forest over splay trees with lazy reversal and subtree sizes.

Each vertex is one splay node.  A splay tree holds one preferred path ordered
by depth, so the size of the left subtree of an accessed node is its depth in
the represented tree.  Reversal flags implement :meth:`LcForest.evert`.
"""

from __future__ import annotations

from .errors import IsRoot, NotARoot, SameTree, VertexOutOfRange

NIL = -1


class LcForest:
    """Rooted dynamic forest on vertices ``0..n-1``, initially all singletons."""

    def __init__(self, n: int):
        self.n = n
        self._left = [NIL] * n
        self._right = [NIL] * n
        self._par = [NIL] * n
        self._rev = [False] * n
        self._size = [1] * n
        self.steps = 0  # rotations plus access hops, for amortized-cost checks

    # -- splay machinery ---------------------------------------------------

    def _is_aux_root(self, x: int) -> bool:
        p = self._par[x]
        return p == NIL or (self._left[p] != x and self._right[p] != x)

    def _push(self, x: int) -> None:
        if self._rev[x]:
            left, right, rev = self._left, self._right, self._rev
            a, b = left[x], right[x]
            left[x], right[x] = b, a
            if a != NIL:
                rev[a] = not rev[a]
            if b != NIL:
                rev[b] = not rev[b]
            rev[x] = False

    def _pull(self, x: int) -> None:
        size = self._size
        a, b = self._left[x], self._right[x]
        s = 1
        if a != NIL:
            s += size[a]
        if b != NIL:
            s += size[b]
        size[x] = s

    def _rotate(self, x: int) -> None:
        left, right, par = self._left, self._right, self._par
        p = par[x]
        g = par[p]
        if left[p] == x:
            b = right[x]
            left[p] = b
            right[x] = p
        else:
            b = left[x]
            right[p] = b
            left[x] = p
        if b != NIL:
            par[b] = p
        par[p] = x
        par[x] = g
        if g != NIL:
            if left[g] == p:
                left[g] = x
            elif right[g] == p:
                right[g] = x
        self._pull(p)
        self._pull(x)
        self.steps += 1

    def _splay(self, x: int) -> None:
        left, right, par = self._left, self._right, self._par
        # reversal flags must be pushed top-down before any rotation
        chain = [x]
        y = x
        while True:
            p = par[y]
            if p == NIL or (left[p] != y and right[p] != y):
                break
            y = p
            chain.append(y)
        for y in reversed(chain):
            self._push(y)
        while True:
            p = par[x]
            if p == NIL or (left[p] != x and right[p] != x):
                return
            g = par[p]
            if g != NIL and (left[g] == p or right[g] == p):
                if (left[g] == p) == (left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: int) -> None:
        right, par = self._right, self._par
        last = NIL
        y = x
        while y != NIL:
            self._splay(y)
            right[y] = last
            self._pull(y)
            last = y
            y = par[y]
            self.steps += 1
        self._splay(x)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    # -- public operations -------------------------------------------------

    def find_root(self, v: int) -> int:
        self._check(v)
        self._access(v)
        left = self._left
        x = v
        self._push(x)
        while left[x] != NIL:
            x = left[x]
            self._push(x)
            self.steps += 1
        self._splay(x)
        return x

    def path_length(self, v: int) -> int:
        """Number of edges between ``v`` and the root of its tree."""
        self._check(v)
        self._access(v)
        a = self._left[v]
        return self._size[a] if a != NIL else 0

    def evert(self, v: int) -> None:
        """Make ``v`` the root of its tree."""
        self._check(v)
        self._access(v)
        self._rev[v] = not self._rev[v]

    def link(self, u: int, v: int) -> None:
        """Hang the tree rooted at ``u`` below ``v``."""
        self._check(u)
        self._check(v)
        if self.find_root(u) != u:
            raise NotARoot(u)
        if self.find_root(v) == u:
            raise SameTree((u, v))
        self._access(u)
        self._par[u] = v

    def cut(self, v: int) -> None:
        """Remove the edge between ``v`` and its parent."""
        self._check(v)
        self._access(v)
        a = self._left[v]
        if a == NIL:
            raise IsRoot(v)
        self._par[a] = NIL
        self._left[v] = NIL
        self._pull(v)

    def parent(self, v: int) -> int | None:
        """Parent of ``v`` in the represented tree, or None at a root."""
        self._check(v)
        self._access(v)
        x = self._left[v]
        if x == NIL:
            return None
        right = self._right
        self._push(x)
        while right[x] != NIL:
            x = right[x]
            self._push(x)
        self._splay(x)
        return x

    def connected(self, u: int, v: int) -> bool:
        return self.find_root(u) == self.find_root(v)
