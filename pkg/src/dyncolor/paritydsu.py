"""Union-find whose nodes remember which side of a bipartition they are on.

``flag[x]`` is True iff ``x`` and its parent lie on the same side.  Path
compression rewrites each flag as XNOR of the old flag and the parent's
(already compressed) flag, so after :meth:`ParityDsu.find` every node on the
path points at the root and its flag is its side relative to the root.
"""

from __future__ import annotations

from .errors import AlreadyPresent, NotARoot, NotPresent, SameRoot

_ABSENT = -1


class ParityDsu:
    def __init__(self, n: int):
        self.n = n
        self.parent = [_ABSENT] * n
        self.flag = [True] * n
        self.size = [0] * n
        self.steps = 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and self.parent[x] != _ABSENT

    def makeset(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise NotPresent(x)
        if self.parent[x] != _ABSENT:
            raise AlreadyPresent(x)
        self.parent[x] = x
        self.flag[x] = True
        self.size[x] = 1

    def find(self, x: int) -> tuple[int, bool]:
        """Return ``(root, same_side_as_root)`` for ``x``, compressing its path."""
        parent = self.parent
        if x not in self:
            raise NotPresent(x)
        chain = []
        y = x
        while parent[y] != y:
            chain.append(y)
            y = parent[y]
        root = y
        if not chain:
            return root, True
        self.steps += len(chain)
        flag = self.flag
        # root-to-leaf so every parent flag is already relative to the root
        for node in reversed(chain):
            p = parent[node]
            if p != root:
                flag[node] = flag[p] == flag[node]
                parent[node] = root
        return root, flag[x]

    def is_root(self, x: int) -> bool:
        return x in self and self.parent[x] == x

    def union_link(self, x_root: int, y_root: int, y_flag: bool) -> int:
        """Attach the smaller of two roots below the larger.

        ``y_flag`` is the relative parity of the two roots (True when they
        lie on the same side); it is symmetric, so swapping is safe.
        Returns the surviving root.
        """
        for r in (x_root, y_root):
            if not self.is_root(r):
                raise NotARoot(r)
        if x_root == y_root:
            raise SameRoot(x_root)
        size = self.size
        if size[x_root] < size[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        size[x_root] += size[y_root]
        self.flag[y_root] = y_flag
        self.steps += 1
        return x_root
