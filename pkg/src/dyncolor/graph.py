"""Dynamic adjacency storage and per-run accounting shared by all engines."""

from __future__ import annotations

import enum
from dataclasses import dataclass, asdict
from typing import Iterator

from .errors import EdgeExists, EdgeMissing, SelfLoop, VertexOutOfRange

_ABSENT = -1


class LinkedSet:
    """Doubly linked list over the fixed universe ``[0, capacity)``.

    Element ``i`` lives in slot ``i`` of the ``nxt``/``prv`` arrays, so the
    slot doubles as the locator: membership, insertion and unlinking are all
    constant time and never scan the list.  Slot ``capacity`` is the sentinel.
    """

    __slots__ = ("nxt", "prv", "size", "_head")

    def __init__(self, capacity: int):
        self._head = capacity
        self.nxt = [_ABSENT] * (capacity + 1)
        self.prv = [_ABSENT] * (capacity + 1)
        self.nxt[capacity] = capacity
        self.prv[capacity] = capacity
        self.size = 0

    def __contains__(self, i: int) -> bool:
        return self.prv[i] != _ABSENT

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        nxt = self.nxt
        head = self._head
        i = nxt[head]
        while i != head:
            j = nxt[i]  # tolerate removal of i while iterating
            yield i
            i = j

    def add(self, i: int) -> None:
        """Insert ``i`` at the front.  ``i`` must be absent."""
        head = self._head
        first = self.nxt[head]
        self.nxt[i] = first
        self.prv[i] = head
        self.prv[first] = i
        self.nxt[head] = i
        self.size += 1

    def remove(self, i: int) -> None:
        """Unlink ``i``.  ``i`` must be present."""
        p = self.prv[i]
        q = self.nxt[i]
        self.nxt[p] = q
        self.prv[q] = p
        self.nxt[i] = _ABSENT
        self.prv[i] = _ABSENT
        self.size -= 1

    def first(self) -> int:
        """Front element, or -1 when empty."""
        i = self.nxt[self._head]
        return _ABSENT if i == self._head else i


class DynGraph:
    """Simple undirected graph on a fixed vertex set ``0..n-1``.

    ``N(v)`` is a :class:`LinkedSet` over neighbour ids; its slot array plays
    the role of the per-vertex locator table, which makes the memory
    footprint quadratic in ``n`` on purpose.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self._nbrs = [LinkedSet(n) for _ in range(n)]
        self.degree = [0] * n
        self.m = 0

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbrs[u]

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(u)
        if v in self._nbrs[u]:
            raise EdgeExists((u, v))
        self._nbrs[u].add(v)
        self._nbrs[v].add(u)
        self.degree[u] += 1
        self.degree[v] += 1
        self.m += 1

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v or v not in self._nbrs[u]:
            raise EdgeMissing((u, v))
        self._nbrs[u].remove(v)
        self._nbrs[v].remove(u)
        self.degree[u] -= 1
        self.degree[v] -= 1
        self.m -= 1

    def neighbors(self, v: int) -> Iterator[int]:
        self._check(v)
        return iter(self._nbrs[v])

    def neighbor_set(self, v: int) -> LinkedSet:
        """The live neighbour list of ``v`` (shared, do not mutate)."""
        return self._nbrs[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._nbrs[u]:
                if u < v:
                    yield u, v


class InsertOutcome(enum.Enum):
    """Whether a bipartite engine accepted an edge or refused an odd cycle."""

    ADDED = "added"
    REJECTED = "rejected"


@dataclass
class Metrics:
    """Monotone counters kept by every engine over one run."""

    updates: int = 0
    queries: int = 0
    recolorings: int = 0
    distinct_colors_max: int = 1
    rejections: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


class ColorTally:
    """Number of vertices wearing each color, for the distinct-color metric."""

    def __init__(self, n: int, palette: int, metrics: Metrics, initial: int = 1):
        self.count = [0] * (palette + 2)
        self.count[initial] = n
        self.distinct = 1
        self.metrics = metrics

    def move(self, old: int, new: int) -> None:
        count = self.count
        count[old] -= 1
        if count[old] == 0:
            self.distinct -= 1
        if count[new] == 0:
            self.distinct += 1
        count[new] += 1
        if self.distinct > self.metrics.distinct_colors_max:
            self.metrics.distinct_colors_max = self.distinct
