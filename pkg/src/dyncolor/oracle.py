"""Brute-force reference answers computed from scratch on graph snapshots.

Nothing here shares state with the engines; every function rebuilds what
it needs from a :class:`Snapshot` (or an :class:`OracleGraph` mirror that a
test maintains alongside an engine).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Snapshot:
    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: list = field(default=None, compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Snapshot":
        norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
        for u, v in norm:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError((u, v))
        return cls(n, tuple(norm))

    @property
    def adj(self) -> list[set[int]]:
        if self._adj is None:
            adj = [set() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj", adj)
        return self._adj


@dataclass
class Bipartition:
    """Either per-vertex sides (0/1) or an odd cycle witness."""

    sides: list[int] | None
    odd_cycle: list[int] | None

    @property
    def is_bipartite(self) -> bool:
        return self.sides is not None


def _bfs(adj, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if y not in dist:
                dist[y] = dx
                queue.append(y)
    return dist


def bfs_bipartition(s: Snapshot) -> Bipartition:
    adj = s.adj
    side = [-1] * s.n
    parent = [-1] * s.n
    for r in range(s.n):
        if side[r] != -1:
            continue
        side[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return Bipartition(None, _cycle_through(parent, x, y))
    return Bipartition(side, None)


def _cycle_through(parent: list[int], x: int, y: int) -> list[int]:
    up_x = [x]
    while parent[up_x[-1]] != -1:
        up_x.append(parent[up_x[-1]])
    seen = {v: i for i, v in enumerate(up_x)}
    up_y = [y]
    while up_y[-1] not in seen:
        up_y.append(parent[up_y[-1]])
    lca = up_y[-1]
    return up_x[: seen[lca] + 1] + up_y[-2::-1]


def connected_bfs(s: Snapshot, u: int, v: int) -> bool:
    return u == v or v in _bfs(s.adj, u)


def proper_check(s: Snapshot, colors: Sequence) -> bool:
    if not s.edges:
        return True
    c = np.asarray(colors)
    e = np.asarray(s.edges)
    return not np.any(c[e[:, 0]] == c[e[:, 1]])


def component_sizes(s: Snapshot) -> list[int]:
    sizes = [0] * s.n
    for r in range(s.n):
        if sizes[r]:
            continue
        comp = _bfs(s.adj, r)
        for x in comp:
            sizes[x] = len(comp)
    return sizes


def closes_odd_cycle(adj, u: int, v: int) -> bool:
    """Would adding ``(u, v)`` to a bipartite graph make it non-bipartite?"""
    dist = _bfs(adj, u)
    return v in dist and dist[v] % 2 == 0


def is_forest(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = root(u), root(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def max_density_exact(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Nash-Williams arboricity ``max ceil(|E(U)| / (|U| - 1))`` by subset
    enumeration; exponential, intended for ``n <= 16``."""
    if n > 20:
        raise ValueError("exact density check is exponential in n")
    masks = [(1 << u) | (1 << v) for u, v in edges]
    best = 0
    for sub in range(1, 1 << n):
        k = bin(sub).count("1")
        if k < 2:
            continue
        inside = sum(1 for m in masks if m & sub == m)
        best = max(best, -(-inside // (k - 1)))
    return best


def max_density_sampled(n: int, edges: Sequence[tuple[int, int]], rng, samples: int = 200) -> int:
    """Lower bound on arboricity from connected vertex sets grown at random."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 0
    for _ in range(samples):
        start = rng.randrange(n)
        chosen = {start}
        frontier = list(adj[start])
        limit = rng.randrange(2, n + 1)
        while frontier and len(chosen) < limit:
            x = frontier.pop(rng.randrange(len(frontier)))
            if x in chosen:
                continue
            chosen.add(x)
            frontier.extend(y for y in adj[x] if y not in chosen)
        if len(chosen) < 2:
            continue
        inside = sum(1 for x in chosen for y in adj[x] if y in chosen) // 2
        best = max(best, -(-inside // (len(chosen) - 1)))
    return best


class OracleGraph:
    """Mutable adjacency-set mirror of an engine's edge set.

    Edges are also kept in two numpy columns (swap-remove on delete) so a
    whole-graph properness check is one vectorized comparison.
    """

    def __init__(self, n: int):
        self.n = n
        self.adj = [set() for _ in range(n)]
        self._where: dict[tuple[int, int], int] = {}
        self._eu = np.zeros(16, dtype=np.int64)
        self._ev = np.zeros(16, dtype=np.int64)
        self._m = 0

    def __contains__(self, e) -> bool:
        u, v = e
        return (min(u, v), max(u, v)) in self._where

    def __len__(self) -> int:
        return self._m

    def add(self, u: int, v: int) -> None:
        key = (min(u, v), max(u, v))
        if self._m == len(self._eu):
            self._eu = np.concatenate([self._eu, np.zeros_like(self._eu)])
            self._ev = np.concatenate([self._ev, np.zeros_like(self._ev)])
        i = self._m
        self._eu[i], self._ev[i] = key
        self._where[key] = i
        self._m += 1
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove(self, u: int, v: int) -> None:
        key = (min(u, v), max(u, v))
        i = self._where.pop(key)
        last = self._m - 1
        if i < last:
            moved = (int(self._eu[last]), int(self._ev[last]))
            self._eu[i], self._ev[i] = moved
            self._where[moved] = i
        self._m = last
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self._eu[: self._m].tolist(), self._ev[: self._m].tolist()))

    def snapshot(self) -> Snapshot:
        return Snapshot(self.n, tuple(sorted(self.edges())))

    def component(self, v: int) -> set[int]:
        return set(_bfs(self.adj, v))

    def connected(self, u: int, v: int) -> bool:
        return u == v or v in _bfs(self.adj, u)

    def closes_odd_cycle(self, u: int, v: int) -> bool:
        return closes_odd_cycle(self.adj, u, v)

    def violations(self, colors: Sequence) -> list[tuple[int, int]]:
        if not self._m:
            return []
        c = np.asarray(colors)
        eu, ev = self._eu[: self._m], self._ev[: self._m]
        bad = np.nonzero(c[eu] == c[ev])[0]
        return [(int(eu[i]), int(ev[i])) for i in bad]

    def component_violations(self, vertices: Iterable[int], color_of) -> list[tuple[int, int]]:
        """Monochrome edges inside ``vertices`` using a per-vertex color lookup."""
        vertices = set(vertices)
        colors = {x: color_of(x) for x in vertices}
        bad = []
        for x in vertices:
            cx = colors[x]
            for y in self.adj[x]:
                if x < y and y in colors and colors[y] == cx:
                    bad.append((x, y))
        return bad


class GrowingBipartition:
    """BFS sides of an insert-only bipartite graph, recomputed per merge.

    An edge inside one component never changes the sides, so only an edge
    joining two components triggers a BFS over the merged component.
    """

    def __init__(self, n: int):
        self.adj = [set() for _ in range(n)]
        self.comp = list(range(n))
        self.side = [0] * n

    def closes_odd_cycle(self, u: int, v: int) -> bool:
        return self.comp[u] == self.comp[v] and self.side[u] == self.side[v]

    def add(self, u: int, v: int) -> None:
        if self.closes_odd_cycle(u, v):
            raise ValueError("edge would make the graph non-bipartite")
        self.adj[u].add(v)
        self.adj[v].add(u)
        if self.comp[u] != self.comp[v]:
            dist = _bfs(self.adj, u)
            for x, d in dist.items():
                self.comp[x] = u
                self.side[x] = d & 1
