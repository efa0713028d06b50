"""Deterministic trace generators, plus the adaptive adversary against the
smaller-side explicit 2-coloring.

Specs are strings such as ``random-forest(8,7)`` or
``random-graph(n=64, mcap=32, dcap=6, churn=0.3, updates=5000)``; positional
and keyword arguments may be mixed as in a Python call.
"""

from __future__ import annotations

import random
import re

from ..explicit2 import Explicit2Coloring
from .trace import ColorQuery, Comment, Delete, Insert, Trace


class InvalidSpec(ValueError):
    pass


_SPEC = re.compile(r"^\s*([a-z][a-z0-9-]*)\s*\((.*)\)\s*$")


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_spec(spec: str) -> tuple[str, list, dict]:
    m = _SPEC.match(spec)
    if not m:
        raise InvalidSpec(f"cannot parse generator spec {spec!r}")
    name, body = m.group(1), m.group(2).strip()
    args, kwargs = [], {}
    if body:
        for part in body.split(","):
            part = part.strip()
            try:
                if "=" in part:
                    key, val = (s.strip() for s in part.split("=", 1))
                    kwargs[key] = _number(val)
                else:
                    if kwargs:
                        raise InvalidSpec("positional argument after keyword")
                    args.append(_number(part))
            except ValueError:
                raise InvalidSpec(f"bad argument {part!r} in {spec!r}") from None
    return name, args, kwargs


# -- edge bookkeeping shared by the churn generators --------------------------

class _LiveEdges:
    """Live edge set with uniform sampling and per-vertex degrees."""

    def __init__(self, n: int):
        self.degree = [0] * n
        self.items: list[tuple[int, int]] = []
        self.where: dict[tuple[int, int], int] = {}

    def __len__(self):
        return len(self.items)

    def __contains__(self, key):
        return key in self.where

    def add(self, key):
        self.where[key] = len(self.items)
        self.items.append(key)
        self.degree[key[0]] += 1
        self.degree[key[1]] += 1

    def remove(self, key):
        i = self.where.pop(key)
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.where[last] = i
        self.degree[key[0]] -= 1
        self.degree[key[1]] -= 1

    def sample(self, rng):
        return self.items[rng.randrange(len(self.items))]


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _check_n(n) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidSpec("n must be an integer >= 2")


# -- generators ---------------------------------------------------------------

def random_forest(n: int, m: int | None = None, *, rng) -> Trace:
    """``m`` inserts taken from a random recursive tree, in shuffled order."""
    _check_n(n)
    if m is None:
        m = n - 1
    if not 0 <= m <= n - 1:
        raise InvalidSpec("random-forest needs 0 <= m <= n - 1")
    label = list(range(n))
    rng.shuffle(label)
    edges = [(label[i], label[rng.randrange(i)]) for i in range(1, n)]
    rng.shuffle(edges)
    trace = Trace(n)
    trace.extend(Insert(u, v) for u, v in edges[:m])
    return trace


def random_graph(n: int, mcap: int, dcap: int, churn: float = 0.0,
                 updates: int | None = None, *, rng) -> Trace:
    """Uniform inserts under edge/degree caps; each step deletes a random live
    edge with probability ``churn``."""
    _check_n(n)
    if mcap < 1 or dcap < 1 or not 0 <= churn < 1:
        raise InvalidSpec("random-graph needs mcap, dcap >= 1 and 0 <= churn < 1")
    if updates is None:
        updates = 10 * n
    live = _LiveEdges(n)
    trace = Trace(n)
    for _ in range(updates):
        if churn == 0 and len(live) >= mcap:
            break  # insert-only traces stop at the cap instead of deleting
        if live and (rng.random() < churn or len(live) >= mcap):
            key = live.sample(rng)
            live.remove(key)
            trace.append(Delete(*key))
            continue
        for _attempt in range(32):
            u, v = rng.sample(range(n), 2)
            key = _key(u, v)
            if key in live or live.degree[u] >= dcap or live.degree[v] >= dcap:
                continue
            live.add(key)
            trace.append(Insert(u, v))
            break
        else:
            # dense graph: fall back to an exact scan of admissible pairs
            deg = live.degree
            free = [(u, v) for u in range(n) if deg[u] < dcap
                    for v in range(u + 1, n) if deg[v] < dcap and (u, v) not in live]
            if free:
                u, v = free[rng.randrange(len(free))]
                live.add((u, v))
                trace.append(Insert(u, v))
            elif live and churn > 0:
                key = live.sample(rng)
                live.remove(key)
                trace.append(Delete(*key))
            else:
                break
    return trace


def bounded_arboricity(n: int, gamma: int, churn: float = 0.0,
                       updates: int | None = None, *, rng) -> Trace:
    """Union of ``gamma`` forests under churn.

    Every forest stores at most one parent per vertex, always of lower rank in
    a fixed random order, so each forest stays acyclic and the live graph is
    covered by ``gamma`` forests at every moment.
    """
    _check_n(n)
    if gamma < 1 or not 0 <= churn < 1:
        raise InvalidSpec("bounded-arboricity needs gamma >= 1 and 0 <= churn < 1")
    if updates is None:
        updates = 10 * n
    order = list(range(n))
    rng.shuffle(order)  # order[r] is the vertex of rank r
    rank = [0] * n
    for r, v in enumerate(order):
        rank[v] = r
    parent = [[-1] * n for _ in range(gamma)]
    owner: dict[tuple[int, int], tuple[int, int]] = {}  # edge -> (forest, child)
    live = _LiveEdges(n)
    trace = Trace(n)
    for _ in range(updates):
        if live and rng.random() < churn:
            key = live.sample(rng)
            j, child = owner.pop(key)
            parent[j][child] = -1
            live.remove(key)
            trace.append(Delete(*key))
            continue
        for _attempt in range(32):
            j = rng.randrange(gamma)
            child = order[rng.randrange(1, n)]
            if parent[j][child] != -1:
                continue
            p = order[rng.randrange(rank[child])]
            key = _key(child, p)
            if key in live:
                continue
            parent[j][child] = p
            owner[key] = (j, child)
            live.add(key)
            trace.append(Insert(child, p))
            break
        else:
            if churn == 0:
                break  # saturated; insert-only traces never delete
            if live:
                key = live.sample(rng)
                j, child = owner.pop(key)
                parent[j][child] = -1
                live.remove(key)
                trace.append(Delete(*key))
    return trace


def _is_power_of_two(n) -> bool:
    return isinstance(n, int) and n >= 1 and n & (n - 1) == 0


def balanced_paths(n: int, *, rng=None) -> Trace:
    """Pairwise merging of equal-length paths, end to start, until one path
    of ``n`` vertices remains (``n - 1`` inserts)."""
    if not _is_power_of_two(n) or n < 2:
        raise InvalidSpec("balanced-paths needs n a power of two >= 2")
    paths = [[v] for v in range(n)]
    trace = Trace(n)
    while len(paths) > 1:
        merged = []
        for a, b in zip(paths[0::2], paths[1::2]):
            trace.append(Insert(a[-1], b[0]))
            merged.append(a + b)
        paths = merged
    return trace


GENERATORS = {
    "random-forest": random_forest,
    "random-graph": random_graph,
    "bounded-arboricity": bounded_arboricity,
    "balanced-paths": balanced_paths,
}


def generate(spec: str, seed: int = 0) -> Trace:
    name, args, kwargs = parse_spec(spec)
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise InvalidSpec(f"unknown generator {name!r}; known: {sorted(GENERATORS)}") from None
    rng = random.Random(seed)
    try:
        return fn(*args, rng=rng, **kwargs)
    except TypeError as exc:
        raise InvalidSpec(f"{spec!r}: {exc}") from None


def spec_params(spec: str) -> dict:
    """Named parameters of a spec, positional ones included."""
    import inspect

    name, args, kwargs = parse_spec(spec)
    fn = GENERATORS.get(name)
    if fn is None:
        raise InvalidSpec(f"unknown generator {name!r}")
    params = [p for p in inspect.signature(fn).parameters if p != "rng"]
    out = dict(zip(params, args))
    out.update(kwargs)
    return out


# -- the adaptive adversary ---------------------------------------------------

def run_adversary_explicit2(n: int) -> tuple[int, Trace]:
    """Drive a live :class:`Explicit2Coloring` into its worst case.

    Paths are merged pairwise, always equal in length, through endpoints the
    engine currently colors alike; every merge forces the smaller side (half
    the new path) to flip.  Returns ``(total recolorings, trace)``.
    """
    if not _is_power_of_two(n) or n < 2:
        raise ValueError("n must be a power of two >= 2")
    engine = Explicit2Coloring(n)
    trace = Trace(n)
    paths = [[v] for v in range(n)]
    while len(paths) > 1:
        trace.append(Comment(f"# round: {len(paths)} paths of {len(paths[0])}"))
        merged = []
        for a, b in zip(paths[0::2], paths[1::2]):
            x = a[-1]
            cx = engine.get_color(x)
            trace.append(ColorQuery(x))
            for y in (b[0], b[-1]):
                trace.append(ColorQuery(y))
                if engine.get_color(y) == cx:
                    break
            else:
                raise AssertionError("path endpoints expose both colors")
            before = engine.metrics.recolorings
            engine.insert(x, y)
            trace.append(Insert(x, y))
            assert engine.metrics.recolorings - before == len(a)
            if y == b[-1]:
                b = b[::-1]
            merged.append(a + b)
        paths = merged
    return engine.metrics.recolorings, trace
