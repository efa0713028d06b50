"""Replay a trace against one engine and summarize what happened."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from ..arboricity import ArbColoring
from ..delta1 import Delta1Coloring
from ..errors import EdgeMissing
from ..explicit2 import Explicit2Coloring
from ..full2 import Full2Coloring
from ..graph import InsertOutcome
from ..implicit2 import Implicit2Coloring
from ..inclog import LogColoring
from ..oracle import GrowingBipartition, OracleGraph
from .trace import Event, Trace

ENGINES = ("full2", "inc2", "inclog", "incimp2", "delta1", "arb")
BIPARTITE = ("full2", "inc2", "inclog", "incimp2")


class UnsupportedEvent(Exception):
    def __init__(self, engine: str, event: Event):
        super().__init__(f"engine {engine!r} does not support event '{event}'"
                         + (f" (line {event.line})" if event.line else ""))
        self.engine = engine
        self.event = event


class ContractViolation(Exception):
    """An engine broke its contract while replaying a trace."""


@dataclass
class Capacities:
    mcap: int
    dcap: int
    gamma: int


def scan_capacities(trace: Trace) -> Capacities:
    """Peak live edge count, peak degree, and the degeneracy of every edge
    ever inserted (an upper bound on the arboricity of each live graph)."""
    n = trace.n
    live: set[tuple[int, int]] = set()
    deg = [0] * n
    ever: set[tuple[int, int]] = set()
    mcap = dcap = 0
    for ev in trace.events:
        if ev.kind not in "ID":
            continue
        key = (min(ev.u, ev.v), max(ev.u, ev.v))
        if ev.kind == "I" and key not in live:
            live.add(key)
            ever.add(key)
            deg[ev.u] += 1
            deg[ev.v] += 1
            mcap = max(mcap, len(live))
            dcap = max(dcap, deg[ev.u], deg[ev.v])
        elif ev.kind == "D" and key in live:
            live.discard(key)
            deg[ev.u] -= 1
            deg[ev.v] -= 1
    return Capacities(max(mcap, 1), max(dcap, 1), max(_degeneracy(n, ever), 1))


def _degeneracy(n: int, edges) -> int:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = [len(a) for a in adj]
    buckets: dict[int, set[int]] = {}
    for v, d in enumerate(deg):
        buckets.setdefault(d, set()).add(v)
    removed = [False] * n
    best = 0
    d = 0
    for _ in range(n):
        d = max(0, d - 1)
        while not buckets.get(d):
            d += 1
        v = buckets[d].pop()
        removed[v] = True
        best = max(best, d)
        for w in adj[v]:
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets.setdefault(deg[w], set()).add(w)
    return best


def make_engine(name: str, n: int, *, mcap: int = 1, dcap: int = 1, gamma: int = 1):
    if name == "full2":
        return Full2Coloring(n)
    if name == "inc2":
        return Explicit2Coloring(n)
    if name == "inclog":
        return LogColoring(n)
    if name == "incimp2":
        return Implicit2Coloring(n)
    if name == "delta1":
        return Delta1Coloring(n, mcap, dcap)
    if name == "arb":
        return ArbColoring(n, gamma, dcap)
    raise ValueError(f"unknown engine {name!r}; choose from {ENGINES}")


@dataclass
class RunReport:
    engine: str
    n: int
    events: dict
    updates: int
    queries: int
    recolorings: int
    max_recolorings_per_update: int
    delete_recolorings: int
    distinct_colors_max: int
    rejections: int
    skipped_deletes: int
    structural_steps: int
    check: str
    violations: int
    observable_flips: dict | None
    wall_time_s: float
    wall_time_us: dict = field(default_factory=dict)

    WALL_FIELDS = ("wall_time_s", "wall_time_us")

    def to_dict(self) -> dict:
        return asdict(self)

    def deterministic_dict(self) -> dict:
        d = self.to_dict()
        for k in self.WALL_FIELDS:
            d.pop(k)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


class _Checker:
    """Oracle-side re-validation after each update.

    Engines that can hand over their whole coloring cheaply are checked
    against every edge after every update.  For full2, whose colors cost a
    forest walk each, the check covers the components of both endpoints
    (the only place an update may change colors), with a whole-graph sweep
    every ``sweep_every`` updates and at the end.
    """

    def __init__(self, engine, n: int):
        self.engine = engine
        self.graph = OracleGraph(n)
        self.violations = 0
        self.messages: list[str] = []
        self.flips = {"insert": 0, "delete": 0}
        self.local = engine.name == "full2"
        self.bipartite = engine.name in BIPARTITE
        self._last = None
        self.growing = GrowingBipartition(n) if self.bipartite and not engine.fully_dynamic else None

    def _fail(self, msg: str) -> None:
        self.violations += 1
        if len(self.messages) < 20:
            self.messages.append(msg)

    def _colors_of(self, vertices):
        peek = self.engine.peek
        return {x: peek(x) for x in vertices}

    def before(self, ev: Event):
        """Snapshot the colors an update may touch."""
        if not self.local:
            if self._last is None:
                self._last = self.engine.colors()
            return self._last
        region = self.graph.component(ev.u) | self.graph.component(ev.v)
        return self._colors_of(region)

    def insert(self, ev: Event, outcome, before) -> None:
        g = self.graph
        if self.bipartite:
            if self.growing is not None:
                odd = self.growing.closes_odd_cycle(ev.u, ev.v)
            else:
                odd = g.closes_odd_cycle(ev.u, ev.v)
            if odd != (outcome is InsertOutcome.REJECTED):
                self._fail(f"line {ev.line}: rejection mismatch on {ev}")
            if not odd:
                g.add(ev.u, ev.v)
                if self.growing is not None:
                    self.growing.add(ev.u, ev.v)
        else:
            g.add(ev.u, ev.v)
        self._validate(ev, before, "insert")

    def delete(self, ev: Event, before) -> None:
        self.graph.remove(ev.u, ev.v)
        self._validate(ev, before, "delete")

    def _validate(self, ev: Event, before, kind: str) -> None:
        g = self.graph
        if not self.local:
            after = self.engine.colors()
            self._last = after
            bad = g.violations(after)
            changed = int(np.count_nonzero(np.asarray(before) != np.asarray(after)))
        else:
            region = g.component(ev.u) | g.component(ev.v)
            lookup = self._colors_of(region)
            bad = g.component_violations(region, lookup.__getitem__)
            changed = sum(1 for x, c in before.items() if lookup[x] != c)
        self.flips[kind] += changed
        if bad:
            self._fail(f"line {ev.line}: improper after {ev}: {bad[:3]}")

    def full_sweep(self) -> None:
        bad = self.graph.violations(self.engine.colors())
        if bad:
            self._fail(f"full sweep: improper edges {bad[:3]}")


def run(engine, trace: Trace, check: str = "none", *, mcap: int | None = None,
        dcap: int | None = None, gamma: int | None = None,
        sweep_every: int = 256, n: int | None = None) -> RunReport:
    """Replay ``trace``; ``engine`` is a name from :data:`ENGINES` or a ready
    instance.  Capacities not given are read off the trace."""
    if check not in ("none", "oracle"):
        raise ValueError("check must be 'none' or 'oracle'")
    if isinstance(engine, str):
        caps = scan_capacities(trace)
        engine = make_engine(engine, n or trace.n, mcap=mcap or caps.mcap,
                             dcap=dcap or caps.dcap, gamma=gamma or caps.gamma)
    name = engine.name
    metrics = engine.metrics
    checker = _Checker(engine, engine.n) if check == "oracle" else None
    rejected: set[tuple[int, int]] = set()
    skipped = 0
    max_per_update = 0
    delete_recolorings = 0
    wall: list[int] = []
    clock = time.perf_counter_ns
    updates_seen = 0
    for ev in trace.events:
        kind = ev.kind
        if kind == "D" and not engine.fully_dynamic:
            raise UnsupportedEvent(name, ev)
        if kind == "K" and name != "full2":
            raise UnsupportedEvent(name, ev)
        if kind == "C":
            t0 = clock()
            engine.get_color(ev.u)
            wall.append(clock() - t0)
            continue
        if kind == "K":
            t0 = clock()
            answer = engine.connected_via_coloring(ev.u, ev.v)
            wall.append(clock() - t0)
            if checker and answer != checker.graph.connected(ev.u, ev.v):
                checker._fail(f"line {ev.line}: connectivity mismatch on {ev}")
            continue
        key = (min(ev.u, ev.v), max(ev.u, ev.v))
        if kind == "D" and key in rejected:
            rejected.discard(key)
            skipped += 1
            continue
        before = checker.before(ev) if checker else None
        r0 = metrics.recolorings
        t0 = clock()
        if kind == "I":
            outcome = engine.insert(ev.u, ev.v)
        else:
            try:
                engine.delete(ev.u, ev.v)
            except EdgeMissing as exc:
                raise ContractViolation(f"line {ev.line}: {exc!r}") from None
            outcome = None
        wall.append(clock() - t0)
        delta = metrics.recolorings - r0
        max_per_update = max(max_per_update, delta)
        if kind == "D":
            delete_recolorings += delta
        elif outcome is InsertOutcome.REJECTED:
            rejected.add(key)
        updates_seen += 1
        if checker:
            if kind == "I":
                checker.insert(ev, outcome, before)
            else:
                checker.delete(ev, before)
            if checker.local and updates_seen % sweep_every == 0:
                checker.full_sweep()
    if checker and checker.local:
        checker.full_sweep()
    wall_arr = np.asarray(wall, dtype=np.int64) if wall else np.zeros(1, dtype=np.int64)
    p50, p90, p99 = np.percentile(wall_arr, [50, 90, 99]) / 1000.0
    report = RunReport(
        engine=name,
        n=engine.n,
        events=trace.counts(),
        updates=metrics.updates,
        queries=metrics.queries,
        recolorings=metrics.recolorings,
        max_recolorings_per_update=max_per_update,
        delete_recolorings=delete_recolorings,
        distinct_colors_max=metrics.distinct_colors_max,
        rejections=metrics.rejections,
        skipped_deletes=skipped,
        structural_steps=engine.steps,
        check=check,
        violations=checker.violations if checker else 0,
        observable_flips=dict(checker.flips) if checker else None,
        wall_time_s=float(wall_arr.sum()) / 1e9,
        wall_time_us={"p50": round(float(p50), 3), "p90": round(float(p90), 3),
                      "p99": round(float(p99), 3),
                      "max": round(float(wall_arr.max()) / 1000.0, 3)},
    )
    report.messages = checker.messages if checker else []
    return report
