"""Plain-text update traces.

::

    N 8
    # comment lines and blank lines are kept verbatim
    I 0 1
    D 0 1
    C 3
    K 2 5

The ``N`` header is mandatory and must be the first line.  Parsing then
dumping a canonical file (single spaces, ``\\n`` line ends) gives back the
same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

ARITY = {"I": 2, "D": 2, "C": 1, "K": 2}


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class Event:
    kind: str  # one of I, D, C, K
    u: int
    v: int | None = None
    line: int | None = field(default=None, compare=False)

    def __str__(self) -> str:
        if self.v is None:
            return f"{self.kind} {self.u}"
        return f"{self.kind} {self.u} {self.v}"


def Insert(u: int, v: int) -> Event:
    return Event("I", u, v)


def Delete(u: int, v: int) -> Event:
    return Event("D", u, v)


def ColorQuery(u: int) -> Event:
    return Event("C", u)


def ConnQuery(u: int, v: int) -> Event:
    return Event("K", u, v)


@dataclass(frozen=True)
class Comment:
    text: str  # everything after the line start, including the leading '#'

    def __str__(self) -> str:
        return self.text


Item = Union[Event, Comment]


@dataclass
class Trace:
    n: int
    items: list = field(default_factory=list)

    @property
    def events(self) -> list[Event]:
        return [it for it in self.items if isinstance(it, Event)]

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def __len__(self) -> int:
        return sum(1 for it in self.items if isinstance(it, Event))

    def append(self, item: Item) -> None:
        self.items.append(item)

    def extend(self, items: Iterable[Item]) -> None:
        self.items.extend(items)

    def counts(self) -> dict[str, int]:
        out = {k: 0 for k in ARITY}
        for ev in self.events:
            out[ev.kind] += 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trace):
            return NotImplemented
        return self.n == other.n and self.items == other.items


def dumps(trace: Trace) -> str:
    lines = [f"N {trace.n}"]
    lines.extend(str(it) for it in trace.items)
    return "\n".join(lines) + "\n"


def _int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, f"expected a non-negative integer, got {tok!r}")
    return int(tok)


def parse_trace(text: str) -> Trace:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty trace; header 'N <n>' required")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "N":
        raise ParseError(1, "first line must be the header 'N <n>'")
    n = _int(head[1], 1)
    if n < 1:
        raise ParseError(1, "n must be positive")
    trace = Trace(n)
    for lineno, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            trace.items.append(Comment(raw))
            continue
        toks = stripped.split()
        kind = toks[0]
        if kind == "N":
            raise ParseError(lineno, "duplicate header")
        if kind not in ARITY:
            raise ParseError(lineno, f"unknown event {kind!r}")
        if len(toks) - 1 != ARITY[kind]:
            raise ParseError(lineno, f"{kind} takes {ARITY[kind]} vertex id(s)")
        ids = [_int(t, lineno) for t in toks[1:]]
        for x in ids:
            if x >= n:
                raise ParseError(lineno, f"vertex {x} out of range for n={n}")
        if kind != "C" and ids[0] == ids[1]:
            raise ParseError(lineno, "self-loop")
        trace.items.append(Event(kind, ids[0], ids[1] if len(ids) > 1 else None, lineno))
    return trace


def load(path) -> Trace:
    with open(path, encoding="ascii") as fh:
        return parse_trace(fh.read())


def save(trace: Trace, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(trace))
