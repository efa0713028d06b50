"""Answering connectivity queries using nothing but a dynamic 2-coloring.

Two spare vertices are attached to ``u`` and ``v``.  Then an edge between
them is offered: it is refused exactly when it would close an odd cycle,
which can only happen if ``u`` and ``v`` are already connected.  The check
below compares every answer with a breadth-first search.
"""

import random

from dyncolor import Full2Coloring
from dyncolor.oracle import OracleGraph

rng = random.Random(7)
n = 40
engine = Full2Coloring(n)
mirror = OracleGraph(n)
mismatches = 0
for step in range(2000):
    u, v = rng.sample(range(n), 2)
    if (u, v) in mirror:
        engine.delete(u, v)
        mirror.remove(u, v)
    elif rng.random() < 0.5 and not mirror.closes_odd_cycle(u, v):
        engine.insert(u, v)
        mirror.add(u, v)
    a, b = rng.sample(range(n), 2)
    mismatches += engine.connected_via_coloring(a, b) != mirror.connected(a, b)
print(f"2000 mixed updates and queries on n={n}: {mismatches} wrong answers")
