"""A short tour of every coloring engine on small graphs.

Run with ``python3 demos/quickstart.py``.
"""

from dyncolor import (ArbColoring, Delta1Coloring, Explicit2Coloring, Full2Coloring,
                      Implicit2Coloring, InsertOutcome, LogColoring)


def show(title, engine, n):
    print(f"{title:<40} colors={[engine.get_color(v) for v in range(n)]}"
          f"  recolorings={engine.metrics.recolorings}")


# Bipartite engines: a 4-cycle is accepted, a triangle is refused.
for cls in (Explicit2Coloring, Implicit2Coloring, LogColoring, Full2Coloring):
    g = cls(5)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 0)]:
        g.insert(u, v)
    refused = g.insert(0, 2) is InsertOutcome.REJECTED
    show(f"{cls.__name__} (0-2 refused: {refused})", g, 5)

# The fully dynamic 2-coloring also handles deletions.
g = Full2Coloring(6)
for u, v in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]:
    g.insert(u, v)
g.delete(2, 3)
show("Full2Coloring after cutting a 6-cycle", g, 6)
print("  0 and 3 connected?", g.connected_via_coloring(0, 3))

# (Delta+1)-coloring under a degree cap.
d = Delta1Coloring(6, mcap=15, dcap=5)
for u in range(6):
    for v in range(u + 1, 6):
        d.insert(u, v)
show("Delta1Coloring on K6", d, 6)

# Bounded-arboricity coloring of a tree (gamma = 1).
a = ArbColoring(8, gamma=1, dcap=7)
for v in range(1, 8):
    a.insert(v, (v - 1) // 2)
show("ArbColoring on a binary tree", a, 8)
