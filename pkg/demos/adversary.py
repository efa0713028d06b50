"""Why flipping the smaller side costs n/2 * log2(n) recolorings in total.

The adversary keeps pairs of equal-length paths and always joins them
through two endpoints that currently share a color, so every merge flips
a whole path.  The lazy parity-union-find engine answers the same inserts
with one flag write per merge.
"""

from dyncolor import Implicit2Coloring
from dyncolor.bench import run_adversary_explicit2

for n in (16, 64, 256, 1024):
    total, trace = run_adversary_explicit2(n)
    lazy = Implicit2Coloring(n)
    for ev in trace.events:
        if ev.kind == "I":
            lazy.insert(ev.u, ev.v)
    bound = n // 2 * (n.bit_length() - 1)
    print(f"n={n:5d}  explicit flips={total:6d}  n/2*log2(n)={bound:6d}  "
          f"lazy flag writes={lazy.metrics.recolorings}")
