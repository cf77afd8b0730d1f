"""
How the palette grows with n
============================

The greedy palette on G(n, 1/2) creeps up like half of log2 n. The
closed-form bounds show why nothing sharper can be read off at this scale.
"""

import statistics

from cliquechroma import bound_report
from cliquechroma.harness import run_mc

rows = run_mc([256, 512, 1024, 2048], trials=20, seed=0)
for n in (256, 512, 1024, 2048):
    pal = [r.palette for r in rows if r.n == n]
    rep = bound_report(n, eps=0.1)
    print(f"n={n:5d}  mean palette {statistics.fmean(pal):.2f}  "
          f"upper bound {rep.values['mmp_upper_bound']:.0f}  "
          f"adversary size {rep.values['adversary_palette_size']:.0f}"
          f"{' (vacuous)' if rep.vacuous['adversary_palette_size'] else ''}")

# The adversary size only turns positive for astronomically large n.
for e in (64, 256, 1000):
    print(f"n=2^{e}: adversary palette size {bound_report(2**e, 0.1).values['adversary_palette_size']:.0f}")
