"""
Normalized entropy near the limit
=================================

(m - 2) log(lambda) decreases toward 4 log(kappa), with a gap that
shrinks roughly like 1/n^2.
"""

import numpy as np

from wicket.dilatation import convergence_report, penner_check

rep = convergence_report(200)
print(f"limit: {rep.limit:.12f}")
for p in rep.points[::40]:
    print(f"n={p.n:<4} lambda={p.value:.10f}  gap={p.gap:.3e}")

###############################################################################
# A log-log fit of the gap against n estimates the rate.

ns = np.array([p.n for p in rep.points[10:]], dtype=float)
gaps = np.array([p.gap for p in rep.points[10:]])
slope = np.polyfit(np.log(ns), np.log(gaps), 1)[0]
print(f"fitted exponent: {slope:.3f}")
print("first n with lambda - 1 < 0.01:", rep.first_n_within_one_percent)

###############################################################################
# Every member clears the lower bound log 2 / (4m - 12) on the entropy
# of a pseudo-Anosov map of the m-punctured sphere.

print("lower bound respected for m <= 200:", all(penner_check(m) for m in range(6, 201, 2)))
