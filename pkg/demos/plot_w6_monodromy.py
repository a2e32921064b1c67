"""
The six-strand wicket braid
===========================

Start from the braid word, read off its invariants, then build the
incidence matrix of its train track and certify the dilatation.
"""

import numpy as np

from wicket import braid as bw
from wicket.dilatation import kappa
from wicket.linalg import char_poly, is_primitive
from wicket.traintrack import w6_incidence_matrix, w6_prong_data

w6 = bw.family_word("w6")
print("word:", w6.to_tokens())
print("permutation:", bw.permutation(w6).cycle_string())
print("exponent sum:", bw.exponent_sum(w6))
print("keeps the wicket pairing:", bw.pairing_preserved(w6))

###############################################################################
# The incidence matrix acts on the six peripheral edges. Column j lists
# how often the image of edge j crosses each edge.

M = w6_incidence_matrix()
print(M)
print("characteristic polynomial:", char_poly(M))
print("primitive:", is_primitive(M))

###############################################################################
# The Perron root is the dilatation. Compare the certified bracket with a
# plain floating-point eigenvalue.

k = kappa()
print(f"certified: [{float(k.bracket.low):.15f}, {float(k.bracket.high):.15f}]")
print("numpy:", max(abs(np.linalg.eigvals(M.astype(float)))))
print("matches (1 + sqrt5 + sqrt(2 + 2 sqrt5)) / 2:", k.closed_form_in_bracket)

###############################################################################
# Singularity data of the invariant foliation.

pd = w6_prong_data()
print("puncture prongs:", pd.puncture_prongs, " interior:", pd.interior_prongs)
print("Euler-Poincare sum:", pd.euler_poincare_sum())
