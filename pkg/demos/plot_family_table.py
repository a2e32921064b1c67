"""
Dilatations along the family
============================

Each w_{4n+8} comes with a 6n+9 edge train track. The characteristic
polynomial of its matrix equals a sparse palindromic polynomial, and its
largest root is shared with w_{4n+6}.
"""

from wicket.dilatation import family_polynomial, reproduce_table
from wicket.traintrack import family_incidence_matrix, validate_family
from wicket.linalg import char_poly

n = 1
M = family_incidence_matrix(n)
print(f"n={n}: {M.shape[0]} edges")
print("char poly:", char_poly(M))
print("closed form agrees:", char_poly(M) == family_polynomial(n))

###############################################################################
# Check every matrix up to n = 10: polynomial identity and primitivity.

for check in validate_family(10):
    print(f"n={check.n:<2} dim={check.dimension:<3} primitive after {check.primitivity_power} steps")

###############################################################################
# The table of certified dilatations.

for row in reproduce_table(15):
    name = f"w{row.strands_high}" + (f" = w{row.strands_low}" if row.strands_low else "")
    print(f"{name:<12} {row.value:.8f}")
