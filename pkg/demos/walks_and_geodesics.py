"""
Walks on the Cayley graph of S^4
================================

Transposition (i j) with i < j carries the label j.  Walks whose labels
never decrease are counted by the complete symmetric polynomials in the
Jucys-Murphy elements, and strictly increasing walks are unique.
"""

from fractions import Fraction

import numpy as np

from hurwitz_cayley import oracle
from hurwitz_cayley.partitions import partitions
from hurwitz_cayley.perms import enumerate_class, format_cycles, identity

d = 4
e = identity(d)

# Every vertex is reached by exactly one strictly increasing walk from e,
# and that walk is a geodesic.
hits = oracle.strict_walk_endpoints(e)
print("strictly increasing walks from e:", sum(hits.values()), "endpoints:", len(hits))

# Geodesic counts per class, against the closed forms
for alpha in partitions(d):
    pi = next(enumerate_class(alpha))
    print(f"{format_cycles(pi):>12}  geodesics={oracle.geodesic_count(e, pi):3d}"
          f" (formula {oracle.hurwitz_cayley_formula(alpha)})"
          f"  monotone={oracle.monotone_geodesic_count(e, pi)}"
          f" (Catalan {oracle.catalan_product(alpha)})")

# The distance matrix q^d(rho, sigma) is the operator Omega_q
q = Fraction(1, 3)
omega = oracle.operator_matrix(oracle.omega_element(q, 3), 3)
print("Omega_1/3 on S^3:\n", np.array(omega, dtype=float).round(3))
print("det =", oracle.exact_det(omega))

# and its inverse is the alternating sum of weakly monotone walk operators
approx = sum(oracle.operator_matrix(oracle.monotone_element(r, 3), 3) * (-q) ** r
             for r in range(40))
print("max |partial sum - inverse| =",
      float(np.abs(np.array(approx - oracle.exact_inverse(omega), dtype=float)).max()))
