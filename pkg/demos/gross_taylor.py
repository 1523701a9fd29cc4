"""
Chiral Gross-Taylor series
==========================

The degree-d microchiral partition function of 2D Yang-Mills on a surface
is summed exactly over Young diagrams, then re-expanded in 1/N with
Hurwitz numbers as coefficients.  Logs of the generating series keep only
connected covers and sort them by genus.
"""

from hurwitz_cayley import ym2
from hurwitz_cayley.series import format_rational

torus = ym2.Spacetime(holes=0, handles=1)
direct = ym2.microchiral_direct(torus, 3, 5, 4)
expansion = ym2.microchiral_expansion("torus", 3, 5, 4)
print("torus d=3 N=5, coefficients of t^k:")
for (k, _), c in sorted(direct.nonzero().items()):
    print(f"  t^{k}: {format_rational(c)}")
print("expansion reproduces it:", expansion.resummed().same_values(direct))

# Pants need the weakly monotone block; the truncated sum plus an exact tail
pants = ym2.microchiral_expansion("pants", 2, 5, 2, s_order=3)
exact = ym2.microchiral_direct(ym2.Spacetime(3, 0), 2, 5, 2)
print("pants d=2, monotone block cut at s=3")
print("  partial sum exact?", pants.partial_sum().same_values(exact))
print("  partial sum + tail exact?", pants.resummed().same_values(exact))

# Free energy of the torus by genus
for g in (1, 2):
    f = ym2.genus_free_energy("torus", g, 3, 4)
    print(f"F_{g}:", f)

# Area zero on the sphere: Stirling numbers of the first kind
w = ym2.area_zero("sphere", 4)
print("sphere at u = v = 1 equals exp(hbar^-2 sum z^d/d):",
      w.collapse(u=True, v=True) == ym2.stirling_sphere_series(4))
