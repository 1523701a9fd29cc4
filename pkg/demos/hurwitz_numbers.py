"""
Hurwitz numbers from characters and from brute force
====================================================

Plancherel expectations turn tuple counts into character sums.  Each count
below is computed twice: once over Young diagrams and once by enumerating
tuples of permutations.
"""

from hurwitz_cayley import hurwitz
from hurwitz_cayley.hurwitz import ExpectationWord

# Double Hurwitz numbers <K_alpha K_beta K^r> in S^4
alpha, beta = (2, 1, 1), (4,)
for r in range(7):
    word = ExpectationWord(classes=(alpha, beta), r=r)
    print(f"r={r}: characters={hurwitz.double_hurwitz(alpha, beta, r):6d}"
          f"  tuples={hurwitz.oracle_expectation(word):6d}"
          f"  genus={hurwitz.genus_label(word)}")

# Torus covers: all versus connected
for d in range(1, 5):
    row = []
    for r in range(0, 5, 2):
        word = ExpectationWord(handles=1, r=r)
        row.append(f"<HK^{r}>={hurwitz.plancherel(word, d)}"
                   f"/{hurwitz.connected(word, d)}")
    print(f"d={d}: " + "  ".join(row))

# The Weingarten function sums 1/Omega_{1/N} over diagrams with at most N rows
for alpha in [(1, 1), (2,)]:
    print("Wg", alpha, "N=5:", hurwitz.weingarten(alpha, 2, 5))
