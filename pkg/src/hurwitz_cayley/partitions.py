"""Young diagrams: enumeration, hooks, contents, dimensions.

Partitions are weakly decreasing tuples of positive ints; the empty tuple is
the unique partition of 0.  Enumeration order is reverse lexicographic, so
``(d,)`` always comes first and ``(1,) * d`` last.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]

__all__ = [
    "Partition", "as_partition", "partitions", "partition_count", "conjugate",
    "hook_lengths", "dimension", "contents", "pochhammer", "dim_unitary",
    "weyl_dimension", "quadratic_casimir", "stirling_cycle",
    "centralizer_order", "class_size", "catalan", "cayley_number",
    "merge", "sort_key",
]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalise a partition given as any int sequence."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{list(p)} is not a weakly decreasing positive sequence")
    return p


def partitions(d: int, max_rows: int | None = None) -> Iterator[Partition]:
    """All partitions of ``d`` (with at most ``max_rows`` rows), reverse-lex."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    rows = d if max_rows is None else max_rows

    def gen(n: int, largest: int, rows_left: int):
        if n == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for k in range(min(n, largest), 0, -1):
            for rest in gen(n - k, k, rows_left - 1):
                yield (k,) + rest

    yield from gen(d, d, rows)


@cache
def partition_count(d: int) -> int:
    return sum(1 for _ in partitions(d))


def sort_key(p: Partition) -> tuple[int, ...]:
    """Sort key realising the canonical (reverse lexicographic) order."""
    return tuple(-x for x in p)


def merge(a: Partition, b: Partition) -> Partition:
    """Multiset union of parts, i.e. the product p_a p_b of power sums."""
    return tuple(sorted(a + b, reverse=True))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths in row-major order, via arm and leg lengths."""
    conj = conjugate(lam)
    return [
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


@cache
def dimension(lam: Partition) -> int:
    """Dimension of the irreducible S^d module indexed by ``lam``."""
    return math.factorial(sum(lam)) // math.prod(hook_lengths(lam))


def contents(lam: Partition) -> tuple[int, ...]:
    """Column index minus row index for each cell, row by row."""
    return tuple(j - i for i in range(len(lam)) for j in range(lam[i]))


def pochhammer(lam: Partition, x) -> Fraction:
    """Generalised rising factorial: product of ``x + c`` over contents."""
    out = Fraction(1)
    for c in contents(lam):
        out *= x + c
    return out


def dim_unitary(lam: Partition, N: int) -> int:
    """Dimension of the polynomial U_N irreducible with highest weight ``lam``."""
    if len(lam) > N:
        raise ValueError(f"{lam} has more than N={N} rows")
    val = dimension(lam) * pochhammer(lam, N) / math.factorial(sum(lam))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral unitary dimension {val}")
    return int(val)


def weyl_dimension(lam: Partition, N: int) -> int:
    """Weyl's product formula; independent of the content machinery."""
    if len(lam) > N:
        raise ValueError(f"{lam} has more than N={N} rows")
    w = list(lam) + [0] * (N - len(lam))
    num = den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= w[i] - w[j] + j - i
            den *= j - i
    return num // den


def quadratic_casimir(lam: Partition, N: int) -> int:
    """Casimir eigenvalue sum_i lam_i (lam_i + N + 1 - 2i) on W_N^lam."""
    return sum(x * (x + N + 1 - 2 * i) for i, x in enumerate(lam, start=1))


@cache
def stirling_cycle(d: int, k: int) -> int:
    """Unsigned Stirling number of the first kind."""
    if d < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if d == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > d:
        return 0
    return stirling_cycle(d - 1, k - 1) + (d - 1) * stirling_cycle(d - 1, k)


def centralizer_order(alpha: Partition) -> int:
    """z_alpha = prod_k m_k! k^m_k."""
    return math.prod(math.factorial(m) * k**m for k, m in Counter(alpha).items())


def class_size(alpha: Sequence[int]) -> int:
    alpha = as_partition(alpha)
    return math.factorial(sum(alpha)) // centralizer_order(alpha)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def cayley_number(n: int) -> int:
    """(n+1)^(n-1): minimal transposition factorizations of an (n+1)-cycle."""
    return 1 if n == 0 else (n + 1) ** (n - 1)
