"""Characters of S^d and the Fourier transforms of central elements.

Irreducible characters come from the Murnaghan-Nakayama rule.  Every other
eigenvalue here is a symmetric function of the content multiset of a Young
diagram, which is where the Jucys-Murphy elements act diagonally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Any, Iterable, Sequence

from .partitions import (
    Partition, as_partition, class_size, contents, dimension, partitions,
)

__all__ = [
    "mn_character", "CharacterTable", "character_table", "central_character",
    "khat", "hhat", "elementary", "complete", "complete_list",
    "level_eigenvalue", "monotone_eigenvalue", "omega_hat", "omega_inv_hat",
    "psi_hat_series", "psi_hat_numeric", "Eigenpacket", "eigenpacket",
    "det_omega", "singular_points", "CentralElement", "fourier_transform",
    "EAGER_TABLE_DEGREE",
]

EAGER_TABLE_DEGREE = 9


def _to_partition(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return tuple(x for x in (b[i] - (n - 1 - i) for i in range(n)) if x > 0)


@cache
def _mn(lam: Partition, alpha: Partition) -> int:
    if not alpha:
        return 1 if not lam else 0
    k, rest = alpha[0], alpha[1:]
    n = len(lam)
    beta = {lam[i] + (n - 1 - i) for i in range(n)}
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beta:
            continue
        # height of the removed border strip = beads jumped over
        height = sum(1 for x in beta if target < x < b)
        sign = -1 if height % 2 else 1
        total += sign * _mn(_to_partition((beta - {b}) | {target}), rest)
    return total


def mn_character(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """chi^lam evaluated on the class of cycle type ``alpha``."""
    lam, alpha = as_partition(lam), as_partition(alpha)
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: |{lam}| != |{alpha}|")
    return _mn(lam, alpha)


@dataclass(frozen=True)
class CharacterTable:
    d: int
    partitions: tuple[Partition, ...]
    values: dict[tuple[Partition, Partition], int] = field(repr=False)

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.values[key]

    def row(self, lam: Partition) -> list[int]:
        return [self.values[lam, a] for a in self.partitions]


class _LazyValues(dict):
    def __missing__(self, key):
        lam, alpha = key
        if sum(lam) != sum(alpha):
            raise KeyError(key)
        val = self[key] = _mn(lam, alpha)
        return val


@cache
def _table(d: int) -> CharacterTable:
    parts = tuple(partitions(d))
    if d <= EAGER_TABLE_DEGREE:
        values = {(lam, a): _mn(lam, a) for lam in parts for a in parts}
    else:
        values = _LazyValues()
    return CharacterTable(d, parts, values)


def character_table(d: int) -> CharacterTable:
    return _table(d)


def central_character(alpha: Sequence[int], lam: Sequence[int]) -> Fraction:
    """Eigenvalue of the class sum K_alpha on V^lam: |K_alpha| chi / dim."""
    alpha, lam = as_partition(alpha), as_partition(lam)
    return Fraction(class_size(alpha) * mn_character(lam, alpha), dimension(lam))


def khat(lam: Partition) -> int:
    return sum(contents(lam))


def hhat(lam: Partition) -> int:
    """Eigenvalue of the commutator sum: (d!/dim)^2."""
    return (math.factorial(sum(lam)) // dimension(lam)) ** 2


def elementary(values: Sequence[int], r: int) -> int:
    if r < 0:
        return 0
    e = [1] + [0] * r
    for x in values:
        for k in range(r, 0, -1):
            e[k] += x * e[k - 1]
    return e[r]


def complete_list(values: Sequence, r_max: int) -> list:
    """[h_0, ..., h_r_max] of ``values`` (exact for ints or Fractions)."""
    h = [1] + [0] * r_max
    for x in values:
        for k in range(1, r_max + 1):
            h[k] += x * h[k - 1]
    return h


def complete(values: Sequence[int], r: int) -> int:
    return 0 if r < 0 else complete_list(values, r)[r]


def level_eigenvalue(lam: Sequence[int], r: int) -> int:
    """Eigenvalue of the level L_r: e_r of the contents."""
    return elementary(contents(as_partition(lam)), r)


def monotone_eigenvalue(lam: Sequence[int], r: int) -> int:
    """Eigenvalue of M_r = h_r(J_1, ..., J_d): h_r of the contents."""
    return complete(contents(as_partition(lam)), r)


def omega_hat(lam: Partition, q) -> Fraction:
    out = Fraction(1)
    for c in contents(lam):
        out *= 1 + q * c
    return out


def omega_inv_hat(lam: Partition, q) -> Fraction:
    val = omega_hat(lam, q)
    if val == 0:
        raise ZeroDivisionError(f"Omega_q is singular on {lam} at q={q}")
    return 1 / Fraction(val)


def psi_hat_series(lam: Partition, order: int, scale=1) -> list[Fraction]:
    """Taylor coefficients in t of exp(-t * scale * Khat(lam)), up to t^order."""
    k = Fraction(khat(lam)) * scale
    return [(-k) ** r / math.factorial(r) for r in range(order + 1)]


def psi_hat_numeric(lam: Partition, t, dps: int = 30):
    """exp(-t Khat) as an mpmath float; display only."""
    import mpmath

    with mpmath.workdps(dps):
        return mpmath.exp(-mpmath.mpf(t) * khat(lam))


@dataclass(frozen=True)
class Eigenpacket:
    """Scalars by which the basic central operators act on V^lam."""

    partition: Partition
    khat: int
    hhat: int
    contents: tuple[int, ...]

    @property
    def d(self) -> int:
        return sum(self.partition)

    def omegahat(self, q) -> Fraction:
        return omega_hat(self.partition, q)

    def omegahat_inv(self, q) -> Fraction:
        return omega_inv_hat(self.partition, q)

    def casimir(self, N: int) -> int:
        return self.d * N + 2 * self.khat

    def level(self, r: int) -> int:
        return elementary(self.contents, r)

    def monotone(self, r: int) -> int:
        return complete(self.contents, r)


def eigenpacket(lam: Sequence[int], d: int | None = None) -> Eigenpacket:
    lam = as_partition(lam)
    if d is not None and sum(lam) != d:
        raise ValueError(f"{lam} is not a partition of {d}")
    return Eigenpacket(lam, khat(lam), hhat(lam), contents(lam))


def det_omega(d: int, q) -> Fraction:
    """det Omega_q on C[S^d] as the product of eigenvalues with multiplicity.

    V^lam occurs dim(lam) times in the regular representation, so each
    eigenvalue carries multiplicity dim(lam)^2.
    """
    if d < 1:
        raise ValueError("d must be positive")
    out = Fraction(1)
    for lam in partitions(d):
        out *= omega_hat(lam, q) ** (dimension(lam) ** 2)
    return out


def singular_points(d: int) -> list[Fraction]:
    """The q at which Omega_q is singular: +-1/k for 1 <= k <= d-1."""
    return sorted({s * Fraction(1, k) for k in range(1, d) for s in (1, -1)})


_GENERATORS = ("H", "K", "L", "M", "Omega", "OmegaInv", "Psi")


@dataclass(frozen=True)
class CentralElement:
    """A scalar multiple of a word in commuting central generators.

    Factors are ``(name, param)`` pairs: ``("H", None)``, ``("K", None)`` for
    the transposition class, ``("K", alpha)`` for a class sum, ``("L", r)``,
    ``("M", r)``, ``("Omega", q)``, ``("OmegaInv", q)`` and ``("Psi", t)``.
    """

    factors: tuple[tuple[str, Any], ...] = ()
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        for name, _ in self.factors:
            if name not in _GENERATORS:
                raise ValueError(f"unknown generator {name!r}")

    def __mul__(self, other: "CentralElement") -> "CentralElement":
        if isinstance(other, CentralElement):
            return CentralElement(self.factors + other.factors,
                                  self.coefficient * other.coefficient)
        return CentralElement(self.factors, self.coefficient * Fraction(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CentralElement":
        out = CentralElement()
        for _ in range(n):
            out = out * self
        return out

    @classmethod
    def gen(cls, name: str, param: Any = None) -> "CentralElement":
        if name == "K" and param is not None:
            param = as_partition(param)
        return cls(((name, param),))


def fourier_transform(elem: CentralElement, lam: Partition) -> Fraction:
    """Eigenvalue of ``elem`` on V^lam.

    ``Psi`` only has a finite exact value at t = 0; expand it with
    ``psi_hat_series`` instead.
    """
    lam = as_partition(lam)
    out = Fraction(elem.coefficient)
    for name, p in elem.factors:
        if name == "H":
            out *= hhat(lam)
        elif name == "K":
            out *= khat(lam) if p is None else central_character(p, lam)
        elif name == "L":
            out *= level_eigenvalue(lam, p)
        elif name == "M":
            out *= monotone_eigenvalue(lam, p)
        elif name == "Omega":
            out *= omega_hat(lam, p)
        elif name == "OmegaInv":
            out *= omega_inv_hat(lam, p)
        elif name == "Psi":
            if p != 0:
                raise ValueError("Psi_t is formal in t; use psi_hat_series")
    return out
