"""Microchiral partition functions of 2D Yang-Mills and their 1/N expansions.

For a surface with m holes and n handles, the degree-d microchiral
partition function is

    Z_N^d = (z N^e)^d / d! * sum_P P * <H^n K_alpha... Psi_{t/N} Omega_{1/N}^e>

with e = 2 - 2n - m and P = p_alpha1 (x) ... (x) p_alpham.  Everything here is
exact: t is formal and results are stored as the coefficient of z^d t^k P.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .characters import (
    central_character, complete, elementary, hhat, khat, mn_character, omega_hat,
)
from .hurwitz import (
    Geometry, geometry, geometry_word, plancherel, template_series,
)
from .partitions import (
    Partition, centralizer_order, contents, dimension, partitions,
    quadratic_casimir, stirling_cycle, weyl_dimension,
)
from .series import FormalSeries, Orders, series_exp, series_log

__all__ = [
    "Spacetime", "MicrochiralResult", "UnstableRangeError", "microchiral_direct",
    "microchiral_unitary", "MicrochiralExpansion", "microchiral_expansion",
    "chiral_series", "genus_free_energy", "area_zero", "term_genus",
    "microchiral_numeric", "sphere_prefactors_agree",
]

CoefficientKey = tuple[int, tuple[Partition, ...]]   # (t power, markers)


class UnstableRangeError(ValueError):
    """Expansion requested with d > N, where Y_N^d is a proper subset of Y^d."""


@dataclass(frozen=True)
class Spacetime:
    holes: int = 0
    handles: int = 0

    def __post_init__(self):
        if self.holes < 0 or self.handles < 0:
            raise ValueError("holes and handles must be nonnegative")

    @property
    def euler(self) -> int:
        return 2 - 2 * self.handles - self.holes

    @property
    def omega_power(self) -> int:
        return self.euler

    @classmethod
    def of(cls, geo: "Geometry | str") -> "Spacetime":
        g = geometry(geo)
        return cls(g.holes, g.handles)

    def template(self) -> Geometry:
        for g in _templates():
            if (g.holes, g.handles) == (self.holes, self.handles):
                return g
        return Geometry(f"m={self.holes},n={self.handles}", self.holes, self.handles)


def _templates() -> Iterator[Geometry]:
    from .hurwitz import GEOMETRIES
    return iter(dict.fromkeys(GEOMETRIES.values()))


@dataclass
class MicrochiralResult:
    """Coefficients of z^d t^k P in Z_N^d, keyed by (k, markers)."""

    spacetime: Spacetime
    d: int
    N: int
    t_order: int
    coefficients: dict[CoefficientKey, Fraction] = field(default_factory=dict)

    def __getitem__(self, key: CoefficientKey) -> Fraction:
        return self.coefficients.get(key, Fraction(0))

    def nonzero(self) -> dict[CoefficientKey, Fraction]:
        return {k: c for k, c in self.coefficients.items() if c}

    def same_values(self, other: "MicrochiralResult") -> bool:
        return self.nonzero() == other.nonzero()


def _marker_tuples(d: int, m: int):
    return itertools.product(tuple(partitions(d)), repeat=m)


def microchiral_direct(s: Spacetime, d: int, N: int, t_order: int) -> MicrochiralResult:
    """Sum the Gross-Taylor formula over Y_N^d with Psi expanded to t^t_order."""
    if N < 1 or d < 0:
        raise ValueError("need N >= 1 and d >= 0")
    e = s.omega_power
    q = Fraction(1, N)
    pref = Fraction(N) ** (e * d) / math.factorial(d)
    out = MicrochiralResult(s, d, N, t_order)
    for lam in partitions(d, N):
        om = omega_hat(lam, q)
        if om == 0 and e < 0:
            raise ZeroDivisionError(f"Omega_1/N vanishes on {lam}")
        # (dim/d!)^(2-2n) = dim^2/d! * 1/d! * H^n
        base = (Fraction(dimension(lam) ** 2, math.factorial(d)) * hhat(lam) ** s.handles
                * om ** e * pref)
        kh = Fraction(-khat(lam), N)
        for markers in _marker_tuples(d, s.holes):
            w = base
            for alpha in markers:
                w *= central_character(alpha, lam)
            if not w:
                continue
            for k in range(t_order + 1):
                key = (k, markers)
                out.coefficients[key] = out[key] + w * kh ** k / math.factorial(k)
    return out


def microchiral_unitary(s: Spacetime, d: int, N: int, t_order: int) -> MicrochiralResult:
    """The same coefficients from the unitary-group side.

    Uses sum_lam dim W^(2-2n-m) prod s_lam(U_i) exp(-t C(lam) / 2N) with Weyl's
    dimension formula, the Casimir sum and s_lam = sum chi/z_alpha p_alpha,
    after absorbing exp(-t d / 2) into z^d.
    """
    e = s.omega_power
    out = MicrochiralResult(s, d, N, t_order)
    for lam in partitions(d, N):
        wdim = Fraction(weyl_dimension(lam, N))
        base = wdim ** e
        # -t(C - dN)/(2N): the Casimir minus its d-linear part
        rate = Fraction(-(quadratic_casimir(lam, N) - d * N), 2 * N)
        for markers in _marker_tuples(d, s.holes):
            w = base
            for alpha in markers:
                w *= Fraction(mn_character(lam, alpha), centralizer_order(alpha))
            if not w:
                continue
            for k in range(t_order + 1):
                key = (k, markers)
                out.coefficients[key] = out[key] + w * rate ** k / math.factorial(k)
    return out


def microchiral_numeric(s: Spacetime, d: int, N: int, t, dps: int = 30):
    """Z_N^d at U_i = I and z = exp(-t/2), as an mpmath number (display only)."""
    import mpmath

    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        total = mpmath.mpf(0)
        for lam in partitions(d, N):
            wdim = weyl_dimension(lam, N)
            total += (mpmath.mpf(wdim) ** (2 - 2 * s.handles)
                      * mpmath.exp(-t * quadratic_casimir(lam, N) / (2 * N)))
        return +total


# --------------------------------------------------------------------------
# expansion mode

@dataclass
class MicrochiralExpansion:
    """Hurwitz-number coefficients of the 1/N expansion of Z_N^d.

    ``terms`` maps (markers, r, levels, s) to the integer expectation
    <H^n K_markers K^r L_levels M_s>.  Its contribution to the coefficient of
    z^d t^r P is N^(e d) / d! * (-1)^r / (r! N^r) * N^-(sum levels) * (-1/N)^s.
    """

    geometry: Geometry
    d: int
    N: int
    t_order: int
    s_order: int
    terms: dict[tuple, int] = field(default_factory=dict)

    def weight(self, r: int, levels: tuple[int, ...], s: int) -> Fraction:
        e = self.geometry.omega_power
        N = Fraction(self.N)
        return (N ** (e * self.d) / math.factorial(self.d)
                * Fraction((-1) ** (r + s), math.factorial(r)) / N ** (r + sum(levels) + s))

    def partial_sum(self) -> MicrochiralResult:
        out = MicrochiralResult(Spacetime.of(self.geometry), self.d, self.N, self.t_order)
        for (markers, r, levels, s), val in self.terms.items():
            key = (r, markers)
            out.coefficients[key] = out[key] + self.weight(r, levels, s) * val
        return out

    def tail(self) -> MicrochiralResult:
        """Exact remainder direct - partial_sum from the Newton identity.

        With q = 1/N and contents c, sum_{s<=S} (-q)^s h_s = Omega^-1 (1 + T_S)
        where T_S = sum_{k=S+1}^{S+d} q^k sum_{a+s=k, s<=S} (-1)^s e_a h_s.
        """
        geo = self.geometry
        out = MicrochiralResult(Spacetime.of(geo), self.d, self.N, self.t_order)
        if not geo.monotone:
            return out
        d, S = self.d, self.s_order
        q = Fraction(1, self.N)
        e = geo.omega_power
        for lam in partitions(d):
            c = contents(lam)
            tail = Fraction(0)
            for k in range(S + 1, S + d + 1):
                inner = sum((-1) ** s * elementary(c, k - s) * complete(c, s)
                            for s in range(max(0, k - d), S + 1))
                tail += q ** k * inner
            base = (Fraction(dimension(lam) ** 2, math.factorial(d)) * hhat(lam) ** geo.handles
                    * Fraction(self.N) ** (e * d) / math.factorial(d)
                    / omega_hat(lam, q) * tail)
            kh = Fraction(-khat(lam), self.N)
            for markers in _marker_tuples(d, geo.holes):
                w = base
                for alpha in markers:
                    w *= central_character(alpha, lam)
                for k in range(self.t_order + 1):
                    key = (k, markers)
                    out.coefficients[key] = out[key] - w * kh ** k / math.factorial(k)
        return out

    def resummed(self) -> MicrochiralResult:
        """partial_sum + tail; equals microchiral_direct exactly."""
        a, b = self.partial_sum(), self.tail()
        out = MicrochiralResult(a.spacetime, self.d, self.N, self.t_order)
        for key in set(a.coefficients) | set(b.coefficients):
            out.coefficients[key] = a[key] + b[key]
        return out


def microchiral_expansion(geo: "Geometry | str | Spacetime", d: int, N: int,
                          t_order: int, s_order: int = 0) -> MicrochiralExpansion:
    """Expectation coefficients of the 1/N expansion in the stable range."""
    if isinstance(geo, Spacetime):
        geo = geo.template()
    geo = geometry(geo)
    geo.check_supported()
    if not 1 <= d <= N:
        raise UnstableRangeError(
            f"expansion mode needs 1 <= d <= N (got d={d}, N={N}); for d > N the "
            "lambda-sum is not a Plancherel expectation, use microchiral_direct")
    out = MicrochiralExpansion(geo, d, N, t_order, s_order if geo.monotone else 0)
    for markers in _marker_tuples(d, geo.holes):
        for levels in itertools.product(range(d), repeat=geo.level_count):
            for s in range(out.s_order + 1):
                for r in range(t_order + 1):
                    word = geometry_word(geo, markers, r, levels, s)
                    val = plancherel(word, d)
                    if val:
                        out.terms[markers, r, levels, s] = int(val)
    return out


def sphere_prefactors_agree(d: int, N: int) -> bool:
    """(z N^2)^d / d! from the sphere formula against the generic (z N^e)^d / d!."""
    generic = Fraction(N) ** (Spacetime(0, 0).omega_power * d) / math.factorial(d)
    return generic == Fraction(N ** 2) ** d / math.factorial(d)


# --------------------------------------------------------------------------
# chiral Gross-Taylor series

def chiral_series(geo: "Geometry | str", max_d: int, t_order: int,
                  s_order: int = 0) -> tuple[FormalSeries, FormalSeries]:
    """(Z, F) with F = log Z, hbar standing in for 1/N."""
    z = template_series(geo, max_d, t_order, s_order, hbar=True)
    return z, series_log(z)


def term_genus(geo: "Geometry | str", key) -> int | None:
    """Riemann-Hurwitz genus of a series term, or None if not an integer >= min."""
    geo = geometry(geo)
    d, t, u, v, _, markers = key
    chi2 = d * (2 * geo.handles - 2) + sum(d - len(a) for a in markers) + t + u + v
    if d == 0 or chi2 % 2:
        return None
    g = chi2 // 2 + 1
    return g if g >= geo.min_genus else None


def genus_free_energy(geo: "Geometry | str", g: int, max_d: int, t_order: int,
                      s_order: int = 0) -> FormalSeries:
    """F_g: the genus-g terms of F = log Z divided by hbar^(2g - 2).

    Complete up to z^max_d only if t_order (and s_order) reach the largest
    step count of genus g at that degree.
    """
    geo = geometry(geo)
    if g < geo.min_genus:
        raise ValueError(f"{geo.name} has no genus {g} terms (minimum {geo.min_genus})")
    _, f = chiral_series(geo, max_d, t_order, s_order)
    terms = [((d, t, u, v, h - (2 * g - 2), m), c)
             for (d, t, u, v, h, m), c in f.items()
             if term_genus(geo, (d, t, u, v, h, m)) == g]
    return FormalSeries(terms, f.orders, f.slots, f.hbar_slope)


def area_zero(geo: "Geometry | str", max_d: int, s_order: int = 0) -> FormalSeries:
    """The chiral series at t = 0."""
    return template_series(geo, max_d, 0, s_order, hbar=True)


def cauchy_series(max_d: int) -> FormalSeries:
    """exp(sum_d z^d/d p_d (x) p_d), the product form of the area-zero cylinder."""
    orders = Orders(z=max_d)
    f = FormalSeries([((d, 0, 0, 0, 0, ((d,), (d,))), Fraction(1, d))
                      for d in range(1, max_d + 1)], orders, slots=2)
    return series_exp(f)


def schur_cauchy_series(max_d: int) -> FormalSeries:
    """1 + sum_d z^d sum_lam s_lam (x) s_lam expanded in power sums."""
    from .series import schur_in_powersums

    orders = Orders(z=max_d)
    terms = [((0, 0, 0, 0, 0, ((), ())), Fraction(1))]
    for d in range(1, max_d + 1):
        for lam in partitions(d):
            sl = schur_in_powersums(lam)
            for (a, ca), (b, cb) in itertools.product(sl.items(), repeat=2):
                terms.append(((d, 0, 0, 0, 0, (a, b)), ca * cb))
    return FormalSeries(terms, orders, slots=2)


def stirling_sphere_series(max_d: int) -> FormalSeries:
    """exp(hbar^-2 sum_d z^d/d), the area-zero sphere at u = v = 1."""
    orders = Orders(z=max_d)
    f = FormalSeries([((d, 0, 0, 0, -2, ()), Fraction(1, d)) for d in range(1, max_d + 1)],
                     orders, hbar_slope=2)
    return series_exp(f)


def stirling_coefficient(d: int, a: int) -> Fraction:
    return Fraction(stirling_cycle(d, d - a), math.factorial(d))
