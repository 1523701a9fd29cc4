"""Invariant suites shared by ``hurwitz-cayley verify`` and the test suite.

Each check returns a list of failure descriptions; an empty list is a pass.
``run_suite`` reports (passed, failed) counts over the individual cases.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import hurwitz, oracle, ym2
from .characters import det_omega, khat, singular_points
from .hurwitz import ExpectationWord, GEOMETRIES
from .partitions import partition_count, partitions, quadratic_casimir
from .perms import distance, enumerate_class, identity, compose

Case = tuple[str, bool]


def strict_uniqueness(d: int) -> Iterable[Case]:
    """Exactly one strictly increasing walk between any two vertices."""
    table_perms = list(itertools.permutations(range(1, d + 1)))
    for rho in table_perms:
        hits = oracle.strict_walk_endpoints(rho)
        by_end: dict = {}
        for (sigma, length), c in hits.items():
            by_end.setdefault(sigma, []).append((length, c))
        ok = len(by_end) == len(table_perms) and all(
            v == [(distance(rho, sigma), 1)] for sigma, v in by_end.items())
        yield f"d={d} rho={rho}", ok


def jm_polynomials(d: int, r_max: int = 5) -> Iterable[Case]:
    for r in range(r_max + 1):
        yield f"d={d} r={r}", oracle.jm_identity_check(d, r)


def geodesic_formulas(d: int) -> Iterable[Case]:
    shift = tuple(range(2, d + 1)) + (1,) if d > 1 else identity(d)
    for alpha in partitions(d):
        pi = next(enumerate_class(alpha))
        for rho in (identity(d), shift):
            sigma = compose(rho, pi)
            yield (f"d={d} alpha={alpha} rho={rho} geodesics",
                   oracle.geodesic_count(rho, sigma) == oracle.hurwitz_cayley_formula(alpha))
            yield (f"d={d} alpha={alpha} rho={rho} monotone",
                   oracle.monotone_geodesic_count(rho, sigma) == oracle.catalan_product(alpha))


def omega_matrix(d: int, q) -> np.ndarray:
    return oracle.operator_matrix(oracle.omega_element(Fraction(q), d), d)


def determinant_formula(d: int, qs=(Fraction(1, 3), Fraction(-1, 7))) -> Iterable[Case]:
    for q in qs:
        yield f"d={d} q={q} det", oracle.exact_det(omega_matrix(d, q)) == det_omega(d, q)
    singular = set(singular_points(d))
    for k in range(1, d + 3):
        for q in (Fraction(1, k), Fraction(-1, k)):
            yield f"d={d} q={q} singular", (det_omega(d, q) == 0) == (q in singular)


def omega_inverse_formal(d: int) -> Iterable[Case]:
    """Coefficient of q^k in Omega_q * sum (-q)^r M_r is delta_k0 I, k <= 2d."""
    n = math.factorial(d)
    L = [np.asarray(oracle.operator_matrix(oracle.level_set(a, d), d), dtype=np.int64)
         for a in range(d)]
    M = [np.asarray(oracle.operator_matrix(oracle.monotone_element(r, d), d), dtype=np.int64)
         for r in range(2 * d + 1)]
    for k in range(2 * d + 1):
        acc = np.zeros((n, n), dtype=np.int64)
        for a in range(min(k, d - 1) + 1):
            acc += (-1) ** (k - a) * (L[a] @ M[k - a])
        expect = np.eye(n, dtype=np.int64) if k == 0 else np.zeros((n, n), dtype=np.int64)
        yield f"d={d} q^{k}", bool(np.array_equal(acc, expect))


def tail_bound(d: int, R: int) -> float:
    """Bound on |q^r M_r| entries summed over r > R at q = 1/(2(d-1))."""
    return sum(math.comb(r + d - 1, d - 1) * 2.0 ** -r for r in range(R + 1, R + 400))


def omega_inverse_numeric(d: int, R: int = 60) -> Iterable[Case]:
    if d < 2:
        return
    q = Fraction(1, 2 * (d - 1))
    exact = oracle.exact_inverse(omega_matrix(d, q))
    partial = np.zeros(exact.shape, dtype=object)
    partial[:] = Fraction(0)
    for r in range(R + 1):
        Mr = oracle.operator_matrix(oracle.monotone_element(r, d), d)
        partial = partial + Mr * ((-q) ** r)
    err = max(abs(float(x)) for x in (partial - exact).ravel())
    yield f"d={d} R={R} err={err:.3g}", err < 1e-9 and err <= tail_bound(d, R)


def casimir_swap(d: int, n_max: int = 8) -> Iterable[Case]:
    for lam in partitions(d):
        for N in range(max(len(lam), 1), n_max + 1):
            yield (f"lam={lam} N={N}",
                   d * N + 2 * khat(lam) == quadratic_casimir(lam, N))


def word_family(d: int, max_classes: int = 3, max_steps: int = 4,
                handles: Iterable[int] = (0, 1)) -> Iterable[ExpectationWord]:
    parts = list(partitions(d))
    for n in handles:
        for k in range(max_classes + 1):
            for classes in itertools.combinations_with_replacement(parts, k):
                for r in range(max_steps + 1):
                    for s in range(max_steps - r + 1):
                        yield ExpectationWord(handles=n, classes=classes, r=r, s=s)


def plancherel_vs_oracle(d: int) -> Iterable[Case]:
    """Character sums against tuple counts by explicit convolution."""
    for word in word_family(d):
        fast = hurwitz.plancherel(word, d)
        slow = oracle.expectation_by_matrices(d, hurwitz.factor_spec(word))
        yield f"d={d} {word}", fast == slow
    for a, b in itertools.product(range(d), repeat=2):
        for r in range(5):
            word = ExpectationWord(levels=(a, b), r=r)
            yield (f"d={d} levels={a},{b} r={r}",
                   hurwitz.plancherel(word, d)
                   == oracle.expectation_by_matrices(d, hurwitz.factor_spec(word)))


S_ORDER = 3


def microchiral_identities(d: int, Ns=(5, 7), t_order: int = 4) -> Iterable[Case]:
    for geo in dict.fromkeys(GEOMETRIES.values()):
        st = ym2.Spacetime.of(geo)
        for N in Ns:
            exp = ym2.microchiral_expansion(geo, d, N, t_order, S_ORDER)
            bad = [key for key, val in exp.terms.items()
                   if val != _oracle_term(geo, d, key)]
            yield f"{geo.name} d={d} N={N} coefficients", not bad
            direct = ym2.microchiral_direct(st, d, N, t_order)
            yield (f"{geo.name} d={d} N={N} resummation",
                   exp.resummed().same_values(direct))
            yield (f"{geo.name} d={d} N={N} unitary side",
                   ym2.microchiral_unitary(st, d, N, t_order).same_values(direct))


def _oracle_term(geo, d: int, key) -> int:
    markers, r, levels, s = key
    word = hurwitz.geometry_word(geo, markers, r, levels, s)
    return oracle.expectation_by_matrices(d, hurwitz.factor_spec(word))


def area_zero_cylinder(max_d: int = 4) -> Iterable[Case]:
    w = ym2.area_zero("cylinder", max_d)
    yield "cylinder = exp sum z^d/d p_d (x) p_d", w == ym2.cauchy_series(max_d)
    yield "cylinder = Schur form", w == ym2.schur_cauchy_series(max_d)


def area_zero_sphere(max_d: int = 6) -> Iterable[Case]:
    w = ym2.area_zero("sphere", max_d)
    for d in range(1, max_d + 1):
        for a, b in itertools.product(range(d), repeat=2):
            want = ym2.stirling_coefficient(d, a) if a == b else 0
            yield f"sphere d={d} a={a} b={b}", w.coefficient(d, 0, a, b, -2 * d + a + b) == want
    yield "sphere at u=v=1", w.collapse(u=True, v=True) == ym2.stirling_sphere_series(max_d)


def commuting_pairs(d: int) -> Iterable[Case]:
    pairs = int(oracle.commutator_sum(d)[0])
    want = partition_count(d) * math.factorial(d)
    yield f"d={d} commuting pairs", pairs == want
    yield (f"d={d} <H>", hurwitz.plancherel(ExpectationWord(handles=1), d) == want)


def connected_bridge(d: int, t_order: int = 4, s_order: int = 2) -> Iterable[Case]:
    for geo in dict.fromkeys(GEOMETRIES.values()):
        via_oracle = hurwitz.connected_table(geo, d, t_order, s_order, "oracle")
        via_series = hurwitz.connected_table(geo, d, t_order, s_order, "series")
        yield f"{geo.name} d={d} log Z = transitive", via_oracle == via_series
        vanishing = all(
            hurwitz.genus_label(hurwitz.geometry_word(geo, m, r, lv, s), d, geo.name) is not None
            for (m, r, lv, s) in via_oracle)
        yield f"{geo.name} d={d} Riemann-Hurwitz vanishing", vanishing


SUITES: dict[str, Callable[[int], Iterable[Case]]] = {
    "uniqueness": strict_uniqueness,
    "jm": jm_polynomials,
    "geodesics": geodesic_formulas,
    "det": determinant_formula,
    "omega-inverse": lambda d: itertools.chain(omega_inverse_formal(d),
                                               omega_inverse_numeric(d)),
    "casimir": casimir_swap,
    "plancherel": plancherel_vs_oracle,
    "microchiral": microchiral_identities,
    "area-zero": lambda d: itertools.chain(area_zero_cylinder(min(d, 4)),
                                           area_zero_sphere(d), commuting_pairs(d)),
    "connected": connected_bridge,
}


def failures(cases: Iterable[Case]) -> list[str]:
    return [name for name, ok in cases if not ok]


def run_suite(name: str, d: int) -> tuple[int, int]:
    passed = failed = 0
    for _, ok in SUITES[name](d):
        if ok:
            passed += 1
        else:
            failed += 1
    return passed, failed
