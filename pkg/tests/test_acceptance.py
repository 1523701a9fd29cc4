"""Acceptance criteria, each run over its full stated range.

Every test prints one ``criterion N: PASS|FAIL`` line, repeated in the
pytest terminal summary.  ``python3 tests/test_acceptance.py`` prints the
lines alone.
"""

import itertools
import time
from fractions import Fraction

import pytest

from hurwitz_cayley import checks
from hurwitz_cayley.characters import det_omega, omega_hat
from hurwitz_cayley.oracle import exact_det
from hurwitz_cayley.partitions import dimension, partitions

def report(label: str, cases, detail: str = "", record=None) -> list[str]:
    start = time.perf_counter()
    cases = list(cases)
    bad = [name for name, ok in cases if not ok]
    line = (f"criterion {label}: {'PASS' if not bad else 'FAIL'} "
            f"({len(cases) - len(bad)}/{len(cases)} cases, {time.perf_counter() - start:.1f}s)"
            + (f" {detail}" if detail else ""))
    print(line)
    if record:
        record(line)
    return bad


def test_criterion_1_unique_strict_geodesic(acceptance_line):
    cases = itertools.chain.from_iterable(checks.strict_uniqueness(d) for d in range(2, 7))
    assert report("1", cases, record=acceptance_line) == []


def test_criterion_2_jm_polynomials(acceptance_line):
    cases = itertools.chain.from_iterable(checks.jm_polynomials(d, 5) for d in range(1, 6))
    assert report("2", cases, record=acceptance_line) == []


def test_criterion_3_geodesic_counts(acceptance_line):
    cases = itertools.chain.from_iterable(checks.geodesic_formulas(d) for d in range(1, 7))
    assert report("3", cases, record=acceptance_line) == []


def literal_det_formula(d, q):
    out = Fraction(1)
    for lam in partitions(d):
        out *= omega_hat(lam, q) ** dimension(lam)
    return out


@pytest.mark.xfail(strict=True, reason=(
    "prod Omega^(dim) is not the determinant of the d! x d! matrix: each irreducible "
    "occurs dim times in the regular representation, so the exponent is dim^2 "
    "(see test_criterion_4_determinant_dim_squared)"))
def test_criterion_4_determinant_literal(acceptance_line):
    cases = []
    for d in range(1, 6):
        for q in (Fraction(1, 3), Fraction(-1, 7)):
            exact = exact_det(checks.omega_matrix(d, q))
            cases.append((f"d={d} q={q}", exact == literal_det_formula(d, q)))
    q = Fraction(1, 3)
    cases.append(("d=3 stated closed form", det_omega(3, q) == (1 - q**2) ** 3 * (1 - 4 * q**2)))
    detail = "literal exponent dim; true exponent is dim^2"
    assert report("4", cases, detail, record=acceptance_line) == []


def test_criterion_4_determinant_dim_squared(acceptance_line):
    cases = itertools.chain.from_iterable(checks.determinant_formula(d) for d in range(1, 6))
    q = Fraction(1, 3)
    extra = [("d=3 closed form", det_omega(3, q) == (1 - q**2) ** 5 * (1 - 4 * q**2))]
    label = "4 (dim^2 exponent, singular set)"
    assert report(label, itertools.chain(cases, extra), record=acceptance_line) == []


def test_criterion_5_omega_inverse(acceptance_line):
    cases = itertools.chain.from_iterable(
        itertools.chain(checks.omega_inverse_formal(d), checks.omega_inverse_numeric(d, 60))
        for d in range(1, 5))
    assert report("5", cases, record=acceptance_line) == []


def test_criterion_6_plancherel_vs_oracle(acceptance_line):
    cases = itertools.chain.from_iterable(checks.plancherel_vs_oracle(d) for d in range(1, 6))
    assert report("6", cases, record=acceptance_line) == []


def test_criterion_7_microchiral(acceptance_line):
    cases = itertools.chain.from_iterable(
        checks.microchiral_identities(d, Ns=(5, 7)) for d in range(1, 5))
    assert report("7", cases, record=acceptance_line) == []


def test_criterion_8_casimir_swap(acceptance_line):
    cases = itertools.chain.from_iterable(checks.casimir_swap(d, 8) for d in range(0, 7))
    assert report("8", cases, record=acceptance_line) == []


def test_criterion_9_area_zero(acceptance_line):
    cases = itertools.chain(
        checks.area_zero_cylinder(4), checks.area_zero_sphere(6),
        itertools.chain.from_iterable(checks.commuting_pairs(d) for d in range(1, 6)))
    assert report("9", cases, record=acceptance_line) == []


def test_criterion_10_connected_bridge(acceptance_line):
    cases = itertools.chain.from_iterable(checks.connected_bridge(d) for d in range(1, 5))
    assert report("10", cases, record=acceptance_line) == []


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                pass
