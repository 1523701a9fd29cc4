import itertools
import math
from fractions import Fraction

import pytest

from hurwitz_cayley.partitions import (
    catalan, conjugate, contents, dim_unitary, dimension, hook_lengths, partition_count,
    partitions, pochhammer, quadratic_casimir, stirling_cycle, weyl_dimension,
)
from hurwitz_cayley.perms import num_cycles


def count_partitions(n, largest=None):
    """Recursive partition count, independent of the generator."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def test_enumeration_examples():
    assert len(list(partitions(4))) == 5
    assert list(partitions(3, max_rows=2)) == [(3,), (2, 1)]
    assert list(partitions(0)) == [()]


@pytest.mark.parametrize("d", range(0, 13))
def test_partition_count(d):
    parts = list(partitions(d))
    assert len(parts) == partition_count(d) == count_partitions(d)
    assert parts == sorted(parts, reverse=True)
    assert all(sum(p) == d for p in parts)


def test_dimension_examples():
    assert dimension((5,)) == 1
    assert dimension((2, 1)) == 2
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert sum(dimension(lam) ** 2 for lam in partitions(4)) == 24


@pytest.mark.parametrize("d", range(0, 10))
def test_sum_of_squares(d):
    assert sum(dimension(lam) ** 2 for lam in partitions(d)) == math.factorial(d)


def test_conjugate_and_hooks():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    for lam in partitions(7):
        assert conjugate(conjugate(lam)) == lam
        assert dimension(lam) == dimension(conjugate(lam))


def test_contents_examples():
    assert contents((1,)) == (0,)
    assert sorted(contents((2, 1))) == [-1, 0, 1]
    assert contents((3,)) == (0, 1, 2)


@pytest.mark.parametrize("d", range(1, 9))
def test_content_sum_formula(d):
    for lam in partitions(d):
        want = sum(k * (k - 1) // 2 - i * k for i, k in enumerate(lam))
        assert sum(contents(lam)) == want


def test_pochhammer_examples():
    assert pochhammer((1,), 7) == 7
    assert pochhammer((2, 1), 3) == 24
    assert pochhammer((4,), Fraction(1, 2)) == Fraction(1, 2) * Fraction(3, 2) * Fraction(5, 2) * Fraction(7, 2)


def test_dim_unitary_examples():
    assert dim_unitary((1,), 5) == 5
    assert dim_unitary((2,), 2) == 3
    assert dim_unitary((1, 1), 2) == 1
    with pytest.raises(ValueError):
        dim_unitary((1, 1, 1), 2)


def test_dim_unitary_integral_and_weyl():
    for d, N in itertools.product(range(1, 7), range(1, 9)):
        for lam in partitions(d, N):
            assert dim_unitary(lam, N) == weyl_dimension(lam, N) > 0


def test_casimir_small():
    assert quadratic_casimir((2,), 2) == 6
    assert quadratic_casimir((1, 1), 2) == 2


def test_stirling_examples():
    assert stirling_cycle(5, 5) == 1
    assert stirling_cycle(3, 2) == 3
    assert stirling_cycle(4, 1) == 6


@pytest.mark.parametrize("d", range(0, 11))
def test_stirling_row_sums(d):
    assert sum(stirling_cycle(d, d - a) for a in range(d + 1)) == math.factorial(d)


def test_stirling_against_filter():
    for d in range(1, 7):
        counts = [0] * (d + 1)
        for p in itertools.permutations(range(1, d + 1)):
            counts[num_cycles(p)] += 1
        assert counts == [stirling_cycle(d, k) for k in range(d + 1)]


def test_catalan():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
