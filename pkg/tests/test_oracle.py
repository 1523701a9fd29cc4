import itertools
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_cayley import oracle
from hurwitz_cayley.oracle import ResourceLimitError, SingularMatrixError, WalkMode
from hurwitz_cayley.partitions import class_size, partitions
from hurwitz_cayley.perms import compose, distance, identity, inverse, transposition


def test_walk_examples():
    assert oracle.walk_count(3, identity(3), identity(3), 0, "strict_increasing") == 1
    assert oracle.walk_count(3, identity(3), (2, 3, 1), 2, "strict_increasing") == 1
    assert oracle.walk_count(2, identity(2), identity(2), 2, "weak_increasing") == 1
    assert oracle.walk_count(0, (), (), 0) == 1


def test_walk_parity_and_total():
    d = 4
    ends = oracle.walk_endpoints(identity(d), 3)
    assert sum(ends.values()) == 6**3
    assert all(distance(identity(d), p) % 2 == 1 for p in ends)


@pytest.mark.parametrize("d", range(2, 5))
def test_memo_matches_dfs(d):
    rho = identity(d)
    for sigma in itertools.permutations(range(1, d + 1)):
        for r in range(4):
            assert (oracle.walk_count(d, rho, sigma, r)
                    == oracle.walk_count(d, rho, sigma, r, memo=True))


def test_memo_only_unrestricted():
    with pytest.raises(ValueError):
        oracle.walk_count(3, identity(3), identity(3), 2, "weak_increasing", memo=True)


def test_mode_parsing():
    assert WalkMode.parse("strict") is WalkMode.STRICT_INCREASING
    assert WalkMode.parse("weak_decreasing") is WalkMode.WEAK_DECREASING
    assert WalkMode.WEAK_INCREASING.reversed() is WalkMode.WEAK_DECREASING
    with pytest.raises(ValueError):
        WalkMode.parse("sideways")


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)), st.integers(0, 4))
def test_weak_increasing_equals_weak_decreasing(rho, sigma, r):
    # Reversing a walk reverses its labels and swaps the endpoints.
    rho, sigma = tuple(rho), tuple(sigma)
    up = oracle.walk_count(4, rho, sigma, r, "weak_increasing")
    down = oracle.walk_count(4, sigma, rho, r, "weak_decreasing")
    assert up == down


def test_resource_guards():
    with pytest.raises(ResourceLimitError):
        oracle.walk_count(9, identity(9), identity(9), 1)
    with pytest.raises(ResourceLimitError):
        oracle.walk_count(3, identity(3), identity(3), 11)
    with pytest.raises(ResourceLimitError):
        oracle.group_table(7)


def test_resource_override(monkeypatch):
    monkeypatch.setenv("HC_MAX_DEGREE", "9")
    assert oracle.walk_count(9, identity(9), identity(9), 0) == 1


@pytest.mark.parametrize("d", range(2, 6))
def test_strict_walk_unique(d):
    for rho in itertools.permutations(range(1, d + 1)):
        hits = oracle.strict_walk_endpoints(rho)
        assert len(hits) == len(list(itertools.permutations(range(d))))
        for (sigma, length), count in hits.items():
            assert count == 1 and length == distance(rho, sigma)


def test_geodesic_examples():
    assert oracle.geodesic_count(identity(3), identity(3)) == 1
    assert oracle.geodesic_count(identity(3), (2, 3, 1)) == 3
    assert oracle.geodesic_count(identity(4), (2, 1, 4, 3)) == 2
    assert oracle.hurwitz_cayley_formula((1, 1, 1)) == 1
    assert oracle.hurwitz_cayley_formula((3,)) == 3
    assert oracle.hurwitz_cayley_formula((2, 2)) == 2
    assert oracle.monotone_geodesic_count(identity(3), (2, 3, 1)) == 2
    assert oracle.catalan_product((3,)) == 2
    assert oracle.catalan_product((2, 2)) == 1


def test_operator_matrix_examples():
    e = oracle.group_table(2).delta(identity(2))
    assert np.array_equal(oracle.operator_matrix(e, 2), oracle.identity_matrix(2))
    K = oracle.operator_matrix(oracle.transposition_sum(2), 2)
    assert K.tolist() == [[0, 1], [1, 0]]
    q = Fraction(1, 3)
    assert oracle.operator_matrix(oracle.omega_element(q, 2), 2).tolist() == [[1, q], [q, 1]]


def test_operator_matrix_is_right_regular():
    d = 3
    table = oracle.group_table(d)
    elem = table.delta(transposition(1, 2, d))
    m = oracle.operator_matrix(elem, d)
    for a, rho in enumerate(table.perms):
        for b, sigma in enumerate(table.perms):
            assert m[b, a] == int(compose(inverse(rho), sigma) == transposition(1, 2, d))


def test_exact_det_examples():
    assert oracle.exact_det(oracle.identity_matrix(3)) == 1
    m = oracle.operator_matrix(oracle.omega_element(Fraction(1, 3), 2), 2)
    assert oracle.exact_det(m) == Fraction(8, 9)
    singular = oracle.operator_matrix(oracle.omega_element(Fraction(1, 2), 3), 3)
    assert oracle.exact_det(singular) == 0
    with pytest.raises(SingularMatrixError):
        oracle.exact_inverse(singular)


def test_exact_inverse():
    m = oracle.operator_matrix(oracle.omega_element(Fraction(1, 5), 3), 3)
    inv = oracle.exact_inverse(m)
    assert np.array_equal(m.dot(inv), oracle.identity_matrix(6))


@pytest.mark.parametrize("d,r", [(3, 0), (4, 1), (4, 3), (5, 3)])
def test_jm_identity(d, r):
    assert oracle.jm_identity_check(d, r)


def test_transitive_examples():
    assert oracle.transitive_tuple_count(1, []) == 1
    assert oracle.transitive_tuple_count(2, [("K",), ("K",)]) == 1
    # All four pairs in S2 commute; only the three whose entries include (1 2) are transitive.
    assert oracle.transitive_tuple_count(2, [("H",)], transitive=False) == 4
    assert oracle.transitive_tuple_count(2, [("H",)]) == 3


def test_transitive_vs_brute_force():
    d = 3
    group = list(itertools.permutations(range(1, d + 1)))
    transp = [transposition(i, j, d) for i, j in itertools.combinations(range(1, d + 1), 2)]

    def orbit_all(gens):
        seen, todo = {1}, [1]
        while todo:
            x = todo.pop()
            for g in gens:
                y = g[x - 1]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == d

    for alpha in partitions(d):
        cls = [p for p in group if oracle.group_table(d).ctype[oracle.group_table(d).index(p)] == alpha]
        for r in range(4):
            want = 0
            for a in cls:
                for steps in itertools.product(transp, repeat=r):
                    prod = a
                    for t in steps:
                        prod = compose(prod, t)
                    if prod == identity(d) and orbit_all((a,) + steps):
                        want += 1
            spec = [("class", alpha)] + [("K",)] * r
            assert oracle.transitive_tuple_count(d, spec) == want


def test_commuting_pairs():
    for d, want in [(1, 1), (2, 4), (3, 18), (4, 120), (5, 840)]:
        assert int(oracle.commutator_sum(d)[0]) == want


def test_class_product():
    assert oracle.class_product((2, 1), (2, 1)) == {(1, 1, 1): 3, (3,): 3}
    assert oracle.class_product((1, 1, 1), (3,)) == {(3,): 1}
    for beta, gamma in itertools.product(partitions(5), repeat=2):
        prod = oracle.class_product(beta, gamma)
        assert all(c > 0 for c in prod.values())
        assert sum(c * class_size(eta) for eta, c in prod.items()) == class_size(beta) * class_size(gamma)


def test_tuple_tally_total_mass():
    tally = oracle.tuple_tally(3, [("K",), ("K",)])
    assert sum(tally.values()) == 9
    grid = oracle.tuple_tally_grid(3, [], 2, 2, transitive=False)
    assert sum(grid[0, 0].values()) == 1
    assert sum(grid[0, 2].values()) == 9


def test_monotone_element_matches_weak_walks():
    d = 4
    for r in range(4):
        elem = oracle.monotone_element(r, d)
        ends = oracle.walk_endpoints(identity(d), r, "weak_increasing")
        table = oracle.group_table(d)
        assert Counter({table.perms[k]: int(c) for k, c in enumerate(elem) if c}) == ends


def test_export_dot():
    text = oracle.export_dot(2)
    assert text.startswith("graph S2 {")
    assert '"[1,2]" -- "[2,1]" [label=2];' in text
    assert text.count("--") == 1
    assert oracle.export_dot(3).count("--") == 9
