import itertools
import math
from fractions import Fraction

import pytest

from hurwitz_cayley import hurwitz, ym2
from hurwitz_cayley.hurwitz import ExpectationWord
from hurwitz_cayley.partitions import partitions
from hurwitz_cayley.series import series_exp
from hurwitz_cayley.ym2 import Spacetime

TEMPLATES = ["cylinder", "torus", "sphere", "disc", "pants", "one-holed-torus"]


def test_spacetime():
    assert Spacetime(0, 0).euler == 2
    assert Spacetime(3, 0).omega_power == -1
    assert Spacetime.of("torus") == Spacetime(0, 1)
    assert Spacetime(2, 0).template().name == "cylinder"
    assert Spacetime(0, 3).template().name == "m=0,n=3"
    with pytest.raises(ValueError):
        Spacetime(-1, 0)


def test_sphere_degree_one():
    res = ym2.microchiral_direct(Spacetime(0, 0), 1, 6, 3)
    assert res.nonzero() == {(0, ()): 36}


def test_torus_degree_two_is_cosh():
    N = 5
    res = ym2.microchiral_direct(Spacetime(0, 1), 2, N, 6)
    for k in range(7):
        want = Fraction(2, math.factorial(k) * N**k) if k % 2 == 0 else 0
        assert res[k, ()] == want


def test_cylinder_orthogonality():
    res = ym2.microchiral_direct(Spacetime(2, 0), 2, 4, 0)
    assert res[0, ((2,), (2,))] == Fraction(1, 2)
    assert res[0, ((2,), (1, 1))] == 0


def test_cylinder_expansion_is_double_hurwitz():
    exp = ym2.microchiral_expansion("cylinder", 3, 5, 4)
    for (markers, r, levels, s), val in exp.terms.items():
        assert val == hurwitz.double_hurwitz(*markers, r)


def test_expansion_examples():
    exp = ym2.microchiral_expansion("sphere", 1, 5, 3)
    assert exp.terms == {((), 0, (0, 0), 0): 1}
    exp = ym2.microchiral_expansion("pants", 2, 5, 0, 1)
    assert exp.terms[((2,), (2,), (2,)), 0, (), 1] == 1


def test_unstable_range_rejected():
    with pytest.raises(ym2.UnstableRangeError):
        ym2.microchiral_expansion("torus", 4, 3, 2)
    # direct mode still sums over diagrams with at most N rows
    assert ym2.microchiral_direct(Spacetime(0, 1), 4, 3, 0)[0, ()] > 0


@pytest.mark.parametrize("name", TEMPLATES)
@pytest.mark.parametrize("d", [1, 2, 3])
def test_resummation_and_unitary(name, d):
    st = Spacetime.of(name)
    for N in (5, 7):
        direct = ym2.microchiral_direct(st, d, N, 3)
        assert ym2.microchiral_expansion(name, d, N, 3, 2).resummed().same_values(direct)
        assert ym2.microchiral_unitary(st, d, N, 3).same_values(direct)


def test_direct_is_plancherel_with_omega_powers():
    d, N = 3, 5
    for name in TEMPLATES:
        st = Spacetime.of(name)
        geo = hurwitz.geometry(name)
        direct = ym2.microchiral_direct(st, d, N, 2)
        for markers in [tuple(p) for p in itertools.product(partitions(d), repeat=geo.holes)]:
            for r in range(3):
                word = ExpectationWord(handles=geo.handles, classes=markers, r=r,
                                       omega_power=st.omega_power, q=Fraction(1, N))
                want = (Fraction(N) ** (st.omega_power * d) / math.factorial(d)
                        * Fraction((-1) ** r, math.factorial(r) * N**r) * hurwitz.plancherel(word, d))
                assert direct[r, markers] == want


def test_numeric_display_mode():
    pytest.importorskip("mpmath")
    val = ym2.microchiral_numeric(Spacetime(0, 1), 2, 5, 0)
    assert abs(float(val) - 2) < 1e-20


def test_sphere_prefactor():
    assert all(ym2.sphere_prefactors_agree(d, N) for d in range(1, 5) for N in range(1, 8))


def test_chiral_series_examples():
    _, f = ym2.chiral_series("cylinder", 1, 2)
    assert f.coefficient(1, 0, hbar=0, markers=((1,), (1,))) == 1
    z, f = ym2.chiral_series("torus", 3, 4)
    for d in range(1, 4):
        for r in range(5):
            want = hurwitz.connected(ExpectationWord(handles=1, r=r), d)
            got = f.coefficient(d, r, hbar=r) * math.factorial(d) * math.factorial(r) * (-1) ** r
            assert got == want


@pytest.mark.parametrize("name", TEMPLATES)
def test_exp_log_consistency(name):
    z, f = ym2.chiral_series(name, 4 if name != "pants" else 3, 2, 1)

    assert series_exp(f) == z


def test_sphere_hbar_collects_genus():
    _, f = ym2.chiral_series("sphere", 3, 4)
    for key, _c in f.items():
        g = ym2.term_genus("sphere", key)
        assert g is not None and key[4] == 2 * g - 2


def test_genus_free_energy():
    f1 = ym2.genus_free_energy("torus", 1, 2, 2)
    assert f1.coefficient(1) == 1
    f0 = ym2.genus_free_energy("cylinder", 0, 1, 0)
    # the leftover hbar power is the total marker length
    assert f0.coefficient(1, hbar=2, markers=((1,), (1,))) == 1
    with pytest.raises(ValueError):
        ym2.genus_free_energy("torus", 0, 2, 2)


def test_area_zero_examples():
    assert ym2.area_zero("cylinder", 3) == ym2.cauchy_series(3)
    w = ym2.area_zero("sphere", 3)
    assert w.coefficient(3, 0, 1, 1, -4) == Fraction(1, 2)
    w = ym2.area_zero("pants", 1)
    assert w.coefficient(1, hbar=1, markers=((1,), (1,), (1,))) == 1
