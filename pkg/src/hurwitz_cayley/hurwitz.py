"""Plancherel expectations and Hurwitz numbers.

Every expectation is a raw count: ``<A>`` is the coefficient of the
identity in the central element A, computed as a character sum
``sum_lam dim(lam)^2 / d! * A^(lam)``.  The oracle counterparts in
``hurwitz_cayley.oracle`` enumerate the same tuples directly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import oracle
from .characters import (
    central_character, complete, elementary, hhat, khat, omega_hat,
)
from .partitions import (
    Partition, as_partition, class_size, contents, dimension, partitions,
)
from .series import FormalSeries, Orders, series_log

__all__ = [
    "ExpectationWord", "plancherel", "double_hurwitz", "coarse_double",
    "half_coarse", "mixed_expectation", "oracle_expectation", "factor_spec",
    "connected", "connection_coefficients", "weingarten", "Geometry",
    "GEOMETRIES", "geometry", "genus_label", "template_series",
    "geometry_word", "connected_table",
]


@dataclass(frozen=True)
class ExpectationWord:
    """H^handles * prod K_alpha * K^r * prod L_a * M_s * Omega_q^omega_power."""

    handles: int = 0
    classes: tuple[Partition, ...] = ()
    r: int = 0
    s: int = 0
    levels: tuple[int, ...] = ()
    omega_power: int = 0
    q: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(as_partition(a) for a in self.classes))
        object.__setattr__(self, "levels", tuple(self.levels))
        if min(self.handles, self.r, self.s, *self.levels, 0) < 0:
            raise ValueError("word exponents must be nonnegative")
        if self.omega_power and self.q is None:
            raise ValueError("an Omega power needs q")

    def degree(self) -> int | None:
        sizes = {sum(a) for a in self.classes}
        if len(sizes) > 1:
            raise ValueError(f"boundary classes of different sizes: {self.classes}")
        return sizes.pop() if sizes else None

    def eigenvalue(self, lam: Partition) -> Fraction:
        c = contents(lam)
        out = Fraction(hhat(lam)) ** self.handles
        for alpha in self.classes:
            out *= central_character(alpha, lam)
        out *= khat(lam) ** self.r
        for a in self.levels:
            out *= elementary(c, a)
        if self.s:
            out *= complete(c, self.s)
        if self.omega_power:
            out *= omega_hat(lam, Fraction(self.q)) ** self.omega_power
        return out


def _degree(word: ExpectationWord, d: int | None) -> int:
    wd = word.degree()
    if d is None:
        if wd is None:
            raise ValueError("degree d is required for a word without classes")
        return wd
    if wd is not None and wd != d:
        raise ValueError(f"word classes have size {wd}, not {d}")
    return d


def plancherel(word: ExpectationWord, d: int | None = None,
               row_bound: int | None = None) -> Fraction:
    """sum over lam |- d (with at most row_bound rows) of dim^2/d! * word^(lam)."""
    d = _degree(word, d)
    total = Fraction(0)
    for lam in partitions(d, row_bound):
        total += dimension(lam) ** 2 * word.eigenvalue(lam)
    return total / math.factorial(d)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer count, got {x}")
    return x.numerator


def double_hurwitz(alpha, beta, r: int) -> int:
    """<K_alpha K_beta K^r>: r-step walks between the two classes."""
    return _as_int(plancherel(ExpectationWord(classes=(alpha, beta), r=r)))


def coarse_double(a: int, b: int, r: int, d: int) -> int:
    """<L_a K^r L_b>."""
    _check_level(a, d)
    _check_level(b, d)
    return _as_int(plancherel(ExpectationWord(levels=(a, b), r=r), d))


def half_coarse(alpha, b: int, r: int) -> int:
    """<K_alpha K^r L_b>."""
    alpha = as_partition(alpha)
    _check_level(b, sum(alpha))
    return _as_int(plancherel(ExpectationWord(classes=(alpha,), r=r, levels=(b,))))


def _check_level(a: int, d: int) -> None:
    if not 0 <= a <= max(d - 1, 0):
        raise ValueError(f"level {a} outside 0..{d - 1}")


def mixed_expectation(word: ExpectationWord, d: int | None = None) -> int:
    if word.omega_power:
        raise ValueError("mixed expectations are integer words without Omega")
    return _as_int(plancherel(word, d))


def factor_spec(word: ExpectationWord) -> list[tuple]:
    """Oracle factor sources realising ``word`` as a tuple count."""
    if word.omega_power:
        raise ValueError("Omega powers have no finite tuple model")
    spec: list[tuple] = [("H",)] * word.handles
    spec += [("class", a) for a in word.classes]
    spec += [("level", a) for a in word.levels]
    spec += [("K",)] * word.r
    if word.s:
        spec.append(("M", word.s))
    return spec


def oracle_expectation(word: ExpectationWord, d: int | None = None) -> int:
    """The same count by brute-force tuple enumeration."""
    d = _degree(word, d)
    return oracle.transitive_tuple_count(d, factor_spec(word), transitive=False)


def connected(word: ExpectationWord, d: int | None = None, method: str = "oracle",
              geometry_name: str | None = None) -> int:
    """Cumulant <word>_c.

    ``oracle`` counts tuples generating a transitive subgroup; ``series``
    reads the coefficient off the logarithm of the template's generating
    series.  The two routes share no code.
    """
    d = _degree(word, d)
    if method == "oracle":
        return oracle.transitive_tuple_count(d, factor_spec(word), transitive=True)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    geo = geometry(geometry_name) if geometry_name else _match_template(word)
    z = template_series(geo, d, t_order=word.r, s_order=word.s, hbar=False)
    f = series_log(z)
    key = _series_key(geo, word, d)
    c = f[key] * math.factorial(d) * math.factorial(word.r) * (-1) ** word.r
    if geo.monotone:
        c *= (-1) ** word.s
    return _as_int(c)


def connection_coefficients(beta, gamma) -> dict[Partition, int]:
    """c^eta with K_beta K_gamma = sum_eta c^eta K_eta (zero entries omitted)."""
    beta, gamma = as_partition(beta), as_partition(gamma)
    if sum(beta) != sum(gamma):
        raise ValueError("classes of different sizes")
    out = {}
    for eta in partitions(sum(beta)):
        total = plancherel(ExpectationWord(classes=(beta, gamma, eta)))
        c = _as_int(total / class_size(eta))
        if c:
            out[eta] = c
    return out


def weingarten(alpha, d: int, N: int) -> Fraction:
    """sum over lam in Y_N^d of dim^2/d! * K_alpha^(lam) / Omega_{1/N}^(lam).

    Rows are capped at N, so every content is at least 1 - N and no
    eigenvalue of Omega_{1/N} vanishes.
    """
    alpha = as_partition(alpha)
    if sum(alpha) != d or d < 1 or N < 1:
        raise ValueError("need alpha |- d, d >= 1 and N >= 1")
    q = Fraction(1, N)
    total = Fraction(0)
    for lam in partitions(d, N):
        total += dimension(lam) ** 2 * central_character(alpha, lam) / omega_hat(lam, q)
    return total / math.factorial(d)


# --------------------------------------------------------------------------
# geometry templates

@dataclass(frozen=True)
class Geometry:
    """Surface with m holes and n handles and its generating-series layout.

    The Omega power 2 - 2n - m fixes the word shape: two boundary levels
    (u, v) for power 2, one level (v) for power 1, nothing for 0, and a
    weakly monotone block marked by -u for power -1.
    """

    name: str
    holes: int
    handles: int
    aliases: tuple[str, ...] = field(default=())

    @property
    def omega_power(self) -> int:
        return 2 - 2 * self.handles - self.holes

    @property
    def level_count(self) -> int:
        return max(self.omega_power, 0)

    @property
    def monotone(self) -> bool:
        return self.omega_power < 0

    @property
    def min_genus(self) -> int:
        return 1 if self.handles else 0

    @property
    def hbar_slope(self) -> int:
        return max(self.omega_power, 0)

    def check_supported(self) -> None:
        if self.omega_power < -1:
            raise ValueError(
                f"{self.name}: expansions are implemented for Omega powers -1..2 only")


GEOMETRIES: dict[str, Geometry] = {}
for _g in (
    Geometry("cylinder", 2, 0),
    Geometry("torus", 0, 1),
    Geometry("sphere", 0, 0),
    Geometry("disc", 1, 0, ("disk",)),
    Geometry("pants", 3, 0, ("three-holed-sphere", "pair-of-pants")),
    Geometry("one-holed-torus", 1, 1, ("holed-torus",)),
):
    GEOMETRIES[_g.name] = _g
    for _a in _g.aliases:
        GEOMETRIES[_a] = _g
del _g, _a


def geometry(name: "str | Geometry") -> Geometry:
    if isinstance(name, Geometry):
        return name
    try:
        return GEOMETRIES[name.replace("_", "-")]
    except KeyError:
        raise ValueError(f"unknown geometry {name!r}; known: "
                         f"{sorted(set(g.name for g in GEOMETRIES.values()))}") from None


def _match_template(word: ExpectationWord) -> Geometry:
    for geo in dict.fromkeys(GEOMETRIES.values()):
        if (geo.handles == word.handles and geo.holes == len(word.classes)
                and geo.level_count == len(word.levels)
                and (geo.monotone or word.s == 0)):
            return geo
    raise ValueError(f"word {word} matches no geometry template")


def geometry_word(geo: Geometry, markers: Sequence[Partition], r: int,
                  levels: Sequence[int] = (), s: int = 0) -> ExpectationWord:
    return ExpectationWord(handles=geo.handles, classes=tuple(markers), r=r,
                           s=s if geo.monotone else 0, levels=tuple(levels))


def genus_label(word: ExpectationWord, d: int | None = None,
                geometry_name: str | None = None) -> int | None:
    """Genus from Riemann-Hurwitz, or None if the step count is not realisable.

    2g - 2 = d(2n - 2) + sum (d - l(alpha)) + sum levels + r + s.
    """
    d = _degree(word, d)
    geo = geometry(geometry_name) if geometry_name else _match_template(word)
    if geo.holes != len(word.classes) or geo.handles != word.handles:
        raise ValueError(f"word does not fit the {geo.name} template")
    chi2 = (d * (2 * geo.handles - 2) + sum(d - len(a) for a in word.classes)
            + sum(word.levels) + word.r + word.s)
    if chi2 % 2:
        return None
    g = chi2 // 2 + 1
    return g if g >= geo.min_genus else None


def _series_key(geo: Geometry, word: ExpectationWord, d: int):
    u = v = 0
    if geo.level_count == 2:
        u, v = word.levels
    elif geo.level_count == 1:
        (v,) = word.levels
    elif geo.monotone:
        u = word.s
    return (d, word.r, u, v, 0, tuple(word.classes))


def template_series(geo: "Geometry | str", max_d: int, t_order: int,
                    s_order: int = 0, hbar: bool = True) -> FormalSeries:
    """The disconnected generating series Z of a geometry template.

    Degree d contributes (z hbar^-e)^d / d! with e the Omega power, the
    markers p_alpha in each hole, (-t hbar)^r / r! for unrestricted steps,
    (u hbar)^a (v hbar)^b for levels and (-u hbar)^s for a monotone block.
    With ``hbar=False`` every hbar exponent is dropped.
    """
    geo = geometry(geo)
    geo.check_supported()
    e = geo.omega_power
    level_top = max(max_d - 1, 0)
    orders = Orders(
        z=max_d, t=t_order,
        u=s_order if geo.monotone else (level_top if geo.level_count == 2 else 0),
        v=level_top if geo.level_count >= 1 else 0,
    )
    slope = geo.hbar_slope if hbar else 0
    terms = [((0, 0, 0, 0, 0, ((),) * geo.holes), Fraction(1))]
    for d in range(1, max_d + 1):
        parts = list(partitions(d))
        level_range = range(d)
        for markers in itertools.product(parts, repeat=geo.holes):
            for levels in itertools.product(level_range, repeat=geo.level_count):
                for s in range(s_order + 1 if geo.monotone else 1):
                    for r in range(t_order + 1):
                        word = geometry_word(geo, markers, r, levels, s)
                        val = plancherel(word, d)
                        if not val:
                            continue
                        coeff = val * (-1) ** r / (math.factorial(d) * math.factorial(r))
                        if geo.monotone:
                            coeff *= (-1) ** s
                        key = _series_key(geo, word, d)
                        h = (-e * d + r + sum(levels) + s) if hbar else 0
                        terms.append((key[:4] + (h, key[5]), coeff))
    return FormalSeries(terms, orders, geo.holes, slope)


def connected_table(geo: "Geometry | str", d: int, t_order: int, s_order: int = 0,
                    method: str = "oracle") -> dict[tuple, int]:
    """All cumulants of a template at degree d, keyed (markers, r, levels, s).

    The oracle route tallies every marker and level choice in one pass over
    transitive tuples; the series route reads them off log Z.  Zero entries
    are omitted.
    """
    geo = geometry(geo)
    geo.check_supported()
    s_max = s_order if geo.monotone else 0
    out: dict[tuple, int] = {}
    if method == "oracle":
        prefix = ([("H",)] * geo.handles + [("any",)] * geo.holes
                  + [("anylevel",)] * geo.level_count)
        grid = oracle.tuple_tally_grid(d, prefix, s_max, t_order, transitive=True)
        for (s, r), tally in grid.items():
            for (tags, k), c in tally.items():
                if k == 0 and c:
                    markers, levels = tags[:geo.holes], tags[geo.holes:]
                    out[markers, r, levels, s] = c
        return out
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    f = series_log(template_series(geo, d, t_order, s_max, hbar=False))
    for (dd, t, u, v, _, markers), c in f.items():
        if dd != d:
            continue
        if geo.level_count == 2:
            levels, s = (u, v), 0
        elif geo.level_count == 1:
            levels, s = (v,), 0
        else:
            levels, s = (), u
        val = c * math.factorial(d) * math.factorial(t) * (-1) ** (t + s)
        out[markers, t, levels, s] = _as_int(val)
    return out
