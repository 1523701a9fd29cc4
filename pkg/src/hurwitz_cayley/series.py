"""Multivariate formal power series with boundary markers.

A term is keyed by ``(d, t, u, v, hbar, markers)``: the exponents of z, t, u,
v and hbar, followed by one partition per boundary slot standing for the
power-sum monomial p_alpha in that slot.  Coefficients are Fractions.

z, t, u and v are truncated at explicit orders (inclusive).  hbar is a
Laurent variable whose exponent is bounded below by ``-hbar_slope * d``; it is
never truncated, since the z-order already bounds it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .characters import mn_character
from .partitions import Partition, as_partition, centralizer_order, merge, partitions, sort_key

__all__ = [
    "Orders", "FormalSeries", "series_exp", "series_log", "schur_in_powersums",
    "format_rational", "parse_rational",
]

Markers = tuple[Partition, ...]
Key = tuple[int, int, int, int, int, Markers]


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class Orders:
    """Inclusive truncation orders in z, t, u and v."""

    z: int
    t: int = 0
    u: int = 0
    v: int = 0

    def meet(self, other: "Orders") -> "Orders":
        return Orders(min(self.z, other.z), min(self.t, other.t),
                      min(self.u, other.u), min(self.v, other.v))

    def admits(self, key: Key) -> bool:
        d, t, u, v, _, _ = key
        return d <= self.z and t <= self.t and u <= self.u and v <= self.v


class FormalSeries:
    """Immutable truncated series; see the module docstring for the key layout."""

    __slots__ = ("_terms", "orders", "slots", "hbar_slope")

    def __init__(self, terms: Mapping[Key, Fraction] | Iterable[tuple[Key, Fraction]],
                 orders: Orders, slots: int = 0, hbar_slope: int = 0):
        self.orders = orders
        self.slots = slots
        self.hbar_slope = hbar_slope
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Key, Fraction] = {}
        for key, c in items:
            key = self._canonical(key)
            if not orders.admits(key):
                continue
            c = Fraction(c)
            if c:
                out[key] = out.get(key, Fraction(0)) + c
                if not out[key]:
                    del out[key]
        self._terms = out

    def _canonical(self, key) -> Key:
        d, t, u, v, h, markers = key
        markers = tuple(as_partition(m) for m in markers) if markers else ((),) * self.slots
        if len(markers) != self.slots:
            raise ValueError(f"expected {self.slots} marker slots, got {len(markers)}")
        if min(d, t, u, v) < 0:
            raise ValueError(f"negative exponent in {key}")
        if h < -self.hbar_slope * d:
            raise ValueError(f"hbar^{h} at z^{d} violates the declared slope {self.hbar_slope}")
        return (int(d), int(t), int(u), int(v), int(h), markers)

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, orders: Orders, slots: int = 0, hbar_slope: int = 0) -> "FormalSeries":
        return cls({}, orders, slots, hbar_slope)

    @classmethod
    def one(cls, orders: Orders, slots: int = 0, hbar_slope: int = 0) -> "FormalSeries":
        return cls({(0, 0, 0, 0, 0, ((),) * slots): 1}, orders, slots, hbar_slope)

    @classmethod
    def monomial(cls, coeff, orders: Orders, d: int = 0, t: int = 0, u: int = 0,
                 v: int = 0, hbar: int = 0, markers: Markers | None = None,
                 slots: int = 0, hbar_slope: int = 0) -> "FormalSeries":
        markers = markers if markers is not None else ((),) * slots
        return cls({(d, t, u, v, hbar, markers): coeff}, orders, slots, hbar_slope)

    # access -------------------------------------------------------------

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(self._canonical(key), Fraction(0))

    def coefficient(self, d: int = 0, t: int = 0, u: int = 0, v: int = 0,
                    hbar: int = 0, markers: Markers | None = None) -> Fraction:
        return self[d, t, u, v, hbar, markers or ()]

    def degree_part(self, d: int) -> "FormalSeries":
        return self._like((k, c) for k, c in self._terms.items() if k[0] == d)

    def constant_part(self) -> Fraction:
        return self._terms.get((0, 0, 0, 0, 0, ((),) * self.slots), Fraction(0))

    def _like(self, terms, orders: Orders | None = None) -> "FormalSeries":
        return FormalSeries(terms, orders or self.orders, self.slots, self.hbar_slope)

    # arithmetic ---------------------------------------------------------

    def _compatible(self, other: "FormalSeries") -> tuple[Orders, int]:
        if self.slots != other.slots:
            raise ValueError("marker slot counts differ")
        return self.orders.meet(other.orders), max(self.hbar_slope, other.hbar_slope)

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        orders, slope = self._compatible(other)
        terms = list(self._terms.items()) + list(other._terms.items())
        return FormalSeries(terms, orders, self.slots, slope)

    def __neg__(self) -> "FormalSeries":
        return self._like((k, -c) for k, c in self._terms.items())

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return self + (-other)

    def scale(self, c) -> "FormalSeries":
        c = Fraction(c)
        return self._like((k, c * x) for k, x in self._terms.items())

    def __mul__(self, other) -> "FormalSeries":
        if not isinstance(other, FormalSeries):
            return self.scale(other)
        orders, slope = self._compatible(other)
        out: dict[Key, Fraction] = {}
        for (d1, t1, u1, v1, h1, m1), c1 in self._terms.items():
            for (d2, t2, u2, v2, h2, m2), c2 in other._terms.items():
                key = (d1 + d2, t1 + t2, u1 + u2, v1 + v2, h1 + h2,
                       tuple(merge(a, b) for a, b in zip(m1, m2)))
                if orders.admits(key):
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
        return FormalSeries(out, orders, self.slots, slope)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        orders, _ = self._compatible(other)
        a = {k: c for k, c in self._terms.items() if orders.admits(k)}
        b = {k: c for k, c in other._terms.items() if orders.admits(k)}
        return a == b

    __hash__ = None

    def truncate(self, orders: Orders) -> "FormalSeries":
        return self._like(self._terms.items(), self.orders.meet(orders))

    def map_terms(self, fn) -> "FormalSeries":
        """Apply ``fn(key, coeff) -> (key, coeff) | None`` to every term."""
        out = []
        for k, c in self._terms.items():
            res = fn(k, c)
            if res is not None:
                out.append(res)
        return self._like(out)

    def collapse(self, u: bool = False, v: bool = False, markers: bool = False) -> "FormalSeries":
        """Set u, v and/or every marker to 1 by summing over them.

        Only meaningful when the truncation already contains every term at
        each retained degree (e.g. u and v bounded by d - 1 on the sphere).
        """
        out: dict[Key, Fraction] = {}
        slots = 0 if markers else self.slots
        for (d, t, uu, vv, h, m), c in self._terms.items():
            key = (d, t, 0 if u else uu, 0 if v else vv, h, () if markers else m)
            out[key] = out.get(key, Fraction(0)) + c
        orders = Orders(self.orders.z, self.orders.t,
                        0 if u else self.orders.u, 0 if v else self.orders.v)
        return FormalSeries(out, orders, slots, self.hbar_slope)

    def __repr__(self) -> str:
        body = " + ".join(f"{format_rational(c)}*{_monomial_str(k)}" for k, c in self.items())
        return f"FormalSeries({body or '0'}; {self.orders})"

    # serialisation ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "orders": {"z": self.orders.z, "t": self.orders.t,
                       "u": self.orders.u, "v": self.orders.v},
            "slots": self.slots,
            "hbar_slope": self.hbar_slope,
            "terms": [
                {"key": {"d": d, "t_pow": t, "u_pow": u, "v_pow": v, "hbar_pow": h,
                         "markers": [list(p) for p in m]},
                 "value": format_rational(c)}
                for (d, t, u, v, h, m), c in self.items()
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "FormalSeries":
        o = data["orders"]
        terms = []
        for term in data["terms"]:
            k = term["key"]
            key = (k["d"], k["t_pow"], k["u_pow"], k["v_pow"], k["hbar_pow"],
                   tuple(tuple(p) for p in k["markers"]))
            terms.append((key, parse_rational(term["value"])))
        return cls(terms, Orders(o["z"], o["t"], o["u"], o["v"]),
                   data["slots"], data["hbar_slope"])


def _sort_key(key: Key):
    d, t, u, v, h, m = key
    return (d, t, u, v, h, tuple(sort_key(p) for p in m))


def _monomial_str(key: Key) -> str:
    d, t, u, v, h, m = key
    parts = [f"{x}^{e}" for x, e in (("z", d), ("t", t), ("u", u), ("v", v), ("hbar", h)) if e]
    parts += ["p" + str(list(p)) for p in m if p]
    return "*".join(parts) or "1"


def series_exp(f: FormalSeries) -> FormalSeries:
    """exp(f) for f without z^0 terms, via n Z_n = sum_k k F_k Z_{n-k}."""
    if any(k[0] == 0 for k, _ in f.items()):
        raise ValueError("series_exp needs a series with no z^0 terms")
    top = f.orders.z
    parts = [f.degree_part(k) for k in range(top + 1)]
    z = [FormalSeries.one(f.orders, f.slots, f.hbar_slope)]
    for n in range(1, top + 1):
        acc = FormalSeries.zero(f.orders, f.slots, f.hbar_slope)
        for k in range(1, n + 1):
            if len(parts[k]):
                acc = acc + (parts[k] * z[n - k]).scale(k)
        z.append(acc.scale(Fraction(1, n)))
    total = z[0]
    for part in z[1:]:
        total = total + part
    return total


def series_log(z: FormalSeries) -> FormalSeries:
    """log(z) for z whose z^0 part is exactly 1."""
    zero = FormalSeries.one(z.orders, z.slots, z.hbar_slope)
    if z.degree_part(0) != zero:
        raise ValueError("series_log needs the z^0 part to be exactly 1")
    top = z.orders.z
    parts = [z.degree_part(k) for k in range(top + 1)]
    f = [FormalSeries.zero(z.orders, z.slots, z.hbar_slope)]
    for n in range(1, top + 1):
        acc = FormalSeries.zero(z.orders, z.slots, z.hbar_slope)
        for k in range(1, n):
            if len(f[k]) and len(parts[n - k]):
                acc = acc + (f[k] * parts[n - k]).scale(k)
        f.append(parts[n] - acc.scale(Fraction(1, n)))
    total = f[0]
    for part in f[1:]:
        total = total + part
    return total


def schur_in_powersums(lam) -> dict[Partition, Fraction]:
    """Frobenius: s_lam = sum_alpha chi^lam_alpha p_alpha / z_alpha."""
    lam = as_partition(lam)
    d = sum(lam)
    out = {}
    for alpha in partitions(d):
        c = Fraction(mn_character(lam, alpha), centralizer_order(alpha))
        if c:
            out[alpha] = c
    return out

