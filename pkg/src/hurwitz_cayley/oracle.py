"""Brute-force ground truth on the Hurwitz-Cayley graph.

Nothing in this module touches characters.  Walks are enumerated step by
step, group algebra elements are explicit coefficient vectors indexed by
permutation rank, and operator matrices are built entry by entry from the
right regular representation ``<sigma|A|rho> = A(rho^-1 sigma)``.

Every search is bounded by a resource guard.  Exceeding it raises
``ResourceLimitError``; set ``HC_MAX_DEGREE`` to raise the degree bounds.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

import numpy as np

from .characters import CentralElement
from .partitions import (
    Partition, as_partition, catalan, cayley_number,
)
from .perms import (
    Permutation, compose, cycle_type, identity, inverse, transposition,
    transpositions, word_norm,
)

__all__ = [
    "ResourceLimitError", "SingularMatrixError", "WalkMode", "GroupTable",
    "group_table", "walk_count", "walk_endpoints", "strict_walk_endpoints",
    "geodesic_count", "monotone_geodesic_count", "hurwitz_cayley_formula",
    "catalan_product", "class_sum", "level_set", "jm_element",
    "transposition_sum", "commutator_sum", "monotone_element",
    "walk_element", "omega_element", "group_element", "ga_mul",
    "operator_matrix", "identity_matrix", "exact_det", "exact_inverse",
    "jm_identity_check", "tuple_tally", "tuple_tally_grid",
    "element_counts", "expectation_by_matrices", "transitive_tuple_count",
    "class_product", "export_dot",
]


class ResourceLimitError(RuntimeError):
    """A brute-force computation was asked to exceed its size guard."""


class SingularMatrixError(ValueError):
    pass


WALK_MAX_DEGREE = 8
WALK_MAX_STEPS = 10
TABLE_MAX_DEGREE = 6


def _degree_limit(default: int) -> int:
    env = os.environ.get("HC_MAX_DEGREE")
    return max(default, int(env)) if env else default


def _guard(d: int, default: int, what: str) -> None:
    limit = _degree_limit(default)
    if d > limit:
        raise ResourceLimitError(
            f"{what} is limited to d <= {limit} (got d={d}); "
            "set HC_MAX_DEGREE to override")


class WalkMode(enum.Enum):
    UNRESTRICTED = "unrestricted"
    STRICT_INCREASING = "strict_increasing"
    WEAK_INCREASING = "weak_increasing"
    STRICT_DECREASING = "strict_decreasing"
    WEAK_DECREASING = "weak_decreasing"

    @classmethod
    def parse(cls, text: "str | WalkMode") -> "WalkMode":
        if isinstance(text, WalkMode):
            return text
        aliases = {"strict": "strict_increasing", "weak": "weak_increasing",
                   "any": "unrestricted"}
        return cls(aliases.get(text, text))

    def allows(self, last: int | None, label: int) -> bool:
        if last is None or self is WalkMode.UNRESTRICTED:
            return True
        return {
            WalkMode.STRICT_INCREASING: label > last,
            WalkMode.WEAK_INCREASING: label >= last,
            WalkMode.STRICT_DECREASING: label < last,
            WalkMode.WEAK_DECREASING: label <= last,
        }[self]

    def reversed(self) -> "WalkMode":
        swap = {
            WalkMode.STRICT_INCREASING: WalkMode.STRICT_DECREASING,
            WalkMode.STRICT_DECREASING: WalkMode.STRICT_INCREASING,
            WalkMode.WEAK_INCREASING: WalkMode.WEAK_DECREASING,
            WalkMode.WEAK_DECREASING: WalkMode.WEAK_INCREASING,
        }
        return swap.get(self, self)


# --------------------------------------------------------------------------
# walk enumeration (depth first, no memoisation unless asked)

def _walk_dfs(start: Permutation, r: int, mode: WalkMode, visit) -> None:
    """Call ``visit(endpoint_list, length)`` at every walk of length <= r."""
    d = len(start)
    cur = list(start)
    pos = [0] * (d + 1)
    for k, x in enumerate(cur):
        pos[x] = k
    steps = transpositions(d)

    def rec(depth: int, last: int | None):
        visit(cur, depth)
        if depth == r:
            return
        for i, j in steps:
            if not mode.allows(last, j):
                continue
            # right multiplication by (i j) swaps the values i and j
            pi, pj = pos[i], pos[j]
            cur[pi], cur[pj] = j, i
            pos[i], pos[j] = pj, pi
            rec(depth + 1, j)
            cur[pi], cur[pj] = i, j
            pos[i], pos[j] = pi, pj

    rec(0, None)


def _check_walk_args(d: int, r: int) -> None:
    if r < 0:
        raise ValueError("r must be nonnegative")
    _guard(d, WALK_MAX_DEGREE, "walk enumeration")
    if r > WALK_MAX_STEPS:
        raise ResourceLimitError(
            f"walk enumeration is limited to r <= {WALK_MAX_STEPS} steps")


def walk_count(d: int, rho: Permutation, sigma: Permutation, r: int,
               mode: "WalkMode | str" = WalkMode.UNRESTRICTED,
               memo: bool = False) -> int:
    """Number of r-step walks rho -> sigma whose labels respect ``mode``."""
    mode = WalkMode.parse(mode)
    if len(rho) != d or len(sigma) != d:
        raise ValueError("degree mismatch")
    _check_walk_args(d, r)
    if memo:
        if mode is not WalkMode.UNRESTRICTED:
            raise ValueError("memoisation is only offered for unrestricted walks")
        return _walk_count_memo(tuple(rho), tuple(sigma), r)
    target = list(sigma)
    hits = 0

    def visit(cur, depth):
        nonlocal hits
        if depth == r and cur == target:
            hits += 1

    _walk_dfs(tuple(rho), r, mode, visit)
    return hits


def _walk_count_memo(rho: Permutation, sigma: Permutation, r: int) -> int:
    d = len(rho)
    taus = [transposition(i, j, d) for i, j in transpositions(d)]

    @cache
    def count(cur: Permutation, left: int) -> int:
        if left == 0:
            return int(cur == sigma)
        return sum(count(compose(cur, t), left - 1) for t in taus)

    return count(rho, r)


def walk_endpoints(start: Permutation, r: int,
                   mode: "WalkMode | str" = WalkMode.UNRESTRICTED) -> Counter:
    """Counter of endpoints of all r-step walks from ``start``."""
    mode = WalkMode.parse(mode)
    _check_walk_args(len(start), r)
    out: Counter = Counter()

    def visit(cur, depth):
        if depth == r:
            out[tuple(cur)] += 1

    _walk_dfs(tuple(start), r, mode, visit)
    return out


def strict_walk_endpoints(start: Permutation,
                          mode: "WalkMode | str" = WalkMode.STRICT_INCREASING) -> Counter:
    """Counter of (endpoint, length) over every strictly monotone walk."""
    mode = WalkMode.parse(mode)
    if mode not in (WalkMode.STRICT_INCREASING, WalkMode.STRICT_DECREASING):
        raise ValueError("strict modes only")
    d = len(start)
    _guard(d, WALK_MAX_DEGREE, "walk enumeration")
    out: Counter = Counter()

    def visit(cur, depth):
        out[tuple(cur), depth] += 1

    _walk_dfs(tuple(start), max(d - 1, 0), mode, visit)
    return out


def _geodesics(rho: Permutation, sigma: Permutation, mode: WalkMode) -> int:
    d = len(rho)
    _guard(d, WALK_MAX_DEGREE, "geodesic enumeration")
    target = tuple(sigma)
    steps = transpositions(d)

    def rec(cur: list, left: int, last: int | None) -> int:
        if left == 0:
            return int(tuple(cur) == target)
        total = 0
        for i, j in steps:
            if not mode.allows(last, j):
                continue
            nxt = [j if x == i else i if x == j else x for x in cur]
            # stay on a geodesic: remaining distance must drop by one
            if word_norm(compose(inverse(tuple(nxt)), target)) == left - 1:
                total += rec(nxt, left - 1, j)
        return total

    return rec(list(rho), word_norm(compose(inverse(tuple(rho)), target)), None)


def geodesic_count(rho: Permutation, sigma: Permutation) -> int:
    """Number of geodesics rho -> sigma, by enumeration."""
    return _geodesics(rho, sigma, WalkMode.UNRESTRICTED)


def monotone_geodesic_count(rho: Permutation, sigma: Permutation) -> int:
    """Number of weakly increasing geodesics rho -> sigma, by enumeration."""
    return _geodesics(rho, sigma, WalkMode.WEAK_INCREASING)


def hurwitz_cayley_formula(alpha: Sequence[int]) -> int:
    """Closed-form count of minimal transposition factorizations."""
    alpha = as_partition(alpha)
    blocks = [a - 1 for a in alpha]
    shuffles = math.factorial(sum(blocks))
    for b in blocks:
        shuffles //= math.factorial(b)
    return shuffles * math.prod(cayley_number(b) for b in blocks)


def catalan_product(alpha: Sequence[int]) -> int:
    return math.prod(catalan(a - 1) for a in as_partition(alpha))


# --------------------------------------------------------------------------
# group tables and the group algebra

def _lehmer_ranks(arr: np.ndarray) -> np.ndarray:
    n, d = arr.shape
    out = np.zeros(n, dtype=np.int64)
    for k in range(d):
        smaller = (arr[:, k + 1:] < arr[:, [k]]).sum(axis=1)
        out += smaller * math.factorial(d - 1 - k)
    return out


@dataclass(frozen=True, eq=False)
class GroupTable:
    """S^d enumerated in rank order with precomputed products."""

    d: int
    perms: tuple[Permutation, ...]
    mult: np.ndarray       # mult[i, j] = rank(perms[i] * perms[j])
    inv: np.ndarray
    norm: np.ndarray
    ctype: tuple[Partition, ...]
    trans: tuple[tuple[int, int, int], ...]   # (i, j, rank of (i j))

    @property
    def n(self) -> int:
        return len(self.perms)

    def index(self, p: Permutation) -> int:
        return self._index[p]

    def zeros(self) -> np.ndarray:
        return np.array([0] * self.n, dtype=object)

    def delta(self, p: Permutation) -> np.ndarray:
        out = self.zeros()
        out[self.index(p)] = 1
        return out


@cache
def group_table(d: int) -> GroupTable:
    _guard(d, TABLE_MAX_DEGREE, "group tables")
    perms = tuple(itertools.permutations(range(1, d + 1)))
    n = len(perms)
    P0 = np.array(perms, dtype=np.int64).reshape(n, d) - 1
    mult = np.empty((n, n), dtype=np.int64)
    for j in range(n):
        # (perms[i] * perms[j])[k] = perms[j][perms[i][k]]
        mult[:, j] = _lehmer_ranks(P0[j][P0]) if d else 0
    inv = np.array([int(np.where(mult[i] == 0)[0][0]) for i in range(n)])
    norm = np.array([word_norm(p) for p in perms], dtype=np.int64)
    index = {p: k for k, p in enumerate(perms)}
    trans = tuple(
        (i, j, index[tuple(j if x == i else i if x == j else x for x in range(1, d + 1))])
        for i, j in transpositions(d))
    table = GroupTable(d, perms, mult, inv, norm,
                       tuple(cycle_type(p) for p in perms), trans)
    object.__setattr__(table, "_index", index)
    return table


def ga_mul(a: np.ndarray, b: np.ndarray, table: GroupTable) -> np.ndarray:
    """Product in the group algebra C[S^d]."""
    out = table.zeros()
    for i in np.nonzero(a)[0]:
        out[table.mult[i]] += a[i] * b
    return out


def class_sum(alpha: Sequence[int], d: int | None = None) -> np.ndarray:
    alpha = as_partition(alpha)
    table = group_table(sum(alpha) if d is None else d)
    return np.array([int(c == alpha) for c in table.ctype], dtype=object)


def level_set(r: int, d: int) -> np.ndarray:
    table = group_table(d)
    return np.array([int(x == r) for x in table.norm], dtype=object)


def transposition_sum(d: int) -> np.ndarray:
    table = group_table(d)
    out = table.zeros()
    for _, _, k in table.trans:
        out[k] += 1
    return out


def jm_element(j: int, d: int) -> np.ndarray:
    """J_j = (1 j) + ... + (j-1 j); J_1 = 0."""
    table = group_table(d)
    out = table.zeros()
    for _, jj, k in table.trans:
        if jj == j:
            out[k] += 1
    return out


@cache
def _commutator_pairs(d: int) -> tuple[tuple[int, int, int], ...]:
    """(rank of [rho, sigma], rank of rho, rank of sigma) for all pairs."""
    table = group_table(d)
    out = []
    idx = np.arange(table.n)
    for rho in range(table.n):
        a = table.mult[table.inv[rho], table.inv]        # rho^-1 sigma^-1
        b = table.mult[a, rho]                           # ... rho
        c = table.mult[b, idx]                           # ... sigma
        out.extend((int(c[s]), rho, s) for s in range(table.n))
    return tuple(out)


def commutator_sum(d: int) -> np.ndarray:
    """H = sum over all (rho, sigma) of rho^-1 sigma^-1 rho sigma."""
    table = group_table(d)
    out = table.zeros()
    for c, _, _ in _commutator_pairs(d):
        out[c] += 1
    return out


def walk_element(r: int, d: int, mode: "WalkMode | str") -> np.ndarray:
    """Coefficient of pi = number of r-step walks iota -> pi respecting mode.

    Walks are aggregated by (endpoint, last label), which keeps long
    monotone walks countable; ``walk_count`` is the unaggregated check.
    """
    mode = WalkMode.parse(mode)
    table = group_table(d)
    states: dict[tuple[int, int | None], int] = {(0, None): 1}
    for _ in range(r):
        nxt: dict = defaultdict(int)
        for (k, last), c in states.items():
            for _, j, t in table.trans:
                if mode.allows(last, j):
                    nxt[int(table.mult[k, t]), j] += c
        states = nxt
    out = table.zeros()
    for (k, _), c in states.items():
        out[k] += c
    return out


def monotone_element(r: int, d: int) -> np.ndarray:
    """M_r as the weakly monotone walk counts from the identity."""
    return walk_element(r, d, WalkMode.WEAK_INCREASING)


def omega_element(q, d: int) -> np.ndarray:
    table = group_table(d)
    return np.array([Fraction(q) ** int(x) for x in table.norm], dtype=object)


def group_element(elem: CentralElement, d: int) -> np.ndarray:
    """Explicit coefficient vector of a central word, built without characters."""
    table = group_table(d)
    out = table.delta(identity(d)) * Fraction(elem.coefficient)
    for name, p in elem.factors:
        if name == "H":
            f = commutator_sum(d)
        elif name == "K":
            f = transposition_sum(d) if p is None else class_sum(p, d)
        elif name == "L":
            f = level_set(p, d)
        elif name == "M":
            f = monotone_element(p, d)
        elif name == "Omega":
            f = omega_element(p, d)
        elif name == "OmegaInv":
            inv = exact_inverse(operator_matrix(omega_element(p, d), d))
            f = inv[:, 0].copy()        # column of rho = iota holds A(sigma)
        else:
            raise ValueError(f"{name} has no finite group algebra image")
        out = ga_mul(out, f, table)
    return out


# --------------------------------------------------------------------------
# exact matrices (numpy object arrays of ints / Fractions)

def operator_matrix(elem, d: int) -> np.ndarray:
    """Right regular representation: entry [sigma, rho] = A(rho^-1 sigma)."""
    _guard(d, TABLE_MAX_DEGREE, "operator matrices")
    table = group_table(d)
    a = group_element(elem, d) if isinstance(elem, CentralElement) else elem
    idx = table.mult[table.inv]          # idx[rho, sigma] = rank(rho^-1 sigma)
    return np.asarray(a, dtype=object)[idx].T.copy()


def identity_matrix(n: int) -> np.ndarray:
    out = np.full((n, n), 0, dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def exact_det(m: np.ndarray) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    rows = [[Fraction(x) for x in row] for row in np.asarray(m, dtype=object)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in rows:
        lcm = math.lcm(*(x.denominator for x in row))
        scale *= lcm
        a.append([int(x * lcm) for x in row])
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1]) / scale


def exact_inverse(m: np.ndarray) -> np.ndarray:
    """Inverse by Gauss-Jordan elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in np.asarray(m, dtype=object)]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        inv[c] = [x / p for x in inv[c]]
        for r in range(n):
            f = a[r][c]
            if r != c and f != 0:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[c])]
    return np.array(inv, dtype=object)


def jm_identity_check(d: int, r: int) -> bool:
    """Check e_r(J) = L_r and h_r(J) = M_r as operator matrices.

    The symmetric polynomials are evaluated by matrix products of the
    Jucys-Murphy operators; the right-hand sides are the level indicator and
    depth-first counts of weakly monotone walks.
    """
    if d < 1:
        return True
    table = group_table(d)
    n = table.n
    J = [np.asarray(operator_matrix(jm_element(j, d), d), dtype=np.int64)
         for j in range(1, d + 1)]
    eye = np.eye(n, dtype=np.int64)
    e = [eye] + [np.zeros((n, n), dtype=np.int64)] * r
    h = [eye] + [np.zeros((n, n), dtype=np.int64)] * r
    for Jk in J:
        for k in range(r, 0, -1):
            e[k] = e[k] + Jk @ e[k - 1]
        for k in range(1, r + 1):
            h[k] = h[k] + Jk @ h[k - 1]
    if max(abs(int(e[r].max())), abs(int(h[r].max()))) > 2**50:
        raise ArithmeticError("int64 headroom exhausted")
    L = operator_matrix(level_set(r, d), d)
    walks = walk_endpoints(identity(d), r, WalkMode.WEAK_INCREASING)
    m_elem = table.zeros()
    for p, c in walks.items():
        m_elem[table.index(p)] += c
    M = operator_matrix(m_elem, d)
    return bool(np.array_equal(e[r], L.astype(np.int64))
                and np.array_equal(h[r], M.astype(np.int64)))


@cache
def _int_operator(d: int, factor: tuple) -> np.ndarray:
    kind = factor[0]
    if kind == "class":
        elem = class_sum(factor[1], d)
    elif kind == "K":
        elem = transposition_sum(d)
    elif kind == "M":
        elem = monotone_element(factor[1], d)
    elif kind == "H":
        elem = commutator_sum(d)
    elif kind == "level":
        elem = level_set(factor[1], d)
    else:
        raise ValueError(f"unsupported factor {factor!r}")
    return np.asarray(operator_matrix(elem, d), dtype=np.int64)


def element_counts(d: int, factors: Iterable[tuple]) -> np.ndarray:
    """Coefficient vector of the product of explicit elements.

    Entry pi counts tuples from ``factors`` whose product is pi; computed by
    applying right regular operator matrices to the identity.  Raises if the
    total mass could overflow int64.
    """
    table = group_table(d)
    vec = np.zeros(table.n, dtype=np.int64)
    vec[0] = 1
    mass = 1
    for factor in factors:
        factor = tuple(factor)
        op = _int_operator(d, factor)
        mass *= int(op[:, 0].sum())
        if mass >= 2**62:
            raise ArithmeticError("int64 headroom exhausted")
        vec = op @ vec
    return vec


def expectation_by_matrices(d: int, factors: Iterable[tuple]) -> int:
    """Identity coefficient of the product: the tuple count with product iota."""
    if d == 0:
        return 1
    return int(element_counts(d, factors)[0])


def class_product(beta: Sequence[int], gamma: Sequence[int]) -> dict[Partition, int]:
    """Class expansion of K_beta K_gamma by explicit convolution."""
    beta, gamma = as_partition(beta), as_partition(gamma)
    d = sum(beta)
    table = group_table(d)
    prod = ga_mul(class_sum(beta, d), class_sum(gamma, d), table)
    out: dict[Partition, int] = {}
    for k, c in enumerate(prod):
        if c:
            eta = table.ctype[k]
            out.setdefault(eta, int(c))   # constant on classes
    return out


# --------------------------------------------------------------------------
# tuple counting with optional transitivity

def _rgs(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


@cache
def _cycle_blocks(d: int) -> tuple[tuple[int, ...], ...]:
    table = group_table(d)
    out = []
    for p in table.perms:
        lab = list(range(d))
        # label each point by the minimum of its cycle
        seen = [False] * d
        for s in range(d):
            if seen[s]:
                continue
            x = s
            while not seen[x]:
                seen[x] = True
                lab[x] = s
                x = p[x] - 1
        out.append(_rgs(lab))
    return tuple(out)


def _join(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Finest set partition coarser than both (restricted growth strings)."""
    parent = list(range(len(a)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in (a, b):
        first: dict[int, int] = {}
        for x, c in enumerate(lab):
            if c in first:
                ra, rb = find(first[c]), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                first[c] = x
    return _rgs([find(x) for x in range(len(a))])


def _factor_moves(d: int, factor: tuple, track: bool):
    """List of (tag, perm rank, block partition) moves for a factor source."""
    table = group_table(d)
    blocks = _cycle_blocks(d)
    kind = factor[0]
    if kind == "class":
        alpha = as_partition(factor[1])
        return [(None, k, blocks[k] if track else None)
                for k in range(table.n) if table.ctype[k] == alpha]
    if kind == "any":
        return [(table.ctype[k], k, blocks[k] if track else None) for k in range(table.n)]
    if kind == "level":
        return [(None, k, blocks[k] if track else None)
                for k in range(table.n) if table.norm[k] == factor[1]]
    if kind == "anylevel":
        return [(int(table.norm[k]), k, blocks[k] if track else None)
                for k in range(table.n)]
    if kind == "K":
        return [(None, k, blocks[k] if track else None) for _, _, k in table.trans]
    if kind == "H":
        agg: Counter = Counter()
        for c, rho, sigma in _commutator_pairs(d):
            part = _join(blocks[rho], blocks[sigma]) if track else None
            agg[c, part] += 1
        return [(None, c, part, m) for (c, part), m in agg.items()]
    raise ValueError(f"unknown factor {factor!r}")


class _Tally:
    """Aggregated tuple states: (tags, product rank, connectivity) -> count.

    Connectivity is the set partition of {1..d} generated by the cycles of
    all entries so far (a restricted growth string), or None when
    transitivity is not tracked.
    """

    def __init__(self, d: int, transitive: bool):
        _guard(d, TABLE_MAX_DEGREE, "tuple counting")
        self.d = d
        self.table = group_table(d)
        self.transitive = transitive
        self.blocks = _cycle_blocks(d)
        self.states: Counter = Counter({((), 0, tuple(range(d)) if transitive else None): 1})
        self._join: dict = {}

    def join(self, a, b):
        if a is None:
            return None
        out = self._join.get((a, b))
        if out is None:
            out = self._join[a, b] = _join(a, b)
        return out

    def copy(self) -> "_Tally":
        new = object.__new__(_Tally)
        new.__dict__.update(self.__dict__)
        new.states = Counter(self.states)
        return new

    def apply(self, factor: tuple) -> None:
        factor = tuple(factor)
        if factor[0] == "M":
            self.monotone_block(factor[1])
            return
        moves = _factor_moves(self.d, factor, self.transitive)
        mult = self.table.mult
        nxt: Counter = Counter()
        for (tags, k, bl), c in self.states.items():
            row = mult[k]
            for mv in moves:
                tag, x, part = mv[0], mv[1], mv[2]
                weight = mv[3] if len(mv) > 3 else 1
                new_tags = tags if tag is None else tags + (tag,)
                nxt[new_tags, int(row[x]), self.join(bl, part)] += c * weight
        self.states = nxt

    def monotone_snapshots(self, s_max: int) -> list[Counter]:
        """States after weakly increasing blocks of length 0..s_max."""
        mult = self.table.mult
        moves = [(j, t, self.blocks[t] if self.transitive else None)
                 for _, j, t in self.table.trans]
        lab = Counter({(tags, k, bl, 0): c for (tags, k, bl), c in self.states.items()})
        out = [Counter(self.states)]
        for _ in range(s_max):
            nxt: Counter = Counter()
            for (tags, k, bl, last), c in lab.items():
                row = mult[k]
                for j, t, tb in moves:
                    if j >= last:
                        nxt[tags, int(row[t]), self.join(bl, tb), j] += c
            lab = nxt
            flat: Counter = Counter()
            for (tags, k, bl, _), c in lab.items():
                flat[tags, k, bl] += c
            out.append(flat)
        return out

    def monotone_block(self, s: int) -> None:
        self.states = self.monotone_snapshots(s)[-1]

    def result(self, states: Counter | None = None) -> Counter:
        whole = (0,) * self.d
        out: Counter = Counter()
        for (tags, k, bl), c in (self.states if states is None else states).items():
            if self.transitive and bl != whole:
                continue
            out[tags, k] += c
        return out


def tuple_tally(d: int, factors: Iterable[tuple], transitive: bool = False) -> Counter:
    """Count tuples drawn from ``factors`` keyed by (tags, product rank).

    Factor sources: ``("class", alpha)``, ``("any",)`` (all of S^d, tagged by
    cycle type), ``("level", a)``, ``("anylevel",)`` (tagged by level),
    ``("K",)`` one transposition, ``("M", s)`` a weakly increasing block of s
    transpositions, ``("H",)`` a commutator pair.  With ``transitive`` only
    tuples whose entries generate a transitive subgroup are kept.
    """
    tally = _Tally(d, transitive)
    for factor in factors:
        tally.apply(factor)
    return tally.result()


def tuple_tally_grid(d: int, prefix: Iterable[tuple], s_max: int, r_max: int,
                     transitive: bool = False) -> dict[tuple[int, int], Counter]:
    """``tuple_tally`` of prefix + [M_s] + [K]*r for every s <= s_max, r <= r_max.

    Placing the monotone block before the unrestricted steps does not change
    counts with a central product target: conjugating each step by the block
    product is a bijection that preserves the generated subgroup.
    """
    tally = _Tally(d, transitive)
    for factor in prefix:
        tally.apply(factor)
    out = {}
    for s, snap in enumerate(tally.monotone_snapshots(s_max)):
        branch = tally.copy()
        branch.states = snap
        for r in range(r_max + 1):
            if r:
                branch.apply(("K",))
            out[s, r] = branch.result()
    return out


def transitive_tuple_count(d: int, factor_spec: Sequence[tuple],
                           target_class: Sequence[int] | None = None,
                           transitive: bool = True) -> int:
    """Tuples from ``factor_spec`` with product iota (or in ``target_class``).

    See ``tuple_tally`` for the factor vocabulary.  The product target adds no
    generator, since it already lies in the group generated by the entries.
    """
    if d == 0:
        return 1
    table = group_table(d)
    tally = tuple_tally(d, factor_spec, transitive)
    if target_class is None:
        return sum(c for (_, k), c in tally.items() if k == 0)
    target = as_partition(target_class)
    return sum(c for (_, k), c in tally.items() if table.ctype[k] == target)


def export_dot(d: int) -> str:
    """Graphviz description of S^d with Jucys-Murphy edge labels."""
    _guard(d, TABLE_MAX_DEGREE, "graph export")
    table = group_table(d)

    def name(p):
        return '"[' + ",".join(map(str, p)) + ']"'

    lines = [f"graph S{d} {{"]
    for k, p in enumerate(table.perms):
        lines.append(f"  {name(p)} [level={int(table.norm[k])}];")
    for k, p in enumerate(table.perms):
        for i, j, t in table.trans:
            other = int(table.mult[k, t])
            if k < other:
                lines.append(f"  {name(p)} -- {name(table.perms[other])} [label={j}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
