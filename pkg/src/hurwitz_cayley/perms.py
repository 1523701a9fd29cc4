"""Permutations of {1, ..., d} in one-line form.

A permutation is a tuple ``p`` whose entry ``p[i - 1]`` is the image of ``i``.
Products are read left to right: ``compose(p, q)`` applies ``p`` first and
then ``q``.  Every module in the package shares this convention.

>>> compose((2, 1, 3), (3, 2, 1))
(2, 3, 1)
>>> cycle_type((2, 3, 1, 4))
(3, 1)
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterator, Sequence

from .partitions import Partition, as_partition

Permutation = tuple[int, ...]

__all__ = [
    "Permutation", "identity", "check_permutation", "compose", "compose_all",
    "inverse", "cycles", "cycle_type", "num_cycles", "word_norm", "distance",
    "transposition", "transpositions", "jm_label", "enumerate_class", "rank",
    "unrank", "parse_permutation", "format_one_line", "format_cycles",
    "MAX_RANK_DEGREE",
]

# Lehmer ranks of S^12 still fit comfortably in a machine word.
MAX_RANK_DEGREE = 12


def identity(d: int) -> Permutation:
    return tuple(range(1, d + 1))


def check_permutation(p: Sequence[int]) -> Permutation:
    """Validate a one-line sequence and return it as a tuple."""
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{list(p)} is not a permutation of 1..{len(p)}")
    return p


def _same_degree(p: Permutation, q: Permutation) -> None:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product ``pq``: apply ``p``, then ``q``."""
    _same_degree(p, q)
    return tuple(q[i - 1] for i in p)


def compose_all(perms: Sequence[Permutation], d: int) -> Permutation:
    out = identity(d)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """All cycles of ``p`` including fixed points, each led by its minimum."""
    seen = [False] * (len(p) + 1)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p: Permutation) -> int:
    return len(cycles(p))


def word_norm(p: Permutation) -> int:
    """Minimal number of transpositions whose product is ``p``."""
    return len(p) - num_cycles(p)


def distance(p: Permutation, q: Permutation) -> int:
    _same_degree(p, q)
    return word_norm(compose(inverse(p), q))


def transposition(i: int, j: int, d: int) -> Permutation:
    if not (1 <= i <= d and 1 <= j <= d) or i == j:
        raise ValueError(f"bad transposition ({i} {j}) in degree {d}")
    out = list(range(1, d + 1))
    out[i - 1], out[j - 1] = j, i
    return tuple(out)


def transpositions(d: int) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``i < j``, ordered by Jucys-Murphy label ``j``."""
    return [(i, j) for j in range(2, d + 1) for i in range(1, j)]


def jm_label(i: int, j: int) -> int:
    return max(i, j)


def enumerate_class(alpha: Sequence[int]) -> Iterator[Permutation]:
    """Yield every permutation of cycle type ``alpha`` exactly once.

    The cycle through the smallest unused point is chosen first, so each
    permutation arises from exactly one sequence of choices.
    """
    alpha = as_partition(alpha)
    d = sum(alpha)
    images = [0] * d

    def build(unused: list[int], remaining: tuple[int, ...]):
        if not unused:
            yield tuple(images)
            return
        head, rest = unused[0], unused[1:]
        for k in sorted(set(remaining), reverse=True):
            idx = remaining.index(k)
            left = remaining[:idx] + remaining[idx + 1:]
            for tail in itertools.permutations(rest, k - 1):
                cyc = (head,) + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    images[a - 1] = b
                yield from build([x for x in rest if x not in tail], left)

    yield from build(list(range(1, d + 1)), alpha)


def rank(p: Permutation) -> int:
    """Lehmer-code rank; agrees with lexicographic order of one-line forms."""
    d = len(p)
    if d > MAX_RANK_DEGREE:
        raise ValueError(f"ranking supported for d <= {MAX_RANK_DEGREE}")
    r = 0
    for k in range(d):
        smaller = sum(1 for x in p[k + 1:] if x < p[k])
        r += smaller * math.factorial(d - 1 - k)
    return r


def unrank(r: int, d: int) -> Permutation:
    if not 0 <= r < math.factorial(d):
        raise ValueError(f"rank {r} out of range for degree {d}")
    pool = list(range(1, d + 1))
    out = []
    for k in range(d - 1, -1, -1):
        q, r = divmod(r, math.factorial(k))
        out.append(pool.pop(q))
    return tuple(out)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, d: int) -> Permutation:
    """Parse ``id``, one-line ``[2,1,3]`` or cycle notation ``(1 2)(3 4)``."""
    s = text.strip()
    if s.lower() in ("id", "e", "iota", "()", ""):
        return identity(d)
    if s.startswith("["):
        body = s.strip("[]").replace(",", " ").split()
        p = check_permutation(int(x) for x in body)
        if len(p) != d:
            raise ValueError(f"{s} has degree {len(p)}, expected {d}")
        return p
    if not s.startswith("(") or _CYCLE_RE.sub("", s).strip():
        raise ValueError(f"cannot parse permutation {text!r}")
    images = list(range(1, d + 1))
    seen: set[int] = set()
    # disjoint cycles only; products of overlapping cycles are ambiguous here
    for body in _CYCLE_RE.findall(s):
        pts = [int(x) for x in body.replace(",", " ").split()]
        if any(x < 1 or x > d for x in pts) or seen.intersection(pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({body}) for degree {d}")
        seen.update(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b
    return tuple(images)


def format_one_line(p: Permutation) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def format_cycles(p: Permutation) -> str:
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"

