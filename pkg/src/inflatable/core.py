"""Permutations, inflation constructions, and exact pattern counting.

Permutations are 1-based: a permutation of length n contains each of 1..n
exactly once, held in one-line notation. All densities are exact
``fractions.Fraction`` values; nothing in this module touches floats.

Two text styles are supported. Compact writes one symbol per value, digits
1-9 then A-Z, so it caps at length 35 ("312", "G54ABC319HF678ED2"). Comma
style has no length cap ("3,1,2").
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "COMPACT_MAX",
    "Perm",
    "PermLike",
    "PatternCounts3",
    "as_perm",
    "parse_permutation",
    "format_permutation",
    "pattern_of",
    "inflate",
    "generalized_inflate",
    "rotate",
    "is_centrally_symmetric",
    "count_occurrences",
    "density",
    "count_length3_all",
    "all_patterns",
    "PATTERNS_3",
]

_COMPACT_SYMBOLS = "123456789" + string.ascii_uppercase
_COMPACT_VALUE = {ch: i + 1 for i, ch in enumerate(_COMPACT_SYMBOLS)}

COMPACT_MAX = 35


def _validate_values(values: tuple) -> None:
    n = len(values)
    if n == 0:
        raise ValueError("permutation must be non-empty")
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"permutation entries must be integers, got {v!r}")
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
        if seen[v]:
            raise ValueError(f"duplicate value {v}")
        seen[v] = True


class Perm(tuple):
    """A permutation of {1, ..., n} in one-line notation.

    Behaves as a tuple of ints. Construction validates that the values are
    exactly 1..n. Strings are parsed in either text style:

    >>> Perm("312") == Perm((3, 1, 2)) == Perm("3,1,2")
    True
    """

    __slots__ = ()

    def __new__(cls, values: Union[str, Iterable[int]]) -> "Perm":
        if isinstance(values, str):
            return parse_permutation(values)
        vals = tuple(values)
        _validate_values(vals)
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Perm({format_permutation(self)!r})"

    def __str__(self) -> str:
        return format_permutation(self)


PermLike = Union[Perm, str, Sequence[int]]


def as_perm(p: PermLike) -> Perm:
    """Coerce a Perm, text form, or integer sequence to a Perm."""
    if isinstance(p, Perm):
        return p
    return Perm(p)


def parse_permutation(text: str) -> Perm:
    """Parse either text style.

    Comma style is used when the string contains a comma; otherwise every
    character must be a compact symbol. Mixed styles are rejected.

    >>> parse_permutation("G54ABC319HF678ED2").n
    17
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    if "," in s:
        parts = [p.strip() for p in s.split(",")]
        vals = []
        for part in parts:
            if not part or not (part.isdigit() or (part[0] == "-" and part[1:].isdigit())):
                raise ValueError(f"malformed comma-style entry {part!r} in {text!r}")
            vals.append(int(part))
        values = tuple(vals)
    else:
        vals = []
        for ch in s:
            if ch not in _COMPACT_VALUE:
                raise ValueError(
                    f"invalid character {ch!r} in compact permutation {text!r}"
                )
            vals.append(_COMPACT_VALUE[ch])
        values = tuple(vals)
    _validate_values(values)
    return tuple.__new__(Perm, values)


def format_permutation(p: PermLike, style: str = "auto") -> str:
    """Render a permutation as text.

    style is "compact", "comma", or "auto" (compact when length allows).
    Compact style is only defined up to length 35.
    """
    q = as_perm(p)
    if style == "auto":
        style = "compact" if q.n <= COMPACT_MAX else "comma"
    if style == "compact":
        if q.n > COMPACT_MAX:
            raise ValueError(f"compact style caps at length {COMPACT_MAX}, got {q.n}")
        return "".join(_COMPACT_SYMBOLS[v - 1] for v in q)
    if style == "comma":
        return ",".join(str(v) for v in q)
    raise ValueError(f"unknown style {style!r}")


def pattern_of(values: Sequence[int]) -> Perm:
    """The pattern (rank sequence) of a list of distinct integers.

    >>> pattern_of((4, 7, 2))
    Perm('231')
    """
    if len(set(values)) != len(values):
        raise ValueError("values must be distinct")
    if not values:
        raise ValueError("values must be non-empty")
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, idx in enumerate(order, start=1):
        ranks[idx] = r
    return Perm(ranks)


def inflate(tau: PermLike, gamma: PermLike) -> Perm:
    """Uniform inflation: replace every entry of tau by a copy of gamma.

    The result has length |tau| * |gamma|; position (i-1)m + j holds
    m*(tau_i - 1) + gamma_j where m = |gamma|. Block i occupies consecutive
    positions and its values form the interval the rank of tau_i selects.

    >>> inflate("12", "312")
    Perm('312645')
    """
    t = as_perm(tau)
    g = as_perm(gamma)
    m = g.n
    return Perm(tuple(m * (tv - 1) + gv for tv in t for gv in g))


def generalized_inflate(tau: PermLike, blocks: Sequence[PermLike]) -> Perm:
    """Inflate entry i of tau by its own block gamma_i.

    Block i sits at consecutive positions, and the value intervals are
    stacked in the order given by the ranks of tau: the block at the entry
    with rank r gets the r-th lowest interval.

    >>> generalized_inflate("231", ("12", "213", "1"))
    Perm('235461')
    """
    t = as_perm(tau)
    gs = [as_perm(b) for b in blocks]
    if len(gs) != t.n:
        raise ValueError(f"expected {t.n} blocks, got {len(gs)}")
    sizes = [g.n for g in gs]
    offsets = []
    for i in range(t.n):
        off = sum(sizes[j] for j in range(t.n) if t[j] < t[i])
        offsets.append(off)
    out: list[int] = []
    for i, g in enumerate(gs):
        out.extend(offsets[i] + gv for gv in g)
    return Perm(tuple(out))


def rotate(pi: PermLike) -> Perm:
    """Rotate the plot of pi by 180 degrees: R(pi)_i = n+1 - pi_{n+1-i}.

    An involution. Fixed points are the centrally symmetric permutations.
    """
    p = as_perm(pi)
    n = p.n
    return Perm(tuple(n + 1 - p[n - 1 - i] for i in range(n)))


def is_centrally_symmetric(pi: PermLike) -> bool:
    p = as_perm(pi)
    n = p.n
    # check i paired with n+1-i; center (odd n) is forced automatically
    return all(p[i] + p[n - 1 - i] == n + 1 for i in range((n + 1) // 2))


def count_occurrences(pi: PermLike, tau: PermLike) -> int:
    """Number of occurrences of pattern pi in tau, by direct enumeration.

    Reference implementation: iterates all C(|tau|, |pi|) index subsets.
    Returns 0 when |pi| > |tau|. Intended as the oracle the optimized
    counters are tested against; cost grows binomially.
    """
    p = as_perm(pi)
    t = as_perm(tau)
    k = p.n
    if k > t.n:
        return 0
    target = tuple(p)
    count = 0
    for sub in combinations(t, k):
        order = sorted(range(k), key=sub.__getitem__)
        ranks = [0] * k
        for r, idx in enumerate(order, start=1):
            ranks[idx] = r
        if tuple(ranks) == target:
            count += 1
    return count


def density(pi: PermLike, tau: PermLike) -> Fraction:
    """Pattern density t(pi, tau) = occurrences / C(|tau|, |pi|), exact.

    >>> density("12", "132")
    Fraction(2, 3)
    """
    p = as_perm(pi)
    t = as_perm(tau)
    if p.n > t.n:
        raise ValueError(
            f"density undefined: pattern length {p.n} exceeds host length {t.n}"
        )
    return Fraction(count_occurrences(p, t), comb(t.n, p.n))


PATTERNS_3 = (
    Perm((1, 2, 3)),
    Perm((1, 3, 2)),
    Perm((2, 1, 3)),
    Perm((2, 3, 1)),
    Perm((3, 1, 2)),
    Perm((3, 2, 1)),
)


@dataclass(frozen=True)
class PatternCounts3:
    """All six length-3 pattern counts of one permutation, plus pair counts.

    counts maps each element of PATTERNS_3 to its occurrence count; inv12
    and inv21 count ascending and descending pairs.
    """

    n: int
    counts: dict
    inv12: int
    inv21: int

    def total_triples(self) -> int:
        return comb(self.n, 3)

    def density_of(self, pi: PermLike) -> Fraction:
        p = as_perm(pi)
        if p.n == 2:
            c = self.inv12 if p == Perm((1, 2)) else self.inv21
            return Fraction(c, comb(self.n, 2))
        return Fraction(self.counts[p], comb(self.n, 3))


def count_length3_all(tau: PermLike) -> PatternCounts3:
    """Count all six length-3 patterns and both length-2 patterns at once.

    O(n^2) time, O(n) extra space. For each pair of positions i < j the
    elements after j are split into three value ranges relative to
    (tau_i, tau_j) using a running cumulative table of the suffix.
    """
    t = as_perm(tau)
    n = t.n
    if n < 3:
        raise ValueError(f"need length >= 3, got {n}")
    vals = tuple(t)
    c123 = c132 = c213 = c231 = c312 = c321 = 0
    inv12 = 0
    suffix = [0] * (n + 1)
    for v in vals:
        suffix[v] = 1
    cum = [0] * (n + 1)
    for j in range(n):
        b = vals[j]
        suffix[b] = 0
        # cum[t] = #{k > j : vals[k] <= t}, rebuilt in O(n)
        run = 0
        for v in range(1, n + 1):
            run += suffix[v]
            cum[v] = run
        rem = n - 1 - j
        for i in range(j):
            a = vals[i]
            if a < b:
                inv12 += 1
                below = cum[a]
                between = cum[b] - cum[a]
                c123 += rem - cum[b]
                c132 += between
                c231 += below
            else:
                below = cum[b]
                between = cum[a] - cum[b]
                c213 += rem - cum[a]
                c312 += between
                c321 += below
    counts = {
        PATTERNS_3[0]: c123,
        PATTERNS_3[1]: c132,
        PATTERNS_3[2]: c213,
        PATTERNS_3[3]: c231,
        PATTERNS_3[4]: c312,
        PATTERNS_3[5]: c321,
    }
    return PatternCounts3(n=n, counts=counts, inv12=inv12, inv21=comb(n, 2) - inv12)


def all_patterns(k: int) -> list[Perm]:
    """All permutations of length k in lexicographic order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return [tuple.__new__(Perm, p) for p in permutations(range(1, k + 1))]
