"""Limit densities of patterns under repeated inflation.

The central formula: if inflation blocks are drawn so that the pattern
densities of the block sequence converge to a profile s, then

    lim t(pi, inflate(tau, gamma_j))
        = (|pi|! / n^|pi|) * sum over block partitions (b, sigma) of pi of
          C(n, |sigma|) * t(sigma, tau) * prod_alpha s(alpha) / |alpha|!

with n = |tau|, the product running over the inner blocks alpha of b, and
terms with |sigma| > n dropping out (the binomial vanishes). Everything here
is exact rational arithmetic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping, Union

from .core import Perm, PermLike, all_patterns, as_perm, density
from .partitions import block_partitions

__all__ = [
    "LIMIT_PATTERN_MAX",
    "DensityProfile",
    "uniform_profile",
    "limit_density_inflation",
    "limit_density_uniform",
    "abc_coefficients",
    "parse_rational",
]

LIMIT_PATTERN_MAX = 6

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Exact rational from an int, Fraction, or "p/q" / "p" text."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not a rational: {value!r} (floats are not accepted)")


class DensityProfile:
    """Assumed limiting pattern densities of the inflation block sequence.

    Maps patterns to exact rationals. Validation is eager: for every length
    k present, all k! patterns of that length must be present and their
    values must sum to 1 (each length is a probability distribution over
    patterns of that length).
    """

    def __init__(self, entries: Mapping[PermLike, RationalLike]):
        table: dict[Perm, Fraction] = {}
        for key, val in entries.items():
            p = as_perm(key)
            f = parse_rational(val)
            if f < 0 or f > 1:
                raise ValueError(f"density for {p} out of [0, 1]: {f}")
            if p in table:
                raise ValueError(f"duplicate profile entry for {p}")
            table[p] = f
        by_len: dict[int, list[Perm]] = {}
        for p in table:
            by_len.setdefault(p.n, []).append(p)
        for k, group in sorted(by_len.items()):
            if len(group) != factorial(k):
                raise ValueError(
                    f"profile incomplete at length {k}: "
                    f"{len(group)} of {factorial(k)} patterns present"
                )
            total = sum(table[p] for p in group)
            if total != 1:
                raise ValueError(f"length-{k} profile densities sum to {total}, not 1")
        self._table = table
        self.lengths = frozenset(by_len)

    def __getitem__(self, pattern: PermLike) -> Fraction:
        return self._table[as_perm(pattern)]

    def __contains__(self, pattern: PermLike) -> bool:
        return as_perm(pattern) in self._table

    def covers(self, max_len: int) -> bool:
        return all(k in self.lengths for k in range(1, max_len + 1))

    @classmethod
    def from_json(cls, text: str) -> "DensityProfile":
        """Profile from a JSON object mapping pattern text to rational text."""
        raw = json.loads(text)
        if not isinstance(raw, dict):
            raise ValueError("profile JSON must be an object")
        return cls(raw)


@lru_cache(maxsize=LIMIT_PATTERN_MAX)
def uniform_profile(max_len: int) -> DensityProfile:
    """The uniform profile: every length-k pattern at density 1/k!.

    This is the almost-sure limit for blocks drawn uniformly at random, so
    it is the profile behind limit_density_uniform.
    """
    if not 1 <= max_len <= LIMIT_PATTERN_MAX:
        raise ValueError(f"max_len must be in 1..{LIMIT_PATTERN_MAX}")
    entries: dict[Perm, Fraction] = {}
    for k in range(1, max_len + 1):
        w = Fraction(1, factorial(k))
        for p in all_patterns(k):
            entries[p] = w
    return DensityProfile(entries)


def limit_density_inflation(
    pi: PermLike, tau: PermLike, profile: DensityProfile
) -> Fraction:
    """Exact limit of t(pi, inflate(tau, gamma_j)) for blocks following profile.

    Requires |pi| <= 6 (block partition enumeration) and a profile covering
    every length up to |pi|.

    >>> limit_density_inflation("12", "132", uniform_profile(2))
    Fraction(11, 18)
    """
    p = as_perm(pi)
    t = as_perm(tau)
    k = p.n
    if k > LIMIT_PATTERN_MAX:
        raise ValueError(f"pattern length caps at {LIMIT_PATTERN_MAX}, got {k}")
    if not profile.covers(k):
        missing = [s for s in range(1, k + 1) if s not in profile.lengths]
        raise ValueError(f"profile lacks lengths {missing} needed for |pi| = {k}")
    n = t.n
    sigma_density: dict[Perm, Fraction] = {}
    total = Fraction(0)
    for bp in block_partitions(p):
        s = bp.outer.n
        if s > n:
            continue
        if bp.outer not in sigma_density:
            sigma_density[bp.outer] = density(bp.outer, t)
        term = comb(n, s) * sigma_density[bp.outer]
        for alpha in bp.inner:
            term *= Fraction(profile[alpha], factorial(alpha.n))
        total += term
    return Fraction(factorial(k), n**k) * total


def limit_density_uniform(pi: PermLike, tau: PermLike) -> Fraction:
    """Limit density under uniformly random blocks (uniform profile).

    >>> limit_density_uniform("132", "472951836")
    Fraction(29, 162)
    """
    p = as_perm(pi)
    if p.n > LIMIT_PATTERN_MAX:
        raise ValueError(f"pattern length caps at {LIMIT_PATTERN_MAX}, got {p.n}")
    return limit_density_inflation(p, tau, uniform_profile(p.n))


def abc_coefficients(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (a, b, c) of the linear forms the length-3 limits take.

    For |tau| = n and uniformly random blocks,

        a(n) = 6 C(n,3) / n^3
        b(n) = 6 C(n,2) / (4 n^3)
        c(n) = 1 / (6 n^2)

    and the six length-3 limit densities collapse to

        pi in {132, 213}: a t(pi,tau) +   b t(12,tau) + c
        pi in {231, 312}: a t(pi,tau) +   b t(21,tau) + c
        pi = 123:         a t(pi,tau) + 2 b t(12,tau) + c
        pi = 321:         a t(pi,tau) + 2 b t(21,tau) + c

    (the b multiplicity counts the two-block partitions of pi; the
    monotone patterns have two, the others one).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    a = Fraction(6 * comb(n, 3), n**3)
    b = Fraction(6 * comb(n, 2), 4 * n**3)
    c = Fraction(1, 6 * n**2)
    return a, b, c
