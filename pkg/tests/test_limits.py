import random
from fractions import Fraction
from math import comb, factorial

import pytest

from inflatable import (
    DensityProfile,
    PATTERNS_3,
    Perm,
    abc_coefficients,
    all_patterns,
    density,
    limit_density_inflation,
    limit_density_uniform,
    rotate,
    uniform_profile,
)
from util import random_perm


def test_uniform_profile_contents():
    prof = uniform_profile(3)
    assert prof["1"] == 1
    assert prof["12"] == Fraction(1, 2)
    assert prof["321"] == Fraction(1, 6)
    assert prof.covers(3) and not prof.covers(4)


def test_profile_validation():
    with pytest.raises(ValueError, match="incomplete"):
        DensityProfile({"12": Fraction(1, 2)})
    with pytest.raises(ValueError, match="sum"):
        DensityProfile({"12": Fraction(2, 3), "21": Fraction(2, 3), "1": 1})
    with pytest.raises(ValueError, match="sum"):
        DensityProfile({"1": Fraction(1, 2)})
    with pytest.raises(ValueError, match="out of"):
        DensityProfile({"12": Fraction(3, 2), "21": Fraction(-1, 2), "1": 1})
    with pytest.raises(ValueError, match="not a rational"):
        DensityProfile({"12": 0.5, "21": 0.5, "1": 1})
    prof = DensityProfile({"12": "1/3", "21": "2/3", "1": "1"})
    assert prof["21"] == Fraction(2, 3)


def test_profile_from_json():
    prof = DensityProfile.from_json('{"1": "1", "12": "1/2", "21": "1/2"}')
    assert prof["12"] == Fraction(1, 2)
    with pytest.raises(ValueError, match="object"):
        DensityProfile.from_json('[1, 2]')


def test_worked_example_length9():
    tau = Perm("472951836")
    assert limit_density_uniform("132", tau) == Fraction(29, 162)
    assert limit_density_uniform("123", tau) == Fraction(23, 162)
    assert limit_density_uniform("213", tau) == Fraction(29, 162)
    assert limit_density_uniform("231", tau) == Fraction(29, 162)
    assert limit_density_uniform("312", tau) == Fraction(29, 162)
    assert limit_density_uniform("321", tau) == Fraction(23, 162)


def test_pair_limit_closed_form():
    # for pi = 12 the formula collapses to
    # (2/n^2) (C(n,2) t(12,tau) + n s / 2) with s the profile's 12-density
    rng = random.Random(31)
    for _ in range(40):
        tau = random_perm(rng, rng.randint(2, 9))
        s = Fraction(rng.randint(0, 8), 8)
        prof = DensityProfile({"1": 1, "12": s, "21": 1 - s})
        n = tau.n
        t12 = density("12", tau)
        closed = Fraction(2, n**2) * (comb(n, 2) * t12 + Fraction(n * s, 2))
        assert limit_density_inflation("12", tau, prof) == closed
    # the direct small case: n = 3, tau = 132, s = 1/2 gives 11/18
    prof = DensityProfile({"1": 1, "12": Fraction(1, 2), "21": Fraction(1, 2)})
    assert limit_density_inflation("12", "132", prof) == Fraction(11, 18)


def test_fixed_point_of_quasirandom_profile():
    # a profile already at the uniform densities must be a fixed point when
    # tau itself has uniform densities; the monotone host of length 1 is
    # the degenerate check: inflating 1 by gamma gives gamma back
    for k in range(1, 5):
        prof = uniform_profile(k)
        for p in all_patterns(k):
            assert limit_density_inflation(p, "1", prof) == prof[p]


def test_singleton_tau_returns_profile():
    prof = DensityProfile(
        {"1": 1, "12": Fraction(1, 4), "21": Fraction(3, 4)}
    )
    assert limit_density_inflation("12", "1", prof) == Fraction(1, 4)
    assert limit_density_inflation("21", "1", prof) == Fraction(3, 4)


def test_limits_sum_to_one_each_length():
    rng = random.Random(32)
    for _ in range(30):
        tau = random_perm(rng, rng.randint(2, 10))
        total2 = sum(limit_density_uniform(p, tau) for p in all_patterns(2))
        assert total2 == 1
        total3 = sum(limit_density_uniform(p, tau) for p in PATTERNS_3)
        assert total3 == 1


def test_abc_values_length9():
    a, b, c = abc_coefficients(9)
    assert a == Fraction(56, 81)
    assert b == Fraction(2, 27)
    assert c == Fraction(1, 486)
    with pytest.raises(ValueError):
        abc_coefficients(2)


def test_linear_forms():
    # each length-3 limit is a t(pi) + mult b t(pair) + c
    rng = random.Random(33)
    mults = {
        "123": ("12", 2), "132": ("12", 1), "213": ("12", 1),
        "231": ("21", 1), "312": ("21", 1), "321": ("21", 2),
    }
    for _ in range(30):
        tau = random_perm(rng, rng.randint(3, 10))
        a, b, c = abc_coefficients(tau.n)
        for p in PATTERNS_3:
            pair, mult = mults[str(p)]
            expect = a * density(p, tau) + mult * b * density(pair, tau) + c
            assert limit_density_uniform(p, tau) == expect, (p, tau)


def test_rotation_compatibility():
    # rotating tau rotates the limit densities
    rng = random.Random(34)
    for _ in range(25):
        tau = random_perm(rng, rng.randint(2, 9))
        for p in PATTERNS_3:
            assert limit_density_uniform(p, tau) == limit_density_uniform(
                rotate(p), rotate(tau)
            )


def test_profile_coverage_errors():
    prof = uniform_profile(2)
    with pytest.raises(ValueError, match="lacks"):
        limit_density_inflation("123", "132", prof)
    with pytest.raises(ValueError, match="caps"):
        limit_density_uniform("1234567", "1234567")


def test_term_skipping_when_sigma_exceeds_tau():
    # |tau| = 2 cannot host length-3 outer patterns; formula still exact
    val = limit_density_uniform("123", "12")
    # by hand: partitions of 123 with sigma length <= 2 contribute
    # sigma=12 twice (C(2,2) t(12,12) = 1 each, weights 1 * 1/4) and
    # sigma=1 once (2 * 1 * 1/36): (6/8) * (1/4 + 1/4 + 1/18) = 5/12
    assert val == Fraction(5, 12)


def test_parse_rational_rejects_floats():
    from inflatable.limits import parse_rational
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(2) == Fraction(2)
    with pytest.raises(ValueError):
        parse_rational(0.5)
