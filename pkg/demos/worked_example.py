"""
A full worked example with the length-9 candidate 472951836
===========================================================

Exact pattern densities, the limit densities of its uniform inflation,
and the reason it is not 3-inflatable.
"""

from fractions import Fraction

from inflatable import (
    PATTERNS_3,
    check_3_inflatable,
    count_length3_all,
    density,
    limit_density_uniform,
)

tau = "472951836"

# exact densities of every length-3 pattern inside tau itself
stats = count_length3_all(tau)
print(f"tau = {tau}")
print(f"ascending pairs: {stats.inv12} of 36 ({Fraction(stats.inv12, 36)})")
for p in PATTERNS_3:
    print(f"  t({p}, tau) = {density(p, tau)}")

# limit densities of the uniform inflation of tau, all exact rationals
print("\nlimit densities of the uniform inflation:")
for p in PATTERNS_3:
    print(f"  lim t({p}) = {limit_density_uniform(p, tau)}")

# those limits are not all 1/6, so the inflation is not 3-symmetric;
# the checker reaches the same verdict by comparing exact targets
report = check_3_inflatable(tau)
print(f"\nadmissible length: {report.admissible_length}")
print(f"3-inflatable: {report.verdict}")
print("required vs observed:")
for p in PATTERNS_3:
    print(f"  {p}: required {report.required[p]}, observed {report.observed[p]}")
