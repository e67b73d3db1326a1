"""
Block partitions and the exact limit formula
============================================

The limit density of a pattern inside an inflation sums one term per way
of writing the pattern as a generalized inflation (outer pattern, inner
blocks). This demo lists those representations and evaluates the formula
with a custom block profile.
"""

from inflatable import (
    DensityProfile,
    block_partitions,
    generalized_inflate,
    limit_density_inflation,
    limit_density_uniform,
)

# every way to cut 132 into consecutive blocks of contiguous values
for bp in block_partitions("132"):
    blocks = ",".join(str(b) for b in bp.inner)
    rebuilt = generalized_inflate(bp.outer, bp.inner)
    print(f"outer {bp.outer}  blocks {blocks}  sizes {bp.sizes}  -> {rebuilt}")

# uniform random blocks give the standard limit
print(f"\nuniform blocks:  lim t(12) = {limit_density_uniform('12', '132')}")

# a profile that forces every block to be ascending changes the answer
profile = DensityProfile({"1": "1", "12": "1", "21": "0"})
forced = limit_density_inflation("12", "132", profile)
print(f"ascending blocks: lim t(12) = {forced}")
