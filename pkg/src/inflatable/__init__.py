"""Exact calculus of permutation inflation.

Pattern densities as exact rationals, the limit-density formula for
repeated inflation, decision procedures for 2- and 3-inflatability,
admissible-length arithmetic, exhaustive search for 3-inflatable
permutations, and a Monte Carlo cross-check.
"""

from .core import (
    COMPACT_MAX,
    PATTERNS_3,
    PatternCounts3,
    Perm,
    all_patterns,
    as_perm,
    count_length3_all,
    count_occurrences,
    density,
    format_permutation,
    generalized_inflate,
    inflate,
    is_centrally_symmetric,
    parse_permutation,
    pattern_of,
    rotate,
)
from .criteria import (
    InflatabilityReport,
    admissible_residues,
    check_3_inflatable,
    compose_inflatables,
    is_2_inflatable,
    residue_multiplication_table,
    target_counts_3,
    target_densities_3,
)
from .limits import (
    DensityProfile,
    abc_coefficients,
    limit_density_inflation,
    limit_density_uniform,
    uniform_profile,
)
from .montecarlo import (
    EXACT_CELL_CAP,
    GENERATOR_ID,
    Estimate,
    estimate_limit_density,
)
from .partitions import BlockPartition, block_partitions
from .plotting import render_ascii, render_svg
from .search import (
    SearchConfig,
    SearchResult,
    SearchTimeout,
    enumerate_centrally_symmetric,
    search_3_inflatable,
    space_size,
)

__version__ = "0.1.0"

__all__ = [
    "COMPACT_MAX",
    "PATTERNS_3",
    "PatternCounts3",
    "Perm",
    "all_patterns",
    "as_perm",
    "count_length3_all",
    "count_occurrences",
    "density",
    "format_permutation",
    "generalized_inflate",
    "inflate",
    "is_centrally_symmetric",
    "parse_permutation",
    "pattern_of",
    "rotate",
    "InflatabilityReport",
    "admissible_residues",
    "check_3_inflatable",
    "compose_inflatables",
    "is_2_inflatable",
    "residue_multiplication_table",
    "target_counts_3",
    "target_densities_3",
    "DensityProfile",
    "abc_coefficients",
    "limit_density_inflation",
    "limit_density_uniform",
    "uniform_profile",
    "EXACT_CELL_CAP",
    "GENERATOR_ID",
    "Estimate",
    "estimate_limit_density",
    "BlockPartition",
    "block_partitions",
    "render_ascii",
    "render_svg",
    "SearchConfig",
    "SearchResult",
    "SearchTimeout",
    "enumerate_centrally_symmetric",
    "search_3_inflatable",
    "space_size",
    "__version__",
]
