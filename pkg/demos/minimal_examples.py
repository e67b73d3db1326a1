"""
The two known 3-inflatable permutations of length 17
====================================================
"""

from inflatable import check_3_inflatable, render_ascii

# length 17 is the smallest admissible length beyond the trivial n = 1,
# and these two centrally symmetric permutations pass every exact test
for name in ("E534BGA9HC2D1687F", "G54ABC319HF678ED2"):
    report = check_3_inflatable(name)
    counts = report.observed_counts
    print(f"{name}: 3-inflatable = {report.verdict}")
    print(f"  length-3 counts: " + ", ".join(
        f"{p}: {counts[p]}" for p in sorted(counts, key=str) if p.n == 3
    ))
    print()

# the plot of the second one; central symmetry is visible as invariance
# under rotating the page by 180 degrees
print(render_ascii("G54ABC319HF678ED2"))
