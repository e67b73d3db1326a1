"""
Which lengths can carry a 3-inflatable permutation
==================================================

The six exact length-3 targets must be integer counts. That happens
exactly when n mod 144 lies in a six-element set of residues, and the
residues multiply among themselves.
"""

from inflatable import admissible_residues, residue_multiplication_table, target_counts_3

residues = admissible_residues(144)
print(f"admissible residues mod 144: {residues}")

# every admissible length up to 300
admissible = [n for n in range(1, 301) if n % 144 in set(residues)]
print(f"admissible lengths through 300: {admissible}")

# the first inadmissible case: length 9 would need a fractional count
print("\nlength 9 targets:", target_counts_3(9))
print("length 17 targets:", {str(k): v for k, v in target_counts_3(17).items()})

# n mod 144 and m mod 144 determine (n * m) mod 144, so admissibility
# survives multiplication of lengths; the table below is closed
table = residue_multiplication_table()
print("\nresidue product table:")
print("      " + "".join(f"{s:>5}" for s in residues))
for r in residues:
    print(f"{r:>5} " + "".join(f"{table[r][s]:>5}" for s in residues))
