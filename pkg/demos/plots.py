"""
Permutation plots
=================

ASCII art for the terminal and SVG for everything else.
"""

from pathlib import Path

from inflatable import render_ascii, render_svg, rotate

tau = "472951836"
print(render_ascii(tau))

# rotation by 180 degrees is the symmetry behind centrally symmetric
# candidates; compare the two pictures
print(render_ascii(rotate(tau)))

out = Path("inflatable_plot.svg")
out.write_text(render_svg("G54ABC319HF678ED2"), encoding="utf-8")
print(f"wrote {out.resolve()}")
