"""Permutation plots: ascii grids and standalone SVG.

Both renderings are byte-deterministic so they can be golden-tested. The
plot convention is cartesian: point (i, tau_i) for each position, column i
left to right, values increasing upward. Rotating the permutation by 180
degrees rotates the picture by 180 degrees.
"""

from __future__ import annotations

from .core import PermLike, as_perm

__all__ = ["render_ascii", "render_svg", "ASCII_MAX"]

ASCII_MAX = 200

_MARK = "*"
_EMPTY = "."


def render_ascii(tau: PermLike) -> str:
    """One text row per value, top row = highest value, '*' at each point.

    >>> print(render_ascii("132"))
    .*.
    ..*
    *..
    """
    t = as_perm(tau)
    n = t.n
    if n > ASCII_MAX:
        raise ValueError(f"ascii plots cap at length {ASCII_MAX}, got {n}")
    rows = []
    for v in range(n, 0, -1):
        rows.append("".join(_MARK if t[i] == v else _EMPTY for i in range(n)))
    return "\n".join(rows)


def render_svg(tau: PermLike) -> str:
    """Standalone SVG: unit grid with light gridlines, one filled circle per point.

    The circle for position i (1-based) sits at (i - 1/2, n - tau_i + 1/2)
    in user units, so the image reads like the ascii plot.
    """
    t = as_perm(tau)
    n = t.n
    px = 24 * n
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {n} {n}" '
        f'width="{px}" height="{px}">',
        f'<rect x="0" y="0" width="{n}" height="{n}" fill="white"/>',
    ]
    for k in range(n + 1):
        parts.append(
            f'<line x1="{k}" y1="0" x2="{k}" y2="{n}" '
            f'stroke="#cccccc" stroke-width="0.03"/>'
        )
        parts.append(
            f'<line x1="0" y1="{k}" x2="{n}" y2="{k}" '
            f'stroke="#cccccc" stroke-width="0.03"/>'
        )
    for i, v in enumerate(t, start=1):
        cx = f"{i - 0.5:.1f}"
        cy = f"{n - v + 0.5:.1f}"
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="0.32" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
