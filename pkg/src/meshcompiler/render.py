"""Static mesh diagrams: ASCII and SVG.

Both renderers draw one horizontal line per mode (mode 0 on top) and one
column per layer, left to right. Each gate spans its two mode rows and is
labeled with its product-order number. Output is deterministic.
"""

from .refiner import Decomposition


def render_ascii(dec: Decomposition) -> str:
    """Text diagram of the mesh.

    Every mode becomes one row; layers become fixed-width columns. A gate
    shows up as a two-row bracket: "/k" on its upper mode and "\\k" on its
    lower mode, where k is the gate's order number.

    Args:
        dec: Decomposition to draw.

    Returns:
        The diagram, one line per mode, ending in a newline.
    """
    n = dec.n
    layer_count = max((g.layer for g in dec.gates), default=0)
    width = max((len(str(g.order)) for g in dec.gates), default=1)
    idle = "-" * (width + 1)
    grid = [[idle] * layer_count for _ in range(n)]
    for g in dec.gates:
        label = str(g.order).rjust(width, "-")
        grid[g.mode][g.layer - 1] = "/" + label
        grid[g.mode + 1][g.layer - 1] = "\\" + label
    mode_width = len(str(n - 1))
    lines = [
        f"{m:>{mode_width}}: " + " ".join(grid[m]) for m in range(n)
    ]
    return "\n".join(lines) + "\n"


def render_svg(dec: Decomposition) -> str:
    """SVG diagram of the mesh with the same layout as render_ascii.

    Args:
        dec: Decomposition to draw.

    Returns:
        A standalone SVG document as a string ending in a newline.
    """
    n = dec.n
    layer_count = max((g.layer for g in dec.gates), default=0)
    margin = 40
    col_w = 64
    row_h = 44
    width = 2 * margin + max(layer_count, 1) * col_w
    height = 2 * margin + (n - 1) * row_h + 1

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for m in range(n):
        y = margin + m * row_h
        parts.append(
            f'<line x1="{margin}" y1="{y}" x2="{width - margin}" y2="{y}" '
            f'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin - 24}" y="{y + 4}" font-family="monospace" '
            f'font-size="12">{m}</text>'
        )
    rect_w = 40
    for g in sorted(dec.gates, key=lambda g: g.order):
        x = margin + (g.layer - 1) * col_w + (col_w - rect_w) // 2
        y = margin + g.mode * row_h - 10
        h = row_h + 20
        cx = x + rect_w // 2
        cy = y + h // 2 + 4
        parts.append(
            f'<rect x="{x}" y="{y}" width="{rect_w}" height="{h}" fill="none" '
            f'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{cx}" y="{cy}" text-anchor="middle" font-family="monospace" '
            f'font-size="12">{g.order}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
