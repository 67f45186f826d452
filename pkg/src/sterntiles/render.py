"""Deterministic rasterization of patches to PPM (binary, golden-testable)
and SVG (for inspection).

Color is carried by lattice points, not tiles: corners meeting at a point
share one value, so one colored cell per point reproduces the figures.
The default "points" mode writes one pixel per lattice point on a sheared
grid (column 2i + j, row counted downward from the top); the optional
"fill" mode colors every pixel by its nearest lattice point.
"""

from __future__ import annotations

import colorsys

from .errors import UnsupportedFormat
from .lattice import SegPatch, SquarePatch, TriPatch

_P3_PALETTE = {0: (255, 255, 255), 1: (0, 0, 255), 2: (255, 0, 0)}
_P5_PALETTE = {
    0: (255, 255, 255),
    1: (0, 255, 255),
    2: (255, 0, 255),
    3: (255, 255, 0),
    4: (0, 0, 0),
}
_BACKGROUND = (255, 255, 255)

SQRT3_OVER_2 = 0.8660254037844386


def palette_for(modulus: int) -> dict[int, tuple[int, int, int]]:
    """Residue -> RGB.  Fixed schemes for moduli 3 and 5; otherwise zero
    stays white and the rest get evenly spaced hues."""
    if modulus == 3:
        return dict(_P3_PALETTE)
    if modulus == 5:
        return dict(_P5_PALETTE)
    out = {0: (255, 255, 255)}
    for v in range(1, modulus):
        h = (v - 1) / (modulus - 1)
        r, g, b = colorsys.hsv_to_rgb(h, 1.0, 1.0)
        out[v] = (round(255 * r), round(255 * g), round(255 * b))
    return out


def _grid_geometry(patch):
    """Pixel width/height and the point -> (col, row) placement."""
    if isinstance(patch, TriPatch):
        n = patch.side
        if patch.shape == "triangle":
            return 2 * n + 1, n + 1, lambda i, j: (2 * i + j, n - j)
        return 4 * n + 1, 2 * n + 1, lambda i, j: (2 * i + j + 2 * n, n - j)
    if isinstance(patch, SquarePatch):
        n = patch.side
        return n + 1, n + 1, lambda i, j: (i, n - j)
    if isinstance(patch, SegPatch):
        return len(patch.values), 1, lambda i, j: (i, 0)
    raise TypeError(f"cannot render {type(patch).__name__}")


def _point_pixels(patch, palette):
    width, height, place = _grid_geometry(patch)
    pixels = [[_BACKGROUND] * width for _ in range(height)]
    if isinstance(patch, SegPatch):
        it = ((i, 0, v) for i, v in enumerate(patch.values))
    else:
        it = patch.points()
    for i, j, v in it:
        col, row = place(i, j)
        pixels[row][col] = palette[v]
    return pixels


def _fill_pixels(patch, palette, scale):
    """Every pixel takes the color of its nearest lattice point."""
    if isinstance(patch, SegPatch):
        pixels = []
        row = []
        for v in patch.values:
            row.extend([palette[v]] * scale)
        return [row] * scale
    values = {(i, j): v for i, j, v in patch.points()}
    if isinstance(patch, TriPatch) and patch.shape == "hex":
        n = patch.side
        jlo, xlo = -n, -n
        width, height = scale * 4 * n + 1, scale * 2 * n + 1
    else:
        n = patch.side
        jlo, xlo = 0, 0
        width = scale * (2 * n if isinstance(patch, TriPatch) else n) + 1
        height = scale * n + 1
    square = isinstance(patch, SquarePatch)
    pixels = []
    for r in range(height):
        y = jlo + (height - 1 - r) / scale
        row = []
        for c in range(width):
            if square:
                x = xlo + c / scale
                best = (round(x), round(y))
            else:
                x = xlo + c / (2 * scale)
                best, best_d = None, None
                for j0 in (int(y) - 1, int(y), int(y) + 1):
                    i0 = round(x - j0 / 2)
                    for i in (i0 - 1, i0, i0 + 1):
                        d = (x - i - j0 / 2) ** 2 + 0.75 * (y - j0) ** 2
                        if (i, j0) in values and (best_d is None or d < best_d):
                            best, best_d = (i, j0), d
            row.append(palette.get(values.get(best), _BACKGROUND)
                       if best in values else _BACKGROUND)
        pixels.append(row)
    return pixels


def to_ppm(patch, palette=None, mode: str = "points", scale: int = 4) -> bytes:
    palette = palette or palette_for(patch.modulus)
    if mode == "points":
        pixels = _point_pixels(patch, palette)
    elif mode == "fill":
        pixels = _fill_pixels(patch, palette, scale)
    else:
        raise UnsupportedFormat(f"unknown render mode {mode!r}")
    height = len(pixels)
    width = len(pixels[0])
    body = bytearray()
    for row in pixels:
        for rgb in row:
            body.extend(rgb)
    return b"P6\n%d %d\n255\n" % (width, height) + bytes(body)


def to_svg(patch, palette=None, radius: float = 0.3) -> bytes:
    """One dot per lattice point, placed at exact sheared coordinates with
    the vertical axis stretched by sqrt(3)/2."""
    palette = palette or palette_for(patch.modulus)
    parts = []
    if isinstance(patch, SegPatch):
        pts = [(i, 0, v) for i, v in enumerate(patch.values)]
        n = 0
    else:
        pts = list(patch.points())
        n = patch.side
    xs, ys = [], []
    for i, j, v in pts:
        x = i + j / 2
        y = (n - j) * SQRT3_OVER_2
        xs.append(x)
        ys.append(y)
        r, g, b = palette[v]
        parts.append(
            f'<circle cx="{x:.4f}" cy="{y:.4f}" r="{radius}" '
            f'fill="rgb({r},{g},{b})" stroke="gray" stroke-width="0.02"/>'
        )
    pad = 1.0
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.4f} {y0:.4f} {x1 - x0:.4f} {y1 - y0:.4f}">'
    )
    return (header + "".join(parts) + "</svg>").encode()


def render(patch, fmt: str = "ppm", **options) -> bytes:
    if fmt == "ppm":
        return to_ppm(patch, **options)
    if fmt == "svg":
        options.pop("mode", None)
        options.pop("scale", None)
        return to_svg(patch, **options)
    raise UnsupportedFormat(f"unknown image format {fmt!r}")
