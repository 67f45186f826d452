"""Lattice patches holding corner values, plus tile extraction.

Corners that meet at the same lattice point always share one value, so a
patch stores a single value per point instead of three values per tile.
Triangular patches use coordinates (i, j) with i, j >= 0 and i + j <= n;
hexagonal patches use centered coordinates with |i|, |j|, |i + j| <= n.

A down-oriented triangular patch stores the half-turn image of itself in
the same coordinate domain: point (i, j) of the array sits at the
half-turn position in the plane.  With that convention the refinement
formulas are identical for both orientations and ``tile_at`` only has to
flip the reported orientation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import OutOfBounds, ShapeMismatch

UP = "up"
DOWN = "down"


def flip(orientation: str) -> str:
    return DOWN if orientation == UP else UP


@dataclass(frozen=True)
class TriTile:
    """One decorated triangle.

    Corner order follows the tile figure: an up tile lists (bottom-left,
    bottom-right, top); a down tile lists (top-right, top-left, bottom).
    """

    orientation: str
    corners: tuple[int, int, int]
    modulus: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "corners", tuple(v % self.modulus for v in self.corners)
        )

    @property
    def row(self) -> tuple[int, int, int]:
        return self.corners

    def __add__(self, other: "TriTile") -> "TriTile":
        if other.orientation != self.orientation or other.modulus != self.modulus:
            raise ShapeMismatch("tile addition needs matching orientation/modulus")
        return TriTile(
            self.orientation,
            tuple(a + b for a, b in zip(self.corners, other.corners)),
            self.modulus,
        )

    def scale(self, c: int) -> "TriTile":
        return TriTile(self.orientation, tuple(c * v for v in self.corners),
                       self.modulus)


@dataclass(frozen=True)
class SegTile:
    """One decorated unit segment: (left, right) endpoint values."""

    endpoints: tuple[int, int]
    modulus: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "endpoints", tuple(v % self.modulus for v in self.endpoints)
        )

    @property
    def row(self) -> tuple[int, int]:
        return self.endpoints

    def __add__(self, other: "SegTile") -> "SegTile":
        if other.modulus != self.modulus:
            raise ShapeMismatch("segment addition needs matching modulus")
        return SegTile(
            tuple(a + b for a, b in zip(self.endpoints, other.endpoints)),
            self.modulus,
        )

    def scale(self, c: int) -> "SegTile":
        return SegTile(tuple(c * v for v in self.endpoints), self.modulus)


@dataclass(frozen=True)
class TriPatch:
    """Triangular or hexagonal patch of corner values.

    shape: "triangle" (with orientation "up"/"down") or "hex".
    order: number of substitution steps applied to the seed.
    side: lattice rows (2**order for the base rule; hexes grow per step too).
    rows: triangle -> rows[j][i] for j in 0..n, i in 0..n-j;
          hex      -> rows[j+n][i+n] for j in -n..n, i in imin(j)..imax(j),
                      where imin(j) = max(-n, -n-j) and the row is stored
                      with offset i - imin(j).
    """

    shape: str
    orientation: str | None
    order: int
    side: int
    modulus: int
    rows: tuple[tuple[int, ...], ...]

    def in_domain(self, i: int, j: int) -> bool:
        n = self.side
        if self.shape == "triangle":
            return 0 <= i and 0 <= j and i + j <= n
        return -n <= i <= n and -n <= j <= n and -n <= i + j <= n

    def get(self, i: int, j: int) -> int:
        if not self.in_domain(i, j):
            raise OutOfBounds(f"point ({i}, {j}) outside {self.shape} of side {self.side}")
        if self.shape == "triangle":
            return self.rows[j][i]
        n = self.side
        return self.rows[j + n][i - max(-n, -n - j)]

    def points(self):
        """Iterate (i, j, value) over the whole domain."""
        n = self.side
        if self.shape == "triangle":
            for j, row in enumerate(self.rows):
                for i, v in enumerate(row):
                    yield i, j, v
        else:
            for j in range(-n, n + 1):
                imin = max(-n, -n - j)
                for off, v in enumerate(self.rows[j + n]):
                    yield imin + off, j, v


@dataclass(frozen=True)
class SquarePatch:
    """Square patch of corner values: rows[j][i] for i, j in 0..n."""

    order: int
    side: int
    modulus: int
    rows: tuple[tuple[int, ...], ...]

    def get(self, i: int, j: int) -> int:
        if not (0 <= i <= self.side and 0 <= j <= self.side):
            raise OutOfBounds(f"point ({i}, {j}) outside square of side {self.side}")
        return self.rows[j][i]

    def points(self):
        for j, row in enumerate(self.rows):
            for i, v in enumerate(row):
                yield i, j, v


@dataclass(frozen=True)
class SegPatch:
    """Word of endpoint values; order k holds 2**k + 1 points."""

    order: int
    modulus: int
    values: tuple[int, ...]

    def get(self, i: int) -> int:
        if not 0 <= i < len(self.values):
            raise OutOfBounds(f"index {i} outside word of length {len(self.values)}")
        return self.values[i]

    def tile(self, n: int) -> SegTile:
        """The n-th unit tile of the word."""
        return SegTile((self.get(n), self.get(n + 1)), self.modulus)


def triangle_rows(n: int, fill: int = 0) -> list[list[int]]:
    return [[fill] * (n - j + 1) for j in range(n + 1)]


def hex_rows(n: int, fill: int = 0) -> list[list[int]]:
    out = []
    for j in range(-n, n + 1):
        imin = max(-n, -n - j)
        imax = min(n, n - j)
        out.append([fill] * (imax - imin + 1))
    return out


def freeze(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in rows)


def patch_of_tile(t: TriTile) -> TriPatch:
    """Order-0 patch holding exactly one tile."""
    x, y, z = t.corners
    return TriPatch("triangle", t.orientation, 0, 1, t.modulus,
                    ((x, y), (z,)))


def tile_at(patch: TriPatch, i: int, j: int, cell: str) -> TriTile:
    """The tile in cell (i, j) of the patch.

    ``cell`` names the cell type in the patch's own coordinate frame; for a
    down-oriented triangular patch the physical orientation of the returned
    tile is flipped (the array stores the half-turn image).
    """
    if cell == UP:
        corners = (patch.get(i, j), patch.get(i + 1, j), patch.get(i, j + 1))
        orient = UP
    else:
        corners = (patch.get(i + 1, j + 1), patch.get(i, j + 1), patch.get(i + 1, j))
        orient = DOWN
    if patch.shape == "triangle" and patch.orientation == DOWN:
        orient = flip(orient)
    return TriTile(orient, corners, patch.modulus)


def _check_compatible(a: TriPatch, b: TriPatch) -> None:
    if (a.shape, a.orientation, a.side, a.modulus) != (
        b.shape, b.orientation, b.side, b.modulus
    ):
        raise ShapeMismatch(
            f"incompatible patches: {a.shape}/{a.orientation}/{a.side} vs "
            f"{b.shape}/{b.orientation}/{b.side}"
        )


def patch_equal(a: TriPatch, b: TriPatch) -> bool:
    _check_compatible(a, b)
    return a.rows == b.rows


def patch_add(a: TriPatch, b: TriPatch) -> TriPatch:
    _check_compatible(a, b)
    m = a.modulus
    rows = tuple(
        tuple((u + v) % m for u, v in zip(ra, rb))
        for ra, rb in zip(a.rows, b.rows)
    )
    return TriPatch(a.shape, a.orientation, a.order, a.side, m, rows)


def patch_scale(c: int, a: TriPatch) -> TriPatch:
    m = a.modulus
    rows = tuple(tuple(c * v % m for v in row) for row in a.rows)
    return TriPatch(a.shape, a.orientation, a.order, a.side, m, rows)


def to_json(patch) -> str:
    """Stable JSON dump used by golden tests and the CLI."""
    if isinstance(patch, TriPatch):
        shape = patch.shape if patch.shape == "hex" else f"triangle-{patch.orientation}"
        doc = {
            "modulus": patch.modulus,
            "shape": shape,
            "order": patch.order,
            "rows": [list(r) for r in patch.rows],
        }
    elif isinstance(patch, SquarePatch):
        doc = {
            "modulus": patch.modulus,
            "shape": "square",
            "order": patch.order,
            "rows": [list(r) for r in patch.rows],
        }
    elif isinstance(patch, SegPatch):
        doc = {
            "modulus": patch.modulus,
            "shape": "segment",
            "order": patch.order,
            "rows": [list(patch.values)],
        }
    else:
        raise TypeError(f"cannot serialize {type(patch).__name__}")
    return json.dumps(doc, separators=(", ", ": "))


def from_json(text: str):
    doc = json.loads(text)
    m = doc["modulus"]
    shape = doc["shape"]
    rows = freeze(doc["rows"])
    order = doc["order"]
    if shape == "segment":
        return SegPatch(order, m, rows[0])
    if shape == "square":
        return SquarePatch(order, len(rows) - 1, m, rows)
    if shape == "hex":
        n = (len(rows) - 1) // 2
        return TriPatch("hex", None, order, n, m, rows)
    orientation = shape.split("-")[1]
    return TriPatch("triangle", orientation, order, len(rows) - 1, m, rows)
