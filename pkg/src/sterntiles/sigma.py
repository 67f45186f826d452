"""The 2D substitution on decorated triangles, its matrix calculus, position
words, whole-patch refinement, and the seven variant rules.

Position letters are written ``a`` (central child, flips orientation), ``b``
(bottom-left), ``g`` (bottom-right) and ``d`` (top); a position word is a
plain string over "abgd".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ring
from .errors import InconsistentRule
from .lattice import (
    DOWN,
    UP,
    SquarePatch,
    TriPatch,
    TriTile,
    flip,
    freeze,
    patch_of_tile,
    triangle_rows,
)
from .ring import Mat, RingSpec, identity, mat_inv, mat_mul, vec_mat

ALPHABET = "abgd"

_LETTER_MATS = {
    "a": ring.mat_A,
    "b": ring.mat_B,
    "g": ring.mat_C,
    "d": ring.mat_D,
}

# Base-4 digit values per letter.  The plane convention numbers positions in
# a nested-supertile tiling of the plane (central tile = 0); the sector
# convention numbers positions inside one sector of a hexagonal tiling
# (bottom-left tile = 0).
_DIGITS = {
    "plane": {"a": 0, "b": 1, "g": 2, "d": 3},
    "sector": {"a": 1, "b": 0, "g": 2, "d": 3},
}


def letter_matrix(letter: str, modulus: int) -> Mat:
    return _LETTER_MATS[letter](modulus)


def word_matrix(w: str, modulus: int) -> Mat:
    """Product of letter matrices; the empty word gives the identity."""
    m = identity(3, modulus)
    for letter in w:
        m = mat_mul(m, letter_matrix(letter, modulus))
    return m


def word_to_index(w: str, convention: str = "plane") -> int:
    digits = _DIGITS[convention]
    n = 0
    for letter in w:
        n = 4 * n + digits[letter]
    return n


def index_to_word(n: int, k: int, convention: str = "plane") -> str:
    if not 0 <= n < 4 ** k:
        raise ValueError(f"index {n} outside [0, 4^{k})")
    digits = _DIGITS[convention]
    letters = {v: l for l, v in digits.items()}
    out = []
    for _ in range(k):
        out.append(letters[n % 4])
        n //= 4
    return "".join(reversed(out))


def sigma_children(t: TriTile) -> tuple[TriTile, TriTile, TriTile, TriTile]:
    """The four children (central, bottom-left, bottom-right, top).

    The central child flips orientation; the others preserve it.
    """
    x, y, z = t.corners
    m = t.modulus
    o, fo = t.orientation, flip(t.orientation)
    return (
        TriTile(fo, (y + z, x + z, x + y), m),
        TriTile(o, (x, x + y, x + z), m),
        TriTile(o, (x + y, y, y + z), m),
        TriTile(o, (x + z, y + z, z), m),
    )


def child(t: TriTile, letter: str) -> TriTile:
    return sigma_children(t)["abgd".index(letter)]


def inverse_child(t: TriTile, letter: str) -> TriTile:
    """The tile whose ``letter`` child is t."""
    inv = mat_inv(letter_matrix(letter, t.modulus))
    corners = vec_mat(t.corners, inv)
    orientation = flip(t.orientation) if letter == "a" else t.orientation
    return TriTile(orientation, corners, t.modulus)


def tile_at_word(s_root: TriTile, w: str) -> TriTile:
    """The tile at position w inside the |w|-supertile grown from s_root."""
    corners = vec_mat(s_root.corners, word_matrix(w, s_root.modulus))
    orientation = s_root.orientation
    if w.count("a") % 2 == 1:
        orientation = flip(orientation)
    return TriTile(orientation, corners, s_root.modulus)


def root_from_tile(t: TriTile, w: str) -> TriTile:
    """The unique supertile root with tile t at position w."""
    RingSpec(t.modulus).require_odd_prime("root reconstruction")
    corners = vec_mat(t.corners, mat_inv(word_matrix(w, t.modulus)))
    orientation = t.orientation
    if w.count("a") % 2 == 1:
        orientation = flip(orientation)
    return TriTile(orientation, corners, t.modulus)


def word_to_cell(w: str) -> tuple[int, int, str]:
    """Decode a position word into array cell coordinates.

    Returns (i, j, cell_type) inside a patch of side 2**len(w); cell_type is
    the array-frame type accepted by ``lattice.tile_at``.  The decoding is
    identical for up- and down-oriented roots because down patches store
    their half-turn image.  While descending, an up subregion is tracked by
    its origin corner and a down subregion by its maximal corner.
    """
    kind = UP
    i = j = 0
    n = 2 ** len(w)
    for letter in w:
        h = n // 2
        if kind == UP:
            if letter == "g":
                i += h
            elif letter == "d":
                j += h
            elif letter == "a":
                kind = DOWN
                i, j = i + h, j + h
        else:
            if letter == "g":
                i -= h
            elif letter == "d":
                j -= h
            elif letter == "a":
                kind = UP
                i, j = i - h, j - h
        n = h
    if kind == UP:
        return i, j, UP
    return i - 1, j - 1, DOWN


def refine_midpoint(patch: TriPatch) -> TriPatch:
    """One substitution step as whole-patch lattice refinement.

    Even/even points copy their parent; odd points sum the two endpoints of
    the parent edge they bisect.  Works on triangular and hexagonal patches.
    """
    m = patch.modulus
    n = patch.side
    n2 = 2 * n

    def parent(i: int, j: int) -> int:
        return patch.get(i, j)

    if patch.shape == "triangle":
        rows = []
        for J in range(n2 + 1):
            row = []
            for I in range(n2 - J + 1):
                row.append(_refined_value(parent, I, J, m))
            rows.append(row)
        return TriPatch("triangle", patch.orientation, patch.order + 1, n2,
                        m, freeze(rows))
    rows = []
    for J in range(-n2, n2 + 1):
        imin = max(-n2, -n2 - J)
        imax = min(n2, n2 - J)
        rows.append([_refined_value(parent, I, J, m) for I in range(imin, imax + 1)])
    return TriPatch("hex", None, patch.order + 1, n2, m, freeze(rows))


def _refined_value(parent, I: int, J: int, m: int) -> int:
    if I % 2 == 0:
        if J % 2 == 0:
            return parent(I // 2, J // 2)
        return (parent(I // 2, (J - 1) // 2) + parent(I // 2, (J + 1) // 2)) % m
    if J % 2 == 0:
        return (parent((I - 1) // 2, J // 2) + parent((I + 1) // 2, J // 2)) % m
    return (parent((I - 1) // 2, (J + 1) // 2)
            + parent((I + 1) // 2, (J - 1) // 2)) % m


# ---------------------------------------------------------------------------
# Variant rules.  A rule stores, for the canonical "up" cell, the value at
# each refined point (di, dj) with di + dj <= scale, as either a linear
# combination of the parent corners (x, y, z) or a monomial in them.  The
# down-cell table is the half-turn image and is derived, never hand-copied.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubstRule:
    name: str
    geometry: str          # "triangle", "right-triangle" or "square"
    scale: int
    kind: str              # "linear" or "monomial"
    table: dict = field(hash=False)

    @property
    def is_linear(self) -> bool:
        return self.kind == "linear"


def _lin(*coeffs):
    return tuple(coeffs)


_TRI_TABLES = {
    # Base rule: midpoint sums.
    "sigma": (2, "linear", {
        (0, 0): _lin(1, 0, 0), (1, 0): _lin(1, 1, 0), (2, 0): _lin(0, 1, 0),
        (0, 1): _lin(1, 0, 1), (1, 1): _lin(0, 1, 1), (0, 2): _lin(0, 0, 1),
    }),
    # Multiplicative midpoints.
    "sigma1": (2, "monomial", {
        (0, 0): (1, 0, 0), (1, 0): (1, 1, 0), (2, 0): (0, 1, 0),
        (0, 1): (1, 0, 1), (1, 1): (0, 1, 1), (0, 2): (0, 0, 1),
    }),
    "sigma2": (3, "linear", {
        (0, 0): _lin(1, 0, 0), (1, 0): _lin(1, 0, 0), (2, 0): _lin(0, 1, 0),
        (3, 0): _lin(0, 1, 0),
        (0, 1): _lin(1, 0, 0), (1, 1): _lin(1, 1, 1), (2, 1): _lin(0, 1, 0),
        (0, 2): _lin(0, 0, 1), (1, 2): _lin(0, 0, 1),
        (0, 3): _lin(0, 0, 1),
    }),
    "sigma3": (3, "linear", {
        (0, 0): _lin(1, 0, 0), (1, 0): _lin(2, -1, 0), (2, 0): _lin(-1, 2, 0),
        (3, 0): _lin(0, 1, 0),
        (0, 1): _lin(2, 0, -1), (1, 1): _lin(1, 1, 1), (2, 1): _lin(0, 2, -1),
        (0, 2): _lin(-1, 0, 2), (1, 2): _lin(0, -1, 2),
        (0, 3): _lin(0, 0, 1),
    }),
    "sigma4": (3, "linear", {
        (0, 0): _lin(1, 0, 0), (1, 0): _lin(2, 1, 0), (2, 0): _lin(1, 2, 0),
        (3, 0): _lin(0, 1, 0),
        (0, 1): _lin(2, 0, 1), (1, 1): _lin(1, 1, 1), (2, 1): _lin(0, 2, 1),
        (0, 2): _lin(1, 0, 2), (1, 2): _lin(0, 1, 2),
        (0, 3): _lin(0, 0, 1),
    }),
    "sigma5": (3, "linear", {
        (0, 0): _lin(1, 0, 0), (1, 0): _lin(1, -1, 0), (2, 0): _lin(-1, 1, 0),
        (3, 0): _lin(0, 1, 0),
        (0, 1): _lin(1, 0, -1), (1, 1): _lin(1, 1, 1), (2, 1): _lin(0, 1, -1),
        (0, 2): _lin(-1, 0, 1), (1, 2): _lin(0, -1, 1),
        (0, 3): _lin(0, 0, 1),
    }),
    # Same combinatorial rule as sigma, displayed on right isosceles triangles.
    "sigma7": (2, "linear", {
        (0, 0): _lin(1, 0, 0), (1, 0): _lin(1, 1, 0), (2, 0): _lin(0, 1, 0),
        (0, 1): _lin(1, 0, 1), (1, 1): _lin(0, 1, 1), (0, 2): _lin(0, 0, 1),
    }),
}

# Square rule: coefficients over (w, x, y, z) = (top-left, top-right,
# bottom-left, bottom-right); local (di, dj) with dj = 0 the bottom row.
_SQ_TABLE = {
    (0, 0): _lin(0, 0, 1, 0), (1, 0): _lin(0, 0, 1, 1),
    (2, 0): _lin(0, 0, 1, 1), (3, 0): _lin(0, 0, 0, 1),
    (0, 1): _lin(1, 0, 1, 0), (1, 1): _lin(1, 0, 1, 1),
    (2, 1): _lin(0, 1, 1, 1), (3, 1): _lin(0, 1, 0, 1),
    (0, 2): _lin(1, 0, 1, 0), (1, 2): _lin(1, 1, 1, 0),
    (2, 2): _lin(1, 1, 0, 1), (3, 2): _lin(0, 1, 0, 1),
    (0, 3): _lin(1, 0, 0, 0), (1, 3): _lin(1, 1, 0, 0),
    (2, 3): _lin(1, 1, 0, 0), (3, 3): _lin(0, 1, 0, 0),
}

_RULE_CACHE: dict[str, SubstRule] = {}


def _swap(coeffs, a, b):
    c = list(coeffs)
    c[a], c[b] = c[b], c[a]
    return tuple(c)


def _validate_triangle_rule(rule: SubstRule) -> None:
    s, tb = rule.scale, rule.table
    unit = {0: (1, 0, 0), 1: (0, 1, 0), 2: (0, 0, 1)}
    if tb[(0, 0)] != unit[0] or tb[(s, 0)] != unit[1] or tb[(0, s)] != unit[2]:
        raise InconsistentRule(f"{rule.name}: extreme corners are not copied")
    for d in range(1, s):
        bot, bot2 = tb[(d, 0)], tb[(s - d, 0)]
        if bot[2] != 0 or bot2[2] != 0 or bot != _swap(bot2, 0, 1):
            raise InconsistentRule(f"{rule.name}: bottom edge disagrees at {d}")
        left, left2 = tb[(0, d)], tb[(0, s - d)]
        if left[1] != 0 or left2[1] != 0 or left != _swap(left2, 0, 2):
            raise InconsistentRule(f"{rule.name}: left edge disagrees at {d}")
        hyp, hyp2 = tb[(d, s - d)], tb[(s - d, d)]
        if hyp[0] != 0 or hyp2[0] != 0 or hyp != _swap(hyp2, 1, 2):
            raise InconsistentRule(f"{rule.name}: hypotenuse disagrees at {d}")


def _validate_square_rule(rule: SubstRule) -> None:
    s, tb = rule.scale, rule.table
    corners = {(0, 0): 2, (s, 0): 3, (0, s): 0, (s, s): 1}
    for pos, sym in corners.items():
        if tb[pos] != tuple(1 if i == sym else 0 for i in range(4)):
            raise InconsistentRule(f"{rule.name}: corner {pos} not copied")
    for d in range(1, s):
        bot, top = tb[(d, 0)], tb[(d, s)]
        if bot[0] or bot[1] or top[2] or top[3] or (top[0], top[1]) != (bot[2], bot[3]):
            raise InconsistentRule(f"{rule.name}: horizontal edges disagree at {d}")
        left, right = tb[(0, d)], tb[(s, d)]
        if left[1] or left[3] or right[0] or right[2] or \
                (right[1], right[3]) != (left[0], left[2]):
            raise InconsistentRule(f"{rule.name}: vertical edges disagree at {d}")


def variant_rule(name: str) -> SubstRule:
    """Look up a substitution rule by name ("sigma", "sigma1" .. "sigma7").

    Edge consistency between adjacent parent tiles is verified once at first
    registration; a transcription bug raises InconsistentRule.
    """
    if name in _RULE_CACHE:
        return _RULE_CACHE[name]
    if name == "sigma6":
        rule = SubstRule("sigma6", "square", 3, "linear", dict(_SQ_TABLE))
        _validate_square_rule(rule)
    elif name in _TRI_TABLES:
        scale, kind, table = _TRI_TABLES[name]
        geometry = "right-triangle" if name == "sigma7" else "triangle"
        rule = SubstRule(name, geometry, scale, kind, dict(table))
        _validate_triangle_rule(rule)
    else:
        raise KeyError(f"unknown substitution rule {name!r}")
    _RULE_CACHE[name] = rule
    return rule


def _eval_formula(rule: SubstRule, coeffs, corners, m: int) -> int:
    if rule.is_linear:
        return sum(c * v for c, v in zip(coeffs, corners)) % m
    out = 1
    for e, v in zip(coeffs, corners):
        if e:
            out = out * pow(v, e, m) % m
    return out


def refine_with_rule(patch: TriPatch, rule: SubstRule) -> TriPatch:
    """One step of a (possibly variant) triangle rule on a triangular patch."""
    if patch.shape != "triangle":
        raise ValueError("variant refinement is defined on triangular patches")
    s, m, n = rule.scale, patch.modulus, patch.side
    N = s * n
    rows = triangle_rows(N)
    tb = rule.table
    for b in range(n):
        for a in range(n - b):
            corners = (patch.get(a, b), patch.get(a + 1, b), patch.get(a, b + 1))
            for (di, dj), f in tb.items():
                rows[s * b + dj][s * a + di] = _eval_formula(rule, f, corners, m)
    for b in range(n - 1):
        for a in range(n - 1 - b):
            corners = (patch.get(a + 1, b + 1), patch.get(a, b + 1),
                       patch.get(a + 1, b))
            mi, mj = s * (a + 1), s * (b + 1)
            for (di, dj), f in tb.items():
                rows[mj - dj][mi - di] = _eval_formula(rule, f, corners, m)
    return TriPatch("triangle", patch.orientation, patch.order + 1, N, m,
                    freeze(rows))


def refine_square(patch: SquarePatch, rule: SubstRule | None = None) -> SquarePatch:
    """One step of the square rule."""
    rule = rule or variant_rule("sigma6")
    s, m, n = rule.scale, patch.modulus, patch.side
    N = s * n
    rows = [[0] * (N + 1) for _ in range(N + 1)]
    for b in range(n):
        for a in range(n):
            corners = (patch.get(a, b + 1), patch.get(a + 1, b + 1),
                       patch.get(a, b), patch.get(a + 1, b))
            for (di, dj), f in rule.table.items():
                rows[s * b + dj][s * a + di] = _eval_formula(rule, f, corners, m)
    return SquarePatch(patch.order + 1, N, m, freeze(rows))


def supertile(t: TriTile, k: int, rule: SubstRule | None = None) -> TriPatch:
    """The k-supertile of t as a lattice patch.

    The base rule uses the fast midpoint refinement; variant rules go
    through the table engine.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    patch = patch_of_tile(t)
    if rule is None or rule.name in ("sigma", "sigma7"):
        for _ in range(k):
            patch = refine_midpoint(patch)
        return patch
    for _ in range(k):
        patch = refine_with_rule(patch, rule)
    return patch


def square_supertile(corners: tuple[int, int, int, int], k: int,
                     modulus: int) -> SquarePatch:
    """k-fold square substitution of one square tile (w, x, y, z)."""
    w, x, y, z = (v % modulus for v in corners)
    patch = SquarePatch(0, 1, modulus, ((y, z), (w, x)))
    for _ in range(k):
        patch = refine_square(patch)
    return patch


def apply_sigma(patch: TriPatch) -> TriPatch:
    """Apply the base substitution to an arbitrary patch (triangle or hex)."""
    return refine_midpoint(patch)


def alpha_inverse_power(t: TriTile, k: int) -> TriTile:
    """Apply the inverse of the central-child permutation k times."""
    RingSpec(t.modulus).require_odd_prime("inverse central child")
    a_inv = mat_inv(ring.mat_A(t.modulus))
    corners = t.corners
    for _ in range(k):
        corners = vec_mat(corners, a_inv)
    orientation = t.orientation if k % 2 == 0 else flip(t.orientation)
    return TriTile(orientation, corners, t.modulus)
