"""Desk-scale verification of structural claims.

Everything here recomputes a claim directly on finite patches: occurrence
distances between decorated tiles, zero-pattern lemmas, nonperiodicity
witnesses, and patch symmetries.  Nothing is trusted from the generators
being checked; lookups go through raw patch values.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import SearchExhausted
from .lattice import DOWN, UP, TriPatch, TriTile, tile_at
from .ring import RingSpec
from .sigma import refine_midpoint, sigma_children, supertile
from .tau import fusc, least_period
from .tilings import hex_seed_reachability


def all_tiles(modulus: int, include_zero: bool = False):
    """Every decorated tile; the all-zero pair is excluded by default."""
    for orientation in (UP, DOWN):
        for corners in itertools.product(range(modulus), repeat=3):
            if not include_zero and corners == (0, 0, 0):
                continue
            yield TriTile(orientation, corners, modulus)


@dataclass
class ReachabilityTable:
    """d[(t, t')] = least k such that t' occurs in the k-th substitution
    of t, over all nonzero tiles."""

    modulus: int
    d: dict = field(default_factory=dict)

    @property
    def tiles(self):
        return list(all_tiles(self.modulus))

    def is_total(self) -> bool:
        n = 2 * (self.modulus ** 3 - 1)
        return len(self.d) == n * n


def _occurrence_distances(t: TriTile):
    """First-occurrence step of every tile ever produced from t.

    The tiles of step k+1 are exactly the children of the tiles of step k,
    so iterating child sets walks occurrence layers without building
    patches.  Stops when the layer set repeats.
    """
    dist = {t: 0}
    layer = frozenset([t])
    seen_layers = {layer}
    k = 0
    while True:
        k += 1
        layer = frozenset(c for u in layer for c in sigma_children(u))
        for u in layer:
            dist.setdefault(u, k)
        if layer in seen_layers:
            return dist
        seen_layers.add(layer)


def reachability(modulus: int) -> ReachabilityTable:
    RingSpec(modulus).require_odd_prime("reachability analysis")
    table = ReachabilityTable(modulus)
    for t in all_tiles(modulus):
        dist = _occurrence_distances(t)
        for u, k in dist.items():
            if u.corners != (0, 0, 0):
                table.d[(t, u)] = k
    return table


def occurrence_layer(t: TriTile, k: int) -> frozenset:
    """Set of tiles occurring in the k-th substitution of t."""
    layer = frozenset([t])
    for _ in range(k):
        layer = frozenset(c for u in layer for c in sigma_children(u))
    return layer


def primitivity_exponent(table: ReachabilityTable,
                         samples: int = 10, seed: int = 0) -> int:
    """m + n where m, n bound occurrence distances through the pivot tile
    (1's on the bottom edge, 0 on top); spot-verified on random pairs."""
    pivot = TriTile(UP, (0, 1, 1), table.modulus)
    tiles = table.tiles
    m = max(table.d[(t, pivot)] for t in tiles)
    n = max(table.d[(pivot, t)] for t in tiles)
    exponent = m + n
    rng = random.Random(seed)
    for _ in range(samples):
        t, u = rng.choice(tiles), rng.choice(tiles)
        if u not in occurrence_layer(t, exponent):
            raise AssertionError(
                f"{u} missing from step-{exponent} occurrences of {t}"
            )
    return exponent


@dataclass(frozen=True)
class ZeroPath:
    """Closed hexagonal cycle of zero lattice values, isolated from other
    zeros: every off-cycle lattice neighbor of the cycle is nonzero."""

    center: tuple[int, int]
    side: int
    points: tuple[tuple[int, int], ...]


_RING_STEPS = ((-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0), (0, 1))
_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def _hex_ring(ci: int, cj: int, s: int):
    i, j = ci + s, cj
    for di, dj in _RING_STEPS:
        for _ in range(s):
            yield i, j
            i, j = i + di, j + dj


def find_zero_hexagons(patch: TriPatch) -> list[ZeroPath]:
    """All isolated hexagonal zero cycles with power-of-two side length."""
    out = []
    domain = {(i, j): v for i, j, v in patch.points()}
    centers = list(domain)
    s = 1
    while 2 * s <= patch.side:
        for ci, cj in centers:
            ring = list(_hex_ring(ci, cj, s))
            if any(domain.get(pt, -1) != 0 for pt in ring):
                continue
            ring_set = set(ring)
            isolated = True
            for i, j in ring:
                for di, dj in _NEIGHBORS:
                    nb = (i + di, j + dj)
                    if nb in ring_set or nb not in domain:
                        continue
                    if domain[nb] == 0:
                        isolated = False
                        break
                if not isolated:
                    break
            if isolated:
                out.append(ZeroPath((ci, cj), s, tuple(ring)))
        s *= 2
    return out


def _rot120(i: int, j: int, n: int) -> tuple[int, int]:
    return n - i - j, i


def check_zero_lemmas(modulus: int, k_max: int = 4) -> dict[str, bool]:
    """Exhaustive desk checks of the zero-pattern lemmas.

    Returns a name -> passed map; the suite passes iff all values are True.
    """
    RingSpec(modulus).require_odd_prime("zero-pattern checks")
    p = modulus
    report = {}

    # All-zero tiles occur only in all-zero supertiles.
    ok = True
    for t in all_tiles(p, include_zero=True):
        patch = supertile(t, min(k_max, 3))
        has_zero_tile = any(
            tile_at(patch, i, j, cell).corners == (0, 0, 0)
            for i, j, cell in _cells(patch.side)
        )
        if has_zero_tile != (t.corners == (0, 0, 0)):
            ok = False
            break
    report["all-zero-tile"] = ok

    # Scaling by a unit never moves a zero.
    ok = True
    for t in _sample_tiles(p, 12, seed=1):
        base = supertile(t, k_max)
        for c in range(1, p):
            scaled = supertile(t.scale(c), k_max)
            if [v == 0 for _, _, v in base.points()] != \
                    [v == 0 for _, _, v in scaled.points()]:
                ok = False
        if not ok:
            break
    report["scalar-zero-invariance"] = ok

    # Two zeros on the bottom edge give parallel 0- and c-lines.
    ok = True
    for c in range(1, p):
        patch = supertile(TriTile(UP, (0, 0, c), p), k_max)
        n = patch.side
        ok &= all(patch.get(i, 0) == 0 for i in range(n + 1))
        ok &= all(patch.get(i, 1) == c for i in range(n))
    report["zero-line"] = ok

    # One zero with an opposite pair alternates along the diagonal.
    ok = True
    for c in range(1, p):
        patch = supertile(TriTile(UP, (0, -c, c), p), k_max)
        n = patch.side
        for i in range(n // 2):
            ok &= patch.get(i, i) == 0
            ok &= patch.get(i + 1, i) == (-c) % p
            ok &= patch.get(i, i + 1) == c % p
    report["alternating-diagonal"] = ok

    # A zero corner persists: the corner tile never changes.
    ok = True
    for c in range(p):
        for d in range(p):
            t = TriTile(UP, (0, c, d), p)
            patch = supertile(t, k_max)
            ok &= tile_at(patch, 0, 0, UP).corners == t.corners
    report["zero-corner-persistence"] = ok

    # No centered equilateral triple of zeros in unit-seed supertiles.
    ok = True
    for corners in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        for orientation in (UP, DOWN):
            for k in range(k_max + 1):
                patch = supertile(TriTile(orientation, corners, p), k)
                n = patch.side
                for j in range(n + 1):
                    for i in range(n + 1 - j):
                        a = _rot120(i, j, n)
                        b = _rot120(*a, n)
                        if (patch.get(i, j) == 0 and patch.get(*a) == 0
                                and patch.get(*b) == 0):
                            ok = False
    report["no-centered-zero-triple"] = ok
    return report


def _cells(n: int):
    for j in range(n):
        for i in range(n - j):
            yield i, j, UP
    for j in range(n - 1):
        for i in range(n - 1 - j):
            yield i, j, DOWN


def _sample_tiles(modulus: int, count: int, seed: int):
    rng = random.Random(seed)
    tiles = list(all_tiles(modulus))
    return [rng.choice(tiles) for _ in range(count)]


def detect_symmetries(patch: TriPatch) -> set[str]:
    """Pointwise symmetry detection.

    mirror: some axis reflection fixes the patch; odd-mirror: reflection
    composed with negation; rot3 / rot6: rotational invariance.
    """
    m = patch.modulus
    values = {(i, j): v for i, j, v in patch.points()}
    found = set()
    if patch.shape == "triangle":
        n = patch.side
        mirrors = [
            lambda i, j: (n - i - j, j),
            lambda i, j: (j, i),
            lambda i, j: (i, n - i - j),
        ]
        rot = lambda i, j: (n - i - j, i)  # noqa: E731
    else:
        n = patch.side
        mirrors = [
            lambda i, j: (j, i),
            lambda i, j: (-i - j, j),
            lambda i, j: (i, -i - j),
        ]
        rot6 = lambda i, j: (-j, i + j)  # noqa: E731
        if all(values[rot6(i, j)] == v for (i, j), v in values.items()):
            found.add("rot6")
        rot = lambda i, j: rot6(*rot6(i, j))  # noqa: E731
    for mirror in mirrors:
        if all(values[mirror(i, j)] == v for (i, j), v in values.items()):
            found.add("mirror")
        if all(values[mirror(i, j)] == (-v) % m for (i, j), v in values.items()):
            found.add("odd-mirror")
    if all(values[rot(i, j)] == v for (i, j), v in values.items()):
        found.add("rot3")
    return found


def nonperiodicity_witnesses(modulus: int) -> dict[str, bool]:
    """The witness chain ruling out translation symmetry.

    (a) the first substitution of the (1,1,0) tile contains the glued
        diamond (1,2,1)/(1,1,2); (b) the hexagonal seed with ring 1 and
        center 2 appears after p+1 steps; (c) isolated zero hexagons of
        side 1 and 2 appear after (3p+1)/2 and one more step; (d) the
        diatomic sequence modulo p has no small period.
    """
    RingSpec(modulus).require_odd_prime("nonperiodicity witnesses")
    p = modulus
    report = {}

    seed = TriTile(UP, (1, 1, 0), p)
    patch = supertile(seed, 1)
    report["diamond"] = (
        tile_at(patch, 0, 0, UP).corners == (1, 2, 1)
        and tile_at(patch, 0, 0, DOWN).corners == (1, 1, 2)
    )

    try:
        report["hex-seed"] = hex_seed_reachability(1, 2, p, p + 2) == p + 1
    except SearchExhausted:
        report["hex-seed"] = False

    k0 = (3 * p + 1) // 2
    patch = supertile(seed, k0)
    report["zero-hexagon"] = any(
        z.side == 1 for z in find_zero_hexagons(patch)
    )
    patch = refine_midpoint(patch)
    report["zero-hexagon-doubling"] = any(
        z.side == 2 for z in find_zero_hexagons(patch)
    )

    prefix = [fusc(n, p) for n in range(2 ** 16)]
    report["fusc-aperiodic"] = least_period(prefix, 4096) is None
    return report
