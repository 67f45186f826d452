import pytest

from sterntiles.errors import OutOfBounds, ShapeMismatch
from sterntiles.lattice import (
    DOWN,
    UP,
    SegPatch,
    SegTile,
    SquarePatch,
    TriPatch,
    TriTile,
    freeze,
    from_json,
    hex_rows,
    patch_add,
    patch_equal,
    patch_of_tile,
    patch_scale,
    tile_at,
    to_json,
    triangle_rows,
)


def test_tile_canonical_reduction():
    t = TriTile(UP, (4, -1, 7), 3)
    assert t.corners == (1, 2, 1)
    assert SegTile((-1, 6), 5).endpoints == (4, 1)


def test_tile_arithmetic():
    a = TriTile(UP, (1, 2, 0), 3)
    b = TriTile(UP, (2, 2, 1), 3)
    assert (a + b).corners == (0, 1, 1)
    assert a.scale(2).corners == (2, 1, 0)
    with pytest.raises(ShapeMismatch):
        a + TriTile(DOWN, (0, 0, 1), 3)


def test_patch_of_tile_and_lookup():
    t = TriTile(UP, (1, 2, 0), 3)
    p = patch_of_tile(t)
    assert tile_at(p, 0, 0, UP) == t
    # a down seed stores the half-turn image, lookup restores orientation
    d = TriTile(DOWN, (1, 2, 0), 3)
    assert tile_at(patch_of_tile(d), 0, 0, UP) == d


def test_domain_checks():
    p = patch_of_tile(TriTile(UP, (1, 2, 0), 3))
    with pytest.raises(OutOfBounds):
        p.get(2, 0)
    assert p.in_domain(1, 0) and not p.in_domain(1, 1)


def test_hex_domain():
    rows = hex_rows(2, 7)
    p = TriPatch("hex", None, 0, 2, 11, freeze(rows))
    assert p.get(-2, 0) == 7
    assert p.get(2, -2) == 7
    assert not p.in_domain(2, 1)
    assert len(list(p.points())) == 19


def test_triangle_rows_shape():
    rows = triangle_rows(4)
    assert [len(r) for r in rows] == [5, 4, 3, 2, 1]


def test_patch_add_scale_equal():
    a = patch_of_tile(TriTile(UP, (1, 2, 0), 5))
    b = patch_of_tile(TriTile(UP, (2, 0, 4), 5))
    s = patch_add(a, b)
    assert s.rows == ((3, 2), (4,))
    assert patch_scale(2, a).rows == ((2, 4), (0,))
    assert patch_equal(a, a)
    with pytest.raises(ShapeMismatch):
        patch_add(a, patch_of_tile(TriTile(DOWN, (0, 0, 0), 5)))


@pytest.mark.parametrize("patch", [
    patch_of_tile(TriTile(UP, (1, 2, 0), 3)),
    patch_of_tile(TriTile(DOWN, (1, 2, 0), 3)),
    TriPatch("hex", None, 0, 1, 5, freeze(hex_rows(1, 2))),
    SquarePatch(0, 1, 3, ((0, 1), (2, 1))),
    SegPatch(2, 7, (0, 1, 1, 2, 1)),
])
def test_json_round_trip(patch):
    assert from_json(to_json(patch)) == patch


def test_seg_patch_tiles():
    w = SegPatch(1, 5, (0, 3, 3))
    assert w.tile(0) == SegTile((0, 3), 5)
    assert w.tile(1) == SegTile((3, 3), 5)
    with pytest.raises(OutOfBounds):
        w.get(3)
