"""End-to-end acceptance suite.

Each test covers one numbered criterion; a single PASS/FAIL line per
criterion is printed in the terminal summary (see conftest).
"""

import functools
import hashlib
import itertools
import random

import acceptance_log

from oracles import naive_down_supertile, naive_up_supertile
from sterntiles import ring
from sterntiles.automata import decode_M, decode_N, decode_O, pad_o_bits, run
from sterntiles.errors import InconsistentRule
from sterntiles.lattice import (
    DOWN,
    UP,
    SegTile,
    TriPatch,
    TriTile,
    freeze,
    patch_add,
    patch_equal,
    patch_scale,
    tile_at,
    triangle_rows,
)
from sterntiles.ring import RingSpec, identity, mat_det, mat_pow, mult_order
from sterntiles.sigma import (
    SubstRule,
    _validate_triangle_rule,
    refine_with_rule,
    square_supertile,
    supertile,
    tile_at_word,
    variant_rule,
    word_to_cell,
)
from sterntiles.tau import fusc, least_period, tau_word
from sterntiles.tilings import (
    crop_alpha_center,
    crop_hex_center,
    h_patch,
    hex_seed_reachability,
    s_patch,
    sector_tile,
)
from sterntiles.analysis import (
    check_zero_lemmas,
    find_zero_hexagons,
    primitivity_exponent,
    reachability,
)

# Pinned at first run from the naive per-tile oracle patch (criterion 12).
GOLDEN_PPM_SHA256 = (
    "01a75a513c2b828a32c8ad72fe63a27471574d2761d73d703475ea246523ef60"
)


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def inner():
            try:
                fn()
            except BaseException:
                acceptance_log.record(number, title, "FAIL")
                raise
            acceptance_log.record(number, title, "PASS")
        return inner
    return wrap


@criterion(1, "matrix identity suite")
def test_criterion_01():
    for p in (3, 5, 7, 11, 13):
        i3, i2 = identity(3, p), identity(2, p)
        assert mat_det(ring.mat_A(p)) == 2 % p
        for f in (ring.mat_B, ring.mat_C, ring.mat_D):
            assert mat_det(f(p)) == 1
            assert mat_pow(f(p), p) == i3
        assert mat_pow(ring.mat_L(p), p) == i2
    assert mat_pow(ring.mat_A(3), 6) == identity(3, 3)
    for p in (5, 7, 11):
        h = mult_order(4, RingSpec(p))
        assert mat_pow(ring.mat_A(p), 2 * h) == identity(3, p)


def _matches_oracle(t, k):
    patch = supertile(t, k)
    n = patch.side
    if t.orientation == UP:
        oracle = naive_up_supertile(t, k)
        return all(patch.get(i, j) == v for (i, j), v in oracle.items())
    oracle = naive_down_supertile(t, k)
    return all(patch.get(n - i, n - j) == v for (i, j), v in oracle.items())


@criterion(2, "refinement equals naive per-tile recursion")
def test_criterion_02():
    for corners in itertools.product(range(3), repeat=3):
        for orientation in (UP, DOWN):
            t = TriTile(orientation, corners, 3)
            for k in range(5):
                assert _matches_oracle(t, k)
    rng = random.Random(2)
    for _ in range(50):
        p = rng.choice((5, 7))
        t = TriTile(rng.choice((UP, DOWN)),
                    tuple(rng.randrange(p) for _ in range(3)), p)
        assert _matches_oracle(t, rng.randrange(1, 5))


@criterion(3, "position words agree with patch lookup")
def test_criterion_03():
    for p in (3, 5):
        seed = TriTile(UP, (1, 2, 2) if p == 3 else (1, 4, 2), p)
        for k in (1, 2, 6):
            patch = supertile(seed, k)
            for w in itertools.product("abgd", repeat=k):
                w = "".join(w)
                t = tile_at_word(seed, w)
                i, j, cell = word_to_cell(w)
                assert t == tile_at(patch, i, j, cell)
                assert (t.orientation == seed.orientation) == \
                    (w.count("a") % 2 == 0)


@criterion(4, "automata M, N, O agree with the patches")
def test_criterion_04():
    for p in (3, 5):
        anchor = TriTile(UP, (0, 2, 1), p)
        for k in range(7):
            patch = s_patch(anchor, k)
            for w in itertools.product("abgd", repeat=k):
                w = "".join(w)
                got = decode_M(run("M", w, p), anchor)
                i, j, cell = word_to_cell(w)
                assert got == tile_at(patch, i, j, cell)
    p, b, c = 3, 2, 1
    hexpatch = h_patch(b, c, 1, p)
    for sector in range(6):
        for w in itertools.product("abgd", repeat=p):
            w = "".join(w)
            got = decode_N(run("N", w, p), b, c, sector)
            assert got == sector_tile(hexpatch, sector, w)
    for p in (3, 5):
        anchors = [SegTile((0, y), p) for y in range(1, p)]
        for n in range(2 ** 14):
            state = run("O", pad_o_bits(n), p)
            fn, fn1 = fusc(n), fusc(n + 1)
            for y, anchor in enumerate(anchors, start=1):
                got = decode_O(state, anchor)
                assert got.endpoints == (y * fn % p, y * fn1 % p)


@criterion(5, "additivity and scaling commute with substitution")
def test_criterion_05():
    # published instances first
    lhs = patch_add(supertile(TriTile(UP, (1, 1, 0), 3), 2),
                    supertile(TriTile(UP, (0, 2, 1), 3), 2))
    assert patch_equal(lhs, supertile(TriTile(UP, (1, 0, 1), 3), 2))
    assert patch_equal(patch_scale(2, supertile(TriTile(UP, (1, 2, 3), 5), 2)),
                       supertile(TriTile(UP, (2, 4, 1), 5), 2))
    for p in (3, 5):
        rng = random.Random(p)
        for _ in range(100):
            orientation = rng.choice((UP, DOWN))
            a = TriTile(orientation, tuple(rng.randrange(p) for _ in range(3)), p)
            b = TriTile(orientation, tuple(rng.randrange(p) for _ in range(3)), p)
            c = rng.randrange(1, p)
            k = rng.randrange(1, 6)
            assert patch_equal(patch_add(supertile(a, k), supertile(b, k)),
                               supertile(a + b, k))
            assert patch_equal(patch_scale(c, supertile(a, k)),
                               supertile(a.scale(c), k))
            ks = rng.randrange(0, 4)
            assert patch_equal(patch_add(s_patch(a, ks), s_patch(b, ks)),
                               s_patch(a + b, ks))
            wa, wb = tau_word(SegTile(a.corners[:2], p), k), \
                tau_word(SegTile(b.corners[:2], p), k)
            ws = tau_word(SegTile(a.corners[:2], p) + SegTile(b.corners[:2], p), k)
            assert tuple((x + y) % p for x, y in zip(wa.values, wb.values)) \
                == ws.values
        for _ in range(10):
            b1, c1 = rng.randrange(p), rng.randrange(1, p)
            b2, c2 = rng.randrange(p), rng.randrange(1, p)
            if (c1 + c2) % p == 0:
                continue
            ha, hb = h_patch(b1, c1, 1, p), h_patch(b2, c2, 1, p)
            hs = h_patch((b1 + b2) % p, (c1 + c2) % p, 1, p)
            assert tuple(
                tuple((x + y) % p for x, y in zip(ra, rb))
                for ra, rb in zip(ha.rows, hb.rows)
            ) == hs.rows


@criterion(6, "nesting and self-similarity")
def test_criterion_06():
    for p in (3, 5):
        rng = random.Random(p + 10)
        for _ in range(5):
            t = TriTile(rng.choice((UP, DOWN)),
                        tuple(rng.randrange(p) for _ in range(3)), p)
            if t.corners == (0, 0, 0):
                continue
            for k in range(3):
                center = crop_alpha_center(s_patch(t, k + 1))
                inner = s_patch(t, k)
                assert center.rows == inner.rows
                assert center.orientation == inner.orientation
        # recurrence period 2 * ord(4) (with ord(4) read as 3 at modulus 3)
        h = 3 if p == 3 else mult_order(4, RingSpec(p))
        t = TriTile(UP, (0, 2, 1), p)
        outer = s_patch(t, 2 * h)
        for _ in range(2 * h):
            outer = crop_alpha_center(outer)
        assert outer.rows == s_patch(t, 0).rows
        # hexagonal nesting
        inner, outer = h_patch(2, 1, 0, p), h_patch(2, 1, 1, p)
        assert crop_hex_center(outer, inner.side).rows == inner.rows
        # every segment starts its own p-step word
        for t in itertools.product(range(p), repeat=2):
            seg = SegTile(t, p)
            assert tau_word(seg, p).values[:2] == seg.endpoints
    assert crop_hex_center(h_patch(2, 1, 2, 3), 8).rows == \
        h_patch(2, 1, 1, 3).rows


@criterion(7, "irreducibility and primitivity at modulus 3")
def test_criterion_07():
    table = reachability(3)
    assert len(table.tiles) == 52
    assert table.is_total()
    exponent = primitivity_exponent(table, samples=10, seed=7)
    assert exponent >= 1


@criterion(8, "nonperiodicity witnesses")
def test_criterion_08():
    p = 3
    patch = supertile(TriTile(UP, (1, 1, 0), p), 1)
    assert tile_at(patch, 0, 0, UP).corners == (1, 2, 1)
    assert tile_at(patch, 0, 0, DOWN).corners == (1, 1, 2)
    assert hex_seed_reachability(1, 2, p) == p + 1
    sides5 = {z.side for z in
              find_zero_hexagons(supertile(TriTile(UP, (1, 1, 0), p), 5))}
    sides6 = {z.side for z in
              find_zero_hexagons(supertile(TriTile(UP, (1, 1, 0), p), 6))}
    assert 1 in sides5 and 2 in sides6
    for p in (3, 5):
        prefix = [fusc(n, p) for n in range(2 ** 16)]
        assert least_period(prefix, 4096) is None


@criterion(9, "zero-pattern lemma suite")
def test_criterion_09():
    for p in (3, 5):
        report = check_zero_lemmas(p, 4)
        assert all(report.values()), report


@criterion(10, "bottom border matches the 1D substitution")
def test_criterion_10():
    for p in (3, 5):
        rng = random.Random(p + 20)
        for _ in range(50):
            x, y, z = (rng.randrange(p) for _ in range(3))
            k = rng.randrange(1, 9)
            patch = supertile(TriTile(UP, (x, y, z), p), k)
            assert patch.rows[0] == tau_word(SegTile((x, y), p), k).values


@criterion(11, "variant substitution rules")
def test_criterion_11():
    rng = random.Random(11)
    for name in ["sigma"] + [f"sigma{i}" for i in range(1, 8)]:
        rule = variant_rule(name)
        if rule.geometry == "square":
            w, x, y, z = (rng.randrange(7) for _ in range(4))
            p = square_supertile((w, x, y, z), 1, 7)
            assert p.get(1, 1) == (w + y + z) % 7
            assert p.get(1, 2) == (w + x + y) % 7
            continue
        for _ in range(5):
            xx, yy, zz = (rng.randrange(1, 7) for _ in range(3))
            p = refine_with_rule(supertile(TriTile(UP, (xx, yy, zz), 7), 0),
                                 rule)
            s = rule.scale
            assert p.get(0, 0) == xx and p.get(s, 0) == yy and p.get(0, s) == zz
            for (di, dj), f in rule.table.items():
                if rule.is_linear:
                    want = (f[0] * xx + f[1] * yy + f[2] * zz) % 7
                else:
                    want = xx ** f[0] * yy ** f[1] * zz ** f[2] % 7
                assert p.get(di, dj) == want
    # a corrupted table is rejected at registration
    table = dict(variant_rule("sigma4").table)
    table[(2, 1)] = (1, 0, 0)
    try:
        _validate_triangle_rule(
            SubstRule("bad", "triangle", 3, "linear", table))
    except InconsistentRule:
        pass
    else:
        raise AssertionError("corrupted rule accepted")
    # non-prime moduli stay usable for the rules that never divide
    supertile(TriTile(UP, (1, 1, 0), 2), 3, variant_rule("sigma5"))
    supertile(TriTile(UP, (1, 2, 3), 4), 3, variant_rule("sigma4"))


@criterion(12, "rendering determinism and golden digest")
def test_criterion_12():
    from sterntiles.render import to_ppm
    t = TriTile(UP, (1, 2, 2), 3)
    patch = supertile(t, 2)
    a, b = to_ppm(patch), to_ppm(patch)
    assert a == b
    assert hashlib.sha256(a).hexdigest() == GOLDEN_PPM_SHA256
    # rebuild the same patch from the independent oracle and re-render
    oracle = naive_up_supertile(t, 2)
    rows = triangle_rows(4)
    for (i, j), v in oracle.items():
        rows[j][i] = v
    rebuilt = TriPatch("triangle", UP, 2, 4, 3, freeze(rows))
    assert hashlib.sha256(to_ppm(rebuilt)).hexdigest() == GOLDEN_PPM_SHA256
