import itertools
import random

import pytest

from sterntiles.automata import (
    AutomatonState,
    decode_M,
    decode_N,
    decode_O,
    initial_state,
    pad_m_word,
    pad_n_word,
    pad_o_bits,
    reachable_states,
    run,
    step,
)
from sterntiles.errors import InvalidCenter, InvalidSector, NotInvertible
from sterntiles.lattice import DOWN, UP, SegTile, TriTile, tile_at
from sterntiles.sigma import index_to_word, word_to_cell
from sterntiles.tau import fusc, w_word
from sterntiles.tilings import h_patch, s_patch, sector_tile


def test_initial_state_self_loops():
    m = 5
    q0 = initial_state("M", m)
    assert step("M", q0, "a") == q0
    r0 = initial_state("N", m)
    assert step("N", r0, "b") == r0
    o0 = initial_state("O", m)
    assert step("O", o0, "0") == o0


def test_empty_input_decodes_anchor():
    anchor = TriTile(DOWN, (1, 2, 0), 5)
    assert decode_M(initial_state("M", 5), anchor) == anchor
    assert decode_N(initial_state("N", 5), 2, 1, 0) == TriTile(UP, (1, 2, 2), 5)
    seg = SegTile((0, 3), 5)
    assert decode_O(initial_state("O", 5), seg) == seg


def test_machine_m_matches_patch_lookup():
    for m in (3, 5):
        anchor = TriTile(UP, (0, 2, 1), m)
        for k in range(5):
            patch = s_patch(anchor, k)
            for w in itertools.product("abgd", repeat=k):
                w = "".join(w)
                got = decode_M(run("M", w, m), anchor)
                i, j, cell = word_to_cell(w)
                assert got == tile_at(patch, i, j, cell)


def test_machine_m_leading_pad_invariance():
    m = 3
    anchor = TriTile(UP, (1, 2, 2), m)
    rng = random.Random(11)
    for _ in range(30):
        w = "".join(rng.choice("abgd") for _ in range(rng.randrange(1, 6)))
        assert decode_M(run("M", w, m), anchor) == \
            decode_M(run("M", pad_m_word(w), m), anchor)
        assert decode_M(run("M", "aa" + w, m), anchor) == \
            decode_M(run("M", w, m), anchor)


def test_machine_n_matches_hex_lookup_all_sectors():
    m = 3
    b, c = 2, 1
    patch = h_patch(b, c, 1, m)
    for sector in range(6):
        for w in itertools.product("abgd", repeat=m):
            w = "".join(w)
            got = decode_N(run("N", w, m), b, c, sector)
            assert got == sector_tile(patch, sector, w)


def test_machine_n_pad_and_sector_symmetry():
    m = 3
    assert pad_n_word("ag", m) == "bag"
    state = run("N", pad_n_word("ag", m), m)
    t0 = decode_N(state, 2, 1, 0)
    t3 = decode_N(state, 2, 1, 3)
    # opposite sectors are point-symmetric: same corner row, flipped tile
    assert t3.corners == t0.corners
    assert t3.orientation != t0.orientation
    with pytest.raises(InvalidSector):
        decode_N(state, 2, 1, 6)
    with pytest.raises(InvalidCenter):
        decode_N(state, 2, 0, 0)


def test_machine_n_rejects_composite_modulus():
    with pytest.raises(NotInvertible):
        decode_N(initial_state("N", 9), 2, 1, 0)


def test_machine_o_matches_fusc():
    for m in (3, 5):
        for y in range(1, m):
            anchor = SegTile((0, y), m)
            for n in range(512):
                got = decode_O(run("O", pad_o_bits(n), m), anchor)
                assert got.endpoints == (y * fusc(n) % m,
                                         y * fusc(n + 1) % m)


def test_machine_o_leading_zero_invariance():
    m = 5
    anchor = SegTile((0, 2), m)
    for n in (0, 1, 6, 37):
        a = decode_O(run("O", pad_o_bits(n), m), anchor)
        b = decode_O(run("O", "000" + pad_o_bits(n), m), anchor)
        assert a == b


def test_machine_o_general_anchor_needs_padding():
    # anchors not fixed by the left-child matrix need p-aligned bit words
    m = 3
    anchor = SegTile((1, 2), m)
    word = w_word(anchor, 2)
    for n in range(len(word.values) - 1):
        got = decode_O(run("O", pad_o_bits(n, m), m), anchor)
        assert got == word.tile(n)


def test_machine_o_rejects_bad_digit():
    with pytest.raises(ValueError):
        step("O", initial_state("O", 3), "2")


def test_reachable_states_closed_and_bounded():
    for machine, bound in (("O", 2 * 3 ** 4), ("M", 2 * 3 ** 9),
                           ("N", 2 * 3 ** 9)):
        states = reachable_states(machine, 3)
        assert 1 <= len(states) <= bound
        alphabet = "01" if machine == "O" else "abgd"
        for q in states:
            for letter in alphabet:
                assert step(machine, q, letter) in states


def test_states_are_canonical_and_hashable():
    q = initial_state("M", 3)
    assert isinstance(q, AutomatonState)
    assert q == initial_state("M", 3)
    assert len({q, initial_state("M", 3)}) == 1
