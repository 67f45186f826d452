"""Three finite automata giving random access into the tilings.

Machine M reads a position word over "abgd" and locates a tile of the
nested supertile tiling around an anchor tile; N does the same inside one
sector of a hexagonal tiling; O reads the binary digits of n and locates
the n-th segment of a 1D limit word.  Each state is a sign flag plus a
small matrix, and the final state decodes to a tile by one row-vector
product with the anchor.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ring
from .errors import InvalidCenter, InvalidSector
from .lattice import DOWN, UP, SegTile, TriTile, flip
from .ring import Mat, RingSpec, cached_inv, identity, mat_mul, mat_pow, vec_mat
from .sigma import letter_matrix

M_MACHINE = "M"
N_MACHINE = "N"
O_MACHINE = "O"


@dataclass(frozen=True)
class AutomatonState:
    sign: int          # +1 or -1
    mat: Mat


def initial_state(machine: str, modulus: int) -> AutomatonState:
    size = 2 if machine == O_MACHINE else 3
    return AutomatonState(1, identity(size, modulus))


def step(machine: str, state: AutomatonState, letter: str) -> AutomatonState:
    m = state.mat.modulus
    if machine == M_MACHINE:
        nxt = mat_mul(mat_mul(cached_inv(ring.mat_A(m)), state.mat),
                      letter_matrix(letter, m))
        sign = state.sign if letter == "a" else -state.sign
        return AutomatonState(sign, nxt)
    if machine == N_MACHINE:
        nxt = mat_mul(mat_mul(cached_inv(ring.mat_B(m)), state.mat),
                      letter_matrix(letter, m))
        sign = -state.sign if letter == "a" else state.sign
        return AutomatonState(sign, nxt)
    if machine == O_MACHINE:
        if letter not in "01":
            raise ValueError(f"machine O reads binary digits, got {letter!r}")
        right = ring.mat_L(m) if letter == "0" else ring.mat_R(m)
        nxt = mat_mul(mat_mul(cached_inv(ring.mat_L(m)), state.mat), right)
        return AutomatonState(state.sign, nxt)
    raise ValueError(f"unknown machine {machine!r}")


def run(machine: str, word: str, modulus: int) -> AutomatonState:
    state = initial_state(machine, modulus)
    for letter in word:
        state = step(machine, state, letter)
    return state


# Input normalizers.  Extra leading pad letters self-loop on the useful
# part of the state, so queries may be given at any length and padded to
# the length the decode formula assumes.

def pad_m_word(word: str) -> str:
    """Prefix with central-child letters up to length 2*len(word)."""
    return "a" * len(word) + word


def pad_n_word(word: str, modulus: int) -> str:
    """Left-pad with 'b' to a multiple of p (the 'b' matrix has order p)."""
    k = len(word)
    rem = (-k) % modulus
    return "b" * rem + word


def pad_o_bits(n: int, modulus: int | None = None) -> str:
    """Binary digits of n, left-padded with zeros to a multiple of p when
    a modulus is given (needed when the anchor row is not fixed by the
    left-child matrix)."""
    bits = bin(n)[2:] if n else "0"
    if modulus is not None:
        bits = "0" * ((-len(bits)) % modulus) + bits
    return bits


def decode_M(state: AutomatonState, anchor: TriTile) -> TriTile:
    """Tile of the nested tiling around ``anchor`` at the consumed word."""
    RingSpec(anchor.modulus).require_odd_prime("automaton decoding")
    corners = vec_mat(anchor.corners, state.mat)
    orientation = anchor.orientation if state.sign == 1 else flip(anchor.orientation)
    return TriTile(orientation, corners, anchor.modulus)


def decode_N(state: AutomatonState, b: int, c: int, sector: int) -> TriTile:
    """Tile of the hexagonal tiling with ring value b and center c.

    The word addresses a tile inside sector 0, whose innermost tile is the
    up triangle (c, b, b) touching the center; sector r is the 60-degree
    rotation of sector 0, realized as a cyclic shift of the corner row,
    with orientation flipping once per rotation step.
    """
    modulus = state.mat.modulus
    RingSpec(modulus).require_odd_prime("automaton decoding")
    if c % modulus == 0:
        raise InvalidCenter("hexagonal tilings need a nonzero central value")
    if not 0 <= sector <= 5:
        raise InvalidSector(f"sector must be 0..5, got {sector}")
    row = vec_mat((c, b, b), state.mat)
    orientation = UP if state.sign == 1 else DOWN
    p = ring.sector_rotation(modulus)
    row = vec_mat(row, mat_pow(p, sector))
    if sector % 2 == 1:
        orientation = flip(orientation)
    return TriTile(orientation, row, modulus)


def decode_O(state: AutomatonState, anchor: SegTile) -> SegTile:
    """n-th segment of the limit word grown from ``anchor``."""
    return SegTile(vec_mat(anchor.endpoints, state.mat), anchor.modulus)


def reachable_states(machine: str, modulus: int) -> set[AutomatonState]:
    """Closure of the initial state under all transitions."""
    alphabet = "01" if machine == O_MACHINE else "abgd"
    seen = {initial_state(machine, modulus)}
    frontier = list(seen)
    while frontier:
        state = frontier.pop()
        for letter in alphabet:
            nxt = step(machine, state, letter)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen
