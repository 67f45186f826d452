"""The 1D substitution on decorated segments and the diatomic sequence.

A decorated segment (x, y) splits into (x, x+y) and (x+y, y); iterating
from (0, 1) produces consecutive values of the diatomic sequence, which
gives random access into the one-dimensional rows of the 2D tilings.
"""

from __future__ import annotations

from .errors import OutOfBounds
from .lattice import SegPatch, SegTile
from .ring import RingSpec, ring_inv


def tau_children(t: SegTile) -> tuple[SegTile, SegTile]:
    """Left and right child of one segment."""
    x, y = t.endpoints
    m = t.modulus
    return SegTile((x, x + y), m), SegTile((x + y, y), m)


def tau_word(t: SegTile, k: int) -> SegPatch:
    """k substitution steps as repeated midpoint insertion (2**k + 1 values)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    m = t.modulus
    values = list(t.endpoints)
    for _ in range(k):
        nxt = []
        for a, b in zip(values, values[1:]):
            nxt.append(a)
            nxt.append((a + b) % m)
        nxt.append(values[-1])
        values = nxt
    return SegPatch(k, m, tuple(values))


def tile_at_binary(t: SegTile, bits: str) -> SegTile:
    """Descend by binary digits: '0' takes the left child, '1' the right.

    After k digits this is tile number int(bits, 2) of the k-step word.
    """
    for bit in bits:
        left, right = tau_children(t)
        if bit == "0":
            t = left
        elif bit == "1":
            t = right
        else:
            raise ValueError(f"binary word expected, got {bits!r}")
    return t


def fusc(n: int, modulus: int | None = None) -> int:
    """The diatomic sequence: fusc(0)=0, fusc(1)=1, fusc(2n)=fusc(n),
    fusc(2n+1)=fusc(n)+fusc(n+1).

    Computed by binary descent in O(log n); an optional modulus reduces
    the result.
    """
    if n < 0:
        raise OutOfBounds("diatomic sequence is indexed by n >= 0")
    a, b = 1, 0
    while n:
        if n & 1:
            b += a
        else:
            a += b
        n >>= 1
    return b if modulus is None else b % modulus


def half_segment(modulus: int) -> SegTile:
    """The segment with both endpoints equal to the inverse of 2."""
    ring = RingSpec(modulus)
    ring.require_odd_prime("halving a segment")
    h = ring_inv(2, ring)
    return SegTile((h, h), modulus)


def v_value(y: int, n: int, modulus: int) -> int:
    """Point n of the limiting word grown from (0, y): y * fusc(n)."""
    return y * fusc(n, modulus) % modulus


def v_word(y: int, k: int, modulus: int) -> SegPatch:
    """k-step word grown from the segment (0, y).

    Each of these words is a prefix of the next, so they approximate a
    one-sided infinite word whose n-th point is y * fusc(n).
    """
    return tau_word(SegTile((0, y), modulus), k)


def w_word(t: SegTile, k: int) -> SegPatch:
    """k blocks of p steps grown from t.

    Stepping in blocks of p makes each word a prefix of the next (the
    left-child matrix has order p), which needs an odd prime modulus.
    """
    RingSpec(t.modulus).require_odd_prime("prefix-stable word growth")
    return tau_word(t, k * t.modulus)


def least_period(seq, max_period: int) -> int | None:
    """Smallest period <= max_period of the finite sequence, or None.

    Naive candidate scan with early exit; sequences without small periods
    reject each candidate after a handful of comparisons.
    """
    seq = list(seq)
    n = len(seq)
    for p in range(1, min(max_period, n - 1) + 1):
        ok = True
        for i in range(n - p):
            if seq[i] != seq[i + p]:
                ok = False
                break
        if ok:
            return p
    return None
