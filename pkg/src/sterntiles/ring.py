"""Arithmetic modulo m and tiny dense matrices over Z/m.

Everything downstream (substitutions, automata, analysis) is built on the
operations here.  Matrices are immutable 2x2 or 3x3 values stored as nested
tuples; no external linear-algebra package is involved, so results are
bit-exact and hashable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotInvertible, SingularMatrix


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """The ring Z/m.  Theorem-backed code paths require an odd prime m."""

    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def is_odd_prime(self) -> bool:
        return self.modulus != 2 and _is_prime(self.modulus)

    def require_odd_prime(self, what: str = "this operation") -> None:
        if not self.is_odd_prime:
            raise NotInvertible(
                f"{what} requires an odd prime modulus, got {self.modulus}"
            )

    def reduce(self, value: int) -> int:
        return value % self.modulus


def ring_inv(a: int, ring: RingSpec) -> int:
    """Multiplicative inverse of a modulo m; raises NotInvertible if gcd != 1."""
    a = a % ring.modulus
    if math.gcd(a, ring.modulus) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {ring.modulus}")
    return pow(a, -1, ring.modulus)


def mult_order(a: int, ring: RingSpec) -> int:
    """Least k >= 1 with a^k = 1 (mod m)."""
    m = ring.modulus
    a = a % m
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    k, x = 1, a
    while x != 1:
        x = x * a % m
        k += 1
    return k


@dataclass(frozen=True)
class Mat:
    """A small dense matrix over Z/m with canonical entries."""

    entries: tuple[tuple[int, ...], ...]
    modulus: int

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]


def mat(rows, modulus: int) -> Mat:
    m = modulus
    return Mat(tuple(tuple(v % m for v in row) for row in rows), m)


def identity(n: int, modulus: int) -> Mat:
    return mat([[1 if i == j else 0 for j in range(n)] for i in range(n)], modulus)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a.cols != b.rows or a.modulus != b.modulus:
        raise ValueError("non-conformable matrices")
    m = a.modulus
    ae, be = a.entries, b.entries
    return Mat(
        tuple(
            tuple(sum(ae[i][k] * be[k][j] for k in range(a.cols)) % m
                  for j in range(b.cols))
            for i in range(a.rows)
        ),
        m,
    )


def vec_mat(v: tuple[int, ...], a: Mat) -> tuple[int, ...]:
    """Row vector times matrix."""
    if len(v) != a.rows:
        raise ValueError("non-conformable row vector")
    m = a.modulus
    e = a.entries
    return tuple(sum(v[i] * e[i][j] for i in range(a.rows)) % m
                 for j in range(a.cols))


def mat_det(a: Mat) -> int:
    e, m = a.entries, a.modulus
    if a.rows != a.cols:
        raise ValueError("determinant of non-square matrix")
    if a.rows == 2:
        return (e[0][0] * e[1][1] - e[0][1] * e[1][0]) % m
    if a.rows == 3:
        return (
            e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
        ) % m
    raise ValueError(f"unsupported matrix size {a.rows}")


def mat_inv(a: Mat) -> Mat:
    """Inverse via the adjugate; raises SingularMatrix if det is not a unit."""
    m = a.modulus
    d = mat_det(a)
    if math.gcd(d, m) != 1:
        raise SingularMatrix(
            f"determinant {d} is not invertible modulo {m}"
        )
    dinv = pow(d, -1, m)
    e = a.entries
    if a.rows == 2:
        adj = [[e[1][1], -e[0][1]], [-e[1][0], e[0][0]]]
    else:
        adj = [
            [
                e[(j + 1) % 3][(i + 1) % 3] * e[(j + 2) % 3][(i + 2) % 3]
                - e[(j + 1) % 3][(i + 2) % 3] * e[(j + 2) % 3][(i + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
    return mat([[v * dinv for v in row] for row in adj], m)


def mat_pow(a: Mat, k: int) -> Mat:
    if k < 0:
        raise ValueError("negative matrix power; use mat_inv explicitly")
    result = identity(a.rows, a.modulus)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


# The letter matrices of the 2D substitution and the 1D substitution,
# plus the 60-degree sector rotation used for hexagonal tilings.

@lru_cache(maxsize=None)
def mat_A(modulus: int) -> Mat:
    return mat([[0, 1, 1], [1, 0, 1], [1, 1, 0]], modulus)


@lru_cache(maxsize=None)
def mat_B(modulus: int) -> Mat:
    return mat([[1, 1, 1], [0, 1, 0], [0, 0, 1]], modulus)


@lru_cache(maxsize=None)
def mat_C(modulus: int) -> Mat:
    return mat([[1, 0, 0], [1, 1, 1], [0, 0, 1]], modulus)


@lru_cache(maxsize=None)
def mat_D(modulus: int) -> Mat:
    return mat([[1, 0, 0], [0, 1, 0], [1, 1, 1]], modulus)


@lru_cache(maxsize=None)
def mat_L(modulus: int) -> Mat:
    return mat([[1, 1], [0, 1]], modulus)


@lru_cache(maxsize=None)
def mat_R(modulus: int) -> Mat:
    return mat([[1, 0], [1, 1]], modulus)


@lru_cache(maxsize=None)
def cached_inv(a: Mat) -> Mat:
    """Memoized inverse for the handful of fixed machine matrices."""
    return mat_inv(a)


@lru_cache(maxsize=None)
def sector_rotation(modulus: int) -> Mat:
    """Cyclic permutation applied to a corner row vector per 60-degree step."""
    return mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]], modulus)
