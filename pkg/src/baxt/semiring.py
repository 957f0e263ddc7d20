"""Commutative idempotent semirings and upper triangular matrices over them.

The canonical instance is the integer tropical semiring (Z u {-inf}, max, +):
exact, idempotent, commutative, with 1 as an element of infinite
multiplicative order.  Matrices carry the skew transposition (reflection
across the secondary diagonal), which is an involution antihomomorphism on
upper triangular matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class Semiring:
    """Interface: zero, one, add, mul, and a distinguished element s of
    infinite multiplicative order.  Values are plain Python objects."""

    zero = None
    one = None
    s = None

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def power(self, a, k: int):
        """k-fold product of a (k >= 0); the empty product is one."""
        if k < 0:
            raise ValueError("negative power")
        acc = self.one
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc


NEG_INF = float("-inf")


class TropicalInt(Semiring):
    """(Z u {-inf}, max, +) with s = 1.

    Non-bottom values are arbitrary-precision Python ints, so products cannot
    silently wrap; -inf is the additive identity and absorbs multiplication.
    """

    zero = NEG_INF
    one = 0
    s = 1

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        if a == NEG_INF or b == NEG_INF:
            return NEG_INF
        return a + b


TROPICAL = TropicalInt()


@dataclass(frozen=True)
class UTMatrix:
    """Square upper triangular matrix over a semiring; rows are tuples."""

    semiring: Semiring
    dim: int
    rows: tuple  # tuple of row tuples

    def __post_init__(self):
        zero = self.semiring.zero
        if len(self.rows) != self.dim or any(len(r) != self.dim for r in self.rows):
            raise ValueError("shape mismatch")
        for i in range(self.dim):
            for j in range(i):
                if self.rows[i][j] != zero:
                    raise ValueError(f"entry ({i},{j}) below the diagonal is nonzero")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "UTMatrix") -> "UTMatrix":
        return mat_mul(self, other)

    def __str__(self):
        return "\n".join(" ".join(_fmt_entry(x) for x in row) for row in self.rows)


def _fmt_entry(x) -> str:
    return "-inf" if x == NEG_INF else str(x)


def from_rows(sr: Semiring, rows) -> UTMatrix:
    tup = tuple(tuple(r) for r in rows)
    return UTMatrix(sr, len(tup), tup)


def identity_matrix(sr: Semiring, n: int) -> UTMatrix:
    return UTMatrix(sr, n, tuple(
        tuple(sr.one if i == j else sr.zero for j in range(n)) for i in range(n)
    ))


def scalar(sr: Semiring, value) -> UTMatrix:
    """A 1x1 block."""
    return UTMatrix(sr, 1, ((value,),))


def mat_mul(A: UTMatrix, B: UTMatrix) -> UTMatrix:
    """C[i][j] = add over k of A[i][k] * B[k][j]; only k in i..j contributes."""
    if A.semiring is not B.semiring and type(A.semiring) is not type(B.semiring):
        raise ValueError("semiring mismatch")
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    sr = A.semiring
    zero = sr.zero
    n = A.dim
    rows = []
    for i in range(n):
        arow = A.rows[i]
        crow = [zero] * n
        for j in range(i, n):
            acc = zero
            for k in range(i, j + 1):
                acc = sr.add(acc, sr.mul(arow[k], B.rows[k][j]))
            crow[j] = acc
        rows.append(tuple(crow))
    return UTMatrix(sr, n, tuple(rows))


def mat_power(A: UTMatrix, k: int) -> UTMatrix:
    if k < 0:
        raise ValueError("negative power")
    acc = identity_matrix(A.semiring, A.dim)
    base = A
    while k:
        if k & 1:
            acc = mat_mul(acc, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return acc


def skew_transpose(A: UTMatrix) -> UTMatrix:
    """Reflect across the secondary diagonal: (A^D)[i][j] = A[n-1-j][n-1-i]."""
    n = A.dim
    rows = tuple(
        tuple(A.rows[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n)
    )
    return UTMatrix(A.semiring, n, rows)


def block_diag(blocks) -> UTMatrix:
    """Block diagonal assembly; off-block entries are zero.  diag{} is 0x0."""
    blocks = list(blocks)
    if not blocks:
        return UTMatrix(TROPICAL, 0, ())
    sr = blocks[0].semiring
    n = sum(b.dim for b in blocks)
    zero = sr.zero
    rows = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.dim):
            rows[off + i][off:off + b.dim] = b.rows[i]
        off += b.dim
    return UTMatrix(sr, n, tuple(tuple(r) for r in rows))


# The four 2x2 generator blocks used by every representation in this package.

def gen_P(sr: Semiring = TROPICAL) -> UTMatrix:
    return from_rows(sr, [[sr.s, sr.zero], [sr.zero, sr.one]])


def gen_Q(sr: Semiring = TROPICAL) -> UTMatrix:
    return from_rows(sr, [[sr.one, sr.zero], [sr.zero, sr.s]])


def gen_J(sr: Semiring = TROPICAL) -> UTMatrix:
    return from_rows(sr, [[sr.one, sr.one], [sr.zero, sr.zero]])


def gen_K(sr: Semiring = TROPICAL) -> UTMatrix:
    return from_rows(sr, [[sr.zero, sr.one], [sr.zero, sr.one]])


GENERATORS = {"P": gen_P, "Q": gen_Q, "J": gen_J, "K": gen_K}


def matrix_to_json(A: UTMatrix) -> str:
    entries = [["-inf" if x == NEG_INF else x for x in row] for row in A.rows]
    return json.dumps({"dim": A.dim, "entries": entries}, separators=(",", ":"))


def matrix_from_json(text: str, sr: Semiring = TROPICAL) -> UTMatrix:
    obj = json.loads(text)
    rows = [[NEG_INF if x == "-inf" else x for x in row] for row in obj["entries"]]
    A = from_rows(sr, rows)
    if A.dim != obj["dim"]:
        raise ValueError("dim field disagrees with entries")
    return A
