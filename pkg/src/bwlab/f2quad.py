"""Quadratic forms over GF(2).

A form on F2^n is stored as an upper-triangular F2Matrix U, meaning

    q(x) = sum_{i <= j} U[i][j] x_i x_j   (mod 2),

with the associated bilinear form B(x, y) = q(x+y) + q(x) + q(y), whose
matrix is U + U^T (alternating: B(x, x) = 0).  Vectors are ints with
bit i = coordinate i; reported orderings are lexicographic on the
coordinate tuple (x_1, ..., x_n).

Type classification is decided by exhaustively counting singular
vectors, never by formula; the counts are the ground truth downstream
modules consume.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .f2linalg import F2Matrix, rank, vec_to_bits

MAX_SWEEP_DIM = 26
_SWEEP_CHUNK = 1 << 22


@dataclass(frozen=True)
class QuadSpace:
    dim: int
    upper: F2Matrix

    def __post_init__(self):
        if self.dim % 2 != 0 or self.dim < 2:
            raise ValueError("dimension must be even and at least 2")
        if (self.upper.rows, self.upper.cols) != (self.dim, self.dim):
            raise ValueError("upper-triangular matrix has wrong shape")
        for i, row in enumerate(self.upper.bits):
            if row & ((1 << i) - 1):
                raise ValueError("matrix has entries below the diagonal")

    def bilinear_rows(self) -> tuple[int, ...]:
        """Rows of B = U + U^T (zero diagonal, symmetric)."""
        u = self.upper
        ut = u.transpose()
        return tuple(a ^ b for a, b in zip(u.bits, ut.bits))


def hyperbolic(m: int) -> QuadSpace:
    """q = x1 x2 + x3 x4 + ... on F2^(2m): the plus-type model."""
    if m < 1:
        raise ValueError("m must be at least 1")
    rows = [0] * (2 * m)
    for i in range(m):
        rows[2 * i] = 1 << (2 * i + 1)
    return QuadSpace(2 * m, F2Matrix(2 * m, 2 * m, tuple(rows)))


def elliptic(m: int) -> QuadSpace:
    """Hyperbolic planes plus one anisotropic plane x^2 + xy + y^2."""
    if m < 1:
        raise ValueError("m must be at least 1")
    rows = [0] * (2 * m)
    for i in range(m - 1):
        rows[2 * i] = 1 << (2 * i + 1)
    a = 2 * m - 2
    rows[a] = (1 << a) | (1 << (a + 1))
    rows[a + 1] = 1 << (a + 1)
    return QuadSpace(2 * m, F2Matrix(2 * m, 2 * m, tuple(rows)))


def eval_q(s: QuadSpace, x: int) -> int:
    if not 0 <= x < (1 << s.dim):
        raise ValueError("vector length mismatch")
    acc = 0
    rem = x
    while rem:
        i = (rem & -rem).bit_length() - 1
        acc ^= (s.upper.bits[i] & x).bit_count()
        rem &= rem - 1
    return acc & 1


def eval_b(s: QuadSpace, x: int, y: int) -> int:
    top = 1 << s.dim
    if not (0 <= x < top and 0 <= y < top):
        raise ValueError("vector length mismatch")
    acc = 0
    rem = x
    brows = s.bilinear_rows()
    for i, row in enumerate(brows):
        if (rem >> i) & 1:
            acc ^= (row & y).bit_count()
    return acc & 1


def is_nondegenerate(s: QuadSpace) -> bool:
    b = F2Matrix(s.dim, s.dim, s.bilinear_rows())
    return rank(b) == s.dim


def _sweep_mask(s: QuadSpace) -> np.ndarray:
    """Boolean array over all 2^dim vectors: True where q(x) = 0."""
    if s.dim > MAX_SWEEP_DIM:
        raise ValueError(f"dimension {s.dim} exceeds sweep guard {MAX_SWEEP_DIM}")
    n = 1 << s.dim
    out = np.empty(n, dtype=bool)
    for start in range(0, n, _SWEEP_CHUNK):
        x = np.arange(start, min(start + _SWEEP_CHUNK, n), dtype=np.uint32)
        acc = np.zeros(len(x), dtype=np.uint8)
        for i in range(s.dim):
            u = np.uint32(s.upper.bits[i])
            par = (np.bitwise_count(x & u) & 1).astype(np.uint8)
            acc ^= ((x >> np.uint32(i)) & 1).astype(np.uint8) & par
        out[start:start + len(x)] = acc == 0
    return out


def singular_count(s: QuadSpace, include_zero: bool = False) -> int:
    """Number of singular vectors by full sweep."""
    total = int(_sweep_mask(s).sum())
    return total if include_zero else total - 1


def singular_vectors(s: QuadSpace) -> list[int]:
    """All nonzero x with q(x) = 0, lexicographic on coordinate tuples."""
    mask = _sweep_mask(s)
    vecs = [int(x) for x in np.nonzero(mask)[0] if x]
    vecs.sort(key=lambda v: vec_to_bits(v, s.dim))
    return vecs


def arf_type(s: QuadSpace) -> str:
    """'plus' or 'minus', decided by the exhaustive singular count."""
    if not is_nondegenerate(s):
        raise ValueError("bilinear form is degenerate; type undefined")
    m = s.dim // 2
    n = singular_count(s, include_zero=True)
    if n == (1 << (2 * m - 1)) + (1 << (m - 1)):
        return "plus"
    if n == (1 << (2 * m - 1)) - (1 << (m - 1)):
        return "minus"
    raise RuntimeError(f"singular count {n} matches neither type; internal bug")


def totally_singular_subspace(s: QuadSpace, k: int) -> list[int] | None:
    """Basis of a k-dimensional subspace with q identically zero, or None.

    Greedy lex-ascending extension with backtracking; every element of
    the found span is re-checked singular before returning.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return []
    if k > s.dim // 2:
        return None
    cands = singular_vectors(s)
    brows = s.bilinear_rows()

    def b_pair(x: int, y: int) -> int:
        acc = 0
        rem = x
        while rem:
            i = (rem & -rem).bit_length() - 1
            acc ^= (brows[i] & y).bit_count()
            rem &= rem - 1
        return acc & 1

    chosen: list[int] = []
    span = {0}

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        for idx in range(start, len(cands)):
            v = cands[idx]
            if v in span:
                continue
            if any(b_pair(b, v) for b in chosen):
                continue
            # v new, singular, B-orthogonal: span stays totally singular
            added = [w ^ v for w in span]
            chosen.append(v)
            span.update(added)
            if extend(idx + 1):
                return True
            chosen.pop()
            span.difference_update(added)
        return False

    if not extend(0):
        return None
    for w in span:
        assert eval_q(s, w) == 0, "witness span contains a non-singular vector"
    return chosen


def transport(s: QuadSpace, t: F2Matrix) -> QuadSpace:
    """The form x -> q(T x) for invertible T, folded back to upper form."""
    if (t.rows, t.cols) != (s.dim, s.dim):
        raise ValueError("transport matrix has wrong shape")
    if rank(t) != s.dim:
        raise ValueError("transport matrix is singular")
    n = t.transpose().mul(s.upper).mul(t)
    rows = [0] * s.dim
    for i in range(s.dim):
        rows[i] |= (n.bits[i] >> i & 1) << i
        for j in range(i + 1, s.dim):
            bit = (n.bits[i] >> j & 1) ^ (n.bits[j] >> i & 1)
            rows[i] |= bit << j
    return QuadSpace(s.dim, F2Matrix(s.dim, s.dim, tuple(rows)))


def isometry_counts(s: QuadSpace) -> tuple[int, int]:
    """(order of the full isometry group, order of the Dickson kernel).

    Brute force over all dim x dim matrices; usable at dim <= 4 only.
    A matrix preserves q iff it preserves q on a basis and B on basis
    pairs.  The Dickson invariant of g is rank(g + I) mod 2.
    """
    n = s.dim
    if n > 4:
        raise ValueError("brute-force isometry sweep is limited to dim <= 4")
    basis_q = [eval_q(s, 1 << j) for j in range(n)]
    basis_b = {(i, j): eval_b(s, 1 << i, 1 << j)
               for i in range(n) for j in range(i + 1, n)}
    ident = F2Matrix.identity(n)
    mask = (1 << n) - 1
    full = 0
    kernel = 0
    for code in range(1 << (n * n)):
        rows = tuple((code >> (n * i)) & mask for i in range(n))
        t = F2Matrix(n, n, rows)
        if rank(t) != n:
            continue
        cols = [t.mul_vec(1 << j) for j in range(n)]
        if any(eval_q(s, cols[j]) != basis_q[j] for j in range(n)):
            continue
        if any(eval_b(s, cols[i], cols[j]) != basis_b[i, j]
               for i in range(n) for j in range(i + 1, n)):
            continue
        full += 1
        if rank(t.add(ident)) % 2 == 0:
            kernel += 1
    return full, kernel


# --- form files: first line dim, then the upper-triangular 0/1 rows ---

def write_form(s: QuadSpace, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{s.dim}\n")
        for row in s.upper.row_lists():
            fh.write(" ".join(str(b) for b in row) + "\n")


def read_form(path) -> QuadSpace:
    with open(path) as fh:
        dim = int(fh.readline().strip())
        rows = [[int(t) for t in fh.readline().split()] for _ in range(dim)]
    return QuadSpace(dim, F2Matrix.from_rows(rows, dim))
