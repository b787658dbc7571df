"""Exact lattice engine.

A lattice is held as a ScaledBasis: integer generator rows `mat`, one
positive denominator `den`, and a `frame_scale` giving the squared norm
of every ambient frame vector (the frame is orthogonal).  The generator
i is mat[i]/den, and

    <u, v> = frame_scale * (u_int . v_int) / den**2

for integer coordinate rows u_int, v_int.  frame_scale 1 is the plain
Euclidean frame; the Barnes-Wall constructions use frame_scale 2 so
that half-integer coordinates stay exact with den a power of two.

Canonical form: row Hermite normal form with positive pivots, entries
above a pivot reduced into [0, pivot), zero rows dropped, and (mat, den)
divided by their common gcd.  Equal lattices yield identical canonical
bases, so equality is a tuple comparison.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

# exact float-bound slack on the squared-norm radius; candidates are
# confirmed with integer arithmetic afterwards, so the slack only has
# to cover float rounding, never correctness
ENUM_MARGIN = 1e-6
_CHUNK = 1 << 17


@dataclass(frozen=True)
class ScaledBasis:
    mat: tuple[tuple[int, ...], ...]
    den: int
    frame_scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")
        if not self.mat:
            raise ValueError("empty generator list")
        width = len(self.mat[0])
        if any(len(r) != width for r in self.mat):
            raise ValueError("ragged generator matrix")
        fs = Fraction(self.frame_scale)
        if fs <= 0:
            raise ValueError("frame_scale must be positive")
        object.__setattr__(self, "frame_scale", fs)

    @staticmethod
    def from_rows(rows, den: int = 1, frame_scale=1) -> "ScaledBasis":
        return ScaledBasis(tuple(tuple(int(x) for x in r) for r in rows),
                           int(den), Fraction(frame_scale))

    @property
    def ambient_dim(self) -> int:
        return len(self.mat[0])

    @property
    def rank(self) -> int:
        return len(hnf_basis(self).mat)

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [tuple(Fraction(x, self.den) for x in row) for row in self.mat]


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


class ContainmentError(ValueError):
    """Raised when a claimed sublattice is not actually contained."""


# --------------------------------------------------------------------------
# integer row HNF

def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def hnf_int_rows(rows: list[list[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form of the integer row lattice.

    Pivots positive, entries above each pivot reduced into [0, pivot),
    zero rows removed.  Unimodular row operations only.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    pr = 0
    for c in range(ncols):
        pivot_found = False
        for j in range(pr, nrows):
            if m[j][c] == 0:
                continue
            if not pivot_found:
                m[pr], m[j] = m[j], m[pr]
                pivot_found = True
            else:
                a, b = m[pr][c], m[j][c]
                g, u, v = _ext_gcd(a, b)
                p, q = a // g, b // g
                rp = [u * x + v * y for x, y in zip(m[pr], m[j])]
                rj = [p * y - q * x for x, y in zip(m[pr], m[j])]
                m[pr], m[j] = rp, rj
        if pivot_found:
            if m[pr][c] < 0:
                m[pr] = [-x for x in m[pr]]
            p = m[pr][c]
            for j in range(pr):
                f = m[j][c] // p
                if f:
                    m[j] = [x - f * y for x, y in zip(m[j], m[pr])]
            pr += 1
            if pr == nrows:
                break
    return m[:pr]


@lru_cache(maxsize=256)
def hnf_basis(b: ScaledBasis) -> ScaledBasis:
    """Canonical basis: row HNF, minimal denominator. Idempotent."""
    rows = hnf_int_rows([list(r) for r in b.mat])
    if not rows:
        raise ValueError("generators span the zero lattice")
    g = b.den
    for r in rows:
        for x in r:
            if x:
                g = math.gcd(g, x)
        if g == 1:
            break
    if g > 1:
        rows = [[x // g for x in r] for r in rows]
        den = b.den // g
    else:
        den = b.den
    return ScaledBasis(tuple(tuple(r) for r in rows), den, b.frame_scale)


# --------------------------------------------------------------------------
# Gram data

def gram(b: ScaledBasis) -> GramMatrix:
    """Exact Gram matrix of the stored generator rows."""
    scale = b.frame_scale / (b.den * b.den)
    rows = b.mat
    ent = tuple(
        tuple(scale * sum(x * y for x, y in zip(ri, rj)) for rj in rows)
        for ri in rows
    )
    return GramMatrix(ent)


def _det_fraction(entries) -> Fraction:
    """Exact determinant of a square rational matrix (fraction-free Bareiss)."""
    n = len(entries)
    if n == 0:
        return Fraction(1)
    den_all = 1
    for row in entries:
        for x in row:
            den_all = den_all * Fraction(x).denominator // math.gcd(
                den_all, Fraction(x).denominator)
    a = [[int(Fraction(x) * den_all) for x in row] for row in entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den_all ** n)


def determinant(g: GramMatrix) -> Fraction:
    n = g.size
    if any(len(row) != n for row in g.entries):
        raise ValueError("gram matrix not square")
    return _det_fraction(g.entries)


def is_even(g: GramMatrix) -> bool:
    """True iff the Gram matrix is integral with even diagonal."""
    for row in g.entries:
        for x in row:
            if Fraction(x).denominator != 1:
                return False
    return all(row[i] % 2 == 0 for i, row in enumerate(g.entries))


# --------------------------------------------------------------------------
# rational linear algebra helpers (Fractions, exact)

def _fraction_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def _coords_in(outer: ScaledBasis, rows: tuple[tuple[int, ...], ...],
               row_den: int) -> list[list[Fraction]]:
    """Coordinates of rows/row_den in the basis hnf_basis(outer); exact."""
    ob = hnf_basis(outer)
    omat = [[Fraction(x) for x in r] for r in ob.mat]
    r, n = len(omat), len(omat[0])
    gramo = [[sum(omat[i][k] * omat[j][k] for k in range(n)) for j in range(r)]
             for i in range(r)]
    ginv = _fraction_inverse(gramo)
    out = []
    for row in rows:
        w = [Fraction(x * ob.den, row_den) for x in row]
        proj = [sum(w[k] * omat[j][k] for k in range(n)) for j in range(r)]
        x = [sum(ginv[i][j] * proj[j] for j in range(r)) for i in range(r)]
        # confirm the row really lies in the span
        for k in range(n):
            if sum(x[j] * omat[j][k] for j in range(r)) != w[k]:
                raise ContainmentError("vector outside the outer lattice's span")
        out.append(x)
    return out


def contains(outer: ScaledBasis, inner: ScaledBasis) -> bool:
    """True iff every generator of inner lies in outer."""
    if outer.frame_scale != inner.frame_scale:
        return False
    try:
        coords = _coords_in(outer, inner.mat, inner.den)
    except ContainmentError:
        return False
    return all(x.denominator == 1 for row in coords for x in row)


def quotient_invariants(outer: ScaledBasis, inner: ScaledBasis) -> tuple[int, ...]:
    """Nontrivial invariant factors of outer/inner (ascending, each | next).

    Raises ContainmentError if inner is not a finite-index sublattice
    (membership of every inner generator is checked exactly).
    """
    if outer.frame_scale != inner.frame_scale:
        raise ValueError("lattices live in different frames")
    ib = hnf_basis(inner)
    coords = _coords_in(outer, ib.mat, ib.den)
    x_int = []
    for row in coords:
        if any(c.denominator != 1 for c in row):
            raise ContainmentError("inner lattice not contained in outer")
        x_int.append([int(c) for c in row])
    ob = hnf_basis(outer)
    if len(x_int) != len(ob.mat):
        raise ContainmentError("inner lattice has smaller rank than outer")
    from sympy import Matrix
    from sympy.matrices.normalforms import invariant_factors
    facs = [abs(int(d)) for d in invariant_factors(Matrix(x_int))]
    if any(d == 0 for d in facs):
        raise ContainmentError("inner lattice has smaller rank than outer")
    return tuple(d for d in facs if d != 1)


def lattice_equal(a: ScaledBasis, b: ScaledBasis) -> bool:
    if a.frame_scale != b.frame_scale:
        return False
    ca, cb = hnf_basis(a), hnf_basis(b)
    return ca.mat == cb.mat and ca.den == cb.den


def dual(b: ScaledBasis) -> ScaledBasis:
    """Dual lattice {w in span : <w, L> integral}, canonicalized."""
    bb = hnf_basis(b)
    mat = [[Fraction(x) for x in r] for r in bb.mat]
    r, n = len(mat), len(mat[0])
    gmat = [[sum(mat[i][k] * mat[j][k] for k in range(n)) for j in range(r)]
            for i in range(r)]
    ginv = _fraction_inverse(gmat)
    factor = Fraction(bb.den) / bb.frame_scale
    drat = [[factor * sum(ginv[i][j] * mat[j][k] for j in range(r))
             for k in range(n)] for i in range(r)]
    den = 1
    for row in drat:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    rows = [[int(x * den) for x in row] for row in drat]
    return hnf_basis(ScaledBasis.from_rows(rows, den, bb.frame_scale))


def direct_sum(a: ScaledBasis, b: ScaledBasis) -> ScaledBasis:
    """Orthogonal direct sum in the concatenated frame."""
    if a.frame_scale != b.frame_scale:
        raise ValueError("frame scales differ")
    den = a.den * b.den // math.gcd(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    na, nb = a.ambient_dim, b.ambient_dim
    rows = [tuple(x * fa for x in r) + (0,) * nb for r in a.mat]
    rows += [(0,) * na + tuple(x * fb for x in r) for r in b.mat]
    return hnf_basis(ScaledBasis(tuple(rows), den, a.frame_scale))


def scale(b: ScaledBasis, k) -> ScaledBasis:
    """The lattice k*L (vectors multiplied by the positive rational k)."""
    k = Fraction(k)
    if k <= 0:
        raise ValueError("scale must be positive")
    rows = [[x * k.numerator for x in r] for r in b.mat]
    return hnf_basis(ScaledBasis.from_rows(rows, b.den * k.denominator,
                                           b.frame_scale))


def rescale_metric(b: ScaledBasis, factor) -> ScaledBasis:
    """Same coordinates, frame norm multiplied by factor (norm doubling etc)."""
    return hnf_basis(ScaledBasis(b.mat, b.den, b.frame_scale * Fraction(factor)))


# --------------------------------------------------------------------------
# LLL (delta = 3/4), exact integer arithmetic via sympy's kernel

@lru_cache(maxsize=64)
def lll_reduce(b: ScaledBasis) -> ScaledBasis:
    from sympy import QQ, ZZ
    from sympy.polys.matrices import DomainMatrix
    bb = hnf_basis(b)
    dm = DomainMatrix.from_list([list(r) for r in bb.mat], ZZ)
    red = dm.lll(delta=QQ(3, 4)).to_list()
    rows = tuple(tuple(int(x) for x in r) for r in red)
    return ScaledBasis(rows, bb.den, bb.frame_scale)


# --------------------------------------------------------------------------
# norm enumeration (the performance kernel)

def _norm_target(b: ScaledBasis, n) -> int | None:
    """Integer t with {v : <v,v> = n} = {x : |x . mat|^2 = t}, or None."""
    n = Fraction(n)
    if n <= 0:
        raise ValueError("norm must be positive")
    t = n * b.den * b.den / b.frame_scale
    if t.denominator != 1:
        return None
    return int(t)


def _expand_stage(L: np.ndarray, i: int, X, C, PN, FREE, r2: float):
    """One layer of the search tree, vectorized over all live prefixes."""
    ell = L[i, i]
    c = C[:, i]
    rem = np.maximum(r2 - PN, 0.0)
    s = np.sqrt(rem)
    lo = np.ceil((-s - c) / ell - 1e-9).astype(np.int64)
    hi = np.floor((s - c) / ell + 1e-9).astype(np.int64)
    lo = np.where(FREE, np.maximum(lo, 0), lo)
    cnt = np.maximum(hi - lo + 1, 0)
    total = int(cnt.sum())
    if total == 0:
        return None
    idx = np.repeat(np.arange(len(cnt)), cnt)
    starts = np.concatenate(([0], np.cumsum(cnt)[:-1]))
    t = lo[idx] + (np.arange(total) - starts[idx])
    newX = X[idx]
    newX[:, i] = t
    comp = c[idx] + t * ell
    newPN = PN[idx] + comp * comp
    newC = C[idx]
    if i > 0:
        newC[:, :i] += t[:, None] * L[i, :i]
    newFREE = FREE[idx] & (t == 0)
    return newX, newC, newPN, newFREE


def _run_block(M, L, T, r2, block, collect):
    """Depth-first over stages with block splitting to bound memory."""
    r = M.shape[0]
    count = 0
    found = []
    stack = [block]
    while stack:
        i, X, C, PN, FREE = stack.pop()
        while i > 0:
            out = _expand_stage(L, i - 1, X, C, PN, FREE, r2)
            if out is None:
                X = None
                break
            X, C, PN, FREE = out
            i -= 1
            if len(X) > _CHUNK and i > 0:
                for k in range(0, len(X), _CHUNK):
                    sl = slice(k, k + _CHUNK)
                    stack.append((i, X[sl], C[sl], PN[sl], FREE[sl]))
                X = None
                break
        if X is None or len(X) == 0:
            continue
        # exact integer confirmation for every float-accepted candidate
        V = X @ M
        S = np.einsum("ij,ij->i", V, V)
        sel = S == T
        nsel = int(sel.sum())
        if nsel:
            count += 2 * nsel  # each found v stands for the pair {v, -v}
            if collect:
                W = V[sel]
                found.append(W)
                found.append(-W)
    return count, found


def _root_blocks(L, r, r2, workers: int):
    """Split the top coordinate's range into per-worker start blocks."""
    ell = L[r - 1, r - 1]
    hi = int(np.floor(np.sqrt(r2) / ell + 1e-9))
    ts = np.arange(0, hi + 1, dtype=np.int64)  # free mode: t >= 0 only
    if len(ts) == 0:
        return []
    parts = np.array_split(ts, min(workers, len(ts))) if workers > 1 else [ts]
    blocks = []
    for part in parts:
        if len(part) == 0:
            continue
        X = np.zeros((len(part), r), dtype=np.int64)
        X[:, r - 1] = part
        C = part[:, None].astype(np.float64) * L[r - 1][None, :]
        C[:, r - 1] = 0.0
        comp = part.astype(np.float64) * L[r - 1, r - 1]
        PN = comp * comp
        FREE = part == 0
        blocks.append((r - 1, X, C, PN, FREE))
    return blocks


@lru_cache(maxsize=32)
def _enumerate_cached(b: ScaledBasis, n: Fraction, threads: int):
    red = lll_reduce(b)
    M = np.array(red.mat, dtype=np.int64)
    if np.abs(M).max(initial=0) > 1 << 20:
        raise ValueError("basis entries too large for the int64 kernel")
    T = _norm_target(red, n)
    ncols = M.shape[1]
    if T is None:
        return 0, np.empty((0, ncols), dtype=np.int64)
    if T > 1 << 40:
        raise ValueError("norm target too large for the int64 kernel")
    r = M.shape[0]
    A = (M @ M.T).astype(np.float64)
    L = np.linalg.cholesky(A)
    r2 = float(T) + ENUM_MARGIN
    blocks = _root_blocks(L, r, r2, threads)
    total = 0
    collected = []
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(
                lambda blk: _run_block(M, L, T, r2, blk, True), blocks))
    else:
        results = [_run_block(M, L, T, r2, blk, True) for blk in blocks]
    for cnt, found in results:
        total += cnt
        collected.extend(found)
    if total == 0:
        return 0, np.empty((0, ncols), dtype=np.int64)
    V = np.concatenate(collected, axis=0)
    order = np.lexsort(V.T[::-1])
    V = V[order]
    V.setflags(write=False)
    return total, V


def enumerate_norm(b: ScaledBasis, n, mode: str = "count",
                   threads: int | None = None):
    """All lattice vectors of exact norm n (both signs of each pair).

    count mode returns the cardinality; collect mode returns a read-only
    integer array of den-scaled frame coordinates, rows sorted
    lexicographically.  LLL preconditioning, float Cholesky pruning with
    an absolute radius margin, then exact integer confirmation.
    """
    if isinstance(n, float):
        raise TypeError("norm must be an exact int/Fraction, not float")
    if mode not in ("count", "collect"):
        raise ValueError("mode must be 'count' or 'collect'")
    if Fraction(n) <= 0:
        raise ValueError("norm must be positive")
    if threads is None:
        threads = os.cpu_count() or 1
    bb = hnf_basis(b)
    count, vecs = _enumerate_cached(bb, Fraction(n), max(1, int(threads)))
    return count if mode == "count" else vecs


def generated_by_norm_vectors(b: ScaledBasis, n, threads: int | None = None) -> bool:
    """True iff the vectors of norm n span the whole lattice."""
    target = hnf_basis(b)
    vecs = enumerate_norm(target, n, mode="collect", threads=threads)
    if len(vecs) == 0:
        return False
    acc: list[list[int]] = []
    want_rank = len(target.mat)
    for start in range(0, len(vecs), 512):
        batch = [[int(x) for x in row] for row in vecs[start:start + 512]]
        acc = hnf_int_rows(acc + batch)
        if len(acc) == want_rank:
            sub = ScaledBasis.from_rows(acc, target.den, target.frame_scale)
            if lattice_equal(sub, target):
                return True
    sub = ScaledBasis.from_rows(acc, target.den, target.frame_scale)
    return lattice_equal(sub, target)


def minimum_norm(b: ScaledBasis, search_limit: int = 64) -> Fraction:
    """Smallest positive vector norm, found by stepping the exact norm grid."""
    bb = hnf_basis(b)
    step = bb.frame_scale / (bb.den * bb.den)
    n = step
    while n <= search_limit:
        if enumerate_norm(bb, n) > 0:
            return n
        n += step
    raise RuntimeError(f"no vector of norm <= {search_limit} found")


# --------------------------------------------------------------------------
# lattice files: "rank ambient_dim den [frame_scale]", then integer rows

def write_lattice(b: ScaledBasis, path) -> None:
    """Write the canonical HNF basis; frame_scale appended only if not 1."""
    c = hnf_basis(b)
    with open(path, "w") as fh:
        head = f"{len(c.mat)} {c.ambient_dim} {c.den}"
        if c.frame_scale != 1:
            head += f" {c.frame_scale}"
        fh.write(head + "\n")
        for row in c.mat:
            fh.write(" ".join(str(x) for x in row) + "\n")


def read_lattice(path) -> ScaledBasis:
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) not in (3, 4):
            raise ValueError("bad lattice file header")
        nrows, ncols, den = int(head[0]), int(head[1]), int(head[2])
        frame = Fraction(head[3]) if len(head) == 4 else Fraction(1)
        rows = []
        for _ in range(nrows):
            row = [int(t) for t in fh.readline().split()]
            if len(row) != ncols:
                raise ValueError("bad lattice file row")
            rows.append(row)
    return ScaledBasis.from_rows(rows, den, frame)
