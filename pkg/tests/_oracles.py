"""Independent reference implementations used only by the tests.

Everything here recomputes values by a different method than the
package: vector counts by exhaustive box enumeration bounded through an
eigenvalue estimate, series roots by Newton iteration over rationals.
Deliberately slow and simple.
"""

from fractions import Fraction
from math import ceil, sqrt

import numpy as np

from bwlab import exlat
from bwlab.exlat import ScaledBasis

MAX_BOX = 2_000_000


def box_norm_count(b: ScaledBasis, n) -> int:
    """Count lattice vectors of exact norm n by enumerating a box.

    The box radius comes from the smallest Gram eigenvalue: any x with
    x G x^T <= N satisfies |x_i| <= sqrt(N / lambda_min).  Uses numpy
    eigvalsh plus exact integer norms, nothing from the package kernel.
    """
    n = Fraction(n)
    M = np.array(b.mat, dtype=np.int64)
    gram_float = (M @ M.T).astype(np.float64) \
        * float(b.frame_scale) / (b.den * b.den)
    lam_min = float(np.linalg.eigvalsh(gram_float)[0])
    if lam_min <= 0:
        raise ValueError("basis rows are dependent")
    radius = ceil(sqrt(float(n) / lam_min * (1 + 1e-9))) + 1
    rank = M.shape[0]
    if (2 * radius + 1) ** rank > MAX_BOX:
        raise ValueError("box too large; pick a smaller test lattice")
    axes = [np.arange(-radius, radius + 1)] * rank
    X = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, rank)
    V = X @ M
    S = (V * V).sum(axis=1)
    # norm n <=> frame * S / den^2 == n, compared in exact integers
    target = n * b.den * b.den / b.frame_scale
    if target.denominator != 1:
        return 0
    return int(np.count_nonzero(S == int(target))) - (1 if n == 0 else 0)


def random_small_basis(rng, max_rank: int = 6) -> ScaledBasis:
    """A random full-rank lattice small enough for the box oracle."""
    while True:
        rank = rng.randint(1, max_rank)
        ambient = rank + rng.choice([0, 0, 1])
        den = rng.choice([1, 1, 2, 3])
        frame = rng.choice([Fraction(1), Fraction(1), Fraction(2),
                            Fraction(1, 2)])
        rows = [[rng.randint(-2, 2) for _ in range(ambient)]
                for _ in range(rank)]
        M = np.array(rows, dtype=np.int64)
        gram_float = (M @ M.T).astype(np.float64) \
            * float(frame) / (den * den)
        eigs = np.linalg.eigvalsh(gram_float)
        if eigs[0] < 0.2:
            continue
        radius = ceil(sqrt(8.0 / eigs[0])) + 1
        if (2 * radius + 1) ** rank > MAX_BOX:
            continue
        return ScaledBasis.from_rows(rows, den, frame)


def shuffled_basis(b: ScaledBasis, rng, steps: int = 25) -> ScaledBasis:
    """Apply random determinant-+-1 row operations; same lattice."""
    rows = [list(r) for r in b.mat]
    k = len(rows)
    for _ in range(steps):
        i = rng.randrange(k)
        j = rng.randrange(k)
        if i == j:
            rows[i] = [-x for x in rows[i]]
        else:
            c = rng.randint(-3, 3)
            rows[i] = [a + c * bb for a, bb in zip(rows[i], rows[j])]
    return ScaledBasis.from_rows(rows, b.den, b.frame_scale)


# --------------------------------------------------------------------------
# rational power series helpers for the q-expansion oracle


def poly_mul(a, b, n):
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def poly_inv(a, n):
    assert a[0] != 0
    inv = [Fraction(0)] * n
    inv[0] = 1 / Fraction(a[0])
    for i in range(1, n):
        acc = Fraction(0)
        for j in range(1, i + 1):
            if j < len(a):
                acc += Fraction(a[j]) * inv[i - j]
        inv[i] = -inv[0] * acc
    return inv


def newton_cube_root(y, n):
    """c with c^3 = y to n terms, for y a rational series with y[0] = 1."""
    assert y[0] == 1
    c = [Fraction(1)] + [Fraction(0)] * (n - 1)
    third = Fraction(1, 3)
    for _ in range(n.bit_length() + 2):
        c_sq = poly_mul(c, c, n)
        c = [third * (2 * ci + yi) for ci, yi in
             zip(c, poly_mul(list(y[:n]), poly_inv(c_sq, n), n))]
    return c
