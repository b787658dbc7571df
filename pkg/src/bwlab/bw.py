"""Barnes-Wall constructions.

Everything lives in an orthogonal ambient frame whose vectors have
squared norm 2 (frame_scale 2 in exlat terms), so half- and quarter-
integer coordinates stay exact with denominators 2 and 4.

The rank-16 lattice is generated by all pairwise sums of frame vectors
together with half the characteristic sums of first-order Reed-Muller
codewords.  The rank-32 lattice glues two orthogonal copies along the
diagonal embedding of the dual; the index-2^16 sublattice reverses the
roles.  Both steps are instances of one recipe on a pair (L, D):

    build(L, D) = (L + L) + {(v, v) : v in D}

with the next pair given by (L, D) -> (2D, L).  Applying the step twice
lands on 2x the rank-32 lattice, which tower_check verifies exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exlat, f2linalg
from .exlat import ScaledBasis

FRAME = Fraction(2)  # squared norm of each ambient frame vector


@lru_cache(maxsize=None)
def bw16() -> ScaledBasis:
    """Canonical rank-16 Barnes-Wall basis (den 2, frame norm 2)."""
    rows = []
    # frame sums alpha_i + alpha_j, i <= j (i = j gives 2*alpha_i)
    for i in range(16):
        for j in range(i, 16):
            row = [0] * 16
            row[i] += 2
            row[j] += 2
            rows.append(row)
    # halved codeword sums alpha_c / 2
    for word in f2linalg.enumerate_codewords(f2linalg.rm14()):
        rows.append(list(f2linalg.vec_to_bits(word, 16)))
    return exlat.hnf_basis(ScaledBasis.from_rows(rows, 2, FRAME))


def _glue_pair(left: ScaledBasis, diag: ScaledBasis) -> ScaledBasis:
    """(left + left) + {(v, v) : v in diag} as one canonical lattice."""
    both = exlat.direct_sum(left, left)
    den = both.den * diag.den
    rows = [tuple(x * diag.den for x in r) for r in both.mat]
    rows += [tuple(x * both.den for x in (r + r)) for r in diag.mat]
    return exlat.hnf_basis(ScaledBasis(tuple(rows), den, FRAME))


@lru_cache(maxsize=None)
def bw32() -> ScaledBasis:
    """Canonical rank-32 Barnes-Wall basis: even, unimodular, minimum 4."""
    return _glue_pair(bw16(), exlat.dual(bw16()))


@lru_cache(maxsize=None)
def bw1() -> ScaledBasis:
    """The index-2^16 sublattice of bw32 (doubled-dual copies, diagonal bw16)."""
    return _glue_pair(exlat.scale(exlat.dual(bw16()), 2), bw16())


def tower_check() -> bool:
    """Apply the pair step once more; the result must be exactly 2 * bw32.

    Pair chain: (bw16, bw16*) -> (2 bw16*, bw16) -> (2 bw16, 2 bw16*).
    """
    level2 = _glue_pair(exlat.scale(bw16(), 2),
                        exlat.scale(exlat.dual(bw16()), 2))
    return exlat.lattice_equal(level2, exlat.scale(bw32(), 2))


@dataclass(frozen=True)
class SimilarityReport:
    """Necessary-condition evidence for similarity, never a proof."""
    scale: Fraction
    det_ok: bool
    even_ok: bool
    norm_counts: tuple[tuple[Fraction, int, int], ...]  # (n, |a(scale*n)|, |b(n)|)

    @property
    def norms_ok(self) -> bool:
        return all(ca == cb for _, ca, cb in self.norm_counts)

    @property
    def all_ok(self) -> bool:
        return self.det_ok and self.even_ok and self.norms_ok


def similarity_invariants(a: ScaledBasis, b: ScaledBasis, scale,
                          norms=(2, 4, 6, 8),
                          threads: int | None = None) -> SimilarityReport:
    """Invariant-level check that a could be a norm-scale copy of b.

    Verifies det(a) = scale^rank * det(b), evenness of both, and the
    norm-profile equalities |a(scale*n)| = |b(n)| for n in norms.  The
    norm list is adjustable because a full profile is enumeration-heavy
    at rank 32.
    """
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    ga, gb = exlat.gram(exlat.hnf_basis(a)), exlat.gram(exlat.hnf_basis(b))
    rank = len(gb.entries)
    det_ok = exlat.determinant(ga) == scale ** rank * exlat.determinant(gb)
    even_ok = exlat.is_even(ga) and exlat.is_even(gb)
    counts = []
    for n in norms:
        n = Fraction(n)
        ca = exlat.enumerate_norm(a, scale * n, threads=threads)
        cb = exlat.enumerate_norm(b, n, threads=threads)
        counts.append((n, ca, cb))
    return SimilarityReport(scale, det_ok, even_ok, tuple(counts))


@dataclass(frozen=True)
class BwTowerReport:
    det16: Fraction
    det32: Fraction
    kissing16: int
    kissing32: int
    quotient_bw_bw1: tuple[int, ...]
    tower_closes: bool
    similarity16: SimilarityReport
    similarity32: SimilarityReport

    def as_dict(self) -> dict:
        return {
            "det16": str(self.det16),
            "det32": str(self.det32),
            "kissing16": self.kissing16,
            "kissing32": self.kissing32,
            "quotient_bw_bw1": list(self.quotient_bw_bw1),
            "tower_closes": self.tower_closes,
            "similarity16_ok": self.similarity16.all_ok,
            "similarity32_ok": self.similarity32.all_ok,
        }


def tower_report(threads: int | None = None, full_profile: bool = False) -> BwTowerReport:
    """One-shot structural sweep of the pair tower.

    full_profile extends the rank-32 similarity check to norms {2,4};
    norm 4 at rank 32 is the expensive enumeration.
    """
    b16, b32 = bw16(), bw32()
    sim16 = similarity_invariants(
        exlat.rescale_metric(exlat.dual(b16), 2), b16, 1,
        norms=(2, 4, 6, 8), threads=threads)
    sim32 = similarity_invariants(
        bw1(), b32, 2, norms=(2, 4) if full_profile else (2,),
        threads=threads)
    return BwTowerReport(
        det16=exlat.determinant(exlat.gram(b16)),
        det32=exlat.determinant(exlat.gram(b32)),
        kissing16=exlat.enumerate_norm(b16, 4, threads=threads),
        kissing32=exlat.enumerate_norm(b32, 4, threads=threads) if full_profile else 0,
        quotient_bw_bw1=exlat.quotient_invariants(b32, bw1()),
        tower_closes=tower_check(),
        similarity16=sim16,
        similarity32=sim32,
    )
