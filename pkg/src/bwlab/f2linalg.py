"""Linear algebra over GF(2) on bit-packed rows.

A vector of length n is a Python int whose bit j is coordinate j, so
coordinate 0 is the least significant bit.  A matrix is a tuple of such
row ints.  Everything is immutable and exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

MAX_ENUM_DIM = 24  # guard for codeword span enumeration


def vec_from_bits(bits) -> int:
    """Pack an iterable of 0/1 into a vector int (index 0 = lsb)."""
    x = 0
    for j, b in enumerate(bits):
        if b & 1:
            x |= 1 << j
    return x


def vec_to_bits(x: int, n: int) -> tuple[int, ...]:
    return tuple((x >> j) & 1 for j in range(n))


@dataclass(frozen=True)
class F2Matrix:
    rows: int
    cols: int
    bits: tuple[int, ...]  # one int per row

    def __post_init__(self):
        assert len(self.bits) == self.rows
        mask = (1 << self.cols) - 1
        assert all(0 <= r <= mask for r in self.bits), "row exceeds column count"

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "F2Matrix":
        """Build from an iterable of rows, each an iterable of 0/1 or an int."""
        packed = []
        width = cols
        for r in rows:
            if isinstance(r, int):
                packed.append(r)
            else:
                r = tuple(r)
                if width is None:
                    width = len(r)
                packed.append(vec_from_bits(r))
        if width is None:
            raise ValueError("cols required when all rows are ints")
        return F2Matrix(len(packed), width, tuple(packed))

    @staticmethod
    def identity(n: int) -> "F2Matrix":
        return F2Matrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "F2Matrix":
        return F2Matrix(rows, cols, (0,) * rows)

    def row_lists(self) -> list[list[int]]:
        return [list(vec_to_bits(r, self.cols)) for r in self.bits]

    def entry(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1

    def transpose(self) -> "F2Matrix":
        out = [0] * self.cols
        for i, r in enumerate(self.bits):
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return F2Matrix(self.cols, self.rows, tuple(out))

    def mul(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose()
        out = []
        for r in self.bits:
            acc = 0
            for j, c in enumerate(ot.bits):
                acc |= ((r & c).bit_count() & 1) << j
            out.append(acc)
        return F2Matrix(self.rows, other.cols, tuple(out))

    def mul_vec(self, x: int) -> int:
        """Matrix times column vector: bit i of result = <row i, x>."""
        acc = 0
        for i, r in enumerate(self.bits):
            acc |= ((r & x).bit_count() & 1) << i
        return acc

    def add(self, other: "F2Matrix") -> "F2Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return F2Matrix(self.rows, self.cols,
                        tuple(a ^ b for a, b in zip(self.bits, other.bits)))


def rank(m: F2Matrix) -> int:
    """GF(2) row rank by Gaussian elimination on packed rows."""
    rows = list(m.bits)
    r = 0
    for j in range(m.cols):
        pivot = None
        for i in range(r, len(rows)):
            if (rows[i] >> j) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> j) & 1:
                rows[i] ^= rows[r]
        r += 1
        if r == len(rows):
            break
    return r


def row_space_basis(m: F2Matrix) -> tuple[int, ...]:
    """Reduced-echelon basis of the row space (canonical for the space)."""
    rows = list(m.bits)
    basis = []
    for j in range(m.cols):
        pivot = None
        for i, row in enumerate(rows):
            if (row >> j) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        p = rows.pop(pivot)
        rows = [r ^ p if (r >> j) & 1 else r for r in rows]
        basis = [b ^ p if (b >> j) & 1 else b for b in basis]
        basis.append(p)
    return tuple(basis)


def is_invertible(m: F2Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: F2Matrix) -> F2Matrix:
    """Inverse of a square invertible matrix (Gauss-Jordan on [m | I])."""
    if m.rows != m.cols:
        raise ValueError("not square")
    n = m.rows
    left = list(m.bits)
    right = [1 << i for i in range(n)]
    r = 0
    for j in range(n):
        pivot = None
        for i in range(r, n):
            if (left[i] >> j) & 1:
                pivot = i
                break
        if pivot is None:
            raise ValueError("singular matrix")
        left[r], left[pivot] = left[pivot], left[r]
        right[r], right[pivot] = right[pivot], right[r]
        for i in range(n):
            if i != r and (left[i] >> j) & 1:
                left[i] ^= left[r]
                right[i] ^= right[r]
        r += 1
    return F2Matrix(n, n, tuple(right))


def random_invertible(n: int, rng) -> F2Matrix:
    """Uniform-ish invertible n x n matrix by rejection sampling."""
    mask = (1 << n) - 1
    while True:
        m = F2Matrix(n, n, tuple(rng.getrandbits(n) & mask for _ in range(n)))
        if rank(m) == n:
            return m


@dataclass(frozen=True)
class F2Code:
    """A binary linear code given by a (possibly redundant) generator matrix."""
    generators: F2Matrix
    length: int

    def __post_init__(self):
        assert self.generators.cols == self.length

    @property
    def dimension(self) -> int:
        return rank(self.generators)

    def contains(self, word: int) -> bool:
        ext = F2Matrix(self.generators.rows + 1, self.length,
                       self.generators.bits + (word,))
        return rank(ext) == self.dimension


def rm14() -> F2Code:
    """First-order Reed-Muller code of length 16 (dimension 5).

    Generators: the all-ones word and the four coordinate functions on
    the 16 points, i.e. the patterns (10)^8, (1100)^4, (1^4 0^4)^2, 1^8 0^8.
    """
    gens = (
        0xFFFF,  # 1111111111111111
        0x5555,  # 1010101010101010
        0x3333,  # 1100110011001100
        0x0F0F,  # 1111000011110000
        0x00FF,  # 1111111100000000
    )
    return F2Code(F2Matrix(5, 16, gens), 16)


def enumerate_codewords(c: F2Code) -> list[int]:
    """All 2^dim codewords, ordered lexicographically by message vector.

    The message vector runs over independent rows of the generator matrix
    in their stored order; its first coordinate varies slowest.
    """
    basis = _independent_rows(c.generators)
    k = len(basis)
    if k > MAX_ENUM_DIM:
        raise ValueError(f"code dimension {k} exceeds enumeration guard {MAX_ENUM_DIM}")
    words = []
    for msg in product((0, 1), repeat=k):
        w = 0
        for bit, g in zip(msg, basis):
            if bit:
                w ^= g
        words.append(w)
    return words


def _independent_rows(m: F2Matrix) -> list[int]:
    """A maximal independent subset of the rows, in row order."""
    picked = []
    span = []  # echelon form of picked rows
    for r in m.bits:
        v = r
        for b in span:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            picked.append(r)
            # insert keeping echelon property on lowest set bits
            for i, b in enumerate(span):
                if (v & -v) < (b & -b):
                    span.insert(i, v)
                    break
            else:
                span.append(v)
    return picked


def weight_enumerator(c: F2Code) -> dict[int, int]:
    """Hamming-weight distribution of the full codeword list."""
    counts = Counter(w.bit_count() for w in enumerate_codewords(c))
    return dict(sorted(counts.items()))


# --- plain-text matrix files: first line "rows cols", then 0/1 rows ---

def write_matrix(m: F2Matrix, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{m.rows} {m.cols}\n")
        for row in m.row_lists():
            fh.write(" ".join(str(b) for b in row) + "\n")


def read_matrix(path) -> F2Matrix:
    with open(path) as fh:
        header = fh.readline().split()
        rows, cols = int(header[0]), int(header[1])
        data = []
        for _ in range(rows):
            data.append([int(t) for t in fh.readline().split()])
    m = F2Matrix.from_rows(data, cols)
    if m.rows != rows:
        raise ValueError("row count mismatch in matrix file")
    return m
