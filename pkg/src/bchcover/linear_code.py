"""Binary linear block codes on int bitmasks.

Bit order convention, used everywhere in this package: bit i of a word is
coordinate i, which is the coefficient of x^i for cyclic codes and the
leftmost-first character in textual I/O. So the string "1101000" is the
polynomial 1 + x + x^3.

A LinearCode is immutable after construction; syndrome computation and
codeword enumeration are pure, so codes are safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .gf2m import BinaryPolynomial

DEFAULT_CODEWORD_BUDGET = 1 << 26

Exactness = Literal["exact", "lower_bound"]


@dataclass(frozen=True)
class Word:
    """Fixed-length bit vector; bit i = coordinate i = i-th text character."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for length {self.n}")

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> Word:
        """Parse a 0/1 string (length gives n) or a 0x-prefixed hex value."""
        text = text.strip()
        if text.lower().startswith("0x"):
            if n is None:
                raise ValueError("hex words need an explicit length")
            return cls(int(text, 16), n)
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a 0/1 word: {text!r}")
        if n is not None and n != len(text):
            raise ValueError(f"word {text!r} has length {len(text)}, expected {n}")
        bits = 0
        for i, c in enumerate(text):
            if c == "1":
                bits |= 1 << i
        return cls(bits, len(text))

    def weight(self) -> int:
        return self.bits.bit_count()

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __xor__(self, other: Word) -> Word:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return Word(self.bits ^ other.bits, self.n)

    def distance(self, other: Word) -> int:
        return (self ^ other).weight()

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _rref(rows: list[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2) with column pivoting.

    Returns (reduced rows, pivot columns). Rows must be independent.
    """
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work, pivots


class LinearCode:
    """Binary [n, k] linear code from k independent generator rows.

    The parity-check matrix is derived from the systematic form (Gaussian
    elimination with column pivoting); the pivot columns are recorded so H
    stays in the original coordinate order. G @ H.T = 0 and rank(H) = n - k
    hold by construction.
    """

    def __init__(
        self,
        generator_rows: list[int],
        n: int,
        label: str = "",
        min_distance: int | None = None,
        min_distance_exact: bool = False,
        generator_poly: BinaryPolynomial | None = None,
        designed_distance: int | None = None,
    ) -> None:
        k = len(generator_rows)
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        for row in generator_rows:
            if not 0 <= row < (1 << n):
                raise ValueError(f"generator row 0x{row:x} out of range for n={n}")
        reduced, pivots = _rref(generator_rows, n)
        if len(pivots) != k:
            raise ValueError(f"generator rows are dependent: rank {len(pivots)} < k={k}")
        self.n = n
        self.k = k
        self.generator_rows = tuple(generator_rows)
        self.pivot_columns = tuple(pivots)
        self.label = label
        self.generator_poly = generator_poly
        self.designed_distance = designed_distance
        self.covering_radius: int | None = None

        nonpivots = [c for c in range(n) if c not in set(pivots)]
        h_rows = []
        for c in nonpivots:
            h = 1 << c
            for r, pcol in enumerate(pivots):
                if (reduced[r] >> c) & 1:
                    h |= 1 << pcol
            h_rows.append(h)
        self.parity_rows = tuple(h_rows)
        cols = []
        for i in range(n):
            v = 0
            for j, h in enumerate(h_rows):
                v |= ((h >> i) & 1) << j
            cols.append(v)
        self.syndrome_columns = tuple(cols)

        self._min_distance = min_distance
        self._min_distance_exact = bool(min_distance_exact and min_distance is not None)

    # ------------------------------------------------------------------
    # syndromes and membership
    # ------------------------------------------------------------------
    def syndrome_int(self, bits: int) -> int:
        s = 0
        cols = self.syndrome_columns
        while bits:
            low = bits & -bits
            s ^= cols[low.bit_length() - 1]
            bits ^= low
        return s

    def syndrome(self, v: Word) -> Word:
        """s = H v^T as a length n-k word; zero iff v is a codeword."""
        if v.n != self.n:
            raise ValueError(f"word length {v.n} does not match code length {self.n}")
        return Word(self.syndrome_int(v.bits), self.n - self.k)

    def contains(self, v: Word) -> bool:
        return self.syndrome(v).bits == 0

    def coset_representative(self, syndrome: Word) -> Word:
        """Some word with the given syndrome (bits placed on non-pivot columns)."""
        if syndrome.n != self.n - self.k:
            raise ValueError(f"syndrome length {syndrome.n} != n-k = {self.n - self.k}")
        nonpivots = [c for c in range(self.n) if c not in set(self.pivot_columns)]
        bits = 0
        for j, c in enumerate(nonpivots):
            if (syndrome.bits >> j) & 1:
                bits |= 1 << c
        return Word(bits, self.n)

    # ------------------------------------------------------------------
    # codeword enumeration
    # ------------------------------------------------------------------
    def codeword_int(self, message: int) -> int:
        cw = 0
        rows = self.generator_rows
        while message:
            low = message & -message
            cw ^= rows[low.bit_length() - 1]
            message ^= low
        return cw

    def iter_codeword_ints(self) -> Iterator[int]:
        """All 2^k codewords, Gray-code order over message words.

        Consecutive outputs differ by exactly one generator-row XOR, so the
        stream is cheap and its order is deterministic.
        """
        cw = 0
        yield cw
        for i in range(1, 1 << self.k):
            gray_flip = (i ^ (i >> 1)) ^ ((i - 1) ^ ((i - 1) >> 1))
            cw ^= self.generator_rows[gray_flip.bit_length() - 1]
            yield cw

    def enumerate_codewords(self) -> Iterator[Word]:
        for cw in self.iter_codeword_ints():
            yield Word(cw, self.n)

    # ------------------------------------------------------------------
    # minimum distance
    # ------------------------------------------------------------------
    def min_distance(self, codeword_budget: int = DEFAULT_CODEWORD_BUDGET) -> tuple[int, Exactness]:
        """Exact minimum weight when 2^k fits the budget, else a lower bound.

        The lower bound is the stored designed distance (1 if none is known).
        """
        if self._min_distance_exact:
            return self._min_distance, "exact"  # type: ignore[return-value]
        if self.k == 0:
            return self.n + 1, "exact"  # empty code: no nonzero codeword
        if (1 << self.k) <= codeword_budget:
            d = int(min_nonzero_weight(self.generator_rows, self.n))
            self._min_distance = d
            self._min_distance_exact = True
            return d, "exact"
        bound = self._min_distance or self.designed_distance or 1
        return bound, "lower_bound"

    # ------------------------------------------------------------------
    # plain text import/export
    # ------------------------------------------------------------------
    def to_text(self) -> str:
        """Header line ``n k label`` then k generator rows as 0/1 strings."""
        lines = [f"{self.n} {self.k} {self.label}".rstrip()]
        for row in self.generator_rows:
            lines.append(str(Word(row, self.n)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> LinearCode:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty code description")
        head = lines[0].split(maxsplit=2)
        if len(head) < 2:
            raise ValueError(f"bad header line: {lines[0]!r}")
        n, k = int(head[0]), int(head[1])
        label = head[2] if len(head) > 2 else ""
        if len(lines) != k + 1:
            raise ValueError(f"expected {k} generator rows, found {len(lines) - 1}")
        rows = [Word.from_text(ln.strip(), n).bits for ln in lines[1:]]
        return cls(rows, n, label=label)

    def __repr__(self) -> str:
        d = f",{self._min_distance}" if self._min_distance_exact else ""
        name = self.label or f"[{self.n},{self.k}{d}]"
        return f"LinearCode({name})"


def from_generator_poly(
    g: BinaryPolynomial,
    n: int,
    label: str = "",
    designed_distance: int | None = None,
) -> LinearCode:
    """Cyclic [n, n - deg g] code with generator rows g(x) x^i.

    Rejects generators that do not divide x^n + 1 (such rows would not span
    a cyclic code).
    """
    if g.is_zero:
        raise ValueError("zero generator polynomial")
    x_n_1 = BinaryPolynomial.from_exponents(n, 0)
    if not (x_n_1 % g).is_zero:
        raise ValueError(f"g = {g} does not divide x^{n} + 1")
    k = n - int(g.degree)
    if k <= 0:
        raise ValueError(f"degenerate code: deg g = {int(g.degree)} leaves k = {k}")
    rows = [g.value << i for i in range(k)]
    return LinearCode(
        rows, n, label=label, generator_poly=g, designed_distance=designed_distance
    )


# ----------------------------------------------------------------------
# vectorized codeword weight helpers (numpy)
# ----------------------------------------------------------------------

def codeword_table(code: LinearCode, max_k: int = 22) -> np.ndarray:
    """All 2^k codewords as a uint64 array, message-index order."""
    if code.k > max_k:
        raise ValueError(f"k = {code.k} too large for a full codeword table (max {max_k})")
    return _doubling_table(code.generator_rows, code.k)


def _doubling_table(rows: tuple[int, ...] | list[int], k: int) -> np.ndarray:
    cw = np.zeros(1 << k, dtype=np.uint64)
    for i in range(k):
        cw[1 << i: 2 << i] = cw[: 1 << i] ^ np.uint64(rows[i])
    return cw


def min_nonzero_weight(rows: tuple[int, ...] | list[int], n: int, block_bits: int = 20) -> int:
    """Minimum weight over all nonzero GF(2) combinations of the rows.

    Enumerates the row span in blocks of 2^block_bits via the doubling
    construction, so memory stays flat for large k.
    """
    k = len(rows)
    if k == 0:
        raise ValueError("no rows to combine")
    low = min(k, block_bits)
    block = _doubling_table(rows[:low], low)
    best = n + 1
    for high in range(1 << (k - low)):
        acc = 0
        h = high
        j = low
        while h:
            if h & 1:
                acc ^= rows[j]
            h >>= 1
            j += 1
        weights = np.bitwise_count(block ^ np.uint64(acc))
        if high == 0:
            weights = weights[1:]  # skip the zero codeword
        if weights.size:
            best = min(best, int(weights.min()))
    return best
