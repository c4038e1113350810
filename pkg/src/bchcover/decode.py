"""List decoding and maximum-likelihood decoding by error-pattern search.

Both decoders work on the syndrome side: a codeword within distance tau of
v is v + e for an error pattern e of weight <= tau in the same coset, so it
suffices to find the low-weight patterns whose syndrome matches v's. The
generator matrix is never consulted, which keeps these routines independent
of brute-force codeword enumeration (the usual cross-check oracle).

Two interchangeable strategies produce identical results:

  scan   -- enumerate patterns of weight 0..tau in revolving-door order,
            carrying the syndrome along with two column XORs per step.
            Cost sum_w C(n, w), independent of k; right for small tau.
  split  -- meet in the middle: precompute the syndromes of all patterns on
            the left and right halves of the coordinates, sort the right
            half, then join. A query costs about 2^(n/2) plus the matches,
            which makes thousands of queries on one code cheap. The index
            is built lazily and cached on the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .linear_code import LinearCode, Word
from .radius import revolving_door

_SCAN_LIMIT = 8192      # max pattern count before "auto" switches to split
_SPLIT_MAX_N = 40       # half-tables of at most 2^20 entries
_SPLIT_ML_MAX_K = 22    # ml via split materializes the whole coset (2^k)


@dataclass(frozen=True)
class DecodeResult:
    """Decoded codewords with their distances, nearest first.

    Entries are sorted by (distance, codeword text) and contain no
    duplicates; ``exhausted`` is True iff every pattern up to
    ``radius_used`` was considered.
    """

    entries: tuple[tuple[Word, int], ...]
    radius_used: int
    exhausted: bool

    @property
    def codewords(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self.entries)

    @property
    def distances(self) -> tuple[int, ...]:
        return tuple(dist for _, dist in self.entries)


def _check_word(code: LinearCode, v: Word) -> None:
    if v.n != code.n:
        raise ValueError(f"word length {v.n} does not match code length {code.n}")


def _result(code: LinearCode, v_bits: int, masks: list[int], radius_used: int) -> DecodeResult:
    entries = []
    for mask in masks:
        cw = Word(v_bits ^ mask, code.n)
        entries.append((cw, mask.bit_count()))
    entries.sort(key=lambda e: (e[1], str(e[0])))
    return DecodeResult(entries=tuple(entries), radius_used=radius_used, exhausted=True)


# ----------------------------------------------------------------------
# scan strategy
# ----------------------------------------------------------------------

def _scan_matches(code: LinearCode, target: int, tau: int, stop_at_first_weight: bool) -> list[int]:
    cols = code.syndrome_columns
    matches: list[int] = []
    for w in range(min(tau, code.n) + 1):
        found = False
        prev = None
        s = 0
        for mask in revolving_door(code.n, w):
            if prev is None:
                s = code.syndrome_int(mask)
            else:
                diff = mask ^ prev
                low = diff & -diff
                s ^= cols[low.bit_length() - 1] ^ cols[(diff ^ low).bit_length() - 1]
            prev = mask
            if s == target:
                matches.append(mask)
                found = True
        if found and stop_at_first_weight:
            break
    return matches


# ----------------------------------------------------------------------
# split (meet-in-the-middle) strategy
# ----------------------------------------------------------------------

class _SplitIndex:
    """Syndromes of all patterns on each half of the coordinates.

    The right half is sorted by syndrome; a query XORs the target into
    every left syndrome and joins against the sorted right side.
    """

    def __init__(self, code: LinearCode):
        n = code.n
        self.nl = n // 2
        nr = n - self.nl
        cols = code.syndrome_columns
        self.left_synd = self._doubling(cols[: self.nl], self.nl)
        self.left_weight = np.bitwise_count(np.arange(1 << self.nl, dtype=np.uint64))
        # left masks ordered by weight, with prefix counts, so a query can
        # slice exactly the masks of weight <= tau without filtering
        self.left_by_weight = np.argsort(self.left_weight, kind="stable")
        self.left_weight_prefix = np.cumsum(np.bincount(self.left_weight, minlength=self.nl + 1))
        right_synd = self._doubling(cols[self.nl:], nr)
        self.right_order = np.argsort(right_synd, kind="stable").astype(np.int64)
        self.right_sorted = right_synd[self.right_order]
        self.right_weight = np.bitwise_count(self.right_order.view(np.uint64))

    @staticmethod
    def _doubling(cols: tuple[int, ...], bits: int) -> np.ndarray:
        synd = np.zeros(1 << bits, dtype=np.uint64)
        for i in range(bits):
            synd[1 << i: 2 << i] = synd[: 1 << i] ^ np.uint64(cols[i])
        return synd

    def matches(self, target: int, tau: int | None) -> tuple[np.ndarray, np.ndarray]:
        """Error patterns (uint64 masks) and weights for one syndrome.

        ``tau=None`` returns the whole coset.
        """
        if tau is None:
            pool = self.left_by_weight
        else:
            pool = self.left_by_weight[: self.left_weight_prefix[min(tau, self.nl)]]
        need = self.left_synd[pool] ^ np.uint64(target)
        lo = np.searchsorted(self.right_sorted, need, side="left")
        hi = np.searchsorted(self.right_sorted, need, side="right")
        sel = np.flatnonzero(hi > lo)
        left = pool[sel]
        lens = (hi - lo)[sel]
        starts = lo[sel]
        total = int(lens.sum())
        if total == 0:
            return np.empty(0, dtype=np.uint64), np.empty(0, dtype=np.uint64)
        base = np.cumsum(lens) - lens
        pos = np.repeat(starts - base, lens) + np.arange(total)
        right_masks = self.right_order[pos]
        weights = self.left_weight[np.repeat(left, lens)] + self.right_weight[pos]
        masks = np.repeat(left, lens).astype(np.uint64) | (right_masks.astype(np.uint64) << np.uint64(self.nl))
        if tau is not None:
            keep = weights <= tau
            masks, weights = masks[keep], weights[keep]
        return masks, weights


def _split_index(code: LinearCode) -> _SplitIndex:
    index = getattr(code, "_split_index", None)
    if index is None:
        index = _SplitIndex(code)
        code._split_index = index  # type: ignore[attr-defined]
    return index


def _scan_cost(n: int, tau: int) -> int:
    return sum(comb(n, w) for w in range(min(tau, n) + 1))


def _pick_strategy(code: LinearCode, tau: int, strategy: str) -> str:
    if strategy not in ("auto", "scan", "split"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy != "auto":
        if strategy == "split" and code.n > _SPLIT_MAX_N:
            raise ValueError(f"split index too large for n = {code.n} (max {_SPLIT_MAX_N})")
        return strategy
    if _scan_cost(code.n, tau) <= _SCAN_LIMIT or code.n > _SPLIT_MAX_N:
        return "scan"
    return "split"


# ----------------------------------------------------------------------
# public decoders
# ----------------------------------------------------------------------

def list_decode(code: LinearCode, v: Word, tau: int, strategy: str = "auto") -> DecodeResult:
    """All codewords within distance tau of v, exhaustively."""
    _check_word(code, v)
    if not 0 <= tau <= code.n:
        raise ValueError(f"need 0 <= tau <= n, got tau={tau}")
    target = code.syndrome_int(v.bits)
    if _pick_strategy(code, tau, strategy) == "scan":
        masks = _scan_matches(code, target, tau, stop_at_first_weight=False)
    else:
        found, _ = _split_index(code).matches(target, tau)
        masks = [int(m) for m in found]
    return _result(code, v.bits, masks, tau)


def ml_decode(
    code: LinearCode,
    v: Word,
    weight_cap: int | None = None,
    strategy: str = "auto",
) -> DecodeResult:
    """All codewords at minimum distance from v (maximum likelihood).

    Searches strata of increasing weight and stops at the first hit; the
    stop weight never exceeds the covering radius, so the default cap
    (covering radius if known, else n) always terminates with a result.
    """
    _check_word(code, v)
    if weight_cap is not None:
        cap = weight_cap
    elif code.covering_radius is not None:
        cap = code.covering_radius
    else:
        cap = code.n
    target = code.syndrome_int(v.bits)
    if strategy == "auto":
        strategy = "split" if (
            code.n <= _SPLIT_MAX_N
            and code.k <= _SPLIT_ML_MAX_K
            and _scan_cost(code.n, cap) > _SCAN_LIMIT
        ) else "scan"
    if strategy == "scan":
        masks = _scan_matches(code, target, cap, stop_at_first_weight=True)
        radius_used = masks[0].bit_count() if masks else cap
        return _result(code, v.bits, masks, radius_used)
    if strategy != "split":
        raise ValueError(f"unknown strategy {strategy!r}")
    found, weights = _split_index(code).matches(target, None)
    if found.size == 0:
        raise AssertionError("coset empty: parity-check matrix not full rank?")
    best = int(weights.min())
    if best > cap:
        return DecodeResult(entries=(), radius_used=cap, exhausted=True)
    masks = [int(m) for m in found[weights == best]]
    return _result(code, v.bits, masks, best)


def bounded_decode(code: LinearCode, v: Word, strategy: str = "auto") -> DecodeResult:
    """Unique decoding within the packing radius t = floor((d-1)/2).

    Returns zero or one entries; needs the exact minimum distance.
    """
    d, exactness = code.min_distance()
    if exactness != "exact":
        raise ValueError("bounded decoding needs the exact minimum distance")
    return list_decode(code, v, (d - 1) // 2, strategy=strategy)
