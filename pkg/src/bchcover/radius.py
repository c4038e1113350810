"""Exact covering radius by weight-stratified search over syndrome space.

The coset leader weight of a syndrome s is the smallest number of
parity-check columns that XOR to s. The engine grows the set of reached
syndromes one weight stratum at a time: stratum w+1 is everything newly
reachable from stratum w by one more column. Every syndrome is therefore
marked with its first-seen weight, strata complete in order, and the result
is independent of the order of work inside a stratum. The covering radius
is the last non-empty stratum.

Costs scale with n * 2^(n-k) rather than with the number of weight-w words,
which is what makes the big searches ([31,6]: 2^25 syndromes, [63,36]: 2^27)
run in seconds to minutes. Within a stratum the frontier may be split across
worker threads: marking is idempotent (every discovery in a stratum has the
same weight) and the next frontier is rebuilt from a full table scan after
the stratum barrier, so results are bit-identical for any worker count.

A checkpoint file, if requested, is rewritten after each completed stratum
and holds the full first-seen table, so multi-hour runs can resume.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .linear_code import LinearCode, Word, codeword_table

_UNSEEN = 255
_CHUNK = 1 << 22
_ORACLE_GUARD_N = 16
_ORACLE_GUARD_NK = 30


@dataclass(frozen=True)
class RadiusResult:
    """Outcome of a completed covering radius search.

    ``coset_count_by_weight[w]`` is the number of syndromes whose coset
    leader weight is exactly w; the counts sum to 2^(n-k) and the last
    entry is at index R.
    """

    covering_radius: int
    coset_count_by_weight: tuple[int, ...]
    deepest_syndrome: Word


class WeightCapExceeded(RuntimeError):
    """Raised when the search hits the weight cap before covering every coset."""

    def __init__(self, weight_cap: int, counts: tuple[int, ...], total: int):
        self.weight_cap = weight_cap
        self.counts_so_far = counts
        self.syndromes_seen = sum(counts)
        self.syndrome_total = total
        super().__init__(
            f"R > {weight_cap}: only {self.syndromes_seen} of {total} syndromes "
            f"covered at weight {weight_cap}"
        )


def _expand(table: np.ndarray, frontier: np.ndarray, cols: np.ndarray, new_weight: int) -> None:
    for start in range(0, len(frontier), _CHUNK):
        chunk = frontier[start: start + _CHUNK]
        for c in cols:
            cand = chunk ^ c
            fresh = cand[table[cand] == _UNSEEN]
            table[fresh] = new_weight


def _code_key(code: LinearCode) -> str:
    h = hashlib.sha256()
    h.update(f"{code.n},{code.k}".encode())
    for c in code.syndrome_columns:
        h.update(c.to_bytes(8, "little"))
    return h.hexdigest()


def _save_checkpoint(path: str, code: LinearCode, table: np.ndarray, counts: list[int], w: int) -> None:
    tmp = path + ".tmp.npz"  # .npz suffix keeps numpy from renaming the temp file
    np.savez_compressed(
        tmp,
        table=table,
        counts=np.asarray(counts, dtype=np.int64),
        weight=np.int64(w),
        code_key=np.bytes_(_code_key(code).encode()),
        digest=np.bytes_(hashlib.sha256(table.tobytes()).hexdigest().encode()),
    )
    os.replace(tmp, path)


def _load_checkpoint(path: str, code: LinearCode) -> tuple[np.ndarray, list[int], int] | None:
    if not os.path.exists(path):
        return None
    with np.load(path) as data:
        if bytes(data["code_key"]).decode() != _code_key(code):
            raise ValueError(f"checkpoint {path} belongs to a different code")
        table = data["table"]
        if hashlib.sha256(table.tobytes()).hexdigest() != bytes(data["digest"]).decode():
            raise ValueError(f"checkpoint {path} is corrupt (digest mismatch)")
        return table, [int(c) for c in data["counts"]], int(data["weight"])


def covering_radius(
    code: LinearCode,
    weight_cap: int | None = None,
    jobs: int = 1,
    checkpoint_path: str | None = None,
) -> RadiusResult:
    """Exact covering radius of the code (first-seen weight per syndrome).

    Stops with WeightCapExceeded if strata up to ``weight_cap`` do not cover
    all 2^(n-k) syndromes (the default cap n can never trigger). On success
    the result is cached on ``code.covering_radius``.
    """
    nk = code.n - code.k
    if nk > 32:
        raise ValueError(f"syndrome space 2^{nk} not addressable (need n - k <= 32)")
    if weight_cap is None:
        weight_cap = code.n
    total = 1 << nk

    resumed = _load_checkpoint(checkpoint_path, code) if checkpoint_path else None
    if resumed is not None:
        table, counts, w = resumed
    else:
        table = np.full(total, _UNSEEN, dtype=np.uint8)
        table[0] = 0
        counts = [1]
        w = 0

    cols = np.array(code.syndrome_columns, dtype=np.uint32)
    frontier = np.flatnonzero(table == w).astype(np.uint32)
    seen = sum(counts)
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while seen < total:
            if w >= weight_cap:
                raise WeightCapExceeded(weight_cap, tuple(counts), total)
            if pool is not None and len(frontier) >= (1 << 16):
                parts = np.array_split(frontier, jobs * 4)
                list(pool.map(lambda part: _expand(table, part, cols, w + 1), parts))
            else:
                _expand(table, frontier, cols, w + 1)
            w += 1
            frontier = np.flatnonzero(table == w).astype(np.uint32)
            if len(frontier) == 0:
                raise AssertionError("stratum empty before full coverage (H not full rank?)")
            counts.append(len(frontier))
            seen += len(frontier)
            if checkpoint_path:
                _save_checkpoint(checkpoint_path, code, table, counts, w)
    finally:
        if pool is not None:
            pool.shutdown()

    result = RadiusResult(
        covering_radius=w,
        coset_count_by_weight=tuple(counts),
        deepest_syndrome=Word(int(frontier[0]) if w > 0 else 0, nk),
    )
    code.covering_radius = w
    return result


def covering_radius_oracle(code: LinearCode) -> int:
    """Definitional covering radius: max over ambient words of the distance
    to the nearest codeword, by double enumeration. Guarded to small codes."""
    if code.n > _ORACLE_GUARD_N or code.n + code.k > _ORACLE_GUARD_NK:
        raise ValueError(
            f"oracle needs n <= {_ORACLE_GUARD_N} and n + k <= {_ORACLE_GUARD_NK}; "
            f"got n={code.n}, k={code.k}"
        )
    cw = codeword_table(code, max_k=code.k)
    radius = 0
    chunk = max(1, 1 << max(0, 24 - code.k))
    for start in range(0, 1 << code.n, chunk):
        block = np.arange(start, min(start + chunk, 1 << code.n), dtype=np.uint64)
        dmin = np.bitwise_count(block[:, None] ^ cw[None, :]).min(axis=1)
        radius = max(radius, int(dmin.max()))
    return radius


def is_perfect(code: LinearCode) -> bool:
    """R == floor((d-1)/2); needs exact distance and a known covering radius."""
    d, exactness = code.min_distance()
    if exactness != "exact" or code.covering_radius is None:
        raise ValueError("insufficient data: need exact d and a computed covering radius")
    return code.covering_radius == (d - 1) // 2


# ----------------------------------------------------------------------
# revolving-door enumeration of fixed-weight words
# ----------------------------------------------------------------------

def revolving_door(n: int, w: int) -> Iterator[int]:
    """Weight-w masks over n bits in minimal-change order.

    Consecutive masks differ by exactly one removed and one added bit, so a
    syndrome can be carried along with two column XORs per step. Starts at
    {0..w-1}, ends at {0..w-2, n-1}.
    """
    if w < 0 or w > n:
        return
    yield from _revolving(n, w, False)


def _revolving(n: int, w: int, rev: bool) -> Iterator[int]:
    if w == 0:
        yield 0
        return
    if w == n:
        yield (1 << n) - 1
        return
    top = 1 << (n - 1)
    if not rev:
        yield from _revolving(n - 1, w, False)
        for m in _revolving(n - 1, w - 1, True):
            yield m | top
    else:
        for m in _revolving(n - 1, w - 1, False):
            yield m | top
        yield from _revolving(n - 1, w, True)
