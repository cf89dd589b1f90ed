"""
Exact rank of integer matrices.

Fraction-free (Bareiss) elimination runs on numpy object arrays so every entry
stays an arbitrary-precision Python int; each update divides exactly by the
previous pivot. Large matrices fall back to elimination modulo primes, which
can only under-count the rank over Q.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

# Both prime, between 2**30 and 2**31 so products of residues fit in int64.
RANK_PRIMES = (2_147_483_647, 2_147_483_629)


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str
    modular_ranks: Tuple[int, ...] = ()


def _as_object_matrix(matrix: Sequence[Sequence[int]]) -> np.ndarray:
    m = np.empty((len(matrix), len(matrix[0]) if len(matrix) else 0), dtype=object)
    for i, row in enumerate(matrix):
        m[i, :] = [int(x) for x in row]
    return m


def _strip_zero_lines(m: np.ndarray) -> np.ndarray:
    """Drop all-zero rows and columns; the rank is unchanged."""
    if m.size == 0:
        return m
    nonzero = m != 0
    keep_rows = np.flatnonzero(np.asarray(nonzero.any(axis=1), dtype=bool))
    keep_cols = np.flatnonzero(np.asarray(nonzero.any(axis=0), dtype=bool))
    return m[np.ix_(keep_rows, keep_cols)]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """
    Rank over Q by fraction-free Gaussian elimination.

    Only rows with a nonzero entry in the pivot column are eliminated. A row
    skipped at some steps is stale by the product of their scale factors,
    which telescopes to a ratio of two recorded pivots; it is brought up to
    date when it is next used.

    Args:
        matrix: Rectangular integer matrix (nested sequences).

    Returns:
        int: Exact rank.
    """
    m = _strip_zero_lines(_as_object_matrix(matrix))
    if m.size == 0:
        return 0
    rows, cols = m.shape
    # pivots[s] is the pivot of step s - 1; stamp[r] counts steps applied to row r
    pivots = [1]
    stamp = np.zeros(rows, dtype=np.int64)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = rank + np.flatnonzero(m[rank:, col])
        if nonzero.size == 0:
            continue
        for r in nonzero[stamp[nonzero] < rank]:
            m[r, col:] = m[r, col:] * pivots[rank] // pivots[stamp[r]]
            stamp[r] = rank
        pivot_row = int(nonzero[0])
        if pivot_row != rank:
            m[[rank, pivot_row]] = m[[pivot_row, rank]]
            stamp[[rank, pivot_row]] = stamp[[pivot_row, rank]]
        pivot = m[rank, col]
        hits = nonzero[1:]
        if hits.size:
            cross = np.outer(m[hits, col], m[rank, col + 1:])
            m[hits, col + 1:] = (pivot * m[hits, col + 1:] - cross) // pivots[rank]
            m[hits, col] = 0
            stamp[hits] = rank + 1
        pivots.append(pivot)
        rank += 1
    return rank


def modular_rank(matrix: Sequence[Sequence[int]], prime: int) -> int:
    """Rank over GF(prime); never larger than the rank over Q."""
    m = np.array(matrix, dtype=np.int64) % prime
    if m.size == 0:
        return 0
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.flatnonzero(m[rank:, col])
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            m[[rank, pivot_row]] = m[[pivot_row, rank]]
        inverse = pow(int(m[rank, col]), -1, prime)
        m[rank] = (m[rank] * inverse) % prime
        factors = m[rank + 1:, col]
        hit = np.flatnonzero(factors)
        if hit.size:
            targets = rank + 1 + hit
            update = (factors[hit, None] * m[rank][None, :]) % prime
            m[targets] = (m[targets] - update) % prime
        rank += 1
    return rank


def exact_rank(matrix: Sequence[Sequence[int]], max_exact_order: int) -> RankResult:
    """
    Bareiss up to max_exact_order rows, else the larger of two modular ranks.

    The modular answer is a lower bound; callers certify it against an
    independent count.
    """
    order = len(matrix)
    if order <= max_exact_order:
        return RankResult(rank=bareiss_rank(matrix), method="bareiss")
    ranks = tuple(modular_rank(matrix, p) for p in RANK_PRIMES)
    return RankResult(rank=max(ranks), method="modular", modular_ranks=ranks)
