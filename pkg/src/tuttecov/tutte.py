"""Tutte polynomials: corank-nullity expansion and deletion-contraction."""

from __future__ import annotations

import enum
from math import comb
from typing import NamedTuple

import numpy as np

from .errors import CapacityExceeded
from .matroid import Matroid, contract, delete, rank
from .pivot import MIN_INDEX, PivotStrategy
from .polynomial import ONE, TuttePolynomial

DIRECT_LIMIT = 24


class CorankNullity(NamedTuple):
    corank: int
    nullity: int


class MemoPolicy(enum.Enum):
    NONE = "none"
    EXACT = "exact"


def corank_nullity(M: Matroid, A) -> CorankNullity:
    a = M.mask(A)
    r = rank(M, a)
    return CorankNullity(M.rank - r, a.bit_count() - r)


def subset_ranks(M: Matroid) -> np.ndarray:
    """Rank of every subset, indexed by bitmask (``2**n`` entries)."""
    n = M.size
    if n > DIRECT_LIMIT:
        raise CapacityExceeded(f"subset enumeration is limited to {DIRECT_LIMIT} elements")
    size = 1 << n
    indep = np.zeros(size, dtype=bool)
    indep[M.bases.astype(np.int64)] = True
    # close downwards: a set is independent if some one-larger superset is
    for e in range(n):
        v = indep.reshape(-1, 2, 1 << e)
        v[:, 0, :] |= v[:, 1, :]
    pop = np.bitwise_count(np.arange(size, dtype=np.uint32)).astype(np.int8)
    ranks = np.where(indep, pop, 0).astype(np.int8)
    # rank(S) = largest independent subset of S
    for e in range(n):
        v = ranks.reshape(-1, 2, 1 << e)
        np.maximum(v[:, 1, :], v[:, 0, :], out=v[:, 1, :])
    return ranks


def tutte_direct(M: Matroid) -> TuttePolynomial:
    """Expand ``sum over A of (x-1)^corank(A) (y-1)^nullity(A)`` exactly."""
    n = M.size
    if n == 0:
        return ONE
    ranks = subset_ranks(M).astype(np.int64)
    pop = np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int64)
    z = M.rank - ranks
    nl = pop - ranks
    counts = np.bincount(z * (n + 1) + nl, minlength=(n + 1) ** 2)
    acc: dict[tuple[int, int], int] = {}
    for key in np.flatnonzero(counts).tolist():
        zz, nn = divmod(key, n + 1)
        cnt = int(counts[key])
        for i in range(zz + 1):
            ci = cnt * comb(zz, i) * (-1) ** (zz - i)
            for j in range(nn + 1):
                acc[(i, j)] = acc.get((i, j), 0) + ci * comb(nn, j) * (-1) ** (nn - j)
    return TuttePolynomial(acc)


def tutte_dc(
    M: Matroid,
    strategy: PivotStrategy = MIN_INDEX,
    memo: MemoPolicy = MemoPolicy.EXACT,
    table: dict | None = None,
) -> TuttePolynomial:
    """Deletion-contraction recursion ``T(M) = T(M \\ e) + T(M / e)``.

    Loops and coloops are split off first as a factor ``x^coloops y^loops``,
    so every remaining element is a legal pivot. With ``MemoPolicy.EXACT``
    results are cached on :attr:`Matroid.canonical_key`; pass ``table`` to
    share the cache between calls.
    """
    choose = strategy.chooser()
    cache = ({} if table is None else table) if memo is MemoPolicy.EXACT else None

    def rec(N: Matroid) -> TuttePolynomial:
        loops, coloops = N.loop_mask, N.coloop_mask
        factor = TuttePolynomial.monomial(coloops.bit_count(), loops.bit_count())
        if loops | coloops:
            N = delete(N, loops | coloops)
        if N.size == 0:
            return factor
        if cache is not None:
            key = N.canonical_key
            hit = cache.get(key)
            if hit is not None:
                return factor * hit
        e = 1 << choose(N, N.nondegenerate_mask)
        result = rec(delete(N, e)) + rec(contract(N, e))
        if cache is not None:
            cache[key] = result
        return factor * result

    return rec(M)
