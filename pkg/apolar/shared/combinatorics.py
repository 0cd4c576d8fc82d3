# apolar/shared/combinatorics.py
"""
Colex ranking of strictly increasing sequences, deletion maps used by the minor and
maximal-minor engines, and the sign of merging two sorted index sets.

Sequences are 1-based tuples. Colex order has the property that the subsets of [N] of
size k occupy exactly ranks 0 .. binom(N, k) - 1 for every N, so one ranking serves all
universes.
"""
from __future__ import annotations
from functools import lru_cache
from itertools import combinations
from typing import Dict, Sequence, Tuple

import numpy as np
from scipy.special import comb


@lru_cache(maxsize=None)
def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def colex_rank(seq: Sequence[int]) -> int:
    return sum(binom(v - 1, i) for i, v in enumerate(seq, start=1))


def colex_unrank(rank: int, k: int) -> Tuple[int, ...]:
    out = []
    for i in range(k, 0, -1):
        v = i - 1
        while binom(v + 1, i) <= rank:
            v += 1
        out.append(v + 1)
        rank -= binom(v, i)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def colex_subsets(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """All size-k subsets of [n] in colex order; position == colex_rank."""
    return tuple(sorted(combinations(range(1, n + 1), k), key=lambda s: s[::-1]))


@lru_cache(maxsize=None)
def colex_index(n: int, k: int) -> Dict[Tuple[int, ...], int]:
    return {s: r for r, s in enumerate(colex_subsets(n, k))}


def is_strictly_increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


@lru_cache(maxsize=None)
def deletion_map(n: int, k: int, element: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For size-k subsets of [n] containing `element`: (source ranks, signs, target ranks).

    The target is the rank of the subset with `element` removed (size k-1); the sign is
    (-1)^p for the 1-based position p of `element`. Targets are pairwise distinct.
    """
    src, sgn, dst = [], [], []
    for r, s in enumerate(colex_subsets(n, k)):
        if element in s:
            p = s.index(element) + 1
            rest = s[:p - 1] + s[p:]
            src.append(r)
            sgn.append(-1 if p % 2 else 1)
            dst.append(colex_rank(rest))
    return (np.array(src, dtype=np.int64),
            np.array(sgn, dtype=object),
            np.array(dst, dtype=np.int64))


def merge_sign(first: Sequence[int], second: Sequence[int]) -> int:
    """Sign of the permutation sorting the concatenation first + second (both sorted)."""
    inversions = sum(1 for a in first for b in second if a > b)
    return -1 if inversions % 2 else 1


def subset_from_mask(mask: int) -> Tuple[int, ...]:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_from_subset(subset: Sequence[int]) -> int:
    m = 0
    for v in subset:
        m |= 1 << (v - 1)
    return m
