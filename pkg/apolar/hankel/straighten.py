# apolar/hankel/straighten.py
"""
Row-omitted minors of C_d rewritten as maximal minors.

C_d's shifted rows satisfy a column-shift identity, so for 1 <= i <= k <= d and
beta in I(2d-k, k-1):

    C_d[1..k without i | beta] = sum over J in [k-1], |J| = k-i, of [beta + e(J)]

where e(J) is the 0/1 indicator of J and terms whose label stops being strictly
increasing vanish. Two evaluators live here: a DP over positions that straightens a whole
row of b-coefficients at once, and a per-label enumeration that is memoized and compiled
into sparse operators D_m (the derivative of the arrangement along its form l_m).
"""
from __future__ import annotations
from functools import lru_cache
from itertools import combinations
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from .models import MaxMinorVector
from ..shared.combinatorics import binom, colex_rank, colex_subsets, is_strictly_increasing
from ..shared.errors import IndexOutOfRange
from ..shared.scalars import EXACT, Scalar, ScalarMode

Label = Tuple[int, ...]


def straighten_row(width: int, ones: int, row: Mapping[Label, Scalar], zero: Scalar) -> Dict[Label, Scalar]:
    """sum_beta row[beta] * sum_{|J| = ones} [beta + e(J)] over J in [width], straightened.

    layer[i] holds A(i, j): the partial sum with i ones placed among positions 1..j. A
    carrier may repeat a value only at (j, j+1); a zero at j+1 makes that final, so it is
    dropped there, while a one at j+1 lifts position j+1 and clears it.
    """
    if ones < 0 or ones > width:
        return {}
    layer = [dict(row)] + [{} for _ in range(ones)]
    for j in range(1, width + 1):
        nxt = []
        for i in range(ones + 1):
            acc: Dict[Label, Scalar] = {}
            if i <= j:
                if i <= j - 1:
                    for seq, c in layer[i].items():
                        if j == 1 or seq[j - 2] < seq[j - 1]:
                            acc[seq] = acc.get(seq, zero) + c
                if i >= 1:
                    for seq, c in layer[i - 1].items():
                        lifted = seq[:j - 1] + (seq[j - 1] + 1,) + seq[j:]
                        acc[lifted] = acc.get(lifted, zero) + c
            nxt.append(acc)
        layer = nxt
    return {seq: c for seq, c in layer[ones].items() if c and is_strictly_increasing(seq)}


def _check_row_omitted(d: int, i: int, k: int, beta: Sequence[int]) -> Label:
    beta = tuple(beta)
    if not (1 <= k <= d and 1 <= i <= k):
        raise IndexOutOfRange(f"need 1 <= i <= k <= d, got i={i}, k={k}, d={d}")
    if len(beta) != k - 1 or not is_strictly_increasing(beta) or (beta and (beta[0] < 1 or beta[-1] > 2 * d - k)):
        raise IndexOutOfRange(f"{beta} is not a size-{k - 1} label inside [1..{2 * d - k}]")
    return beta


def straighten_row_omitted(d: int, i: int, k: int, beta: Sequence[int], mode: ScalarMode = EXACT) -> MaxMinorVector:
    """C_d[[1..k] without i | beta] as a MaxMinorVector supported on size k-1."""
    beta = _check_row_omitted(d, i, k, beta)
    out = MaxMinorVector.zero(d, mode)
    for seq, c in straighten_row(k - 1, k - i, {beta: mode.one}, mode.zero).items():
        out.blocks[k - 1][colex_rank(seq)] += c
    return out


@lru_cache(maxsize=None)
def straightening_terms(d: int, i: int, k: int, beta: Label) -> Tuple[Tuple[int, int], ...]:
    """(colex rank, integer coefficient) pairs of the straightened row-omitted minor, by enumeration."""
    beta = _check_row_omitted(d, i, k, beta)
    width = k - 1
    terms: Dict[int, int] = {}
    for J in combinations(range(width), k - i):
        lifted = list(beta)
        for p in J:
            lifted[p] += 1
        if is_strictly_increasing(lifted):
            r = colex_rank(lifted)
            terms[r] = terms.get(r, 0) + 1
    return tuple(sorted((r, c) for r, c in terms.items() if c))


# --- compiled operators ---
CompiledBlock = Tuple[np.ndarray, np.ndarray, np.ndarray]  # (source ranks, target ranks, coefficients)


@lru_cache(maxsize=None)
def compiled_form_operator(d: int, m: int) -> Tuple[CompiledBlock, ...]:
    """D_m: the derivative of sum c_beta [beta] along l_m with unit coefficient.

    Entry k maps size-k coefficients to size-(k-1) ones. Column c of [beta] meets l_m in
    row i = m - c + 1.
    """
    if not 1 <= m <= 2 * d - 1:
        raise IndexOutOfRange(f"form index {m} outside 1..{2 * d - 1}")
    blocks = [(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64), np.zeros(0, dtype=object))]
    for k in range(1, d + 1):
        acc: Dict[Tuple[int, int], int] = {}
        for s, beta in enumerate(colex_subsets(2 * d - k, k)):
            for q, c in enumerate(beta, start=1):
                i = m - c + 1
                if not 1 <= i <= k:
                    continue
                sign = -1 if (i + q) % 2 else 1
                gamma = beta[:q - 1] + beta[q:]
                for t, coef in straightening_terms(d, i, k, gamma):
                    acc[(s, t)] = acc.get((s, t), 0) + sign * coef
        pairs = [(s, t, c) for (s, t), c in sorted(acc.items()) if c]
        blocks.append((np.array([p[0] for p in pairs], dtype=np.int64),
                       np.array([p[1] for p in pairs], dtype=np.int64),
                       np.array([p[2] for p in pairs], dtype=object)))
    return tuple(blocks)


def compiled_size(d: int) -> int:
    """Total number of stored operator entries over all D_m (diagnostics)."""
    return sum(len(src) for m in range(1, 2 * d) for src, _, _ in compiled_form_operator(d, m))


def block_lengths(d: int) -> Tuple[int, ...]:
    return tuple(binom(2 * d - k, k) for k in range(d + 1))
