# apolar/lab/convolution.py
"""
Subset convolution (s * t)(S) = sum_{U in S} s(U) t(S - U), which is multiplication in the
apolar algebra of x_1 ... x_n over the square-free basis. Functions on 2^[n] are arrays of
length 2^n indexed by bitmask (bit i-1 set iff i in S).
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

import numpy as np

from .engine import apolar_monomial_basis
from ..algebra.models import Monomial, SparsePoly
from ..shared.combinatorics import subset_from_mask
from ..shared.errors import LengthMismatch
from ..shared.scalars import EXACT, Scalar, ScalarMode


@dataclass
class ConvolutionStats:
    """Counts of ring operations on non-constant data during one fast convolution."""
    multiplications: int = 0
    additions: int = 0

    def bound(self, n: int) -> int:
        return (n + 1) ** 2 * 2 ** n


def _prepare(sigma: Sequence[Any], tau: Sequence[Any], mode: ScalarMode):
    if len(sigma) != len(tau):
        raise LengthMismatch(f"inputs have lengths {len(sigma)} and {len(tau)}")
    size = len(sigma)
    if size < 1 or size & (size - 1):
        raise LengthMismatch(f"length {size} is not a power of two")
    n = size.bit_length() - 1
    return n, mode.convert_all(sigma), mode.convert_all(tau)


def subset_convolution_naive(sigma: Sequence[Any], tau: Sequence[Any], mode: ScalarMode = EXACT) -> List[Scalar]:
    """Direct sum over submasks; 3^n products."""
    n, s, t = _prepare(sigma, tau, mode)
    out = []
    for S in range(1 << n):
        acc = mode.zero
        U = S
        while True:
            acc += s[U] * t[S ^ U]
            if U == 0:
                break
            U = (U - 1) & S
        out.append(acc)
    return out


def _popcounts(n: int) -> np.ndarray:
    return np.array([bin(m).count("1") for m in range(1 << n)], dtype=np.int64)


def _ranked(values: Sequence[Scalar], pop: np.ndarray, n: int, zero: Scalar) -> np.ndarray:
    """hat[r][S] = values[S] if |S| = r else 0."""
    hat = np.full((n + 1, 1 << n), zero, dtype=object)
    for r in range(n + 1):
        mask = pop == r
        hat[r, mask] = np.array(values, dtype=object)[mask]
    return hat


def _zeta(hat: np.ndarray, n: int, sign: int, stats: ConvolutionStats) -> None:
    """In place: sum (sign=+1) or Moebius inversion (sign=-1) over subsets, bit by bit."""
    rows = hat.shape[0]
    for i in range(n):
        view = hat.reshape(rows, 1 << (n - i - 1), 2, 1 << i)
        if sign > 0:
            view[:, :, 1, :] += view[:, :, 0, :]
        else:
            view[:, :, 1, :] -= view[:, :, 0, :]
        stats.additions += rows << (n - 1)


def subset_convolution_fast(sigma: Sequence[Any], tau: Sequence[Any], mode: ScalarMode = EXACT,
                            stats: Optional[ConvolutionStats] = None) -> List[Scalar]:
    """Ranked zeta transform, rank-wise pointwise products, ranked Moebius inversion."""
    stats = stats if stats is not None else ConvolutionStats()
    n, s, t = _prepare(sigma, tau, mode)
    pop = _popcounts(n)
    fs = _ranked(s, pop, n, mode.zero)
    ft = _ranked(t, pop, n, mode.zero)
    _zeta(fs, n, +1, stats)
    _zeta(ft, n, +1, stats)
    h = np.full((n + 1, 1 << n), mode.zero, dtype=object)
    for r in range(n + 1):
        for j in range(r + 1):
            h[r] += fs[j] * ft[r - j]
            stats.multiplications += 1 << n
    _zeta(h, n, -1, stats)
    return [h[pop[S], S] for S in range(1 << n)]


def subset_convolution_algebra(sigma: Sequence[Any], tau: Sequence[Any], mode: ScalarMode = EXACT) -> List[Scalar]:
    """Multiply sum s(S) d_S by sum t(S) d_S in A_{x_1...x_n} and read off the coefficients."""
    n, s, t = _prepare(sigma, tau, mode)
    f = SparsePoly({Monomial.product_of(range(1, n + 1)): mode.one}, n, mode)
    A = apolar_monomial_basis(f)
    slot = [A.index[Monomial.product_of(subset_from_mask(S))] for S in range(1 << n)]
    u, v = A.zero_vector(), A.zero_vector()
    for S in range(1 << n):
        u[slot[S]] = s[S]
        v[slot[S]] = t[S]
    w = A.multiply(u, v)
    return [w[slot[S]] for S in range(1 << n)]
