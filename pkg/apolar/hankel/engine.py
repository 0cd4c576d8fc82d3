"""apolar/hankel/engine.py"""
from __future__ import annotations
from typing import Dict, List, Optional

import numpy as np
from sympy import fibonacci, lucas

from .models import HankelArrangement, MaxMinorVector, maximal_minor_count
from .straighten import compiled_form_operator, straighten_row
from ..circuits.evaluation import evaluate_operator
from ..circuits.models import Circuit, LinearForm
from ..shared.blocks import accumulate, zeros
from ..shared.combinatorics import binom, colex_rank, colex_subsets, deletion_map
from ..shared.config import EngineOptions
from ..shared.errors import BadDims, DegreeMismatch, IndexOutOfRange, SizeLimit
from ..shared.scalars import EXACT, Scalar, ScalarMode
from ..shared.trace import trace


def fibonacci_bound_holds(d: int) -> bool:
    """maximal_minor_count(d) < phi^{2d}, decided in integers.

    The count is F_{2d+1} and phi^{2d} = (L_{2d} + F_{2d} sqrt 5) / 2, so the claim is
    2 * count - L_{2d} < F_{2d} sqrt 5.
    """
    if d < 0:
        raise BadDims("d must be >= 0")
    lhs = 2 * maximal_minor_count(d) - int(lucas(2 * d))
    f = int(fibonacci(2 * d))
    if lhs < 0:
        return True
    return lhs * lhs < 5 * f * f


def hankel_derivative(H: HankelArrangement, P: MaxMinorVector, l: int) -> MaxMinorVector:
    """d/dx_l of sum c_beta [beta] through b-coefficients and the straightening DP.

    d[beta]/dx_l = sum_{i,q} (-1)^{i+q} coef(x_l, l_{i+beta_q-1}) C_d[1..k without i | beta - beta_q];
    the row-omitted minors are grouped by (i, gamma) into b_k[i][gamma] and straightened
    one row at a time.
    """
    if not 1 <= l <= H.nvars:
        raise IndexOutOfRange(f"variable x{l} outside 1..{H.nvars}")
    if P.d != H.d:
        raise DegreeMismatch(f"vector of size {P.d} against a size-{H.d} arrangement")
    d, mode = H.d, H.mode
    out = [zeros(binom(2 * d - k, k), mode) for k in range(d + 1)]
    coef_of_form: Dict[int, Scalar] = dict(H.coeff_index.get(l, ()))
    if not coef_of_form:
        return MaxMinorVector(d, tuple(out), mode)

    for k in range(1, d + 1):
        src_block = P.blocks[k]
        if not any(src_block):
            continue
        N = 2 * d - k
        # --- 1) b_k[i][gamma] ---
        b = zeros((k, binom(N, k - 1)), mode)
        for c in range(1, N + 1):
            src, sgn, dst = deletion_map(N, k, c)
            if not len(src):
                continue
            vals = src_block[src] * sgn
            for i in range(1, k + 1):
                a = coef_of_form.get(i + c - 1)
                if not a:
                    continue
                row_sign = -a if i % 2 else a
                # dst is injective for fixed c
                b[i - 1, dst] += vals * row_sign
        # --- 2) straighten each row into size k-1 maximal minors ---
        labels = colex_subsets(N, k - 1)
        for i in range(1, k + 1):
            row = {labels[r]: b[i - 1, r] for r in range(b.shape[1]) if b[i - 1, r]}
            if not row:
                continue
            for seq, v in straighten_row(k - 1, k - i, row, mode.zero).items():
                out[k - 1][colex_rank(seq)] += v
    return MaxMinorVector(d, tuple(out), mode)


def apply_form_operator(P: MaxMinorVector, m: int, weight: Scalar, out: List[np.ndarray]) -> None:
    """out += weight * D_m P using the compiled operator."""
    for k, (src, dst, coef) in enumerate(compiled_form_operator(P.d, m)):
        if k == 0 or not len(src):
            continue
        accumulate(out[k - 1], dst, P.blocks[k][src] * coef * weight)


def compiled_derivative(H: HankelArrangement, P: MaxMinorVector, l: int) -> MaxMinorVector:
    """d/dx_l = sum_m coef(x_l, l_m) D_m."""
    if not 1 <= l <= H.nvars:
        raise IndexOutOfRange(f"variable x{l} outside 1..{H.nvars}")
    if P.d != H.d:
        raise DegreeMismatch(f"vector of size {P.d} against a size-{H.d} arrangement")
    d, mode = H.d, H.mode
    out = [zeros(binom(2 * d - k, k), mode) for k in range(d + 1)]
    for m, a in H.coeff_index.get(l, ()):
        apply_form_operator(P, m, a, out)
    return MaxMinorVector(d, tuple(out), mode)


class HankelSpace:
    """Diff(det H_d) inside the span of the maximal minors of C_d."""

    def __init__(self, H: HankelArrangement, compiled: bool = True):
        self.H = H
        self.compiled = compiled
        self._zero = MaxMinorVector.zero(H.d, H.mode)

    def start(self) -> MaxMinorVector:
        return MaxMinorVector.full(self.H.d, self.H.mode)

    def derivative(self, state: MaxMinorVector, var: int) -> MaxMinorVector:
        if var not in self.H.coeff_index:
            return self._zero
        if self.compiled:
            return compiled_derivative(self.H, state, var)
        return hankel_derivative(self.H, state, var)

    def scalar(self, state: MaxMinorVector) -> Scalar:
        return state.scalar


def hankeldiff_evaluate(H: HankelArrangement, C: Circuit, options: Optional[EngineOptions] = None) -> Scalar:
    """<det H_d, g> for the polynomial g computed by the skew circuit C."""
    options = options or EngineOptions()
    C.require_skew()
    H.mode.require_same(C.mode)
    if C.degree != H.d:
        raise DegreeMismatch(f"circuit has degree {C.degree}, arrangement has d={H.d}")
    if H.d > options.hankel_max_d:
        raise SizeLimit(f"hankel engine capped at d={options.hankel_max_d}, got d={H.d}")
    path = "compiled" if options.compile_operators else "dp"
    trace("hankel", f"d={H.d}, basis {maximal_minor_count(H.d)}, {C.size} gates, {path}, {H.mode.label}",
          options.verbose)
    return evaluate_operator(C, HankelSpace(H, options.compile_operators), "hankel", options.verbose)


def vandermonde_hankel(n: int, d: int, mode: ScalarMode = EXACT) -> HankelArrangement:
    """H_d = V diag(x_1..x_n) V^T with V_{ik} = k^i, i.e. l_m = sum_k k^{m+1} x_k."""
    if d < 1 or n < d:
        raise BadDims(f"need 1 <= d <= n, got n={n}, d={d}")
    forms = [LinearForm.of({k: k ** (m + 1) for k in range(1, n + 1)}, mode) for m in range(1, 2 * d)]
    return HankelArrangement(d, tuple(forms), n, mode)
