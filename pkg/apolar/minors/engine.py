"""apolar/minors/engine.py"""
from __future__ import annotations
from typing import Optional

import numpy as np

from .models import MinorVector, SymbolicMatrix, minor_basis_size
from ..circuits.evaluation import evaluate_operator
from ..circuits.models import Circuit
from ..shared.blocks import zeros
from ..shared.combinatorics import binom, deletion_map
from ..shared.config import EngineOptions
from ..shared.errors import DegreeMismatch, IndexOutOfRange, SizeLimit
from ..shared.scalars import Scalar
from ..shared.trace import trace


def minor_derivative(X: SymbolicMatrix, P: MinorVector, l: int) -> MinorVector:
    """d/dx_l of sum c_{a,b} X[a|b], again as a combination of minors.

    d X[a|b] / dx_l = sum_{i,j} (-1)^{i+j} coef(x_l, X_{a_i, b_j}) X[a - a_i | b - b_j],
    i and j being positions inside a and b.
    """
    if not 1 <= l <= X.nvars:
        raise IndexOutOfRange(f"variable x{l} outside 1..{X.nvars}")
    if P.d != X.d:
        raise DegreeMismatch(f"vector of size {P.d} against a {X.d}x{X.d} matrix")
    d, mode = X.d, X.mode
    out = [zeros((binom(d, k), binom(d, k)), mode) for k in range(d + 1)]
    for r, c, a in X.coeff_index.get(l, ()):
        for k in range(1, d + 1):
            src_r, sgn_r, dst_r = deletion_map(d, k, r)
            src_c, sgn_c, dst_c = deletion_map(d, k, c)
            block = P.blocks[k][np.ix_(src_r, src_c)]
            # targets are distinct for a fixed (r, c), so plain fancy assignment is safe
            out[k - 1][np.ix_(dst_r, dst_c)] += block * np.outer(sgn_r, sgn_c) * a
    return MinorVector(d, tuple(out), mode)


class MinorSpace:
    """Diff(det X) inside the span of all minors of X."""

    def __init__(self, X: SymbolicMatrix):
        self.X = X
        self._zero = MinorVector.zero(X.d, X.mode)

    def start(self) -> MinorVector:
        return MinorVector.full(self.X.d, self.X.mode)

    def derivative(self, state: MinorVector, var: int) -> MinorVector:
        if var > self.X.nvars:
            return self._zero
        return minor_derivative(self.X, state, var)

    def scalar(self, state: MinorVector) -> Scalar:
        return state.scalar


def gendiff_evaluate(X: SymbolicMatrix, C: Circuit, options: Optional[EngineOptions] = None) -> Scalar:
    """<det X, g> for the polynomial g computed by the skew circuit C."""
    options = options or EngineOptions()
    C.require_skew()
    X.mode.require_same(C.mode)
    if C.degree != X.d:
        raise DegreeMismatch(f"circuit has degree {C.degree}, matrix is {X.d}x{X.d}")
    if X.d > options.minor_max_d:
        raise SizeLimit(f"minor engine capped at d={options.minor_max_d}, got d={X.d}")
    trace("minors", f"d={X.d}, basis {minor_basis_size(X.d)}, {C.size} gates, {X.mode.label}", options.verbose)
    return evaluate_operator(C, MinorSpace(X), "minors", options.verbose)
