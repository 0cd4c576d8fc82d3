"""apolar/hankel/models.py"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra.engine import determinant_of
from ..algebra.models import SparsePoly
from ..circuits.models import LinearForm
from ..minors.models import SymbolicMatrix
from ..shared.blocks import BlockVector, zeros
from ..shared.combinatorics import binom, colex_rank, colex_subsets, is_strictly_increasing
from ..shared.errors import BadDims
from ..shared.scalars import EXACT, Scalar, ScalarMode


@dataclass(frozen=True, eq=False)
class HankelArrangement:
    """Forms l_1..l_{2d-1} laid out as the d x (2d-1) matrix C_d with
    (C_d)_{ij} = l_{i+j-1} when i + j <= 2d, else 0. Its leading d x d block H_d is Hankel."""
    d: int
    forms: Tuple[LinearForm, ...]
    nvars: int
    mode: ScalarMode = EXACT
    coeff_index: Dict[int, Tuple[Tuple[int, Scalar], ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1:
            raise BadDims("arrangement size must be >= 1")
        if len(self.forms) != 2 * self.d - 1:
            raise BadDims(f"need {2 * self.d - 1} forms for d={self.d}, got {len(self.forms)}")
        index: Dict[int, List[Tuple[int, Scalar]]] = {}
        for m, form in enumerate(self.forms, start=1):
            self.mode.require_same(form.mode)
            if form.max_var > self.nvars:
                raise BadDims(f"form l_{m} uses x{form.max_var} beyond nvars={self.nvars}")
            for v, a in form.coeffs:
                index.setdefault(v, []).append((m, a))
        object.__setattr__(self, "coeff_index", {v: tuple(es) for v, es in sorted(index.items())})

    @staticmethod
    def of(forms: Sequence[LinearForm], nvars: Optional[int] = None, mode: ScalarMode = EXACT) -> "HankelArrangement":
        forms = tuple(forms)
        d = (len(forms) + 1) // 2
        n = nvars if nvars is not None else max((f.max_var for f in forms), default=1)
        return HankelArrangement(d, forms, max(n, 1), mode)

    @staticmethod
    def generic(d: int, mode: ScalarMode = EXACT) -> "HankelArrangement":
        """l_m = x_m."""
        return HankelArrangement.of([LinearForm.variable(m, mode) for m in range(1, 2 * d)], 2 * d - 1, mode)

    @property
    def columns(self) -> int:
        return 2 * self.d - 1

    def entry(self, i: int, j: int) -> LinearForm:
        if i + j <= 2 * self.d:
            return self.forms[i + j - 2]
        return LinearForm.zero(self.mode)

    def hankel_matrix(self) -> SymbolicMatrix:
        """H_d materialized as a general symbolic matrix."""
        d = self.d
        return SymbolicMatrix.of([[self.entry(i, j) for j in range(1, d + 1)] for i in range(1, d + 1)],
                                 self.nvars, self.mode)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> SparsePoly:
        """C_d[rows|cols] expanded."""
        return _arrangement_minor(self, tuple(rows), tuple(cols))

    def maximal_minor(self, beta: Sequence[int]) -> SparsePoly:
        return self.minor(tuple(range(1, len(beta) + 1)), tuple(beta))


@lru_cache(maxsize=4096)
def _arrangement_minor(H: HankelArrangement, rows: Tuple[int, ...], cols: Tuple[int, ...]) -> SparsePoly:
    if len(rows) != len(cols):
        raise BadDims("minor needs equally many rows and columns")
    if not rows:
        return SparsePoly.constant(1, H.nvars, H.mode)
    sub = [[H.entry(i, j).as_poly(H.nvars) for j in cols] for i in rows]
    return determinant_of(sub, H.nvars, H.mode)


def maximal_minor_count(d: int) -> int:
    """sum_{k=0}^{d} binom(2d-k, k), the number of maximal minors of C_d."""
    return sum(binom(2 * d - k, k) for k in range(d + 1))


def _block_length(d: int, k: int) -> int:
    return binom(2 * d - k, k)


class MaxMinorVector(BlockVector):
    """Coefficients c_beta of sum c_beta [beta]; block k is indexed by the colex rank of
    beta in I(2d-k, k). Block 0 holds the empty minor, whose value is 1."""

    @staticmethod
    def zero(d: int, mode: ScalarMode = EXACT) -> "MaxMinorVector":
        return MaxMinorVector(d, tuple(zeros(_block_length(d, k), mode) for k in range(d + 1)), mode)

    @staticmethod
    def full(d: int, mode: ScalarMode = EXACT) -> "MaxMinorVector":
        """{[1..d]: 1}, i.e. det H_d."""
        v = MaxMinorVector.zero(d, mode)
        v.blocks[d][0] = mode.one
        return v

    @staticmethod
    def from_dict(d: int, coeffs: Mapping[Sequence[int], Any], mode: ScalarMode = EXACT) -> "MaxMinorVector":
        v = MaxMinorVector.zero(d, mode)
        for beta, c in coeffs.items():
            beta = tuple(beta)
            k = len(beta)
            if k > d or not is_strictly_increasing(beta) or (beta and (beta[0] < 1 or beta[-1] > 2 * d - k)):
                raise BadDims(f"[{beta}] is not a maximal minor label for d={d}")
            v.blocks[k][colex_rank(beta)] += mode.convert(c)
        return v

    def as_dict(self) -> Dict[Tuple[int, ...], Scalar]:
        out = {}
        for k, (r,), c in self.nonzero():
            out[colex_subsets(2 * self.d - k, k)[r]] = c
        return out

    def to_poly(self, H: HankelArrangement) -> SparsePoly:
        total = SparsePoly.zero(H.nvars, self.mode)
        for beta, c in self.as_dict().items():
            total = total + H.maximal_minor(beta).scale(c)
        return total
