"""apolar/minors/models.py"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..algebra.engine import determinant_of
from ..algebra.models import SparsePoly
from ..circuits.models import LinearForm
from ..shared.blocks import BlockVector, zeros
from ..shared.combinatorics import binom, colex_rank, colex_subsets
from ..shared.errors import BadDims
from ..shared.scalars import EXACT, Scalar, ScalarMode

Entry = Tuple[int, int, Scalar]  # (row, col, coefficient), 1-based


@dataclass(frozen=True, eq=False)
class SymbolicMatrix:
    """d x d matrix of linear forms X = (l_ij) over variables x_1..x_nvars."""
    d: int
    entries: Tuple[Tuple[LinearForm, ...], ...]
    nvars: int
    mode: ScalarMode = EXACT
    coeff_index: Dict[int, Tuple[Entry, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1 or len(self.entries) != self.d or any(len(r) != self.d for r in self.entries):
            raise BadDims(f"entries must form a {self.d}x{self.d} matrix")
        index: Dict[int, List[Entry]] = {}
        for i, row in enumerate(self.entries, start=1):
            for j, form in enumerate(row, start=1):
                self.mode.require_same(form.mode)
                if form.max_var > self.nvars:
                    raise BadDims(f"entry ({i},{j}) uses x{form.max_var} beyond nvars={self.nvars}")
                for v, a in form.coeffs:
                    index.setdefault(v, []).append((i, j, a))
        object.__setattr__(self, "coeff_index", {v: tuple(es) for v, es in sorted(index.items())})

    # --- constructors ---
    @staticmethod
    def of(entries: Sequence[Sequence[LinearForm]], nvars: Optional[int] = None,
           mode: ScalarMode = EXACT) -> "SymbolicMatrix":
        rows = tuple(tuple(r) for r in entries)
        n = nvars if nvars is not None else max((f.max_var for r in rows for f in r), default=0)
        return SymbolicMatrix(len(rows), rows, max(n, 1), mode)

    @staticmethod
    def generic(d: int, mode: ScalarMode = EXACT) -> "SymbolicMatrix":
        from ..circuits.builders import generic_entries
        return SymbolicMatrix.of(generic_entries(d, mode), d * d, mode)

    @staticmethod
    def from_span(matrices: Sequence[Sequence[Sequence[Any]]], mode: ScalarMode = EXACT) -> "SymbolicMatrix":
        """X = sum_l x_l A_l."""
        if not matrices:
            raise BadDims("need at least one matrix")
        d = len(matrices[0])
        for A in matrices:
            if len(A) != d or any(len(row) != d for row in A):
                raise BadDims(f"all matrices must be {d}x{d}")
        entries = [[LinearForm.of({l + 1: A[i][j] for l, A in enumerate(matrices)}, mode)
                    for j in range(d)] for i in range(d)]
        return SymbolicMatrix.of(entries, len(matrices), mode)

    @staticmethod
    def cauchy_binet(B: Sequence[Sequence[Any]], mode: ScalarMode = EXACT) -> "SymbolicMatrix":
        """X = B diag(x_1..x_c) B^T for B with r rows and c columns."""
        r = len(B)
        if r == 0:
            raise BadDims("empty matrix")
        c = len(B[0])
        rows = [mode.convert_all(row) for row in B]
        if any(len(row) != c for row in rows):
            raise BadDims("ragged matrix")
        entries = [[LinearForm.of({k + 1: rows[i][k] * rows[j][k] for k in range(c)}, mode)
                    for j in range(r)] for i in range(r)]
        return SymbolicMatrix.of(entries, c, mode)

    # --- expansion (oracle side) ---
    def entry_poly(self, i: int, j: int) -> SparsePoly:
        return self.entries[i - 1][j - 1].as_poly(self.nvars)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> SparsePoly:
        """X[rows|cols] as a polynomial; the empty minor is 1."""
        return _minor_poly(self, tuple(rows), tuple(cols))

    def determinant(self) -> SparsePoly:
        return self.minor(tuple(range(1, self.d + 1)), tuple(range(1, self.d + 1)))


@lru_cache(maxsize=4096)
def _minor_poly(X: SymbolicMatrix, rows: Tuple[int, ...], cols: Tuple[int, ...]) -> SparsePoly:
    if len(rows) != len(cols):
        raise BadDims("minor needs equally many rows and columns")
    if not rows:
        return SparsePoly.constant(1, X.nvars, X.mode)
    sub = [[X.entry_poly(i, j) for j in cols] for i in rows]
    return determinant_of(sub, X.nvars, X.mode)


def minor_basis_size(d: int) -> int:
    """sum_k binom(d, k)^2 = binom(2d, d)."""
    return binom(2 * d, d)


class MinorVector(BlockVector):
    """Coefficients c_{alpha,beta} of sum c X[alpha|beta]; block k is binom(d,k) x binom(d,k),
    indexed by the colex ranks of alpha and beta."""

    @staticmethod
    def zero(d: int, mode: ScalarMode = EXACT) -> "MinorVector":
        return MinorVector(d, tuple(zeros((binom(d, k), binom(d, k)), mode) for k in range(d + 1)), mode)

    @staticmethod
    def full(d: int, mode: ScalarMode = EXACT) -> "MinorVector":
        """{X[1..d|1..d]: 1}, i.e. det X."""
        v = MinorVector.zero(d, mode)
        v.blocks[d][0, 0] = mode.one
        return v

    @staticmethod
    def from_dict(d: int, coeffs: Mapping[Tuple[Sequence[int], Sequence[int]], Any],
                  mode: ScalarMode = EXACT) -> "MinorVector":
        v = MinorVector.zero(d, mode)
        for (alpha, beta), c in coeffs.items():
            alpha, beta = tuple(alpha), tuple(beta)
            if len(alpha) != len(beta) or list(alpha) != sorted(set(alpha)) or list(beta) != sorted(set(beta)):
                raise BadDims(f"bad minor label ({alpha}|{beta})")
            if (alpha and alpha[-1] > d) or (beta and beta[-1] > d):
                raise BadDims(f"minor ({alpha}|{beta}) exceeds size {d}")
            k = len(alpha)
            v.blocks[k][colex_rank(alpha), colex_rank(beta)] += mode.convert(c)
        return v

    def as_dict(self) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Scalar]:
        out = {}
        for k, (ra, rb), c in self.nonzero():
            subsets = colex_subsets(self.d, k)
            out[(subsets[ra], subsets[rb])] = c
        return out

    def to_poly(self, X: SymbolicMatrix) -> SparsePoly:
        total = SparsePoly.zero(X.nvars, self.mode)
        for (alpha, beta), c in self.as_dict().items():
            total = total + X.minor(alpha, beta).scale(c)
        return total
