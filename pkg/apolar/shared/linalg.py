# apolar/shared/linalg.py
"""
Exact linear algebra over a ScalarMode domain, on sparse vectors given as dicts
{key: scalar}. All elimination goes through sympy's DomainMatrix.
"""
from __future__ import annotations
from typing import Dict, Hashable, List, Mapping, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .errors import SolveFailure
from .scalars import Scalar, ScalarMode

Vector = Mapping[Hashable, Scalar]


def _key_index(vectors: Sequence[Vector]) -> Dict[Hashable, int]:
    keys: Dict[Hashable, int] = {}
    for v in vectors:
        for key in v:
            if key not in keys:
                keys[key] = len(keys)
    return keys


def _column_matrix(vectors: Sequence[Vector], keys: Dict[Hashable, int], mode: ScalarMode) -> DomainMatrix:
    """Matrix whose j-th column is vectors[j] (rows indexed by keys)."""
    rows: Dict[int, Dict[int, Scalar]] = {}
    for j, v in enumerate(vectors):
        for key, c in v.items():
            if c:
                rows.setdefault(keys[key], {})[j] = c
    return DomainMatrix(rows, (max(len(keys), 1), len(vectors)), mode.domain)


def independent_columns(vectors: Sequence[Vector], mode: ScalarMode) -> List[int]:
    """Indices of the first maximal linearly independent subsequence of `vectors`."""
    if not vectors:
        return []
    keys = _key_index(vectors)
    if not keys:
        return []
    _, pivots = _column_matrix(vectors, keys, mode).rref()
    return list(pivots)


def rank(vectors: Sequence[Vector], mode: ScalarMode) -> int:
    return len(independent_columns(vectors, mode))


def determinant(matrix: Sequence[Sequence[Scalar]], mode: ScalarMode) -> Scalar:
    n = len(matrix)
    if n == 0:
        return mode.one
    rows = [[mode.convert(x) for x in row] for row in matrix]
    return DomainMatrix(rows, (n, n), mode.domain).det()


def solve_square(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], mode: ScalarMode) -> List[Scalar]:
    """Solve matrix @ x = rhs exactly (matrix square and invertible)."""
    n = len(matrix)
    A = DomainMatrix([[mode.convert(x) for x in row] for row in matrix], (n, n), mode.domain)
    b = DomainMatrix([[mode.convert(x)] for x in rhs], (n, 1), mode.domain)
    try:
        x = A.lu_solve(b)
    except Exception as exc:  # singular system
        raise SolveFailure(f"linear system has no unique solution: {exc}") from exc
    return [row[0] for row in x.to_list()]


class SpanSolver:
    """Coordinates with respect to a fixed list of independent sparse vectors."""

    def __init__(self, basis: Sequence[Vector], mode: ScalarMode):
        self.mode = mode
        self.basis = [dict(v) for v in basis]
        r = len(self.basis)
        if r == 0:
            self.pivot_keys: Tuple[Hashable, ...] = ()
            self._inverse = None
            return
        keys = _key_index(self.basis)
        order = list(keys)
        # rows = basis vectors, columns = keys; pivot columns pick a square invertible minor
        rows: Dict[int, Dict[int, Scalar]] = {}
        for i, v in enumerate(self.basis):
            entries = {keys[k]: c for k, c in v.items() if c}
            if entries:
                rows[i] = entries
        M = DomainMatrix(rows, (r, len(keys)), mode.domain)
        _, pivots = M.rref()
        if len(pivots) != r:
            raise SolveFailure("basis vectors are linearly dependent")
        self.pivot_keys = tuple(order[p] for p in pivots)
        square = [[v.get(k, mode.zero) for k in self.pivot_keys] for v in self.basis]
        self._inverse = DomainMatrix(square, (r, r), mode.domain).inv()

    def coordinates(self, target: Vector) -> List[Scalar]:
        r = len(self.basis)
        zero = self.mode.zero
        if r == 0:
            if any(c for c in target.values()):
                raise SolveFailure("nonzero vector outside the zero span")
            return []
        y = DomainMatrix([[target.get(k, zero) for k in self.pivot_keys]], (1, r), self.mode.domain)
        x = y * self._inverse
        coords = list(x.to_list()[0])
        # the pivot solve only sees pivot keys; confirm the full vector
        rebuilt: Dict[Hashable, Scalar] = {}
        for c, v in zip(coords, self.basis):
            if c:
                for k, val in v.items():
                    rebuilt[k] = rebuilt.get(k, zero) + c * val
        for k in set(rebuilt) | set(target):
            if rebuilt.get(k, zero) != target.get(k, zero):
                raise SolveFailure(f"vector is not in the span (mismatch at {k!r})")
        return coords
