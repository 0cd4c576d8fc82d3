"""apolar/lab/models.py"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.engine import apply_diff_operator
from ..algebra.models import ONE, Monomial, SparsePoly
from ..shared.errors import BadDims
from ..shared.linalg import SpanSolver
from ..shared.scalars import Scalar, ScalarMode


# --- structure tensors ---
@dataclass
class StructureTensor:
    """Sparse 3-tensor: entries[(i, j, k)] = e_k^*(e_i . e_j)."""
    dim: int
    entries: Dict[Tuple[int, int, int], Scalar]
    labels: Tuple[str, ...] = ()
    mode: Optional[ScalarMode] = None

    def __post_init__(self):
        self.entries = {key: c for key, c in self.entries.items() if c}
        self._by_pair: Dict[Tuple[int, int], List[Tuple[int, Scalar]]] = {}
        for (i, j, k), c in sorted(self.entries.items()):
            self._by_pair.setdefault((i, j), []).append((k, c))

    @property
    def dims(self) -> Tuple[int, int, int]:
        return (self.dim, self.dim, self.dim)

    def __len__(self) -> int:
        return len(self.entries)

    def nonzero_pairs(self) -> int:
        """Number of (i, j) with e_i . e_j != 0."""
        return len(self._by_pair)

    def product(self, u: Sequence[Scalar], v: Sequence[Scalar], zero: Scalar) -> np.ndarray:
        out = np.full(self.dim, zero, dtype=object)
        for (i, j), row in self._by_pair.items():
            if u[i] and v[j]:
                uv = u[i] * v[j]
                for k, c in row:
                    out[k] += uv * c
        return out

    def first_difference(self, other: "StructureTensor") -> Optional[Tuple[Tuple[int, int, int], Scalar, Scalar]]:
        for key in sorted(set(self.entries) | set(other.entries)):
            a, b = self.entries.get(key, 0), other.entries.get(key, 0)
            if a != b:
                return key, a, b
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.dim == other.dim and self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]


# --- apolar algebras ---
@dataclass(eq=False)
class ApolarAlgebra:
    """A_f with a monomial basis; basis element d^a is identified with d^a o f."""
    f: SparsePoly
    basis: Tuple[Monomial, ...]
    basis_images: Tuple[SparsePoly, ...]
    degree_one: Tuple[int, ...]
    top: int
    top_pairing: Scalar
    _variables: Dict[int, np.ndarray] = field(default_factory=dict, init=False, repr=False)

    @property
    def mode(self) -> ScalarMode:
        return self.f.mode

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def degree(self) -> int:
        return self.f.homogeneous_degree()

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(m.format("d") for m in self.basis)

    @cached_property
    def index(self) -> Dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.basis)}

    @cached_property
    def solver(self) -> SpanSolver:
        return SpanSolver([p.terms for p in self.basis_images], self.mode)

    @cached_property
    def unit(self) -> np.ndarray:
        e = self.zero_vector()
        e[self.index[ONE]] = self.mode.one
        return e

    def zero_vector(self) -> np.ndarray:
        return np.full(self.dim, self.mode.zero, dtype=object)

    def coordinates(self, p: SparsePoly) -> np.ndarray:
        """Coordinates of p (an element of Diff(f)) in the basis images."""
        return np.array(self.solver.coordinates(p.terms), dtype=object).reshape(self.dim)

    def element_of(self, h: SparsePoly) -> np.ndarray:
        """The class of the operator h in A_f."""
        return self.coordinates(apply_diff_operator(h, self.f))

    def variable_element(self, i: int) -> np.ndarray:
        """Class of d_i; zero when d_i kills f."""
        if i not in self._variables:
            self._variables[i] = self.element_of(SparsePoly.variable(i, self.f.nvars, self.mode))
        return self._variables[i]

    def image_of(self, coords: Sequence[Scalar]) -> SparsePoly:
        """sum c_k (basis_k o f)."""
        total = SparsePoly.zero(self.f.nvars, self.mode)
        for c, p in zip(coords, self.basis_images):
            if c:
                total = total + p.scale(c)
        return total

    @cached_property
    def tensor(self) -> StructureTensor:
        from .engine import structure_tensor
        return structure_tensor(self)

    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> np.ndarray:
        return self.tensor.product(u, v, self.mode.zero)


# --- determinant basis ---
@dataclass(frozen=True, order=True)
class DetBasisLabel:
    """(I|J): the operator d_{I1,J1} ... d_{Ik,Jk} on n x n determinants."""
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise BadDims(f"label ({self.rows}|{self.cols}) has unequal sides")
        for side in (self.rows, self.cols):
            if list(side) != sorted(set(side)) or (side and side[0] < 1):
                raise BadDims(f"label side {side} must be strictly increasing and positive")

    @staticmethod
    def of(rows: Iterable[int], cols: Iterable[int]) -> "DetBasisLabel":
        return DetBasisLabel(tuple(rows), tuple(cols))

    @property
    def size(self) -> int:
        return len(self.rows)

    def monomial(self, n: int) -> Monomial:
        """Variables x_{(i-1)n + j} for the pairs (I_t, J_t)."""
        if (self.rows and self.rows[-1] > n) or (self.cols and self.cols[-1] > n):
            raise BadDims(f"label {self} exceeds n={n}")
        return Monomial.product_of((i - 1) * n + j for i, j in zip(self.rows, self.cols))

    def __str__(self) -> str:
        return f"({''.join(map(str, self.rows))}|{''.join(map(str, self.cols))})"


@dataclass
class CliffordTensor:
    """Structure tensor of the Clifford algebra on n generators with x_i^2 = +1.

    Basis elements X_U are indexed by bitmasks U; signs[(U, V)] is sgn(U, V) and the product
    lands on U ^ V.
    """
    n: int
    signs: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.signs)

    def product(self, U: int, V: int) -> Tuple[int, int]:
        return self.signs[(U, V)], U ^ V


# --- decompositions ---
@dataclass
class SimpleTerm:
    """u (x) v (x) w with u, v coordinate vectors over the algebra basis and w a polynomial."""
    u: Tuple[Scalar, ...]
    v: Tuple[Scalar, ...]
    w: SparsePoly


@dataclass
class WaringTensorDecomposition:
    algebra: ApolarAlgebra
    nodes: Tuple[int, ...]
    weights: Tuple[Scalar, ...]
    terms: List[SimpleTerm]
    rank_bound: int          # (3d + 1) * r
    tensor: Optional[StructureTensor] = None

    @property
    def term_count(self) -> int:
        return len(self.terms)


@dataclass
class CliffordDecompositionReport:
    n: int
    epsilon_zero: StructureTensor
    algebra_tensor: StructureTensor
    laurent_entries: int
    exponent_counts: Dict[int, int]
    matrix_terms: int        # (4n + 1) * 8^n via the matrix-algebra isomorphism
    direct_terms: int        # (4n + 1) * 16^n, one per entry of T_n (x) T_n
    dimension: int
    homomorphism_checked: int

    @property
    def bound_holds(self) -> bool:
        return min(self.matrix_terms, self.direct_terms) >= self.dimension
