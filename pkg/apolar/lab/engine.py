# apolar/lab/engine.py
"""
Apolar algebras A_f = C[d_1..d_n] / Ann(f), stored through the isomorphism h -> h o f
with Diff(f). Elements are coordinate vectors over a monomial basis; products go through
the structure tensor.
"""
from __future__ import annotations
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .models import ApolarAlgebra, DetBasisLabel, StructureTensor
from ..algebra.engine import apply_diff_operator, diff_span_dim, generic_determinant
from ..algebra.models import ONE, Monomial, SparsePoly
from ..circuits.models import Add, Circuit, Const, Input, Mul, MulLin, operands
from ..shared.combinatorics import colex_subsets, merge_sign
from ..shared.config import EngineOptions
from ..shared.errors import BadDims, DegreeMismatch, SizeLimit, SolveFailure, VerificationFailure
from ..shared.linalg import independent_columns
from ..shared.scalars import Scalar
from ..shared.trace import trace


def _operator(mono: Monomial, f: SparsePoly) -> SparsePoly:
    return apply_diff_operator(SparsePoly({mono: f.mode.one}, f.nvars, f.mode), f)


def _require_form(f: SparsePoly) -> int:
    if not f:
        raise BadDims("the zero polynomial has no apolar algebra")
    return f.homogeneous_degree()


def _divisors_by_degree(f: SparsePoly, limit: int) -> Dict[int, List[Monomial]]:
    """Monomials dividing some term of f, grouped by degree (the only d^a with d^a o f != 0)."""
    seen = set()
    for mono in f.terms:
        ranges = [range(e + 1) for _, e in mono.exps]
        for exps in product(*ranges):
            seen.add(Monomial.of(zip(mono.variables, exps)))
            if len(seen) > limit:
                raise SizeLimit(f"more than {limit} candidate operators")
    out: Dict[int, List[Monomial]] = {}
    for m in seen:
        out.setdefault(m.degree, []).append(m)
    return out


def _finish(f: SparsePoly, basis: Sequence[Monomial], images: Sequence[SparsePoly], d: int) -> ApolarAlgebra:
    tops = [i for i, m in enumerate(basis) if m.degree == d]
    if len(tops) != 1:
        raise BadDims(f"basis must hold exactly one degree-{d} element, found {len(tops)}")
    top = tops[0]
    return ApolarAlgebra(f=f, basis=tuple(basis), basis_images=tuple(images),
                         degree_one=tuple(i for i, m in enumerate(basis) if m.degree == 1),
                         top=top, top_pairing=images[top].coefficient(ONE))


def apolar_monomial_basis(f: SparsePoly, options: Optional[EngineOptions] = None) -> ApolarAlgebra:
    """Greedy basis: degree ascending, then lexicographic, keeping d^a whenever d^a o f is new."""
    options = options or EngineOptions()
    d = _require_form(f)
    candidates = _divisors_by_degree(f, options.diff_limit)
    basis: List[Monomial] = []
    images: List[SparsePoly] = []
    for t in range(d + 1):
        mons = sorted(candidates.get(t, []), key=lambda m: m.sort_key(f.nvars))
        imgs = [_operator(m, f) for m in mons]
        # degrees of the images differ between levels, so each level is reduced on its own
        for i in independent_columns([p.terms for p in imgs], f.mode):
            basis.append(mons[i])
            images.append(imgs[i])
        trace("lab", f"degree {t}: {len(mons)} candidates, {len(basis)} basis elements so far", options.verbose)
    expected = diff_span_dim(f, options)
    if len(basis) != expected:
        raise VerificationFailure(f"monomial basis has {len(basis)} elements, Diff(f) has dimension {expected}")
    return _finish(f, basis, images, d)


def apolar_algebra_from_basis(f: SparsePoly, basis: Sequence[Monomial],
                              options: Optional[EngineOptions] = None) -> ApolarAlgebra:
    """A_f over a caller-chosen monomial basis (checked to be one)."""
    options = options or EngineOptions()
    d = _require_form(f)
    basis = [m if isinstance(m, Monomial) else Monomial.of(m) for m in basis]
    if ONE not in basis:
        raise BadDims("basis must contain the unit")
    images = [_operator(m, f) for m in basis]
    if len(independent_columns([p.terms for p in images], f.mode)) != len(basis):
        raise SolveFailure("basis images are linearly dependent")
    expected = diff_span_dim(f, options)
    if len(basis) != expected:
        raise BadDims(f"{len(basis)} elements cannot span Diff(f) of dimension {expected}")
    return _finish(f, basis, images, d)


def structure_tensor(A: ApolarAlgebra, options: Optional[EngineOptions] = None) -> StructureTensor:
    """entries[(i, j, k)] = coordinate k of d^(a_i + a_j) o f."""
    options = options or EngineOptions()
    d = A.degree
    entries: Dict[Tuple[int, int, int], Scalar] = {}
    for i, a in enumerate(A.basis):
        for j in range(i, A.dim):
            m = a * A.basis[j]
            if m.degree > d:
                continue
            image = _operator(m, A.f)
            if not image:
                continue
            for k, c in enumerate(A.coordinates(image)):
                if c:
                    entries[(i, j, k)] = c
                    entries[(j, i, k)] = c
    trace("lab", f"structure tensor: dim {A.dim}, {len(entries)} nonzero entries", options.verbose)
    return StructureTensor(A.dim, entries, A.labels, A.mode)


def algebra_evaluate(A: ApolarAlgebra, C: Circuit, options: Optional[EngineOptions] = None) -> Scalar:
    """<f, g> for g computed by C (general products allowed), by arithmetic in A_f.

    The output is c * q for the top basis element q, and <f, g> = c <f, q>.
    """
    options = options or EngineOptions()
    A.mode.require_same(C.mode)
    if C.degree != A.degree:
        raise DegreeMismatch(f"circuit has degree {C.degree}, f has degree {A.degree}")
    live = C.live_gates()
    last = C.last_uses(live)
    values: Dict[int, np.ndarray] = {}
    products = 0

    def form_element(form) -> np.ndarray:
        acc = A.zero_vector()
        for v, c in form.coeffs:
            if v <= A.f.nvars:
                acc = acc + A.variable_element(v) * c
        return acc

    for idx in live:
        g = C.gates[idx]
        if isinstance(g, Input):
            val = A.variable_element(g.var) if g.var <= A.f.nvars else A.zero_vector()
        elif isinstance(g, Const):
            val = A.unit * g.value
        elif isinstance(g, Add):
            val = values[g.a] + values[g.b]
        elif isinstance(g, MulLin):
            val = A.multiply(form_element(g.form), values[g.a])
            products += 1
        elif isinstance(g, Mul):
            val = A.multiply(values[g.a], values[g.b])
            products += 1
        else:
            raise TypeError(f"unknown gate {g!r}")
        values[idx] = val
        for op in set(operands(g)):
            if last.get(op) == idx and op != C.output:
                values.pop(op, None)

    trace("lab", f"evaluated {len(live)} gates over A_f (dim {A.dim}) with {products} products", options.verbose)
    return values[C.output][A.top] * A.top_pairing


# --- the determinant's (I|J) basis ---
def det_basis_labels(n: int) -> List[DetBasisLabel]:
    """All (I|J) with |I| = |J| <= n: by size, then I, then J in colex order."""
    if n < 1:
        raise BadDims("n must be >= 1")
    return [DetBasisLabel(I, J) for k in range(n + 1)
            for I in colex_subsets(n, k) for J in colex_subsets(n, k)]


def det_basis_product(p: DetBasisLabel, q: DetBasisLabel) -> Optional[Tuple[int, DetBasisLabel]]:
    """(I|J)(I'|J') = sgn(I, I') sgn(J, J') (I u I' | J u J'), or None when rows or columns meet."""
    if set(p.rows) & set(q.rows) or set(p.cols) & set(q.cols):
        return None
    sign = merge_sign(p.rows, q.rows) * merge_sign(p.cols, q.cols)
    return sign, DetBasisLabel(tuple(sorted(p.rows + q.rows)), tuple(sorted(p.cols + q.cols)))


def det_basis_tensor(n: int) -> StructureTensor:
    """Structure tensor of A_det_n in the (I|J) basis, from the multiplication rule alone."""
    labels = det_basis_labels(n)
    index = {lab: i for i, lab in enumerate(labels)}
    entries: Dict[Tuple[int, int, int], Scalar] = {}
    for i, p in enumerate(labels):
        for j, q in enumerate(labels):
            prod = det_basis_product(p, q)
            if prod is not None:
                sign, r = prod
                entries[(i, j, index[r])] = sign
    return StructureTensor(len(labels), entries, tuple(str(lab) for lab in labels))


def det_algebra(n: int, options: Optional[EngineOptions] = None) -> ApolarAlgebra:
    """A_det_n over the (I|J) basis, ordered as det_basis_labels(n)."""
    f = generic_determinant(n, (options or EngineOptions()).mode)
    return apolar_algebra_from_basis(f, [lab.monomial(n) for lab in det_basis_labels(n)], options)
