# apolar/lab/waring.py
"""
From a Waring decomposition f = sum_i c_i l_i^d to a decomposition of the structure tensor
of A_f into at most (3d + 1) r simple terms.

For one power l = sum a_v x_v, with e an indeterminate,

    (sum_a a^a e^|a| d^a) (x) (sum_b a^b e^|b| d^b) (x) (sum_j c d!/(d-j)! l^{d-j} e^{d-j})

carries the wanted tensor at e^d and junk at the other powers 0..3d. Evaluating at the
nodes e = 1..3d+1 and weighting by the solution of the Vandermonde system
sum_e e^j w_e = [j = d] isolates the e^d part.
"""
from __future__ import annotations
from math import factorial
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .engine import apolar_monomial_basis
from .models import ApolarAlgebra, SimpleTerm, StructureTensor, WaringTensorDecomposition
from ..algebra.engine import apply_diff_operator
from ..algebra.models import Monomial, SparsePoly
from ..circuits.models import LinearForm
from ..shared.config import EngineOptions
from ..shared.errors import NotADecomposition, SolveFailure, VerificationFailure
from ..shared.linalg import solve_square
from ..shared.scalars import EXACT, Scalar, ScalarMode
from ..shared.trace import trace, tracing


def interpolation_weights(d: int, mode: ScalarMode = EXACT) -> Tuple[Tuple[int, ...], List[Scalar]]:
    """Nodes 1..3d+1 and weights w with sum_e node_e^j w_e = [j = d] for j = 0..3d."""
    nodes = tuple(range(1, 3 * d + 2))
    matrix = [[e ** j for e in nodes] for j in range(3 * d + 1)]
    rhs = [1 if j == d else 0 for j in range(3 * d + 1)]
    return nodes, solve_square(matrix, rhs, mode)


def _check_decomposition(f: SparsePoly, decomposition: Sequence[Tuple[Any, LinearForm]], d: int) -> None:
    total = SparsePoly.zero(f.nvars, f.mode)
    for c, form in decomposition:
        total = total + form.as_poly(f.nvars).power(d).scale(c)
    if total != f:
        raise NotADecomposition(f"sum of {len(decomposition)} powers does not reproduce f")


def waring_to_tensor(f: SparsePoly, decomposition: Sequence[Tuple[Any, LinearForm]],
                     options: Optional[EngineOptions] = None) -> WaringTensorDecomposition:
    options = options or EngineOptions()
    mode = f.mode
    A = apolar_monomial_basis(f, options)
    d = A.degree
    decomposition = [(mode.convert(c), form) for c, form in decomposition]
    _check_decomposition(f, decomposition, d)
    nodes, weights = interpolation_weights(d, mode)

    # --- 1) simple terms, one per (power, node) ---
    terms: List[SimpleTerm] = []
    for c, form in decomposition:
        a = {v: form.coefficient(v) for v in range(1, f.nvars + 1)}
        base = [_power_product(a, m, mode) for m in A.basis]
        tails = [form.as_poly(f.nvars).power(d - j).scale(c * (factorial(d) // factorial(d - j)))
                 for j in range(d + 1)]
        for e, w in zip(nodes, weights):
            if not w:
                continue
            eps = mode.convert(e)
            u = tuple(x * eps ** m.degree for x, m in zip(base, A.basis))
            third = SparsePoly.zero(f.nvars, mode)
            for j, tail in enumerate(tails):
                third = third + tail.scale(eps ** (d - j))
            if not any(u) or not third:
                continue
            terms.append(SimpleTerm(tuple(x * w for x in u), u, third))
    trace("lab", f"waring: {len(decomposition)} powers, degree {d}, {len(terms)} simple terms", options.verbose)

    # --- 2) sum the terms back and compare with the structure tensor ---
    entries: Dict[Tuple[int, int, int], Scalar] = {}
    pairs = [(i, j) for i in range(A.dim) for j in range(A.dim)]
    for i, j in tqdm(pairs, desc="waring", disable=not tracing(options.verbose)):
        acc = SparsePoly.zero(f.nvars, mode)
        for t in terms:
            coef = t.u[i] * t.v[j]
            if coef:
                acc = acc + t.w.scale(coef)
        expected = _image(A, i, j)
        if acc != expected:
            raise VerificationFailure(f"terms give {acc} at ({A.labels[i]}, {A.labels[j]}), expected {expected}")
        if acc:
            try:
                coords = A.coordinates(acc)
            except SolveFailure as exc:
                raise VerificationFailure(f"({A.labels[i]}, {A.labels[j]}) leaves Diff(f)") from exc
            for k, v in enumerate(coords):
                if v:
                    entries[(i, j, k)] = v
    summed = StructureTensor(A.dim, entries, A.labels, mode)
    diff = summed.first_difference(A.tensor)
    if diff is not None:
        raise VerificationFailure(f"summed tensor differs from the structure tensor at {diff[0]}")

    bound = (3 * d + 1) * len(decomposition)
    if len(terms) > bound:
        raise VerificationFailure(f"{len(terms)} terms exceed (3d+1)r = {bound}")
    return WaringTensorDecomposition(A, nodes, tuple(weights), terms, bound, summed)


def _power_product(a: Dict[int, Scalar], mono: Monomial, mode: ScalarMode) -> Scalar:
    out = mode.one
    for v, e in mono.exps:
        out = out * a.get(v, mode.zero) ** e
    return out


def _image(A: ApolarAlgebra, i: int, j: int) -> SparsePoly:
    m = A.basis[i] * A.basis[j]
    return apply_diff_operator(SparsePoly({m: A.mode.one}, A.f.nvars, A.mode), A.f)


def x1x2x3_decomposition(mode: ScalarMode = EXACT) -> List[Tuple[Any, LinearForm]]:
    """x1 x2 x3 = (1/24)[(x1+x2+x3)^3 - (x1+x2-x3)^3 - (x1-x2+x3)^3 - (-x1+x2+x3)^3]."""
    powers = [((1, 1, 1), "1/24"), ((1, 1, -1), "-1/24"), ((1, -1, 1), "-1/24"), ((-1, 1, 1), "-1/24")]
    return [(mode.convert(c), LinearForm.of({v + 1: s for v, s in enumerate(pattern)}, mode))
            for pattern, c in powers]
