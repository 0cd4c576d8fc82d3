"""apolar/algebra/engine.py"""
from __future__ import annotations
from itertools import permutations
from typing import Any, Dict, List, Optional, Sequence

from sympy.combinatorics import Permutation

from .models import Monomial, SparsePoly
from ..shared.config import EngineOptions
from ..shared.errors import BadDims, DegreeMismatch, SizeLimit
from ..shared.linalg import independent_columns
from ..shared.scalars import EXACT, Scalar, ScalarMode
from ..shared.trace import trace


def apply_diff_operator(h: SparsePoly, f: SparsePoly) -> SparsePoly:
    """h(d/dx_1, ..., d/dx_n) applied to f, term by term.

    d^a o x^b = (b!/(b-a)!) x^(b-a) when a <= b, else 0.
    """
    h.mode.require_same(f.mode)
    mode = f.mode
    acc: Dict[Monomial, Scalar] = {}
    zero = mode.zero
    for a, ca in h.terms.items():
        for b, cb in f.terms.items():
            if not a.divides(b):
                continue
            m = b.quotient(a)
            acc[m] = acc.get(m, zero) + ca * cb * b.falling_factor(a)
    return SparsePoly({m: c for m, c in acc.items() if c}, max(h.nvars, f.nvars), mode)


def apolar_inner_product(f: SparsePoly, g: SparsePoly) -> Scalar:
    """<f, g> = sum_a f_a g_a a! for homogeneous f, g of equal degree."""
    f.mode.require_same(g.mode)
    df = f.homogeneous_degree()
    dg = g.homogeneous_degree()
    if f and g and df != dg:
        raise DegreeMismatch(f"degrees differ: {df} vs {dg}")
    out = f.mode.zero
    small, large = (f, g) if len(f) <= len(g) else (g, f)
    for m, c in small.terms.items():
        other = large.terms.get(m)
        if other is not None:
            out += c * other * m.factorial()
    return out


def permanent(A: Sequence[Sequence[Any]], limit: Optional[int] = None, mode: ScalarMode = EXACT) -> Scalar:
    """Permanent by enumeration of all n! permutations."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise BadDims("permanent needs a square matrix")
    limit = limit if limit is not None else EngineOptions().permanent_limit
    if n > limit:
        raise SizeLimit(f"permanent of size {n} exceeds brute-force limit {limit}")
    M = [mode.convert_all(row) for row in A]
    total = mode.zero
    for sigma in permutations(range(n)):
        term = mode.one
        for i, j in enumerate(sigma):
            term = term * M[i][j]
            if not term:
                break
        total += term
    return total


def permanent_polynomial(A: Sequence[Sequence[Any]], mode: ScalarMode = EXACT) -> SparsePoly:
    """P_A = prod_i sum_j A_ij x_j; its coefficient of x_1...x_n is perm(A)."""
    n = len(A)
    out = SparsePoly.constant(1, n, mode)
    for row in A:
        out = out * SparsePoly.linear({j + 1: c for j, c in enumerate(row)}, n, mode)
    return out


def determinant_of(entries: Sequence[Sequence[SparsePoly]], nvars: int = 0, mode: ScalarMode = EXACT) -> SparsePoly:
    """Leibniz expansion of a matrix of polynomials."""
    d = len(entries)
    total = SparsePoly.zero(nvars, mode)
    for sigma in permutations(range(d)):
        term = SparsePoly.constant(Permutation(list(sigma)).signature(), nvars, mode)
        for i, j in enumerate(sigma):
            if not entries[i][j]:
                term = SparsePoly.zero(nvars, mode)
                break
            term = term * entries[i][j]
        total = total + term
    return total.with_nvars(nvars)


def generic_determinant(d: int, mode: ScalarMode = EXACT) -> SparsePoly:
    """det of the d x d matrix with entry (i, j) = x_{(i-1)d + j}."""
    n = d * d
    entries = [[SparsePoly.variable(i * d + j + 1, n, mode) for j in range(d)] for i in range(d)]
    return determinant_of(entries, n, mode)


def generic_hankel_determinant(d: int, mode: ScalarMode = EXACT) -> SparsePoly:
    """det of the d x d Hankel matrix with entry (i, j) = x_{i+j-1}."""
    n = 2 * d - 1
    entries = [[SparsePoly.variable(i + j + 1, n, mode) for j in range(d)] for i in range(d)]
    return determinant_of(entries, n, mode)


def _derivative_levels(f: SparsePoly, limit: int, verbose: bool = False) -> List[List[SparsePoly]]:
    """Per derivative order t, a basis of the span of all order-t partials of f."""
    levels: List[List[SparsePoly]] = []
    current = [f] if f else []
    produced = 0
    while current:
        keep = independent_columns([p.terms for p in current], f.mode)
        basis = [current[i] for i in keep]
        levels.append(basis)
        trace("algebra", f"order {len(levels) - 1}: {len(current)} candidates, rank {len(basis)}", verbose)
        nxt: List[SparsePoly] = []
        for p in basis:
            for v in p.support_vars():
                q = p.derivative(v)
                if q:
                    nxt.append(q)
                    produced += 1
                    if produced > limit:
                        raise SizeLimit(f"more than {limit} derivatives generated")
        current = nxt
    return levels


def diff_span_dim(f: SparsePoly, options: Optional[EngineOptions] = None) -> int:
    """dim Diff(f): span of all partial derivatives of f of all orders, f included."""
    options = options or EngineOptions()
    levels = _derivative_levels(f, options.diff_limit, options.verbose)
    if f.is_homogeneous():
        # orders live in different degrees, so the spans are independent
        return sum(len(b) for b in levels)
    everything = [p.terms for basis in levels for p in basis]
    return len(independent_columns(everything, f.mode))
