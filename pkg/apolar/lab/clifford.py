# apolar/lab/clifford.py
"""
Clifford algebra CL_n (x_i^2 = +1) and the limit construction that realizes A_det_n from
T_n (x) T_n: M(X_U (x) X_V) = (U|V) e^{|U|+|V|}, M'(X_U (x) X_V) = (U|V) e^{-|U|-|V|},
and the e^0 part of (M, M, M')(T_n (x) T_n) is the structure tensor of A_det_n.
"""
from __future__ import annotations
from functools import reduce
from typing import Dict, List, Optional, Tuple

import numpy as np

from .engine import det_algebra, det_basis_labels, det_basis_tensor
from .models import CliffordDecompositionReport, CliffordTensor, DetBasisLabel, StructureTensor
from ..shared.combinatorics import subset_from_mask
from ..shared.config import EngineOptions
from ..shared.errors import BadDims, OddN, VerificationFailure
from ..shared.trace import trace

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

Laurent = Dict[int, int]  # exponent of e -> integer coefficient


def _require_even(n: int, largest: int) -> None:
    if n % 2:
        raise OddN(f"n must be even, got {n}")
    if not 2 <= n <= largest:
        raise BadDims(f"n must lie in 2..{largest}, got {n}")


def clifford_sign(U: int, V: int) -> int:
    """sgn(U, V): parity of pairs a in U, b in V with a > b (bitmasks)."""
    count = 0
    while V:
        low = V & -V
        # elements of U above the lowest remaining element of V
        count += bin(U & ~((low << 1) - 1)).count("1")
        V ^= low
    return -1 if count % 2 else 1


def clifford_structure_tensor(n: int) -> CliffordTensor:
    """All 4^n products X_U . X_V = sgn(U, V) X_{U xor V}."""
    _require_even(n, 6)
    size = 1 << n
    return CliffordTensor(n, {(U, V): clifford_sign(U, V) for U in range(size) for V in range(size)})


def _gammas(n: int) -> List[np.ndarray]:
    """Jordan-Wigner generators: pairwise anticommuting, each squaring to the identity."""
    half = n // 2
    out = []
    for j in range(half):
        for P in (PAULI_X, PAULI_Y):
            factors = [PAULI_Z] * j + [P] + [IDENTITY_2] * (half - j - 1)
            out.append(reduce(np.kron, factors))
    return out


def clifford_matrix_iso(n: int, check: bool = True) -> Dict[int, np.ndarray]:
    """X_U -> ordered product of gamma matrices, a 2^{n/2} x 2^{n/2} complex matrix.

    With check=True every basis product is compared against clifford_structure_tensor.
    """
    _require_even(n, 4)
    gammas = _gammas(n)
    dim = 1 << (n // 2)
    images: Dict[int, np.ndarray] = {}
    for U in range(1 << n):
        M = np.eye(dim, dtype=complex)
        for i in subset_from_mask(U):
            M = M @ gammas[i - 1]
        images[U] = M
    if check:
        T = clifford_structure_tensor(n)
        for (U, V), sign in T.signs.items():
            if not np.array_equal(images[U] @ images[V], sign * images[U ^ V]):
                raise VerificationFailure(f"matrix images break X_{U} . X_{V} = {sign} X_{U ^ V}")
    return images


def _label(U: int, V: int) -> Optional[DetBasisLabel]:
    rows, cols = subset_from_mask(U), subset_from_mask(V)
    if len(rows) != len(cols):
        return None
    return DetBasisLabel(rows, cols)


def laurent_tensor(n: int) -> Dict[Tuple[DetBasisLabel, DetBasisLabel, DetBasisLabel], Laurent]:
    """(M, M, M')(T_n (x) T_n) with coefficients as Laurent polynomials in e."""
    T = clifford_structure_tensor(n)
    size = 1 << n
    out: Dict[Tuple[DetBasisLabel, DetBasisLabel, DetBasisLabel], Laurent] = {}
    for U in range(size):
        for V in range(size):
            a = _label(U, V)
            if a is None:
                continue
            for U2 in range(size):
                for V2 in range(size):
                    b = _label(U2, V2)
                    c = _label(U ^ U2, V ^ V2)
                    if b is None or c is None:
                        continue
                    exp = a.size * 2 + b.size * 2 - c.size * 2
                    coeff = T.signs[(U, U2)] * T.signs[(V, V2)]
                    poly = out.setdefault((a, b, c), {})
                    poly[exp] = poly.get(exp, 0) + coeff
    return {key: {e: c for e, c in poly.items() if c} for key, poly in out.items() if any(poly.values())}


def clifford_det_decomposition(n: int = 2, options: Optional[EngineOptions] = None) -> CliffordDecompositionReport:
    """Check that the e^0 part of (M, M, M')(T_n (x) T_n) is the structure tensor of A_det_n."""
    options = options or EngineOptions()
    if n != 2:
        raise BadDims(f"the decomposition check runs at n = 2, got {n}")
    iso = clifford_matrix_iso(n)
    labels = det_basis_labels(n)
    index = {lab: i for i, lab in enumerate(labels)}
    laurent = laurent_tensor(n)

    exponents: Dict[int, int] = {}
    zero_part: Dict[Tuple[int, int, int], int] = {}
    for (a, b, c), poly in laurent.items():
        for e in poly:
            if e < 0:
                raise VerificationFailure(f"negative power e^{e} at ({a}, {b}, {c})")
            exponents[e] = exponents.get(e, 0) + 1
        if poly.get(0):
            zero_part[(index[a], index[b], index[c])] = poly[0]
    epsilon_zero = StructureTensor(len(labels), zero_part, tuple(map(str, labels)))
    trace("lab", f"clifford n={n}: {len(laurent)} Laurent entries, {len(epsilon_zero)} at e^0", options.verbose)

    rule = det_basis_tensor(n)
    diff = epsilon_zero.first_difference(rule)
    if diff is not None:
        key, got, want = diff
        raise VerificationFailure(f"e^0 entry {key}: {got} against the (I|J) rule's {want}")
    algebra = det_algebra(n, options).tensor
    diff = epsilon_zero.first_difference(algebra)
    if diff is not None:
        key, got, want = diff
        raise VerificationFailure(f"e^0 entry {key}: {got} against A_det_{n}'s {want}")

    terms_per_copy = (1 << (n // 2)) ** 3
    report = CliffordDecompositionReport(
        n=n, epsilon_zero=epsilon_zero, algebra_tensor=algebra, laurent_entries=len(laurent),
        exponent_counts=dict(sorted(exponents.items())),
        matrix_terms=(4 * n + 1) * terms_per_copy ** 2,
        direct_terms=(4 * n + 1) * 16 ** n,
        dimension=len(labels), homomorphism_checked=len(iso) ** 2)
    if not report.bound_holds:
        raise VerificationFailure(f"term count below dim A_det_{n} = {len(labels)}")
    return report
