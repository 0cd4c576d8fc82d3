from itertools import product

import pytest

from apolar.algebra.engine import apply_diff_operator, generic_hankel_determinant, permanent
from apolar.algebra.models import ONE, Monomial, SparsePoly
from apolar.circuits.builders import build_mv_determinant, build_row_product
from apolar.circuits.models import LinearForm
from apolar.hankel.engine import hankeldiff_evaluate
from apolar.hankel.models import HankelArrangement
from apolar.lab.clifford import (clifford_det_decomposition, clifford_matrix_iso, clifford_sign,
                                 clifford_structure_tensor)
from apolar.lab.convolution import (ConvolutionStats, subset_convolution_algebra, subset_convolution_fast,
                                    subset_convolution_naive)
from apolar.lab.engine import (algebra_evaluate, apolar_algebra_from_basis, apolar_monomial_basis, det_algebra,
                               det_basis_labels, det_basis_product, det_basis_tensor, structure_tensor)
from apolar.lab.models import DetBasisLabel
from apolar.lab.waring import interpolation_weights, waring_to_tensor, x1x2x3_decomposition
from apolar.minors.engine import gendiff_evaluate
from apolar.minors.models import SymbolicMatrix
from apolar.shared.errors import (BadDims, DegreeMismatch, LengthMismatch, NotADecomposition, OddN,
                                  SolveFailure)
from apolar.shared.scalars import ScalarMode

from conftest import random_poly


def mono(*variables):
    return Monomial.product_of(variables)


def monomial_form(*variables):
    return SparsePoly.from_terms([(mono(*variables), 1)], max(variables))


# --- apolar algebras ---
def test_monomial_algebra_is_square_free_divisors():
    A = apolar_monomial_basis(monomial_form(1, 2, 3))
    assert A.dim == 8
    assert A.basis[0] == ONE and A.basis[A.top] == mono(1, 2, 3)
    assert all(m.is_squarefree() for m in A.basis)
    assert A.top_pairing == 1


def test_structure_tensor_of_monomial_algebra():
    A = apolar_monomial_basis(monomial_form(1, 2))
    T = structure_tensor(A)
    i1, i2 = A.index[mono(1)], A.index[mono(2)]
    top = A.index[mono(1, 2)]
    assert T.entries[(i1, i2, top)] == 1
    # d1 * d1 kills x1 x2
    assert (i1, i1, top) not in T.entries
    assert T == A.tensor


def test_det_algebra_matches_the_label_rule():
    A = det_algebra(2)
    assert A.dim == 6
    assert A.tensor == det_basis_tensor(2)
    assert len(det_basis_labels(3)) == 20


def test_det_basis_product_signs():
    one, two = DetBasisLabel.of([1], [1]), DetBasisLabel.of([2], [2])
    assert det_basis_product(one, two) == (1, DetBasisLabel.of([1, 2], [1, 2]))
    assert det_basis_product(DetBasisLabel.of([2], [1]), DetBasisLabel.of([1], [2])) == \
        (-1, DetBasisLabel.of([1, 2], [1, 2]))
    assert det_basis_product(one, DetBasisLabel.of([1], [2])) is None
    with pytest.raises(BadDims):
        DetBasisLabel.of([2, 1], [1, 2])


def test_custom_basis_checks():
    f = monomial_form(1, 2)
    with pytest.raises(BadDims):
        apolar_algebra_from_basis(f, [mono(1), mono(2), mono(1, 2)])
    with pytest.raises(SolveFailure):
        apolar_algebra_from_basis(f, [ONE, mono(1), mono(1), mono(1, 2)])
    with pytest.raises(BadDims):
        apolar_monomial_basis(SparsePoly.zero())


def test_algebra_evaluate_gives_the_permanent():
    A = apolar_monomial_basis(monomial_form(1, 2))
    assert algebra_evaluate(A, build_row_product([[1, 2], [3, 4]])) == 10


@pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow),
                               pytest.param(6, marks=pytest.mark.slow)])
def test_algebra_evaluate_gives_the_permanent_on_random_matrices(rng, n):
    A = apolar_monomial_basis(monomial_form(*range(1, n + 1)))
    for _ in range(17):
        M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert algebra_evaluate(A, build_row_product(M)) == permanent(M), M


def test_algebra_evaluation_matches_the_differential_engines(rng, skew_circuit_factory):
    for d in (1, 2, 3):
        det_A = det_algebra(d)
        hankel_A = apolar_monomial_basis(generic_hankel_determinant(d))
        X, H = SymbolicMatrix.generic(d), HankelArrangement.generic(d)
        for _ in range(8):
            C = skew_circuit_factory(d * d, d)
            assert algebra_evaluate(det_A, C) == gendiff_evaluate(X, C)
            C = skew_circuit_factory(2 * d - 1, d)
            assert algebra_evaluate(hankel_A, C) == hankeldiff_evaluate(H, C)


def test_structure_tensor_of_x1x2x3_pairs_disjoint_subsets():
    T = structure_tensor(apolar_monomial_basis(monomial_form(1, 2, 3)))
    assert T.nonzero_pairs() == 27
    assert len(T) == 27


def test_multiplication_follows_differentiation(rng):
    for _ in range(12):
        n, d = rng.randint(2, 3), rng.randint(2, 3)
        f = random_poly(rng, n, d)
        if not f:
            continue
        A = apolar_monomial_basis(f)
        h1, h2 = random_poly(rng, n, 1), random_poly(rng, n, rng.randint(1, 2))
        product_class = A.multiply(A.element_of(h1), A.element_of(h2))
        assert A.image_of(product_class) == apply_diff_operator(h1 * h2, f)
        u, v, w = (A.element_of(random_poly(rng, n, rng.randint(0, 2))) for _ in range(3))
        assert list(A.multiply(A.multiply(u, v), w)) == list(A.multiply(u, A.multiply(v, w)))
        assert list(A.multiply(u, v)) == list(A.multiply(v, u))
        assert list(A.multiply(A.unit, u)) == list(u)


def test_algebra_evaluate_on_the_determinant():
    # <det X, det X> = 2! for the generic 2x2 matrix
    assert algebra_evaluate(det_algebra(2), build_mv_determinant(2)) == 2
    with pytest.raises(DegreeMismatch):
        algebra_evaluate(det_algebra(2), build_mv_determinant(3))


# --- subset convolution ---
def test_convolution_small_example():
    sigma, tau = [1, 2, 3, 4], [5, 6, 7, 8]
    assert subset_convolution_naive(sigma, tau) == [5, 16, 22, 60]
    assert subset_convolution_fast(sigma, tau) == [5, 16, 22, 60]
    assert subset_convolution_algebra(sigma, tau) == [5, 16, 22, 60]


def test_convolution_methods_agree_exhaustively_on_two_elements():
    for values in product((-1, 0, 2), repeat=8):
        sigma, tau = list(values[:4]), list(values[4:])
        expected = subset_convolution_naive(sigma, tau)
        assert subset_convolution_fast(sigma, tau) == expected


def test_convolution_methods_agree_exhaustively_on_one_element():
    for values in product(range(-2, 3), repeat=4):
        sigma, tau = list(values[:2]), list(values[2:])
        expected = subset_convolution_naive(sigma, tau)
        assert subset_convolution_fast(sigma, tau) == expected
        assert subset_convolution_algebra(sigma, tau) == expected


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_convolution_methods_agree_on_every_scaled_basis_pair(n):
    # both methods are bilinear, so agreement on a * e_U, b * e_V covers every input
    size = 1 << n
    for U, V in product(range(size), repeat=2):
        for a, b in product(range(-2, 3), repeat=2):
            sigma, tau = [0] * size, [0] * size
            sigma[U], tau[V] = a, b
            expected = subset_convolution_naive(sigma, tau)
            assert expected == [a * b if S == U | V and not U & V else 0 for S in range(size)]
            assert subset_convolution_fast(sigma, tau) == expected
            if n and n <= 2:
                assert subset_convolution_algebra(sigma, tau) == expected


def test_convolution_methods_agree_on_random_inputs(rng):
    for _ in range(30):
        n = rng.randint(0, 4)
        sigma = [rng.randint(-5, 5) for _ in range(1 << n)]
        tau = [rng.randint(-5, 5) for _ in range(1 << n)]
        expected = subset_convolution_naive(sigma, tau)
        stats = ConvolutionStats()
        assert subset_convolution_fast(sigma, tau, stats=stats) == expected
        assert stats.multiplications <= stats.bound(n)
        if n:
            assert subset_convolution_algebra(sigma, tau) == expected


def _random_convolution_trials(rng, trials, max_n):
    for _ in range(trials):
        n = rng.randint(0, max_n)
        sigma = [rng.randint(-2, 2) for _ in range(1 << n)]
        tau = [rng.randint(-2, 2) for _ in range(1 << n)]
        stats = ConvolutionStats()
        assert subset_convolution_fast(sigma, tau, stats=stats) == subset_convolution_naive(sigma, tau)
        assert stats.multiplications <= stats.bound(n)


def test_convolution_random_trials_up_to_eight_elements(rng):
    _random_convolution_trials(rng, 100, 8)


@pytest.mark.slow
def test_convolution_random_trials_up_to_twelve_elements(rng):
    _random_convolution_trials(rng, 500, 12)


def test_convolution_modular():
    mode = ScalarMode(7)
    out = subset_convolution_fast([1, 2, 3, 4], [5, 6, 7, 8], mode)
    assert [mode.format(v) for v in out] == ["5", "2", "1", "4"]


@pytest.mark.parametrize("sigma,tau", [([1, 2, 3], [1, 2, 3]), ([1, 2], [1, 2, 3, 4]), ([], [])])
def test_convolution_rejects_bad_lengths(sigma, tau):
    with pytest.raises(LengthMismatch):
        subset_convolution_naive(sigma, tau)


# --- Clifford ---
def test_clifford_sign():
    assert clifford_sign(0b10, 0b01) == -1
    assert clifford_sign(0b01, 0b10) == 1
    assert clifford_sign(0b11, 0b11) == -1
    assert clifford_sign(0, 0b111) == 1


def test_clifford_tensor_and_matrices():
    T = clifford_structure_tensor(2)
    assert len(T) == 16
    assert T.product(0b01, 0b10) == (1, 0b11)
    images = clifford_matrix_iso(2)
    assert len(images) == 4
    assert images[0b11].shape == (2, 2)
    assert len(clifford_matrix_iso(4, check=True)) == 16


@pytest.mark.parametrize("n,error", [(3, OddN), (0, BadDims), (8, BadDims)])
def test_clifford_rejects_bad_n(n, error):
    with pytest.raises(error):
        clifford_structure_tensor(n)


def test_clifford_decomposition_reproduces_det_algebra():
    report = clifford_det_decomposition(2)
    assert report.dimension == 6
    assert report.bound_holds
    assert report.homomorphism_checked == 16
    assert report.epsilon_zero == det_basis_tensor(2)
    assert min(report.exponent_counts) >= 0
    with pytest.raises(BadDims):
        clifford_det_decomposition(4)


# --- Waring ---
def test_interpolation_weights_isolate_one_power():
    nodes, weights = interpolation_weights(1)
    assert nodes == (1, 2, 3, 4)
    for j in range(4):
        assert sum(e ** j * w for e, w in zip(nodes, weights)) == (1 if j == 1 else 0)


def test_waring_decomposition_of_x1x2x3():
    f = monomial_form(1, 2, 3)
    dec = waring_to_tensor(f, x1x2x3_decomposition())
    assert dec.rank_bound == 40
    assert 0 < dec.term_count <= 40
    assert dec.tensor == dec.algebra.tensor


def test_waring_rejects_a_wrong_identity():
    f = monomial_form(1, 2)
    wrong = [(1, LinearForm.of({1: 1, 2: 1}))]
    with pytest.raises(NotADecomposition):
        waring_to_tensor(f, wrong)
