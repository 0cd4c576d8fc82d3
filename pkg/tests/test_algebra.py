import pytest

from apolar.algebra.engine import (apolar_inner_product, apply_diff_operator, diff_span_dim, generic_determinant,
                                   generic_hankel_determinant, permanent, permanent_polynomial)
from apolar.algebra.models import ONE, Monomial, SparsePoly
from apolar.shared.errors import DegreeMismatch, SizeLimit
from apolar.shared.scalars import ScalarMode

from conftest import random_poly


def mono(*variables):
    return Monomial.product_of(variables)


def poly(terms, nvars=0):
    return SparsePoly.from_terms(terms, nvars)


def test_monomial_basics():
    m = Monomial.of({1: 2, 3: 1})
    assert m.degree == 3
    assert m.factorial() == 2
    assert not m.is_squarefree()
    assert mono(1, 2).is_squarefree()
    assert mono(1).divides(m) and not mono(2).divides(m)
    assert m.quotient(mono(1)) == mono(1, 3)
    assert str(m) == "x1^2*x3"
    assert Monomial.of({}) == ONE


def test_zero_coefficients_are_dropped():
    p = poly([(mono(1), 1), (mono(1), -1), (mono(2), 3)])
    assert len(p) == 1
    assert p.coefficient(mono(2)) == 3


def test_homogeneous_degree():
    assert poly([(mono(1, 2), 1), (mono(3, 3), 2)]).homogeneous_degree() == 2
    with pytest.raises(DegreeMismatch):
        poly([(mono(1), 1), (mono(1, 2), 1)]).homogeneous_degree()


def test_apply_diff_operator():
    f = poly([(mono(1, 1, 2), 1)])
    assert apply_diff_operator(poly([(mono(1), 1)]), f) == poly([(mono(1, 2), 2)])
    assert apply_diff_operator(poly([(mono(3), 1)]), f) == SparsePoly.zero()


def test_inner_product_weights_by_factorials():
    assert apolar_inner_product(poly([(mono(1, 2), 1)]), poly([(mono(1, 2), 1)])) == 1
    assert apolar_inner_product(poly([(mono(1, 1), 1)]), poly([(mono(1, 1), 1)])) == 2
    assert apolar_inner_product(poly([(mono(1, 1), 3)]), poly([(mono(1, 2), 5)])) == 0
    with pytest.raises(DegreeMismatch):
        apolar_inner_product(poly([(mono(1), 1)]), poly([(mono(1, 2), 1)]))


def test_permanent_of_fixed_matrix():
    A = [[1, 2], [3, 4]]
    assert permanent(A) == 10
    assert apolar_inner_product(poly([(mono(1, 2), 1)]), permanent_polynomial(A)) == 10


def test_permanent_identity_on_random_matrices(rng):
    for _ in range(100):
        n = rng.randint(1, 4)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        f = poly([(mono(*range(1, n + 1)), 1)], n)
        assert apolar_inner_product(f, permanent_polynomial(A)) == permanent(A)


def test_permanent_respects_limit():
    with pytest.raises(SizeLimit):
        permanent([[1] * 4 for _ in range(4)], limit=3)


def test_generic_determinants():
    det2 = generic_determinant(2)
    assert det2 == poly([(mono(1, 4), 1), (mono(2, 3), -1)])
    hank2 = generic_hankel_determinant(2)
    assert hank2 == poly([(mono(1, 3), 1), (mono(2, 2), -1)])


@pytest.mark.parametrize("d,expected", [(2, 6), (3, 20)])
def test_diff_dimension_of_generic_determinant(d, expected):
    assert diff_span_dim(generic_determinant(d)) == expected


@pytest.mark.parametrize("d,expected", [(2, 5), (3, 13)])
def test_diff_dimension_of_generic_hankel_determinant(d, expected):
    assert diff_span_dim(generic_hankel_determinant(d)) == expected


def test_diff_dimension_of_a_monomial():
    # partials of x1 x2 x3 are the 8 square-free monomials dividing it
    assert diff_span_dim(poly([(mono(1, 2, 3), 1)])) == 8


def test_modular_inner_product():
    mode = ScalarMode(5)
    f = SparsePoly.from_terms([(mono(1, 1), 1)], 1, mode)
    g = SparsePoly.from_terms([(mono(1, 1), 3)], 1, mode)
    assert mode.format(apolar_inner_product(f, g)) == "1"


def test_inner_product_is_symmetric_and_factorial_weighted(rng):
    for _ in range(100):
        n, d = rng.randint(1, 4), rng.randint(1, 4)
        f, g = random_poly(rng, n, d), random_poly(rng, n, d)
        value = apolar_inner_product(f, g)
        assert value == apolar_inner_product(g, f)
        assert value == sum(c * g.coefficient(m) * m.factorial() for m, c in f)
        assert value == apply_diff_operator(f, g).coefficient(ONE)


def test_diff_dimension_does_not_grow_when_a_variable_is_zeroed(rng):
    assert diff_span_dim(generic_determinant(2).substitute_zero(1)) == 4
    for _ in range(30):
        n, d = rng.randint(2, 4), rng.randint(1, 3)
        f = random_poly(rng, n, d, terms=5)
        full = diff_span_dim(f)
        for i in range(1, n + 1):
            zeroed = f.substitute_zero(i)
            assert i not in zeroed.support_vars()
            assert diff_span_dim(zeroed) <= full
