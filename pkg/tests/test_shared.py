from fractions import Fraction

import pytest

from apolar.shared.combinatorics import (binom, colex_rank, colex_subsets, colex_unrank, deletion_map,
                                         mask_from_subset, merge_sign, subset_from_mask)
from apolar.shared.config import EngineOptions
from apolar.shared.errors import ApolarError, BadDims, CircuitSyntaxError, InputFormatError, SolveFailure
from apolar.shared.linalg import SpanSolver, determinant, independent_columns, rank, solve_square
from apolar.shared.scalars import EXACT, ScalarMode, parse_rational


# --- scalars ---
@pytest.mark.parametrize("text,expected", [("3/4", (3, 4)), ("-2", (-2, 1)), (" 5 / 10 ", (5, 10)), ("+7", (7, 1))])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "abc", "", "1.5", "2/-3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_modulus_must_be_an_odd_prime():
    with pytest.raises(BadDims):
        ScalarMode(4)
    with pytest.raises(BadDims):
        ScalarMode(2)
    assert ScalarMode.of(None) is EXACT
    assert ScalarMode.of(7).label == "mod 7"


def test_exact_format_reduces_fractions():
    assert EXACT.format(EXACT.convert("6/4")) == "3/2"
    assert EXACT.format(EXACT.convert(Fraction(-8, 2))) == "-4"
    assert EXACT.to_fraction(EXACT.convert("1/3")) == Fraction(1, 3)


def test_modular_values_print_as_representatives():
    mode = ScalarMode(7)
    assert mode.format(mode.convert(-1)) == "6"
    assert mode.format(mode.convert("1/2")) == "4"
    with pytest.raises(ZeroDivisionError):
        mode.convert("1/7")


def test_modes_do_not_mix():
    with pytest.raises(ValueError):
        EXACT.require_same(ScalarMode(5))


# --- combinatorics ---
def test_colex_order_and_rank():
    subsets = colex_subsets(4, 2)
    assert subsets == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
    assert [colex_rank(s) for s in subsets] == list(range(6))
    assert all(colex_unrank(r, 2) == s for r, s in enumerate(subsets))


def test_colex_rank_ignores_the_universe():
    # subsets of [3] keep their ranks inside [5]
    assert colex_subsets(5, 2)[:binom(3, 2)] == colex_subsets(3, 2)


def test_binom_edges():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(4, -1) == 0
    assert binom(40, 20) == 137846528820


def test_deletion_map_signs_and_targets():
    src, sgn, dst = deletion_map(3, 2, 2)
    assert list(src) == [0, 2]
    assert list(sgn) == [1, -1]
    assert list(dst) == [0, 2]


@pytest.mark.parametrize("first,second,sign", [((2,), (1,), -1), ((1, 3), (2,), -1),
                                               ((1, 2), (3, 4), 1), ((3, 4), (1, 2), 1)])
def test_merge_sign(first, second, sign):
    assert merge_sign(first, second) == sign


def test_masks():
    assert subset_from_mask(0b101) == (1, 3)
    assert subset_from_mask(0) == ()
    assert mask_from_subset((1, 3)) == 5


# --- linear algebra ---
def _q(x):
    return EXACT.convert(x)


def test_rank_and_independent_columns():
    vectors = [{"a": _q(1), "b": _q(2)}, {"a": _q(2), "b": _q(4)}, {"c": _q(1)}]
    assert independent_columns(vectors, EXACT) == [0, 2]
    assert rank(vectors, EXACT) == 2
    assert rank([], EXACT) == 0


def test_determinant_and_solve():
    assert determinant([[1, 2], [3, 4]], EXACT) == -2
    assert solve_square([[2, 0], [0, 4]], [2, 2], EXACT) == [1, _q("1/2")]
    with pytest.raises(SolveFailure):
        solve_square([[1, 2], [2, 4]], [1, 1], EXACT)


def test_span_solver_coordinates():
    solver = SpanSolver([{"x": _q(1), "y": _q(1)}, {"y": _q(1)}], EXACT)
    assert solver.coordinates({"x": _q(2), "y": _q(5)}) == [2, 3]
    with pytest.raises(SolveFailure):
        solver.coordinates({"z": _q(1)})


# --- errors and config ---
def test_error_hierarchy_and_line_prefix():
    exc = InputFormatError("bad edge", 4)
    assert isinstance(exc, ApolarError) and isinstance(exc, ValueError)
    assert str(exc) == "line 4: bad edge"
    assert CircuitSyntaxError("oops").line is None


def test_options_read_environment(monkeypatch):
    monkeypatch.setenv("APOLAR_HANKEL_MAX_D", "7")
    monkeypatch.setenv("APOLAR_MINOR_MAX_D", "not a number")
    monkeypatch.setenv("APOLAR_MODULUS", "101")
    opts = EngineOptions()
    assert opts.hankel_max_d == 7
    assert opts.minor_max_d == 14
    assert opts.mode.modulus == 101


def test_options_default_to_exact(monkeypatch):
    monkeypatch.delenv("APOLAR_MODULUS", raising=False)
    assert EngineOptions().mode is EXACT
