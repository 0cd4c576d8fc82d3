import pytest

from apolar.algebra.engine import generic_determinant, permanent_polynomial
from apolar.algebra.models import Monomial, SparsePoly
from apolar.circuits.builders import (build_mv_determinant, build_part_product_power, build_path_walks,
                                      build_row_product, build_trace_power, validate_partition)
from apolar.circuits.engine import expand_circuit
from apolar.circuits.models import Circuit, CircuitBuilder, Const, Input, LinearForm, Mul, SkewCircuit
from apolar.circuits.parser import parse_circuit, serialize_circuit
from apolar.detection.models import DirectedGraph
from apolar.shared.config import EngineOptions
from apolar.shared.errors import (BadPartition, CircuitSyntaxError, DegreeMismatch, DuplicateGateId, NonSkew,
                                  NonSkewMul, SizeLimit, UndefinedGate)


def mono(*variables):
    return Monomial.product_of(variables)


def poly(terms, nvars=0):
    return SparsePoly.from_terms(terms, nvars)


def test_fixture_circuit_expands(fixtures_dir):
    C = parse_circuit((fixtures_dir / "circuit.txt").read_text())
    assert C.nvars == 5 and C.degree == 3 and C.is_skew
    expected = poly([(mono(1, 3, 5), 1), (mono(3, 3, 3), 1), (mono(2, 3, 4), 2)])
    assert expand_circuit(C) == expected


def test_fixture_circuit_reserializes(fixtures_dir):
    C = parse_circuit((fixtures_dir / "circuit.txt").read_text())
    assert parse_circuit(serialize_circuit(C)) == C


def test_parser_defaults_and_mul_sugar():
    C = parse_circuit("g1 = var 2\ng2 = const 3\ng3 = mul g1 g2\n")
    assert C.nvars == 2
    assert expand_circuit(C) == poly([(mono(2), 3)])


@pytest.mark.parametrize("text,error,line", [
    ("g1 = var 1\ng2 = add g1 g3\n", UndefinedGate, 2),
    ("g1 = var 1\ng1 = var 2\n", DuplicateGateId, 2),
    ("g1 = var 1\ng2 = mullin 1:1 g1\ng3 = mul g2 g2\n", NonSkewMul, 3),
    ("g1 = var 1\ng2 = frob g1\n", CircuitSyntaxError, 2),
    ("g1 = var 0\n", CircuitSyntaxError, 1),
    ("g1 = var 1\nout g7\n", UndefinedGate, 2),
    ("nvars 2\ng1 = var 3\n", CircuitSyntaxError, 2),
    ("g1 = const 1\ng2 = mullin 1:1,2:4 g1\nnvars 3\n", CircuitSyntaxError, 2),
])
def test_parser_errors_name_the_line(text, error, line):
    with pytest.raises(error) as info:
        parse_circuit(text)
    assert info.value.line == line


def test_parser_rejects_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        parse_circuit("g1 = var 1\ng2 = const 1\ng3 = add g1 g2\n")


def test_general_products_only_on_request():
    text = "g1 = var 1\ng2 = mullin 1:2 g1\ng3 = mul g2 g2\n"
    C = parse_circuit(text, allow_general=True)
    assert not C.is_skew and C.degree == 4
    assert expand_circuit(C) == poly([(mono(1, 1, 2, 2), 1)])
    with pytest.raises(NonSkew):
        C.require_skew()


def test_circuit_validates_references():
    with pytest.raises(UndefinedGate):
        Circuit((Input(1), Mul(0, 1)), 1, 1)
    with pytest.raises(NonSkew):
        SkewCircuit((Input(1), Mul(0, 0)), 1, 1)


def test_live_gates_skip_dead_code():
    b = CircuitBuilder(2)
    x1 = b.var(1)
    b.var(2)
    out = b.mulvar(1, x1)
    C = b.build(out)
    assert C.live_gates() == [x1, out]


def test_expansion_cap():
    b = CircuitBuilder(6)
    g = b.const(1)
    form = LinearForm.of({v: 1 for v in range(1, 7)})
    for _ in range(4):
        g = b.mullin(form, g)
    with pytest.raises(SizeLimit):
        expand_circuit(b.build(g), EngineOptions(expand_limit=50))


def test_trace_power_of_triangle():
    C = build_trace_power(DirectedGraph.cycle(3), 3)
    assert expand_circuit(C) == poly([(mono(1, 2, 3), 3)])


def test_trace_power_without_closed_walks_is_zero_of_right_degree():
    C = build_trace_power(DirectedGraph.path(3), 2)
    assert C.degree == 2
    assert not expand_circuit(C)


def test_path_walks():
    C = build_path_walks(DirectedGraph.path(3), 1, 3, 3)
    assert expand_circuit(C) == poly([(mono(1, 2, 3), 1)])
    assert not expand_circuit(build_path_walks(DirectedGraph.path(3), 3, 1, 3))


def test_row_product_is_permanent_polynomial():
    A = [[1, 2, 0], [3, -1, 4], [0, 5, 6]]
    assert expand_circuit(build_row_product(A)) == permanent_polynomial(A)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_mv_determinant_matches_leibniz(d):
    assert expand_circuit(build_mv_determinant(d)) == generic_determinant(d)


def test_trace_power_gate_count(rng):
    for _ in range(20):
        n = rng.randint(1, 6)
        G = DirectedGraph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                                         if rng.random() < 0.4])
        m = len(G.edges)
        for d in range(1, n + 1):
            assert build_trace_power(G, d).size <= d * n * (n + m) + n + d + 3, (sorted(G.edges), d)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_mv_determinant_gate_count(d):
    assert build_mv_determinant(d).size <= 4 * d ** 4 + 3 * d * d + 2


@pytest.mark.parametrize("k,p,m", [(1, 3, 2), (2, 2, 3), (3, 2, 2)])
def test_part_product_power_gate_count(k, p, m):
    parts = [list(range(i * k + 1, (i + 1) * k + 1)) for i in range(p)]
    assert build_part_product_power(parts, m).size <= m * p * (k + 1) + 1


def test_part_product_power():
    C = build_part_product_power([[1, 2], [3, 4]], 2)
    expected = poly([(mono(1, 1, 2, 2), 1), (mono(1, 2, 3, 4), 2), (mono(3, 3, 4, 4), 1)])
    assert expand_circuit(C) == expected


@pytest.mark.parametrize("parts", [[], [[1, 2], [2, 3]], [[1], [3]], [[1, 2], [3]]])
def test_bad_partitions(parts):
    with pytest.raises(BadPartition):
        validate_partition(parts)


def test_builder_reuses_inputs_and_constants():
    b = CircuitBuilder(2)
    assert b.var(1) == b.var(1)
    assert b.const("2/4") == b.const("1/2")
    assert isinstance(b.gates[b.const(0)], Const)
