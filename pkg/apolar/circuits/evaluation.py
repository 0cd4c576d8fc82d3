# apolar/circuits/evaluation.py
"""
Evaluate a skew circuit C as the differential operator C(d/dx) applied to a fixed
polynomial f, gate by gate, in some finite-dimensional space containing Diff(f).

Each gate v stores C_v(d) o f:
  Input x_l      -> D_l(f)
  Const c        -> c * f
  Add(a, b)      -> state_a + state_b
  MulLin(l, a)   -> sum_v c_v D_v(state_a)
For a circuit of degree deg f the output lands in the constant part, which is <f, C>.
"""
from __future__ import annotations
from typing import Dict, Protocol, TypeVar

from .models import Add, Circuit, Const, Input, Mul, MulLin, operands
from ..shared.errors import NonSkew
from ..shared.scalars import Scalar
from ..shared.trace import trace

S = TypeVar("S")


class DifferentialSpace(Protocol[S]):
    def start(self) -> S: ...
    def derivative(self, state: S, var: int) -> S: ...
    def scalar(self, state: S) -> Scalar: ...


def evaluate_operator(circuit: Circuit, space: "DifferentialSpace", tag: str = "engine",
                      verbose: bool = False) -> Scalar:
    """Apply the circuit's polynomial, read as an operator, to space.start(); return the scalar part."""
    circuit.require_skew()
    live = circuit.live_gates()
    last = circuit.last_uses(live)
    base = space.start()
    values: Dict[int, object] = {}
    derivative_calls = 0

    for step, idx in enumerate(live):
        g = circuit.gates[idx]
        if isinstance(g, Input):
            val = space.derivative(base, g.var)
            derivative_calls += 1
        elif isinstance(g, Const):
            val = base.scale(g.value)
        elif isinstance(g, Add):
            val = values[g.a] + values[g.b]
        elif isinstance(g, MulLin):
            src = values[g.a]
            val = None
            for v, c in g.form.coeffs:
                term = space.derivative(src, v)
                derivative_calls += 1
                if c != 1:
                    term = term.scale(c)
                val = term if val is None else val + term
            if val is None:  # zero form
                val = src.scale(0)
        elif isinstance(g, Mul):
            raise NonSkew(f"gate {idx} is a general product")
        else:
            raise TypeError(f"unknown gate {g!r}")
        values[idx] = val
        for op in set(operands(g)):
            if last.get(op) == idx and op != circuit.output:
                values.pop(op, None)
        if verbose and (step + 1) % 500 == 0:
            trace(tag, f"{step + 1}/{len(live)} gates, {len(values)} states held", verbose)

    trace(tag, f"evaluated {len(live)} gates with {derivative_calls} derivative steps", verbose)
    return space.scalar(values[circuit.output])
