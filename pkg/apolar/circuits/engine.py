"""apolar/circuits/engine.py"""
from __future__ import annotations
from typing import Dict, Optional

from .models import Add, Circuit, Const, Input, Mul, MulLin, operands
from ..algebra.models import SparsePoly
from ..shared.config import EngineOptions
from ..shared.errors import SizeLimit
from ..shared.trace import trace


def expand_circuit(circuit: Circuit, options: Optional[EngineOptions] = None) -> SparsePoly:
    """Exact polynomial computed by the circuit, with a cap on intermediate term counts."""
    options = options or EngineOptions()
    limit = options.expand_limit
    mode = circuit.mode
    n = circuit.nvars
    live = circuit.live_gates()
    last = circuit.last_uses(live)
    values: Dict[int, SparsePoly] = {}

    def _cap(projected: int, idx: int) -> None:
        if projected > limit:
            raise SizeLimit(f"gate {idx}: projected {projected} terms exceeds expansion limit {limit}")

    for idx in live:
        g = circuit.gates[idx]
        if isinstance(g, Input):
            val = SparsePoly.variable(g.var, n, mode)
        elif isinstance(g, Const):
            val = SparsePoly.constant(g.value, n, mode)
        elif isinstance(g, Add):
            _cap(len(values[g.a]) + len(values[g.b]), idx)
            val = values[g.a] + values[g.b]
        elif isinstance(g, MulLin):
            _cap(len(g.form) * len(values[g.a]), idx)
            val = g.form.as_poly(n) * values[g.a]
        elif isinstance(g, Mul):
            _cap(len(values[g.a]) * len(values[g.b]), idx)
            val = values[g.a] * values[g.b]
        else:
            raise TypeError(f"unknown gate {g!r}")
        values[idx] = val
        for op in set(operands(g)):
            if last.get(op) == idx and op != circuit.output:
                values.pop(op, None)

    out = values[circuit.output]
    trace("circuit", f"expanded {len(live)} live gates into {len(out)} terms", options.verbose)
    return out.with_nvars(n)
