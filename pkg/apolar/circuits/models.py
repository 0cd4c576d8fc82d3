# apolar/circuits/models.py
"""
Arithmetic circuits in SSA form. Gate i may only reference gates j < i, so the gate
list is a topological order. Each gate carries its homogeneous degree, computed when
the circuit is built (Input 1, Const 0, Add needs equal degrees, MulLin +1, Mul adds).

A circuit is skew when it has no general Mul gate: every product is MulLin, a linear
form times a gate.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..shared.errors import DegreeMismatch, NonSkew, UndefinedGate
from ..shared.scalars import EXACT, Scalar, ScalarMode


@dataclass(frozen=True)
class LinearForm:
    """sum_v c_v x_v, stored as sorted (variable, coefficient) pairs without zeros."""
    coeffs: Tuple[Tuple[int, Scalar], ...] = ()
    mode: ScalarMode = EXACT

    @staticmethod
    def of(coeffs: Union[Mapping[int, Any], Iterable[Tuple[int, Any]]], mode: ScalarMode = EXACT) -> "LinearForm":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[int, Scalar] = {}
        for v, c in items:
            if int(v) < 1:
                raise ValueError(f"variable index must be >= 1, got {v}")
            acc[int(v)] = acc.get(int(v), mode.zero) + mode.convert(c)
        return LinearForm(tuple(sorted((v, c) for v, c in acc.items() if c)), mode)

    @staticmethod
    def variable(i: int, mode: ScalarMode = EXACT) -> "LinearForm":
        return LinearForm(((int(i), mode.one),), mode)

    @staticmethod
    def zero(mode: ScalarMode = EXACT) -> "LinearForm":
        return LinearForm((), mode)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.coeffs)

    @property
    def max_var(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def coefficient(self, i: int) -> Scalar:
        for v, c in self.coeffs:
            if v == i:
                return c
        return self.mode.zero

    def scale(self, c: Any) -> "LinearForm":
        c = self.mode.convert(c)
        return LinearForm(tuple((v, c * a) for v, a in self.coeffs if c * a), self.mode)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        self.mode.require_same(other.mode)
        return LinearForm.of(list(self.coeffs) + list(other.coeffs), self.mode)

    def as_poly(self, nvars: int = 0):
        from ..algebra.models import SparsePoly
        return SparsePoly.linear(dict(self.coeffs), max(nvars, self.max_var), self.mode)

    def format(self) -> str:
        """Text form used by the circuit format: `c1:v1,c2:v2`."""
        return ",".join(f"{self.mode.format(c)}:{v}" for v, c in self.coeffs) or "0:1"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{self.mode.format(c)}*x{v}" for v, c in self.coeffs)


# --- gates ---
@dataclass(frozen=True)
class Input:
    var: int


@dataclass(frozen=True)
class Const:
    value: Scalar


@dataclass(frozen=True)
class Add:
    a: int
    b: int


@dataclass(frozen=True)
class MulLin:
    form: LinearForm
    a: int


@dataclass(frozen=True)
class Mul:
    """General product of two gates; never accepted by the differential engines."""
    a: int
    b: int


Gate = Union[Input, Const, Add, MulLin, Mul]


def operands(gate: Gate) -> Tuple[int, ...]:
    if isinstance(gate, (Add, Mul)):
        return (gate.a, gate.b)
    if isinstance(gate, MulLin):
        return (gate.a,)
    return ()


@dataclass(frozen=True, eq=False)
class Circuit:
    gates: Tuple[Gate, ...]
    output: int
    nvars: int
    mode: ScalarMode = EXACT
    degrees: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.gates:
            raise UndefinedGate("circuit has no gates")
        if not 0 <= self.output < len(self.gates):
            raise UndefinedGate(f"output gate {self.output} does not exist")
        degs: List[int] = []
        for idx, gate in enumerate(self.gates):
            for op in operands(gate):
                if not 0 <= op < idx:
                    raise UndefinedGate(f"gate {idx} references gate {op} before its definition")
            if isinstance(gate, Input):
                if not 1 <= gate.var <= self.nvars:
                    raise UndefinedGate(f"gate {idx}: variable x{gate.var} outside 1..{self.nvars}")
                degs.append(1)
            elif isinstance(gate, Const):
                degs.append(0)
            elif isinstance(gate, Add):
                da, db = degs[gate.a], degs[gate.b]
                if da != db:
                    raise DegreeMismatch(f"gate {idx} adds degree {da} to degree {db}")
                degs.append(da)
            elif isinstance(gate, MulLin):
                if gate.form.max_var > self.nvars:
                    raise UndefinedGate(f"gate {idx}: form uses x{gate.form.max_var} beyond nvars={self.nvars}")
                degs.append(degs[gate.a] + 1)
            elif isinstance(gate, Mul):
                degs.append(degs[gate.a] + degs[gate.b])
            else:
                raise TypeError(f"unknown gate {gate!r}")
        object.__setattr__(self, "degrees", tuple(degs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return (self.gates, self.output, self.nvars, self.mode) == (other.gates, other.output, other.nvars, other.mode)

    __hash__ = None  # type: ignore[assignment]

    @property
    def degree(self) -> int:
        return self.degrees[self.output]

    @property
    def size(self) -> int:
        return len(self.gates)

    @property
    def is_skew(self) -> bool:
        return not any(isinstance(g, Mul) for g in self.gates)

    def require_skew(self) -> "Circuit":
        for idx, g in enumerate(self.gates):
            if isinstance(g, Mul):
                raise NonSkew(f"gate {idx} is a general product; only skew circuits can be differentiated")
        return self

    def live_gates(self) -> List[int]:
        """Indices of gates the output depends on, ascending."""
        needed = [False] * len(self.gates)
        needed[self.output] = True
        for idx in range(self.output, -1, -1):
            if needed[idx]:
                for op in operands(self.gates[idx]):
                    needed[op] = True
        return [i for i, flag in enumerate(needed) if flag]

    def last_uses(self, live: Optional[Sequence[int]] = None) -> Dict[int, int]:
        """gate -> index of the last live gate reading it (the output maps to itself)."""
        live = self.live_gates() if live is None else live
        last: Dict[int, int] = {self.output: self.output}
        for idx in live:
            for op in operands(self.gates[idx]):
                last[op] = max(last.get(op, idx), idx)
        return last


class SkewCircuit(Circuit):
    """A Circuit that validated as skew at construction."""

    def __post_init__(self):
        super().__post_init__()
        self.require_skew()


class CircuitBuilder:
    """Incremental construction; every method returns the new gate's index."""

    def __init__(self, nvars: int, mode: ScalarMode = EXACT):
        self.nvars = nvars
        self.mode = mode
        self.gates: List[Gate] = []
        self._degrees: List[int] = []
        self._inputs: Dict[int, int] = {}
        self._consts: Dict[Scalar, int] = {}

    def _push(self, gate: Gate, degree: int) -> int:
        self.gates.append(gate)
        self._degrees.append(degree)
        return len(self.gates) - 1

    def degree(self, gate: int) -> int:
        return self._degrees[gate]

    def var(self, i: int) -> int:
        if i not in self._inputs:
            self._inputs[i] = self._push(Input(i), 1)
        return self._inputs[i]

    def const(self, value: Any) -> int:
        c = self.mode.convert(value)
        if c not in self._consts:
            self._consts[c] = self._push(Const(c), 0)
        return self._consts[c]

    def add(self, a: int, b: int) -> int:
        return self._push(Add(a, b), self._degrees[a])

    def mullin(self, form: LinearForm, a: int) -> int:
        return self._push(MulLin(form, a), self._degrees[a] + 1)

    def mulvar(self, i: int, a: int) -> int:
        return self.mullin(LinearForm.variable(i, self.mode), a)

    def mul(self, a: int, b: int) -> int:
        return self._push(Mul(a, b), self._degrees[a] + self._degrees[b])

    def sum(self, items: Sequence[int]) -> Optional[int]:
        """Left-to-right chain of Add gates; None for an empty sum."""
        if not items:
            return None
        acc = items[0]
        for g in items[1:]:
            acc = self.add(acc, g)
        return acc

    def zero_of_degree(self, d: int) -> int:
        """The zero polynomial carrying degree d (Const 0 times x1, d times)."""
        g = self.const(0)
        for _ in range(d):
            g = self.mulvar(1, g)
        return g

    def build(self, output: Optional[int] = None, skew: bool = True) -> Circuit:
        out = len(self.gates) - 1 if output is None else output
        cls = SkewCircuit if skew else Circuit
        return cls(tuple(self.gates), out, max(self.nvars, 1), self.mode)
