# apolar/circuits/parser.py
"""
Line-oriented SSA text format:

    # comment
    nvars 3                       (optional; default = largest variable used, larger indices rejected)
    g1 = var 1
    g2 = const 3/4
    g3 = add g1 g1
    g4 = mullin 1:1,-2:3 g3       (coefficient:variable pairs)
    g5 = mul g1 g4                (accepted when one operand is a `var` gate)
    out g5                        (optional; default = last gate)
"""
from __future__ import annotations
import re
from typing import Dict, List, Optional, Tuple

from .models import Add, Circuit, Const, Gate, Input, LinearForm, Mul, MulLin, SkewCircuit
from ..shared.errors import CircuitSyntaxError, DegreeMismatch, DuplicateGateId, NonSkewMul, UndefinedGate
from ..shared.scalars import EXACT, ScalarMode, parse_rational

_GATE_RE = re.compile(r"^g(\d+)\s*=\s*(var|const|add|mullin|mul)\b\s*(.*)$")
_OUT_RE = re.compile(r"^out\s+g(\d+)$")
_NVARS_RE = re.compile(r"^nvars\s+(\d+)$")
_REF_RE = re.compile(r"^g(\d+)$")


def _ref(token: str, ids: Dict[int, int], lineno: int) -> int:
    m = _REF_RE.match(token)
    if not m:
        raise CircuitSyntaxError(f"expected a gate reference, got {token!r}", lineno)
    gid = int(m.group(1))
    if gid not in ids:
        raise UndefinedGate(f"g{gid} is not defined yet", lineno)
    return ids[gid]


def _form(token: str, mode: ScalarMode, lineno: int) -> LinearForm:
    pairs: List[Tuple[int, object]] = []
    for chunk in token.split(","):
        if ":" not in chunk:
            raise CircuitSyntaxError(f"linear form term {chunk!r} is not <coef>:<var>", lineno)
        coef, var = chunk.rsplit(":", 1)
        try:
            num, den = parse_rational(coef)
            v = int(var)
        except ValueError as exc:
            raise CircuitSyntaxError(str(exc), lineno) from exc
        if v < 1:
            raise CircuitSyntaxError(f"variable index {v} must be >= 1", lineno)
        pairs.append((v, mode.convert(f"{num}/{den}")))
    return LinearForm.of(pairs, mode)


def parse_circuit(text: str, mode: ScalarMode = EXACT, allow_general: bool = False) -> Circuit:
    """Parse the SSA format into a validated circuit (SkewCircuit unless allow_general)."""
    gates: List[Gate] = []
    degrees: List[int] = []
    lines_of: List[int] = []
    ids: Dict[int, int] = {}
    out_ref: Optional[Tuple[int, int]] = None
    declared_nvars: Optional[int] = None
    max_var = 0
    var_uses: List[Tuple[int, int]] = []  # (variable, line)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _NVARS_RE.match(line)
        if m:
            declared_nvars = int(m.group(1))
            continue
        m = _OUT_RE.match(line)
        if m:
            out_ref = (int(m.group(1)), lineno)
            continue
        m = _GATE_RE.match(line)
        if not m:
            raise CircuitSyntaxError(f"cannot parse {line!r}", lineno)
        gid, op, rest = int(m.group(1)), m.group(2), m.group(3).split()
        if gid in ids:
            raise DuplicateGateId(f"g{gid} is defined twice", lineno)

        if op == "var":
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise CircuitSyntaxError("var takes one variable index >= 1", lineno)
            gate, deg = Input(int(rest[0])), 1
            max_var = max(max_var, gate.var)
            var_uses.append((gate.var, lineno))
        elif op == "const":
            if len(rest) != 1:
                raise CircuitSyntaxError("const takes one rational", lineno)
            try:
                num, den = parse_rational(rest[0])
            except ValueError as exc:
                raise CircuitSyntaxError(str(exc), lineno) from exc
            gate, deg = Const(mode.convert(f"{num}/{den}")), 0
        elif op == "add":
            if len(rest) != 2:
                raise CircuitSyntaxError("add takes two gates", lineno)
            a, b = _ref(rest[0], ids, lineno), _ref(rest[1], ids, lineno)
            if degrees[a] != degrees[b]:
                raise DegreeMismatch(f"line {lineno}: adding degree {degrees[a]} to degree {degrees[b]}")
            gate, deg = Add(a, b), degrees[a]
        elif op == "mullin":
            if len(rest) != 2:
                raise CircuitSyntaxError("mullin takes a linear form and a gate", lineno)
            form = _form(rest[0], mode, lineno)
            a = _ref(rest[1], ids, lineno)
            gate, deg = MulLin(form, a), degrees[a] + 1
            max_var = max(max_var, form.max_var)
            var_uses.append((form.max_var, lineno))
        else:  # mul
            if len(rest) != 2:
                raise CircuitSyntaxError("mul takes two gates", lineno)
            a, b = _ref(rest[0], ids, lineno), _ref(rest[1], ids, lineno)
            if isinstance(gates[a], Input):
                gate = MulLin(LinearForm.variable(gates[a].var, mode), b)
            elif isinstance(gates[b], Input):
                gate = MulLin(LinearForm.variable(gates[b].var, mode), a)
            elif allow_general:
                gate = Mul(a, b)
            else:
                raise NonSkewMul(f"g{gid} multiplies two non-variable gates", lineno)
            deg = degrees[a] + degrees[b]

        ids[gid] = len(gates)
        gates.append(gate)
        degrees.append(deg)
        lines_of.append(lineno)

    if not gates:
        raise CircuitSyntaxError("no gates defined", None)
    if out_ref is not None:
        gid, lineno = out_ref
        if gid not in ids:
            raise UndefinedGate(f"output g{gid} is not defined", lineno)
        output = ids[gid]
    else:
        output = len(gates) - 1

    if declared_nvars is not None:
        for v, lineno in var_uses:
            if v > declared_nvars:
                raise CircuitSyntaxError(f"x{v} exceeds the declared nvars {declared_nvars}", lineno)
    nvars = max(declared_nvars or 0, max_var, 1)
    cls = Circuit if allow_general else SkewCircuit
    return cls(tuple(gates), output, nvars, mode)


def serialize_circuit(circuit: Circuit) -> str:
    lines = [f"nvars {circuit.nvars}"]
    fmt = circuit.mode.format
    for idx, g in enumerate(circuit.gates, start=1):
        if isinstance(g, Input):
            body = f"var {g.var}"
        elif isinstance(g, Const):
            body = f"const {fmt(g.value)}"
        elif isinstance(g, Add):
            body = f"add g{g.a + 1} g{g.b + 1}"
        elif isinstance(g, MulLin):
            body = f"mullin {g.form.format()} g{g.a + 1}"
        else:
            body = f"mul g{g.a + 1} g{g.b + 1}"
        lines.append(f"g{idx} = {body}")
    lines.append(f"out g{circuit.output + 1}")
    return "\n".join(lines) + "\n"
