# apolar/circuits/builders.py
"""
Skew circuits for the generating polynomials behind each detection problem.
All builders emit circuits whose output carries the requested homogeneous degree,
even when the polynomial is zero.
"""
from __future__ import annotations
from collections import defaultdict
from typing import Any, Dict, List, Optional, Sequence, Set

from .models import CircuitBuilder, LinearForm, SkewCircuit
from ..detection.models import DirectedGraph
from ..shared.errors import BadDims, BadPartition
from ..shared.scalars import EXACT, ScalarMode


def _layers(start: int, steps: int, adjacency: Dict[int, Set[int]]) -> List[Set[int]]:
    """layers[t] = vertices at the end of some walk of exactly t steps from start."""
    layers = [{start}]
    for _ in range(steps):
        layers.append({j for i in layers[-1] for j in adjacency[i]})
    return layers


def build_trace_power(G: DirectedGraph, d: int, mode: ScalarMode = EXACT) -> SkewCircuit:
    """tr(A_G^d) where (A_G)_{ij} = x_i for each edge i->j.

    Layered walk-sum per start vertex s: w_0 = e_s, w_{t+1}[j] = sum_{i->j} x_i w_t[i];
    the closed walks contribute w_d[s]. Vertices that cannot lie on a closed walk of
    length d through s at a given layer are pruned.
    """
    G.require_nonempty()
    if d < 1:
        raise BadDims(f"walk length must be >= 1, got {d}")
    succ, pred = G.successors(), G.predecessors()
    b = CircuitBuilder(G.n, mode)
    one = b.const(1)
    closed: List[int] = []

    for s in range(1, G.n + 1):
        fwd = _layers(s, d, succ)
        if s not in fwd[d]:
            continue
        bwd = _layers(s, d, pred)
        w: Dict[int, int] = {s: one}
        for t in range(d):
            useful = fwd[t + 1] & bwd[d - t - 1]
            incoming: Dict[int, List[int]] = defaultdict(list)
            for i in sorted(w):
                targets = succ[i] & useful
                if not targets:
                    continue
                y = b.mulvar(i, w[i])
                for j in sorted(targets):
                    incoming[j].append(y)
            w = {j: b.sum(incoming[j]) for j in sorted(incoming)}
        closed.append(w[s])

    out = b.sum(closed)
    if out is None:
        out = b.zero_of_degree(d)
    return b.build(out)


def build_path_walks(G: DirectedGraph, s: int, t: int, d: int, mode: ScalarMode = EXACT) -> SkewCircuit:
    """Sum over s->t walks visiting d vertices (with repetition) of the product of their variables."""
    G.require_nonempty()
    if not (1 <= s <= G.n and 1 <= t <= G.n):
        raise BadDims(f"endpoints ({s}, {t}) outside vertices 1..{G.n}")
    if d < 1:
        raise BadDims(f"vertex count must be >= 1, got {d}")
    succ, pred = G.successors(), G.predecessors()
    fwd = _layers(s, d - 1, succ)
    bwd = _layers(t, d - 1, pred)
    b = CircuitBuilder(G.n, mode)
    w: Dict[int, int] = {}
    if s in bwd[d - 1]:
        w = {s: b.mulvar(s, b.const(1))}
    for k in range(1, d):
        useful = fwd[k] & bwd[d - 1 - k]
        incoming: Dict[int, List[int]] = defaultdict(list)
        for i in sorted(w):
            for j in sorted(succ[i] & useful):
                incoming[j].append(w[i])
        w = {j: b.mulvar(j, b.sum(incoming[j])) for j in sorted(incoming)}
    out = w.get(t)
    if out is None:
        out = b.zero_of_degree(d)
    return b.build(out)


def validate_partition(parts: Sequence[Sequence[int]]) -> int:
    """Check that parts tile [k * len(parts)] with size-k blocks; return k."""
    if not parts:
        raise BadPartition("partition has no parts")
    k = len(parts[0])
    if k < 1 or any(len(p) != k for p in parts):
        raise BadPartition("all parts must have the same positive size")
    seen: Set[int] = set()
    for p in parts:
        for v in p:
            if v in seen:
                raise BadPartition(f"element {v} appears in two parts")
            seen.add(v)
    if seen != set(range(1, k * len(parts) + 1)):
        raise BadPartition(f"parts do not cover 1..{k * len(parts)} exactly")
    return k


def build_part_product_power(parts: Sequence[Sequence[int]], m: int, mode: ScalarMode = EXACT) -> SkewCircuit:
    """g = (sum_{S in parts} prod_{i in S} x_i)^m as m stages of variable chains."""
    k = validate_partition(parts)
    if m < 1:
        raise BadDims(f"power must be >= 1, got {m}")
    b = CircuitBuilder(k * len(parts), mode)
    prev = b.const(1)
    for _ in range(m):
        terms = []
        for S in parts:
            g = prev
            for v in S:
                g = b.mulvar(v, g)
            terms.append(g)
        prev = b.sum(terms)
    return b.build(prev)


def build_row_product(A: Sequence[Sequence[Any]], mode: ScalarMode = EXACT) -> SkewCircuit:
    """P_A = prod_i (sum_j A_ij x_j)."""
    if not A or any(len(row) != len(A[0]) for row in A):
        raise BadDims("row product needs a nonempty rectangular matrix")
    b = CircuitBuilder(len(A[0]), mode)
    g = b.const(1)
    for row in A:
        g = b.mullin(LinearForm.of({j + 1: c for j, c in enumerate(row)}, mode), g)
    return b.build(g)


def generic_entries(d: int, mode: ScalarMode = EXACT) -> List[List[LinearForm]]:
    """Entry (i, j) is the variable x_{(i-1)d + j}."""
    return [[LinearForm.variable(i * d + j + 1, mode) for j in range(d)] for i in range(d)]


def build_mv_determinant(d: int, entries: Optional[Sequence[Sequence[LinearForm]]] = None,
                         nvars: Optional[int] = None, mode: ScalarMode = EXACT) -> SkewCircuit:
    """Determinant as a sum over clow sequences.

    A clow with head h is a closed walk starting and ending at h whose other vertices
    exceed h; a clow sequence has strictly increasing heads and total length d and
    contributes (-1)^(d + #clows) times its edge weights. Nodes (h, u) of layer i hold
    the signed weight of partial sequences of i edges currently at u in a clow headed by
    h. Closing a clow multiplies by -1, and the source carries (-1)^d.
    """
    if d < 1:
        raise BadDims(f"determinant size must be >= 1, got {d}")
    if entries is None:
        entries = generic_entries(d, mode)
    if len(entries) != d or any(len(row) != d for row in entries):
        raise BadDims(f"entries must be {d}x{d}")
    n = nvars if nvars is not None else max((f.max_var for row in entries for f in row), default=1)
    b = CircuitBuilder(max(n, 1), mode)

    def a(u: int, v: int) -> LinearForm:
        return entries[u - 1][v - 1]

    src = b.const(-1 if d % 2 else 1)
    layer: Dict[tuple, int] = {(h, h): src for h in range(1, d + 1)}
    for _ in range(d - 1):
        incoming: Dict[tuple, List[int]] = defaultdict(list)
        for (h, u) in sorted(layer):
            g = layer[(h, u)]
            for v in range(h + 1, d + 1):
                if a(u, v):
                    incoming[(h, v)].append(b.mullin(a(u, v), g))
            if a(u, h) and h < d:
                closed = b.mullin(a(u, h).scale(-1), g)
                for h2 in range(h + 1, d + 1):
                    incoming[(h2, h2)].append(closed)
        layer = {key: b.sum(incoming[key]) for key in sorted(incoming)}

    finals = [b.mullin(a(u, h).scale(-1), layer[(h, u)]) for (h, u) in sorted(layer) if a(u, h)]
    out = b.sum(finals)
    if out is None:
        out = b.zero_of_degree(d)
    return b.build(out)
