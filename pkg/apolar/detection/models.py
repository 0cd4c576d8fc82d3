"""apolar/detection/models.py"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..shared.errors import BadDims, EmptyGraph
from ..shared.scalars import EXACT, Scalar, ScalarMode


@dataclass(frozen=True)
class DirectedGraph:
    """Vertices 1..n; parallel edges collapse, loops are allowed."""
    n: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise BadDims("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise BadDims(f"edge ({u}, {v}) outside vertices 1..{self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "DirectedGraph":
        return DirectedGraph(n, frozenset((int(u), int(v)) for u, v in edges))

    @staticmethod
    def cycle(n: int) -> "DirectedGraph":
        return DirectedGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @staticmethod
    def path(n: int) -> "DirectedGraph":
        return DirectedGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])

    def require_nonempty(self) -> "DirectedGraph":
        if self.n < 1:
            raise EmptyGraph("graph has no vertices")
        return self

    def successors(self) -> Dict[int, Set[int]]:
        succ: Dict[int, Set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            succ[u].add(v)
        return succ

    def predecessors(self) -> Dict[int, Set[int]]:
        pred: Dict[int, Set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            pred[v].add(u)
        return pred

    def with_edge(self, u: int, v: int) -> "DirectedGraph":
        return DirectedGraph(self.n, self.edges | {(u, v)})

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class MatroidInstance:
    """Linear matroid represented by the columns of B (rows x cols), plus an optional partition."""
    B: Tuple[Tuple[Scalar, ...], ...]
    parts: Tuple[Tuple[int, ...], ...] = ()
    mode: ScalarMode = EXACT

    @staticmethod
    def of(B: Sequence[Sequence[Any]], parts: Sequence[Sequence[int]] = (), mode: ScalarMode = EXACT) -> "MatroidInstance":
        rows = tuple(tuple(mode.convert_all(row)) for row in B)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise BadDims("ragged matrix")
        return MatroidInstance(rows, tuple(tuple(int(v) for v in p) for p in parts), mode)

    @property
    def rows(self) -> int:
        return len(self.B)

    @property
    def cols(self) -> int:
        return len(self.B[0]) if self.B else 0


@dataclass
class DetectionRun:
    """One inner-product evaluation behind a decision."""
    value: Scalar
    engine: str
    basis_dim: int
    gates: int
    mode: ScalarMode = EXACT
    problem: str = ""
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def decision(self) -> bool:
        return bool(self.value)
