# apolar/detection/oracles.py
"""
Brute-force references for the detection problems. They share no code with the
engines beyond the input models, and are only meant for small instances.
"""
from __future__ import annotations
import random
from itertools import combinations
from typing import Any, Optional, Sequence

import networkx as nx
from sympy import prevprime

from .models import DirectedGraph
from ..circuits.engine import expand_circuit
from ..circuits.models import Circuit
from ..shared.linalg import determinant, rank
from ..shared.scalars import EXACT, ScalarMode

SING_PRIME = int(prevprime(1 << 62))


def cycle_oracle(G: DirectedGraph, d: int) -> bool:
    """Simple cycle on exactly d vertices, by enumeration (loops count as 1-cycles)."""
    if d < 1 or d > G.n:
        return False
    return any(len(c) == d for c in nx.simple_cycles(G.to_networkx(), length_bound=d))


def path_oracle(G: DirectedGraph, s: int, t: int, d: int) -> bool:
    """Simple s->t path on exactly d vertices."""
    if s == t or d < 2 or d > G.n:
        return False
    return any(len(p) == d for p in nx.all_simple_paths(G.to_networkx(), s, t, cutoff=d - 1))


def squarefree_oracle(C: Circuit, d: int) -> bool:
    poly = expand_circuit(C)
    return any(mono.is_squarefree() and mono.degree == d for mono, _ in poly.sorted_terms())


def _columns(B: Sequence[Sequence[Any]], cols: Sequence[int], mode: ScalarMode):
    return [{i: mode.convert(B[i][j - 1]) for i in range(len(B)) if B[i][j - 1]} for j in cols]


def matroid_parity_oracle(B: Sequence[Sequence[Any]], parts: Sequence[Sequence[int]],
                          mode: ScalarMode = EXACT) -> bool:
    """Some m = rows/k parts whose column union has full rank k*m."""
    k = len(parts[0])
    m = len(B) // k
    for chosen in combinations(parts, m):
        cols = [j for S in chosen for j in S]
        if rank(_columns(B, cols, mode), mode) == k * m:
            return True
    return False


def matroid_intersection_oracle(matrices: Sequence[Sequence[Sequence[Any]]],
                                mode: ScalarMode = EXACT) -> bool:
    """Some m columns independent in every matrix (m = row count)."""
    m, n = len(matrices[0]), len(matrices[0][0])
    for cols in combinations(range(1, n + 1), m):
        if all(rank(_columns(A, cols, mode), mode) == m for A in matrices):
            return True
    return False


def sing_oracle(matrices: Sequence[Sequence[Sequence[Any]]], trials: int = 20,
                rng: Optional[random.Random] = None, prime: int = SING_PRIME) -> bool:
    """det(sum x_i A_i) at random points mod a large prime; one-sided (false means 'probably singular')."""
    rng = rng or random.Random(0)
    mode = ScalarMode(prime)
    As = [[mode.convert_all(row) for row in A] for A in matrices]
    d = len(As[0])
    for _ in range(trials):
        point = [mode.convert(rng.randrange(prime)) for _ in As]
        M = [[sum((x * A[i][j] for x, A in zip(point, As)), mode.zero) for j in range(d)] for i in range(d)]
        if determinant(M, mode):
            return True
    return False
