# apolar/detection/engine.py
"""
Each decision reduces to one apolar inner product <det X, g> with the positivity of
Cauchy-Binet weights doing the work: X = V diag(x) V^T (Vandermonde-Hankel) for the
graph and square-free problems, X = sum x_i A_i for SING, X = B diag(x) B^T for matroids.
The `evaluate_*` functions return the full DetectionRun; `detect_*` / `*_decide` keep
only the decision.
"""
from __future__ import annotations
from dataclasses import replace
from typing import Any, Optional, Sequence

from .models import DetectionRun, DirectedGraph, MatroidInstance
from ..circuits.builders import (build_mv_determinant, build_part_product_power, build_path_walks,
                                 build_trace_power, validate_partition)
from ..circuits.engine import expand_circuit
from ..circuits.models import Circuit
from ..hankel.engine import hankeldiff_evaluate, vandermonde_hankel
from ..hankel.models import maximal_minor_count
from ..minors.engine import gendiff_evaluate
from ..minors.models import SymbolicMatrix, minor_basis_size
from ..shared.config import EngineOptions
from ..shared.errors import BadDims, DegreeMismatch, NegativeCoefficient, SameEndpoints, SizeLimit
from ..shared.trace import trace, warn

ENGINES = ("hankel", "general")


def _check_engine(engine: str) -> str:
    engine = (engine or "hankel").strip().lower()
    if engine not in ENGINES:
        raise BadDims(f"unknown engine {engine!r} (expected one of {', '.join(ENGINES)})")
    return engine


def _vandermonde_run(C: Circuit, n: int, d: int, engine: str, problem: str,
                     options: EngineOptions, /, **details: Any) -> DetectionRun:
    """<det(V diag(x) V^T), g> on whichever engine was asked for."""
    mode = options.mode
    H = vandermonde_hankel(n, d, mode)
    if engine == "hankel":
        value = hankeldiff_evaluate(H, C, options)
        basis = maximal_minor_count(d)
    else:
        value = gendiff_evaluate(H.hankel_matrix(), C, options)
        basis = minor_basis_size(d)
    run = DetectionRun(value, engine, basis, C.size, mode, problem, dict(details))
    trace("detect", f"{problem}: value {mode.format(value)} ({engine}, basis {basis}, {C.size} gates)",
          options.verbose)
    return run


def _trivial_run(problem: str, engine: str, options: EngineOptions, reason: str) -> DetectionRun:
    trace("detect", f"{problem}: {reason}", options.verbose)
    return DetectionRun(options.mode.zero, engine, 0, 0, options.mode, problem, {"reason": reason})


# --- cycles and paths ---
def evaluate_cycle(G: DirectedGraph, d: int, engine: str = "hankel",
                   options: Optional[EngineOptions] = None) -> DetectionRun:
    options = options or EngineOptions()
    engine = _check_engine(engine)
    G.require_nonempty()
    if d < 1:
        raise BadDims(f"cycle length must be >= 1, got {d}")
    if d > G.n:
        return _trivial_run("cycle", engine, options, f"d={d} exceeds {G.n} vertices")
    C = build_trace_power(G, d, options.mode)
    return _vandermonde_run(C, G.n, d, engine, "cycle", options, n=G.n, d=d)


def detect_cycle(G: DirectedGraph, d: int, engine: str = "hankel",
                 options: Optional[EngineOptions] = None) -> bool:
    """True iff G has a simple directed cycle on exactly d vertices."""
    return evaluate_cycle(G, d, engine, options).decision


def evaluate_path(G: DirectedGraph, s: int, t: int, d: int, engine: str = "hankel",
                  options: Optional[EngineOptions] = None) -> DetectionRun:
    options = options or EngineOptions()
    engine = _check_engine(engine)
    G.require_nonempty()
    if s == t:
        raise SameEndpoints(f"path endpoints coincide ({s})")
    if not (1 <= s <= G.n and 1 <= t <= G.n):
        raise BadDims(f"endpoints ({s}, {t}) outside vertices 1..{G.n}")
    if d < 2:
        raise BadDims(f"a path needs at least 2 vertices, got d={d}")
    if d > G.n:
        return _trivial_run("path", engine, options, f"d={d} exceeds {G.n} vertices")
    C = build_path_walks(G, s, t, d, options.mode)
    return _vandermonde_run(C, G.n, d, engine, "path", options, n=G.n, d=d, s=s, t=t)


def detect_path(G: DirectedGraph, s: int, t: int, d: int, engine: str = "hankel",
                options: Optional[EngineOptions] = None) -> bool:
    """True iff G has a simple s->t path on exactly d vertices."""
    return evaluate_path(G, s, t, d, engine, options).decision


# --- square-free monomials ---
def _check_nonnegative(C: Circuit, options: EngineOptions) -> None:
    """Expand C when small enough and reject negative coefficients; skip otherwise."""
    if not options.check_nonnegative or not options.mode.is_exact:
        return
    capped = replace(options, expand_limit=options.nonnegative_check_limit)
    try:
        poly = expand_circuit(C, capped)
    except SizeLimit:
        warn("detect", f"nonnegativity not checked: expansion exceeds {options.nonnegative_check_limit} terms")
        return
    for mono, c in poly.sorted_terms():
        if c < 0:
            raise NegativeCoefficient(f"coefficient of {mono} is {options.mode.format(c)}")


def evaluate_squarefree(C: Circuit, d: int, n: int, engine: str = "hankel",
                        options: Optional[EngineOptions] = None) -> DetectionRun:
    options = options or EngineOptions()
    engine = _check_engine(engine)
    options.mode.require_same(C.mode)
    if d < 1:
        raise BadDims(f"degree must be >= 1, got {d}")
    if C.degree != d:
        raise DegreeMismatch(f"circuit has degree {C.degree}, expected {d}")
    if C.nvars > n:
        raise BadDims(f"circuit uses {C.nvars} variables, only {n} declared")
    _check_nonnegative(C, options)
    if n < d:
        return _trivial_run("squarefree", engine, options, f"{n} variables cannot carry a square-free degree-{d} monomial")
    return _vandermonde_run(C, n, d, engine, "squarefree", options, n=n, d=d)


def detect_squarefree(C: Circuit, d: int, n: int, engine: str = "hankel",
                      options: Optional[EngineOptions] = None) -> bool:
    """True iff the (nonnegative) polynomial of C has a square-free monomial of degree d."""
    return evaluate_squarefree(C, d, n, engine, options).decision


# --- SING ---
def evaluate_sing(matrices: Sequence[Sequence[Sequence[Any]]],
                  options: Optional[EngineOptions] = None) -> DetectionRun:
    """<det X, det X> for X = sum x_i A_i, which is sum_a c_a^2 a! over the coefficients of det X."""
    options = options or EngineOptions()
    mode = options.mode
    X = SymbolicMatrix.from_span(matrices, mode)
    C = build_mv_determinant(X.d, X.entries, X.nvars, mode)
    value = gendiff_evaluate(X, C, options)
    trace("detect", f"sing: d={X.d}, {X.nvars} matrices, value {mode.format(value)}", options.verbose)
    return DetectionRun(value, "general", minor_basis_size(X.d), C.size, mode, "sing",
                        {"d": X.d, "matrices": X.nvars})


def sing_decide(matrices: Sequence[Sequence[Sequence[Any]]], options: Optional[EngineOptions] = None) -> bool:
    """True iff the span of the matrices contains an invertible one."""
    return evaluate_sing(matrices, options).decision


# --- matroids ---
def evaluate_matroid_parity(B: Sequence[Sequence[Any]], parts: Sequence[Sequence[int]],
                            options: Optional[EngineOptions] = None) -> DetectionRun:
    """<det(B diag(x) B^T), (sum_S x^S)^m> for B with k*m rows and a size-k partition of its columns."""
    options = options or EngineOptions()
    mode = options.mode
    k = validate_partition(parts)
    inst = MatroidInstance.of(B, parts, mode)
    if inst.rows == 0 or inst.rows % k:
        raise BadDims(f"row count {inst.rows} is not a positive multiple of part size {k}")
    if inst.cols != k * len(parts):
        raise BadDims(f"{inst.cols} columns but the partition covers {k * len(parts)}")
    m = inst.rows // k
    X = SymbolicMatrix.cauchy_binet(inst.B, mode)
    C = build_part_product_power(inst.parts, m, mode)
    value = gendiff_evaluate(X, C, options)
    trace("detect", f"matroid parity: k={k}, m={m}, value {mode.format(value)}", options.verbose)
    return DetectionRun(value, "general", minor_basis_size(X.d), C.size, mode, "matroid-parity",
                        {"k": k, "m": m, "parts": len(parts)})


def matroid_parity_decide(B: Sequence[Sequence[Any]], parts: Sequence[Sequence[int]],
                          options: Optional[EngineOptions] = None) -> bool:
    """True iff some m parts have an independent union of columns."""
    return evaluate_matroid_parity(B, parts, options).decision


def direct_sum(matrices: Sequence[Sequence[Sequence[Any]]]):
    """Block-diagonal matrix of equally shaped blocks, plus the interleaved parts {i, i+n, ..}."""
    if not matrices:
        raise BadDims("need at least one matrix")
    m = len(matrices[0])
    n = len(matrices[0][0]) if m else 0
    for A in matrices:
        if len(A) != m or any(len(row) != n for row in A):
            raise BadDims(f"all matrices must be {m}x{n}")
    if m == 0 or n == 0:
        raise BadDims("matrices must be nonempty")
    k = len(matrices)
    M = [[0] * (k * n) for _ in range(k * m)]
    for b, A in enumerate(matrices):
        for i in range(m):
            for j in range(n):
                M[b * m + i][b * n + j] = A[i][j]
    parts = [[i + b * n for b in range(k)] for i in range(1, n + 1)]
    return M, parts


def evaluate_matroid_intersection(matrices: Sequence[Sequence[Sequence[Any]]],
                                  options: Optional[EngineOptions] = None) -> DetectionRun:
    options = options or EngineOptions()
    M, parts = direct_sum(matrices)
    run = evaluate_matroid_parity(M, parts, options)
    run.problem = "matroid-intersect"
    run.details["matroids"] = len(matrices)
    return run


def matroid_intersection_decide(matrices: Sequence[Sequence[Sequence[Any]]],
                                options: Optional[EngineOptions] = None) -> bool:
    """True iff the column matroids of the matrices share a common base."""
    return evaluate_matroid_intersection(matrices, options).decision
