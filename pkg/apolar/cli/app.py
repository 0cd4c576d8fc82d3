# apolar/cli/app.py
"""
Command-line frontend. Every subcommand prints one machine-readable result line
(`yes`/`no`, an exact number, or a vector) and, with --report, a report below it.

Exit codes: 0 yes/success, 1 no, 2 usage or input error.
"""
from __future__ import annotations
import sys
import time
from typing import Callable, List, Optional, Sequence

import click

from .io import (parse_graph, parse_matrix_list, parse_matrix_spec, parse_matroid,
                 parse_matroid_list, parse_vectors, read_text)
from .reports import RunReport
from ..algebra.engine import diff_span_dim, generic_determinant, generic_hankel_determinant
from ..algebra.models import Monomial, SparsePoly
from ..circuits.models import Circuit
from ..circuits.parser import parse_circuit
from ..detection.engine import (ENGINES, evaluate_cycle, evaluate_matroid_intersection,
                                evaluate_matroid_parity, evaluate_path, evaluate_sing,
                                evaluate_squarefree)
from ..hankel.engine import fibonacci_bound_holds, hankeldiff_evaluate, vandermonde_hankel
from ..hankel.models import HankelArrangement, maximal_minor_count
from ..lab.clifford import clifford_det_decomposition
from ..lab.convolution import (ConvolutionStats, subset_convolution_algebra, subset_convolution_fast,
                               subset_convolution_naive)
from ..lab.waring import waring_to_tensor, x1x2x3_decomposition
from ..minors.engine import gendiff_evaluate
from ..minors.models import SymbolicMatrix, minor_basis_size
from ..shared.config import EngineOptions
from ..shared.errors import ApolarError, BadDims, VerificationFailure
from ..shared.trace import trace

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class Timer:
    def __init__(self):
        self._start = time.perf_counter_ns()

    @property
    def micros(self) -> int:
        return (time.perf_counter_ns() - self._start) // 1000


def _options(mod: Optional[int], verbose: bool, dp: bool = False, **extra) -> EngineOptions:
    kwargs = dict(verbose=verbose, compile_operators=not dp, **extra)
    if mod is not None:
        kwargs["modulus"] = mod
    return EngineOptions(**kwargs)


def _emit(report: RunReport, style: Optional[str]) -> int:
    click.echo(report.render(style))
    return EXIT_NO if report.is_no else EXIT_YES


_COMMON_OPTIONS = (
    click.option("--engine", type=click.Choice(ENGINES), default=None,
                 help="hankel (maximal minors of C_d) or general (all minors)."),
    click.option("--mod", "mod", type=int, default=None, help="Work in GF(p); one-sided error."),
    click.option("--report", "report", type=click.Choice(["json", "text"]), default=None),
    click.option("--dp", is_flag=True, help="Hankel engine: straighten per gate instead of precompiling."),
    click.option("-v", "--verbose", is_flag=True),
)


def common_options(fn: Callable) -> Callable:
    """--engine / --mod / --report / --dp / -v, shared by every subcommand."""
    for option in reversed(_COMMON_OPTIONS):
        fn = option(fn)
    return fn


def _read_circuit(path: str, options: EngineOptions, allow_general: bool = False) -> Circuit:
    return parse_circuit(read_text(path), options.mode, allow_general)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact apolar inner products and the detection problems built on them."""


# --- detection ---
@main.command()
@click.option("-g", "--graph", "graph_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("-d", "d", type=int, required=True, help="Cycle length (vertices).")
@common_options
def cycle(graph_path, d, engine, mod, report, dp, verbose):
    """Is there a simple directed cycle on exactly d vertices?"""
    options = _options(mod, verbose, dp)
    G = parse_graph(read_text(graph_path))
    timer = Timer()
    run = evaluate_cycle(G, d, engine or "hankel", options)
    return _emit(RunReport.of_run(run, timer.micros), report)


@main.command()
@click.option("-g", "--graph", "graph_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("-s", "s", type=int, required=True)
@click.option("-t", "t", type=int, required=True)
@click.option("-d", "d", type=int, required=True, help="Path length (vertices).")
@common_options
def path(graph_path, s, t, d, engine, mod, report, dp, verbose):
    """Is there a simple s -> t path on exactly d vertices?"""
    options = _options(mod, verbose, dp)
    G = parse_graph(read_text(graph_path))
    timer = Timer()
    run = evaluate_path(G, s, t, d, engine or "hankel", options)
    return _emit(RunReport.of_run(run, timer.micros), report)


@main.command()
@click.option("-c", "--circuit", "circuit_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("-d", "d", type=int, required=True)
@click.option("-n", "n", type=int, default=None, help="Variable count (default: the circuit's).")
@click.option("--no-check", is_flag=True, help="Skip the nonnegativity check.")
@common_options
def squarefree(circuit_path, d, n, no_check, engine, mod, report, dp, verbose):
    """Does the circuit's (nonnegative) polynomial have a square-free degree-d monomial?"""
    options = _options(mod, verbose, dp, check_nonnegative=not no_check)
    C = _read_circuit(circuit_path, options)
    timer = Timer()
    run = evaluate_squarefree(C, d, n if n is not None else C.nvars, engine or "hankel", options)
    return _emit(RunReport.of_run(run, timer.micros), report)


def _general_only(engine: Optional[str], problem: str) -> None:
    if engine not in (None, "general"):
        raise BadDims(f"{problem} runs on the general engine only")


@main.command()
@click.option("-m", "--matrices", "matrices_path", type=click.Path(exists=True, dir_okay=False), required=True)
@common_options
def sing(matrices_path, engine, mod, report, dp, verbose):
    """Does the span of the matrices contain an invertible one?"""
    _general_only(engine, "sing")
    options = _options(mod, verbose, dp)
    matrices = parse_matrix_list(read_text(matrices_path))
    timer = Timer()
    run = evaluate_sing(matrices, options)
    return _emit(RunReport.of_run(run, timer.micros), report)


@main.command("matroid-parity")
@click.option("-m", "--matroid", "matroid_path", type=click.Path(exists=True, dir_okay=False), required=True)
@common_options
def matroid_parity(matroid_path, engine, mod, report, dp, verbose):
    """Do some m parts have an independent union of columns?"""
    _general_only(engine, "matroid-parity")
    options = _options(mod, verbose, dp)
    B, parts = parse_matroid(read_text(matroid_path))
    timer = Timer()
    run = evaluate_matroid_parity(B, parts, options)
    return _emit(RunReport.of_run(run, timer.micros), report)


@main.command("matroid-intersect")
@click.option("-m", "--matroids", "matroids_path", type=click.Path(exists=True, dir_okay=False), required=True)
@common_options
def matroid_intersect(matroids_path, engine, mod, report, dp, verbose):
    """Do the column matroids of k matrices share a common base?"""
    _general_only(engine, "matroid-intersect")
    options = _options(mod, verbose, dp)
    matrices = parse_matroid_list(read_text(matroids_path))
    timer = Timer()
    run = evaluate_matroid_intersection(matrices, options)
    return _emit(RunReport.of_run(run, timer.micros), report)


# --- raw inner product ---
@main.command()
@click.option("-x", "matrix_spec", default=None, help="generic:<d>, hankel:<d> or vandermonde:<n>:<d>.")
@click.option("-m", "--matrices", "matrices_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Matrix-list file; X = sum x_i A_i.")
@click.option("-c", "--circuit", "circuit_path", type=click.Path(exists=True, dir_okay=False), required=True)
@common_options
def inner(matrix_spec, matrices_path, circuit_path, engine, mod, report, dp, verbose):
    """Print <det X, g> for the polynomial g computed by the circuit."""
    if (matrix_spec is None) == (matrices_path is None):
        raise click.UsageError("give exactly one of -x and -m")
    options = _options(mod, verbose, dp)
    mode = options.mode
    C = _read_circuit(circuit_path, options)

    hankel: Optional[HankelArrangement] = None
    if matrices_path is not None:
        X = SymbolicMatrix.from_span(parse_matrix_list(read_text(matrices_path)), mode)
    else:
        kind, args = parse_matrix_spec(matrix_spec)
        if kind == "generic":
            X = SymbolicMatrix.generic(args[0], mode)
        else:
            hankel = HankelArrangement.generic(args[0], mode) if kind == "hankel" else vandermonde_hankel(*args, mode)
            X = hankel.hankel_matrix()
    engine = engine or ("hankel" if hankel is not None else "general")
    if engine == "hankel" and hankel is None:
        raise BadDims("the hankel engine needs a hankel: or vandermonde: matrix")

    timer = Timer()
    if engine == "hankel":
        value = hankeldiff_evaluate(hankel, C, options)
        basis = maximal_minor_count(hankel.d)
    else:
        value = gendiff_evaluate(X, C, options)
        basis = minor_basis_size(X.d)
    trace("cli", f"inner: d={X.d}, engine {engine}", verbose)
    return _emit(RunReport.of_value(value, mode, timer.micros, engine, basis, C.size), report)


# --- subset convolution ---
@main.command()
@click.option("-f", "--file", "vectors_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Two lines of 2^n rationals: sigma, then tau.")
@click.option("--method", type=click.Choice(["fast", "naive", "algebra"]), default="fast")
@common_options
def convolve(vectors_path, method, engine, mod, report, dp, verbose):
    """Subset convolution of two functions on the subsets of [n]."""
    options = _options(mod, verbose, dp)
    mode = options.mode
    sigma, tau = parse_vectors(read_text(vectors_path))
    timer = Timer()
    notes: List[str] = []
    if method == "fast":
        stats = ConvolutionStats()
        out = subset_convolution_fast(sigma, tau, mode, stats)
        n = len(sigma).bit_length() - 1
        notes = [f"multiplications={stats.multiplications}", f"additions={stats.additions}",
                 f"bound={stats.bound(n)}"]
    elif method == "naive":
        out = subset_convolution_naive(sigma, tau, mode)
    else:
        out = subset_convolution_algebra(sigma, tau, mode)
    result = RunReport(" ".join(mode.format(v) for v in out), method, len(out), 0, timer.micros, mode.label, notes)
    return _emit(result, report)


# --- lab ---
@main.group()
def lab():
    """Apolar-algebra verifications."""


@lab.command()
@click.option("-n", "n", type=int, default=2)
@common_options
def clifford(n, engine, mod, report, dp, verbose):
    """Check that the e^0 part of (M, M, M')(T_n (x) T_n) is the structure tensor of A_det_n."""
    options = _options(mod, verbose, dp)
    timer = Timer()
    try:
        rep = clifford_det_decomposition(n, options)
    except VerificationFailure as exc:
        click.echo(f"verification failed: {exc}", err=True)
        return _emit(RunReport("no", "clifford", 0, 0, timer.micros, options.mode.label), report)
    notes = [f"laurent_entries={rep.laurent_entries}", f"matrix_terms={rep.matrix_terms}",
             f"direct_terms={rep.direct_terms}", f"products_checked={rep.homomorphism_checked}",
             f"exponents={rep.exponent_counts}"]
    return _emit(RunReport("yes", "clifford", rep.dimension, 0, timer.micros, options.mode.label, notes), report)


@lab.command()
@common_options
def waring(engine, mod, report, dp, verbose):
    """Simple-term count of the tensor decomposition induced by the 4-term Waring identity of x1 x2 x3."""
    options = _options(mod, verbose, dp)
    mode = options.mode
    f = SparsePoly({Monomial.product_of((1, 2, 3)): mode.one}, 3, mode)
    timer = Timer()
    dec = waring_to_tensor(f, x1x2x3_decomposition(mode), options)
    notes = [f"bound={dec.rank_bound}", f"nodes={len(dec.nodes)}"]
    return _emit(RunReport(str(dec.term_count), "waring", dec.algebra.dim, 0, timer.micros, mode.label, notes),
                 report)


@lab.command()
@click.option("--max-d", "max_d", type=int, default=32)
@common_options
def fibonacci(max_d, engine, mod, report, dp, verbose):
    """Check sum_k binom(2d-k, k) < phi^(2d) for every d up to --max-d."""
    timer = Timer()
    failing = [d for d in range(max_d + 1) if not fibonacci_bound_holds(d)]
    notes = [f"failing={failing}"] if failing else []
    return _emit(RunReport("no" if failing else "yes", "fibonacci", maximal_minor_count(max_d), 0,
                           timer.micros, "exact", notes), report)


@lab.command()
@click.option("-d", "d", type=int, required=True)
@click.option("--kind", type=click.Choice(["det", "hankel"]), default="det")
@common_options
def dims(d, kind, engine, mod, report, dp, verbose):
    """dim Diff(f) for the generic d x d determinant or Hankel determinant."""
    options = _options(mod, verbose, dp)
    f = generic_determinant(d, options.mode) if kind == "det" else generic_hankel_determinant(d, options.mode)
    timer = Timer()
    dim = diff_span_dim(f, options)
    expected = minor_basis_size(d) if kind == "det" else maximal_minor_count(d)
    notes = [f"formula={expected}"]
    return _emit(RunReport(str(dim), kind, expected, 0, timer.micros, options.mode.label, notes), report)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Dispatch argv and return the exit code (0 yes/success, 1 no, 2 error)."""
    try:
        code = main.main(args=list(argv) if argv is not None else None, prog_name="apolar",
                         standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_ERROR
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except (ApolarError, ZeroDivisionError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_ERROR
    # --help and friends return click's own exit code
    return code if isinstance(code, int) else EXIT_YES


def cli_entry() -> None:
    sys.exit(run())
