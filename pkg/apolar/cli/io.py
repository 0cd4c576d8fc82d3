# apolar/cli/io.py
"""
Whitespace-separated UTF-8 input formats. Blank lines and `#` comments are ignored;
every error names the offending line.

graph:          n m / m lines `u v` (1-based, directed)
matrix list:    n d / n blocks of d rows of d rationals
matroid:        rows cols k m / rows lines of cols rationals / one line per part
matroid list:   k m n / k blocks of m rows of n rationals
vectors:        two lines of 2^n rationals (sigma, then tau)
"""
from __future__ import annotations
from fractions import Fraction
from pathlib import Path
from typing import Iterator, List, Sequence, Tuple, Union

from ..detection.models import DirectedGraph
from ..shared.errors import BadDims, InputFormatError
from ..shared.scalars import parse_rational

Line = Tuple[int, List[str]]


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


def _lines(text: str) -> Iterator[Line]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _ints(line: Line, count: int, what: str) -> List[int]:
    lineno, tokens = line
    if len(tokens) != count:
        raise InputFormatError(f"{what}: expected {count} integers, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise InputFormatError(f"{what}: {exc}", lineno) from exc


def _rationals(line: Line, count: int, what: str) -> List[Fraction]:
    lineno, tokens = line
    if len(tokens) != count:
        raise InputFormatError(f"{what}: expected {count} entries, got {len(tokens)}", lineno)
    out = []
    for t in tokens:
        try:
            num, den = parse_rational(t)
        except ValueError as exc:
            raise InputFormatError(str(exc), lineno) from exc
        out.append(Fraction(num, den))
    return out


def _next(lines: Iterator[Line], what: str, last: int) -> Line:
    try:
        return next(lines)
    except StopIteration:
        raise InputFormatError(f"unexpected end of input, expected {what}", last + 1) from None


def _no_trailing(lines: Iterator[Line]) -> None:
    extra = next(lines, None)
    if extra is not None:
        raise InputFormatError("unexpected trailing content", extra[0])


def parse_graph(text: str) -> DirectedGraph:
    lines = _lines(text)
    header = _next(lines, "header `n m`", 0)
    n, m = _ints(header, 2, "graph header")
    if n < 0 or m < 0:
        raise InputFormatError("vertex and edge counts must be nonnegative", header[0])
    edges = []
    last = header[0]
    for _ in range(m):
        line = _next(lines, "an edge `u v`", last)
        u, v = _ints(line, 2, "edge")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputFormatError(f"edge ({u}, {v}) outside vertices 1..{n}", line[0])
        edges.append((u, v))
        last = line[0]
    _no_trailing(lines)
    return DirectedGraph.from_edges(n, edges)


def format_graph(G: DirectedGraph) -> str:
    edges = sorted(G.edges)
    return "\n".join([f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def _blocks(lines: Iterator[Line], count: int, rows: int, cols: int, what: str, last: int):
    out = []
    for b in range(count):
        block = []
        for _ in range(rows):
            line = _next(lines, f"row of {what} {b + 1}", last)
            block.append(_rationals(line, cols, f"{what} {b + 1}"))
            last = line[0]
        out.append(block)
    return out, last


def parse_matrix_list(text: str) -> List[List[List[Fraction]]]:
    lines = _lines(text)
    header = _next(lines, "header `n d`", 0)
    n, d = _ints(header, 2, "matrix list header")
    if n < 1 or d < 1:
        raise InputFormatError("need at least one matrix of size >= 1", header[0])
    matrices, _ = _blocks(lines, n, d, d, "matrix", header[0])
    _no_trailing(lines)
    return matrices


def format_matrix_list(matrices: Sequence[Sequence[Sequence[Fraction]]]) -> str:
    out = [f"{len(matrices)} {len(matrices[0])}"]
    for A in matrices:
        out.extend(" ".join(str(x) for x in row) for row in A)
    return "\n".join(out) + "\n"


def parse_matroid(text: str) -> Tuple[List[List[Fraction]], List[List[int]]]:
    """(B, parts); rows must equal k * m and the parts must have size k."""
    lines = _lines(text)
    header = _next(lines, "header `rows cols k m`", 0)
    rows, cols, k, m = _ints(header, 4, "matroid header")
    if k < 1 or m < 1 or rows != k * m:
        raise InputFormatError(f"rows ({rows}) must equal k*m with k, m >= 1", header[0])
    if cols < 1 or cols % k:
        raise InputFormatError(f"cols ({cols}) must be a positive multiple of k ({k})", header[0])
    (B,), last = _blocks(lines, 1, rows, cols, "matrix", header[0])
    parts = []
    for _ in range(cols // k):
        line = _next(lines, "a partition line", last)
        part = _ints(line, k, "part")
        if any(not 1 <= v <= cols for v in part):
            raise InputFormatError(f"part {part} leaves 1..{cols}", line[0])
        parts.append(part)
        last = line[0]
    _no_trailing(lines)
    return B, parts


def parse_matroid_list(text: str) -> List[List[List[Fraction]]]:
    lines = _lines(text)
    header = _next(lines, "header `k m n`", 0)
    k, m, n = _ints(header, 3, "matroid list header")
    if k < 1 or m < 1 or n < 1:
        raise InputFormatError("k, m and n must be >= 1", header[0])
    matrices, _ = _blocks(lines, k, m, n, "matrix", header[0])
    _no_trailing(lines)
    return matrices


def parse_vectors(text: str) -> Tuple[List[Fraction], List[Fraction]]:
    lines = _lines(text)
    first = _next(lines, "sigma", 0)
    sigma = _rationals(first, len(first[1]), "sigma")
    second = _next(lines, "tau", first[0])
    tau = _rationals(second, len(second[1]), "tau")
    _no_trailing(lines)
    return sigma, tau


def parse_matrix_spec(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """`generic:<d>`, `hankel:<d>` or `vandermonde:<n>:<d>`."""
    kind, _, rest = (spec or "").partition(":")
    expected = {"generic": 1, "hankel": 1, "vandermonde": 2}
    if kind not in expected:
        raise BadDims(f"unknown matrix kind {kind!r} (generic:<d>, hankel:<d>, vandermonde:<n>:<d>)")
    try:
        args = tuple(int(x) for x in rest.split(":")) if rest else ()
    except ValueError as exc:
        raise BadDims(f"bad matrix spec {spec!r}") from exc
    if len(args) != expected[kind] or any(a < 1 for a in args):
        raise BadDims(f"bad matrix spec {spec!r}")
    return kind, args
