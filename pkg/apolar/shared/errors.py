# apolar/shared/errors.py
"""
Error hierarchy. Every error raised on purpose by the library derives from ApolarError;
argument errors also derive from ValueError so plain `except ValueError` callers keep working.
"""
from __future__ import annotations
from typing import Optional


class ApolarError(Exception):
    """Base class for all library errors."""


class DegreeMismatch(ApolarError, ValueError):
    pass


class SizeLimit(ApolarError):
    """A configured brute-force or engine cap was exceeded."""


class CircuitSyntaxError(ApolarError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class UndefinedGate(CircuitSyntaxError):
    pass


class DuplicateGateId(CircuitSyntaxError):
    pass


class NonSkewMul(CircuitSyntaxError):
    pass


class NonSkew(ApolarError, ValueError):
    """A general product gate reached an engine that only evaluates skew circuits."""


class EmptyGraph(ApolarError, ValueError):
    pass


class BadPartition(ApolarError, ValueError):
    pass


class BadDims(ApolarError, ValueError):
    pass


class SameEndpoints(ApolarError, ValueError):
    pass


class IndexOutOfRange(ApolarError, IndexError):
    pass


class LengthMismatch(ApolarError, ValueError):
    pass


class OddN(ApolarError, ValueError):
    pass


class ModeMismatch(ApolarError, ValueError):
    """Operands carry scalars from different arithmetic modes."""


class NotADecomposition(ApolarError, ValueError):
    pass


class NegativeCoefficient(ApolarError, ValueError):
    pass


class SolveFailure(ApolarError):
    pass


class VerificationFailure(ApolarError):
    pass


class InputFormatError(ApolarError, ValueError):
    """Malformed graph, matrix or matroid file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
