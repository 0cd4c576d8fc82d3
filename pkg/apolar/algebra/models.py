# apolar/algebra/models.py
"""
Exact sparse polynomials.

A polynomial is a dict mapping Monomial -> scalar (a domain element of its ScalarMode).
Zero coefficients are never stored; the zero polynomial is the empty dict.
Monomials double as differential operators: the monomial x^a also names d^a.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..shared.errors import DegreeMismatch
from ..shared.scalars import EXACT, Scalar, ScalarMode


@dataclass(frozen=True)
class Monomial:
    """x_1^e_1 ... x_n^e_n stored as sorted (variable, exponent) pairs, exponents > 0."""
    exps: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        for v, e in self.exps:
            if v < 1 or e < 1:
                raise ValueError(f"bad monomial entry x{v}^{e}")

    @staticmethod
    def of(exponents: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None) -> "Monomial":
        items = exponents.items() if isinstance(exponents, Mapping) else (exponents or ())
        acc: Dict[int, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for x{v}")
            if e:
                acc[int(v)] = acc.get(int(v), 0) + int(e)
        return Monomial(tuple(sorted(acc.items())))

    @staticmethod
    def var(i: int, power: int = 1) -> "Monomial":
        return Monomial.of({i: power})

    @staticmethod
    def product_of(variables: Iterable[int]) -> "Monomial":
        acc: Dict[int, int] = {}
        for v in variables:
            acc[v] = acc.get(v, 0) + 1
        return Monomial.of(acc)

    @cached_property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @cached_property
    def as_dict(self) -> Dict[int, int]:
        return dict(self.exps)

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.exps)

    @property
    def max_var(self) -> int:
        return self.exps[-1][0] if self.exps else 0

    def exponent(self, i: int) -> int:
        return self.as_dict.get(i, 0)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] = acc.get(v, 0) + e
        return Monomial(tuple(sorted(acc.items())))

    def divides(self, other: "Monomial") -> bool:
        od = other.as_dict
        return all(od.get(v, 0) >= e for v, e in self.exps)

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """self / divisor; caller guarantees divisor.divides(self)."""
        acc = dict(self.exps)
        for v, e in divisor.exps:
            acc[v] -= e
        return Monomial(tuple((v, e) for v, e in sorted(acc.items()) if e))

    def factorial(self) -> int:
        out = 1
        for _, e in self.exps:
            out *= factorial(e)
        return out

    def falling_factor(self, divisor: "Monomial") -> int:
        """beta! / (beta - alpha)! for beta = self, alpha = divisor."""
        out = 1
        sd = self.as_dict
        for v, a in divisor.exps:
            b = sd[v]
            for t in range(b - a + 1, b + 1):
                out *= t
        return out

    def sort_key(self, nvars: Optional[int] = None) -> Tuple:
        """Degree ascending, then lexicographic (higher power of x1 first, then x2, ...)."""
        n = max(nvars or 0, self.max_var)
        d = self.as_dict
        return (self.degree, tuple(-d.get(i, 0) for i in range(1, n + 1)))

    def format(self, symbol: str = "x") -> str:
        if not self.exps:
            return "1"
        return "*".join(f"{symbol}{v}" + (f"^{e}" if e > 1 else "") for v, e in self.exps)

    def __str__(self) -> str:
        return self.format()


ONE = Monomial(())

Coeffish = Any  # int | Fraction | str | domain element


@dataclass(frozen=True, eq=False)
class SparsePoly:
    terms: Dict[Monomial, Scalar] = field(default_factory=dict)
    nvars: int = 0
    mode: ScalarMode = EXACT

    # --- constructors ---
    @staticmethod
    def from_terms(terms: Union[Mapping, Iterable[Tuple[Any, Coeffish]]], nvars: Optional[int] = None,
                   mode: ScalarMode = EXACT) -> "SparsePoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Monomial, Scalar] = {}
        zero = mode.zero
        for mono, coeff in items:
            m = mono if isinstance(mono, Monomial) else Monomial.of(mono)
            acc[m] = acc.get(m, zero) + mode.convert(coeff)
        acc = {m: c for m, c in acc.items() if c}
        n = max([nvars or 0] + [m.max_var for m in acc])
        return SparsePoly(acc, n, mode)

    @staticmethod
    def zero(nvars: int = 0, mode: ScalarMode = EXACT) -> "SparsePoly":
        return SparsePoly({}, nvars, mode)

    @staticmethod
    def constant(value: Coeffish, nvars: int = 0, mode: ScalarMode = EXACT) -> "SparsePoly":
        return SparsePoly.from_terms([(ONE, value)], nvars, mode)

    @staticmethod
    def variable(i: int, nvars: int = 0, mode: ScalarMode = EXACT) -> "SparsePoly":
        return SparsePoly({Monomial.var(i): mode.one}, max(nvars, i), mode)

    @staticmethod
    def linear(coeffs: Mapping[int, Coeffish], nvars: int = 0, mode: ScalarMode = EXACT) -> "SparsePoly":
        return SparsePoly.from_terms([(Monomial.var(v), c) for v, c in coeffs.items()], nvars, mode)

    # --- inspection ---
    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.terms.items())

    def coefficient(self, mono: Union[Monomial, Mapping[int, int]]) -> Scalar:
        m = mono if isinstance(mono, Monomial) else Monomial.of(mono)
        return self.terms.get(m, self.mode.zero)

    @property
    def degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        degs = {m.degree for m in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or d in degs)

    def homogeneous_degree(self) -> int:
        degs = {m.degree for m in self.terms}
        if len(degs) > 1:
            raise DegreeMismatch(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else -1

    def support_vars(self) -> Tuple[int, ...]:
        return tuple(sorted({v for m in self.terms for v in m.variables}))

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key(self.nvars))

    # --- arithmetic ---
    def _check(self, other: "SparsePoly") -> None:
        self.mode.require_same(other.mode)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        acc = dict(self.terms)
        zero = self.mode.zero
        for m, c in other.terms.items():
            v = acc.get(m, zero) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return SparsePoly(acc, max(self.nvars, other.nvars), self.mode)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({m: -c for m, c in self.terms.items()}, self.nvars, self.mode)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c: Coeffish) -> "SparsePoly":
        c = self.mode.convert(c)
        if not c:
            return SparsePoly.zero(self.nvars, self.mode)
        return SparsePoly({m: c * v for m, v in self.terms.items()}, self.nvars, self.mode)

    def __mul__(self, other: Union["SparsePoly", Coeffish]) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self._check(other)
        acc: Dict[Monomial, Scalar] = {}
        zero = self.mode.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, zero) + c1 * c2
        return SparsePoly({m: c for m, c in acc.items() if c}, max(self.nvars, other.nvars), self.mode)

    __rmul__ = scale

    def power(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePoly.constant(1, self.nvars, self.mode)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def derivative(self, i: int) -> "SparsePoly":
        acc: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            e = m.exponent(i)
            if e:
                acc[m.quotient(Monomial.var(i))] = c * e
        return SparsePoly({m: c for m, c in acc.items() if c}, self.nvars, self.mode)

    def substitute_zero(self, i: int) -> "SparsePoly":
        return SparsePoly({m: c for m, c in self.terms.items() if not m.exponent(i)}, self.nvars, self.mode)

    def with_nvars(self, nvars: int) -> "SparsePoly":
        return SparsePoly(self.terms, max(nvars, self.nvars), self.mode)

    # --- display ---
    def format(self, symbol: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            cs = self.mode.format(c)
            if m is ONE or not m.exps:
                parts.append(cs)
            elif cs == "1":
                parts.append(m.format(symbol))
            elif cs == "-1":
                parts.append("-" + m.format(symbol))
            else:
                parts.append(f"{cs}*{m.format(symbol)}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"SparsePoly({self.format()!r}, nvars={self.nvars}, mode={self.mode.label!r})"
