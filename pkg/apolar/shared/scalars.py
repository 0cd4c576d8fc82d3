# apolar/shared/scalars.py
"""
Exact scalars. A ScalarMode names the coefficient field: the rationals (default) or a
prime field GF(p). Values are plain sympy domain elements (gmpy2 mpq or ModularInteger),
so numpy object arrays and DomainMatrix can hold them directly.

Modular mode trades soundness for speed: a nonzero integer result may reduce to zero mod p.
"""
from __future__ import annotations
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, List, Optional, Tuple

from sympy import isprime
from sympy.polys.domains import QQ, GF

from .errors import BadDims, ModeMismatch

Scalar = Any  # a domain element of ScalarMode.domain

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@lru_cache(maxsize=None)
def _prime_field(p: int):
    return GF(p, symmetric=False)


def parse_rational(text: str) -> Tuple[int, int]:
    """Parse `p/q` or an integer into (numerator, denominator)."""
    m = _RATIONAL_RE.match(text or "")
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return num, den


@dataclass(frozen=True)
class ScalarMode:
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            p = int(self.modulus)
            if p <= 2 or not isprime(p):
                raise BadDims(f"modulus must be a prime > 2, got {self.modulus}")

    @staticmethod
    def of(modulus: Optional[int] = None) -> "ScalarMode":
        return EXACT if modulus is None else ScalarMode(int(modulus))

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    @property
    def domain(self):
        return QQ if self.modulus is None else _prime_field(self.modulus)

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    @property
    def label(self) -> str:
        return "exact" if self.modulus is None else f"mod {self.modulus}"

    # --- conversion ---
    def convert(self, value: Any) -> Scalar:
        K = self.domain
        if K.of_type(value):
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return K(value)
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
        elif isinstance(value, str):
            num, den = parse_rational(value)
        elif hasattr(value, "numerator") and hasattr(value, "denominator"):
            # gmpy2 mpq/mpz, sympy Rational, numpy integers
            num, den = int(value.numerator), int(value.denominator)
        elif hasattr(value, "__index__"):
            return K(int(value))
        else:
            raise ModeMismatch(f"cannot use {value!r} as a scalar in {self.label} mode")
        if self.modulus is None:
            return QQ(num, den)
        if den % self.modulus == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {self.modulus}")
        return K(num) / K(den)

    def convert_all(self, values: Iterable[Any]) -> List[Scalar]:
        return [self.convert(v) for v in values]

    def to_fraction(self, value: Scalar) -> Fraction:
        """Exact rational value (modular values map to their representative in [0, p))."""
        value = self.convert(value)
        if self.modulus is None:
            return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))
        return Fraction(int(value) % self.modulus)

    def format(self, value: Scalar) -> str:
        fr = self.to_fraction(value)
        return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"

    def require_same(self, other: "ScalarMode") -> None:
        if self != other:
            raise ModeMismatch(f"mixing {self.label} and {other.label} values")


EXACT = ScalarMode(None)
