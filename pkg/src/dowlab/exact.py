"""Exact scalars: arbitrary-precision rationals and dense polynomials in ``l``.

Every number family in this package is polynomial in one formal parameter,
printed as ``l``.  Coefficients are exact rationals (``fractions.Fraction``),
so all identity checks are decided by literal equality, never by tolerance.
Values are immutable and hashable and may be shared freely between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction, "LambdaPoly"]

# One additive chunk of the canonical grammar:  coef, coef*l, coef*l^d, l, l^d.
_TERM = re.compile(
    r"""^(?P<sign>[+-]?)
         (?:
            (?P<coef>\d+(?:/\d+)?)(?:\*l(?:\^(?P<deg>\d+))?)?
          | (?P<bare>l)(?:\^(?P<bdeg>\d+))?
         )$""",
    re.VERBOSE,
)


def _as_fraction(value: int | Fraction) -> Fraction:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class LambdaPoly:
    """Dense polynomial in ``l`` with Fraction coefficients.

    Coefficients are stored ascending by degree with trailing zeros stripped;
    the empty tuple is the zero polynomial.  This normal form makes ``==``
    the canonical-equality test used by every identity check.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: int | Fraction) -> "LambdaPoly":
        return cls((value,))

    @classmethod
    def coerce(cls, value: Scalar) -> "LambdaPoly":
        if isinstance(value, LambdaPoly):
            return value
        return cls((value,))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in ``l``; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        """The coefficient of ``l^0``."""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LambdaPoly.coerce(other)
        return NotImplemented

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other: Scalar) -> "LambdaPoly":
        other = LambdaPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> "LambdaPoly":
        return self + (-LambdaPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "LambdaPoly":
        return LambdaPoly.coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "LambdaPoly":
        other = LambdaPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: int | Fraction) -> "LambdaPoly":
        """Division by a nonzero rational scalar (the only unit we need)."""
        q = _as_fraction(other)
        if not q:
            raise ZeroDivisionError("division of a polynomial by zero")
        return LambdaPoly(tuple(c / q for c in self.coeffs))

    def __pow__(self, n: int) -> "LambdaPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = LambdaPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation and substitution -----------------------------------------

    def eval(self, point: int | Fraction) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        q = _as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def scale_lambda(self, factor: int | Fraction) -> "LambdaPoly":
        """Substitute ``l -> factor*l`` (used for the l/m and m*l/(m+1) rescalings)."""
        q = _as_fraction(factor)
        power = Fraction(1)
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power *= q
        return LambdaPoly(out)

    # -- canonical string form ------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            elif mag == 1:
                body = "l" if d == 1 else f"l^{d}"
            else:
                body = f"{mag}*l" if d == 1 else f"{mag}*l^{d}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LambdaPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LambdaPoly":
        """Parse the canonical grammar, e.g. ``1 - 3*l + 2*l^2`` or ``-l``."""
        s = "".join(text.split())
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls()
        chunks = re.findall(r"[+-]?[^+-]+", s)
        if "".join(chunks) != s:
            raise ValueError(f"malformed polynomial string: {text!r}")
        by_degree: dict[int, Fraction] = {}
        for chunk in chunks:
            match = _TERM.match(chunk)
            if match is None:
                raise ValueError(f"malformed polynomial term: {chunk!r}")
            sign = -1 if match.group("sign") == "-" else 1
            if match.group("bare"):
                coef = Fraction(1)
                deg = int(match.group("bdeg") or 1)
            else:
                try:
                    coef = Fraction(match.group("coef"))
                except ZeroDivisionError:
                    raise ValueError(f"zero denominator in term: {chunk!r}")
                if "*l" in chunk:
                    deg = int(match.group("deg") or 1)
                else:
                    deg = 0
            by_degree[deg] = by_degree.get(deg, Fraction(0)) + sign * coef
        out = [Fraction(0)] * (max(by_degree) + 1)
        for deg, coef in by_degree.items():
            out[deg] = coef
        return cls(out)


ZERO = LambdaPoly()
ONE = LambdaPoly((1,))
LAMBDA = LambdaPoly((0, 1))
