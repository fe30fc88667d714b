"""Exact arithmetic in Q(i, sqrt2).

An element is ``(a + b*sqrt2) + (c + d*sqrt2)*i`` with rational a, b, c, d.
Internally the four rationals share one positive denominator so that every
operation is plain integer arithmetic followed by a single gcd reduction.
The components are exposed as :class:`fractions.Fraction`.

This is the one place to widen if a square ever needs amplitudes outside
Q(i, sqrt2); everything downstream only uses the operators defined here.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, ParseError

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "SQRT2",
    "INV_SQRT2",
    "HALF",
    "add",
    "mul",
    "inv",
    "conj",
    "norm_sq",
    "parse_scalar",
    "format_scalar",
]

Number = Union[int, Fraction]


class Scalar:
    """Immutable element of Q(i, sqrt2)."""

    __slots__ = ("_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, a: Number = 0, b: Number = 0, c: Number = 0, d: Number = 0):
        fa, fb, fc, fd = (Fraction(t) for t in (a, b, c, d))
        den = math.lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
        self._set(
            fa.numerator * (den // fa.denominator),
            fb.numerator * (den // fb.denominator),
            fc.numerator * (den // fc.denominator),
            fd.numerator * (den // fd.denominator),
            den,
        )

    def _set(self, a: int, b: int, c: int, d: int, den: int) -> None:
        g = math.gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_d", d)
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_hash", hash((a, b, c, d, den)))

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "Scalar":
        # den must be positive; reduction happens in _set
        obj = cls.__new__(cls)
        obj._set(a, b, c, d, den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.a, self.b, self.c, self.d))

    # -- components -------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._c, self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._d, self._den)

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_real(self) -> bool:
        return not (self._c or self._d)

    def real_part(self) -> "Scalar":
        return Scalar._raw(self._a, self._b, 0, 0, self._den)

    def imag_part(self) -> "Scalar":
        return Scalar._raw(self._c, self._d, 0, 0, self._den)

    def real_sign(self) -> int:
        """Sign of ``a + b*sqrt2`` for a real scalar, decided with integers only."""
        if not self.is_real():
            raise ValueError("real_sign of a non-real scalar")
        return _sign_a_plus_b_sqrt2(self._a, self._b)

    def __complex__(self) -> complex:
        r2 = math.sqrt(2.0)
        den = self._den
        return complex((self._a + self._b * r2) / den, (self._c + self._d * r2) / den)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            den = self._den
            return Scalar._raw(self._a + other._a, self._b + other._b,
                               self._c + other._c, self._d + other._d, den)
        m, n = other._den, self._den
        return Scalar._raw(self._a * m + other._a * n, self._b * m + other._b * n,
                           self._c * m + other._c * n, self._d * m + other._d * n, m * n)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __pos__(self) -> "Scalar":
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = other._a, other._b, other._c, other._d
        if not (c1 or d1 or c2 or d2):
            return Scalar._raw(a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2, 0, 0,
                               self._den * other._den)
        # (p1 + q1 i)(p2 + q2 i) with p, q in Q(sqrt2)
        pa = a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2
        pb = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
        qa = a1 * c2 + 2 * b1 * d2 + c1 * a2 + 2 * d1 * b2
        qb = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
        return Scalar._raw(pa, pb, qa, qb, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def sqrt2_conj(self) -> "Scalar":
        """Galois conjugate sending sqrt2 to -sqrt2."""
        return Scalar._raw(self._a, -self._b, self._c, -self._d, self._den)

    def conj(self) -> "Scalar":
        return Scalar._raw(self._a, self._b, -self._c, -self._d, self._den)

    def norm_sq(self) -> "Scalar":
        return self * self.conj()

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        # x * sigma(x) is fixed by sigma, so it lies in Q(i): m + n i
        s = self.sqrt2_conj()
        t = self * s
        m, n = t.a, t.c
        q = m * m + n * n
        return s * Scalar(m / q, 0, -n / q, 0)

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def _key(self):
        return (self._a, self._b, self._c, self._d, self._den)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self._key() == Scalar(other)._key()
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw(x, 0, 0, 0, 1)
    if isinstance(x, Fraction):
        return Scalar._raw(x.numerator, 0, 0, 0, x.denominator)
    return NotImplemented


def _sign_a_plus_b_sqrt2(a: int, b: int) -> int:
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == sb or sb == 0:
        return sa
    if sa == 0:
        return sb
    # opposite signs: the larger of a^2 and 2b^2 wins (equality impossible)
    return sa if a * a > 2 * b * b else sb


ZERO = Scalar()
ONE = Scalar(1)
I = Scalar(0, 0, 1, 0)
SQRT2 = Scalar(0, 1)
INV_SQRT2 = Scalar(0, Fraction(1, 2))
HALF = Scalar(Fraction(1, 2))


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def inv(x: Scalar) -> Scalar:
    return x.inv()


def conj(x: Scalar) -> Scalar:
    return x.conj()


def norm_sq(x: Scalar) -> Scalar:
    return x.norm_sq()


# -- text form --------------------------------------------------------------
#   scalar := term (("+"|"-") term)* | "0"
#   term   := rat | rat "*" unit | unit
#   unit   := "r2" | "i" | "i*r2"
#   rat    := integer | integer "/" positive-integer

_UNITS = ("", "r2", "i", "i*r2")
_UNIT_RE = re.compile(r"i\*r2|r2|i")
_INT_RE = re.compile(r"\d+")


def format_scalar(x: Scalar) -> str:
    """Canonical text: reduced fractions, term order 1, r2, i, i*r2, no spaces."""
    if x.is_zero():
        return "0"
    out = []
    for coeff, unit in zip(x.components, _UNITS):
        if coeff == 0:
            continue
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if not unit:
            body = str(mag)
        elif mag == 1:
            # a bare leading "-unit" is outside the grammar, so spell out -1
            body = "1*" + unit if (neg and not out) else unit
        else:
            body = f"{mag}*{unit}"
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)


def parse_scalar(text: str) -> Scalar:
    """Parse the scalar grammar above. Raises ParseError with a 0-based position."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", 0, text=str(text))
    n = len(text)
    if n == 0:
        raise ParseError("empty scalar", 0, text=text)
    pos = 0
    coeffs = [Fraction(0)] * 4
    first = True
    while pos < n:
        sign = 1
        if first:
            # a leading sign belongs to the integer (or to a bare unit)
            if text[pos] == "-":
                sign = -1
                pos += 1
        else:
            ch = text[pos]
            if ch not in "+-":
                raise ParseError(f"expected '+' or '-', got {ch!r}", pos, text=text)
            sign = -1 if ch == "-" else 1
            pos += 1
        first = False
        if pos >= n:
            raise ParseError("expected a term", pos, text=text)
        m = _INT_RE.match(text, pos)
        if m:
            num = int(m.group())
            pos = m.end()
            den = 1
            if pos < n and text[pos] == "/":
                pos += 1
                m = _INT_RE.match(text, pos)
                if not m:
                    raise ParseError("expected a positive integer denominator", pos, text=text)
                den = int(m.group())
                if den == 0:
                    raise ParseError("zero denominator", pos, text=text)
                pos = m.end()
            rat = Fraction(num, den)
            unit_idx = 0
            if pos < n and text[pos] == "*":
                pos += 1
                m = _UNIT_RE.match(text, pos)
                if not m:
                    raise ParseError("expected a unit 'r2', 'i' or 'i*r2'", pos, text=text)
                unit_idx = _UNITS.index(m.group())
                pos = m.end()
        else:
            m = _UNIT_RE.match(text, pos)
            if not m:
                raise ParseError("expected a number or unit", pos, text=text)
            rat = Fraction(1)
            unit_idx = _UNITS.index(m.group())
            pos = m.end()
        coeffs[unit_idx] += sign * rat
    return Scalar(*coeffs)
