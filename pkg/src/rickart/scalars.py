"""Exact scalar fields with involution.

Two scalar domains are supported:

* the Gaussian rationals Q(i), with complex conjugation as involution;
* prime fields F_p, with the identity involution.

Rationals are :class:`fractions.Fraction`; a Gaussian rational is held as
(x + y i) / d over a single reduced denominator. Both forms are canonical,
so equality is structural.

>>> z = GaussianRational(Fraction(1, 2), Fraction(1, 2))
>>> z.inverse()
GaussianRational('1-1i')
>>> PrimeField(3).element(2).inverse()
PrimeFieldElement(2, p=3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Union

from .errors import DivisionByZero, ParseError

__all__ = [
    "GaussianRational",
    "PrimeFieldElement",
    "GaussianRationals",
    "PrimeField",
    "Field",
    "Scalar",
    "QI",
    "conjugate",
    "invert_scalar",
    "field_from_json",
    "is_prime",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """An element re + im*i of Q(i).

    Stored as (x + y i) / d with integers x, y, d, d > 0 and
    gcd(x, y, d) = 1, which is a canonical form.
    """

    __slots__ = ("_x", "_y", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, str):
            parsed = QI.parse(re)
            x, y, d = parsed._x, parsed._y, parsed._d
        else:
            re, im = _frac(re), _frac(im)
            d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
            x = re.numerator * (d // re.denominator)
            y = im.numerator * (d // im.denominator)
        _set(self, x, y, d)

    @classmethod
    def _make(cls, x: int, y: int, d: int) -> "GaussianRational":
        z = object.__new__(cls)
        if d < 0:
            x, y, d = -x, -y, -d
        g = gcd(x, y, d)
        if g != 1:
            x, y, d = x // g, y // g, d // g
        _set(z, x, y, d)
        return z

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational._make, (self._x, self._y, self._d))

    @property
    def re(self) -> Fraction:
        return Fraction(self._x, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._y, self._d)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = other if isinstance(other, GaussianRational) else self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return GaussianRational._make(self._x + o._x, self._y + o._y, d1)
        return GaussianRational._make(self._x * d2 + o._x * d1, self._y * d2 + o._y * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, GaussianRational) else self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return GaussianRational._make(self._x - o._x, self._y - o._y, d1)
        return GaussianRational._make(self._x * d2 - o._x * d1, self._y * d2 - o._y * d1, d1 * d2)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = other if isinstance(other, GaussianRational) else self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._x, self._y, o._x, o._y
        return GaussianRational._make(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        z = object.__new__(GaussianRational)
        _set(z, -self._x, -self._y, self._d)
        return z

    def __bool__(self):
        return bool(self._x) or bool(self._y)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._x == other._x and self._y == other._y and self._d == other._d
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        if not self._y:
            return hash(Fraction(self._x, self._d)) if self._d != 1 else hash(self._x)
        return hash((self._x, self._y, self._d))

    def conjugate(self) -> GaussianRational:
        z = object.__new__(GaussianRational)
        _set(z, self._x, -self._y, self._d)
        return z

    def norm_square(self) -> Fraction:
        return Fraction(self._x * self._x + self._y * self._y, self._d * self._d)

    def inverse(self) -> GaussianRational:
        x, y = self._x, self._y
        n = x * x + y * y
        if not n:
            raise DivisionByZero("inverse of zero in Q(i)")
        return GaussianRational._make(self._d * x, -self._d * y, n)

    def __str__(self):
        re = _format_rational(self.re)
        if not self._y:
            return re
        im = self.im
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{_format_rational(abs(im))}i"

    def __repr__(self):
        return f"GaussianRational('{self}')"


def _set(z, x, y, d):
    object.__setattr__(z, "_x", x)
    object.__setattr__(z, "_y", y)
    object.__setattr__(z, "_d", d)


class PrimeFieldElement:
    """An element of F_p stored as its canonical residue."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def __reduce__(self):
        return (PrimeFieldElement, (self.value, self.p))

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * PrimeFieldElement(o, self.p).inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def conjugate(self) -> PrimeFieldElement:
        return self

    def inverse(self) -> PrimeFieldElement:
        if not self.value:
            raise DivisionByZero(f"inverse of zero in F_{self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, p={self.p})"


Scalar = Union[GaussianRational, PrimeFieldElement]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_RAT = r"(-?\d+)(?:/(\d+))?"
_GAUSS_RE = re.compile(rf"^{_RAT}(?:([+-])(\d+)(?:/(\d+))?i)?$")
_FP_RE = re.compile(r"^(0|[1-9]\d*)$")


def _rational(num: str, den: str | None) -> Fraction:
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise ParseError("zero denominator")
    return Fraction(int(num), int(den))


@dataclass(frozen=True)
class GaussianRationals:
    """The field Q(i) with complex conjugation."""

    kind = "Qi"

    @property
    def zero(self) -> GaussianRational:
        return GaussianRational(0)

    @property
    def one(self) -> GaussianRational:
        return GaussianRational(1)

    def element(self, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return GaussianRational(x)

    def parse(self, text: str) -> GaussianRational:
        m = _GAUSS_RE.match(text.strip())
        if m is None:
            raise ParseError(f"not a Gaussian rational: {text!r}")
        re_num, re_den, sign, im_num, im_den = m.groups()
        real = _rational(re_num, re_den)
        if sign is None:
            return GaussianRational(real)
        imag = _rational(im_num, im_den)
        return GaussianRational(real, imag if sign == "+" else -imag)

    def format(self, x: GaussianRational) -> str:
        return str(x)

    def to_json(self) -> dict:
        return {"kind": "Qi"}

    def __str__(self):
        return "Qi"


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p with the identity involution."""

    p: int
    kind = "Fp"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def element(self, x) -> PrimeFieldElement:
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} given to F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return PrimeFieldElement(x.numerator, self.p) / x.denominator
            x = x.numerator
        return PrimeFieldElement(int(x), self.p)

    def parse(self, text: str) -> PrimeFieldElement:
        text = text.strip()
        if not _FP_RE.match(text):
            raise ParseError(f"not a canonical F_{self.p} value: {text!r}")
        value = int(text)
        if value >= self.p:
            raise ParseError(f"{value} is outside [0, {self.p})")
        return PrimeFieldElement(value, self.p)

    def format(self, x: PrimeFieldElement) -> str:
        return str(x.value)

    def elements(self) -> Iterator[PrimeFieldElement]:
        for v in range(self.p):
            yield PrimeFieldElement(v, self.p)

    def to_json(self) -> dict:
        return {"kind": "Fp", "p": self.p}

    def __str__(self):
        return f"F{self.p}"


Field = Union[GaussianRationals, PrimeField]

QI = GaussianRationals()


def field_from_json(obj: dict) -> Field:
    kind = obj.get("kind")
    if kind == "Qi":
        return QI
    if kind == "Fp":
        p = obj.get("p")
        if not isinstance(p, int) or not is_prime(p):
            raise ParseError(f"Fp field needs a prime 'p', got {p!r}")
        return PrimeField(p)
    raise ParseError(f"unknown field kind {kind!r}")


def conjugate(s: Scalar) -> Scalar:
    return s.conjugate()


def invert_scalar(s: Scalar) -> Scalar:
    """Multiplicative inverse; raises :class:`DivisionByZero` on zero."""
    return s.inverse()
