"""Exact arithmetic in the Gaussian integers Z[i] and Gaussian rationals Q(i).

No floating point anywhere: components are arbitrary-precision integers and
Q(i) values are kept in a canonical reduced form, a Gaussian numerator over a
positive rational-integer denominator with gcd(gcd(|re|, |im|), den) = 1.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class GaussianInt:
    """An element a + bi of Z[i]."""

    re: int = 0
    im: int = 0

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """Field norm re^2 + im^2; multiplicative over products."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: GaussianInt | int) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussianInt | int) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: GaussianInt | int) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussianInt:
        if k < 0:
            raise ValueError("negative power of a Gaussian integer is not integral")
        out = GaussianInt(1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{self.im:+d}i"


GI_ZERO = GaussianInt(0, 0)
GI_ONE = GaussianInt(1, 0)


def gi_mul(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Exact product in Z[i]."""
    return a * b


def norm(g: GaussianInt) -> int:
    """Field norm re^2 + im^2."""
    return g.norm()


@dataclass(frozen=True)
class QI:
    """An element of Q(i): Gaussian numerator over a positive integer denominator.

    Instances are normalised on construction, so equality of values is
    structural equality of (num, den).
    """

    num: GaussianInt = GI_ZERO
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(abs(num.re), abs(num.im)), den)
        if g > 1:
            num = GaussianInt(num.re // g, num.im // g)
            den //= g
        if num.is_zero():
            den = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def _coerce(value: QI | GaussianInt | int) -> QI:
        if isinstance(value, QI):
            return value
        if isinstance(value, GaussianInt):
            return QI(value, 1)
        return QI(GaussianInt(value, 0), 1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    @property
    def re(self) -> Fraction:
        return Fraction(self.num.re, self.den)

    @property
    def im(self) -> Fraction:
        return Fraction(self.num.im, self.den)

    def __add__(self, other: QI | GaussianInt | int) -> QI:
        o = self._coerce(other)
        return QI(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: QI | GaussianInt | int) -> QI:
        o = self._coerce(other)
        return QI(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other: QI | GaussianInt | int) -> QI:
        return self._coerce(other) - self

    def __neg__(self) -> QI:
        return QI(-self.num, self.den)

    def __mul__(self, other: QI | GaussianInt | int) -> QI:
        o = self._coerce(other)
        return QI(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: QI | GaussianInt | int) -> QI:
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        return QI(self.num * o.num.conj() * o.den, self.den * o.num.norm())

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"

    @classmethod
    def parse(cls, text: str) -> QI:
        return parse_qi(text)


QI_ZERO = QI()
QI_ONE = QI(GI_ONE, 1)


def qi_arith(a: QI, b: QI, op: str) -> QI:
    """Exact Q(i) arithmetic; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


_REAL_RE = _re.compile(r"[+-]?\d+")
_FULL_RE = _re.compile(r"([+-]?\d+)([+-]\d*)i")
_IMAG_RE = _re.compile(r"([+-]?\d*)i")
_QI_RE = _re.compile(r"\((.+)\)/(\d+)")


def _normalise(text: str) -> str:
    return text.replace("−", "-").replace(" ", "").replace("\t", "")


def _imag_coeff(raw: str) -> int:
    if raw in ("", "+"):
        return 1
    if raw == "-":
        return -1
    return int(raw)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse `a`, `a+bi`, `bi`, `i`, `-i` (whitespace and unicode minus accepted)."""
    t = _normalise(text)
    if _REAL_RE.fullmatch(t):
        return GaussianInt(int(t), 0)
    m = _FULL_RE.fullmatch(t)
    if m:
        return GaussianInt(int(m.group(1)), _imag_coeff(m.group(2)))
    m = _IMAG_RE.fullmatch(t)
    if m:
        return GaussianInt(0, _imag_coeff(m.group(1)))
    raise ValueError(f"cannot parse Gaussian integer: {text!r}")


def parse_qi(text: str) -> QI:
    """Parse `a`, `a+bi` or `(a+bi)/d`."""
    t = _normalise(text)
    m = _QI_RE.fullmatch(t)
    if m:
        return QI(parse_gaussian(m.group(1)), int(m.group(2)))
    return QI(parse_gaussian(t), 1)
