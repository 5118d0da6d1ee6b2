"""Exact scalar arithmetic for coefficient-level identity checks.

The symbolic layers (Wick calculus, Fock inner products, pairing sums) promise
exact results whenever their inputs are rational.  This module provides the
scalar type making that cheap: a Gaussian rational ``QQi`` (complex number
with ``Fraction`` real and imaginary parts) that degrades gracefully to
``complex`` as soon as a float enters the computation.  Callers never branch
on the arithmetic mode; they start accumulators with :func:`zero_like` and let
operator dispatch do the rest.
"""

from __future__ import annotations

import math
from fractions import Fraction

_RATIONAL = (int, Fraction)
_INEXACT = (float, complex)


class QQi:
    """Gaussian rational ``re + im*i`` with exact components.

    Arithmetic with ints/Fractions/QQi stays exact; arithmetic with floats or
    complex returns a plain ``complex``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QQi is immutable")

    # -- conversions ------------------------------------------------------
    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __float__(self) -> float:
        if self.im != 0:
            raise ValueError(f"{self!r} has a nonzero imaginary part")
        return float(self.re)

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(float(self.abs2()))

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        if isinstance(other, QQi):
            return QQi(self.re + other.re, self.im + other.im)
        if isinstance(other, _RATIONAL):
            return QQi(self.re + other, self.im)
        if isinstance(other, _INEXACT):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (QQi, *_RATIONAL)):
            return self + (-other if isinstance(other, QQi) else QQi(-other))
        if isinstance(other, _INEXACT):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RATIONAL):
            return QQi(other - self.re, -self.im)
        if isinstance(other, _INEXACT):
            return other - complex(self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QQi):
            return QQi(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, _RATIONAL):
            return QQi(self.re * other, self.im * other)
        if isinstance(other, _INEXACT):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL):
            return QQi(self.re / other, self.im / other)
        if isinstance(other, QQi):
            d = other.abs2()
            if d == 0:
                raise ZeroDivisionError("division by QQi(0)")
            return self * QQi(other.re / d, -other.im / d)
        if isinstance(other, _INEXACT):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL):
            return QQi(other) / self
        if isinstance(other, _INEXACT):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QQi(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL):
            return self.im == 0 and self.re == other
        if isinstance(other, _INEXACT):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        if self.im == 0:
            return f"QQi({self.re})"
        return f"QQi({self.re}, {self.im})"


def lift(x):
    """Normalize a number: rationals become QQi, floats/complex pass through."""
    if isinstance(x, QQi):
        return x
    if isinstance(x, _RATIONAL):
        return QQi(x)
    if isinstance(x, _INEXACT):
        return complex(x)
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def is_exact(x) -> bool:
    return isinstance(x, (QQi, *_RATIONAL))


def zero_like(*xs):
    """Exact zero if every argument is exact, else complex zero."""
    return QQi(0) if all(is_exact(x) for x in xs) else 0j


def conj(x):
    if isinstance(x, QQi):
        return x.conjugate()
    if isinstance(x, _RATIONAL):
        return x
    return complex(x).conjugate()


def to_complex(x) -> complex:
    return complex(x) if not isinstance(x, complex) else x


def abs2(x):
    if isinstance(x, QQi):
        return x.abs2()
    if isinstance(x, _RATIONAL):
        return Fraction(x) ** 2
    z = complex(x)
    return z.real * z.real + z.imag * z.imag


def sqrt_exact(r: Fraction):
    """Square root of a nonnegative rational, or None if irrational."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("sqrt_exact requires a nonnegative argument")
    pn, pd = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if pn * pn == r.numerator and pd * pd == r.denominator:
        return Fraction(pn, pd)
    return None


def radical_product(u1, r1: Fraction, u2, r2: Fraction):
    """Product of ``u1*sqrt(r1)`` and ``u2*sqrt(r2)``.

    Exact (QQi) when r1*r2 is a perfect rational square, float otherwise.  In
    the delta-matched pairing sums this always hits the exact branch because
    paired coefficients share the same radical.
    """
    rr = Fraction(r1) * Fraction(r2)
    root = sqrt_exact(rr)
    if root is not None and is_exact(u1) and is_exact(u2):
        return lift(u1) * lift(u2) * root
    return to_complex(u1) * to_complex(u2) * math.sqrt(float(rr))
