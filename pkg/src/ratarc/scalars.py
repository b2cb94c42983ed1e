"""Exact scalars: rationals and Gaussian rationals.

Real scalars are ``fractions.Fraction`` (always reduced, denominator > 0).
``GaussianRational`` adds a central complex unit that commutes with all
quaternion units; quaternion conjugation never touches it.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Scalar = Union[Fraction, "GaussianRational"]


def rat(value, den=None) -> Fraction:
    """Coerce int/str/Fraction to Fraction ("3/4" style strings accepted)."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rat(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sqrt_rat(x: Fraction):
    """Exact square root of a rational, or None if it is not a square."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


class GaussianRational:
    """a + b*I with rational a, b and a central unit I, I**2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rat(re))
        object.__setattr__(self, "im", rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- queries ---------------------------------------------------------
    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return format_rat(self.re)
        return f"({format_rat(self.re)}{'+' if self.im >= 0 else '-'}{format_rat(abs(self.im))}I)"


# -- generic helpers over Scalar ------------------------------------------

def as_gauss(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(rat(x))


def scalar_conj(x: Scalar) -> Scalar:
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def scalar_re(x: Scalar) -> Fraction:
    if isinstance(x, GaussianRational):
        return x.re
    return rat(x)


def scalar_im(x: Scalar) -> Fraction:
    if isinstance(x, GaussianRational):
        return x.im
    return Fraction(0)


def scalar_is_real(x: Scalar) -> bool:
    return not isinstance(x, GaussianRational) or x.im == 0


def to_fraction(x: Scalar) -> Fraction:
    """Demote a real-valued scalar to Fraction; error if it has an imaginary part."""
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError(f"{x} is not real")
        return x.re
    return rat(x)


def bit_size(x: Scalar) -> int:
    """Rough coefficient size, used to pick the simplest elimination pivot."""
    if isinstance(x, GaussianRational):
        return bit_size(x.re) + bit_size(x.im)
    f = rat(x)
    return abs(f.numerator).bit_length() + f.denominator.bit_length()


def format_scalar(x: Scalar):
    """JSON form: rationals as "p/q" strings, Gaussian values as {re, im}."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return format_rat(x.re)
        return {"re": format_rat(x.re), "im": format_rat(x.im)}
    return format_rat(rat(x))


def format_gauss(x) -> dict:
    g = as_gauss(x)
    return {"re": format_rat(g.re), "im": format_rat(g.im)}


def parse_scalar(obj) -> Scalar:
    if isinstance(obj, dict):
        return GaussianRational(rat(obj.get("re", 0)), rat(obj.get("im", 0)))
    return rat(obj)
