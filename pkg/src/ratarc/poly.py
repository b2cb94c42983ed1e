"""Dense univariate polynomials over exact scalars.

Coefficients are Fractions or GaussianRationals, stored ascending with no
trailing zeros; the zero polynomial has an empty coefficient tuple.  All
operations are exact and side-effect free.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, List, Sequence

from .errors import NotASquare
from .scalars import (
    GaussianRational,
    Scalar,
    format_scalar,
    parse_scalar,
    rat,
    scalar_conj,
    scalar_im,
    scalar_is_real,
    scalar_re,
    sqrt_rat,
    to_fraction,
)


def _coerce(c) -> Scalar:
    if isinstance(c, GaussianRational):
        return c
    return rat(c)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def t() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def constant(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(c, k: int) -> "Poly":
        return Poly([0] * k + [c])

    @staticmethod
    def from_roots(roots: Sequence) -> "Poly":
        p = Poly.one()
        for r in roots:
            p = p * Poly([-_coerce(r), 1])
        return p

    # -- basic queries -----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self) -> Scalar:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def is_real(self) -> bool:
        return all(scalar_is_real(c) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if not other:
                return Poly.zero()
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if not ca:
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs))

    # -- euclidean structure -------------------------------------------------
    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dn = other.degree, len(rem) - 1
        if dn < dd:
            return Poly.zero(), self
        inv_lead = other.leading()
        quo = [Fraction(0)] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd]
            if c:
                q = c / inv_lead
                quo[k] = q
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * oc
        return Poly(quo), Poly(rem[:dd])

    def __floordiv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Poly.constant(other)
        return self.divmod(other)[0]

    def __mod__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Poly.constant(other)
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"inexact division: remainder {r}")
        return q

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.monic()

    def lcm(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        return (self * other).exact_div(self.gcd(other)).monic()

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    # -- calculus -------------------------------------------------------------
    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Poly":
        """Termwise antiderivative with zero constant."""
        return Poly([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- real/complex structure -------------------------------------------------
    def conj_coeffs(self) -> "Poly":
        return Poly([scalar_conj(c) for c in self.coeffs])

    def real_part(self) -> "Poly":
        return Poly([scalar_re(c) for c in self.coeffs])

    def imag_part(self) -> "Poly":
        return Poly([scalar_im(c) for c in self.coeffs])

    def to_real(self) -> "Poly":
        """Demote to Fraction coefficients; error if any imaginary part survives."""
        return Poly([to_fraction(c) for c in self.coeffs])

    def rational_content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(1)
        nums = 0
        dens = 1
        for c in self.coeffs:
            f = to_fraction(c)
            nums = int_gcd(nums, abs(f.numerator))
            dens = dens * f.denominator // int_gcd(dens, f.denominator)
        return Fraction(nums, dens)

    def primitive(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.rational_content())

    # -- serialization ------------------------------------------------------------
    def to_json(self) -> list:
        return [format_scalar(c) for c in self.coeffs]

    @staticmethod
    def from_json(data: list) -> "Poly":
        return Poly([parse_scalar(c) for c in data])

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return " + ".join(parts)


def taylor_shift(p: Poly, beta) -> List[Scalar]:
    """Coefficients c with p(t) = sum c_j (t - beta)**j, exact.

    Computed by repeated synthetic division by (t - beta).
    """
    beta = _coerce(beta)
    cs = list(p.coeffs)
    out: List[Scalar] = []
    for _ in range(len(cs)):
        # one synthetic division: cs = q*(t - beta) + rem
        n = len(cs) - 1
        if n == 0:
            out.append(cs[0])
            cs = []
            break
        q = [Fraction(0)] * n
        carry = cs[n]
        for k in range(n - 1, -1, -1):
            q[k] = carry
            carry = cs[k] + beta * carry
        out.append(carry)
        cs = q
    return out


def from_taylor(coeffs: Sequence, beta) -> Poly:
    """Inverse of taylor_shift: rebuild p from its coefficients at beta."""
    beta = _coerce(beta)
    shift = Poly([-beta, 1])
    acc = Poly.zero()
    power = Poly.one()
    for c in coeffs:
        acc = acc + power * c
        power = power * shift
    return acc


def poly_square_root(p: Poly) -> Poly:
    """Exact q with q*q == p and positive leading coefficient.

    Raises NotASquare when no rational-coefficient square root exists (odd
    degree, non-square leading coefficient, or a failed coefficient match).
    """
    if p.is_zero():
        raise ValueError("square root of the zero polynomial")
    p = p.to_real()
    n = p.degree
    if n % 2:
        raise NotASquare(f"odd degree {n}")
    lead = sqrt_rat(to_fraction(p.leading()))
    if lead is None:
        raise NotASquare(f"leading coefficient {p.leading()} is not a rational square")
    m = n // 2
    q = [Fraction(0)] * (m + 1)
    q[m] = lead
    for k in range(m - 1, -1, -1):
        # match the coefficient of t**(k+m): p[k+m] = 2 q_k q_m + cross terms
        acc = to_fraction(p[k + m])
        for a in range(k + 1, m):
            b = k + m - a
            if k < b < m:
                acc -= q[a] * q[b]
        q[k] = acc / (2 * lead)
    root = Poly(q)
    if root * root != p:
        raise NotASquare("coefficient recursion left a nonzero remainder")
    return root
