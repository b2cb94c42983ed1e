"""Quaternions and quaternion polynomials with exact components.

Components may be Fraction or GaussianRational; the Gaussian unit is central
(commutes with i, j, k) and quaternion conjugation only negates the vector
components, never the Gaussian unit.  The polynomial variable t is central.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .poly import Poly, taylor_shift
from .scalars import (
    GaussianRational,
    Scalar,
    format_scalar,
    parse_scalar,
    rat,
    scalar_conj,
    scalar_is_real,
    to_fraction,
)


def _coerce(c) -> Scalar:
    if isinstance(c, GaussianRational):
        return c
    return rat(c)


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", _coerce(w))
        object.__setattr__(self, "x", _coerce(x))
        object.__setattr__(self, "y", _coerce(y))
        object.__setattr__(self, "z", _coerce(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- queries -----------------------------------------------------------
    @property
    def components(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.w, self.x, self.y, self.z)

    @property
    def vector(self) -> Tuple[Scalar, Scalar, Scalar]:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def __bool__(self):
        return not self.is_zero()

    @property
    def is_vectorial(self) -> bool:
        return not self.w

    @property
    def is_real(self) -> bool:
        """True when every component is free of the Gaussian unit."""
        return all(scalar_is_real(c) for c in self.components)

    def scalar_part(self) -> Scalar:
        return self.w

    def vector_part(self) -> "Quaternion":
        return Quaternion(0, self.x, self.y, self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Scalar:
        """q * conj(q); a Fraction for real quaternions, Gaussian in general."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError(f"{self} has zero norm")
        return self.conjugate() * (1 / n if isinstance(n, GaussianRational) else Fraction(1) / n)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def __rmul__(self, other):
        # only scalars reach here; scalar multiplication commutes
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def dot(self, other: "Quaternion") -> Scalar:
        """Bilinear 4D product (x*conj(y) + y*conj(x))/2, componentwise sum."""
        return (
            self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
        )

    def cross_vector(self, other: "Quaternion") -> "Quaternion":
        """Cross product of the vector parts."""
        return Quaternion(
            0,
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    # -- serialization ---------------------------------------------------------
    def to_json(self) -> list:
        return [format_scalar(c) for c in self.components]

    @staticmethod
    def from_json(data: Sequence) -> "Quaternion":
        return Quaternion(*(parse_scalar(c) for c in data))

    def __repr__(self):
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"

    def __str__(self):
        parts = []
        for c, unit in zip(self.components, ("", "i", "j", "k")):
            if c:
                parts.append(f"{c}{unit}" if unit else f"{c}")
        return " + ".join(parts) if parts else "0"


ONE = Quaternion(1)
QI = Quaternion(0, 1)
QJ = Quaternion(0, 0, 1)
QK = Quaternion(0, 0, 0, 1)


class QPoly:
    """Polynomial in a central variable with quaternion coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Quaternion):
                cs.append(c)
            else:
                cs.append(Quaternion(c))
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors ----------------------------------------------------------
    @staticmethod
    def zero() -> "QPoly":
        return QPoly()

    @staticmethod
    def constant(q) -> "QPoly":
        return QPoly([q])

    @staticmethod
    def from_scalar_poly(p: Poly) -> "QPoly":
        return QPoly([Quaternion(c) for c in p.coeffs])

    @staticmethod
    def from_components(w: Poly, x: Poly, y: Poly, z: Poly) -> "QPoly":
        n = max(w.degree, x.degree, y.degree, z.degree) + 1
        return QPoly([Quaternion(w[k], x[k], y[k], z[k]) for k in range(n)])

    @staticmethod
    def linear(root: Quaternion) -> "QPoly":
        """t - root."""
        return QPoly([-root, ONE])

    # -- queries -----------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Quaternion:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Quaternion()

    def leading(self) -> Quaternion:
        return self.coeffs[-1] if self.coeffs else Quaternion()

    @property
    def is_vectorial(self) -> bool:
        return all(c.is_vectorial for c in self.coeffs)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def component(self, idx: int) -> Poly:
        return Poly([c.components[idx] for c in self.coeffs])

    def components(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return tuple(self.component(i) for i in range(4))

    def scalar_poly(self) -> Poly:
        return self.component(0)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -----------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Quaternion)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Quaternion)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Product with another QPoly, a central scalar, or a scalar Poly."""
        if isinstance(other, (int, Fraction, GaussianRational)):
            return QPoly([c * other for c in self.coeffs])
        if isinstance(other, Poly):
            other = QPoly.from_scalar_poly(other)
        if isinstance(other, Quaternion):
            return self.mul_right(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        out = [Quaternion()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return QPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        if isinstance(other, Poly):
            return QPoly.from_scalar_poly(other) * self
        if isinstance(other, Quaternion):
            return self.mul_left(other)
        return NotImplemented

    def mul_left(self, q: Quaternion) -> "QPoly":
        return QPoly([q * c for c in self.coeffs])

    def mul_right(self, q: Quaternion) -> "QPoly":
        return QPoly([c * q for c in self.coeffs])

    def shift(self, k: int) -> "QPoly":
        if self.is_zero():
            return self
        return QPoly([Quaternion()] * k + list(self.coeffs))

    def conjugate(self) -> "QPoly":
        return QPoly([c.conjugate() for c in self.coeffs])

    def derivative(self) -> "QPoly":
        return QPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "QPoly":
        return QPoly([Quaternion()] + [c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)])

    def __call__(self, x) -> Quaternion:
        x = _coerce(x)
        acc = Quaternion()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def norm_poly(self) -> Poly:
        """The real polynomial self * conj(self), as the sum of squared components."""
        w, x, y, z = self.components()
        return w * w + x * x + y * y + z * z

    def scalar_product(self, other: "QPoly") -> Poly:
        """Componentwise 4D dot product, a scalar polynomial."""
        return sum(
            (self.component(i) * other.component(i) for i in range(4)), Poly.zero()
        )

    # -- division -------------------------------------------------------------------
    def div_right(self, divisor: "QPoly") -> Tuple["QPoly", "QPoly"]:
        """Quotient/remainder with the divisor on the right: self = Q * D + R."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_inv = divisor.leading().inverse()
        dd = divisor.degree
        rem = self
        quo = QPoly.zero()
        while rem.degree >= dd:
            k = rem.degree - dd
            c = rem.leading() * lead_inv
            term = QPoly.constant(c).shift(k)
            quo = quo + term
            rem = rem - term * divisor
        return quo, rem

    def div_left(self, divisor: "QPoly") -> Tuple["QPoly", "QPoly"]:
        """Quotient/remainder with the divisor on the left: self = D * Q + R."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_inv = divisor.leading().inverse()
        dd = divisor.degree
        rem = self
        quo = QPoly.zero()
        while rem.degree >= dd:
            k = rem.degree - dd
            c = lead_inv * rem.leading()
            term = QPoly.constant(c).shift(k)
            quo = quo + term
            rem = rem - divisor * term
        return quo, rem

    def mod_central(self, m: Poly) -> "QPoly":
        """Remainder after division by a central scalar polynomial."""
        return self.div_right(QPoly.from_scalar_poly(m))[1]

    def content(self) -> Poly:
        """Monic gcd of the component polynomials (real coefficients required)."""
        g = Poly.zero()
        for comp in self.components():
            g = g.gcd(comp.to_real()) if not g.is_zero() else comp.to_real().monic() if comp else g
        return g if not g.is_zero() else Poly.zero()

    def taylor_at(self, beta) -> List[Quaternion]:
        """Exact coefficients q_j with self = sum q_j (t - beta)**j."""
        comps = [taylor_shift(self.component(i), beta) for i in range(4)]
        n = len(self.coeffs)
        return [Quaternion(*(comps[i][k] for i in range(4))) for k in range(n)]

    def to_real_components(self) -> "QPoly":
        if not self.is_real:
            raise ValueError("polynomial has Gaussian components")
        return QPoly([Quaternion(*(to_fraction(c) for c in q.components)) for q in self.coeffs])

    # -- serialization -----------------------------------------------------------------
    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @staticmethod
    def from_json(data: Sequence) -> "QPoly":
        return QPoly([Quaternion.from_json(c) for c in data])

    def __repr__(self):
        return f"QPoly([{', '.join(repr(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*t")
            else:
                parts.append(f"({c})*t^{k}")
        return " + ".join(parts)


def hodograph(preimage: QPoly) -> QPoly:
    """The vector field A i conj(A); purely vectorial with norm N(A)**2."""
    return preimage.mul_right(QI) * preimage.conjugate()


def slope_field(preimage: QPoly) -> QPoly:
    """A (1 + i) conj(A): real part is the speed A conj(A), vector part the
    hodograph, and the vector part's norm equals the real part squared."""
    return preimage.mul_right(ONE + QI) * preimage.conjugate()


def is_h_reduced(preimage: QPoly, h: Quaternion) -> Tuple[bool, Poly]:
    """Whether A h conj(A) is free of nonconstant real factors.

    Returns (reduced, content): content is the monic gcd of the component
    polynomials of A h conj(A); reduced means it is constant.
    """
    if not h.vector_part():
        raise ValueError("h must have a nonzero vector part")
    product = preimage.mul_right(h) * preimage.conjugate()
    content = product.content()
    return content.degree <= 0, content


def pythagorean_quadruple(u: Poly, v: Poly, p: Poly, q: Poly, w: Poly):
    """Polynomial quadruple (x', y', z', sigma) with x'^2+y'^2+z'^2 = sigma^2."""
    two = Fraction(2)
    xd = w * (u * u + v * v - p * p - q * q)
    yd = w * (two * (u * q + v * p))
    zd = w * (two * (v * q - u * p))
    sigma = w * (u * u + v * v + p * p + q * q)
    return xd, yd, zd, sigma
