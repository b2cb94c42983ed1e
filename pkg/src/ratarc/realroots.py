"""Exact real-root machinery: Sturm isolation, rational roots, and the search
for monic rational quadratic divisors.

Everything here stays in rational arithmetic; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import List, Tuple

from .poly import Poly
from .scalars import rat, to_fraction


def sturm_chain(p: Poly) -> List[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        chain.append(-rem)
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(chain: List[Poly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def squarefree_part(p: Poly) -> Poly:
    g = p.gcd(p.derivative())
    if g.degree <= 0:
        return p.monic()
    return p.exact_div(g).monic()


def count_roots_halfopen(p: Poly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of p in (a, b], p squarefree, p(a) != 0."""
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def isolate_real_roots(p: Poly, lo, hi) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, each containing exactly one real root of p
    within [lo, hi].  Exact rational roots come back as degenerate [r, r]."""
    lo, hi = rat(lo), rat(hi)
    if lo > hi:
        raise ValueError("empty interval")
    p = p.to_real()
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    work = squarefree_part(p)
    found: List[Tuple[Fraction, Fraction]] = []
    for endpoint in ([lo] if lo == hi else [lo, hi]):
        if work(endpoint) == 0:
            found.append((endpoint, endpoint))
            work = work.exact_div(Poly([-endpoint, 1]))
    if work.degree >= 1 and lo < hi:
        chain = sturm_chain(work)
        stack = [(lo, hi)]
        while stack:
            a, b = stack.pop()
            n = _variations(chain, a) - _variations(chain, b)
            if n == 0:
                continue
            if n == 1:
                found.append((a, b))
                continue
            mid = (a + b) / 2
            if work(mid) == 0:
                found.append((mid, mid))
                work = work.exact_div(Poly([-mid, 1]))
                chain = sturm_chain(work)
                if work.degree < 1:
                    continue
            stack.append((a, mid))
            stack.append((mid, b))
    found.sort(key=lambda iv: (iv[0], iv[1]))
    return found


def count_real_roots(p: Poly, lo, hi) -> int:
    return len(isolate_real_roots(p, lo, hi))


def _int_divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> List[Tuple[Fraction, int]]:
    """All rational roots with multiplicities."""
    p = p.to_real()
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots: List[Tuple[Fraction, int]] = []
    # strip powers of t
    mult0 = 0
    while p.degree >= 1 and p[0] == 0:
        p = p.exact_div(Poly.t())
        mult0 += 1
    if mult0:
        roots.append((Fraction(0), mult0))
    if p.degree < 1:
        return roots
    prim = p.primitive()
    a0 = to_fraction(prim[0]).numerator
    an = to_fraction(prim.leading()).numerator
    seen = set()
    for num in _int_divisors(a0):
        for den in _int_divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if prim(cand) == 0:
                    mult = 0
                    q = prim
                    lin = Poly([-cand, 1])
                    while q(cand) == 0:
                        q = q.exact_div(lin)
                        mult += 1
                    roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots


def monic_quadratic_factors(p: Poly) -> List[Tuple[Fraction, Fraction]]:
    """All (b, c) with t**2 + b*t + c dividing p, b**2 < 4c (no real roots).

    Candidates are enumerated from integer divisors of the primitive form's
    extreme coefficients; only quadratics that divide exactly are returned,
    sorted ascending by (b, c).  Requires p(0) != 0.
    """
    p = p.to_real()
    if p.degree < 2:
        return []
    if p[0] == 0:
        raise ValueError("expected a polynomial without roots at t = 0")
    prim = p.primitive()
    lead = abs(to_fraction(prim.leading()).numerator)
    const = abs(to_fraction(prim[0]).numerator)
    out = []
    seen = set()
    for a in _int_divisors(lead):
        for c in _int_divisors(const):
            # positive-definite factors only: conjugate root pairs give c/a > 0
            bound = isqrt(4 * a * c)
            if bound * bound == 4 * a * c:
                bound -= 1
            for b in range(-bound, bound + 1):
                key = (Fraction(b, a), Fraction(c, a))
                if key in seen:
                    continue
                seen.add(key)
                quad = Poly([key[1], key[0], 1])
                if quad.divides(prim):
                    out.append(key)
    out.sort()
    return out
