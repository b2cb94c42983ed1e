"""Exact dense linear algebra over Fraction / GaussianRational entries.

Gaussian elimination with pivoting by smallest coefficient bit-size, which
keeps intermediate fractions from swelling more than necessary.  Columns are
eliminated left to right, so callers control which unknowns become dependent
by ordering the columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import Infeasible, UnderdeterminedSystem
from .scalars import Scalar, bit_size

Matrix = List[List[Scalar]]
Vector = List[Scalar]


@dataclass
class LinearSolution:
    """Affine description of all solutions of M x = b."""

    particular: Vector
    nullspace: List[Vector]
    pivot_cols: List[int] = field(default_factory=list)
    free_cols: List[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    @property
    def is_unique(self) -> bool:
        return not self.nullspace


def _rref(rows: Matrix, rhs: Optional[Vector]):
    """Reduce in place; returns list of (row, col) pivot positions."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        best = None
        best_size = None
        for i in range(r, n_rows):
            v = rows[i][c]
            if v:
                s = bit_size(v)
                if best is None or s < best_size:
                    best, best_size = i, s
        if best is None:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
            if rhs is not None:
                rhs[best], rhs[r] = rhs[r], rhs[best]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv if not isinstance(piv, Fraction) else Fraction(1) / piv
            rows[r] = [v * inv for v in rows[r]]
            if rhs is not None:
                rhs[r] = rhs[r] * inv
        for i in range(n_rows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                if rhs is not None:
                    rhs[i] = rhs[i] - f * rhs[r]
        pivots.append((r, c))
        r += 1
        if r == n_rows:
            break
    return pivots


def solution_space(matrix: Sequence[Sequence], rhs: Optional[Sequence] = None) -> LinearSolution:
    """Complete affine solution set of M x = b (b defaults to zero).

    Raises Infeasible when the system has no solution.  Every returned vector
    satisfies the system exactly.
    """
    rows = [list(row) for row in matrix]
    if not rows:
        raise ValueError("empty system")
    n_cols = len(rows[0])
    b = [Fraction(v) if isinstance(v, int) else v for v in rhs] if rhs is not None else [Fraction(0)] * len(rows)
    pivots = _rref(rows, b)
    pivot_rows = {r for r, _ in pivots}
    for i in range(len(rows)):
        if i not in pivot_rows and b[i]:
            raise Infeasible(f"inconsistent equation (row {i}): 0 = {b[i]}")
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n_cols) if c not in set(pivot_cols)]
    particular: Vector = [Fraction(0)] * n_cols
    for r, c in pivots:
        particular[c] = b[r]
    nullspace: List[Vector] = []
    for f in free_cols:
        vec: Vector = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for r, c in pivots:
            vec[c] = -rows[r][f]
        nullspace.append(vec)
    return LinearSolution(particular, nullspace, pivot_cols, free_cols)


def nullspace(matrix: Sequence[Sequence]) -> List[Vector]:
    return solution_space(matrix).nullspace


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    return len(_rref(rows, None))


def solve_unique(matrix: Sequence[Sequence], rhs: Sequence) -> Vector:
    sol = solution_space(matrix, rhs)
    if not sol.is_unique:
        raise UnderdeterminedSystem(
            f"solution space has dimension {len(sol.nullspace)} (rank {sol.rank})"
        )
    return sol.particular


def matvec(matrix: Sequence[Sequence], vec: Sequence) -> Vector:
    return [sum((a * x for a, x in zip(row, vec)), Fraction(0)) for row in matrix]


def dependency_map(matrix: Sequence[Sequence]):
    """Express pivot unknowns of M x = 0 in terms of the free unknowns.

    Returns ({pivot_col: {free_col: coeff}}, free_cols): each pivot variable
    equals the stated combination of free variables on the whole nullspace.
    """
    rows = [list(row) for row in matrix]
    if not rows:
        return {}, []
    pivots = _rref(rows, None)
    n_cols = len(rows[0])
    free_cols = [c for c in range(n_cols) if c not in {c for _, c in pivots}]
    deps = {}
    for r, c in pivots:
        deps[c] = {f: -rows[r][f] for f in free_cols if rows[r][f]}
    return deps, free_cols
