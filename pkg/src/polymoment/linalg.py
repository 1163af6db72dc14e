"""Exact Gaussian elimination and composition-span membership."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Poly

__all__ = ["solve_linear", "express_in_composition_span"]


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Solve ``A v = rhs`` exactly.

    Columns are pivoted left to right, each on the smallest-index remaining
    row with a nonzero entry.  Free variables are set to zero.  Returns
    ``None`` when the system is inconsistent.
    """
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        prow = m[top]
        inv = 1 / prow[col]
        prow[:] = [x * inv for x in prow]
        for i in range(len(m)):
            if i != top and m[i][col]:
                f = m[i][col]
                row = m[i]
                for j in range(col, ncols + 1):
                    if prow[j]:
                        row[j] -= f * prow[j]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    for i in range(top, len(m)):
        if m[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = m[r][ncols]
    return sol


def express_in_composition_span(q: Poly, ws: Sequence[Poly]) -> list[Poly] | None:
    """Find ``V_i`` with ``sum(V_i(W_i)) == q`` and ``deg V_i <= deg q // deg W_i``.

    Returns ``None`` if ``q`` is not in the composition span of ``ws``.
    """
    if not ws:
        raise ValueError("express_in_composition_span needs at least one W")
    if any(w.degree < 1 for w in ws):
        raise ValueError("every W must be nonconstant")
    dq = max(q.degree, 0)
    columns: list[tuple[int, Poly]] = []
    for i, w in enumerate(ws):
        power = Poly([1])
        for _ in range(dq // w.degree + 1):
            columns.append((i, power))
            power = power * w
    nrows = max(max(p.degree for _, p in columns), dq) + 1
    rows = [[p.coeff(r) for _, p in columns] for r in range(nrows)]
    rhs = [q.coeff(r) for r in range(nrows)]
    sol = solve_linear(rows, rhs)
    if sol is None:
        return None
    coeffs: list[list[Fraction]] = [[] for _ in ws]
    for (i, _), v in zip(columns, sol):
        coeffs[i].append(v)
    return [Poly(c) for c in coeffs]
