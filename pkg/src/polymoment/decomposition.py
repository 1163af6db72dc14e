"""Right factors, left/inner quotients, and coprime reduction of multi-decompositions.

Right factors are compared in normalized form (monic, zero constant term).
For polynomials a normalized right factor of a given degree is unique, so
``right_factor`` solves only the triangular top-coefficient equations and
then verifies the candidate by a full ``B``-adic expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import ConsistencyError, HypothesisError, InvalidDegreeError
from .numeric import rational_root
from .poly import LinearMap, Poly, compose

__all__ = [
    "DecompPair",
    "ReducedTuple",
    "normalize_inner",
    "right_factor",
    "left_quotient",
    "inner_quotient",
    "all_right_factors",
    "common_right_component",
    "reduce_coprime",
    "divisors",
]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class DecompPair:
    outer: Poly
    inner: Poly

    def compose(self) -> Poly:
        return compose(self.outer, self.inner)


@dataclass(frozen=True)
class ReducedTuple:
    """``P_i = U∘P~_i`` and ``W_i = W~_i∘V`` with coprime reduced degrees."""

    U: Poly
    V: Poly
    P_tilde: tuple[Poly, ...]
    W_tilde: tuple[Poly, ...]


def normalize_inner(b: Poly) -> tuple[Poly, LinearMap]:
    """Return ``(L∘b, L)`` with ``L∘b`` monic and vanishing at zero."""
    if b.degree < 1:
        raise ValueError("normalize_inner needs a nonconstant polynomial")
    lm = LinearMap(1 / b.lc, -b.coeff(0) / b.lc)
    return lm(b), lm


def _check_degree(n: int, d: int) -> None:
    if d < 1 or n < 1 or n % d:
        raise InvalidDegreeError(f"degree {d} does not divide {n}")


def left_quotient(f: Poly, b: Poly) -> Poly | None:
    """``A`` with ``A∘b == f``, read off the ``b``-adic digits of ``f``."""
    if b.degree < 1:
        raise InvalidDegreeError("inner polynomial must be nonconstant")
    if f.degree >= 1:
        _check_degree(f.degree, b.degree)
    digits = []
    rest = f
    while rest:
        rest, digit = divmod(rest, b)
        if digit.degree > 0:
            return None
        digits.append(digit.coeff(0))
    return Poly(digits)


def _top_root(f: Poly, r: int, d: int) -> Poly:
    """Normalized degree-``d`` candidate ``B`` with ``B^r`` matching ``f``'s top terms."""
    n = f.degree
    lead = f.lc
    g = [f.coeff(n - k) / lead for k in range(d)]
    alpha = Fraction(1, r)
    h = [Fraction(1)]
    for k in range(1, d):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if g[j]:
                acc += (alpha * j - k + j) * g[j] * h[k - j]
        h.append(acc / k)
    # B = z^d + h_1 z^{d-1} + ... + h_{d-1} z
    return Poly([0] + h[1:][::-1] + [1])


def right_factor(f: Poly, d: int) -> DecompPair | None:
    """Normalized right factor of degree ``d`` with its left quotient, or ``None``."""
    _check_degree(f.degree, d)
    if d == 1:
        return DecompPair(f, Poly([0, 1]))
    if d == f.degree:
        inner, lm = normalize_inner(f)
        return DecompPair(lm.inverse().poly, inner)
    cand = _top_root(f, f.degree // d, d)
    outer = left_quotient(f, cand)
    if outer is None:
        return None
    return DecompPair(outer, cand)


def inner_quotient(f: Poly, a: Poly) -> Poly | None:
    """``B`` with ``a∘B == f``; for even ``deg a`` the positive-leading branch is tried first."""
    if a.degree < 1:
        raise InvalidDegreeError("outer polynomial must be nonconstant")
    _check_degree(f.degree, a.degree)
    pair = right_factor(f, f.degree // a.degree)
    if pair is None:
        return None
    outer = pair.outer
    r = a.degree
    root = rational_root(outer.lc / a.lc, r)
    if root is None:
        return None
    branches = [root] if r % 2 else [abs(root), -abs(root)]
    for alpha in branches:
        if not alpha:
            continue
        scale = a.lc * r * alpha ** (r - 1)
        beta = (outer.coeff(r - 1) - a.coeff(r - 1) * alpha ** (r - 1)) / scale
        lm = LinearMap(alpha, beta)
        if compose(a, lm.poly) == outer:
            return lm(pair.inner)
    return None


def all_right_factors(f: Poly) -> dict[int, Poly | None]:
    """Map every divisor ``d`` of ``deg f`` to the normalized right factor or ``None``."""
    if f.degree < 1:
        raise InvalidDegreeError("all_right_factors needs a nonconstant polynomial")
    out: dict[int, Poly | None] = {}
    for d in divisors(f.degree):
        pair = right_factor(f, d)
        out[d] = pair.inner if pair else None
    return out


def common_right_component(
    ws: Sequence[Poly], d: int
) -> tuple[Poly, list[Poly]] | None:
    """Normalized ``Z`` of degree ``d`` dividing every ``W_i`` on the right."""
    for w in ws:
        _check_degree(w.degree, d)
    z = None
    quotients = []
    for w in ws:
        pair = right_factor(w, d)
        if pair is None:
            return None
        if z is None:
            z = pair.inner
        elif pair.inner != z:
            return None
        quotients.append(pair.outer)
    return z, quotients


def _same_composite(ps: Sequence[Poly], ws: Sequence[Poly]) -> Poly:
    if len(ps) != len(ws):
        raise HypothesisError("need as many outer as inner polynomials")
    comps = [compose(p, w) for p, w in zip(ps, ws)]
    if any(c != comps[0] for c in comps[1:]):
        raise HypothesisError("the compositions P_i∘W_i are not all equal")
    return comps[0]


def reduce_coprime(ps: Sequence[Poly], ws: Sequence[Poly]) -> ReducedTuple:
    """Split off ``U`` and ``V`` of degree the gcd of outer and inner degrees."""
    if len(ps) < 2:
        raise HypothesisError("reduce_coprime needs at least two decompositions")
    f = _same_composite(ps, ws)
    g_in = reduce(gcd, (w.degree for w in ws))
    g_out = reduce(gcd, (p.degree for p in ps))
    comp = common_right_component(ws, g_in)
    if comp is None:
        raise ConsistencyError(f"no common right component of degree {g_in}")
    v, w_tilde = comp
    pair = right_factor(f, f.degree // g_out)
    if pair is None:
        raise ConsistencyError(f"no left component of degree {g_out}")
    u, core = pair.outer, pair.inner
    p_tilde = []
    for p, w in zip(ps, ws):
        pt = left_quotient(core, w)
        if pt is None or compose(u, pt) != p:
            raise ConsistencyError("outer factor does not split through U")
        p_tilde.append(pt)
    return ReducedTuple(u, v, tuple(p_tilde), tuple(w_tilde))
