"""Linear equivalence to powers and Chebyshev polynomials, and Ritt-type normal forms.

All extracted forms carry rational linear maps and are checked by exact
recomposition before they are returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .decomposition import inner_quotient, left_quotient
from .errors import ClassificationError, ConsistencyError, HypothesisError
from .linalg import solve_linear
from .numeric import rational_root
from .poly import (
    LinearMap,
    Poly,
    chebyshev,
    compose,
    critical_value_poly,
    poly_gcd,
    squarefree,
)

__all__ = [
    "EquivWitness",
    "RittForm",
    "FactorForm",
    "power_equiv",
    "cheb_equiv",
    "linear_equivalence",
    "match_power_pair",
    "match_cheb_pair",
    "as_chebyshev",
    "ritt2_normal_form",
    "lemma_c2_form",
    "lemma_c3_form",
    "os1_witness",
]

POWER = "power"
CHEBYSHEV = "chebyshev"


def _zpow(n: int) -> Poly:
    return Poly.monomial(n)


def _apply(*polys: Poly) -> Poly:
    """Compose left to right: ``_apply(a, b, c) == a∘b∘c``."""
    return reduce(compose, polys)


@dataclass(frozen=True)
class EquivWitness:
    """``P == mu∘model∘nu`` where the model is ``z^n`` or ``T_n``.

    When the critical values of a Chebyshev-like polynomial are conjugate
    quadratic irrationals, ``mu`` and ``nu`` are ``None`` and ``discriminant``
    records the quadratic extension in which they live.
    """

    kind: str
    n: int
    mu: LinearMap | None
    nu: LinearMap | None
    discriminant: Fraction | None = None

    @property
    def rational(self) -> bool:
        return self.mu is not None

    def model(self) -> Poly:
        return _zpow(self.n) if self.kind == POWER else chebyshev(self.n)

    def reconstruct(self) -> Poly:
        if not self.rational:
            raise ValueError("witness maps live in a quadratic extension")
        return _apply(self.mu.poly, self.model(), self.nu.poly)


def power_equiv(p: Poly) -> EquivWitness | None:
    """Witness for ``p ~ z^n``: ``p'`` must be ``c*(z - z0)^(n-1)``."""
    n = p.degree
    if n < 1:
        raise ValueError("power_equiv needs a nonconstant polynomial")
    if n == 1:
        return EquivWitness(POWER, 1, LinearMap.from_poly(p), LinearMap.identity())
    dp = p.derivative()
    z0 = -dp.coeff(n - 2) / ((n - 1) * dp.lc)
    if dp != Poly([-z0, 1]) ** (n - 1) * dp.lc:
        return None
    return EquivWitness(POWER, n, LinearMap(dp.lc / n, p(z0)), LinearMap(1, -z0))


def as_chebyshev(x: Poly, m: int) -> LinearMap | None:
    """``sigma`` with ``x == sigma∘T_m``, if it exists."""
    if x.degree != m:
        return None
    t = chebyshev(m)
    a = x.lc / t.lc
    rest = x - t.scale(a)
    if rest.degree > 0:
        return None
    return LinearMap(a, rest.coeff(0))


def _two_value_quadratic(p: Poly) -> Poly | None:
    """Monic ``q`` of degree <= 2 vanishing at every critical value of ``p``.

    Assumes ``p'`` squarefree.  Cheap exact filter run before the resultant.
    """
    dp = p.derivative()
    r = p % dp
    if r.degree <= 0:
        return Poly([-r.coeff(0), 1])
    r2 = (r * r) % dp
    rows = [[r.coeff(i), Fraction(int(i == 0))] for i in range(dp.degree)]
    sol = solve_linear(rows, [-r2.coeff(i) for i in range(dp.degree)])
    if sol is None:
        return None
    return Poly([sol[1], sol[0], 1])


def cheb_equiv(p: Poly) -> EquivWitness | None:
    """Witness for ``p ~ T_n`` from the critical-value pattern of ``p``."""
    n = p.degree
    if n < 3:
        raise ValueError("cheb_equiv needs degree >= 3")
    dp = p.derivative()
    if poly_gcd(dp, dp.derivative()).degree > 0:
        return None
    q = _two_value_quadratic(p)
    if q is None or q.degree < 2:
        return None
    parts = squarefree(critical_value_poly(p))
    if n % 2:
        k = (n - 1) // 2
        if len(parts) != 1 or parts[0][1] != k or parts[0][0] != q:
            return None
    else:
        want = {(n - 2) // 2, n // 2}
        if sorted(f.degree for f, _ in parts) != [1, 1]:
            return None
        if {e for _, e in parts} != want:
            return None
    disc = q.coeff(1) ** 2 - 4 * q.coeff(0)
    root = rational_root(disc, 2)
    if root is None:
        return EquivWitness(CHEBYSHEV, n, None, None, discriminant=disc)
    if n % 2:
        v_big, v_small = (-q.coeff(1) - root) / 2, (-q.coeff(1) + root) / 2
    else:
        by_mult = {e: -f.coeff(0) for f, e in parts}
        v_big, v_small = by_mult[n // 2], by_mult[(n - 2) // 2]
    # sigma sends v_big -> -1 and v_small -> 1
    sigma = LinearMap(2 / (v_small - v_big), -(v_big + v_small) / (v_small - v_big))
    nu_poly = inner_quotient(sigma(p), chebyshev(n))
    if nu_poly is None:
        return None
    w = EquivWitness(CHEBYSHEV, n, sigma.inverse(), LinearMap.from_poly(nu_poly))
    if w.reconstruct() != p:
        return None
    return w


def linear_equivalence(p: Poly, rational_only: bool = False) -> EquivWitness | None:
    """Power witness first, then Chebyshev (degree >= 3)."""
    if p.degree < 1:
        return None
    w = power_equiv(p)
    if w is None and p.degree >= 3:
        w = cheb_equiv(p)
    if w is not None and rational_only and not w.rational:
        return None
    return w


def _anchor_mu(w: Poly) -> LinearMap | None:
    if w.degree == 1:
        return LinearMap.identity()
    if w.degree == 2:
        return power_equiv(w).nu
    wit = cheb_equiv(w)
    return wit.nu if wit is not None and wit.rational else None


def match_power_pair(wa: Poly, wb: Poly) -> dict | None:
    """Find ``wa = sa∘z^n∘mu`` and ``wb = sb∘z^s R(z^n)∘mu`` with ``gcd(s, n) = 1``.

    ``sb`` is a pure translation; ``R`` absorbs any scaling.
    """
    n = wa.degree
    if n < 1 or wb.degree < 1:
        return None
    pw = power_equiv(wa)
    if pw is None:
        return None
    mu, sa = pw.nu, pw.mu
    x = compose(wb, mu.inverse().poly)
    c0 = x.coeff(0)
    y = x - c0
    sup = y.support()
    s = sup[0]
    if any((e - s) % n for e in sup) or gcd(s, n) != 1:
        return None
    r = Poly([y.coeff(s + k * n) for k in range((y.degree - s) // n + 1)])
    return {"mu": mu, "sigma_a": sa, "sigma_b": LinearMap(1, c0), "n": n, "s": s, "R": r}


def match_cheb_pair(wa: Poly, wb: Poly) -> dict | None:
    """Find ``wa = sa∘T_n∘mu`` and ``wb = sb∘T_m∘mu`` with rational maps."""
    n, m = wa.degree, wb.degree
    if n < 1 or m < 1:
        return None
    anchor = wa if n >= m else wb
    mu0 = _anchor_mu(anchor)
    if mu0 is None:
        return None
    for mu in (mu0, mu0.then(LinearMap(-1))):
        inv = mu.inverse().poly
        sa = as_chebyshev(compose(wa, inv), n)
        sb = as_chebyshev(compose(wb, inv), m)
        if sa is not None and sb is not None:
            return {"mu": mu, "sigma_a": sa, "sigma_b": sb, "n": n, "m": m}
    return None


@dataclass(frozen=True)
class RittForm:
    """Second-Ritt-theorem normal form of ``P1∘W1 == P2∘W2``.

    first kind::

        P1 = nu∘z^s R^n(z)∘sigma1^-1      W1 = sigma1∘z^n∘mu
        P2 = nu∘z^n∘sigma2^-1             W2 = sigma2∘z^s R(z^n)∘mu

    second kind::

        P1 = nu∘T_m∘sigma1^-1             W1 = sigma1∘T_n∘mu
        P2 = nu∘T_n∘sigma2^-1             W2 = sigma2∘T_m∘mu

    ``swapped`` means the roles of the two decompositions were exchanged.
    """

    kind: str
    nu: LinearMap
    sigma1: LinearMap
    sigma2: LinearMap
    mu: LinearMap
    n: int
    s: int = 0
    m: int = 0
    R: Poly | None = None
    swapped: bool = False

    def oriented(self) -> tuple[Poly, Poly, Poly, Poly]:
        """The four polynomials in the orientation of the form (ignoring ``swapped``)."""
        s1i, s2i = self.sigma1.inverse().poly, self.sigma2.inverse().poly
        nu, mu = self.nu.poly, self.mu.poly
        if self.kind == "first":
            zs_rn = _zpow(self.s) * self.R ** self.n
            zs_r_zn = _zpow(self.s) * compose(self.R, _zpow(self.n))
            return (
                _apply(nu, zs_rn, s1i),
                _apply(self.sigma1.poly, _zpow(self.n), mu),
                _apply(nu, _zpow(self.n), s2i),
                _apply(self.sigma2.poly, zs_r_zn, mu),
            )
        tm, tn = chebyshev(self.m), chebyshev(self.n)
        return (
            _apply(nu, tm, s1i),
            _apply(self.sigma1.poly, tn, mu),
            _apply(nu, tn, s2i),
            _apply(self.sigma2.poly, tm, mu),
        )

    def reconstruct(self) -> tuple[Poly, Poly, Poly, Poly]:
        """``(P1, W1, P2, W2)`` in the caller's original order."""
        p1, w1, p2, w2 = self.oriented()
        return (p2, w2, p1, w1) if self.swapped else (p1, w1, p2, w2)


def _check_double(p1, w1, p2, w2) -> None:
    if compose(p1, w1) != compose(p2, w2):
        raise HypothesisError("P1∘W1 and P2∘W2 differ")
    if gcd(p1.degree, p2.degree) != 1 or gcd(w1.degree, w2.degree) != 1:
        raise HypothesisError("outer or inner degrees are not coprime")


def _linear_quotient(f: Poly, inner: Poly) -> LinearMap | None:
    q = left_quotient(f, inner)
    return LinearMap.from_poly(q) if q is not None and q.degree == 1 else None


def ritt2_normal_form(p1: Poly, w1: Poly, p2: Poly, w2: Poly) -> RittForm:
    """Classify a coprime double decomposition into first or second kind.

    Detection runs on the inner side: powers in both orientations before
    Chebyshev in both, the given orientation before the swapped one.
    """
    _check_double(p1, w1, p2, w2)
    orientations = [(False, (p1, w1, p2, w2)), (True, (p2, w2, p1, w1))]
    for swapped, (a1, b1, a2, b2) in orientations:
        pm = match_power_pair(b1, b2)
        if pm is None:
            continue
        nu = _linear_quotient(compose(a2, pm["sigma_b"].poly), _zpow(pm["n"]))
        if nu is None:
            continue
        form = RittForm(
            "first", nu, pm["sigma_a"], pm["sigma_b"], pm["mu"],
            n=pm["n"], s=pm["s"], R=pm["R"], swapped=swapped,
        )
        if form.reconstruct() == (p1, w1, p2, w2):
            if gcd(form.s, form.n) != 1:
                raise ConsistencyError("first-kind form with gcd(s, n) > 1")
            return form
    for swapped, (a1, b1, a2, b2) in orientations:
        cm = match_cheb_pair(b1, b2)
        if cm is None:
            continue
        nu = _linear_quotient(compose(a1, cm["sigma_a"].poly), chebyshev(cm["m"]))
        if nu is None:
            continue
        form = RittForm(
            "second", nu, cm["sigma_a"], cm["sigma_b"], cm["mu"],
            n=cm["n"], m=cm["m"], swapped=swapped,
        )
        if form.reconstruct() == (p1, w1, p2, w2):
            return form
    raise ClassificationError("no rational second-Ritt normal form found")


@dataclass(frozen=True)
class FactorForm:
    """Shape of a second right factor ``W2`` when ``P = P1∘z^n`` or ``P = P1∘T_n``.

    power_side:  ``W2 = sigma∘z^s R(z^n)``,  ``P = U∘z^(sn/e) R^(n/e)(z^n)``
    cheb_side:   ``W2 = sigma∘T_m``,         ``P = U∘T_t``,  ``t = lcm(n, m)``
    cheb_half:   ``W2 = sigma∘z S(z^2)∘T_(n/2)``,  ``P = U∘z^2 S^2(z^2)∘T_(n/2)``
    """

    kind: str
    sigma: LinearMap
    U: Poly
    n: int
    R: Poly | None = None
    s: int = 0
    e: int = 0
    m: int = 0
    t: int = 0
    S: Poly | None = None

    def inner_model(self) -> Poly:
        if self.kind == "power_side":
            return _zpow(self.s) * compose(self.R, _zpow(self.n))
        if self.kind == "cheb_side":
            return chebyshev(self.m)
        return compose(Poly([0, 1]) * compose(self.S, _zpow(2)), chebyshev(self.n // 2))

    def outer_model(self) -> Poly:
        if self.kind == "power_side":
            return self.inner_model() ** (self.n // self.e)
        if self.kind == "cheb_side":
            return chebyshev(self.t)
        return compose(_zpow(2) * compose(self.S, _zpow(2)) ** 2, chebyshev(self.n // 2))

    def reconstruct(self) -> tuple[Poly, Poly]:
        """``(W2, P)``."""
        return self.sigma(self.inner_model()), compose(self.U, self.outer_model())


def lemma_c2_form(p1: Poly, n: int, p2: Poly, w2: Poly) -> FactorForm:
    """Shape of ``W2`` when ``P1∘z^n == P2∘W2``; ``sigma`` is a translation."""
    if n < 2:
        raise HypothesisError("n must be at least 2")
    p = compose(p1, _zpow(n))
    if p != compose(p2, w2):
        raise HypothesisError("P1∘z^n and P2∘W2 differ")
    c0 = w2.coeff(0)
    y = w2 - c0
    sup = y.support()
    s = sup[0]
    if any((k - s) % n for k in sup):
        raise HypothesisError("W2 is not of the form sigma∘z^s R(z^n)")
    r = Poly([y.coeff(s + k * n) for k in range((y.degree - s) // n + 1)])
    e = gcd(n, w2.degree)
    u = left_quotient(p, y ** (n // e))
    if u is None:
        raise HypothesisError("P does not factor through z^(sn/e) R^(n/e)(z^n)")
    return FactorForm("power_side", LinearMap(1, c0), u, n, R=r, s=s, e=e)


def lemma_c3_form(p1: Poly, n: int, p2: Poly, w2: Poly) -> FactorForm:
    """Shape of ``W2`` when ``P1∘T_n == P2∘W2`` and ``n`` does not divide ``deg W2``."""
    p = compose(p1, chebyshev(n))
    if p != compose(p2, w2):
        raise HypothesisError("P1∘T_n and P2∘W2 differ")
    m = w2.degree
    if m < 1 or m % n == 0:
        raise HypothesisError("n must not divide deg W2")
    sigma = as_chebyshev(w2, m)
    if sigma is not None:
        t = lcm(n, m)
        u = left_quotient(p, chebyshev(t))
        if u is not None:
            return FactorForm("cheb_side", sigma, u, n, m=m, t=t)
    if n % 2 == 0:
        y = left_quotient(w2, chebyshev(n // 2))
        if y is not None:
            c0 = y.coeff(0)
            odd = y - c0
            if all(k % 2 for k in odd.support()):
                s_poly = Poly([odd.coeff(2 * k + 1) for k in range((odd.degree + 1) // 2)])
                form = FactorForm("cheb_half", LinearMap(1, c0), Poly(), n, S=s_poly)
                u = left_quotient(p, form.outer_model())
                if u is not None:
                    return FactorForm("cheb_half", LinearMap(1, c0), u, n, S=s_poly)
    raise ClassificationError("W2 matches neither Chebyshev shape")


def os1_witness(ps: Sequence[Poly], ws: Sequence[Poly]):
    """First outer and inner indices linearly equivalent to a power or Chebyshev.

    Rational witnesses are preferred over quadratic-extension ones.
    Returns ``(i, witness_i, j, witness_j)`` with zero-based indices.
    """
    if len(ps) != len(ws) or len(ps) < 2:
        raise HypothesisError("need at least two decompositions")
    comps = [compose(p, w) for p, w in zip(ps, ws)]
    if any(c != comps[0] for c in comps[1:]):
        raise HypothesisError("the compositions P_i∘W_i are not all equal")
    if reduce(gcd, (p.degree for p in ps)) != 1 or reduce(gcd, (w.degree for w in ws)) != 1:
        raise HypothesisError("outer or inner degrees have a common divisor")

    def scan(polys):
        found = [linear_equivalence(x) for x in polys]
        for want_rational in (True, False):
            for i, w in enumerate(found):
                if w is not None and w.rational == want_rational:
                    return i, w
        return None

    outer = scan(ps)
    inner = scan(ws)
    if outer is None or inner is None:
        raise ConsistencyError("no power or Chebyshev witness among the factors")
    return outer[0], outer[1], inner[0], inner[1]
