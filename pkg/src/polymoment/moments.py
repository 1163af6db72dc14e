"""Moments, reducibility certificates, merging, classification and generators.

A pair ``(P, Q)`` with endpoints ``a != b`` solves the moment problem when
``integral_a^b P^k dQ = 0`` for every ``k >= 0``.  Endpoints are either both
rational or both Chebyshev nodes ``cos(k*pi/N)``; nodes are evaluated
exactly in ``Q(2*cos(pi/N))``.

Two kinds of evidence are produced.  A *structural* certificate lists
reducible terms ``V∘W`` with ``W(a) == W(b)`` and ``W`` a right factor of
``P``; by change of variables it proves that every moment vanishes.  A
*checked* certificate only records the moments ``k = 0..K``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import NamedTuple, Sequence

from .decomposition import (
    all_right_factors,
    common_right_component,
    divisors,
    left_quotient,
)
from .errors import (
    ConsistencyError,
    ConsistencyWarning,
    EndpointError,
    HypothesisError,
    NotReducibleError,
)
from .linalg import express_in_composition_span
from .numeric import (
    FieldElement,
    NodeAngle,
    cos_field,
    node_cheb_image,
    node_embed,
    node_relations,
)
from .poly import LinearMap, Poly, chebyshev, compose
from .ritt import match_cheb_pair, match_power_pair

__all__ = [
    "Endpoints",
    "ReducibleTerm",
    "MomentCertificate",
    "SolutionClass",
    "Instance",
    "RemarkReport",
    "moment",
    "moments_vanish",
    "certify_reducible",
    "merge_reducible",
    "classify_solution",
    "verify_solution_class",
    "skun_checks",
    "gen_case2",
    "gen_case3",
    "gen_case4",
    "triple_decomposition_chain",
    "find_case4_endpoints",
    "verify_remark_example",
]

Z = Poly([0, 1])


def _zpow(n: int) -> Poly:
    return Poly.monomial(n)


def _chain(*polys: Poly) -> Poly:
    return reduce(compose, polys)


def _point(x):
    if isinstance(x, (NodeAngle, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        return NodeAngle.parse(text) if "cos" in text else Fraction(text)
    raise EndpointError(f"unsupported endpoint {x!r}")


def as_rational(x):
    """Collapse a number-field element of degree zero to a Fraction."""
    if isinstance(x, FieldElement) and x.is_rational():
        return x.rep.coeff(0)
    return x


class Endpoints:
    """Integration limits ``a != b``, both rational or both Chebyshev nodes.

    Nodes are lifted to the least common denominator ``N`` and embedded in
    ``Q(2*cos(pi/N))``.
    """

    def __init__(self, a, b):
        a, b = _point(a), _point(b)
        if isinstance(a, NodeAngle) != isinstance(b, NodeAngle):
            raise EndpointError("endpoints must both be rational or both be nodes")
        self.field = None
        if isinstance(a, NodeAngle):
            N = lcm(a.N, b.N)
            a, b = a.lift(N), b.lift(N)
            self.field = cos_field(N)
            self._va, self._vb = node_embed(a, self.field), node_embed(b, self.field)
        else:
            self._va, self._vb = a, b
        if a == b:
            raise EndpointError(f"endpoints coincide: {a}")
        self.a, self.b = a, b

    @classmethod
    def parse(cls, text: str) -> "Endpoints":
        parts = text.split(",")
        if len(parts) != 2:
            raise EndpointError(f"expected 'a,b', got {text!r}")
        return cls(parts[0], parts[1])

    @property
    def is_node(self) -> bool:
        return self.field is not None

    @property
    def values(self):
        return self._va, self._vb

    def eval(self, p: Poly):
        return p(self._va), p(self._vb)

    def same(self, p: Poly) -> bool:
        va, vb = self.eval(p)
        return va == vb

    def negated(self, p: Poly) -> bool:
        va, vb = self.eval(p)
        return va == -vb

    def __str__(self):
        return f"{self.a},{self.b}"

    def __repr__(self):
        return f"Endpoints({self})"


@dataclass(frozen=True)
class ReducibleTerm:
    """``V∘W`` with ``W(a) == W(b)``."""

    V: Poly
    W: Poly

    def compose(self) -> Poly:
        return compose(self.V, self.W)


@dataclass(frozen=True)
class MomentCertificate:
    """``structural``: reducible terms proving all moments vanish.
    ``checked``: the moments ``0..K`` only.
    """

    kind: str
    terms: tuple[ReducibleTerm, ...] = ()
    P_tilde: Poly | None = None
    K: int | None = None
    moments: tuple = ()

    @property
    def all_zero(self) -> bool:
        if self.kind == "structural":
            return True
        return all(m == 0 for m in self.moments)

    @property
    def first_nonzero(self) -> int | None:
        return next((k for k, m in enumerate(self.moments) if m != 0), None)


@dataclass(frozen=True)
class SolutionClass:
    """Classifier verdict.

    ``status`` is ``"classified"`` (``case`` in 1..4 with witnesses),
    ``"unclassified"`` (all checked moments vanish) or ``"not a solution"``.
    """

    status: str
    case: int | None
    witnesses: dict = field(default_factory=dict)
    endpoints: Endpoints | None = None
    certificate: MomentCertificate | None = None

    def reconstruct(self) -> tuple[Poly, Poly]:
        return _case_polys(self.case, self.witnesses)


class Instance(NamedTuple):
    P: Poly
    Q: Poly
    endpoints: Endpoints
    certificate: MomentCertificate


# -- moments -------------------------------------------------------------------

def moment(P: Poly, Q: Poly, e: Endpoints, k: int):
    """``integral_a^b P^k Q' dz``, exact in the endpoint field."""
    if k < 0:
        raise ValueError("moment index must be nonnegative")
    F = (P**k * Q.derivative()).antiderivative()
    fa, fb = e.eval(F)
    return as_rational(fb - fa)


def moments_vanish(P: Poly, Q: Poly, e: Endpoints, K: int) -> MomentCertificate:
    """Moments ``0..K``; ``all_zero`` tells whether they all vanish."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    dq = Q.derivative()
    out = []
    pk = Poly([1])
    for _ in range(K + 1):
        fa, fb = e.eval((pk * dq).antiderivative())
        out.append(as_rational(fb - fa))
        pk = pk * P
    return MomentCertificate("checked", K=K, moments=tuple(out))


def _quotient(f: Poly, w: Poly) -> Poly | None:
    if f.degree >= 1 and f.degree % w.degree:
        return None
    return left_quotient(f, w)


def certify_reducible(P: Poly, Q: Poly, W: Poly, e: Endpoints) -> MomentCertificate:
    """Structural certificate for ``P = P~∘W``, ``Q = Q~∘W``, ``W(a) = W(b)``."""
    if W.degree < 1:
        raise NotReducibleError("P", "W must be nonconstant")
    pt = _quotient(P, W)
    if pt is None:
        raise NotReducibleError("P", "P is not a polynomial in W")
    qt = _quotient(Q, W)
    if qt is None:
        raise NotReducibleError("Q", "Q is not a polynomial in W")
    if not e.same(W):
        raise NotReducibleError("endpoints", "W(a) != W(b)")
    return MomentCertificate("structural", terms=(ReducibleTerm(qt, W),), P_tilde=pt)


# -- merging -------------------------------------------------------------------

def merge_reducible(
    terms: Sequence[ReducibleTerm], e: Endpoints, P: Poly | None = None
) -> list[ReducibleTerm]:
    """Merge pairs of terms that share a right factor ``Z`` with ``Z(a) = Z(b)``.

    Pairs are scanned in index order and divisors of the degree gcd from the
    largest down.  The represented sum ``sum V_i∘W_i`` never changes.
    """
    terms = list(terms)
    for t in terms:
        if t.W.degree < 1 or not e.same(t.W):
            raise HypothesisError(f"term with W = {t.W} has W(a) != W(b)")
        if P is not None and _quotient(P, t.W) is None:
            raise HypothesisError(f"{t.W} is not a right factor of P")
    merged = True
    while merged and len(terms) > 1:
        merged = False
        for i, j in combinations(range(len(terms)), 2):
            ti, tj = terms[i], terms[j]
            g = gcd(ti.W.degree, tj.W.degree)
            for d in reversed(divisors(g)[1:]):
                comp = common_right_component([ti.W, tj.W], d)
                if comp is None or not e.same(comp[0]):
                    continue
                z, (xi, xj) = comp
                new = ReducibleTerm(compose(ti.V, xi) + compose(tj.V, xj), z)
                terms = [t for k, t in enumerate(terms) if k not in (i, j)]
                terms.insert(i, new)
                merged = True
                break
            if merged:
                break
    if len(terms) > 3:
        warnings.warn(
            f"{len(terms)} reducible terms remain after merging", ConsistencyWarning
        )
    return terms


# -- classification ------------------------------------------------------------

def _case_polys(case: int, w: dict) -> tuple[Poly, Poly]:
    W = w.get("W")
    if case == 1:
        return compose(w["P_tilde"], W), compose(w["Q_tilde"], W)
    if case == 2:
        n, s, R = w["n"], w["s"], w["R"]
        inner2 = _zpow(s) * compose(R, _zpow(n))
        P = _chain(w["U"], inner2 ** n, W)
        Q = _chain(w["V1"], _zpow(n), W) + _chain(w["V2"], inner2, W)
        return P, Q
    if case == 3:
        n, m = w["n"], w["m"]
        P = _chain(w["U"], chebyshev(n * m), W)
        Q = _chain(w["V1"], chebyshev(n), W) + _chain(w["V2"], chebyshev(m), W)
        return P, Q
    if case == 4:
        n, m, R = w["n"], w["m"], w["R"]
        odd = compose(Z * compose(R, _zpow(2)), chebyshev(m * n))
        P = _chain(w["U"], compose(_zpow(2), odd), W)
        Q = (
            _chain(w["V1"], chebyshev(2 * n), W)
            + _chain(w["V2"], chebyshev(2 * m), W)
            + _chain(w["V3"], odd, W)
        )
        return P, Q
    raise ValueError(f"no polynomials for case {case!r}")


def _case_conditions(case: int, w: dict, e: Endpoints) -> bool:
    W = w.get("W")
    wa, wb = e.eval(W)
    if case == 1:
        return wa == wb
    if case == 2:
        n, s = w["n"], w["s"]
        return (
            n > 1 and s >= 1 and gcd(s, n) == 1
            and wa**n == wb**n and w["R"](wa**n) == 0
        )
    n, m = w["n"], w["m"]
    if n < 2 or m < 2 or gcd(n, m) != 1:
        return False
    tn, tm = chebyshev(n), chebyshev(m)
    if case == 3:
        return tn(wa) == tn(wb) and tm(wa) == tm(wb)
    if case == 4:
        return (
            n % 2 == 1 and m % 2 == 1
            and tn(wa) == -tn(wb) and tm(wa) == -tm(wb)
            and wa != -wb and w["R"](1) == 0
        )
    return False


def verify_solution_class(P: Poly, Q: Poly, e: Endpoints, sc: SolutionClass) -> bool:
    """Recompose the witnesses and re-check every endpoint condition."""
    if sc.case is None:
        return False
    return _case_polys(sc.case, sc.witnesses) == (P, Q) and _case_conditions(
        sc.case, sc.witnesses, e
    )


def _structural(terms) -> MomentCertificate:
    return MomentCertificate("structural", terms=tuple(terms))


def _match_pair(P, Q, terms, e):
    """Case 3, then case 2, for two merged terms."""
    (v1, w1), (v2, w2) = [(t.V, t.W) for t in terms]
    comp = common_right_component([w1, w2], gcd(w1.degree, w2.degree))
    if comp is None:
        return None
    wc, (x1, x2) = comp
    if x1.degree < 2 or x2.degree < 2:
        return None
    found = []
    cm = match_cheb_pair(x1, x2)
    if cm is not None:
        n, m = cm["n"], cm["m"]
        w = cm["mu"](wc)
        u = _quotient(P, compose(chebyshev(n * m), w))
        if u is not None:
            found.append((3, {
                "V1": compose(v1, cm["sigma_a"].poly),
                "V2": compose(v2, cm["sigma_b"].poly),
                "U": u, "W": w, "n": n, "m": m,
            }))
    for (va, xa), (vb, xb) in (((v1, x1), (v2, x2)), ((v2, x2), (v1, x1))):
        pm = match_power_pair(xa, xb)
        if pm is None or pm["n"] < 2:
            continue
        n, s = pm["n"], pm["s"]
        scale, r = pm["R"].lc, pm["R"].monic()
        w = pm["mu"](wc)
        u = _quotient(P, compose((_zpow(s) * compose(r, _zpow(n))) ** n, w))
        if u is not None:
            found.append((2, {
                "V1": compose(va, pm["sigma_a"].poly),
                "V2": compose(vb, LinearMap(scale, pm["sigma_b"].b).poly),
                "R": r, "W": w, "U": u, "s": s, "n": n,
            }))
    return found


def _match_triple(P, Q, terms, e):
    vs = [t.V for t in terms]
    ws = [t.W for t in terms]
    g = reduce(gcd, (w.degree for w in ws))
    comp = common_right_component(ws, g)
    if comp is None:
        return []
    wc, xs = comp
    found = []
    for i, j in combinations(range(3), 2):
        k = 3 - i - j
        if xs[i].degree % 2 or xs[j].degree % 2:
            continue
        cm = match_cheb_pair(xs[i], xs[j])
        if cm is None:
            continue
        n, m = cm["n"] // 2, cm["m"] // 2
        mu = cm["mu"]
        x3 = _quotient(compose(xs[k], mu.inverse().poly), chebyshev(n * m))
        if x3 is None:
            continue
        c0 = x3.coeff(0)
        odd = x3 - c0
        if any(d % 2 == 0 for d in odd.support()):
            continue
        r = Poly([odd.coeff(2 * t + 1) for t in range((odd.degree + 1) // 2)])
        scale, r = r.lc, r.monic()
        w = mu(wc)
        core = compose(_zpow(2) * compose(r, _zpow(2)) ** 2, chebyshev(n * m))
        u = _quotient(P, compose(core, w))
        if u is None:
            continue
        found.append((4, {
            "V1": compose(vs[i], cm["sigma_a"].poly),
            "V2": compose(vs[j], cm["sigma_b"].poly),
            "V3": compose(vs[k], LinearMap(scale, c0).poly),
            "U": u, "W": w, "R": r, "n": n, "m": m,
        }))
    return found


def _span_terms(Q: Poly, ws: Sequence[Poly]) -> list[ReducibleTerm] | None:
    vs = express_in_composition_span(Q, ws)
    if vs is None:
        return None
    constant = sum((v.coeff(0) for v in vs if v.degree <= 0), Fraction(0))
    terms = [ReducibleTerm(v, w) for v, w in zip(vs, ws) if v.degree >= 1]
    if not terms:
        return None
    terms[0] = ReducibleTerm(terms[0].V + constant, terms[0].W)
    return terms


def classify_solution(
    P: Poly, Q: Poly, e: Endpoints, K: int | None = None
) -> SolutionClass:
    """Match ``(P, Q, a, b)`` against the four solution shapes.

    Case 3 is tried before case 2 for two-term representations: when both
    apply, the Chebyshev reading is reported.  Every verdict is re-verified
    by recomposition and endpoint checks before it is returned.
    """
    if P.degree < 1 or Q.degree < 1:
        raise ValueError("P and Q must be nonconstant")
    if K is None:
        K = Q.degree + 2
    factors = [w for w in all_right_factors(P).values() if w is not None]
    S = sorted((w for w in factors if e.same(w)), key=lambda w: w.degree)

    def accept(case, wit, terms):
        sc = SolutionClass("classified", case, wit, e, _structural(terms))
        return sc if verify_solution_class(P, Q, e, sc) else None

    for w in S:
        qt = _quotient(Q, w)
        if qt is not None:
            sc = accept(1, {"P_tilde": left_quotient(P, w), "Q_tilde": qt, "W": w},
                        [ReducibleTerm(qt, w)])
            if sc is not None:
                return sc

    for size in (2, 3):
        subsets = sorted(
            combinations(range(len(S)), size),
            key=lambda idx: (sum(S[i].degree for i in idx), idx),
        )
        for idx in subsets:
            terms = _span_terms(Q, [S[i] for i in idx])
            if terms is None:
                continue
            terms = merge_reducible(terms, e)
            if len(terms) == 1:
                t = terms[0]
                candidates = [(1, {"P_tilde": left_quotient(P, t.W), "Q_tilde": t.V, "W": t.W})]
            elif len(terms) == 2:
                candidates = _match_pair(P, Q, terms, e) or []
            elif len(terms) == 3:
                candidates = _match_triple(P, Q, terms, e)
            else:
                candidates = []
            for case, wit in candidates:
                sc = accept(case, wit, terms)
                if sc is not None:
                    return sc

    cert = moments_vanish(P, Q, e, K)
    status = "unclassified" if cert.all_zero else "not a solution"
    return SolutionClass(status, None, {}, e, cert)


# -- Chebyshev node lemma ------------------------------------------------------

def _odd_coprime(ms) -> None:
    if len(ms) != 2 or any(m < 1 or m % 2 == 0 for m in ms) or gcd(*ms) != 1:
        raise HypothesisError("need two odd coprime moduli")


def skun_checks(part: str, ms: Sequence[int], e):
    """Check the three statements about Chebyshev values at two points.

    part ``a``: returns ``((i, j), l)`` (one-based) with ``T_l(a) = T_l(b)``.
    part ``b``: returns ``a``, after confirming it is zero.  ``e`` may be a
    single point.
    part ``c``: returns ``"a=-b"`` or ``"T(a)=1"`` / ``"T(a)=-1"`` for
    ``T = T_{m1*m2}``.
    """
    if part == "b":
        pt = e if not isinstance(e, Endpoints) else e.a
        pt = _point(pt)
        _odd_coprime(ms)
        if isinstance(pt, NodeAngle):
            val = node_embed(pt, cos_field(pt.N))
        else:
            val = pt
        if any(chebyshev(m)(val) != 0 for m in ms):
            raise HypothesisError("T_m1(a) and T_m2(a) must both vanish")
        if val != 0:
            raise ConsistencyError(f"common zero {pt} is not 0")
        return pt
    if not isinstance(e, Endpoints):
        raise HypothesisError("parts a and c need two endpoints")
    if part == "a":
        if len(ms) != 3:
            raise HypothesisError("part a needs three moduli")
        if not all(e.same(chebyshev(m)) for m in ms):
            raise HypothesisError("T_mi(a) = T_mi(b) must hold for all three moduli")
        for i, j in combinations(range(3), 2):
            l = gcd(ms[i], ms[j])
            if e.same(chebyshev(l)):
                return (i + 1, j + 1), l
        raise ConsistencyError("no pair with T_l(a) = T_l(b)")
    if part == "c":
        _odd_coprime(ms)
        if not all(e.negated(chebyshev(m)) for m in ms):
            raise HypothesisError("T_mi(a) = -T_mi(b) must hold for both moduli")
        va, vb = e.values
        if va == -vb:
            return "a=-b"
        t = chebyshev(ms[0] * ms[1])(va)
        if t == 1:
            return "T(a)=1"
        if t == -1:
            return "T(a)=-1"
        raise ConsistencyError("neither a = -b nor T(a) = +-1")
    raise ValueError(f"unknown part {part!r}")


# -- generators ----------------------------------------------------------------

def _require_nonconstant(Q: Poly) -> None:
    if Q.degree < 1:
        raise HypothesisError("Q must be nonconstant")


def _negate_point(a):
    if isinstance(a, NodeAngle):
        return NodeAngle(a.N - a.k, a.N)
    return -a


def gen_case2(n: int, s: int, R: Poly, V1: Poly, V2: Poly, a) -> Instance:
    """``P = z^(sn) R^n(z^n)``, ``Q = V1∘z^n + V2∘z^s R(z^n)`` with ``b = -a``.

    Only even ``n`` is supported: a real ``b != a`` with ``b^n = a^n``
    exists only for even ``n``, and then ``b = -a``.
    """
    if n < 2 or s < 1 or gcd(s, n) != 1:
        raise HypothesisError("need n > 1, s >= 1 and gcd(s, n) = 1")
    if n % 2:
        raise HypothesisError("odd n has no real endpoint pair with a^n = b^n")
    a = _point(a)
    e = Endpoints(a, _negate_point(a))
    va, _ = e.values
    if R(va**n) != 0:
        raise HypothesisError("R(a^n) must vanish")
    w1 = _zpow(n)
    w2 = _zpow(s) * compose(R, _zpow(n))
    P = w2**n
    Q = compose(V1, w1) + compose(V2, w2)
    _require_nonconstant(Q)
    terms = [ReducibleTerm(v, w) for v, w in ((V1, w1), (V2, w2)) if v.degree >= 1]
    return Instance(P, Q, e, _structural(terms))


def _node_endpoints(e) -> Endpoints:
    if not isinstance(e, Endpoints):
        e = Endpoints(*e)
    if not e.is_node:
        raise EndpointError("Chebyshev-node endpoints are required here")
    return e


def gen_case3(n: int, m: int, V1: Poly, V2: Poly, e) -> Instance:
    """``P = T_nm``, ``Q = V1∘T_n + V2∘T_m`` at nodes with equal ``T_n``, ``T_m`` values."""
    if n < 2 or m < 2 or gcd(n, m) != 1:
        raise HypothesisError("need coprime n, m > 1")
    e = _node_endpoints(e)
    for k in (n, m):
        if node_cheb_image(e.a, k) != node_cheb_image(e.b, k):
            raise EndpointError(f"T_{k}(a) != T_{k}(b)")
    P = chebyshev(n * m)
    Q = compose(V1, chebyshev(n)) + compose(V2, chebyshev(m))
    _require_nonconstant(Q)
    terms = [
        ReducibleTerm(v, chebyshev(k)) for v, k in ((V1, n), (V2, m)) if v.degree >= 1
    ]
    return Instance(P, Q, e, _structural(terms))


def triple_decomposition_chain(n: int, m: int, R: Poly) -> list[tuple[str, Poly]]:
    """The equal expressions for ``P = z^2 R^2(z^2)∘T_mn`` as ``(label, expanded)``."""
    t = chebyshev
    half = Poly([Fraction(1, 2), Fraction(1, 2)])  # (z + 1)/2
    zr2 = Z * R**2
    outer = compose(zr2, half)
    odd = Z * compose(R, _zpow(2))
    return [
        ("z^2 R^2(z^2) o T_mn", _chain(_zpow(2) * compose(R, _zpow(2)) ** 2, t(m * n))),
        ("zR^2(z) o z^2 o T_mn", _chain(zr2, _zpow(2), t(m * n))),
        ("zR^2(z) o (z+1)/2 o T_2 o T_mn", _chain(zr2, half, t(2), t(m * n))),
        ("(z+1)/2 R^2((z+1)/2) o T_2mn", _chain(outer, t(2 * m * n))),
        ("(z+1)/2 R^2((z+1)/2) o T_m o T_2n", _chain(outer, t(m), t(2 * n))),
        ("(z+1)/2 R^2((z+1)/2) o T_n o T_2m", _chain(outer, t(n), t(2 * m))),
        ("z^2 o zR(z^2) o T_mn", _chain(_zpow(2), odd, t(m * n))),
    ]


def _case4_checks(n: int, m: int, R: Poly) -> None:
    if n < 3 or m < 3 or n % 2 == 0 or m % 2 == 0 or gcd(n, m) != 1:
        raise HypothesisError("need odd coprime n, m > 1")
    if R(1) != 0:
        raise HypothesisError("R(1) must vanish")


def _case4_nodes_ok(n: int, m: int, a: NodeAngle, b: NodeAngle) -> bool:
    for k in (n, m):
        if "negatives" not in node_relations(node_cheb_image(a, k), node_cheb_image(b, k)):
            return False
    return "negatives" not in node_relations(a, b)


def gen_case4(n: int, m: int, R: Poly, V1: Poly, V2: Poly, V3: Poly, e) -> Instance:
    """Triple-decomposition solution; the identity chain for ``P`` is verified first."""
    _case4_checks(n, m, R)
    e = _node_endpoints(e)
    if not _case4_nodes_ok(n, m, e.a, e.b):
        raise EndpointError("need T_n(a) = -T_n(b), T_m(a) = -T_m(b) and a != -b")
    chain = triple_decomposition_chain(n, m, R)
    P = chain[0][1]
    if any(p != P for _, p in chain[1:]):
        raise ConsistencyError("identity chain for P does not close")
    w3 = compose(Z * compose(R, _zpow(2)), chebyshev(m * n))
    ws = (chebyshev(2 * n), chebyshev(2 * m), w3)
    Q = sum((compose(v, w) for v, w in zip((V1, V2, V3), ws)), Poly())
    _require_nonconstant(Q)
    terms = [ReducibleTerm(v, w) for v, w in zip((V1, V2, V3), ws) if v.degree >= 1]
    return Instance(P, Q, e, _structural(terms))


def find_case4_endpoints(n: int, m: int) -> Endpoints:
    """First node pair over ``N = mn`` meeting the case-4 endpoint conditions.

    Scans ``k_b`` then ``k_a`` upward; ``a = b`` pairs are skipped.
    """
    N = n * m
    for kb in range(N + 1):
        for ka in range(N + 1):
            if ka == kb:
                continue
            a, b = NodeAngle(ka, N), NodeAngle(kb, N)
            if _case4_nodes_ok(n, m, a, b):
                return Endpoints(a, b)
    raise ConsistencyError(f"no case-4 node pair over N = {N}")


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass
class RemarkReport:
    m: int
    n: int
    R: Poly
    hypothesis_met: bool
    endpoints: Endpoints
    factor_degrees: list[int]
    pair_feasible: dict[tuple[str, str], bool]
    triple_feasible: bool
    triple_V: list[Poly] | None
    all_factor_pairs_infeasible: bool

    @property
    def confirms_remark(self) -> bool:
        return not any(self.pair_feasible.values()) and self.triple_feasible


def verify_remark_example(m: int, n: int, R: Poly) -> RemarkReport:
    """Check that the simplest case-4 ``Q`` needs three reducible terms.

    ``P = z^2 R^2(z^2)∘T_mn`` and ``Q = T_2m + T_2n + zR(z^2)∘T_mn``.  The
    span test runs on every pair from ``{T_2n, T_2m, zR(z^2)∘T_mn}`` and on
    every pair of right factors of ``P`` with ``W(a) = W(b)``.
    """
    if m == n:
        raise HypothesisError("m and n must differ")
    _case4_checks(n, m, R)
    met = _is_prime(m) and _is_prime(n) and m > 3 and n > 3
    e = find_case4_endpoints(n, m)
    P = compose(_zpow(2) * compose(R, _zpow(2)) ** 2, chebyshev(m * n))
    w3 = compose(Z * compose(R, _zpow(2)), chebyshev(m * n))
    named = {"T_2n": chebyshev(2 * n), "T_2m": chebyshev(2 * m), "W3": w3}
    Q = named["T_2m"] + named["T_2n"] + w3
    S = sorted(
        (w for w in all_right_factors(P).values() if w is not None and e.same(w)),
        key=lambda w: w.degree,
    )
    pairs = {
        (x, y): express_in_composition_span(Q, [named[x], named[y]]) is not None
        for x, y in combinations(named, 2)
    }
    triple = express_in_composition_span(Q, list(named.values()))
    any_pair = any(
        express_in_composition_span(Q, [u, v]) is not None for u, v in combinations(S, 2)
    )
    return RemarkReport(
        m, n, R, met, e, [w.degree for w in S], pairs,
        triple is not None, triple, not any_pair,
    )
