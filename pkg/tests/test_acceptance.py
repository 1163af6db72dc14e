"""Acceptance suite: one test per criterion, each timed against its budget.

Every test records a ``criterion N PASS|FAIL ...`` line (printed directly and
repeated in the pytest terminal summary).  Run standalone with
``python tests/test_acceptance.py`` to get just those lines.
"""

import functools
import random
import time
from fractions import Fraction
from functools import reduce
from math import gcd

from helpers import ACCEPTANCE_LINES, random_linear, random_poly
from polymoment.decomposition import inner_quotient, left_quotient, reduce_coprime, right_factor
from polymoment.moments import (
    Endpoints,
    certify_reducible,
    classify_solution,
    moments_vanish,
    skun_checks,
    triple_decomposition_chain,
    verify_remark_example,
    verify_solution_class,
)
from polymoment.numeric import NodeAngle, cos_field, node_cheb_image, node_embed
from polymoment.parser import parse_poly
from polymoment.poly import Poly, chebyshev, compose
from polymoment.ritt import os1_witness, ritt2_normal_form

z = Poly([0, 1])
T = chebyshev
SEED = 20240615


def chain(*ps):
    return reduce(compose, ps)


def criterion(number, title, budget):
    """Time the wrapped check, log a PASS/FAIL line and fail on overrun."""

    def wrap(check):
        @functools.wraps(check)
        def run():
            start = time.perf_counter()
            error = None
            try:
                check()
            except Exception as exc:  # noqa: BLE001 - every failure is reported
                error = exc
            elapsed = time.perf_counter() - start
            ok = error is None and elapsed < budget
            line = (f"criterion {number} {'PASS' if ok else 'FAIL'} "
                    f"{title} ({elapsed:.2f} s, budget {budget} s)")
            ACCEPTANCE_LINES.append(line)
            print(line)
            if error is not None:
                raise error
            assert elapsed < budget, line

        return run

    return wrap


# -- instance builders -------------------------------------------------------------

def first_kind_instance(rng):
    n = rng.choice([2, 3, 4])
    s = rng.choice([k for k in (1, 2, 3) if gcd(k, n) == 1])
    R = random_poly(rng, rng.randint(1, 2))
    while R.coeff(0) == 0:
        R = random_poly(rng, rng.randint(1, 2))
    nu, s1, s2, mu = (random_linear(rng) for _ in range(4))
    return (
        chain(nu.poly, z**s * R**n, s1.inverse().poly),
        chain(s1.poly, z**n, mu.poly),
        chain(nu.poly, z**n, s2.inverse().poly),
        chain(s2.poly, z**s * compose(R, z**n), mu.poly),
    )


def second_kind_instance(rng):
    m, n = rng.choice([(3, 4), (4, 3), (3, 5), (5, 3), (4, 5), (5, 4), (3, 7), (5, 6)])
    nu, s1, s2, mu = (random_linear(rng) for _ in range(4))
    return (
        chain(nu.poly, T(m), s1.inverse().poly),
        chain(s1.poly, T(n), mu.poly),
        chain(nu.poly, T(n), s2.inverse().poly),
        chain(s2.poly, T(m), mu.poly),
    )


def maybe_swap(rng, quad):
    p1, w1, p2, w2 = quad
    return (p2, w2, p1, w1) if rng.random() < 0.5 else quad


# -- criteria ------------------------------------------------------------------------

@criterion(1, "Chebyshev composition and parity identities, n, m <= 12", 5)
def test_criterion_1_chebyshev_algebra():
    for n in range(13):
        tn = T(n)
        assert compose(tn, -z) == tn * (-1) ** n
        for m in range(13):
            assert compose(tn, T(m)) == T(n * m)


@criterion(2, "decomposition roundtrip on 300 random pairs", 30)
def test_criterion_2_decomposition_roundtrip():
    rng = random.Random(SEED + 2)
    for _ in range(300):
        A = random_poly(rng, rng.randint(1, 8))
        B = random_poly(rng, rng.randint(1, 8))
        F = compose(A, B)
        pair = right_factor(F, B.degree)
        assert pair is not None
        assert compose(pair.outer, pair.inner) == F
        assert left_quotient(F, B) == A
        inner = inner_quotient(F, A)
        assert inner is not None and compose(A, inner) == F


@criterion(3, "coprime reduction on 100 multi-decompositions", 30)
def test_criterion_3_reduce_coprime():
    rng = random.Random(SEED + 3)
    for i in range(100):
        core = first_kind_instance(rng) if i % 2 else second_kind_instance(rng)
        p1, w1, p2, w2 = core
        U = random_poly(rng, rng.randint(1, 2))
        V = random_poly(rng, rng.randint(1, 2))
        ps = [compose(U, p1), compose(U, p2)]
        ws = [compose(w1, V), compose(w2, V)]
        red = reduce_coprime(ps, ws)
        assert red.U.degree == gcd(ps[0].degree, ps[1].degree)
        assert red.V.degree == gcd(ws[0].degree, ws[1].degree)
        for p, w, pt, wt in zip(ps, ws, red.P_tilde, red.W_tilde):
            assert compose(red.U, pt) == p
            assert compose(wt, red.V) == w
        assert compose(red.P_tilde[0], red.W_tilde[0]) == compose(red.P_tilde[1], red.W_tilde[1])


@criterion(4, "second Ritt normal forms, 100 first kind + 100 second kind", 60)
def test_criterion_4_ritt_normal_forms():
    rng = random.Random(SEED + 4)
    for kind, build in (("first", first_kind_instance), ("second", second_kind_instance)):
        for _ in range(100):
            quad = maybe_swap(rng, build(rng))
            form = ritt2_normal_form(*quad)
            assert form.kind == kind
            assert form.reconstruct() == quad
            if kind == "first":
                assert gcd(form.s, form.n) == 1


@criterion(5, "structural moment vanishing on 100 reducible instances", 60)
def test_criterion_5_structural_vanishing():
    rng = random.Random(SEED + 5)
    for _ in range(100):
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        b = a
        while b == a:
            b = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        h = random_poly(rng, rng.randint(0, 1))
        W = (z - a) * (z - b) * h + rng.randint(-9, 9)
        Pt, Qt = random_poly(rng, rng.randint(1, 2)), random_poly(rng, rng.randint(1, 3))
        P, Q = compose(Pt, W), compose(Qt, W)
        e = Endpoints(a, b)
        cert = certify_reducible(P, Q, W, e)
        assert cert.kind == "structural"
        assert moments_vanish(P, Q, e, 10).all_zero


@criterion(6, "classic counterexample: moments vanish, case 2, case 1 rejected", 5)
def test_criterion_6_classic_counterexample():
    P, Q = z**2 * (z**2 - 1) ** 2, z**3 + z**2 - z
    e = Endpoints(1, -1)
    assert moments_vanish(P, Q, e, 10).all_zero
    sc = classify_solution(P, Q, e)
    assert sc.case == 2 and verify_solution_class(P, Q, e, sc)
    # no right factor W of P with W(1) = W(-1) carries Q alone
    for d in (2, 3, 6):
        pair = right_factor(P, d)
        if pair is not None and e.same(pair.inner):
            assert Q.degree % d or left_quotient(Q, pair.inner) is None


@criterion(7, "case-3 instance at cos(pi/6), cos(5pi/6)", 10)
def test_criterion_7_case3():
    e = Endpoints(NodeAngle(1, 6), NodeAngle(5, 6))
    P, Q = T(6), T(2) + T(3)
    sc = classify_solution(P, Q, e)
    assert sc.case == 3
    assert e.field.min_poly == z**2 - 3
    cert = moments_vanish(P, Q, e, 6)
    assert cert.all_zero and len(cert.moments) == 7


@criterion(8, "case-4 identity chain for n=3, m=5, R=z-1", 10)
def test_criterion_8_identity_chain():
    exprs = triple_decomposition_chain(3, 5, z - 1)
    target = parse_poly("x^2*(x^2-1)^2 @ T(15)")
    assert target.degree == 90
    for _, p in exprs:
        assert p == target


@criterion(9, "common zeros of T3 and T5 over Chebyshev nodes", 5)
def test_criterion_9_skun_b_bruteforce():
    zero = NodeAngle(1, 2)

    def common_zeros(N):
        F = cos_field(N)
        found = []
        for k in range(N + 1):
            a = NodeAngle(k, N)
            by_angle = all(node_cheb_image(a, m) == zero for m in (3, 5))
            by_field = all(T(m)(node_embed(a, F)) == 0 for m in (3, 5))
            assert by_angle == by_field
            if by_angle:
                found.append(a)
        return found

    # cos(k*pi/15) is never 0, so there is no simultaneous zero at all
    assert common_zeros(15) == []
    for N in range(1, 61):
        if N % 2 and N % 15:
            continue
        found = common_zeros(N)
        assert found == ([zero] if N % 2 == 0 else [])
        for a in found:
            assert skun_checks("b", (3, 5), a) == zero
            assert node_embed(a, cos_field(N)) == 0


@criterion(10, "remark: m=5, n=7 needs three reducible terms", 300)
def test_criterion_10_remark():
    rep = verify_remark_example(5, 7, z - 1)
    assert rep.hypothesis_met
    assert not any(rep.pair_feasible.values())
    assert rep.triple_feasible
    assert rep.all_factor_pairs_infeasible
    assert rep.confirms_remark


@criterion(11, "witness scan on the case-4 chain and 50 Ritt instances", 30)
def test_criterion_11_os1_witnesses():
    rng = random.Random(SEED + 11)
    R = z - 1
    half = Poly([Fraction(1, 2), Fraction(1, 2)])
    outer = compose(z * R**2, half)
    odd = compose(z * compose(R, z**2), T(15))
    families = [([compose(outer, T(5)), compose(outer, T(3)), z**2], [T(6), T(10), odd])]
    for i in range(50):
        p1, w1, p2, w2 = first_kind_instance(rng) if i % 2 else second_kind_instance(rng)
        families.append(([p1, p2], [w1, w2]))
    for ps, ws in families:
        i, wi, j, wj = os1_witness(ps, ws)
        assert wi.rational and wj.rational
        assert wi.reconstruct() == ps[i]
        assert wj.reconstruct() == ws[j]


if __name__ == "__main__":
    checks = [(name, f) for name, f in globals().items() if name.startswith("test_criterion_")]
    for _, func in sorted(checks, key=lambda item: int(item[0].split("_")[2])):
        try:
            func()
        except Exception:  # noqa: BLE001 - the FAIL line is already printed
            pass
