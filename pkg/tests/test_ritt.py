from fractions import Fraction
from functools import reduce

import pytest

from helpers import random_linear, random_poly
from polymoment.errors import HypothesisError
from polymoment.poly import LinearMap, Poly, chebyshev, compose
from polymoment.ritt import (
    cheb_equiv,
    lemma_c2_form,
    lemma_c3_form,
    linear_equivalence,
    os1_witness,
    power_equiv,
    ritt2_normal_form,
)

z = Poly([0, 1])
T = chebyshev


def chain(*ps):
    return reduce(compose, ps)


# -- power / Chebyshev equivalence ---------------------------------------------

def test_power_equiv_examples():
    w = power_equiv(z**5)
    assert w.mu.is_identity() and w.nu.is_identity() and w.n == 5
    p = 2 * (z + 3) ** 5 - 7
    w = power_equiv(p)
    assert (w.mu.a, w.mu.b) == (2, -7)
    assert (w.nu.a, w.nu.b) == (1, 3)
    assert w.reconstruct() == p
    assert power_equiv(T(4)) is None
    # n = 2 is the one degree where Chebyshev and power overlap
    assert power_equiv(T(2)).reconstruct() == T(2)


def test_cheb_equiv_examples():
    w = cheb_equiv(T(4))
    assert w.kind == "chebyshev" and w.n == 4
    assert w.mu.is_identity() and w.nu.is_identity()
    assert cheb_equiv(z**4) is None
    w = cheb_equiv(compose(T(3), z + 1))
    assert w.mu.is_identity() and (w.nu.a, w.nu.b) == (1, 1)
    with pytest.raises(ValueError):
        cheb_equiv(z**2)


@pytest.mark.parametrize("n", range(3, 17))
def test_cheb_equiv_accepts_tn_rejects_zn(n):
    w = cheb_equiv(T(n))
    assert w is not None and w.reconstruct() == T(n)
    assert cheb_equiv(z**n) is None


def test_cheb_equiv_quadratic_extension_marker():
    # critical values of z^3 - 6z are +-4*sqrt(2): no rational normalisation
    w = cheb_equiv(z**3 - 6 * z)
    assert w is not None and not w.rational
    assert w.discriminant == 128
    with pytest.raises(ValueError):
        w.reconstruct()


def test_equivalence_invariant_under_linear_maps(rng):
    models = [z**2, z**3, z**5, T(3), T(4), T(5), T(6), z**4 + z, z**3 + z**2]
    for _ in range(100):
        p = rng.choice(models)
        mu, nu = random_linear(rng), random_linear(rng)
        q = chain(mu.poly, p, nu.poly)
        wp, wq = linear_equivalence(p), linear_equivalence(q)
        assert (wp is None) == (wq is None)
        if wp is not None:
            assert (wp.kind, wp.n) == (wq.kind, wq.n)
            assert wq.reconstruct() == q


def test_random_polys_rarely_equivalent(rng):
    for _ in range(30):
        p = random_poly(rng, 5)
        w = linear_equivalence(p)
        if w is not None and w.rational:
            assert w.reconstruct() == p


# -- second Ritt theorem ---------------------------------------------------------

def test_ritt2_first_kind_example():
    form = ritt2_normal_form(z * (z - 1) ** 2, z**2, z**2, z**3 - z)
    assert form.kind == "first" and not form.swapped
    assert (form.n, form.s, form.R) == (2, 1, z - 1)
    for m in (form.nu, form.sigma1, form.sigma2, form.mu):
        assert m.is_identity()
    assert form.reconstruct() == (z * (z - 1) ** 2, z**2, z**2, z**3 - z)


def test_ritt2_second_kind_example():
    form = ritt2_normal_form(T(3), T(4), T(4), T(3))
    assert form.kind == "second" and (form.m, form.n) == (3, 4)
    assert form.reconstruct() == (T(3), T(4), T(4), T(3))


def test_ritt2_degree_two_overlap_prefers_power():
    # T2 is z^2 up to linear maps, so this pair also has a first-kind reading
    form = ritt2_normal_form(T(2), T(3), T(3), T(2))
    assert form.kind == "first" and form.swapped and form.n == 2
    assert form.reconstruct() == (T(2), T(3), T(3), T(2))


def test_ritt2_swapped_orientation():
    form = ritt2_normal_form(z**2, z**3 - z, z * (z - 1) ** 2, z**2)
    assert form.kind == "first" and form.swapped
    assert form.reconstruct() == (z**2, z**3 - z, z * (z - 1) ** 2, z**2)


def test_ritt2_hypotheses():
    with pytest.raises(HypothesisError):
        ritt2_normal_form(z**2, z**2, z**2, z**2)
    with pytest.raises(HypothesisError):
        ritt2_normal_form(T(2), T(3), T(3), T(2) + 1)


def _conjugate(rng, p1, w1, p2, w2):
    nu, mu = random_linear(rng), random_linear(rng)
    s1, s2 = random_linear(rng), random_linear(rng)
    return (
        chain(nu.poly, p1, s1.inverse().poly),
        chain(s1.poly, w1, mu.poly),
        chain(nu.poly, p2, s2.inverse().poly),
        chain(s2.poly, w2, mu.poly),
    )


def test_ritt2_random_conjugates_of_first_example(rng):
    base = (z * (z - 1) ** 2, z**2, z**2, z**3 - z)
    for _ in range(25):
        quad = _conjugate(rng, *base)
        form = ritt2_normal_form(*quad)
        assert form.kind == "first"
        assert (form.n, form.s, form.R.degree) == (2, 1, 1)
        assert form.reconstruct() == quad


def test_ritt2_random_second_kind(rng):
    for _ in range(20):
        n, m = rng.choice([(3, 4), (3, 5), (2, 5), (4, 5)])
        quad = _conjugate(rng, T(m), T(n), T(n), T(m))
        form = ritt2_normal_form(*quad)
        assert form.reconstruct() == quad
        if min(n, m) > 2:
            assert form.kind == "second"


# -- factor-shape lemmas ---------------------------------------------------------

def test_lemma_c2_examples():
    f = lemma_c2_form(z * (z - 1) ** 2, 2, z**2, z**3 - z)
    assert f.kind == "power_side"
    assert f.sigma.is_identity() and f.R == z - 1 and (f.s, f.e) == (1, 1)
    assert f.reconstruct() == (z**3 - z, z**2 * (z**2 - 1) ** 2)

    deg = lemma_c2_form(z, 2, z, z**2)
    assert deg.e == 2 and deg.R.degree == 0
    assert deg.reconstruct() == (z**2, z**2)


def test_lemma_c2_conjugated_sigma():
    sigma = LinearMap(2, 1)
    w2 = sigma(z**3 - z)
    p2 = compose(z**2, sigma.inverse().poly)
    f = lemma_c2_form(z * (z - 1) ** 2, 2, p2, w2)
    # sigma is normalised to a translation; its scale moves into R
    assert f.sigma == LinearMap(1, 1)
    assert f.R == 2 * (z - 1)
    assert f.reconstruct()[0] == w2
    assert f.reconstruct()[1] == compose(p2, w2)


def test_lemma_c2_hypotheses():
    with pytest.raises(HypothesisError):
        lemma_c2_form(z, 1, z, z)
    with pytest.raises(HypothesisError):
        lemma_c2_form(z * (z - 1) ** 2, 2, z**2, z**3 + z)


def test_lemma_c3_examples():
    # composite z^2 (z^2 - 1)^2 seen through T2 = (2z - 1) o z^2
    theta_inv = Poly([Fraction(1, 2), Fraction(1, 2)])
    p1 = compose(z * (z - 1) ** 2, theta_inv)
    f = lemma_c3_form(p1, 2, z**2, z**3 - z)
    assert f.kind == "cheb_half"
    assert f.S == z - 1
    assert f.reconstruct() == (z**3 - z, z**2 * (z**2 - 1) ** 2)

    f = lemma_c3_form(T(2), 3, T(3), T(2))
    assert f.kind == "cheb_side" and f.t == 6 and f.sigma.is_identity()
    assert f.reconstruct() == (T(2), T(6))


def test_lemma_c3_cheb_half_generated():
    S = z + 2
    w2 = compose(z * compose(S, z**2), T(2))
    p = compose(z**2 * compose(S, z**2) ** 2, T(2))
    p1 = compose(z * compose(S, z) ** 2, (z + 1) / 2)  # p == p1 o T4
    assert compose(p1, T(4)) == p
    f = lemma_c3_form(p1, 4, z**2, w2)
    assert f.kind == "cheb_half" and f.S == S
    assert f.reconstruct() == (w2, p)


def test_lemma_c3_hypotheses():
    with pytest.raises(HypothesisError):
        lemma_c3_form(T(2), 3, T(2), T(3))
    with pytest.raises(HypothesisError):
        lemma_c3_form(T(2), 2, z**2, z**3)


# -- witness scan ------------------------------------------------------------------

def test_os1_case4_chain():
    R = z - 1
    odd = compose(z * compose(R, z**2), T(15))
    outer = compose(z * R**2, Poly([Fraction(1, 2), Fraction(1, 2)]))
    ps = [compose(outer, T(5)), compose(outer, T(3)), z**2]
    ws = [T(6), T(10), odd]
    i, wi, j, wj = os1_witness(ps, ws)
    assert j in (0, 1) and wj.kind == "chebyshev" and wj.reconstruct() == ws[j]
    assert i == 2 and wi.kind == "power" and wi.reconstruct() == ps[i]


def test_os1_chebyshev_pair_every_index():
    ps, ws = [T(2), T(3)], [T(3), T(2)]
    i, wi, j, wj = os1_witness(ps, ws)
    assert wi.reconstruct() == ps[i] and wj.reconstruct() == ws[j]
    for k in range(2):
        assert linear_equivalence(ps[k]) is not None
        assert linear_equivalence(ws[k]) is not None


def test_os1_skips_non_model_factor():
    odd = compose(z * (z**2 - 1), T(15))
    assert linear_equivalence(odd) is None
    R = z - 1
    outer = compose(z * R**2, Poly([Fraction(1, 2), Fraction(1, 2)]))
    ps = [z**2, compose(outer, T(5)), compose(outer, T(3))]
    ws = [odd, T(6), T(10)]
    _, _, j, wj = os1_witness(ps, ws)
    assert j == 1 and wj.reconstruct() == T(6)


def test_os1_hypotheses():
    with pytest.raises(HypothesisError):
        os1_witness([z**2], [z**3])
    with pytest.raises(HypothesisError):
        os1_witness([z**2, z**2], [z**3, z**3])
    with pytest.raises(HypothesisError):
        os1_witness([T(2), T(3)], [T(3), T(3)])


def test_os1_on_first_kind_example():
    form_inputs = (z * (z - 1) ** 2, z**2, z**2, z**3 - z)
    i, wi, j, wj = os1_witness(form_inputs[0::2], form_inputs[1::2])
    assert wi.reconstruct() == form_inputs[0::2][i]
    assert wj.reconstruct() == form_inputs[1::2][j]
