from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import ZS, from_sympy, polys, random_linear, random_poly, to_sympy
from polymoment.decomposition import (
    all_right_factors,
    common_right_component,
    inner_quotient,
    left_quotient,
    normalize_inner,
    reduce_coprime,
    right_factor,
)
from polymoment.errors import HypothesisError, InvalidDegreeError
from polymoment.linalg import express_in_composition_span, solve_linear
from polymoment.poly import Poly, chebyshev, compose

z = Poly([0, 1])
T = chebyshev


# -- linear algebra ------------------------------------------------------------

def test_solve_linear_basic():
    assert solve_linear([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None
    # underdetermined: free variable set to zero
    assert solve_linear([[1, 1]], [5]) == [5, 0]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=2, max_size=5),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_solve_linear_against_sympy(rows, x):
    rhs = [sum(r * v for r, v in zip(row, x)) for row in rows]
    sol = solve_linear(rows, rhs)
    assert sol is not None
    assert sp.Matrix(rows) * sp.Matrix(sol) == sp.Matrix(rhs)


def test_span_examples():
    vs = express_in_composition_span(T(6), [T(2), T(3)])
    assert vs is not None
    assert compose(vs[0], T(2)) + compose(vs[1], T(3)) == T(6)
    assert express_in_composition_span(z, [z**2]) is None
    assert express_in_composition_span(z**3 + z**2 - z, [z**2, z**3 - z]) == [z, z]
    with pytest.raises(ValueError):
        express_in_composition_span(z, [])


# -- right factors -------------------------------------------------------------

def test_right_factor_examples():
    pair = right_factor(T(6), 3)
    assert pair.outer == 32 * z**2 - 1
    assert pair.inner == z**3 - Fraction(3, 4) * z
    assert right_factor(z**6 + z, 2) is None
    with pytest.raises(InvalidDegreeError):
        right_factor(z**5, 2)
    assert right_factor(z**5 + 3, 1).inner == z
    full = right_factor(3 * z**4 + 2, 4)
    assert full.inner == z**4 and compose(full.outer, full.inner) == 3 * z**4 + 2


def test_left_and_inner_quotient_examples():
    assert left_quotient(T(6), T(2)) == 4 * z**3 - 3 * z
    assert left_quotient(z**6 + z, z**2) is None
    assert inner_quotient(compose(z**2, z**3 - z), z**2) == z**3 - z
    assert inner_quotient(T(6), T(2)) == T(3)
    assert inner_quotient(z**6 + 1, z**2 + z) is None
    assert inner_quotient(z**6 - Fraction(1, 4), z**2 + z) == z**3 - Fraction(1, 2)


def test_normalize_inner():
    b, lm = normalize_inner(3 * z**2 + 6 * z + 1)
    assert b == z**2 + 2 * z
    assert lm(3 * z**2 + 6 * z + 1) == b


def test_all_right_factors_t12():
    table = all_right_factors(T(12))
    assert sorted(table) == [1, 2, 3, 4, 6, 12]
    for d, w in table.items():
        assert w is not None
        assert w == normalize_inner(T(d))[0]


def test_common_right_component_example():
    zc, quotients = common_right_component([T(4), T(6)], 2)
    assert zc == z**2
    assert quotients == [8 * z**2 - 8 * z + 1, 32 * z**3 - 48 * z**2 + 18 * z - 1]
    assert common_right_component([T(3), 2 * T(3) + 5], 3)[0] == z**3 - Fraction(3, 4) * z
    assert common_right_component([T(4), z**4 + z], 2) is None


def test_reduce_coprime_example():
    red = reduce_coprime([z**2, z**3], [z**3, z**2])
    assert (red.U, red.V) == (z, z)
    assert red.P_tilde == (z**2, z**3)
    assert red.W_tilde == (z**3, z**2)


def test_reduce_coprime_errors():
    with pytest.raises(HypothesisError):
        reduce_coprime([z**2], [z**3])
    with pytest.raises(HypothesisError):
        reduce_coprime([z**2, z**3], [z**3, z**3])


def test_reduce_coprime_nontrivial_parts():
    u, v = z**2 + z, z**2 - 3 * z
    ps = [compose(u, T(2)), compose(u, T(3))]
    ws = [compose(T(3), v), compose(T(2), v)]
    red = reduce_coprime(ps, ws)
    assert red.U.degree == 2 and red.V.degree == 2
    for p, w, pt, wt in zip(ps, ws, red.P_tilde, red.W_tilde):
        assert compose(red.U, pt) == p
        assert compose(wt, red.V) == w


@given(polys(1, 4), polys(1, 4))
@settings(max_examples=80, deadline=None)
def test_roundtrip_property(a, b):
    f = compose(a, b)
    pair = right_factor(f, b.degree)
    assert pair is not None
    assert compose(pair.outer, pair.inner) == f
    assert pair.inner == normalize_inner(b)[0]
    assert left_quotient(f, b) == a
    assert compose(a, inner_quotient(f, a)) == f


def test_degrees_agree_with_sympy_decompose(rng):
    for _ in range(25):
        a = random_poly(rng, rng.randint(2, 3))
        b = random_poly(rng, rng.randint(2, 3))
        f = compose(a, b)
        chain = sp.decompose(to_sympy(f))
        inner = from_sympy(sp.Poly(chain[-1], ZS))
        # sympy's innermost factor is a right factor of f in our sense too
        pair = right_factor(f, inner.degree)
        assert pair is not None
        assert pair.inner == normalize_inner(inner)[0]


def test_reduce_coprime_random_construction(rng):
    # u∘T2 ∘ T3∘(L∘v) == u∘T3 ∘ T2∘(L∘v)
    for _ in range(10):
        u = random_poly(rng, 2)
        inner = compose(random_linear(rng).poly, random_poly(rng, 2))
        ps = [compose(u, T(2)), compose(u, T(3))]
        ws = [compose(T(3), inner), compose(T(2), inner)]
        red = reduce_coprime(ps, ws)
        assert red.U.degree == 2 and red.V.degree == 2
        for p, w, pt, wt in zip(ps, ws, red.P_tilde, red.W_tilde):
            assert compose(red.U, pt) == p
            assert compose(wt, red.V) == w
