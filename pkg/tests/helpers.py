import random
from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from polymoment.poly import LinearMap, Poly

ZS = sp.Symbol("z")


def to_sympy(p: Poly):
    coeffs = [sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)]
    return sp.Poly(coeffs or [0], ZS, domain=sp.QQ)


def from_sympy(expr) -> Poly:
    sp_poly = expr if isinstance(expr, sp.Poly) else sp.Poly(expr, ZS)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(sp_poly.all_coeffs())]
    return Poly(coeffs)


def random_poly(rng: random.Random, degree: int, lo: int = -9, hi: int = 9) -> Poly:
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return Poly(coeffs + [lead])


def random_linear(rng: random.Random) -> LinearMap:
    a = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return LinearMap(a, Fraction(rng.randint(-5, 5), rng.randint(1, 3)))


small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def polys(draw, min_degree=0, max_degree=6):
    deg = draw(st.integers(min_value=min_degree, max_value=max_degree))
    coeffs = draw(st.lists(small_ints, min_size=deg, max_size=deg))
    lead = draw(small_ints.filter(bool))
    return Poly(coeffs + [lead])


# one "PASS/FAIL" line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
