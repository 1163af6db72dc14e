"""Dense univariate polynomials over an exact field.

Coefficients are stored in ascending order.  The working field is the
rationals (:class:`fractions.Fraction`); number-field elements from
:mod:`polymoment.numeric` are accepted wherever only ring operations and
zero tests are needed (evaluation, products, sums).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = [
    "Poly",
    "LinearMap",
    "X",
    "chebyshev",
    "compose",
    "calculus",
    "eval_at",
    "poly_gcd",
    "squarefree",
    "gcd_and_squarefree",
    "resultant",
    "critical_value_poly",
    "linear_inverse",
    "format_poly",
]


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if hasattr(c, "field"):  # FieldElement
        return c
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _all_rational(seq) -> bool:
    return all(type(c) is Fraction for c in seq)


def _int_convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _mul_coeffs(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    if _all_rational(a) and _all_rational(b):
        da = lcm(*(c.denominator for c in a))
        db = lcm(*(c.denominator for c in b))
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        den = da * db
        return [Fraction(v, den) for v in _int_convolve(ia, ib)]
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return out


class Poly:
    """Immutable dense polynomial ``c0 + c1*z + ... + cn*z^n``.

    The zero polynomial has an empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        out = cls([1])
        for r in roots:
            out = out * cls([-_coerce(r), 1])
        return out

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        return Poly(_mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = _coerce(c)
        return Poly([c * x for x in self.coeffs])

    def __truediv__(self, c):
        if isinstance(c, Poly):
            if c.degree != 0:
                raise TypeError("use divmod for polynomial division")
            c = c.lc
        return self.scale(1 / _coerce(c))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly(), Poly(rem)
        inv = 1 / other.lc
        bc = other.coeffs
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            q = rem[i] * inv
            if not q:
                continue
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - q * bc[j]
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other) -> "Poly":
        """Exact division; raises ``ArithmeticError`` on a nonzero remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- evaluation and composition -----------------------------------------
    def __call__(self, x):
        if isinstance(x, Poly):
            return compose(self, x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Poly":
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def reflect(self) -> "Poly":
        """Return ``P(-z)``."""
        return Poly([-c if i % 2 else c for i, c in enumerate(self.coeffs)])

    # -- comparison and display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


X = Poly([0, 1])


def _fmt_coeff(c) -> str:
    s = str(c)
    return f"({s})" if hasattr(c, "field") else s


def format_poly(p: Poly, var: str = "x") -> str:
    """Render ``p`` in descending order, e.g. ``'4*x^3 - 3*x'``."""
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append((" - " if neg else " + ") + body)
    return "".join(terms) if terms else "0"


def compose(a: Poly, b: Poly) -> Poly:
    """Return ``a(b(z))`` by Horner's rule on polynomials."""
    if not a.coeffs:
        return Poly()
    acc = Poly([a.coeffs[-1]])
    for c in reversed(a.coeffs[:-1]):
        acc = acc * b + c
    return acc


@lru_cache(maxsize=None)
def chebyshev(n: int) -> Poly:
    """Chebyshev polynomial of the first kind, ``T_n(cos t) = cos(n t)``."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    prev, cur = Poly([1]), X
    if n == 0:
        return prev
    two_z = Poly([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, two_z * cur - prev
    return cur


def calculus(p: Poly) -> tuple[Poly, Poly]:
    """Return ``(p', antiderivative with zero constant term)``."""
    return p.derivative(), p.antiderivative()


def eval_at(p: Poly, x):
    """Evaluate exactly at a rational, a field element, or a Chebyshev node.

    Nodes are evaluated in the number field of their denominator.
    """
    from .numeric import NodeAngle, cos_field, node_embed

    if isinstance(x, NodeAngle):
        x = node_embed(x, cos_field(x.N))
    elif isinstance(x, (int, str)):
        x = Fraction(x)
    return p(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's squarefree factorisation into monic ``(factor, multiplicity)`` pairs.

    The leading coefficient is dropped; constant factors are omitted.
    """
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    c = p.exquo(g)
    d = dp.exquo(g) - c.derivative()
    i = 1
    while c.degree >= 1:
        f = poly_gcd(c, d)
        if f.degree >= 1:
            out.append((f, i))
        c = c.exquo(f)
        d = d.exquo(f) - c.derivative()
        i += 1
    return out


def gcd_and_squarefree(p: Poly, q: Poly):
    """Return ``(gcd(p, q), squarefree(p), squarefree(q))``."""
    if not p and not q:
        raise ValueError("gcd of two zero polynomials")
    return poly_gcd(p, q), squarefree(p), squarefree(q)


# -- resultants over a polynomial coefficient domain -------------------------

def _deg(coeffs) -> int:
    return len(coeffs) - 1


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of coefficient lists over an integral domain."""
    r = list(a)
    db = _deg(b)
    lb = b[-1]
    e = _deg(a) - db + 1
    while r and _deg(r) >= db:
        shift = _deg(r) - db
        lr = r[-1]
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - lr * b[j]
        _strip(r)
        e -= 1
    return [c * lb**e for c in r] if e > 0 else r


def resultant(a: Sequence, b: Sequence):
    """Subresultant-PRS resultant of two coefficient lists (ascending).

    Entries may be :class:`Poly` objects (a polynomial domain) or field
    scalars; only ring operations and exact division are used.
    """
    a, b = _strip(list(a)), _strip(list(b))
    one = Poly([1]) if any(isinstance(c, Poly) for c in a + b) else Fraction(1)
    if not a or not b:
        return one * 0
    s = one
    if _deg(a) < _deg(b):
        a, b = b, a
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
    g = one
    h = one

    def exdiv(x, y):
        return x.exquo(y) if isinstance(x, Poly) else x / y

    while True:
        if _deg(b) == 0:
            break
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
        r = _prem(a, b)
        a = b
        if not r:
            return one * 0
        div = g * h**delta
        b = [exdiv(c, div) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exdiv(g**delta, h ** (delta - 1))
    da = _deg(a)
    if da == 0:
        return s * one
    h = exdiv(b[-1] ** da, h ** (da - 1))
    return s * h


def critical_value_poly(p: Poly) -> Poly:
    """``Res_z(p(z) - t, p'(z))`` as a polynomial in ``t``.

    Up to a nonzero constant this is the product of ``t - p(beta)`` over the
    roots ``beta`` of ``p'`` counted with multiplicity.
    """
    if p.degree < 2:
        raise ValueError("critical_value_poly needs degree >= 2")
    shifted = [Poly([c]) for c in p.coeffs]
    shifted[0] = Poly([p.coeffs[0], -1])
    dp = [Poly([c]) for c in p.derivative().coeffs]
    res = resultant(shifted, dp)
    return res if isinstance(res, Poly) else Poly([res])


# -- linear maps --------------------------------------------------------------

@dataclass(frozen=True)
class LinearMap:
    """The degree-one polynomial ``a*z + b`` with ``a != 0``."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _coerce(self.a))
        object.__setattr__(self, "b", _coerce(self.b))
        if not self.a:
            raise ValueError("LinearMap requires a nonzero slope")

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def from_poly(cls, p: Poly) -> "LinearMap":
        if p.degree != 1:
            raise ValueError(f"not a degree-one polynomial: {p}")
        return cls(p.coeffs[1], p.coeffs[0])

    @property
    def poly(self) -> Poly:
        return Poly([self.b, self.a])

    def inverse(self) -> "LinearMap":
        return LinearMap(1 / self.a, -self.b / self.a)

    def then(self, other: "LinearMap") -> "LinearMap":
        """``other ∘ self``."""
        return LinearMap(other.a * self.a, other.a * self.b + other.b)

    def __call__(self, x):
        if isinstance(x, Poly):
            return x.scale(self.a) + self.b
        return self.a * x + self.b

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    def __str__(self):
        return format_poly(self.poly)


def linear_inverse(m: LinearMap) -> LinearMap:
    return m.inverse()
