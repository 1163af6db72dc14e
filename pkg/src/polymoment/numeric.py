"""Exact scalars: rationals, number fields Q[x]/(m), and Chebyshev nodes.

Rationals are :class:`fractions.Fraction`.  Number fields are used to hold
algebraic endpoints of the form ``cos(k*pi/N)``; the field for denominator
``N`` is generated by ``2*cos(pi/N)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DenominatorMismatchError, NotInvertibleError
from .poly import Poly, chebyshev, format_poly

__all__ = [
    "parse_rational",
    "int_root",
    "rational_root",
    "cyclotomic",
    "minpoly_two_cos",
    "NumberField",
    "FieldElement",
    "field_inverse",
    "cos_field",
    "NodeAngle",
    "node_cheb_image",
    "node_relations",
    "node_embed",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``."""
    return Fraction(text.strip())


def int_root(x: int, n: int) -> int | None:
    """Exact integer ``n``-th root of ``x`` or ``None``."""
    if n < 1:
        raise ValueError("root index must be positive")
    if x < 0:
        if n % 2 == 0:
            return None
        r = int_root(-x, n)
        return None if r is None else -r
    if x < 2:
        return x
    # Newton iteration from an upper bound
    r = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    return r if r**n == x else None


def rational_root(x: Fraction, n: int) -> Fraction | None:
    """Exact rational ``n``-th root of ``x`` (the real one), or ``None``."""
    x = Fraction(x)
    num = int_root(x.numerator, n)
    den = int_root(x.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """Cyclotomic polynomial by exact division of ``z^n - 1``."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = Poly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.exquo(cyclotomic(d))
    return p


@lru_cache(maxsize=None)
def minpoly_two_cos(N: int) -> Poly:
    """Monic minimal polynomial of ``2*cos(pi/N)``.

    Folds the palindromic cyclotomic polynomial ``Phi_{2N}`` with
    ``x = z + 1/z``.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if N == 1:
        return Poly([2, 1])
    phi = cyclotomic(2 * N)
    half = phi.degree // 2
    # z^j + z^-j = D_j(z + 1/z) with D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}
    x = Poly([0, 1])
    d_prev, d_cur = Poly([2]), x
    out = Poly([phi.coeffs[half]])
    for j in range(1, half + 1):
        out = out + d_cur.scale(phi.coeffs[half + j])
        d_prev, d_cur = d_cur, x * d_cur - d_prev
    return out


class NumberField:
    """The field ``Q[w]/(m(w))`` for a monic polynomial ``m``.

    Irreducibility of ``m`` is not checked; inverting an element that shares
    a factor with ``m`` raises :class:`NotInvertibleError`.
    """

    def __init__(self, min_poly, N: int | None = None):
        m = min_poly if isinstance(min_poly, Poly) else Poly(min_poly)
        if m.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if m.lc != 1:
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = m
        self.N = N

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({format_poly(self.min_poly, 'w')})"

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, Poly):
            return FieldElement(self, value)
        return FieldElement(self, Poly([value]))

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, Poly([0, 1]))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, Poly())

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, Poly([1]))


class FieldElement:
    """Element of a :class:`NumberField`, kept reduced modulo ``min_poly``."""

    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: Poly):
        self.field = field
        self.rep = rep % field.min_poly if rep.degree >= field.degree else rep

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        cs = list(self.rep.coeffs)
        return tuple(cs + [Fraction(0)] * (self.field.degree - len(cs)))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other.rep
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.rep + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.rep - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, o - self.rep)

    def __neg__(self):
        return FieldElement(self.field, -self.rep)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.rep * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, self.rep / other)
        if isinstance(other, FieldElement):
            return self * field_inverse(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return field_inverse(self) * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return field_inverse(self) ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return not self.rep.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == Poly([other])
        return NotImplemented

    def __hash__(self):
        if self.rep.degree <= 0:
            return hash(self.rep.coeff(0))
        return hash((self.field, self.rep))

    def is_rational(self) -> bool:
        return self.rep.degree <= 0

    def __str__(self):
        return f"{format_poly(self.rep, 'w')} (mod {format_poly(self.field.min_poly, 'w')})"

    def __repr__(self):
        return f"FieldElement({self})"


def field_inverse(x: FieldElement) -> FieldElement:
    """Inverse by the extended Euclidean algorithm against ``min_poly``."""
    if not x:
        raise ZeroDivisionError("inverse of zero in a number field")
    m = x.field.min_poly
    r0, r1 = m, x.rep
    s0, s1 = Poly(), Poly([1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree > 0:
        raise NotInvertibleError(
            f"{x} is not invertible; {format_poly(m, 'w')} is reducible"
        )
    return FieldElement(x.field, s0 / r0.lc)


@lru_cache(maxsize=None)
def cos_field(N: int) -> NumberField:
    """``Q(2*cos(pi/N))`` presented by :func:`minpoly_two_cos`."""
    return NumberField(minpoly_two_cos(N), N=N)


_NODE_RE = re.compile(
    r"^\s*cos\(\s*(?:(-?\d+)\s*\*?\s*)?pi\s*(?:/\s*(\d+))?\s*\)\s*$"
)


class NodeAngle:
    """The exact point ``cos(k*pi/N)`` in canonical form ``0 <= k <= N``."""

    __slots__ = ("k", "N")

    def __init__(self, k: int, N: int):
        if N < 1:
            raise ValueError("node denominator must be positive")
        k %= 2 * N
        if k > N:
            k = 2 * N - k
        self.k = k
        self.N = N

    @classmethod
    def parse(cls, text: str) -> "NodeAngle":
        m = _NODE_RE.match(text)
        if not m:
            raise ValueError(f"not a node: {text!r}")
        k = int(m.group(1)) if m.group(1) is not None else 1
        N = int(m.group(2)) if m.group(2) is not None else 1
        return cls(k, N)

    def lift(self, N: int) -> "NodeAngle":
        """Same point written over the denominator ``N`` (a multiple of ours)."""
        if N % self.N:
            raise DenominatorMismatchError(f"{N} is not a multiple of {self.N}")
        return NodeAngle(self.k * (N // self.N), N)

    def reduced(self) -> tuple[int, int]:
        g = gcd(self.k, self.N)
        return self.k // g, self.N // g

    def __eq__(self, other):
        return isinstance(other, NodeAngle) and self.reduced() == other.reduced()

    def __hash__(self):
        return hash(self.reduced())

    def __str__(self):
        return f"cos({self.k}*pi/{self.N})"

    def __repr__(self):
        return f"NodeAngle({self.k}, {self.N})"


def node_cheb_image(p: NodeAngle, n: int) -> NodeAngle:
    """``T_n(cos(k*pi/N)) = cos(n*k*pi/N)``."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    return NodeAngle(n * p.k, p.N)


def node_relations(p: NodeAngle, q: NodeAngle) -> frozenset[str]:
    """Subset of ``{"equal", "negatives"}``, or ``{"neither"}``."""
    N = p.N * q.N // gcd(p.N, q.N)
    kp, kq = p.lift(N).k, q.lift(N).k
    rel = set()
    if kp == kq:
        rel.add("equal")
    if (kp + kq) % (2 * N) == N:
        rel.add("negatives")
    return frozenset(rel or {"neither"})


def node_embed(p: NodeAngle, F: NumberField) -> FieldElement:
    """``cos(k*pi/N)`` as ``T_k(w/2)`` in ``Q[w]/(minpoly_two_cos(N))``."""
    if F.min_poly != minpoly_two_cos(p.N):
        raise DenominatorMismatchError(
            f"node {p} needs the field of 2*cos(pi/{p.N})"
        )
    half_gen = F.gen / 2
    return chebyshev(p.k)(half_gen)
