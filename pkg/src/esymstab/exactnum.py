"""Exact scalars: rationals and the cyclotomic fields Q(zeta_r).

Rationals are plain :class:`fractions.Fraction` values (ints are accepted
wherever a rational is). An element of Q(zeta_r) is stored as its residue
modulo the r-th cyclotomic polynomial, in the power basis
1, zeta, ..., zeta^(phi(r)-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from .errors import OrderMismatch

Rational = Fraction


# --- dense univariate helpers over Q, ascending coefficient lists -----------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return _trim(x - y for x, y in zip(a, b))


def _pdivmod(a, b):
    """Long division a = q*b + rem over Q. b must be nonzero."""
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a = _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def _divisors(r):
    return tuple(d for d in range(1, r + 1) if r % d == 0)


@dataclass(frozen=True)
class CyclotomicPoly:
    """The monic integer polynomial Phi_r; ``coefficients`` are ascending."""

    order: int
    coefficients: tuple[int, ...]

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __str__(self):
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or k == 0) else ""
            if body and mono:
                body += "*"
            term = body + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> CyclotomicPoly:
    """Phi_r = (x^r - 1) / prod(Phi_d for proper divisors d of r)."""
    if r < 1:
        raise ValueError(f"cyclotomic order must be positive, got {r}")
    num = [-1] + [0] * (r - 1) + [1]
    for d in _divisors(r)[:-1]:
        q, rem = _pdivmod(num, cyclotomic_polynomial(d).coefficients)
        assert not rem, "cyclotomic division left a remainder"
        num = q
    coeffs = tuple(int(c) for c in num)
    assert all(Fraction(c) == x for c, x in zip(coeffs, num))
    return CyclotomicPoly(r, coeffs)


def totient(r: int) -> int:
    return cyclotomic_polynomial(r).degree


@lru_cache(maxsize=None)
def _reduction_table(r):
    # row k - phi holds x^k mod Phi_r for phi <= k <= 2*phi - 2
    phi_poly = cyclotomic_polynomial(r).coefficients
    phi = len(phi_poly) - 1
    table = []
    cur = [-c for c in phi_poly[:-1]]  # x^phi
    for _ in range(max(phi - 1, 0)):
        table.append(tuple(cur))
        # multiply by x and reduce once
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [c - top * p for c, p in zip(cur, phi_poly[:-1])]
    return tuple(table)


def _is_rational(x):
    return isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC)


def _as_num_den(values):
    """Common-denominator form of a rational sequence: (int numerators, den > 0)."""
    values = [Fraction(v) for v in values]
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in values], den


def _reduce_ints(order, c):
    """Reduce integer coefficients (length <= 2*phi - 1) modulo Phi_order."""
    phi = totient(order)
    if len(c) <= phi:
        return list(c) + [0] * (phi - len(c))
    table = _reduction_table(order)
    out = list(c[:phi])
    for k in range(phi, len(c)):
        top = c[k]
        if top:
            for i, t in enumerate(table[k - phi]):
                if t:
                    out[i] += top * t
    return out


class Cyclotomic:
    """An element of Q(zeta_r), immutable, with structural equality.

    Internally the coefficients are integer numerators over one positive
    denominator, kept in lowest terms; ``coefficients`` gives Fractions.
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order, coefficients=()):
        phi = totient(order)
        c = [Fraction(x) for x in coefficients]
        if len(c) > 2 * phi - 1:
            c = _pdivmod(c, cyclotomic_polynomial(order).coefficients)[1]
        num, den = _as_num_den(c)
        num = _reduce_ints(order, num)
        self._set(order, num, den)

    def _set(self, order, num, den):
        g = den
        for x in num:
            if g == 1:
                break
            g = gcd(g, x)
        if g != 1:
            num = [x // g for x in num]
            den //= g
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_num", tuple(num))
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def _make(cls, order, num, den):
        obj = object.__new__(cls)
        obj._set(order, num, den)
        return obj

    @classmethod
    def rational(cls, order, value):
        value = Fraction(value)
        num = [0] * totient(order)
        num[0] = value.numerator
        return cls._make(order, num, value.denominator)

    @property
    def coefficients(self) -> tuple:
        return tuple(Fraction(x, self._den) for x in self._num)

    # --- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return other
            if other.is_rational():
                return Cyclotomic.rational(self.order, other.coefficients[0])
            if self.is_rational():
                return None  # caller re-dispatches on the other operand
            raise OrderMismatch(
                f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})")
        if _is_rational(other):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            me = Cyclotomic.rational(other.order, self.coefficients[0])
            return op(me, other)
        return op(self, o)

    def is_rational(self):
        return not any(self._num[1:])

    def is_zero(self):
        return not any(self._num)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # --- arithmetic -------------------------------------------------------

    def __add__(self, other):
        return self._binary(other, _cyclo_add)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.order, [-x for x in self._num], self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self._binary(other, lambda a, b: _cyclo_add(a, -b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic._make(self.order, [x * other for x in self._num], self._den)
        if _is_rational(other) and not isinstance(other, Cyclotomic):
            q = Fraction(other)
            return Cyclotomic._make(self.order, [x * q.numerator for x in self._num],
                                    self._den * q.denominator)
        return self._binary(other, _cyclo_mul)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_r."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.rational(self.order, 1 / self.to_rational())
        modulus = list(cyclotomic_polynomial(self.order).coefficients)
        # invariant: s_i * a == r_i (mod Phi_r)
        r0, r1 = modulus, _trim(self.coefficients)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant because Phi_r is irreducible
        c = Fraction(r1[0])
        return Cyclotomic(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if _is_rational(other) and not isinstance(other, Cyclotomic):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return Cyclotomic.rational(other.order, self.to_rational()) * other.inverse()
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # --- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return (self.order == other.order and self._den == other._den
                    and self._num == other._num)
        if isinstance(other, int):
            return self._den == 1 and self._num[0] == other and self.is_rational()
        if _is_rational(other):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            h = hash(self.to_rational()) if self.is_rational() else hash(
                (self.order, self._num, self._den))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coefficients]})"

    def __str__(self):
        return render_scalar(self)


def _cyclo_add(a, b):
    if a._den == b._den:
        return Cyclotomic._make(a.order, [x + y for x, y in zip(a._num, b._num)], a._den)
    da, db = a._den, b._den
    return Cyclotomic._make(a.order, [x * db + y * da for x, y in zip(a._num, b._num)], da * db)


def _cyclo_mul(a, b):
    phi = len(a._num)
    prod = [0] * (2 * phi - 1)
    for i, x in enumerate(a._num):
        if x:
            for j, y in enumerate(b._num):
                if y:
                    prod[i + j] += x * y
    return Cyclotomic._make(a.order, _reduce_ints(a.order, prod), a._den * b._den)


def zeta(r: int) -> Cyclotomic:
    """The class of x in Q[x]/Phi_r, a primitive r-th root of unity."""
    if r < 1:
        raise ValueError(f"root of unity order must be positive, got {r}")
    if totient(r) == 1:
        # Phi_1 = x - 1, Phi_2 = x + 1
        return Cyclotomic.rational(r, 1 if r == 1 else -1)
    return Cyclotomic(r, [0, 1])


def is_root_of_unity(a, k: int) -> bool:
    """True iff a**k == 1."""
    return a ** k == 1


def is_zero(x) -> bool:
    return x == 0


def scalar_pow(x, k):
    if isinstance(x, int) and k < 0:
        return Fraction(1, x ** -k)
    return x ** k


def divide(a, b):
    """Exact field division that keeps ints out of float land."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q = Fraction(a, b)
        return q.numerator if q.denominator == 1 else q
    return a / b


def normalize_rational(x):
    """Collapse integral Fractions to int for stable rendering."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _render_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_scalar(x) -> str:
    """Canonical text for a scalar in the literal grammar (``3``, ``-1/2``, ``1 + zeta(3)``)."""
    if not isinstance(x, Cyclotomic):
        return _render_rational(x)
    if x.is_rational():
        return _render_rational(x.coefficients[0])
    z = f"zeta({x.order})"
    parts = []
    for k, c in enumerate(x.coefficients):
        if c == 0:
            continue
        mono = "" if k == 0 else (z if k == 1 else f"{z}^{k}")
        mag = abs(c)
        if not mono:
            body = _render_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_render_rational(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
