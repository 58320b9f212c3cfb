"""Sparse multivariate polynomials, square matrices and univariate results.

Coefficients are any exact scalar from :mod:`esymstab.exactnum` (int,
Fraction, Cyclotomic). Monomials are exponent tuples; terms are kept in a
dict from monomial to nonzero coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .errors import ArityMismatch, Singular
from .exactnum import divide, normalize_rational, render_scalar, Cyclotomic

Monomial = tuple


def grevlex_key(exponents: Monomial):
    """Sort key realizing graded reverse-lexicographic order (larger key = larger monomial)."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


def _clean(c):
    return normalize_rational(c)


class Polynomial:
    """Polynomial in X1..Xn. Treat instances as immutable."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ArityMismatch(f"monomial {mono} has wrong length for n={n}")
            if c != 0:
                clean[mono] = _clean(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, n, terms):
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n):
        return cls._from_clean(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n, i):
        """X_{i+1} (0-based index i)."""
        if not 0 <= i < n:
            raise ArityMismatch(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls._from_clean(n, {tuple(e): 1})

    @classmethod
    def linear_form(cls, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = _clean(c)
        return cls._from_clean(n, terms)

    # --- inspection -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -math.inf
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, d=None):
        degs = {sum(m) for m in self.terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.n, 0)

    def sorted_terms(self):
        """Terms from largest to smallest monomial in grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    # --- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ArityMismatch(f"polynomials in {self.n} and {other.n} variables")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = _clean(s)
        return Polynomial._from_clean(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if c == 0:
            return Polynomial.zero(self.n)
        out = {}
        for m, v in self.terms.items():
            p = v * c
            if p != 0:
                out[m] = _clean(p)
        return Polynomial._from_clean(self.n, out)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.n}, {render_polynomial(self)!r})"

    def __str__(self):
        return render_polynomial(self)

    # --- evaluation and substitution -------------------------------------

    def evaluate(self, x):
        return evaluate(self, x)

    def substitute(self, images):
        return substitute(self, images)


def render_polynomial(p: Polynomial) -> str:
    """Canonical text: grevlex-sorted terms, ``X1^2*X3`` style monomials."""
    if not p.terms:
        return "0"
    out = []
    for mono, c in p.sorted_terms():
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(f"X{i + 1}")
            elif e > 1:
                factors.append(f"X{i + 1}^{e}")
        mono_s = "*".join(factors)
        s = render_scalar(c)
        compound = isinstance(c, Cyclotomic) and (" + " in s or " - " in s)
        if compound:
            sign, body = "+", f"({s})"
        elif s.startswith("-"):
            sign, body = "-", s[1:]
        else:
            sign, body = "+", s
        if mono_s:
            if body == "1":
                body = mono_s
            else:
                body = f"{body}*{mono_s}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def _mono_value(mono, x, powers_cache):
    v = 1
    for i, e in enumerate(mono):
        if e:
            key = (i, e)
            pw = powers_cache.get(key)
            if pw is None:
                pw = x[i] ** e
                powers_cache[key] = pw
            v = v * pw
    return v


def evaluate(p: Polynomial, x):
    """Exact value of p at the point x."""
    if len(x) != p.n:
        raise ArityMismatch(f"point of length {len(x)} for a polynomial in {p.n} variables")
    cache = {}
    total = 0
    for mono, c in p.terms.items():
        total = total + c * _mono_value(mono, x, cache)
    return _clean(total)


def substitute(p: Polynomial, images) -> Polynomial:
    """Replace X_i by images[i]; all images must share one variable count."""
    if len(images) != p.n:
        raise ArityMismatch(f"{len(images)} images for a polynomial in {p.n} variables")
    if not images:
        return p
    m = images[0].n
    if any(q.n != m for q in images):
        raise ArityMismatch("substitution images have different variable counts")
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    result = {}
    for mono, c in p.terms.items():
        term = Polynomial.constant(m, c)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
        for mm, cc in term.terms.items():
            result[mm] = result.get(mm, 0) + cc
    return Polynomial(m, result)


class Matrix:
    """Dense matrix of exact scalars; rows are stored as tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_clean(x) for x in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ArityMismatch("ragged matrix rows")
        self.rows = rows

    @classmethod
    def identity(cls, n, scalar=1):
        return cls([[scalar if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def n(self):
        return len(self.rows)

    def is_square(self):
        r, c = self.shape
        return r == c

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def transpose(self):
        return Matrix(list(zip(*self.rows)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix([" + ", ".join(
            "[" + ", ".join(render_scalar(x) for x in row) + "]" for row in self.rows) + "])"

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.shape[1] != other.shape[0]:
                raise ArityMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows))
            return Matrix([[_dot(row, col) for col in cols] for row in self.rows])
        return self.apply(other)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        return Matrix([[x * c for x in row] for row in self.rows])

    __rmul__ = __mul__

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.shape[1]:
            raise ArityMismatch(f"vector of length {len(v)} for matrix of shape {self.shape}")
        return tuple(_clean(_dot(row, v)) for row in self.rows)

    def det(self):
        return determinant(self)

    def inverse(self):
        return inverse(self)

    def is_invertible(self):
        return self.det() != 0

    def minor(self, idx):
        """Principal submatrix on the index set idx."""
        return Matrix([[self.rows[i][j] for j in idx] for i in idx])


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            s = s + x * y
    return s


def determinant(m: Matrix):
    """Bareiss fraction-free elimination; every division is exact."""
    if not m.is_square():
        raise ArityMismatch(f"determinant of non-square matrix {m.shape}")
    n = m.n
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = 0
        prev = a[k][k]
    return _clean(a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1])


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the scalar field."""
    if not m.is_square():
        raise ArityMismatch(f"inverse of non-square matrix {m.shape}")
    n = m.n
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise Singular("matrix is not invertible")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [divide(x, p) for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return Matrix([row[n:] for row in a])


def compose_linear(p: Polynomial, g: Matrix) -> Polynomial:
    """p o g, i.e. substitute X_i -> sum_j g[i][j] X_j, so (p o g)(x) = p(g x)."""
    if not g.is_square() or g.n != p.n:
        raise ArityMismatch(f"cannot compose a polynomial in {p.n} variables with {g.shape} matrix")
    return substitute(p, [Polynomial.linear_form(row) for row in g.rows])


class UnivariatePoly:
    """Polynomial in one variable T; ``coefficients[k]`` multiplies T^k."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        c = [_clean(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @property
    def degree(self):
        return len(self.coefficients) - 1 if self.coefficients else -math.inf

    def __call__(self, t):
        v = 0
        for c in reversed(self.coefficients):
            v = v * t + c
        return _clean(v)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"UnivariatePoly({[render_scalar(c) for c in self.coefficients]})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        n = len(self.coefficients)
        p = Polynomial(1, {(k,): c for k, c in enumerate(self.coefficients)})
        return render_polynomial(p).replace("X1", "T") if n else "0"


def specialize_line(p: Polynomial, a, b) -> UnivariatePoly:
    """p(a*T + b) as a univariate polynomial in T."""
    if len(a) != p.n or len(b) != p.n:
        raise ArityMismatch(f"line of lengths {len(a)}, {len(b)} for {p.n} variables")
    images = [Polynomial(1, {(1,): ai, (0,): bi}) for ai, bi in zip(a, b)]
    q = substitute(p, images)
    deg = q.degree()
    if deg == -math.inf:
        return UnivariatePoly()
    return UnivariatePoly([q.coefficient((k,)) for k in range(deg + 1)])


def principal_subsets(n, r):
    """r-subsets of range(n) in colexicographic order."""
    return sorted(combinations(range(n), r), key=lambda s: tuple(reversed(s)))
