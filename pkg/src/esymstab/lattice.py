"""Integer lattices in Z^n with a canonical column Hermite normal form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DimensionMismatch


def _columns_to_rows(cols, n):
    return [[c[i] for c in cols] for i in range(n)]


def hermite_normal_form(generators, n=None):
    """Column-style HNF of the lattice spanned by ``generators``.

    Returns ``(H, U)`` with H a list of nonzero basis columns and U a
    unimodular transform (list of columns, one per generator) such that
    G @ U = [H | 0]. H is in lower column-echelon form: the pivot of each
    column lies strictly below the previous column's pivot, pivots are
    positive, and every entry of a pivot row left of the pivot lies in
    [0, pivot).
    """
    gens = [list(map(int, g)) for g in generators]
    if n is None:
        if not gens:
            raise DimensionMismatch("cannot infer dimension from an empty generator list")
        n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise DimensionMismatch("generators of different lengths")
    m = len(gens)
    cols = [list(g) for g in gens]
    U = [[1 if i == j else 0 for i in range(m)] for j in range(m)]

    def swap(a, b):
        cols[a], cols[b] = cols[b], cols[a]
        U[a], U[b] = U[b], U[a]

    def addmul(dst, src, f):
        # column dst += f * column src
        if f:
            cols[dst] = [x + f * y for x, y in zip(cols[dst], cols[src])]
            U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def negate(c):
        cols[c] = [-x for x in cols[c]]
        U[c] = [-x for x in U[c]]

    k = 0
    pivots = []
    for row in range(n):
        if k == m:
            break
        # Euclid across columns k..m-1 until one nonzero entry remains in this row
        while True:
            nz = [j for j in range(k, m) if cols[j][row] != 0]
            if not nz:
                break
            best = min(nz, key=lambda j: abs(cols[j][row]))
            swap(k, best)
            done = True
            for j in range(k + 1, m):
                if cols[j][row]:
                    addmul(j, k, -(cols[j][row] // cols[k][row]))
                    if cols[j][row]:
                        done = False
            if done:
                break
        if all(cols[j][row] == 0 for j in range(k, m)):
            continue
        if cols[k][row] < 0:
            negate(k)
        p = cols[k][row]
        for j in range(k):
            addmul(j, k, -(cols[j][row] // p))
        pivots.append(row)
        k += 1
    return [cols[j] for j in range(k)], U, pivots


@dataclass(frozen=True)
class IntegerLattice:
    n: int
    generators: tuple
    hnf: tuple = field(init=False)
    pivots: tuple = field(init=False, repr=False)
    _transform: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        H, U, piv = hermite_normal_form(gens, self.n) if gens else ([], [], [])
        object.__setattr__(self, "hnf", tuple(tuple(c) for c in H))
        object.__setattr__(self, "pivots", tuple(piv))
        object.__setattr__(self, "_transform", tuple(tuple(c) for c in U))

    @property
    def rank(self):
        return len(self.hnf)

    def hnf_rows(self):
        """HNF as an n x rank matrix given by rows."""
        return _columns_to_rows(self.hnf, self.n)

    def determinant(self):
        """Product of pivots: the index in Z^n when the lattice has full rank, else 0."""
        if self.rank < self.n:
            return 0
        d = 1
        for c, p in zip(self.hnf, self.pivots):
            d *= c[p]
        return d

    def same_lattice(self, other: IntegerLattice) -> bool:
        return self.n == other.n and self.hnf == other.hnf

    def to_json(self):
        return {"generators": [list(g) for g in self.generators],
                "hnf": self.hnf_rows(), "determinant": self.determinant()}


def hnf(generators, n=None) -> IntegerLattice:
    gens = [tuple(g) for g in generators]
    if n is None:
        if not gens:
            raise DimensionMismatch("cannot infer dimension from an empty generator list")
        n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise DimensionMismatch("generators of different lengths")
    return IntegerLattice(n, tuple(gens))


def lattice_membership(L: IntegerLattice, v) -> Optional[tuple]:
    """Integer z with sum_j z_j * generators[j] == v, or None when v is not in L."""
    v = [int(x) for x in v]
    if len(v) != L.n:
        raise DimensionMismatch(f"vector of length {len(v)} in a lattice of dimension {L.n}")
    residual = list(v)
    y = []
    for col, p in zip(L.hnf, L.pivots):
        # rows above p are already zero in the residual
        q, rem = divmod(residual[p], col[p])
        if rem:
            return None
        y.append(q)
        if q:
            residual = [a - q * b for a, b in zip(residual, col)]
    if any(residual):
        return None
    m = len(L.generators)
    z = [0] * m
    for coef, ucol in zip(y, L._transform[: len(y)]):
        for i in range(m):
            z[i] += coef * ucol[i]
    return tuple(z)


def combine(generators, z):
    """sum_j z_j * generators[j]."""
    n = len(generators[0]) if generators else 0
    out = [0] * n
    for c, g in zip(z, generators):
        for i in range(n):
            out[i] += c * g[i]
    return tuple(out)
