"""Dominant weights, semistandard tableaux and the lattice of weights of the orbit closure."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import (EntryOutOfRange, FillingNotSemistandard, IndexOutOfRange, MalformedShape,
                     ParameterOutOfRange, TooManyRows)
from .lattice import combine, hnf, lattice_membership
from .report import Report


@dataclass(frozen=True)
class DominantWeight:
    entries: tuple

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if any(a < b for a, b in zip(e, e[1:])):
            raise ValueError(f"{e} is not weakly decreasing")

    @property
    def n(self):
        return len(self.entries)

    def __add__(self, other):
        return DominantWeight(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __iter__(self):
        return iter(self.entries)

    def dual(self):
        return dual_weight(self)


def dual_weight(lam: DominantWeight) -> DominantWeight:
    """lambda* = (-lambda_n, ..., -lambda_1)."""
    return DominantWeight(tuple(-x for x in reversed(lam.entries)))


def in_lambda_r(lam, r: int) -> bool:
    """Entry sum divisible by r."""
    return sum(lam) % r == 0


def build_lambda_i(n: int, r: int, i: int) -> DominantWeight:
    """(l_i, 1 x i, 0 x (n-1-i)) with l_i = r*n(n+1)/2 - i."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"need 1 <= i <= n-1, got i={i}, n={n}")
    ell = r * n * (n + 1) // 2 - i
    return DominantWeight((ell,) + (1,) * i + (0,) * (n - 1 - i))


@dataclass(frozen=True)
class Tableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(row) == 0 for row in rows):
            raise MalformedShape("tableau rows must be nonempty")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise MalformedShape(f"row lengths {[len(r) for r in rows]} are not weakly decreasing")

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    def cells(self):
        return sum(self.shape)

    def to_json(self):
        return [list(row) for row in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase downwards."""
    for row in t.rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t.rows, t.rows[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def weight_of_tableau(t: Tableau, n: int) -> tuple:
    counts = Counter(x for row in t.rows for x in row)
    if any(not 1 <= k <= n for k in counts):
        raise EntryOutOfRange(f"tableau entries must lie in 1..{n}")
    return tuple(counts.get(k, 0) for k in range(1, n + 1))


def _check_shape(shape):
    shape = tuple(int(x) for x in shape)
    if any(x <= 0 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise MalformedShape(f"{shape} is not a partition")
    return shape


def enumerate_ssyt(shape, n: int) -> list[Tableau]:
    """All semistandard tableaux of the given shape with entries in 1..n.

    Cells are filled row by row, smallest admissible value first, so the
    output is sorted lexicographically by row-major reading word.
    """
    shape = _check_shape(shape)
    if len(shape) > n:
        raise TooManyRows(f"shape {shape} has more than {n} rows")
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]
    out = []

    def fill(c):
        if c == len(cells):
            out.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        i, j = cells[c]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing column below
        below = sum(1 for k in range(i + 1, len(shape)) if shape[k] > j)
        for v in range(lo, n - below + 1):
            grid[i][j] = v
            fill(c + 1)
        grid[i][j] = 0

    fill(0)
    return out


def row_major_filling(shape, counts) -> Tableau:
    """Fill the diagram of ``shape`` row by row with 1^counts[0] 2^counts[1] ..."""
    shape = _check_shape(shape)
    word = [k + 1 for k, c in enumerate(counts) for _ in range(c)]
    if len(word) != sum(shape):
        raise MalformedShape(f"{len(word)} values for {sum(shape)} cells")
    rows, pos = [], 0
    for length in shape:
        rows.append(tuple(word[pos:pos + length]))
        pos += length
    return Tableau(tuple(rows))


def canonical_filling(n: int, r: int, i: int) -> Tableau:
    """Semistandard tableau of shape lambda_i in which k occurs exactly k*r times.

    The leg below the corner cell holds the i largest distinct values
    n-i+1, ..., n; the first row holds the remaining values in increasing
    order. For i = 1 this coincides with the plain row-major filling.
    """
    lam = build_lambda_i(n, r, i)
    counts = [k * r for k in range(1, n + 1)]
    leg = list(range(n - i + 1, n + 1))
    remaining = list(counts)
    for v in leg:
        remaining[v - 1] -= 1
    first = tuple(k + 1 for k, c in enumerate(remaining) for _ in range(c))
    t = Tableau((first,) + tuple((v,) for v in leg))
    if t.shape != tuple(x for x in lam.entries if x > 0):
        raise FillingNotSemistandard(f"filling has shape {t.shape}, expected {lam.entries}")
    if not is_semistandard(t):
        raise FillingNotSemistandard(f"filling of shape {t.shape} is not semistandard")
    if weight_of_tableau(t, n) != tuple(counts):
        raise FillingNotSemistandard("filling has the wrong weight")
    return t


def orbit_weights_distinct(w) -> bool:
    """The n! permutations of w are pairwise distinct iff the entries of w are."""
    return len(set(w)) == len(w)


def generator_columns(n: int, r: int) -> list[tuple]:
    """(r, 0, ..., 0) followed by lambda_1, ..., lambda_{n-1}."""
    return [(r,) + (0,) * (n - 1)] + [build_lambda_i(n, r, i).entries for i in range(1, n)]


def reference_basis(n: int, r: int) -> list[tuple]:
    """r*e_1 and e_j - e_1: a basis of {v in Z^n : sum(v) = 0 mod r}."""
    out = [(r,) + (0,) * (n - 1)]
    for j in range(1, n):
        v = [0] * n
        v[0] = -1
        v[j] = 1
        out.append(tuple(v))
    return out


def verify_theorem_group(n: int, r: int) -> Report:
    """The weight generators span exactly the index-r lattice of sums divisible by r."""
    if not 2 < r < n:
        raise ParameterOutOfRange(f"need 2 < r < n, got n={n}, r={r}")
    gens = generator_columns(n, r)
    ref = reference_basis(n, r)
    generated = hnf(gens)
    reference = hnf(ref)
    rep = Report("weights of the orbit closure generate {lambda : sum = 0 mod r}",
                 {"n": n, "r": r})

    for g in gens:
        rep.candidates_checked += 1
        if in_lambda_r(g, r):
            rep.confirmed += 1
        else:
            rep.refute({"kind": "generator sum not divisible by r", "generator": list(g)})
    for b in ref:
        rep.candidates_checked += 1
        if in_lambda_r(b, r):
            rep.confirmed += 1
        else:
            rep.refute({"kind": "reference vector sum not divisible by r", "vector": list(b)})

    rep.candidates_checked += 1
    if generated.same_lattice(reference):
        rep.confirmed += 1
    else:
        rep.refute({"kind": "HNF mismatch", "generated": generated.hnf_rows(),
                    "reference": reference.hnf_rows()})

    rep.candidates_checked += 1
    if generated.determinant() == r:
        rep.confirmed += 1
    else:
        rep.refute({"kind": "index is not r", "determinant": generated.determinant()})

    certificates = []
    for b in ref:
        rep.candidates_checked += 1
        z = lattice_membership(generated, b)
        if z is not None and combine(generated.generators, z) == tuple(b):
            rep.confirmed += 1
            certificates.append({"vector": list(b), "coordinates": list(z)})
        else:
            rep.refute({"kind": "missing membership certificate", "vector": list(b)})

    rep.details = {"generators": [list(g) for g in gens],
                   "hnf": generated.hnf_rows(),
                   "determinant": generated.determinant(),
                   "certificates": certificates}
    return rep
