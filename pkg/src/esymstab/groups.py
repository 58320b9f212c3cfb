"""Permutations, monomial matrices and the group S_n x Z_r.

Permutations are stored 0-based in one-line notation: ``images[j]`` is the
image of j. The permutation matrix of sigma sends e_j to e_sigma(j), so
``matrix(sigma o tau) == matrix(sigma) @ matrix(tau)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .errors import NotMonomial, ParameterMismatch, Singular
from .exactnum import zeta
from .multipoly import Matrix


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycle(cls, n, cycle):
        """Cycle given with 0-based points, e.g. (0, 1, 2, 3) for the 4-cycle."""
        images = list(range(n))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
        return cls(tuple(images))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, j):
        return self.images[j]

    def compose(self, other: Permutation) -> Permutation:
        """self o other (apply other first)."""
        if self.n != other.n:
            raise ParameterMismatch(f"permutations of {self.n} and {other.n} points")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, i in enumerate(self.images):
            inv[i] = j
        return Permutation(tuple(inv))

    def matrix(self) -> Matrix:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for j, i in enumerate(self.images):
            rows[i][j] = 1
        return Matrix(rows)

    def one_line(self):
        """1-based one-line notation, used in reports."""
        return [i + 1 for i in self.images]


@dataclass(frozen=True)
class MonomialMatrix:
    """perm-matrix @ diag(diagonal); all diagonal entries nonzero."""

    perm: Permutation
    diagonal: tuple

    def __post_init__(self):
        object.__setattr__(self, "diagonal", tuple(self.diagonal))
        if len(self.diagonal) != self.perm.n:
            raise ParameterMismatch("diagonal length differs from permutation size")
        if any(d == 0 for d in self.diagonal):
            raise Singular("monomial matrix with a zero diagonal entry")

    def to_square(self) -> Matrix:
        n = self.perm.n
        rows = [[0] * n for _ in range(n)]
        for j, i in enumerate(self.perm.images):
            rows[i][j] = self.diagonal[j]
        return Matrix(rows)

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        # D_a P_tau = P_tau D_(a o tau)
        tau = other.perm
        diag = tuple(self.diagonal[tau(j)] * other.diagonal[j] for j in range(tau.n))
        return MonomialMatrix(self.perm.compose(tau), diag)


@dataclass(frozen=True)
class StabElement:
    """The pair (perm, zeta_r^k), realized as perm-matrix times zeta_r^k * I."""

    perm: Permutation
    k: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.r)

    @property
    def n(self):
        return self.perm.n

    def __mul__(self, other: StabElement) -> StabElement:
        return group_product(self, other)

    def inverse(self) -> StabElement:
        return StabElement(self.perm.inverse(), -self.k, self.r)

    def to_matrix(self) -> MonomialMatrix:
        return to_matrix(self)


def group_product(g: StabElement, h: StabElement) -> StabElement:
    """Componentwise law: scalar matrices are central, so the action is trivial."""
    if g.n != h.n or g.r != h.r:
        raise ParameterMismatch(f"elements of different groups: (n,r)=({g.n},{g.r}) vs ({h.n},{h.r})")
    return StabElement(g.perm.compose(h.perm), g.k + h.k, g.r)


def to_matrix(g: StabElement) -> MonomialMatrix:
    w = zeta(g.r) ** g.k
    return MonomialMatrix(g.perm, (w,) * g.n)


def identity_element(n, r) -> StabElement:
    return StabElement(Permutation.identity(n), 0, r)


def enumerate_group(n: int, r: int) -> list[StabElement]:
    """All n!*r elements; lexicographic in permutation images, then k."""
    return [StabElement(Permutation(p), k, r)
            for p in permutations(range(n)) for k in range(r)]


def closure(generators) -> set[StabElement]:
    """Breadth-first closure of a generating set under group_product."""
    generators = list(generators)
    if not generators:
        return set()
    start = identity_element(generators[0].n, generators[0].r)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def decompose_monomial(m: Matrix) -> MonomialMatrix:
    """Factor m = perm-matrix @ diag when m has one nonzero per row and column."""
    if not m.is_square():
        raise NotMonomial(f"non-square matrix {m.shape}")
    n = m.n
    images = []
    for j in range(n):
        nz = [i for i in range(n) if m[i, j] != 0]
        if len(nz) == 0:
            raise Singular(f"column {j + 1} is zero")
        if len(nz) > 1:
            raise NotMonomial(f"column {j + 1} has {len(nz)} nonzero entries")
        images.append(nz[0])
    if len(set(images)) != n:
        raise Singular("two columns share their nonzero row")
    perm = Permutation(tuple(images))
    return MonomialMatrix(perm, tuple(m[perm(j), j] for j in range(n)))
