"""Elementary symmetric polynomials, in vector and matrix form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import ArityMismatch, DegreeOutOfRange
from .multipoly import Matrix, Polynomial, UnivariatePoly, principal_subsets, specialize_line


@dataclass(frozen=True)
class EsymSpec:
    n: int
    r: int

    def __post_init__(self):
        if not 1 <= self.r <= self.n:
            raise DegreeOutOfRange(f"need 1 <= r <= n, got n={self.n}, r={self.r}")


@lru_cache(maxsize=None)
def _elementary(n, r):
    terms = {}
    for subset in combinations(range(n), r):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return Polynomial(n, terms)


def elementary(spec: EsymSpec) -> Polynomial:
    """e_r(X1..Xn): sum over r-subsets of the product of their variables."""
    return _elementary(spec.n, spec.r)


def esym_values(values, k: int):
    """e_k evaluated at a sequence of scalars (e_0 = 1, e_k = 0 for k > len)."""
    if k < 0:
        return 0
    # e[j] after processing a prefix; standard coefficient recurrence of prod(1 + v t)
    e = [1] + [0] * k
    for v in values:
        if v == 0:
            continue
        for j in range(k, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e[k]


def rho(a) -> int:
    """Number of nonzero entries of a."""
    return sum(1 for x in a if x != 0)


def f_ab(spec: EsymSpec, a, b) -> UnivariatePoly:
    """The restriction e_r(a*T + b) of e_r to the affine line through b in direction a."""
    if len(a) != spec.n or len(b) != spec.n:
        raise ArityMismatch(f"vectors of length {len(a)}, {len(b)} for n={spec.n}")
    return specialize_line(elementary(spec), a, b)


def minor_esym(x: Matrix, r: int):
    """r-th elementary symmetric function of the eigenvalues of x.

    Computed without eigenvalues as the sum of all r x r principal minors,
    taken in colexicographic order of index sets.
    """
    if not x.is_square():
        raise ArityMismatch(f"minor_esym needs a square matrix, got {x.shape}")
    n = x.n
    if not 1 <= r <= n:
        raise DegreeOutOfRange(f"need 1 <= r <= n, got n={n}, r={r}")
    total = 0
    for idx in principal_subsets(n, r):
        total = total + x.minor(idx).det()
    return total
