from itertools import product

import pytest
import sympy

from esymstab.errors import (DimensionMismatch, EntryOutOfRange, IndexOutOfRange, MalformedShape,
                             ParameterOutOfRange, TooManyRows)
from esymstab.lattice import combine, hnf, lattice_membership
from esymstab.weights import (DominantWeight, Tableau, build_lambda_i, canonical_filling,
                              dual_weight, enumerate_ssyt, generator_columns, in_lambda_r,
                              is_semistandard, orbit_weights_distinct, reference_basis,
                              row_major_filling, verify_theorem_group, weight_of_tableau)

EXAMPLE_Y = Tableau(((1, 2, 2, 4), (2, 3), (3,), (4,)))


def test_example_tableau():
    assert EXAMPLE_Y.shape == (4, 2, 1, 1)
    assert is_semistandard(EXAMPLE_Y)
    assert weight_of_tableau(EXAMPLE_Y, 4) == (1, 3, 2, 2)


def test_semistandard_rules():
    assert is_semistandard(Tableau(((1, 1, 2),)))
    assert not is_semistandard(Tableau(((2,), (2,))))
    assert not is_semistandard(Tableau(((2, 1),)))
    with pytest.raises(MalformedShape):
        Tableau(((1,), (1, 2)))


def test_weight_of_tableau_cases():
    assert weight_of_tableau(Tableau(((1, 2, 3),)), 3) == (1, 1, 1)
    assert weight_of_tableau(Tableau(()), 3) == (0, 0, 0)
    with pytest.raises(EntryOutOfRange):
        weight_of_tableau(Tableau(((1, 5),)), 4)


def _brute_force_ssyt(shape, n):
    cells = sum(shape)
    out = []
    for word in product(range(1, n + 1), repeat=cells):
        rows, pos = [], 0
        for length in shape:
            rows.append(word[pos:pos + length])
            pos += length
        t = Tableau(tuple(rows))
        if is_semistandard(t):
            out.append(t)
    return out


@pytest.mark.parametrize("shape, n, count", [((1,), 3, 3), ((2, 1), 3, 8), ((1, 1, 1), 3, 1)])
def test_enumerate_ssyt_counts(shape, n, count):
    tabs = enumerate_ssyt(shape, n)
    assert len(tabs) == count
    assert tabs == _brute_force_ssyt(shape, n)


@pytest.mark.parametrize("shape, n", [((2, 2), 3), ((3, 1), 3), ((2, 1, 1), 4), ((3, 2), 2)])
def test_enumerate_ssyt_matches_brute_force(shape, n):
    tabs = enumerate_ssyt(shape, n)
    assert tabs == _brute_force_ssyt(shape, n)
    assert len(set(tabs)) == len(tabs)


def test_enumerate_ssyt_errors():
    with pytest.raises(TooManyRows):
        enumerate_ssyt((1, 1, 1), 2)
    with pytest.raises(MalformedShape):
        enumerate_ssyt((1, 2), 3)


def test_dual_weight():
    assert dual_weight(DominantWeight((0, 0, 0))) == DominantWeight((0, 0, 0))
    assert dual_weight(DominantWeight((4, 2, 1, 1))) == DominantWeight((-1, -1, -2, -4))
    with pytest.raises(ValueError):
        DominantWeight((1, 2))


def test_in_lambda_r():
    assert in_lambda_r(DominantWeight((3, 0, 0, 0)), 3)
    assert not in_lambda_r(DominantWeight((1, 0, 0, 0)), 3)


def test_build_lambda_i():
    assert build_lambda_i(4, 3, 1) == DominantWeight((29, 1, 0, 0))
    assert build_lambda_i(4, 3, 3) == DominantWeight((27, 1, 1, 1))
    for n in range(2, 8):
        for i in range(1, n):
            assert sum(build_lambda_i(n, 3, i)) == 3 * n * (n + 1) // 2
    with pytest.raises(IndexOutOfRange):
        build_lambda_i(4, 3, 4)


def test_canonical_filling_examples():
    t = canonical_filling(4, 3, 1)
    assert t.shape == (29, 1) and weight_of_tableau(t, 4) == (3, 6, 9, 12)
    t = canonical_filling(4, 3, 3)
    assert t.shape == (27, 1, 1, 1) and is_semistandard(t)
    assert sum(weight_of_tableau(t, 4)) == 30


def test_row_major_reading_fails_beyond_one_leg_cell():
    counts = [3 * k for k in range(1, 5)]
    assert is_semistandard(row_major_filling((29, 1), counts))
    assert row_major_filling((29, 1), counts) == canonical_filling(4, 3, 1)
    # leg below the corner would read 4, 4, 4
    assert not is_semistandard(row_major_filling((27, 1, 1, 1), counts))


def test_orbit_weights_distinct():
    assert orbit_weights_distinct((3, 6, 9, 12))
    assert not orbit_weights_distinct((1, 1, 2))
    assert orbit_weights_distinct((5,))


def test_hnf_examples():
    assert hnf([(2, 0), (0, 2)]).hnf_rows() == [[2, 0], [0, 2]]
    assert hnf([(1, 0), (0, 1), (5, 7)]).hnf_rows() == [[1, 0], [0, 1]]
    L = hnf([(3, 0, 0), (-1, 1, 0), (-1, 0, 1)])
    assert L.determinant() == 3 == abs(sympy.Matrix([[3, -1, -1], [0, 1, 0], [0, 0, 1]]).det())
    with pytest.raises(DimensionMismatch):
        hnf([(1, 0), (1, 0, 0)])


def test_hnf_canonical_shape():
    L = hnf([(4, 6, 2), (2, 3, 8), (6, 1, 1), (10, 10, 10)])
    H = L.hnf
    for k, (col, p) in enumerate(zip(H, L.pivots)):
        assert col[p] > 0 and all(x == 0 for x in col[:p])
        for j in range(k):
            assert 0 <= H[j][p] < col[p]
    assert list(L.pivots) == sorted(L.pivots)


def test_hnf_rank_deficient():
    L = hnf([(1, 2, 3), (2, 4, 6), (0, 0, 0)])
    assert L.rank == 1 and L.determinant() == 0
    assert lattice_membership(L, (3, 6, 9)) is not None
    assert lattice_membership(L, (1, 2, 4)) is None


def test_lattice_membership_examples():
    L = hnf([(3, 0), (0, 1)])
    assert lattice_membership(L, (0, 0)) == (0, 0)
    assert lattice_membership(L, (6, 5)) == (2, 5)
    assert lattice_membership(L, (1, 0)) is None
    with pytest.raises(DimensionMismatch):
        lattice_membership(L, (1, 2, 3))


def test_membership_against_rational_solve():
    gens = [(2, 1, 0), (1, 3, 1), (0, 1, 4)]
    G = sympy.Matrix(gens).T
    L = hnf(gens)
    for v in product(range(-3, 4), repeat=3):
        sol = G.solve(sympy.Matrix(v))
        integral = all(x.is_integer for x in sol)
        z = lattice_membership(L, v)
        assert (z is not None) == integral
        if z is not None:
            assert combine(gens, z) == v


@pytest.mark.parametrize("n, r", [(4, 3), (5, 3)])
def test_verify_theorem_group_examples(n, r):
    rep = verify_theorem_group(n, r)
    assert rep.passed and rep.details["determinant"] == r


def test_verify_theorem_group_generators_4_3():
    assert generator_columns(4, 3) == [(3, 0, 0, 0), (29, 1, 0, 0), (28, 1, 1, 0), (27, 1, 1, 1)]
    with pytest.raises(ParameterOutOfRange):
        verify_theorem_group(4, 4)


def test_reference_basis_spans_sum_lattice():
    # brute force: membership in the reference lattice iff sum divisible by r
    n, r = 3, 3
    L = hnf(reference_basis(n, r))
    for v in product(range(-4, 5), repeat=n):
        assert (lattice_membership(L, v) is not None) == (sum(v) % r == 0)
