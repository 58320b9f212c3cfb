from fractions import Fraction

import pytest
import sympy

from esymstab.errors import (NotMonomial, NotStabilizer, ParameterOutOfRange, Singular,
                             ZeroEntry)
from esymstab.esym import EsymSpec, elementary, f_ab
from esymstab.exactnum import Cyclotomic, zeta
from esymstab.groups import Permutation, StabElement, to_matrix
from esymstab.multipoly import Matrix
from esymstab.stabilizer import (decompose_stabilizer, degree_condition_combinatorial,
                                 degree_condition_symbolic, indicator_vectors, is_stabilizer,
                                 mpb_invariance_check, product_stabilizer_check, rank1_preservation,
                                 rank_lemma_check, scalar_constraints_solve, verify_theorem1)

E34 = EsymSpec(4, 3)
E53 = EsymSpec(5, 3)
TRANSVECTION4 = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def test_is_stabilizer_examples():
    e = elementary(E34)
    assert is_stabilizer(Matrix.identity(4), e)
    assert is_stabilizer(Matrix.identity(4, zeta(3)), e)
    assert not is_stabilizer(TRANSVECTION4, e)


def test_transvection_against_symbolic_expansion():
    X = sympy.symbols("X1:5")
    e3 = sum(X[i] * X[j] * X[k] for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4))
    moved = sympy.expand(e3.subs({X[0]: X[0] + X[1]}, simultaneous=True))
    assert sympy.expand(moved - e3) != 0


def test_is_stabilizer_does_not_trust_probes_alone(monkeypatch):
    # every probe lies on the line x1 = x2, where X1 - X2 and its swap agree
    from esymstab import stabilizer
    from esymstab.parser import parse_polynomial
    monkeypatch.setattr(stabilizer, "_probe_points", lambda n: [(1, 1), (3, 3)])
    swap = Matrix([[0, 1], [1, 0]])
    assert not is_stabilizer(swap, parse_polynomial("X1 - X2"))
    assert is_stabilizer(swap, parse_polynomial("X1*X2"))


@pytest.mark.parametrize("a, expected", [
    ((0, 0, 0, 0, 0), True),
    ((1, 0, 0, 0, 0), True),
    ((7, 0, 0, 0, 0), True),
    ((1, 1, 0, 0, 0), False),
    ((1, -1, 2, 0, 0), False),
])
def test_degree_conditions(a, expected):
    assert degree_condition_symbolic(E53, a) is expected
    assert degree_condition_combinatorial(E53, a) is expected


def test_symbolic_t2_coefficient_is_b3_b4_b5():
    T = sympy.Symbol("T")
    B = sympy.symbols("b1:6")
    a = (1, 1, 0, 0, 0)
    vals = [a[i] * T + B[i] for i in range(5)]
    e3 = sum(vals[i] * vals[j] * vals[k]
             for i in range(5) for j in range(i + 1, 5) for k in range(j + 1, 5))
    c2 = sympy.Poly(sympy.expand(e3), T).coeff_monomial(T ** 2)
    assert sympy.expand(c2 - (B[2] + B[3] + B[4])) == 0


def test_rank_lemma_reports():
    rep = rank_lemma_check(E53, (1, 0, 0, 0, 0))
    assert (rep.rho_value, rep.degree_condition, rep.witness_b) == (1, True, None)
    for a, rho_value in [((1, 1, 0, 0, 0), 2), ((1, -1, 2, 0, 0), 3)]:
        rep = rank_lemma_check(E53, a)
        assert rep.rho_value == rho_value and rep.degree_condition is False
        assert rep.witness_b in set(indicator_vectors(5, 1))
        assert f_ab(E53, a, rep.witness_b).degree >= 2
        assert rep.consistent


def test_witness_from_indicator_exhaustion():
    a = (1, 1, 0, 0, 0)
    witnesses = [b for b in indicator_vectors(5, 1) if f_ab(E53, a, b).degree >= 2]
    assert witnesses and rank_lemma_check(E53, a).witness_b == witnesses[0]


@pytest.mark.parametrize("n, r", [(4, 2), (4, 4), (3, 3)])
def test_rank_lemma_hypothesis(n, r):
    with pytest.raises(ParameterOutOfRange):
        rank_lemma_check(EsymSpec(n, r), (1,) + (0,) * (n - 1))


def test_rank1_preservation():
    assert rank1_preservation(Permutation((2, 0, 3, 1)).matrix(), E34)
    assert rank1_preservation(Matrix.identity(4, zeta(3)), E34)
    assert not rank1_preservation(TRANSVECTION4, E34)
    with pytest.raises(Singular):
        rank1_preservation(Matrix([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]), E34)


def test_scalar_constraints():
    assert scalar_constraints_solve((1,) * 5, 3) == 1
    z = zeta(3)
    assert scalar_constraints_solve((z,) * 5, 3) == z
    assert scalar_constraints_solve((1, 1, 1, 1, 2), 3) is None
    assert scalar_constraints_solve((z, z, z, z, z ** 2), 3) is None
    with pytest.raises(ZeroEntry):
        scalar_constraints_solve((1, 0, 1, 1, 1), 3)


def test_decompose_stabilizer_examples():
    d = decompose_stabilizer(Matrix.identity(4), E34)
    assert d.perm == Permutation.identity(4) and d.omega == 1
    cyc = Permutation.from_cycle(4, (0, 1, 2, 3))
    g = to_matrix(StabElement(cyc, 1, 3)).to_square()
    d = decompose_stabilizer(g, E34)
    assert d.perm == cyc and d.omega == zeta(3)
    assert d.to_element() == StabElement(cyc, 1, 3)
    with pytest.raises(NotStabilizer):
        decompose_stabilizer(TRANSVECTION4, E34)


def test_decompose_accepts_root_from_larger_field():
    # zeta(6)^2 is a primitive cube root living in Q(zeta_6)
    w = zeta(6) ** 2
    d = decompose_stabilizer(Matrix.identity(4, w), E34)
    assert d.omega == w and d.omega ** 3 == 1


def test_verify_theorem1_small():
    rep = verify_theorem1(4, 3, 100, 1)
    assert rep.confirmed == 72 and rep.refuted == 0 and rep.passed
    assert rep.details["false_accepts"] == 0
    with pytest.raises(ParameterOutOfRange):
        verify_theorem1(4, 2, 10, 1)


def test_verify_theorem1_5_4():
    rep = verify_theorem1(5, 4, 100, 1)
    assert rep.confirmed == 480 and rep.refuted == 0


def test_reports_are_deterministic():
    a = verify_theorem1(4, 3, 40, 5).dumps()
    b = verify_theorem1(4, 3, 40, 5).dumps()
    assert a == b


def test_product_stabilizer():
    rep = product_stabilizer_check(5, 4)
    assert rep.passed and rep.details["h_r_members_stabilizing"] == 480
    with pytest.raises(ParameterOutOfRange):
        product_stabilizer_check(4, 3)


def test_cube_root_scaling_does_not_fix_e1_e3():
    P = elementary(EsymSpec(5, 1)) * elementary(EsymSpec(5, 3))
    assert not is_stabilizer(Matrix.identity(5, zeta(3)), P)
    assert is_stabilizer(Matrix.identity(5), P)
    # e_1 picks up zeta(3), e_3 picks up zeta(3)^3 = 1
    from esymstab.multipoly import compose_linear
    assert compose_linear(P, Matrix.identity(5, zeta(3))) == P.scale(zeta(3))


def test_mpb_check():
    rep = mpb_invariance_check(5, 3, 100, 1)
    assert rep.passed
    assert rep.details == {"invariance_matches": 200, "counter_trials_differing": 20}
    with pytest.raises(ParameterOutOfRange):
        mpb_invariance_check(3, 3, 1, 1)


def test_mpb_trivial_case():
    from esymstab.esym import minor_esym
    x = Matrix.diagonal((1, Fraction(1, 2), 3, -2, 5))
    u = Matrix.identity(5)
    assert minor_esym(u @ x @ u.inverse(), 3) == minor_esym(x, 3)
