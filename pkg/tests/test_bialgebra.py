"""Comultiplications, bialgebra axioms, classification, factorization and the
double construction."""
import random

import pytest

from leibalg.linalg import Matrix, TwoTensor
from leibalg.algebra import (TaggedLinearMap, check_isomorphism,
                             regular_representation, dual_representation,
                             semidirect_product)
from leibalg.yang_baxter import t_of, is_invariant
from leibalg.bialgebra import (delta_from_r, check_coalgebra, check_bialgebra,
                               check_r_conditions, dual_bracket, classify,
                               factorize, LeibnizBialgebra, double_algebra,
                               double_canonical_r, theta_isomorphism,
                               NotFactorizable, InvalidBialgebra)
from leibalg import fixtures

E4 = fixtures.e4()
G2 = fixtures.g2()
R4 = fixtures.r4()
S4 = R4 - R4.swap()


def test_delta_of_invariant_tensor_vanishes():
    assert delta_from_r(E4, S4).is_zero()
    assert delta_from_r(fixtures.abelian(3), TwoTensor.basis(3, 0, 1)).is_zero()


def test_fixture_bialgebra_is_valid():
    delta = delta_from_r(E4, R4)
    assert check_coalgebra(delta)
    report = check_bialgebra(E4, delta)
    assert report.valid and report.witness == ()
    LeibnizBialgebra.from_r(E4, R4)  # must not raise


def test_invalid_bialgebra_raises_with_witness():
    nil = fixtures.nilpotent3()
    t = TwoTensor.basis(3, 0, 0)  # not a solution on nilpotent3
    report = check_bialgebra(nil, delta_from_r(nil, t))
    assert not report.valid and report.witness
    name, idx = report.witness
    assert name in ("coalgebra", "bialg1", "bialg2")
    with pytest.raises(InvalidBialgebra):
        LeibnizBialgebra.from_r(nil, t)


def test_tensor_conditions_agree_with_direct_checks():
    rng = random.Random(23)
    for name, alg in fixtures.catalog():
        for _ in range(5):
            t = TwoTensor.from_grid([[rng.randint(-2, 2) for _ in range(alg.dim)]
                                     for _ in range(alg.dim)])
            conds = check_r_conditions(alg, t)  # asserts agreement internally
            report = check_bialgebra(alg, delta_from_r(alg, t))
            assert conds.coalg_cond == report.coalgebra_ok
            assert conds.mp1 == report.bialg1_ok
            assert conds.mp2 == report.bialg2_ok
            assert conds.all_hold == report.valid


def test_dual_bracket_pairs_with_delta_and_is_leibniz():
    dual = dual_bracket(E4, R4)  # pairing identity asserted internally
    assert dual.is_valid()
    assert dual.basis_names == ("e1*", "e2*", "e3*", "e4*")
    delta = delta_from_r(E4, R4)
    for m in range(4):
        for a in range(4):
            for b in range(4):
                assert delta.d[m][a][b] == dual.sc[a][b][m]


def test_classification_of_examples():
    zero = classify(E4, TwoTensor.zero(4))
    assert zero.is_bialgebra and zero.quasi_triangular
    assert zero.triangular and not zero.factorizable
    assert zero.describe() == \
        "quasi-triangular: yes; triangular: yes; factorizable: no"

    main = classify(E4, R4)
    assert main.quasi_triangular and main.factorizable and not main.triangular
    assert main.describe() == \
        "quasi-triangular: yes; triangular: no; factorizable: yes"

    swapped = classify(E4, R4.swap())
    assert swapped.quasi_triangular and swapped.factorizable

    bad = classify(E4, TwoTensor.basis(4, 0, 1))
    assert not bad.quasi_triangular and not bad.factorizable


def test_operator_form_is_a_homomorphism_from_the_dual():
    dual = dual_bracket(E4, R4)
    for tmap in (t_of(E4, R4), t_of(E4, R4.swap())):
        for a in range(4):
            for b in range(4):
                img = tmap.apply(dual.bracket(dual.basis_vector(a),
                                              dual.basis_vector(b)))
                direct = E4.bracket(tmap.apply(dual.basis_vector(a)),
                                    tmap.apply(dual.basis_vector(b)))
                assert img == direct


def test_factorization():
    x1, x2 = factorize(E4, R4, (0, 0, 0, 0))
    assert all(c == 0 for c in x1) and all(c == 0 for c in x2)
    for i in range(4):
        x = E4.basis_vector(i)
        x1, x2 = factorize(E4, R4, x)
        assert tuple(a - b for a, b in zip(x1, x2)) == x
    # additivity (the decomposition is linear in x)
    u, v = (1, 2, 0, -1), (0, 1, 1, 1)
    u1, u2 = factorize(E4, R4, u)
    v1, v2 = factorize(E4, R4, v)
    w1, w2 = factorize(E4, R4, tuple(a + b for a, b in zip(u, v)))
    assert w1 == tuple(a + b for a, b in zip(u1, v1))
    assert w2 == tuple(a + b for a, b in zip(u2, v2))
    with pytest.raises(NotFactorizable):
        factorize(E4, TwoTensor.zero(4), (1, 0, 0, 0))


def test_double_of_trivial_comultiplication_is_the_semidirect_product():
    # S4 is invariant, so Delta vanishes and the double degenerates
    bialg = LeibnizBialgebra.from_r(E4, S4)
    assert bialg.delta.is_zero()
    dbl = double_algebra(bialg)
    semi = semidirect_product(E4, dual_representation(regular_representation(E4)))
    assert dbl.sc == semi.sc


def test_double_restricts_to_the_original_algebra():
    bialg = LeibnizBialgebra.from_r(E4, R4)
    dbl = double_algebra(bialg)
    assert dbl.dim == 8 and dbl.is_valid()
    for i in range(4):
        for j in range(4):
            assert dbl.sc[i][j][:4] == E4.sc[i][j]
            assert all(c == 0 for c in dbl.sc[i][j][4:])


def test_canonical_tensor_on_the_double():
    bialg = LeibnizBialgebra.from_r(E4, R4)
    dbl = double_algebra(bialg)
    rd = double_canonical_r(bialg)
    for i in range(8):
        for j in range(8):
            assert rd.coeff[i][j] == (1 if j == i + 4 else 0)
    cls = classify(dbl, rd)
    assert cls.quasi_triangular and cls.factorizable and not cls.triangular


def test_theta_isomorphism_onto_the_direct_sum():
    theta, ok = theta_isomorphism(E4, R4)
    assert ok
    assert theta.domain == "D" and theta.codomain == "A(+)A"
    tr = t_of(E4, R4).matrix
    ts = t_of(E4, R4.swap()).matrix
    for i in range(4):
        for j in range(4):
            assert theta.matrix.entries[i][j] == (1 if i == j else 0)
            assert theta.matrix.entries[4 + i][j] == (1 if i == j else 0)
            assert theta.matrix.entries[i][4 + j] == tr.entries[i][j]
            assert theta.matrix.entries[4 + i][4 + j] == ts.entries[i][j]
    with pytest.raises(NotFactorizable):
        theta_isomorphism(E4, TwoTensor.zero(4))
