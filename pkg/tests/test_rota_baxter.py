"""Quadratic forms, Rota-Baxter operators (plain and relative), and the
correspondences with triangular / factorizable bialgebra structures."""
import random
from fractions import Fraction

import pytest

from leibalg.linalg import Matrix, TwoTensor
from leibalg.algebra import (ALeibnizModule, TaggedLinearMap,
                             regular_representation)
from leibalg.yang_baxter import (t_of, is_invariant, invariant_skew_tensors,
                                 clybe_defect)
from leibalg.bialgebra import classify, NotFactorizable
from leibalg.rota_baxter import (check_quadratic, QuadraticForm,
                                 omega_sharp_and_phi, check_rb, RBOperator,
                                 check_relative_rb, circ_bracket,
                                 check_relative_rb_equivalence, beta_from_r, check_rb_type,
                                 check_quadratic_rb, make_quadratic_rb, mirror,
                                 phase_space_quadratic_rb,
                                 triangular_from_weight0,
                                 factorizable_from_quadratic_rb,
                                 rb_to_double_factorizable,
                                 quadratic_rb_from_factorizable,
                                 check_mirror_diagram,
                                 NotInvariant, NotSkew, SkewPartNotInvariant,
                                 NotRotaBaxter, WrongWeight, InvalidQuadraticRB)
from leibalg import fixtures

E4 = fixtures.e4()
G2 = fixtures.g2()
R4 = fixtures.r4()
S4 = R4 - R4.swap()
W_E4 = Matrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1],
                         [-1, 0, 0, 0], [0, -1, 0, 0]])
BETA_E4 = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0],
                            [0, 0, 0, 0], [0, 0, 0, 0]])


def symmetric_random(rng, n, lo=-2, hi=2):
    t = TwoTensor.zero(n)
    for i in range(n):
        for j in range(i, n):
            c = rng.randint(lo, hi)
            if c:
                t = t + (TwoTensor.basis(n, i, j)
                         + TwoTensor.basis(n, j, i)).scale(c)
    return t


def test_check_quadratic_examples():
    zero = check_quadratic(E4, Matrix.zero(4))
    assert zero.skew and zero.invariant and not zero.nondegenerate
    assert not zero.valid

    good = check_quadratic(E4, W_E4)
    assert good.valid and good.witness == ()
    QuadraticForm(E4, W_E4)  # must not raise

    sym = check_quadratic(E4, Matrix.identity(4))
    assert not sym.skew

    bad = Matrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0],
                            [0, 0, 0, 1], [0, 0, -1, 0]])
    rep = check_quadratic(E4, bad)
    assert rep.skew and rep.nondegenerate and not rep.invariant
    assert rep.witness and rep.witness[0] == "invariance"
    assert len(rep.witness[1]) == 3 and rep.witness[2] != rep.witness[3]
    with pytest.raises(InvalidQuadraticRB):
        QuadraticForm(E4, bad)


def test_quadratic_form_value_and_skewness():
    form = QuadraticForm(E4, W_E4)
    x, y = (1, 2, 0, -1), (0, 1, 1, 3)
    assert form.value(x, y) == -form.value(y, x)
    assert form.value(E4.basis_vector(0), E4.basis_vector(2)) == 1


def test_omega_sharp_and_phi():
    ab = fixtures.abelian(2)
    w = Matrix.from_rows([[0, 1], [-1, 0]])
    sharp, phi = omega_sharp_and_phi(ab, w)
    assert sharp.domain == "A" and sharp.codomain == "A*"
    assert sharp.matrix == w.transpose()
    assert phi == TwoTensor.from_grid([[0, -1], [1, 0]])

    _, phi4 = omega_sharp_and_phi(E4, W_E4)
    assert phi4 == S4
    assert phi4.is_skew() and is_invariant(E4, phi4)


def test_rota_baxter_identity():
    for name, alg in fixtures.catalog():
        assert check_rb(alg, Matrix.zero(alg.dim), 5), name
        assert check_rb(alg, Matrix.identity(alg.dim), -1), name
        assert check_rb(alg, Matrix.identity(alg.dim).scale(-2), 2), name
    assert not check_rb(G2, Matrix.identity(2), 0)
    RBOperator(G2, Matrix.identity(2), Fraction(-1))
    with pytest.raises(NotRotaBaxter):
        RBOperator(G2, Matrix.identity(2), Fraction(0))


def test_plain_operator_is_the_relative_one_on_the_regular_module():
    rng = random.Random(3)
    for name, alg in fixtures.catalog():
        mod = ALeibnizModule(regular_representation(alg), alg.sc)
        for lam in (0, -1, 2):
            for _ in range(3):
                beta = Matrix.from_rows(
                    [[rng.randint(-2, 2) for _ in range(alg.dim)]
                     for _ in range(alg.dim)])
                tmap = TaggedLinearMap(beta, "A", "A")
                assert check_relative_rb(mod, tmap, lam) == \
                    check_rb(alg, beta, lam), name


def test_circ_bracket_module():
    mod = circ_bracket(E4, S4)
    assert mod.rep.module_dim == 4
    # zero map is always a relative operator
    assert check_relative_rb(mod, t_of(E4, TwoTensor.zero(4)), -1)
    with pytest.raises(NotSkew):
        circ_bracket(E4, R4)
    nonskew_invariant = TwoTensor.basis(2, 0, 1) - TwoTensor.basis(2, 1, 0)
    with pytest.raises(NotInvariant):
        circ_bracket(G2, nonskew_invariant)


def test_relative_operator_theorem():
    rep = check_relative_rb_equivalence(E4, R4)
    assert rep.defect_zero and rep.relative_rb and rep.o_op1
    for t in invariant_skew_tensors(E4):
        rep = check_relative_rb_equivalence(E4, R4 + t)  # equality of flags asserted inside
        assert rep.defect_zero == rep.relative_rb == rep.o_op1
    with pytest.raises(SkewPartNotInvariant):
        check_relative_rb_equivalence(E4, TwoTensor.basis(4, 0, 1))


def test_beta_from_r_golden_values():
    assert beta_from_r(E4, W_E4, R4) == BETA_E4
    assert beta_from_r(E4, W_E4, S4) == Matrix.identity(4)
    assert beta_from_r(E4, W_E4, R4 + S4) == BETA_E4 + Matrix.identity(4)
    with pytest.raises(SkewPartNotInvariant):
        beta_from_r(E4, W_E4, TwoTensor.basis(4, 0, 1))
    with pytest.raises(InvalidQuadraticRB):
        beta_from_r(E4, Matrix.zero(4), R4)


def test_quasi_rb_identity_tracks_the_defect():
    rep = check_rb_type(E4, W_E4, R4)
    assert rep.defect_zero and rep.quasi_identity
    rng = random.Random(0)
    seen_failure = False
    for _ in range(50):
        t = symmetric_random(rng, 4) + S4.scale(rng.randint(-2, 2))
        rep = check_rb_type(E4, W_E4, t)  # equivalence asserted inside
        assert rep.defect_zero == rep.quasi_identity
        seen_failure = seen_failure or not rep.defect_zero
    assert seen_failure


def test_quadratic_rb_data():
    ab = fixtures.abelian(2)
    w = Matrix.from_rows([[0, 1], [-1, 0]])
    assert check_quadratic_rb(ab, w, Matrix.zero(2), 0).valid

    data = phase_space_quadratic_rb(G2, Matrix.identity(2), -1)
    assert data.algebra.dim == 4
    assert data.beta == BETA_E4  # identity on g2, zero on the dual copy
    assert data.omega == Matrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1],
                                           [-1, 0, 0, 0], [0, -1, 0, 0]])
    assert data.report().valid

    bad = check_quadratic_rb(G2, Matrix.zero(2), Matrix.identity(2), 0)
    assert not bad.rb_ok and not bad.valid
    with pytest.raises(NotRotaBaxter):
        phase_space_quadratic_rb(G2, Matrix.identity(2), 0)


def test_mirror_is_an_involution():
    data = phase_space_quadratic_rb(G2, Matrix.identity(2), -1)
    m = mirror(data)
    assert m.report().valid
    assert m.omega == -data.omega
    mm = mirror(m)
    assert (mm.omega, mm.beta, mm.weight) == (data.omega, data.beta, data.weight)


def test_weight_zero_gives_a_triangular_structure():
    ab = fixtures.abelian(2)
    w = Matrix.from_rows([[0, 1], [-1, 0]])
    zero = make_quadratic_rb(ab, w, Matrix.zero(2), 0)
    bz = triangular_from_weight0(zero)
    assert bz.r.is_zero()
    data = make_quadratic_rb(ab, w, Matrix.from_rows([[1, 0], [0, -1]]), 0)
    bialg = triangular_from_weight0(data)
    assert bialg.r == TwoTensor.from_grid([[0, 1], [1, 0]])
    assert classify(ab, bialg.r).triangular
    with pytest.raises(WrongWeight):
        triangular_from_weight0(phase_space_quadratic_rb(G2, Matrix.identity(2), -1))
    with pytest.raises(WrongWeight):
        factorizable_from_quadratic_rb(zero)


def test_factorizable_to_quadratic_golden_and_scaling():
    data = quadratic_rb_from_factorizable(E4, R4, -1)
    assert data.omega == W_E4 and data.beta == BETA_E4
    for lam in (Fraction(1), Fraction(-2)):
        d = quadratic_rb_from_factorizable(E4, R4, lam)
        assert d.omega == W_E4.scale(-lam)
        assert d.beta == BETA_E4.scale(-lam)
        assert d.report().valid
    with pytest.raises(WrongWeight):
        quadratic_rb_from_factorizable(E4, R4, 0)
    with pytest.raises(NotFactorizable):
        quadratic_rb_from_factorizable(E4, TwoTensor.zero(4), -1)


def test_double_construction_from_an_operator():
    bialg = rb_to_double_factorizable(G2, Matrix.identity(2), -1)
    assert bialg.r == TwoTensor.basis(4, 2, 0) + TwoTensor.basis(4, 3, 1)
    assert classify(bialg.algebra, bialg.r).factorizable

    other = rb_to_double_factorizable(G2, Matrix.identity(2).scale(-1), 1)
    expect = -(TwoTensor.basis(4, 2, 0) + TwoTensor.basis(4, 3, 1))
    assert other.r == expect
    with pytest.raises(WrongWeight):
        rb_to_double_factorizable(G2, Matrix.zero(2), 0)
    with pytest.raises(NotRotaBaxter):
        rb_to_double_factorizable(G2, Matrix.identity(2).scale(2), 1)


def _fixture_triples():
    # the 8-dim double fixture is exercised by the acceptance suite
    phase = rb_to_double_factorizable(G2, Matrix.identity(2), -1)
    return [(E4, R4), (phase.algebra, phase.r)]


def test_round_trips_and_mirror_squares():
    for alg, r in _fixture_triples():
        for lam in (Fraction(-1), Fraction(1), Fraction(-2)):
            data = quadratic_rb_from_factorizable(alg, r, lam)
            assert factorizable_from_quadratic_rb(data).r == r
            back = quadratic_rb_from_factorizable(
                alg, factorizable_from_quadratic_rb(data).r, lam)
            assert (back.omega, back.beta) == (data.omega, data.beta)
            assert check_mirror_diagram(alg, r, lam)


def _rw_equivalence(alg, w, t, lam):
    """Both sides of the weight-compatibility equivalence for beta = T_t w#."""
    beta = t_of(alg, t).matrix @ w.transpose()
    compat = (beta.transpose() @ w + w @ beta + w.scale(lam)).is_zero()
    phi = TwoTensor.from_grid(w.inverse().entries)
    matches = (t - t.swap()) == phi.scale(-lam)
    return compat, matches


def test_weight_compatibility_equivalence_both_directions():
    rng = random.Random(9)
    lam = Fraction(-1)
    phi = TwoTensor.from_grid(W_E4.inverse().entries)
    # satisfying input: symmetric part arbitrary, skew part pinned by the form
    good = symmetric_random(rng, 4) + phi.scale(Fraction(-lam, 2))
    compat, matches = _rw_equivalence(E4, W_E4, good, lam)
    assert compat and matches
    # violating input: skew part off by one basis tensor
    bad = good + TwoTensor.basis(4, 0, 1) - TwoTensor.basis(4, 1, 0)
    compat, matches = _rw_equivalence(E4, W_E4, bad, lam)
    assert not compat and not matches
