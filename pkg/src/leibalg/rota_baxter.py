"""Skew-symmetric quadratic forms, Rota-Baxter operators of weight lambda
(plain and relative), the circ bracket on A*, and the correspondences between
quadratic Rota-Baxter Leibniz algebras and triangular / factorizable
bialgebras.

Conventions: omega is stored as its Gram matrix W[i][j] = omega(e_i, e_j);
the musical map omega# : A -> A* satisfies <omega#(x), y> = omega(x, y), so
its column-convention matrix is W^T, and phi_omega (the tensor form of
(omega#)^{-1}) has coefficient grid W^{-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, TwoTensor, ShapeMismatch, ZERO, ONE, rat
from .algebra import (LeibnizAlgebra, Representation, ALeibnizModule,
                      TaggedLinearMap, AlgebraError, ConsistencyError,
                      regular_representation, dual_representation,
                      semidirect_product, check_a_leibniz)
from .yang_baxter import (clybe_defect, is_invariant, skew_part,
                          skew_part_invariant, t_of, lstar, lrstar,
                          _as_tensor, _unit)
from .bialgebra import LeibnizBialgebra, classify, NotFactorizable


class NotInvariant(AlgebraError):
    pass


class NotSkew(AlgebraError):
    pass


class SkewPartNotInvariant(AlgebraError):
    pass


class NotRotaBaxter(AlgebraError):
    pass


class WrongWeight(AlgebraError):
    pass


class InvalidQuadraticRB(AlgebraError):
    pass


@dataclass(frozen=True)
class QuadraticCheck:
    skew: bool
    nondegenerate: bool
    invariant: bool
    witness: tuple

    @property
    def valid(self) -> bool:
        return self.skew and self.nondegenerate and self.invariant


def check_quadratic(alg: LeibnizAlgebra, omega: Matrix) -> QuadraticCheck:
    """Skewness, nondegeneracy and the invariance
    omega(x,[y,z]) = omega([x,z]+[z,x], y) over all basis triples."""
    n = alg.dim
    if omega.rows != n or omega.cols != n:
        raise ShapeMismatch("form matrix must match algebra dimension")
    w = omega.entries
    skew = all(w[i][j] + w[j][i] == 0 for i in range(n) for j in range(n))
    nondeg = omega.rank() == n
    invariant = True
    witness = ()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum(alg.sc[j][k][m] * w[i][m] for m in range(n))
                rhs = sum((alg.sc[i][k][m] + alg.sc[k][i][m]) * w[m][j]
                          for m in range(n))
                if lhs != rhs:
                    invariant = False
                    witness = witness or ("invariance", (i + 1, j + 1, k + 1),
                                          lhs, rhs)
    return QuadraticCheck(skew, nondeg, invariant, witness)


@dataclass(frozen=True)
class QuadraticForm:
    algebra: LeibnizAlgebra
    omega: Matrix

    def __post_init__(self):
        rep = check_quadratic(self.algebra, self.omega)
        if not rep.valid:
            raise InvalidQuadraticRB(
                f"form is not skew-symmetric quadratic: {rep}")

    def value(self, x, y) -> Fraction:
        return sum(rat(a) * v for a, v in zip(x, self.omega.apply(y)))


def omega_sharp_and_phi(alg: LeibnizAlgebra, omega: Matrix):
    """(omega#, phi_omega).  The lemma-level contract that omega is skew
    quadratic exactly when phi_omega is skew and invariant is asserted."""
    n = alg.dim
    sharp = TaggedLinearMap(omega.transpose(), "A", "A*")
    phi = TwoTensor.from_grid(omega.inverse().entries)
    rep = check_quadratic(alg, omega)
    if (rep.skew and rep.invariant) != (phi.is_skew() and is_invariant(alg, phi)):
        raise ConsistencyError("phi_omega skew/invariance disagrees with the form")
    return sharp, phi


def check_rb(alg: LeibnizAlgebra, beta: Matrix, weight) -> bool:
    """[bx, by] = b([x, by] + [bx, y] + lambda [x, y]) on all basis pairs."""
    n = alg.dim
    if beta.rows != n or beta.cols != n:
        raise ShapeMismatch("operator matrix must match algebra dimension")
    lam = rat(weight)
    for i in range(n):
        x = alg.basis_vector(i)
        bx = beta.apply(x)
        for j in range(n):
            y = alg.basis_vector(j)
            by = beta.apply(y)
            inner = tuple(a + b + lam * c for a, b, c in zip(
                alg.bracket(x, by), alg.bracket(bx, y), alg.bracket(x, y)))
            if alg.bracket(bx, by) != beta.apply(inner):
                return False
    return True


@dataclass(frozen=True)
class RBOperator:
    algebra: LeibnizAlgebra
    beta: Matrix
    weight: Fraction

    def __post_init__(self):
        if not check_rb(self.algebra, self.beta, self.weight):
            raise NotRotaBaxter(f"operator fails the weight-{self.weight} identity")


def check_relative_rb(mod: ALeibnizModule, T: TaggedLinearMap, weight) -> bool:
    """[Tu, Tv] = T(l(Tu)v + r(Tv)u + lambda [u,v]_V) on all V basis pairs."""
    rep = mod.rep
    alg = rep.algebra
    m = rep.module_dim
    lam = rat(weight)
    for a in range(m):
        u = _unit(m, a)
        tu = T.apply(u)
        for b in range(m):
            v = _unit(m, b)
            tv = T.apply(v)
            inner = tuple(p + q + lam * s for p, q, s in zip(
                rep.l(tu).apply(v), rep.r(tv).apply(u), mod.vbracket_of(u, v)))
            if alg.bracket(tu, tv) != T.apply(inner):
                return False
    return True


def circ_bracket(alg: LeibnizAlgebra, s) -> ALeibnizModule:
    """The module (L*, -L*-R*, A*) with a* o b* = L*(T_s a*) b*, for a skew
    invariant s.  The result passes the module compatibility axioms."""
    t = _as_tensor(alg, s)
    if not t.is_skew():
        raise NotSkew("circ bracket needs a skew-symmetric tensor")
    if not is_invariant(alg, t):
        raise NotInvariant("circ bracket needs an invariant tensor")
    n = alg.dim
    ts = t_of(alg, t)
    cube = []
    for a in range(n):
        la = lstar(alg, ts.apply(_unit(n, a)))
        cube.append(tuple(tuple(la.entries[m][b] for m in range(n))
                          for b in range(n)))
    rep = dual_representation(regular_representation(alg))
    mod = ALeibnizModule(rep, tuple(cube))
    if not check_a_leibniz(mod).ok:
        raise ConsistencyError("circ-bracket module fails the compatibility axioms")
    return mod


@dataclass(frozen=True)
class RelativeRBReport:
    defect_zero: bool
    relative_rb: bool
    o_op1: bool


def check_relative_rb_equivalence(alg: LeibnizAlgebra, r) -> RelativeRBReport:
    """For r with invariant skew part s = r - swap(r), the equivalence of:
    a vanishing defect; T_r being a relative Rota-Baxter operator of weight -1
    on (L*, -L*-R*, A*, o_s); and the explicit operator identity

      [Tr a*, Tr b*] = Tr(L*(Tr a*)b* - (L*+R*)(Tr b*)a* - a* o_s b*).
    """
    t = _as_tensor(alg, r)
    if not skew_part_invariant(alg, t):
        raise SkewPartNotInvariant("skew part of r must be invariant")
    n = alg.dim
    s = skew_part(alg, t)
    mod = circ_bracket(alg, s)
    tr = t_of(alg, t)
    rel = check_relative_rb(mod, tr, -1)
    o_op1 = True
    for a in range(n):
        astar = _unit(n, a)
        ta = tr.apply(astar)
        la = lstar(alg, ta)
        for b in range(n):
            bstar = _unit(n, b)
            tb = tr.apply(bstar)
            arg = tuple(p - q - c for p, q, c in zip(
                la.apply(bstar), lrstar(alg, tb).apply(astar),
                mod.vbracket_of(astar, bstar)))
            if alg.bracket(ta, tb) != tr.apply(arg):
                o_op1 = False
    defect_zero = clybe_defect(alg, t).is_zero()
    if not (defect_zero == rel == o_op1):
        raise ConsistencyError("defect / relative-RB / operator-identity "
                               "equivalence violated")
    return RelativeRBReport(defect_zero, rel, o_op1)


def beta_from_r(alg: LeibnizAlgebra, omega: Matrix, r) -> Matrix:
    """beta = T_r o omega# as a composition A -> A* -> A."""
    t = _as_tensor(alg, r)
    if not check_quadratic(alg, omega).valid:
        raise InvalidQuadraticRB("omega is not a skew quadratic form")
    if not skew_part_invariant(alg, t):
        raise SkewPartNotInvariant("skew part of r must be invariant")
    sharp, _ = omega_sharp_and_phi(alg, omega)
    return t_of(alg, t).compose(sharp).matrix


@dataclass(frozen=True)
class RBTypeReport:
    defect_zero: bool
    quasi_identity: bool


def check_rb_type(alg: LeibnizAlgebra, omega: Matrix, r) -> RBTypeReport:
    """With beta = T_r omega#, the defect of r vanishes exactly when

      [bx, by] = b([bx, y] + [x, by] - [x, T_s omega# y]),   s = r - swap(r).
    """
    t = _as_tensor(alg, r)
    beta = beta_from_r(alg, omega, t)
    sharp, _ = omega_sharp_and_phi(alg, omega)
    g = t_of(alg, skew_part(alg, t)).compose(sharp).matrix
    n = alg.dim
    quasi_identity = True
    for i in range(n):
        x = alg.basis_vector(i)
        bx = beta.apply(x)
        for j in range(n):
            y = alg.basis_vector(j)
            by = beta.apply(y)
            inner = tuple(p + q - c for p, q, c in zip(
                alg.bracket(bx, y), alg.bracket(x, by),
                alg.bracket(x, g.apply(y))))
            if alg.bracket(bx, by) != beta.apply(inner):
                quasi_identity = False
    defect_zero = clybe_defect(alg, t).is_zero()
    if defect_zero != quasi_identity:
        raise ConsistencyError("defect / quasi-RB identity equivalence violated")
    return RBTypeReport(defect_zero, quasi_identity)


@dataclass(frozen=True)
class QuadraticRBReport:
    quadratic_ok: bool
    rb_ok: bool
    compat_ok: bool

    @property
    def valid(self) -> bool:
        return self.quadratic_ok and self.rb_ok and self.compat_ok


def check_quadratic_rb(alg: LeibnizAlgebra, omega: Matrix, beta: Matrix,
                       weight) -> QuadraticRBReport:
    """Validity of (omega, beta, lambda): omega skew quadratic, beta a
    Rota-Baxter operator of weight lambda, and the compatibility
    omega(bx, y) + omega(x, by) + lambda omega(x, y) = 0."""
    lam = rat(weight)
    quadratic_ok = check_quadratic(alg, omega).valid
    rb_ok = check_rb(alg, beta, lam)
    lhs = beta.transpose() @ omega + omega @ beta + omega.scale(lam)
    compat_ok = lhs.is_zero()
    return QuadraticRBReport(quadratic_ok, rb_ok, compat_ok)


@dataclass(frozen=True)
class QuadraticRBData:
    algebra: LeibnizAlgebra
    omega: Matrix
    beta: Matrix
    weight: Fraction

    def report(self) -> QuadraticRBReport:
        return check_quadratic_rb(self.algebra, self.omega, self.beta, self.weight)

    def validate(self):
        rep = self.report()
        if not rep.valid:
            raise InvalidQuadraticRB(f"quadratic Rota-Baxter axioms fail: {rep}")


def make_quadratic_rb(alg, omega, beta, weight) -> QuadraticRBData:
    data = QuadraticRBData(alg, omega, beta, rat(weight))
    data.validate()
    return data


def mirror(data: QuadraticRBData) -> QuadraticRBData:
    """(omega, beta) -> (-omega, -(lambda id + beta)), same weight; involutive."""
    data.validate()
    n = data.algebra.dim
    new_beta = -(Matrix.identity(n).scale(data.weight) + data.beta)
    return make_quadratic_rb(data.algebra, -data.omega, new_beta, data.weight)


def _phase_space_algebra(alg: LeibnizAlgebra) -> LeibnizAlgebra:
    """A semidirect A* with the dualized regular representation (L*, -L*-R*)."""
    rep = dual_representation(regular_representation(alg))
    names = tuple(f"{nm}*" for nm in alg.basis_names)
    return semidirect_product(alg, rep, module_names=names)


def phase_space_quadratic_rb(alg: LeibnizAlgebra, beta: Matrix,
                             weight) -> QuadraticRBData:
    """Quadratic Rota-Baxter structure on A semidirect A*:
    omega_p(x+a*, y+b*) = <x, b*> - <a*, y>, operator beta on A and the
    dualized -(beta + lambda id) on A*."""
    lam = rat(weight)
    if not check_rb(alg, beta, lam):
        raise NotRotaBaxter("beta is not a Rota-Baxter operator of this weight")
    n = alg.dim
    big = _phase_space_algebra(alg)
    w = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        w[i][n + i] = ONE
        w[n + i][i] = -ONE
    dual_block = -(beta + Matrix.identity(n).scale(lam)).transpose()
    return make_quadratic_rb(big, Matrix.from_rows(w),
                             Matrix.block_diag(beta, dual_block), lam)


def _bialgebra_from_data(data: QuadraticRBData) -> LeibnizBialgebra:
    """Common construction T_r = beta (omega#)^{-1}, r grid = (T_r matrix)^T."""
    data.validate()
    sharp, _ = omega_sharp_and_phi(data.algebra, data.omega)
    t_mat = data.beta @ sharp.matrix.inverse()
    r = TwoTensor.from_grid(t_mat.transpose().entries)
    return LeibnizBialgebra.from_r(data.algebra, r)


def triangular_from_weight0(data: QuadraticRBData) -> LeibnizBialgebra:
    if data.weight != 0:
        raise WrongWeight("construction requires weight 0")
    bialg = _bialgebra_from_data(data)
    if not bialg.r.is_symmetric():
        raise ConsistencyError("weight-0 tensor is not symmetric")
    if not classify(data.algebra, bialg.r).triangular:
        raise ConsistencyError("weight-0 construction is not triangular")
    return bialg


def factorizable_from_quadratic_rb(data: QuadraticRBData) -> LeibnizBialgebra:
    if data.weight == 0:
        raise WrongWeight("construction requires nonzero weight")
    bialg = _bialgebra_from_data(data)
    _, phi = omega_sharp_and_phi(data.algebra, data.omega)
    if bialg.r - bialg.r.swap() != phi.scale(-data.weight):
        raise ConsistencyError("skew part of r does not match -lambda phi_omega")
    if not classify(data.algebra, bialg.r).factorizable:
        raise ConsistencyError("nonzero-weight construction is not factorizable")
    return bialg


def rb_to_double_factorizable(alg: LeibnizAlgebra, beta: Matrix,
                              weight) -> LeibnizBialgebra:
    """Factorizable structure on A semidirect A* with
    r = sum_i (beta + lambda)e_i (x) e*_i + e*_i (x) beta(e_i)."""
    lam = rat(weight)
    if lam == 0:
        raise WrongWeight("construction requires nonzero weight")
    if not check_rb(alg, beta, lam):
        raise NotRotaBaxter("beta is not a Rota-Baxter operator of this weight")
    n = alg.dim
    big = _phase_space_algebra(alg)
    shifted = beta + Matrix.identity(n).scale(lam)
    grid = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for k in range(n):
            grid[k][n + i] = shifted.entries[k][i]
            grid[n + i][k] = beta.entries[k][i]
    r = TwoTensor.from_grid(grid)
    via_phase_space = factorizable_from_quadratic_rb(
        phase_space_quadratic_rb(alg, beta, lam))
    if via_phase_space.r != r:
        raise ConsistencyError("direct tensor disagrees with the phase-space route")
    bialg = LeibnizBialgebra.from_r(big, r)
    if not classify(big, r).factorizable:
        raise ConsistencyError("double construction is not factorizable")
    return bialg


def quadratic_rb_from_factorizable(alg: LeibnizAlgebra, r,
                                   weight) -> QuadraticRBData:
    """omega(x, y) = -lambda <T_s^{-1} x, y> with s = r - swap(r), and
    beta = T_r omega#."""
    lam = rat(weight)
    if lam == 0:
        raise WrongWeight("correspondence requires nonzero weight")
    t = _as_tensor(alg, r)
    if not classify(alg, t).factorizable:
        raise NotFactorizable("r is not factorizable")
    ts_inv = t_of(alg, skew_part(alg, t)).matrix.inverse()
    omega = ts_inv.transpose().scale(-lam)
    beta = beta_from_r(alg, omega, t)
    return make_quadratic_rb(alg, omega, beta, lam)


def check_mirror_diagram(alg: LeibnizAlgebra, r, weight) -> bool:
    """The square relating the two correspondences commutes: passing to
    swap(r) matches mirroring the quadratic data, and both quadratic data
    map back to r resp. swap(r)."""
    lam = rat(weight)
    t = _as_tensor(alg, r)
    data = quadratic_rb_from_factorizable(alg, t, lam)
    data_sw = quadratic_rb_from_factorizable(alg, t.swap(), lam)
    mirrored = mirror(data)
    if (data_sw.omega, data_sw.beta) != (mirrored.omega, mirrored.beta):
        raise ConsistencyError("mirror square fails on the quadratic data")
    if factorizable_from_quadratic_rb(data).r != t:
        raise ConsistencyError("mirror square fails to recover r")
    if factorizable_from_quadratic_rb(data_sw).r != t.swap():
        raise ConsistencyError("mirror square fails to recover swap(r)")
    return True
