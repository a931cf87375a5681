"""Leibniz coalgebras and bialgebras from 2-tensors, classification
(quasi-triangular / triangular / factorizable), dual brackets, factorization,
and the double algebra with its canonical factorizable structure.

Comultiplications are stored as cubes d[i][j][k] with
Delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k.  The basis order on the double
D = A (+) A* is (e_1..e_n, e*_1..e*_n).
"""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, TwoTensor, ThreeTensor, Perm3, ZERO, ONE
from .algebra import (LeibnizAlgebra, TaggedLinearMap, AlgebraError,
                      DimensionMismatch, ConsistencyError, check_isomorphism,
                      direct_sum)
from .yang_baxter import (clybe_defect, f_apply, skew_part, skew_part_invariant,
                          t_of, lstar, lrstar, _as_tensor, _unit)

SWAP12 = Perm3((1, 0, 2))


class InvalidBialgebra(AlgebraError):
    pass


class NotFactorizable(AlgebraError):
    pass


@dataclass(frozen=True)
class Comultiplication:
    algebra: LeibnizAlgebra
    d: tuple  # cube d[i][j][k]

    def __post_init__(self):
        n = self.algebra.dim
        if len(self.d) != n or any(len(p) != n or any(len(r) != n for r in p)
                                   for p in self.d):
            raise DimensionMismatch("comultiplication cube must match algebra dim")

    def of_basis(self, i) -> TwoTensor:
        return TwoTensor.from_grid(self.d[i])

    def of(self, x) -> TwoTensor:
        t = TwoTensor.zero(self.algebra.dim)
        for i, xi in enumerate(x):
            if xi != 0:
                t = t + self.of_basis(i).scale(xi)
        return t

    def is_zero(self) -> bool:
        return all(c == 0 for p in self.d for r in p for c in r)


def delta_from_r(alg: LeibnizAlgebra, r) -> Comultiplication:
    """Delta_r(x) = F(x)r."""
    t = _as_tensor(alg, r)
    cube = tuple(f_apply(alg, alg.basis_vector(i), t).coeff
                 for i in range(alg.dim))
    return Comultiplication(alg, cube)


def check_coalgebra(delta: Comultiplication) -> bool:
    """(Delta(x)id)Delta + (sigma(x)id)(id(x)Delta)Delta - (id(x)Delta)Delta = 0."""
    n = delta.algebra.dim
    d = delta.d
    nz = [[(j, k, c) for j in range(n) for k, c in enumerate(d[i][j]) if c]
          for i in range(n)]
    for i in range(n):
        cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for j, c1, v1 in nz[i]:
            for a, b, v2 in nz[j]:
                cube[a][b][c1] += v1 * v2
        for a, k, v1 in nz[i]:
            for b, c, v2 in nz[k]:
                prod = v1 * v2
                cube[b][a][c] += prod   # legs 1,2 swapped
                cube[a][b][c] -= prod
        if any(x for plane in cube for row in plane for x in row):
            return False
    return True


@dataclass(frozen=True)
class BialgebraReport:
    coalgebra_ok: bool
    bialg1_ok: bool
    bialg2_ok: bool
    witness: tuple  # (name, (i, j)) of a failing identity, or ()

    @property
    def valid(self) -> bool:
        return self.coalgebra_ok and self.bialg1_ok and self.bialg2_ok


def check_bialgebra(alg: LeibnizAlgebra, delta: Comultiplication) -> BialgebraReport:
    """Direct check of the two compatibility identities between bracket and Delta:

      bialg1: sigma(R(y)(x)id)Delta(x) = (R(x)(x)id)Delta(y)
      bialg2: Delta([x,y]) = (id(x)R(y) - (L+R)(y)(x)id)(id+sigma)Delta(x)
                              + (id(x)L(x) + L(x)(x)id)Delta(y)
    """
    n = alg.dim
    bialg1 = True
    bialg2 = True
    witness = ()
    for i in range(n):
        di = delta.of_basis(i)
        li = alg.left_mult_basis(i)
        ri = alg.right_mult_basis(i)
        for j in range(n):
            dj = delta.of_basis(j)
            lj = alg.left_mult_basis(j)
            rj = alg.right_mult_basis(j)
            lhs1 = di.act_left(rj).swap()
            rhs1 = dj.act_left(ri)
            if lhs1 != rhs1:
                bialg1 = False
                witness = witness or ("bialg1", (i + 1, j + 1))
            sym = di + di.swap()
            rhs2 = (sym.act_right(rj) - sym.act_left(lj + rj)
                    + dj.act_right(li) + dj.act_left(li))
            lhs2 = delta.of(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)))
            if lhs2 != rhs2:
                bialg2 = False
                witness = witness or ("bialg2", (i + 1, j + 1))
    coalg = check_coalgebra(delta)
    if not coalg:
        witness = witness or ("coalgebra", ())
    return BialgebraReport(coalg, bialg1, bialg2, witness)


@dataclass(frozen=True)
class RConditions:
    coalg_cond: bool
    mp1: bool
    mp2: bool

    @property
    def all_hold(self) -> bool:
        return self.coalg_cond and self.mp1 and self.mp2


def _weighted_cube(alg, r, grids) -> ThreeTensor:
    """sum_{p,c} r[p][c] * grids[p] (x) e_c, with grids[p] an n x n grid."""
    n = alg.dim
    t = _as_tensor(alg, r)
    return ThreeTensor.build(n, lambda a, b, c: sum(
        t.coeff[p][c] * grids[p][a][b] for p in range(n) if t.coeff[p][c] != 0))


def check_r_conditions(alg: LeibnizAlgebra, r) -> RConditions:
    """Tensor-level conditions on r equivalent to the three bialgebra axioms
    for Delta_r; the equivalences themselves are asserted on every call.
    """
    t = _as_tensor(alg, r)
    n = alg.dim
    s = skew_part(alg, t)
    defect = clybe_defect(alg, t)
    fs = [f_apply(alg, alg.basis_vector(i), s) for i in range(n)]
    lr = [alg.lr_mult_basis(i) for i in range(n)]
    rm = [alg.right_mult_basis(i) for i in range(n)]
    lm = [alg.left_mult_basis(i) for i in range(n)]

    # coalgebra condition for Delta_r
    sigma_c = defect.permute(SWAP12)
    h = _weighted_cube(alg, t, [fs[p].coeff for p in range(n)])
    base = sigma_c - h
    coalg_cond = True
    for i in range(n):
        g = Matrix.from_rows(fs[i].swap().coeff)
        corr = _weighted_cube(alg, t, [(lr[p] @ g).entries for p in range(n)])
        total = base.act(2, rm[i]) - base.act(1, lr[i]) + defect.act(0, lr[i]) + corr
        if not total.is_zero():
            coalg_cond = False
            break

    mp1 = all(fs[i].act_left(rm[j]).is_zero()
              for i in range(n) for j in range(n))
    mp2 = True
    for i in range(n):
        for j in range(n):
            fi, fj = fs[i], fs[j]
            val = (fi.swap().act_left(lm[j]) + (fi.swap() - fi).act_left(rm[j])
                   - fi.act_left(rm[j]).swap() - fj.act_left(rm[i]).swap())
            if not val.is_zero():
                mp2 = False
                break
        if not mp2:
            break

    report = check_bialgebra(alg, delta_from_r(alg, t))
    if coalg_cond != report.coalgebra_ok:
        raise ConsistencyError("coalgebra condition disagrees with direct check")
    if mp1 != report.bialg1_ok:
        raise ConsistencyError("mp1 disagrees with direct bialg1 check")
    if mp2 != report.bialg2_ok:
        raise ConsistencyError("mp2 disagrees with direct bialg2 check")
    return RConditions(coalg_cond, mp1, mp2)


def dual_bracket(alg: LeibnizAlgebra, r) -> LeibnizAlgebra:
    """The bracket on A* dual to Delta_r:
    [a*,b*]_r = L*(T_r a*)b* - (L*+R*)(T_{swap r} b*)a*.

    The pairing identity <Delta_r(x), a*(x)b*> = <x, [a*,b*]_r> is asserted.
    Returned unchecked: it satisfies the Leibniz identity whenever
    (A, Delta_r) is a Leibniz bialgebra, but not in general.
    """
    t = _as_tensor(alg, r)
    n = alg.dim
    tr = t_of(alg, t)
    ts = t_of(alg, t.swap())
    cube = [[None] * n for _ in range(n)]
    for a in range(n):
        astar = _unit(n, a)
        la = lstar(alg, tr.apply(astar))
        for b in range(n):
            bstar = _unit(n, b)
            cube[a][b] = tuple(p - q for p, q in zip(
                la.apply(bstar), lrstar(alg, ts.apply(bstar)).apply(astar)))
    delta = delta_from_r(alg, t)
    for m in range(n):
        for a in range(n):
            for b in range(n):
                if delta.d[m][a][b] != cube[a][b][m]:
                    raise ConsistencyError("dual bracket fails the pairing identity")
    names = tuple(f"{nm}*" for nm in alg.basis_names)
    return LeibnizAlgebra.from_cube(cube, names, check=False)


@dataclass(frozen=True)
class Classification:
    is_bialgebra: bool
    quasi_triangular: bool
    triangular: bool
    factorizable: bool

    def __post_init__(self):
        if self.triangular and not self.quasi_triangular:
            raise ConsistencyError("triangular without quasi-triangular")
        if self.factorizable and not self.quasi_triangular:
            raise ConsistencyError("factorizable without quasi-triangular")

    def describe(self) -> str:
        yn = lambda b: "yes" if b else "no"
        return (f"quasi-triangular: {yn(self.quasi_triangular)}; "
                f"triangular: {yn(self.triangular)}; "
                f"factorizable: {yn(self.factorizable)}")


def classify(alg: LeibnizAlgebra, r) -> Classification:
    t = _as_tensor(alg, r)
    quasi = clybe_defect(alg, t).is_zero() and skew_part_invariant(alg, t)
    triangular = quasi and t.is_symmetric()
    tskew = t_of(alg, t - t.swap())
    factorizable = quasi and tskew.matrix.rank() == alg.dim
    bialg = check_bialgebra(alg, delta_from_r(alg, t)).valid
    if quasi and not bialg:
        raise ConsistencyError("quasi-triangular data failed the bialgebra check")
    if triangular and factorizable and alg.dim >= 1:
        raise ConsistencyError("r cannot be both symmetric and have invertible skew part")
    return Classification(bialg, quasi, triangular, factorizable)


def factorize(alg: LeibnizAlgebra, r, x):
    """Unique decomposition x = x1 - x2 with x1 = T_r(w), x2 = T_{swap r}(w),
    w = T_{r - swap r}^{-1}(x)."""
    t = _as_tensor(alg, r)
    if not classify(alg, t).factorizable:
        raise NotFactorizable("skew part of r is not invertible or r is not a solution")
    w = t_of(alg, t - t.swap()).inverse().apply(x)
    x1 = t_of(alg, t).apply(w)
    x2 = t_of(alg, t.swap()).apply(w)
    if tuple(a - b for a, b in zip(x1, x2)) != tuple(x):
        raise ConsistencyError("factorization does not recompose to x")
    return x1, x2


@dataclass(frozen=True)
class LeibnizBialgebra:
    algebra: LeibnizAlgebra
    delta: Comultiplication
    r: TwoTensor | None = None

    @classmethod
    def from_r(cls, alg, r) -> "LeibnizBialgebra":
        t = _as_tensor(alg, r)
        bialg = cls(alg, delta_from_r(alg, t), t)
        bialg.validate()
        return bialg

    def validate(self):
        report = check_bialgebra(self.algebra, self.delta)
        if not report.valid:
            raise InvalidBialgebra(f"bialgebra axioms fail: {report.witness}")


def _dual_algebra(bialg: LeibnizBialgebra) -> LeibnizAlgebra:
    """Linear dual of Delta: [e*_a, e*_b] = sum_m d[m][a][b] e*_m."""
    alg, d = bialg.algebra, bialg.delta.d
    n = alg.dim
    cube = [[[d[m][a][b] for m in range(n)] for b in range(n)] for a in range(n)]
    names = tuple(f"{nm}*" for nm in alg.basis_names)
    return LeibnizAlgebra.from_cube(cube, names, check=False)


def double_algebra(bialg: LeibnizBialgebra) -> LeibnizAlgebra:
    """Leibniz algebra on D = A (+) A*:
    [x+a*, y+b*] = [x,y] + L*_{A*}(a*)y - (L*_{A*}+R*_{A*})(b*)x
                   + [a*,b*]_{A*} + L*_A(x)b* - (L*_A+R*_A)(y)a*.
    """
    bialg.validate()
    alg = bialg.algebra
    astar = _dual_algebra(bialg)
    n = alg.dim
    cube = [[[ZERO] * (2 * n) for _ in range(2 * n)] for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cube[i][j][k] = alg.sc[i][j][k]
                cube[n + i][n + j][n + k] = astar.sc[i][j][k]
    lstar_a = [lstar(alg, alg.basis_vector(i)) for i in range(n)]
    lrstar_a = [lrstar(alg, alg.basis_vector(i)) for i in range(n)]
    lstar_d = [lstar(astar, astar.basis_vector(a)) for a in range(n)]
    lrstar_d = [lrstar(astar, astar.basis_vector(a)) for a in range(n)]
    for i in range(n):
        for a in range(n):
            # [e_i, e*_a]: A part -(L*+R*)_{A*}(e*_a) e_i, A* part L*_A(e_i) e*_a
            for k in range(n):
                cube[i][n + a][k] = -lrstar_d[a].entries[k][i]
                cube[i][n + a][n + k] = lstar_a[i].entries[k][a]
            # [e*_a, e_i]: A part L*_{A*}(e*_a) e_i, A* part -(L*+R*)_A(e_i) e*_a
            for k in range(n):
                cube[n + a][i][k] = lstar_d[a].entries[k][i]
                cube[n + a][i][n + k] = -lrstar_a[i].entries[k][a]
    names = tuple(alg.basis_names) + tuple(astar.basis_names)
    return LeibnizAlgebra.from_cube(cube, names)


def double_canonical_r(bialg: LeibnizBialgebra) -> TwoTensor:
    """r = sum_i e_i (x) e*_i on D, in the (A first, A* second) basis order."""
    n = bialg.algebra.dim
    grid = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        grid[i][n + i] = ONE
    return TwoTensor.from_grid(grid)


def theta_isomorphism(alg: LeibnizAlgebra, r):
    """theta: D -> A (+) A, theta(x) = (x,x), theta(a*) = (T_r a*, T_{swap r} a*).

    Returns (map, ok) where ok records the verified isomorphism onto the
    direct sum.
    """
    t = _as_tensor(alg, r)
    if not classify(alg, t).factorizable:
        raise NotFactorizable("theta needs a factorizable structure")
    n = alg.dim
    tr = t_of(alg, t).matrix
    ts = t_of(alg, t.swap()).matrix
    eye = Matrix.identity(n)

    def ent(i, j):
        blk = (eye if j < n else tr) if i < n else (eye if j < n else ts)
        return blk.entries[i % n][j % n]

    theta = TaggedLinearMap(Matrix.build(2 * n, 2 * n, ent), "D", "A(+)A")
    dbl = double_algebra(LeibnizBialgebra.from_r(alg, t))
    ok = check_isomorphism(dbl, direct_sum(alg, alg), theta)
    return theta, ok
