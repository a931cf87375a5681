"""2-tensors on a Leibniz algebra: the Yang-Baxter defect [[r,r]], the
invariance operator F(x) = (L+R)(x)(x)id - id(x)R(x), the operator form T_r,
and the operator-level characterizations of solutions.

Index convention shared by all modules: r = sum_{i,j} r[i][j] e_i (x) e_j,
and T_r(e*_i) = sum_j r[i][j] e_j.
"""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, TwoTensor, ThreeTensor, ZERO, ONE, SIGMA13
from .algebra import (LeibnizAlgebra, TaggedLinearMap, DimensionMismatch,
                      ConsistencyError)


@dataclass(frozen=True)
class RTensor:
    algebra: LeibnizAlgebra
    t: TwoTensor

    def __post_init__(self):
        if self.t.dim != self.algebra.dim:
            raise DimensionMismatch("tensor dimension does not match algebra")


def _as_tensor(alg, r) -> TwoTensor:
    t = r.t if isinstance(r, RTensor) else r
    if t.dim != alg.dim:
        raise DimensionMismatch("tensor dimension does not match algebra")
    return t


def clybe_defect(alg: LeibnizAlgebra, r) -> ThreeTensor:
    """[[r,r]] = [r12,r13] - ([r12,r23] + [r23,r12]) + [r23,r13].

    With r = sum a_i (x) b_i this expands to
    sum_{i,j} [a_i,a_j](x)b_i(x)b_j - a_i(x)[b_i,a_j](x)b_j
              - a_i(x)[a_j,b_i](x)b_j + a_i(x)a_j(x)[b_j,b_i].
    """
    t = _as_tensor(alg, r)
    n = alg.dim
    sc = alg.sc
    terms = [(p, q, c) for p, row in enumerate(t.coeff)
             for q, c in enumerate(row) if c != 0]
    cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for p, q, c1 in terms:
        for s, u, c2 in terms:
            c = c1 * c2
            for k in range(n):
                if sc[p][s][k] != 0:
                    cube[k][q][u] += c * sc[p][s][k]
                if sc[q][s][k] != 0:
                    cube[p][k][u] -= c * sc[q][s][k]
                if sc[s][q][k] != 0:
                    cube[p][k][u] -= c * sc[s][q][k]
                if sc[u][q][k] != 0:
                    cube[p][s][k] += c * sc[u][q][k]
    return ThreeTensor.from_cube(cube)


def is_clybe_solution(alg, r) -> bool:
    return clybe_defect(alg, r).is_zero()


def check_sigma_equivariance(alg, r) -> bool:
    """[[swap(r), swap(r)]] = sigma13([[r,r]])."""
    t = _as_tensor(alg, r)
    return clybe_defect(alg, t.swap()) == clybe_defect(alg, t).permute(SIGMA13)


def f_apply(alg: LeibnizAlgebra, x, t: TwoTensor) -> TwoTensor:
    """F(x)t with F(x) = (L+R)(x) (x) id - id (x) R(x), termwise."""
    if t.dim != alg.dim:
        raise DimensionMismatch("tensor dimension does not match algebra")
    lr = alg.left_mult(x) + alg.right_mult(x)
    return t.act_left(lr) - t.act_right(alg.right_mult(x))


def _kron(a: Matrix, b: Matrix) -> Matrix:
    rows = a.rows * b.rows
    cols = a.cols * b.cols

    def entry(i, j):
        return a.entries[i // b.rows][j // b.cols] * b.entries[i % b.rows][j % b.cols]

    return Matrix.build(rows, cols, entry)


def f_operator(alg: LeibnizAlgebra, x) -> Matrix:
    """Matrix of F(x) on the n^2 coefficient space, row-major ordering."""
    n = alg.dim
    if len(x) != n:
        raise DimensionMismatch("vector length does not match algebra dimension")
    lr = alg.left_mult(x) + alg.right_mult(x)
    eye = Matrix.identity(n)
    return _kron(lr, eye) - _kron(eye, alg.right_mult(x))


def is_invariant(alg: LeibnizAlgebra, t) -> bool:
    """F(e_i)t = 0 for every basis element."""
    tt = _as_tensor(alg, t)
    return all(f_apply(alg, alg.basis_vector(i), tt).is_zero()
               for i in range(alg.dim))


def skew_part(alg, r) -> TwoTensor:
    t = _as_tensor(alg, r)
    return t - t.swap()


def skew_part_invariant(alg, r) -> bool:
    return is_invariant(alg, skew_part(alg, r))


def t_of(alg: LeibnizAlgebra, r) -> TaggedLinearMap:
    """T_r: A* -> A, <T_r(a*), b*> = <r, a*(x)b*>; column matrix is grid^T."""
    t = _as_tensor(alg, r)
    return TaggedLinearMap(Matrix.from_rows(t.coeff).transpose(), "A*", "A")


def lstar_mats(alg: LeibnizAlgebra) -> tuple:
    """L*(e_i) acting on dual coordinates: -L(e_i)^T."""
    return tuple(-alg.left_mult_basis(i).transpose() for i in range(alg.dim))


def rstar_mats(alg: LeibnizAlgebra) -> tuple:
    return tuple(-alg.right_mult_basis(i).transpose() for i in range(alg.dim))


def lstar(alg: LeibnizAlgebra, x) -> Matrix:
    return -alg.left_mult(x).transpose()


def rstar(alg: LeibnizAlgebra, x) -> Matrix:
    return -alg.right_mult(x).transpose()


def lrstar(alg: LeibnizAlgebra, x) -> Matrix:
    return -(alg.left_mult(x) + alg.right_mult(x)).transpose()


def invariant_skew_tensors(alg: LeibnizAlgebra) -> list:
    """Basis of the space of skew-symmetric t with F(e_i)t = 0 for all i."""
    n = alg.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return []
    basis = []
    for i, j in pairs:
        basis.append(TwoTensor.basis(n, i, j) - TwoTensor.basis(n, j, i))
    columns = []
    for t in basis:
        col = []
        for k in range(n):
            col.extend(f_apply(alg, alg.basis_vector(k), t).vec())
        columns.append(col)
    stacked = Matrix.build(n * n * n, len(basis), lambda a, b: columns[b][a])
    out = []
    for coeffs in stacked.kernel():
        t = TwoTensor.zero(n)
        for c, b in zip(coeffs, basis):
            if c != 0:
                t = t + b.scale(c)
        out.append(t)
    return out


def _unit(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


@dataclass(frozen=True)
class OperatorCharacterization:
    defect_zero: bool
    eq_homo2_holds: bool
    eq_homo1_holds: bool
    skew_part_invariant: bool

    @property
    def ok(self) -> bool:
        return self.defect_zero


def check_operator_characterization(alg: LeibnizAlgebra, r) -> OperatorCharacterization:
    """Operator-level solution criteria for all dual-basis pairs (a*, b*):

      homo2: [Ts a*, Ts b*] = Ts(L*(Tr a*)b* - (L*+R*)(Ts b*)a*)   (Ts = T_{swap r})
      homo1: [Tr a*, Tr b*] = Tr(L*(Tr a*)b* - (L*+R*)(Ts b*)a*)

    homo2 is equivalent to a vanishing defect for every r; homo1 is
    equivalent when the skew part of r is invariant.
    """
    t = _as_tensor(alg, r)
    n = alg.dim
    tr = t_of(alg, t)
    ts = t_of(alg, t.swap())
    homo2 = True
    homo1 = True
    for a in range(n):
        astar = _unit(n, a)
        la = lstar(alg, tr.apply(astar))
        for b in range(n):
            bstar = _unit(n, b)
            arg = tuple(p - q for p, q in zip(
                la.apply(bstar), lrstar(alg, ts.apply(bstar)).apply(astar)))
            if alg.bracket(ts.apply(astar), ts.apply(bstar)) != ts.apply(arg):
                homo2 = False
            if alg.bracket(tr.apply(astar), tr.apply(bstar)) != tr.apply(arg):
                homo1 = False
    defect_zero = clybe_defect(alg, t).is_zero()
    spi = skew_part_invariant(alg, t)
    if defect_zero != homo2:
        raise ConsistencyError("defect/homo2 equivalence violated")
    if spi and defect_zero != homo1:
        raise ConsistencyError("defect/homo1 equivalence violated under invariant skew part")
    return OperatorCharacterization(defect_zero, homo2, homo1, spi)


@dataclass(frozen=True)
class InvarianceForms:
    inv: bool
    bracket_form: bool
    dual_pair_form: bool
    is_skew: bool


def check_invariance_forms(alg: LeibnizAlgebra, r) -> InvarianceForms:
    """Invariance and its operator reformulations, over all basis combinations:

      bracket_form: [T_r a*, x] + T_r((L*+R*)(x) a*) = 0            (equivalent for all r)
      dual_pair_form: L*(T_r a*)b* + (L*+R*)(T_r b*)a* = 0            (equivalent for skew r)
    """
    t = _as_tensor(alg, r)
    n = alg.dim
    tr = t_of(alg, t)
    bracket_form = True
    dual_pair_form = True
    for a in range(n):
        astar = _unit(n, a)
        ta = tr.apply(astar)
        la = lstar(alg, ta)
        for i in range(n):
            x = alg.basis_vector(i)
            val = tuple(p + q for p, q in zip(
                alg.bracket(ta, x), tr.apply(lrstar(alg, x).apply(astar))))
            if any(v != 0 for v in val):
                bracket_form = False
        for b in range(n):
            bstar = _unit(n, b)
            val = tuple(p + q for p, q in zip(
                la.apply(bstar), lrstar(alg, tr.apply(bstar)).apply(astar)))
            if any(v != 0 for v in val):
                dual_pair_form = False
    inv = is_invariant(alg, t)
    if inv != bracket_form:
        raise ConsistencyError("invariance/bracket_form equivalence violated")
    if t.is_skew() and inv != dual_pair_form:
        raise ConsistencyError("invariance/dual_pair_form equivalence violated for skew tensor")
    return InvarianceForms(inv, bracket_form, dual_pair_form, t.is_skew())
