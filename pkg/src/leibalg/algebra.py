"""Leibniz algebras by structure constants, representations and products.

Conventions used throughout the package:

* structure constants: [e_i, e_j] = sum_k sc[i][j][k] e_k;
* operator matrices act on column vectors, so L(e_i)[k][j] = sc[i][j][k];
* the dual pairing is <e_i, e*_j> = delta_ij and the dual of an operator
  matrix M is the negated transpose -M^T (acting on dual coordinates).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix, ZERO, ONE, rat


class AlgebraError(Exception):
    pass


class DimensionMismatch(AlgebraError):
    pass


class NotLeibniz(AlgebraError):
    pass


class NotLie(AlgebraError):
    pass


class InvalidRepresentation(AlgebraError):
    pass


class TagMismatch(AlgebraError):
    pass


class ConsistencyError(AlgebraError):
    """An internally asserted equivalence failed; indicates a bug."""


@dataclass(frozen=True)
class Violation:
    identity: str
    indices: tuple
    lhs: tuple
    rhs: tuple

    def describe(self) -> str:
        return (f"{self.identity} fails at basis indices {self.indices}: "
                f"lhs={_fmt_vec(self.lhs)} rhs={_fmt_vec(self.rhs)}")


def _fmt_vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


@dataclass(frozen=True)
class CheckReport:
    name: str
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self):
        yield f"{self.name}: {'pass' if self.ok else 'FAIL'}"
        for v in self.violations:
            yield "  " + v.describe()


def _sorted_violations(violations):
    return tuple(sorted(violations, key=lambda v: (v.identity, v.indices)))


def _freeze_cube(cube):
    return tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in cube)


def check_leibniz_cube(sc) -> CheckReport:
    """Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples."""
    n = len(sc)
    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = [sum(sc[j][k][m] * sc[i][m][t] for m in range(n)) for t in range(n)]
                rhs = [sum(sc[i][j][m] * sc[m][k][t] for m in range(n))
                       + sum(sc[i][k][m] * sc[j][m][t] for m in range(n))
                       for t in range(n)]
                if lhs != rhs:
                    violations.append(Violation("leibniz", (i + 1, j + 1, k + 1),
                                                tuple(lhs), tuple(rhs)))
    return CheckReport("leibniz", _sorted_violations(violations))


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    sc: tuple  # cube: sc[i][j][k]
    basis_names: tuple

    @classmethod
    def from_cube(cls, cube, basis_names=None, check=True) -> "LeibnizAlgebra":
        cube = _freeze_cube(cube)
        dim = len(cube)
        if any(len(p) != dim or any(len(r) != dim for r in p) for p in cube):
            raise DimensionMismatch("structure constant cube must be cubical")
        names = tuple(basis_names) if basis_names else tuple(f"e{i+1}" for i in range(dim))
        if len(names) != dim:
            raise DimensionMismatch("basis name count does not match dimension")
        alg = cls(dim, cube, names)
        if check:
            report = check_leibniz_cube(cube)
            if not report.ok:
                raise NotLeibniz(report.violations[0].describe())
        return alg

    @classmethod
    def from_products(cls, dim, products, basis_names=None, check=True) -> "LeibnizAlgebra":
        """products: {(i, j): {k: coeff}} with 0-based indices."""
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                cube[i][j][k] = rat(c)
        return cls.from_cube(cube, basis_names, check=check)

    @classmethod
    def abelian(cls, dim) -> "LeibnizAlgebra":
        return cls.from_cube([[[ZERO] * dim for _ in range(dim)] for _ in range(dim)],
                             check=False)

    def bracket(self, x, y) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket arguments must have the algebra dimension")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in enumerate(self.sc[i][j]):
                    if c != 0:
                        out[k] += xi * yj * c
        return tuple(out)

    def basis_vector(self, i) -> tuple:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def left_mult_basis(self, i) -> Matrix:
        """L(e_i): y -> [e_i, y]."""
        return Matrix.build(self.dim, self.dim, lambda k, j: self.sc[i][j][k])

    def right_mult_basis(self, j) -> Matrix:
        """R(e_j): y -> [y, e_j]."""
        return Matrix.build(self.dim, self.dim, lambda k, i: self.sc[i][j][k])

    def left_mult(self, x) -> Matrix:
        if len(x) != self.dim:
            raise DimensionMismatch("vector length does not match algebra dimension")
        m = Matrix.zero(self.dim)
        for i, xi in enumerate(x):
            if xi != 0:
                m = m + self.left_mult_basis(i).scale(xi)
        return m

    def right_mult(self, x) -> Matrix:
        if len(x) != self.dim:
            raise DimensionMismatch("vector length does not match algebra dimension")
        m = Matrix.zero(self.dim)
        for i, xi in enumerate(x):
            if xi != 0:
                m = m + self.right_mult_basis(i).scale(xi)
        return m

    def lr_mult_basis(self, i) -> Matrix:
        """(L + R)(e_i)."""
        return self.left_mult_basis(i) + self.right_mult_basis(i)

    def is_valid(self) -> bool:
        return check_leibniz_cube(self.sc).ok


def check_leibniz(alg) -> CheckReport:
    sc = alg.sc if isinstance(alg, (LeibnizAlgebra, LieAlgebra)) else _freeze_cube(alg)
    return check_leibniz_cube(sc)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    sc: tuple
    basis_names: tuple

    @classmethod
    def from_cube(cls, cube, basis_names=None, check=True) -> "LieAlgebra":
        leib = LeibnizAlgebra.from_cube(cube, basis_names, check=False)
        lie = cls(leib.dim, leib.sc, leib.basis_names)
        if check:
            n = lie.dim
            for i in range(n):
                for j in range(n):
                    if any(lie.sc[i][j][k] + lie.sc[j][i][k] != 0 for k in range(n)):
                        raise NotLie(f"bracket not antisymmetric at ({i+1},{j+1})")
            rep = check_leibniz_cube(lie.sc)  # Jacobi == left Leibniz for antisymmetric sc
            if not rep.ok:
                raise NotLie("Jacobi identity fails: " + rep.violations[0].describe())
        return lie

    @classmethod
    def from_products(cls, dim, products, basis_names=None) -> "LieAlgebra":
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                cube[i][j][k] += rat(c)
                cube[j][i][k] -= rat(c)
        return cls.from_cube(cube)

    def as_leibniz(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.dim, self.sc, self.basis_names)

    def adjoint_basis(self, i) -> Matrix:
        return Matrix.build(self.dim, self.dim, lambda k, j: self.sc[i][j][k])


@dataclass(frozen=True)
class Representation:
    algebra: LeibnizAlgebra
    module_dim: int
    l_mats: tuple  # one module_dim x module_dim Matrix per basis element
    r_mats: tuple

    def l(self, x) -> Matrix:
        m = Matrix.zero(self.module_dim)
        for i, xi in enumerate(x):
            if xi != 0:
                m = m + self.l_mats[i].scale(xi)
        return m

    def r(self, x) -> Matrix:
        m = Matrix.zero(self.module_dim)
        for i, xi in enumerate(x):
            if xi != 0:
                m = m + self.r_mats[i].scale(xi)
        return m


def regular_representation(alg: LeibnizAlgebra) -> Representation:
    return Representation(alg, alg.dim,
                          tuple(alg.left_mult_basis(i) for i in range(alg.dim)),
                          tuple(alg.right_mult_basis(i) for i in range(alg.dim)))


def check_representation(rep: Representation) -> CheckReport:
    alg = rep.algebra
    n = alg.dim
    violations = []
    for i in range(n):
        for j in range(n):
            lij = rep.l(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)))
            rij = rep.r(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)))
            li, lj = rep.l_mats[i], rep.l_mats[j]
            ri, rj = rep.r_mats[i], rep.r_mats[j]
            checks = [
                ("rep:l[x,y]=[l(x),l(y)]", lij, li @ lj - lj @ li),
                ("rep:r[x,y]=l(x)r(y)-r(y)l(x)", rij, li @ rj - rj @ li),
                ("rep:r(y)l(x)=-r(y)r(x)", rj @ li, (rj @ ri).scale(-1)),
            ]
            for name, lhs, rhs in checks:
                if lhs.entries != rhs.entries:
                    violations.append(Violation(name, (i + 1, j + 1),
                                                lhs.entries, rhs.entries))
    return CheckReport("representation", _sorted_violations(violations))


def dual_representation(rep: Representation) -> Representation:
    """(l, r, V) -> (l*, -l* - r*, V*), with f* the negated transpose."""
    lstar = tuple((-m.transpose()) for m in rep.l_mats)
    rstar = tuple((lm.transpose() + rm.transpose())
                  for lm, rm in zip(rep.l_mats, rep.r_mats))
    return Representation(rep.algebra, rep.module_dim, lstar, rstar)


def semidirect_product(alg: LeibnizAlgebra, rep: Representation,
                       module_names=None) -> LeibnizAlgebra:
    """Leibniz algebra on A (+) V with [x+u, y+v] = [x,y] + l(x)v + r(y)u."""
    if rep.algebra.sc != alg.sc:
        raise InvalidRepresentation("representation belongs to a different algebra")
    report = check_representation(rep)
    if not report.ok:
        raise InvalidRepresentation(report.violations[0].describe())
    n, m = alg.dim, rep.module_dim
    cube = [[[ZERO] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cube[i][j][k] = alg.sc[i][j][k]
    for i in range(n):
        for b in range(m):
            for a in range(m):
                cube[i][n + b][n + a] = rep.l_mats[i].entries[a][b]
                cube[n + b][i][n + a] = rep.r_mats[i].entries[a][b]
    names = tuple(alg.basis_names) + tuple(
        module_names if module_names else (f"v{i+1}" for i in range(m)))
    return LeibnizAlgebra.from_cube(cube, names)


def hemisemidirect_product(lie: LieAlgebra) -> LeibnizAlgebra:
    """Leibniz algebra on g (+) g*: [x+a*, y+b*] = {x,y} + ad*(x)b*."""
    leib = lie.as_leibniz()
    adstar = tuple(-lie.adjoint_basis(i).transpose() for i in range(lie.dim))
    zero = tuple(Matrix.zero(lie.dim) for _ in range(lie.dim))
    rep = Representation(leib, lie.dim, adstar, zero)
    names = tuple(f"{nm}*" for nm in lie.basis_names)
    return semidirect_product(leib, rep, module_names=names)


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LeibnizAlgebra:
    n, m = a.dim, b.dim
    cube = [[[ZERO] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cube[i][j][k] = a.sc[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                cube[n + i][n + j][n + k] = b.sc[i][j][k]
    names = tuple(f"{nm}'" for nm in a.basis_names) + tuple(f"{nm}''" for nm in b.basis_names)
    return LeibnizAlgebra.from_cube(cube, names, check=False)


@dataclass(frozen=True)
class ALeibnizModule:
    """A representation (l, r, V) together with a Leibniz bracket on V."""
    rep: Representation
    vbracket: tuple  # cube on V

    def vbracket_of(self, u, v) -> tuple:
        m = self.rep.module_dim
        out = [ZERO] * m
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                for k, c in enumerate(self.vbracket[i][j]):
                    if c != 0:
                        out[k] += ui * vj * c
        return tuple(out)


def check_a_leibniz(mod: ALeibnizModule) -> CheckReport:
    rep = mod.rep
    alg = rep.algebra
    n, m = alg.dim, rep.module_dim
    violations = list(check_representation(rep).violations)
    vleib = check_leibniz_cube(mod.vbracket)
    for v in vleib.violations:
        violations.append(Violation("module:" + v.identity, v.indices, v.lhs, v.rhs))

    def unit(k):
        return tuple(ONE if t == k else ZERO for t in range(m))

    for i in range(n):
        li, ri = rep.l_mats[i], rep.r_mats[i]
        for a in range(m):
            for b in range(m):
                u, v = unit(a), unit(b)
                lu, lv = li.apply(u), li.apply(v)
                ru, rv = ri.apply(u), ri.apply(v)
                uv = mod.vbracket_of(u, v)
                checks = [
                    ("module:l(x)[u,v]=[l(x)u,v]+[u,l(x)v]",
                     li.apply(uv),
                     _vadd(mod.vbracket_of(lu, v), mod.vbracket_of(u, lv))),
                    ("module:[u,l(x)v]=[r(x)u,v]+l(x)[u,v]",
                     mod.vbracket_of(u, lv),
                     _vadd(mod.vbracket_of(ru, v), li.apply(uv))),
                    ("module:[u,r(x)v]=r(x)[u,v]+[v,r(x)u]",
                     mod.vbracket_of(u, rv),
                     _vadd(ri.apply(uv), mod.vbracket_of(v, ru))),
                ]
                for name, lhs, rhs in checks:
                    if tuple(lhs) != tuple(rhs):
                        violations.append(Violation(name, (i + 1, a + 1, b + 1),
                                                    tuple(lhs), tuple(rhs)))
    return CheckReport("a_leibniz", _sorted_violations(violations))


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def dual_tag(tag: str) -> str:
    return tag[:-1] if tag.endswith("*") else tag + "*"


@dataclass(frozen=True)
class TaggedLinearMap:
    """Linear map with explicit domain/codomain space tags (A, A*, D, ...)."""
    matrix: Matrix
    domain: str
    codomain: str

    def apply(self, vec) -> tuple:
        return self.matrix.apply(vec)

    def compose(self, first: "TaggedLinearMap") -> "TaggedLinearMap":
        """self after first."""
        if first.codomain != self.domain:
            raise TagMismatch(
                f"cannot compose {first.domain}->{first.codomain} with {self.domain}->{self.codomain}")
        return TaggedLinearMap(self.matrix @ first.matrix, first.domain, self.codomain)

    def inverse(self) -> "TaggedLinearMap":
        return TaggedLinearMap(self.matrix.inverse(), self.codomain, self.domain)

    def __add__(self, other):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise TagMismatch("tagged maps with different tags cannot be added")
        return TaggedLinearMap(self.matrix + other.matrix, self.domain, self.codomain)

    def __sub__(self, other):
        return self + TaggedLinearMap(-other.matrix, other.domain, other.codomain)


def check_isomorphism(a: LeibnizAlgebra, b: LeibnizAlgebra,
                      phi: TaggedLinearMap) -> bool:
    """True iff phi is invertible and a homomorphism a -> b on all basis pairs."""
    if a.dim != b.dim or phi.matrix.rows != b.dim or phi.matrix.cols != a.dim:
        raise DimensionMismatch("isomorphism candidate has wrong shape")
    if phi.matrix.rank() != a.dim:
        return False
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = phi.apply(a.bracket(a.basis_vector(i), a.basis_vector(j)))
            rhs = b.bracket(phi.apply(a.basis_vector(i)), phi.apply(a.basis_vector(j)))
            if lhs != rhs:
                return False
    return True
