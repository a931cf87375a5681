"""Exact rational linear algebra: matrices, 2- and 3-tensors, leg permutations.

Everything is immutable and built on `fractions.Fraction`, so all equality
tests in the rest of the package are exact (no tolerances anywhere).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


class LinalgError(Exception):
    pass


class ShapeMismatch(LinalgError):
    pass


class Singular(LinalgError):
    pass


def rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _freeze_grid(grid):
    return tuple(tuple(rat(x) for x in row) for row in grid)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of Fraction

    @classmethod
    def from_rows(cls, grid) -> "Matrix":
        grid = _freeze_grid(grid)
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(row) != cols for row in grid):
            raise ShapeMismatch("ragged matrix rows")
        return cls(rows, cols, grid)

    @classmethod
    def zero(cls, rows, cols=None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n) -> "Matrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n))
                               for i in range(n)))

    @classmethod
    def build(cls, rows, cols, fn) -> "Matrix":
        return cls(rows, cols, tuple(tuple(rat(fn(i, j)) for j in range(cols))
                                     for i in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(self.rows, self.cols,
                      tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(self.rows, self.cols,
                      tuple(tuple(c * a for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            orow = out[i]
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(other.entries[k]):
                        if b:
                            orow[j] += a * b
        return Matrix(self.rows, other.cols, tuple(tuple(r) for r in out))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows
                      else tuple(() for _ in range(self.cols)))

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ShapeMismatch("vector length does not match matrix columns")
        return tuple(sum(a * rat(v) for a, v in zip(row, vec))
                     for row in self.entries)

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _echelon(self):
        """Row echelon form (list of lists), pivot columns; first-nonzero pivoting."""
        m = [list(row) for row in self.entries]
        pivots = []
        prow = 0
        for col in range(self.cols):
            pr = next((r for r in range(prow, self.rows) if m[r][col] != 0), None)
            if pr is None:
                continue
            m[prow], m[pr] = m[pr], m[prow]
            inv = ONE / m[prow][col]
            m[prow] = [x * inv for x in m[prow]]
            for r in range(self.rows):
                if r != prow and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[prow])]
            pivots.append(col)
            prow += 1
            if prow == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel(self) -> list:
        """Basis of the right nullspace, as tuples; deterministic order."""
        m, pivots = self._echelon()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for prow, pc in enumerate(pivots):
                v[pc] = -m[prow][fc]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ShapeMismatch("only square matrices are invertible")
        n = self.rows
        aug = Matrix(n, 2 * n, tuple(
            row + tuple(ONE if i == j else ZERO for j in range(n))
            for i, row in enumerate(self.entries)))
        m, pivots = aug._echelon()
        if pivots != list(range(n)):
            raise Singular("matrix is not invertible")
        return Matrix(n, n, tuple(tuple(m[i][n:]) for i in range(n)))

    def det(self) -> Fraction:
        if not self.is_square():
            raise ShapeMismatch("determinant needs a square matrix")
        m = [list(row) for row in self.entries]
        n = self.rows
        d = ONE
        for col in range(n):
            pr = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pr is None:
                return ZERO
            if pr != col:
                m[col], m[pr] = m[pr], m[col]
                d = -d
            d *= m[col][col]
            inv = ONE / m[col][col]
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return d

    @classmethod
    def block_diag(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        n, m = a.rows + b.rows, a.cols + b.cols
        def ent(i, j):
            if i < a.rows and j < a.cols:
                return a.entries[i][j]
            if i >= a.rows and j >= a.cols:
                return b.entries[i - a.rows][j - a.cols]
            return ZERO
        return cls.build(n, m, ent)


def mat_kernel(m: Matrix) -> list:
    return m.kernel()


def mat_inverse(m: Matrix) -> Matrix:
    return m.inverse()


@dataclass(frozen=True)
class TwoTensor:
    """Element of A(x)A: coeff[i][j] is the coefficient of e_i(x)e_j."""
    dim: int
    coeff: tuple

    @classmethod
    def from_grid(cls, grid) -> "TwoTensor":
        grid = _freeze_grid(grid)
        dim = len(grid)
        if any(len(row) != dim for row in grid):
            raise ShapeMismatch("two-tensor grid must be square")
        return cls(dim, grid)

    @classmethod
    def zero(cls, dim) -> "TwoTensor":
        return cls(dim, tuple((ZERO,) * dim for _ in range(dim)))

    @classmethod
    def basis(cls, dim, i, j) -> "TwoTensor":
        return cls.from_grid([[ONE if (a, b) == (i, j) else ZERO
                               for b in range(dim)] for a in range(dim)])

    def __add__(self, other):
        if self.dim != other.dim:
            raise ShapeMismatch("two-tensor dims differ")
        return TwoTensor(self.dim, tuple(tuple(a + b for a, b in zip(ra, rb))
                                         for ra, rb in zip(self.coeff, other.coeff)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TwoTensor(self.dim, tuple(tuple(-a for a in row) for row in self.coeff))

    def scale(self, c) -> "TwoTensor":
        c = rat(c)
        return TwoTensor(self.dim, tuple(tuple(c * a for a in row) for row in self.coeff))

    def swap(self) -> "TwoTensor":
        """sigma(x(x)y) = y(x)x, i.e. grid transpose."""
        return TwoTensor(self.dim, tuple(zip(*self.coeff)))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.coeff for a in row)

    def is_symmetric(self) -> bool:
        return self.coeff == self.swap().coeff

    def is_skew(self) -> bool:
        return (self + self.swap()).is_zero()

    def act_left(self, m: Matrix) -> "TwoTensor":
        """(m (x) id) applied to the tensor."""
        return TwoTensor(self.dim, (m @ Matrix(self.dim, self.dim, self.coeff)).entries)

    def act_right(self, m: Matrix) -> "TwoTensor":
        """(id (x) m) applied to the tensor."""
        g = Matrix(self.dim, self.dim, self.coeff) @ m.transpose()
        return TwoTensor(self.dim, g.entries)

    def vec(self) -> tuple:
        return tuple(a for row in self.coeff for a in row)

    @classmethod
    def from_vec(cls, dim, v) -> "TwoTensor":
        return cls.from_grid([v[i * dim:(i + 1) * dim] for i in range(dim)])


def tensor2_swap(t: TwoTensor) -> TwoTensor:
    return t.swap()


@dataclass(frozen=True)
class Perm3:
    """Permutation of the three legs of a 3-tensor.

    `img` records where each output leg comes from: output leg k carries the
    input leg img[k].
    """
    img: tuple

    def __post_init__(self):
        if sorted(self.img) != [0, 1, 2]:
            raise ShapeMismatch("Perm3 must be a bijection of {0,1,2}")

    def compose(self, other: "Perm3") -> "Perm3":
        """self after other: permute(permute(t, other), self) == permute(t, self.compose(other))."""
        return Perm3(tuple(other.img[self.img[k]] for k in range(3)))

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for k, v in enumerate(self.img):
            inv[v] = k
        return Perm3(tuple(inv))


IDENTITY3 = Perm3((0, 1, 2))
SIGMA13 = Perm3((2, 1, 0))        # x(x)y(x)z -> z(x)y(x)x
CYCLE_LEFT = Perm3((1, 2, 0))     # x(x)y(x)z -> y(x)z(x)x


@dataclass(frozen=True)
class ThreeTensor:
    """Element of A(x)A(x)A: coeff[i][j][k] multiplies e_i(x)e_j(x)e_k."""
    dim: int
    coeff: tuple

    @classmethod
    def from_cube(cls, cube) -> "ThreeTensor":
        cube = tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in cube)
        dim = len(cube)
        if any(len(plane) != dim or any(len(row) != dim for row in plane) for plane in cube):
            raise ShapeMismatch("three-tensor must be cubical")
        return cls(dim, cube)

    @classmethod
    def zero(cls, dim) -> "ThreeTensor":
        return cls(dim, tuple(tuple((ZERO,) * dim for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def build(cls, dim, fn) -> "ThreeTensor":
        return cls(dim, tuple(tuple(tuple(rat(fn(i, j, k)) for k in range(dim))
                                    for j in range(dim)) for i in range(dim)))

    def __add__(self, other):
        if self.dim != other.dim:
            raise ShapeMismatch("three-tensor dims differ")
        return ThreeTensor.build(self.dim, lambda i, j, k:
                                 self.coeff[i][j][k] + other.coeff[i][j][k])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ThreeTensor.build(self.dim, lambda i, j, k: -self.coeff[i][j][k])

    def is_zero(self) -> bool:
        return all(x == 0 for plane in self.coeff for row in plane for x in row)

    def permute(self, p: Perm3) -> "ThreeTensor":
        out = [[[ZERO] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for a in range(self.dim):
            for b in range(self.dim):
                for c, v in enumerate(self.coeff[a][b]):
                    if v != 0:
                        idx = (a, b, c)
                        out[idx[p.img[0]]][idx[p.img[1]]][idx[p.img[2]]] += v
        return ThreeTensor.from_cube(out)

    def act(self, leg: int, m: Matrix) -> "ThreeTensor":
        """Apply m to one leg (0, 1 or 2), identity on the others."""
        n = self.dim
        if m.rows != n or m.cols != n:
            raise ShapeMismatch("operator dim does not match tensor dim")
        out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for a in range(n):
            for b in range(n):
                for c, v in enumerate(self.coeff[a][b]):
                    if v == 0:
                        continue
                    src = (a, b, c)[leg]
                    for t in range(n):
                        f = m.entries[t][src]
                        if f != 0:
                            idx = [a, b, c]
                            idx[leg] = t
                            out[idx[0]][idx[1]][idx[2]] += f * v
        return ThreeTensor.from_cube(out)


def tensor3_permute(t: ThreeTensor, p: Perm3) -> ThreeTensor:
    return t.permute(p)
