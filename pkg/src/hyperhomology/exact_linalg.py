"""Exact integer and rational linear algebra on small dense matrices.

Everything is pure Python over ``int`` and ``fractions.Fraction``; no
floating point anywhere.  The Smith normal form drives all lattice-level
operations (integer kernels, image lattices, annihilators, quotient
structure), so the returned kernel and annihilator lattices are saturated
by construction.  Matrices here are desk-scale (tens of rows/columns);
correctness, not asymptotic speed, is the contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Ring


@dataclass(frozen=True, init=False)
class ExactMatrix:
    """Dense rectangular matrix whose entries all lie in a single ring."""

    rows: int
    cols: int
    ring: Ring
    entries: tuple

    def __init__(self, entries, ring: Ring, cols: int | None = None):
        normalized = tuple(tuple(ring.coerce(x) for x in row) for row in entries)
        if normalized:
            width = len(normalized[0])
            if any(len(row) != width for row in normalized):
                raise ValueError("rows have inconsistent lengths")
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with rows")
        else:
            width = cols if cols is not None else 0
        object.__setattr__(self, "rows", len(normalized))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", normalized)

    @classmethod
    def from_rows(cls, rows, ring: Ring, cols: int | None = None) -> "ExactMatrix":
        return cls(rows, ring, cols)

    @classmethod
    def from_columns(cls, columns, ring: Ring, rows: int | None = None) -> "ExactMatrix":
        columns = [list(c) for c in columns]
        if columns:
            height = len(columns[0])
            if any(len(c) != height for c in columns):
                raise ValueError("columns have inconsistent lengths")
            if rows is not None and rows != height:
                raise ValueError("explicit row count disagrees with columns")
        else:
            height = rows if rows is not None else 0
        data = [[columns[j][i] for j in range(len(columns))] for i in range(height)]
        return cls(data, ring, cols=len(columns))

    @classmethod
    def identity(cls, n: int, ring: Ring = Ring.INTEGER) -> "ExactMatrix":
        return cls(
            [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)],
            ring,
            cols=n,
        )

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: Ring) -> "ExactMatrix":
        return cls([[ring.zero] * cols for _ in range(rows)], ring, cols=cols)

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "ExactMatrix":
        data = [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return ExactMatrix(data, self.ring, cols=self.rows)

    def select_columns(self, indices) -> "ExactMatrix":
        return ExactMatrix.from_columns([self.column(j) for j in indices], self.ring, rows=self.rows)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.rows != self.rows or other.ring is not self.ring:
            raise ValueError("shape or ring mismatch")
        data = [list(self.entries[i]) + list(other.entries[i]) for i in range(self.rows)]
        return ExactMatrix(data, self.ring, cols=self.cols + other.cols)

    def to_ring(self, ring: Ring) -> "ExactMatrix":
        if ring is self.ring:
            return self
        return ExactMatrix(self.entries, ring, cols=self.cols)

    def apply(self, vector) -> list:
        """Matrix-vector product."""
        vector = list(vector)
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [
            sum((self.entries[i][j] * vector[j] for j in range(self.cols)), self.ring.zero)
            for i in range(self.rows)
        ]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows or self.ring is not other.ring:
            raise ValueError("shape or ring mismatch")
        data = [
            [
                sum(
                    (self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                    self.ring.zero,
                )
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return ExactMatrix(data, self.ring, cols=other.cols)


class RationalEchelon:
    """Incrementally maintained echelon basis over the rationals.

    ``insert`` reduces a vector against the rows collected so far and keeps
    it when a nonzero pivot remains, so the collected rows always stay
    linearly independent.
    """

    def __init__(self):
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def reduce(self, vector) -> list[Fraction]:
        v = [Fraction(x) for x in vector]
        for pivot, row in zip(self._pivots, self._rows):
            if pivot < len(v) and v[pivot]:
                factor = v[pivot] / row[pivot]
                for k in range(pivot, len(v)):
                    v[k] -= factor * row[k]
        return v

    def insert(self, vector) -> bool:
        v = self.reduce(vector)
        for k, value in enumerate(v):
            if value:
                self._rows.append(v)
                self._pivots.append(k)
                return True
        return False


def _fraction_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with the pivot columns, over Fractions."""
    matrix = [list(map(Fraction, row)) for row in rows]
    pivots: list[int] = []
    r = 0
    cols = len(matrix[0]) if matrix else 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, len(matrix)) if matrix[i][c]), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        factor = matrix[r][c]
        matrix[r] = [x / factor for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c]:
                scale = matrix[i][c]
                matrix[i] = [a - scale * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix, pivots


def image_rank(matrix: ExactMatrix) -> int:
    """Rank over the fraction field, by Gaussian elimination.

    Deliberately independent of the Smith normal form so the two routes can
    be checked against each other.
    """
    _, pivots = _fraction_rref([list(row) for row in matrix.entries])
    return len(pivots)


def solve_rational(matrix: ExactMatrix, rhs) -> list[Fraction] | None:
    """One rational solution of ``matrix @ x = rhs``, or None.

    Free variables are set to zero, so the answer is deterministic; when the
    columns are independent the solution is unique anyway.
    """
    rhs = list(rhs)
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix.entries, rhs)]
    if not augmented:
        return [Fraction(0)] * matrix.cols
    rref, pivots = _fraction_rref(augmented)
    if matrix.cols in pivots:
        return None
    solution = [Fraction(0)] * matrix.cols
    for row, pivot in zip(rref, pivots):
        solution[pivot] = row[-1]
    return solution


@dataclass(frozen=True)
class SnfDecomposition:
    """Unimodular factors ``u @ m @ v = s`` with ``s`` in Smith form.

    The diagonal of ``s`` is nonnegative with each entry dividing the next;
    ``u_inverse`` and ``v_inverse`` are accumulated during the reduction so
    kernel and image lattice bases can be read off exactly.
    """

    u: ExactMatrix
    s: ExactMatrix
    v: ExactMatrix
    u_inverse: ExactMatrix
    v_inverse: ExactMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        """The nonzero diagonal entries (elementary divisors), in order."""
        out = []
        for i in range(min(self.s.rows, self.s.cols)):
            d = self.s.entries[i][i]
            if d == 0:
                break
            out.append(d)
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(matrix: ExactMatrix) -> SnfDecomposition:
    """Diagonalize an integer matrix by unimodular row/column operations.

    The pivot at each step is a nonzero entry of minimal absolute value
    (ties broken by lowest row, then lowest column), which limits
    coefficient growth.  Before the algorithm advances, the pivot is forced
    to divide every entry of the remaining submatrix, so the diagonal comes
    out positive and in divisibility order with no post-processing.
    """
    if matrix.ring is not Ring.INTEGER:
        raise ValueError("Smith normal form requires integer entries")
    r, c = matrix.rows, matrix.cols
    s = [list(row) for row in matrix.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    u_inv = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]
    v_inv = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_swap(a, b):
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]
        for row in u_inv:
            row[a], row[b] = row[b], row[a]

    def row_add(target, source, q):
        # row_target += q * row_source; inverse applied on u_inv columns
        s[target] = [x + q * y for x, y in zip(s[target], s[source])]
        u[target] = [x + q * y for x, y in zip(u[target], u[source])]
        for row in u_inv:
            row[source] -= q * row[target]

    def row_negate(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for row in u_inv:
            row[i] = -row[i]

    def col_swap(a, b):
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]
        v_inv[a], v_inv[b] = v_inv[b], v_inv[a]

    def col_add(target, source, q):
        # col_target += q * col_source; inverse applied on v_inv rows
        for row in s:
            row[target] += q * row[source]
        for row in v:
            row[target] += q * row[source]
        v_inv[source] = [x - q * y for x, y in zip(v_inv[source], v_inv[target])]

    def find_pivot(k):
        best = None
        for i in range(k, r):
            for j in range(k, c):
                value = abs(s[i][j])
                if value and (best is None or value < best[0]):
                    best = (value, i, j)
        return best

    for k in range(min(r, c)):
        while True:
            pivot = find_pivot(k)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != k:
                row_swap(k, pi)
            if pj != k:
                col_swap(k, pj)
            if s[k][k] < 0:
                row_negate(k)
            p = s[k][k]
            dirty = False
            for i in range(k + 1, r):
                if s[i][k]:
                    q = s[i][k] // p
                    if q:
                        row_add(i, k, -q)
                    if s[i][k]:
                        dirty = True
            for j in range(k + 1, c):
                if s[k][j]:
                    q = s[k][j] // p
                    if q:
                        col_add(j, k, -q)
                    if s[k][j]:
                        dirty = True
            if dirty:
                continue
            violation = None
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if s[i][j] % p:
                        violation = i
                        break
                if violation is not None:
                    break
            if violation is None:
                break
            # pull the offending row into row k; the next pass shrinks the pivot
            row_add(k, violation, 1)
        if find_pivot(k) is None:
            break

    result = SnfDecomposition(
        u=ExactMatrix(u, Ring.INTEGER, cols=r),
        s=ExactMatrix(s, Ring.INTEGER, cols=c),
        v=ExactMatrix(v, Ring.INTEGER, cols=c),
        u_inverse=ExactMatrix(u_inv, Ring.INTEGER, cols=r),
        v_inverse=ExactMatrix(v_inv, Ring.INTEGER, cols=c),
    )
    assert (result.u @ matrix) @ result.v == result.s
    return result


def _integer_row_scaled(matrix: ExactMatrix) -> ExactMatrix:
    """Scale each row by a positive integer to clear denominators.

    Row scaling preserves the kernel, which is all this helper is used for.
    """
    if matrix.ring is Ring.INTEGER:
        return matrix
    rows = []
    for row in matrix.entries:
        scale = 1
        for x in row:
            f = Fraction(x)
            scale = scale * f.denominator // _gcd(scale, f.denominator)
        rows.append([int(Fraction(x) * scale) for x in row])
    return ExactMatrix(rows, Ring.INTEGER, cols=matrix.cols)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def kernel_basis(matrix: ExactMatrix, ring: Ring) -> list[list]:
    """Basis of the nullspace (rational) or of the kernel lattice (integer).

    Integer kernels are read off the column change-of-basis factor of the
    Smith normal form, so the returned lattice is saturated: it is a direct
    summand of the ambient lattice.
    """
    if ring is Ring.INTEGER:
        if matrix.ring is not Ring.INTEGER:
            raise ValueError("integer kernel requires an integer matrix")
        decomposition = smith_normal_form(matrix)
        return [decomposition.v.column(j) for j in range(decomposition.rank, matrix.cols)]
    scaled = _integer_row_scaled(matrix)
    decomposition = smith_normal_form(scaled)
    return [
        [Fraction(x) for x in decomposition.v.column(j)]
        for j in range(decomposition.rank, matrix.cols)
    ]


def image_basis(matrix: ExactMatrix, ring: Ring) -> list[list]:
    """Basis of the column space (rational) or of the image lattice (integer).

    Over the rationals this is the greedy independent subset of columns,
    lowest indices first.  Over the integers the basis is read off the Smith
    factors: the nonzero diagonal entries times the matching columns of the
    inverse row transform generate exactly the lattice spanned by the
    columns.
    """
    if ring is Ring.INTEGER:
        if matrix.ring is not Ring.INTEGER:
            raise ValueError("integer image requires an integer matrix")
        decomposition = smith_normal_form(matrix)
        basis = []
        for i, d in enumerate(decomposition.diagonal):
            basis.append([d * x for x in decomposition.u_inverse.column(i)])
        return basis
    echelon = RationalEchelon()
    basis = []
    for j in range(matrix.cols):
        column = [Fraction(x) for x in matrix.column(j)]
        if echelon.insert(column):
            basis.append(column)
    return basis


def solve_integer(matrix: ExactMatrix, rhs) -> list[int] | None:
    """Some integer solution of ``matrix @ x = rhs``, or None when no
    integer solution exists (even if a rational one does)."""
    if matrix.ring is not Ring.INTEGER:
        raise ValueError("integer solving requires an integer matrix")
    rhs = [Ring.INTEGER.coerce(b) for b in rhs]
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side length does not match row count")
    decomposition = smith_normal_form(matrix)
    transformed = decomposition.u.apply(rhs)
    diagonal = decomposition.diagonal
    y = [0] * matrix.cols
    for i in range(matrix.rows):
        if i < len(diagonal):
            if transformed[i] % diagonal[i]:
                return None
            if i < matrix.cols:
                y[i] = transformed[i] // diagonal[i]
        elif transformed[i]:
            return None
    return decomposition.v.apply(y)


def is_direct_summand(matrix: ExactMatrix) -> bool:
    """Whether the lattice spanned by the columns is a direct summand of the
    ambient integer lattice: all elementary divisors are 1."""
    return all(d == 1 for d in smith_normal_form(matrix).diagonal)


def annihilator_basis(generators, ambient_dim: int) -> list[list[int]]:
    """Basis of the integer vectors orthogonal to every generator.

    This is the integer kernel of the matrix whose rows are the generators,
    so the resulting lattice is saturated.  With no generators it is the
    whole ambient lattice.
    """
    rows = [list(g) for g in generators]
    for row in rows:
        if len(row) != ambient_dim:
            raise ValueError("generator length does not match ambient dimension")
    matrix = ExactMatrix.from_rows(rows, Ring.INTEGER, cols=ambient_dim)
    return kernel_basis(matrix, Ring.INTEGER)


@dataclass(frozen=True)
class ModuleStructure:
    """Isomorphism type of a finitely generated abelian group: a free rank
    plus torsion orders in divisibility order."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion orders must divide their successors")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def quotient_structure(matrix: ExactMatrix) -> ModuleStructure:
    """Structure of the ambient integer lattice modulo the column span."""
    decomposition = smith_normal_form(matrix)
    torsion = tuple(d for d in decomposition.diagonal if d > 1)
    return ModuleStructure(matrix.rows - decomposition.rank, torsion)


def lattice_contains(generators, vector, ambient_dim: int) -> bool:
    """Whether ``vector`` lies in the integer span of the generators."""
    vector = list(vector)
    if len(vector) != ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    if not generators:
        return all(x == 0 for x in vector)
    matrix = ExactMatrix.from_columns(generators, Ring.INTEGER, rows=ambient_dim)
    return solve_integer(matrix, vector) is not None


def sublattice_equal(generators_a, generators_b, ambient_dim: int) -> bool:
    """Whether two generating sets span the same integer lattice."""
    return all(
        lattice_contains(generators_b, vector, ambient_dim) for vector in generators_a
    ) and all(lattice_contains(generators_a, vector, ambient_dim) for vector in generators_b)
