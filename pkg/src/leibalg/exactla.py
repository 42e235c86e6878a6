"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`.  :class:`Matrix` is an
immutable row-major grid and :class:`Subspace` stores its basis in reduced
row echelon form, so two subspaces are equal exactly when their stored bases
are equal.

    >>> a = span([(1, 0), (1, 1)], 2)
    >>> a.dim
    2
    >>> kernel(Matrix.from_rows([[1, 2]])).basis
    ((Fraction(-2, 1), Fraction(1, 1)),)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_vector(values: Iterable) -> Vector:
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def vadd(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b) if x and y), ZERO)


def _row_reduce(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination.  Returns (nonzero RREF rows, pivot columns)."""
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        p = next((k for k in range(r, len(work)) if work[k][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        inv = ONE / prow[c]
        if inv != ONE:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [(j, prow[j]) for j in range(c, ncols) if prow[j]]
        for k, row in enumerate(work):
            if k == r:
                continue
            f = row[c]
            if f:
                for j, v in nz:
                    row[j] -= f * v
        pivots.append(c)
        r += 1
    return work[:r], pivots


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix.  ``ncols`` is kept so empty matrices have a shape."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        rows = tuple(as_vector(r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise DimensionMismatch(f"row of length {len(r)} in a matrix with {self.ncols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer the column count of an empty matrix")
            ncols = len(rows[0])
        return cls(tuple(rows), ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> Matrix:
        return cls(tuple(tuple(col[i] for col in columns) for i in range(nrows)), len(columns))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls(tuple(zero_vector(ncols) for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(tuple(unit_vector(n, i) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self) -> tuple:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> Matrix:
        return Matrix(self.columns, self.nrows)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.nrows}x{self.ncols} matrix")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns
        return Matrix(tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(tuple(vadd(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(tuple(vsub(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def scale(self, c) -> Matrix:
        c = Fraction(c)
        return Matrix(tuple(vscale(c, r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def flatten(self) -> Vector:
        """Row-major vectorization."""
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def unflatten(cls, v: Sequence, nrows: int, ncols: int) -> Matrix:
        if len(v) != nrows * ncols:
            raise DimensionMismatch(f"{len(v)} entries cannot fill a {nrows}x{ncols} matrix")
        return cls(tuple(tuple(v[i * ncols:(i + 1) * ncols]) for i in range(nrows)), ncols)

    def vstack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols:
            raise DimensionMismatch("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.ncols)


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form; zero rows are kept at the bottom so the shape is unchanged."""
    rows, _ = _row_reduce(m.rows, m.ncols)
    rows = [tuple(r) for r in rows]
    rows += [zero_vector(m.ncols)] * (m.nrows - len(rows))
    return Matrix(tuple(rows), m.ncols)


def rank(m: Matrix) -> int:
    return len(_row_reduce(m.rows, m.ncols)[1])


def kernel(m: Matrix) -> Subspace:
    """The right null space ``{v : m v = 0}``."""
    rows, pivots = _row_reduce(m.rows, m.ncols)
    pivset = set(pivots)
    vectors = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [ZERO] * m.ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        vectors.append(v)
    return Subspace(m.ncols, tuple(vectors))


def charpoly(m: Matrix) -> Vector:
    """Coefficients ``(1, c1, ..., cn)`` of ``det(xI - m)``, by Faddeev-LeVerrier."""
    n = m.nrows
    if m.ncols != n:
        raise DimensionMismatch("characteristic polynomial needs a square matrix")
    coeffs = [ONE]
    acc = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        acc = m @ (acc + ident.scale(coeffs[-1]))
        coeffs.append(-sum((acc.rows[i][i] for i in range(n)), ZERO) / k)
    return tuple(coeffs)


class AffineSolution(NamedTuple):
    """Solution set ``particular + kernel``; ``particular`` is None when infeasible."""

    particular: Vector | None
    kernel: Subspace

    @property
    def feasible(self) -> bool:
        return self.particular is not None


def solve_affine(m: Matrix, rhs: Sequence) -> AffineSolution:
    if len(rhs) != m.nrows:
        raise DimensionMismatch(f"right-hand side of length {len(rhs)} for {m.nrows} equations")
    rhs = as_vector(rhs)
    n = m.ncols
    rows, pivots = _row_reduce((r + (b,) for r, b in zip(m.rows, rhs)), n + 1)
    hom = kernel(m)
    if pivots and pivots[-1] == n:
        return AffineSolution(None, hom)
    x = [ZERO] * n
    for r, p in enumerate(pivots):
        x[p] = rows[r][n]
    return AffineSolution(tuple(x), hom)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n, basis canonicalized to RREF on construction."""

    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        n = self.ambient_dim
        for v in self.basis:
            if len(v) != n:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows, pivots = _row_reduce((as_vector(v) for v in self.basis), n)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def complement_coords(self) -> tuple:
        """Non-pivot coordinates; the standard basis vectors there span a complement."""
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def _check(self, n: int):
        if n != self.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {n} differ")

    def reduce(self, v: Sequence) -> Vector:
        """Normal form of ``v`` modulo this subspace (zero at every pivot)."""
        self._check(len(v))
        w = list(as_vector(v))
        for b, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if b[j]:
                        w[j] -= c * b[j]
        return tuple(w)

    def member(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of a member ``v`` in the stored basis."""
        if not self.member(v):
            raise ValueError("vector is not in the subspace")
        return tuple(Fraction(v[p]) for p in self.pivots)

    def combine(self, coords: Sequence) -> Vector:
        out = zero_vector(self.ambient_dim)
        for c, b in zip(coords, self.basis):
            if c:
                out = vadd(out, vscale(c, b))
        return out

    def contains(self, other: Subspace) -> bool:
        self._check(other.ambient_dim)
        return all(self.member(v) for v in other.basis)

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def quotient_projection(self) -> Matrix:
        """Matrix sending v to the complement coordinates of its normal form."""
        cc = self.complement_coords
        n = self.ambient_dim
        cols = []
        for j in range(n):
            r = self.reduce(unit_vector(n, j))
            cols.append(tuple(r[i] for i in cc))
        return Matrix.from_columns(cols, len(cc)) if cols else Matrix.zeros(len(cc), 0)

    def annihilator(self) -> Subspace:
        """``{x : <b, x> = 0 for every basis vector b}``."""
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return kernel(Matrix(self.basis, self.ambient_dim))


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, tuple(vectors))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check(b.ambient_dim)
    return Subspace(a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce [[a, a], [b, 0]]; rows whose left half vanishes span the intersection."""
    a._check(b.ambient_dim)
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    z = zero_vector(n)
    rows, pivots = _row_reduce([tuple(v) + tuple(v) for v in a.basis] + [tuple(v) + z for v in b.basis], 2 * n)
    return Subspace(n, tuple(tuple(r[n:]) for r, p in zip(rows, pivots) if p >= n))


def contains(a: Subspace, b: Subspace) -> bool:
    return a.contains(b)


def member(a: Subspace, v: Sequence) -> bool:
    return a.member(v)
