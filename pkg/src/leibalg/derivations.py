"""Derivations, characteristic ideals and split extensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    AnchoredSubspace,
    LeibnizAlgebra,
    _check_ambient,
    _same,
    center,
    is_ideal,
    is_subalgebra,
    left_multiplication,
    right_multiplication,
    subalgebra,
    verify_leibniz,
)
from .errors import (
    AmbientMismatch,
    DimensionMismatch,
    HomomorphismCheckFailed,
    LeibnizViolation,
    NotAnIdeal,
    NotCentralDerivation,
    NotSplitExtension,
)
from .exactla import Matrix, Subspace, kernel, unit_vector, zero_vector


@dataclass(frozen=True)
class LinearMap:
    """Linear endomorphism of an algebra; column j of ``matrix`` is the image of e_j."""

    algebra: LeibnizAlgebra
    matrix: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.matrix.shape != (n, n):
            raise DimensionMismatch(f"linear map on a {n}-dim algebra needs an {n}x{n} matrix")

    def __call__(self, v: Sequence):
        return self.matrix.apply(v)

    def compose(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.algebra, self.matrix @ other.matrix)

    def commutator(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.algebra, self.matrix @ other.matrix - other.matrix @ self.matrix)

    def __neg__(self) -> LinearMap:
        return LinearMap(self.algebra, self.matrix.scale(-1))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def image(self) -> Subspace:
        return Subspace(self.algebra.dim, self.matrix.columns)

    def vectorize(self):
        return self.matrix.flatten()

    @classmethod
    def zero(cls, g: LeibnizAlgebra) -> LinearMap:
        return cls(g, Matrix.zeros(g.dim, g.dim))

    @classmethod
    def from_images(cls, g: LeibnizAlgebra, images: Sequence[Sequence]) -> LinearMap:
        """Map sending ``e_j`` to ``images[j]``."""
        return cls(g, Matrix.from_columns(images, g.dim))


def L(g: LeibnizAlgebra, a: Sequence) -> LinearMap:
    return LinearMap(g, left_multiplication(g, a))


def R(g: LeibnizAlgebra, a: Sequence) -> LinearMap:
    return LinearMap(g, right_multiplication(g, a))


@dataclass(frozen=True)
class DerivationSpace:
    algebra: LeibnizAlgebra
    space: Subspace  # vectorized matrices in Q^(n*n), row-major
    flavor: str  # "all" or "central"

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple:
        n = self.algebra.dim
        return tuple(LinearMap(self.algebra, Matrix.unflatten(v, n, n)) for v in self.space.basis)

    def contains(self, d: LinearMap) -> bool:
        return self.space.member(d.vectorize())


def _check_map(g: LeibnizAlgebra, d: LinearMap) -> None:
    if not _same(d.algebra, g):
        raise AmbientMismatch("linear map is anchored in a different algebra")


def is_derivation(g: LeibnizAlgebra, d: LinearMap) -> bool:
    """``d[x, y] = [d x, y] + [x, d y]`` on every basis pair."""
    _check_map(g, d)
    n = g.dim
    images = d.matrix.columns
    for i in range(n):
        for j in range(n):
            lhs = d(g.table[i][j])
            rhs = tuple(a + b for a, b in zip(g.product(images[i], unit_vector(n, j)), g.product(unit_vector(n, i), images[j])))
            if lhs != rhs:
                return False
    return True


def _derivation_rows(g: LeibnizAlgebra) -> list[list]:
    """Constraint rows over the unknowns ``D[m][l]`` at index ``m*n + l``.

    Rows are ordered by the basis pair (i, j) row-major, then output coordinate k.
    """
    n = g.dim
    t = g.table
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [0] * (n * n)
                for l_, c in enumerate(t[i][j]):
                    if c:
                        row[k * n + l_] += c
                for m in range(n):
                    c = t[m][j][k]
                    if c:
                        row[m * n + i] -= c
                    c = t[i][m][k]
                    if c:
                        row[m * n + j] -= c
                if any(row):
                    rows.append(row)
    return rows


def derivation_space(g: LeibnizAlgebra) -> DerivationSpace:
    n = g.dim
    space = kernel(Matrix(tuple(_derivation_rows(g)), n * n))
    return DerivationSpace(g, space, "all")


def central_derivation_space(g: LeibnizAlgebra) -> DerivationSpace:
    """Derivations whose image lies in the center ``Z(g) = Z^l ∩ Z^r``."""
    n = g.dim
    proj = center(g, "both").space.quotient_projection()
    rows = _derivation_rows(g)
    for l_ in range(n):
        for prow in proj.rows:
            row = [0] * (n * n)
            for m, c in enumerate(prow):
                if c:
                    row[m * n + l_] = c
            if any(row):
                rows.append(row)
    return DerivationSpace(g, kernel(Matrix(tuple(rows), n * n)), "central")


def _preserves(maps: Sequence[LinearMap], ideal: AnchoredSubspace) -> bool:
    return all(ideal.member(d(b)) for d in maps for b in ideal.basis)


def is_characteristic(g: LeibnizAlgebra, ideal: AnchoredSubspace) -> bool:
    _check_ambient(g, ideal)
    if not is_ideal(g, ideal):
        raise NotAnIdeal()
    return _preserves(derivation_space(g).basis, ideal)


def is_central_characteristic(g: LeibnizAlgebra, ideal: AnchoredSubspace) -> bool:
    _check_ambient(g, ideal)
    if not is_ideal(g, ideal):
        raise NotAnIdeal()
    return _preserves(central_derivation_space(g).basis, ideal)


def is_split_extension(g: LeibnizAlgebra, i_part: AnchoredSubspace, j_part: AnchoredSubspace) -> bool:
    """``g = I + J``, ``I ∩ J = 0``, ``I`` a two-sided ideal and ``J`` a subalgebra."""
    _check_ambient(g, i_part, j_part)
    return (
        i_part.dim + j_part.dim == g.dim
        and (i_part + j_part).is_whole()
        and is_ideal(g, i_part)
        and is_subalgebra(g, j_part)
    )


def _restricted_left(g: LeibnizAlgebra, a: Sequence, i_part: AnchoredSubspace) -> Matrix:
    """``L_a`` restricted to ``I``, in the coordinates of I's stored basis."""
    cols = [i_part.space.coordinates(g.product(a, b)) for b in i_part.basis]
    return Matrix.from_columns(cols, i_part.dim) if cols else Matrix.zeros(0, 0)


def extract_theta(g: LeibnizAlgebra, i_part: AnchoredSubspace, j_part: AnchoredSubspace) -> list[tuple[tuple, LinearMap]]:
    """``a -> L_a|_I`` for each basis vector ``a`` of ``J``.

    Each map is checked to be a derivation of ``I`` and ``theta`` to respect
    brackets: ``L_[a,b]|_I = L_a L_b - L_b L_a`` on ``I``.
    """
    if not is_split_extension(g, i_part, j_part):
        raise NotSplitExtension("g is not a split extension of I by J")
    i_alg = subalgebra(g, i_part, "I")
    theta = []
    for a in j_part.basis:
        d = LinearMap(i_alg, _restricted_left(g, a, i_part))
        if not is_derivation(i_alg, d):
            raise HomomorphismCheckFailed("L_a restricted to I is not a derivation of I")
        theta.append((a, d))
    for a, da in theta:
        for b, db in theta:
            lhs = _restricted_left(g, g.product(a, b), i_part)
            if lhs != da.commutator(db).matrix:
                raise HomomorphismCheckFailed("theta does not respect the bracket on J")
    return theta


def extend_by_central_derivation(k_alg: LeibnizAlgebra, d: LinearMap, name: str | None = None) -> LeibnizAlgebra:
    """``K ⊕ <d>`` with ``[k + αd, k' + βd] = [k, k'] + β d(k) - α d(k')``.

    The new basis vector ``d`` is last.  The result is checked against the
    left Leibniz identity.
    """
    _check_map(k_alg, d)
    if not is_derivation(k_alg, d):
        raise NotCentralDerivation("map is not a derivation")
    z = center(k_alg, "both")
    if not z.space.contains(d.image()):
        raise NotCentralDerivation("derivation image is not contained in the center")
    n = k_alg.dim
    products = {}
    for i in range(n):
        for j in range(n):
            products[(i, j)] = k_alg.table[i][j] + (0,)
        img = d(unit_vector(n, i))
        products[(i, n)] = img + (0,)
        products[(n, i)] = tuple(-c for c in img) + (0,)
    products[(n, n)] = zero_vector(n + 1)
    if name is None and k_alg.name:
        name = f"{k_alg.name}+d"
    ext = LeibnizAlgebra.from_products(n + 1, products, name)
    check = verify_leibniz(ext)
    if not check:
        raise LeibnizViolation("extension bracket violates the Leibniz identity", check.counterexample)
    return ext
