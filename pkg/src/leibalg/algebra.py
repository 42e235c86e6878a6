"""Leibniz algebras given by structure constants.

An algebra of dimension ``n`` is a table ``table[i][j]`` holding the
coordinates of ``[e_i, e_j]``.  Basis indices are 0-based in code; the
document format and reports use the labels ``e1 .. en``.

Nothing here assumes the table satisfies a Leibniz identity.  Tables are
cheap to build and :func:`verify_leibniz` is the explicit validation step.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import AmbientMismatch, DimensionMismatch, NotAnIdeal, NotASubalgebra
from .exactla import (
    ZERO,
    Matrix,
    Subspace,
    Vector,
    as_vector,
    is_zero,
    kernel,
    subspace_intersect,
    unit_vector,
    vadd,
    vscale,
    vsub,
    zero_vector,
)


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    table: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise DimensionMismatch("dimension must be non-negative")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise DimensionMismatch(f"structure table must be {n}x{n}")
        table = []
        for row in self.table:
            out = []
            for v in row:
                if len(v) != n:
                    raise DimensionMismatch(f"structure constant vector of length {len(v)}, expected {n}")
                out.append(as_vector(v))
            table.append(tuple(out))
        object.__setattr__(self, "table", tuple(table))

    @classmethod
    def from_products(cls, dim: int, products: Mapping[tuple[int, int], Sequence], name: str | None = None) -> LeibnizAlgebra:
        """Build from 0-based ``{(i, j): coordinate vector}``; missing pairs are zero."""
        z = zero_vector(dim)
        table = [[z] * dim for _ in range(dim)]
        for (i, j), v in products.items():
            table[i][j] = as_vector(v)
        return cls(dim, tuple(tuple(r) for r in table), name)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]], name: str | None = None) -> LeibnizAlgebra:
        """Build from 1-based labels, e.g. ``{(3, 4): {6: 1}}`` for ``[e3, e4] = e6``."""
        products = {}
        for (i, j), combo in brackets.items():
            v = [ZERO] * dim
            for k, c in combo.items():
                v[k - 1] += Fraction(c)
            products[(i - 1, j - 1)] = v
        return cls.from_products(dim, products, name)

    @classmethod
    def abelian(cls, n: int) -> LeibnizAlgebra:
        return cls.from_products(n, {}, f"abelian{n}")

    def product(self, x: Sequence, y: Sequence) -> Vector:
        """Bilinear expansion of ``[x, y]`` on raw coordinate vectors."""
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                c = a * b
                for k, v in enumerate(row[j]):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def element(self, coords: Sequence) -> AlgebraElement:
        return AlgebraElement(self, as_vector(coords))

    def e(self, label: int) -> AlgebraElement:
        """Basis element by its 1-based label."""
        return AlgebraElement(self, unit_vector(self.dim, label - 1))

    @cached_property
    def left_operators(self) -> tuple:
        """``L_{e_i}`` as matrices; column j is ``[e_i, e_j]``."""
        return tuple(Matrix.from_columns(self.table[i], self.dim) for i in range(self.dim))

    @cached_property
    def right_operators(self) -> tuple:
        """``R_{e_i}``; column j is ``[e_j, e_i]``."""
        return tuple(Matrix.from_columns([self.table[j][i] for j in range(self.dim)], self.dim) for i in range(self.dim))

    def is_abelian(self) -> bool:
        return all(is_zero(v) for row in self.table for v in row)

    def is_antisymmetric(self) -> bool:
        n = self.dim
        return all(
            is_zero(self.table[i][i]) and vadd(self.table[i][j], self.table[j][i]) == zero_vector(n)
            for i in range(n)
            for j in range(i, n)
        )

    def whole(self) -> AnchoredSubspace:
        return AnchoredSubspace(self, Subspace.full(self.dim))

    def zero(self) -> AnchoredSubspace:
        return AnchoredSubspace(self, Subspace.zero(self.dim))

    def span(self, vectors: Iterable[Sequence]) -> AnchoredSubspace:
        return AnchoredSubspace(self, Subspace(self.dim, tuple(vectors)))

    def span_labels(self, *labels: int) -> AnchoredSubspace:
        """Subspace spanned by basis elements given by 1-based labels."""
        return self.span(unit_vector(self.dim, k - 1) for k in labels)


def _same(a: LeibnizAlgebra, b: LeibnizAlgebra) -> bool:
    return a is b or a == b


@dataclass(frozen=True)
class AlgebraElement:
    algebra: LeibnizAlgebra
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise DimensionMismatch(f"element has {len(self.coords)} coordinates in a {self.algebra.dim}-dim algebra")

    def _other(self, other: AlgebraElement) -> Vector:
        if not _same(self.algebra, other.algebra):
            raise AmbientMismatch("elements belong to different algebras")
        return other.coords

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, vadd(self.coords, self._other(other)))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, vsub(self.coords, self._other(other)))

    def __rmul__(self, c) -> AlgebraElement:
        return AlgebraElement(self.algebra, vscale(Fraction(c), self.coords))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, vscale(-1, self.coords))

    def is_zero(self) -> bool:
        return is_zero(self.coords)


@dataclass(frozen=True)
class AnchoredSubspace:
    algebra: LeibnizAlgebra
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.algebra.dim:
            raise DimensionMismatch("subspace and algebra dimensions differ")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple:
        return self.space.basis

    def contains(self, other: AnchoredSubspace) -> bool:
        _check_ambient(self.algebra, other)
        return self.space.contains(other.space)

    def __le__(self, other: AnchoredSubspace) -> bool:
        return other.contains(self)

    def __add__(self, other: AnchoredSubspace) -> AnchoredSubspace:
        _check_ambient(self.algebra, other)
        return AnchoredSubspace(self.algebra, self.space + other.space)

    def __and__(self, other: AnchoredSubspace) -> AnchoredSubspace:
        _check_ambient(self.algebra, other)
        return AnchoredSubspace(self.algebra, subspace_intersect(self.space, other.space))

    def member(self, v: Sequence) -> bool:
        return self.space.member(v)

    def is_zero(self) -> bool:
        return self.space.is_zero()

    def is_whole(self) -> bool:
        return self.space.is_full()


def _check_ambient(g: LeibnizAlgebra, *objs) -> None:
    for o in objs:
        if not _same(o.algebra, g):
            raise AmbientMismatch("object is anchored in a different algebra")


def bracket(g: LeibnizAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check_ambient(g, x, y)
    return AlgebraElement(g, g.product(x.coords, y.coords))


# -- identity checks ---------------------------------------------------------


class Identity(str, enum.Enum):
    """Which Leibniz identity to verify.

    LEFT:  [x,[y,z]] = [[x,y],z] + [y,[x,z]]
    RIGHT: [[x,y],z] = [[x,z],y] + [x,[y,z]]
    """

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class LeibnizCheck:
    """Outcome of :func:`verify_leibniz`.  Truthy when the identity holds."""

    ok: bool
    identity: Identity
    mode: str
    counterexample: tuple[int, int, int] | None = None
    fell_back: bool = False
    triples_checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def _left_defect(g: LeibnizAlgebra, i: int, j: int, k: int) -> Vector:
    t = g.table
    lhs = g.product(unit_vector(g.dim, i), t[j][k])
    rhs = vadd(g.product(t[i][j], unit_vector(g.dim, k)), g.product(unit_vector(g.dim, j), t[i][k]))
    return vsub(lhs, rhs)


def _right_defect(g: LeibnizAlgebra, i: int, j: int, k: int) -> Vector:
    t = g.table
    lhs = g.product(t[i][j], unit_vector(g.dim, k))
    rhs = vadd(g.product(t[i][k], unit_vector(g.dim, j)), g.product(unit_vector(g.dim, i), t[j][k]))
    return vsub(lhs, rhs)


def _polarized_squares(g: LeibnizAlgebra) -> list[Vector]:
    n = g.dim
    out = [g.table[i][i] for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        v = vadd(unit_vector(n, i), unit_vector(n, j))
        out.append(g.product(v, v))
    return out


def squares_left_annihilate(g: LeibnizAlgebra) -> bool:
    """True iff ``[[x,x], z] = 0`` for all x, z (checked by polarization)."""
    n = g.dim
    return all(is_zero(g.product(s, unit_vector(n, k))) for s in _polarized_squares(g) for k in range(n))


def squares_right_annihilate(g: LeibnizAlgebra) -> bool:
    """True iff ``[z, [x,x]] = 0`` for all x, z."""
    n = g.dim
    return all(is_zero(g.product(unit_vector(n, k), s)) for s in _polarized_squares(g) for k in range(n))


def verify_leibniz(g: LeibnizAlgebra, mode: str = "full", identity: Identity | str = Identity.LEFT) -> LeibnizCheck:
    """Check a Leibniz identity on all basis triples.

    ``mode="lemma17"`` halves the work when the squares annihilate on the
    side that makes two triples equivalent.  For the left identity, squares
    annihilating from the left make (x,y,z) and (y,x,z) equivalent, so only
    i <= j is scanned.  For the right identity, squares annihilating from
    the right make (x,y,z) and (x,z,y) equivalent, so only j <= k is
    scanned.  If the precondition fails the full scan runs and
    ``fell_back`` is set.

    Counterexample triples are 0-based basis indices.
    """
    identity = Identity(identity)
    if mode not in ("full", "lemma17"):
        raise ValueError(f"unknown mode {mode!r}")
    n = g.dim
    defect = _left_defect if identity is Identity.LEFT else _right_defect
    triples = itertools.product(range(n), repeat=3)
    fell_back = False
    if mode == "lemma17":
        if identity is Identity.LEFT and squares_left_annihilate(g):
            triples = ((i, j, k) for i, j, k in triples if i <= j)
        elif identity is Identity.RIGHT and squares_right_annihilate(g):
            triples = ((i, j, k) for i, j, k in triples if j <= k)
        else:
            fell_back = True
    count = 0
    for i, j, k in triples:
        count += 1
        if not is_zero(defect(g, i, j, k)):
            return LeibnizCheck(False, identity, mode, (i, j, k), fell_back, count)
    return LeibnizCheck(True, identity, mode, None, fell_back, count)


# -- subspaces built from the bracket ----------------------------------------


def product_space(g: LeibnizAlgebra, a: AnchoredSubspace, b: AnchoredSubspace) -> AnchoredSubspace:
    """``[A, B]``, the span of brackets of basis pairs."""
    _check_ambient(g, a, b)
    return g.span(g.product(x, y) for x in a.basis for y in b.basis)


def is_subalgebra(g: LeibnizAlgebra, s: AnchoredSubspace) -> bool:
    _check_ambient(g, s)
    return all(s.member(g.product(x, y)) for x in s.basis for y in s.basis)


def is_ideal(g: LeibnizAlgebra, s: AnchoredSubspace, side: str = "two_sided") -> bool:
    """left: ``[S, g] ⊆ S``; right: ``[g, S] ⊆ S``; two_sided: both."""
    _check_ambient(g, s)
    if side not in ("left", "right", "two_sided"):
        raise ValueError(f"unknown side {side!r}")
    n = g.dim
    for x in s.basis:
        for k in range(n):
            e = unit_vector(n, k)
            if side != "right" and not s.member(g.product(x, e)):
                return False
            if side != "left" and not s.member(g.product(e, x)):
                return False
    return True


def ideal_closure(g: LeibnizAlgebra, s: AnchoredSubspace, side: str = "two_sided") -> AnchoredSubspace:
    _check_ambient(g, s)
    whole = g.whole()
    cur = s
    while True:
        nxt = cur
        if side != "right":
            nxt = nxt + product_space(g, cur, whole)
        if side != "left":
            nxt = nxt + product_space(g, whole, cur)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def subalgebra(g: LeibnizAlgebra, s: AnchoredSubspace, name: str | None = None) -> LeibnizAlgebra:
    """The algebra structure on ``S``, in the coordinates of its stored basis."""
    if not is_subalgebra(g, s):
        raise NotASubalgebra("subspace is not closed under the bracket")
    products = {}
    for r, x in enumerate(s.basis):
        for c, y in enumerate(s.basis):
            products[(r, c)] = s.space.coordinates(g.product(x, y))
    return LeibnizAlgebra.from_products(s.dim, products, name)


class Quotient(NamedTuple):
    algebra: LeibnizAlgebra
    projection: Matrix
    section: Matrix
    ideal: AnchoredSubspace


def quotient(g: LeibnizAlgebra, ideal: AnchoredSubspace, name: str | None = None) -> Quotient:
    """``g / I`` on the complement spanned by the non-pivot basis vectors of ``I``."""
    _check_ambient(g, ideal)
    if not is_ideal(g, ideal, "two_sided"):
        raise NotAnIdeal()
    cc = ideal.space.complement_coords
    n, k = g.dim, len(cc)
    proj = ideal.space.quotient_projection()
    section = Matrix.from_columns([unit_vector(n, c) for c in cc], n) if k else Matrix.zeros(n, 0)
    products = {}
    for s, a in enumerate(cc):
        for t, b in enumerate(cc):
            products[(s, t)] = proj.apply(g.table[a][b])
    q = LeibnizAlgebra.from_products(k, products, name)
    return Quotient(q, proj, section, ideal)


def direct_sum(g1: LeibnizAlgebra, g2: LeibnizAlgebra, name: str | None = None) -> LeibnizAlgebra:
    n1, n2 = g1.dim, g2.dim
    n = n1 + n2
    z1, z2 = zero_vector(n1), zero_vector(n2)
    products = {}
    for i in range(n1):
        for j in range(n1):
            products[(i, j)] = g1.table[i][j] + z2
    for i in range(n2):
        for j in range(n2):
            products[(n1 + i, n1 + j)] = z1 + g2.table[i][j]
    if name is None and g1.name and g2.name:
        name = f"{g1.name}+{g2.name}"
    return LeibnizAlgebra.from_products(n, products, name)


# -- series ------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "derived" or "lower_central"
    terms: tuple
    stabilized: bool = True

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].is_zero()

    @property
    def derived_length(self) -> int | None:
        """First index with a zero term (derived series only)."""
        if self.kind != "derived":
            raise ValueError("derived_length is defined for the derived series")
        return len(self.terms) - 1 if self.reaches_zero else None

    @property
    def nilpotency_class(self) -> int | None:
        """Largest i with gamma_i nonzero, when the series reaches zero."""
        if self.kind != "lower_central":
            raise ValueError("nilpotency_class is defined for the lower central series")
        return len(self.terms) - 1 if self.reaches_zero else None

    def term(self, index: int) -> AnchoredSubspace:
        """Term at ``index``, continuing past stabilization with the last term.

        Derived series are indexed from 0 (``g^(0) = g``), lower central
        series from 1 (``gamma_1 = g``).
        """
        pos = index if self.kind == "derived" else index - 1
        if pos < 0:
            raise IndexError(index)
        return self.terms[min(pos, len(self.terms) - 1)]


def derived_series(g: LeibnizAlgebra, within: AnchoredSubspace | None = None) -> SeriesReport:
    cur = g.whole() if within is None else within
    _check_ambient(g, cur)
    if within is not None and not is_subalgebra(g, within):
        raise NotASubalgebra("derived series requires a subalgebra")
    terms = [cur]
    while True:
        nxt = product_space(g, cur, cur)
        if nxt == cur:
            return SeriesReport("derived", tuple(terms))
        terms.append(nxt)
        cur = nxt


def lower_central_series(g: LeibnizAlgebra) -> SeriesReport:
    """gamma_1 = g, gamma_i = [g, gamma_{i-1}]."""
    whole = g.whole()
    cur = whole
    terms = [cur]
    while True:
        nxt = product_space(g, whole, cur)
        if nxt == cur:
            return SeriesReport("lower_central", tuple(terms))
        terms.append(nxt)
        cur = nxt


def leibniz_kernel(g: LeibnizAlgebra) -> AnchoredSubspace:
    return g.span(_polarized_squares(g))


def liezation(g: LeibnizAlgebra) -> LeibnizAlgebra:
    name = f"{g.name}_Lie" if g.name else None
    lie = quotient(g, leibniz_kernel(g), name).algebra
    assert lie.is_antisymmetric(), "quotient by the Leibniz kernel must be antisymmetric"
    return lie


def _stack(matrices: Iterable[Matrix], ncols: int) -> Matrix:
    rows = [r for m in matrices for r in m.rows]
    return Matrix(tuple(rows), ncols)


def center(g: LeibnizAlgebra, side: str = "both") -> AnchoredSubspace:
    """left: ``{x : [x, g] = 0}``; right: ``{x : [g, x] = 0}``; both: their intersection."""
    n = g.dim
    if side == "left":
        return AnchoredSubspace(g, kernel(_stack(g.right_operators, n)))
    if side == "right":
        return AnchoredSubspace(g, kernel(_stack(g.left_operators, n)))
    if side == "both":
        return AnchoredSubspace(g, kernel(_stack(g.right_operators + g.left_operators, n)))
    raise ValueError(f"unknown side {side!r}")


def right_multiplication(g: LeibnizAlgebra, b: Sequence) -> Matrix:
    """Matrix of ``x -> [x, b]``."""
    n = g.dim
    return Matrix.from_columns([g.product(unit_vector(n, j), b) for j in range(n)], n)


def left_multiplication(g: LeibnizAlgebra, a: Sequence) -> Matrix:
    """Matrix of ``x -> [a, x]``."""
    n = g.dim
    return Matrix.from_columns([g.product(a, unit_vector(n, j)) for j in range(n)], n)


def centralizer(g: LeibnizAlgebra, m: AnchoredSubspace, nsub: AnchoredSubspace) -> AnchoredSubspace:
    """``C_g(M, N) = {a : [a, b] ∈ N for all b ∈ M}``."""
    _check_ambient(g, m, nsub)
    proj = nsub.space.quotient_projection()
    blocks = [proj @ right_multiplication(g, b) for b in m.basis]
    return AnchoredSubspace(g, kernel(_stack(blocks, g.dim)))


@dataclass(frozen=True)
class Classification:
    abelian: bool
    nilpotent: bool
    nilpotency_class: int | None
    solvable: bool
    derived_length: int | None


def classify(g: LeibnizAlgebra) -> Classification:
    lcs = lower_central_series(g)
    ds = derived_series(g)
    c, d = lcs.nilpotency_class, ds.derived_length
    nilpotent, solvable = c is not None, d is not None
    if nilpotent and not solvable:
        raise AssertionError("nilpotent algebra reported non-solvable")
    return Classification(g.is_abelian(), nilpotent, c, solvable, d)


def verify_subideal_chain(g: LeibnizAlgebra, chain: Sequence[AnchoredSubspace]) -> bool:
    """True iff each term is a two-sided ideal of the next and the last term is ``g``."""
    if not chain:
        raise ValueError("chain must be nonempty")
    _check_ambient(g, *chain)
    if not chain[-1].is_whole():
        return False
    for small, big in zip(chain, chain[1:]):
        if not is_subalgebra(g, big):
            raise NotASubalgebra("chain link is not closed under the bracket")
        if not big.contains(small):
            return False
        if not (product_space(g, small, big) <= small and product_space(g, big, small) <= small):
            return False
    return True
