"""Ascending chains of ideals and quasi-Noetherian witnesses.

Ideal collections over Q are infinite, so everything here works on
explicit finite chains and finite pools of candidate ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Sequence

from .algebra import (
    AnchoredSubspace,
    LeibnizAlgebra,
    Quotient,
    _check_ambient,
    center,
    derived_series,
    direct_sum,
    ideal_closure,
    is_ideal,
    leibniz_kernel,
    lower_central_series,
    product_space,
    quotient,
    subalgebra,
)
from .errors import NotAnIdeal, NotAscending
from .exactla import unit_vector
from .simple import Verdict, is_simple


@dataclass(frozen=True)
class IdealChain:
    algebra: LeibnizAlgebra
    terms: tuple
    union: AnchoredSubspace

    def __len__(self) -> int:
        return len(self.terms)


def validate_chain(g: LeibnizAlgebra, terms: Sequence[AnchoredSubspace]) -> IdealChain:
    if not terms:
        raise ValueError("a chain needs at least one term")
    _check_ambient(g, *terms)
    for k, t in enumerate(terms):
        if not is_ideal(g, t):
            raise NotAnIdeal(f"chain term {k} is not a two-sided ideal", index=k)
    for k in range(len(terms) - 1):
        if not terms[k + 1].contains(terms[k]):
            raise NotAscending(k)
    union = reduce(lambda a, b: a + b, terms)
    return IdealChain(g, tuple(terms), union)


def _left_holds(chain: IdealChain, series, m: int) -> bool:
    g = chain.algebra
    return product_space(g, series.term(m), chain.union) <= chain.terms[m]


def _right_holds(chain: IdealChain, series, m: int) -> bool:
    g = chain.algebra
    return product_space(g, chain.union, series.term(m)) <= chain.terms[m]


@dataclass(frozen=True)
class ChainWitness:
    """Indices ``m`` with ``[g^(m), U] ⊆ I_m`` (left) and ``[U, g^(m)] ⊆ I_m`` (right).

    Present indices are re-verified when the witness is built.
    """

    chain: IdealChain
    m_left: int | None
    m_right: int | None

    def __post_init__(self):
        series = derived_series(self.chain.algebra)
        for m, holds in ((self.m_left, _left_holds), (self.m_right, _right_holds)):
            if m is not None and not (0 <= m < len(self.chain) and holds(self.chain, series, m)):
                raise ValueError(f"index {m} does not witness the chain condition")

    @property
    def complete(self) -> bool:
        return self.m_left is not None and self.m_right is not None


def quasi_noetherian_witness(chain: IdealChain) -> ChainWitness:
    """Least indices within the chain satisfying the left and right conditions."""
    series = derived_series(chain.algebra)
    idx = range(len(chain))
    m_left = next((m for m in idx if _left_holds(chain, series, m)), None)
    m_right = next((m for m in idx if _right_holds(chain, series, m)), None)
    return ChainWitness(chain, m_left, m_right)


def stabilization_index(chain: IdealChain) -> int | None:
    return next((q for q, t in enumerate(chain.terms) if t == chain.union), None)


def abelian_chain_check(chain: IdealChain) -> bool:
    g = chain.algebra
    return all(product_space(g, t, t).is_zero() for t in chain.terms)


def solvable_k_chain_check(chain: IdealChain, k: int) -> bool:
    """Every term has derived length at most ``k``."""
    g = chain.algebra
    return all(derived_series(g, within=t).term(k).is_zero() for t in chain.terms)


def push_forward(chain: IdealChain, q: Quotient) -> IdealChain:
    """Image of the chain in ``g/I``."""
    return validate_chain(q.algebra, [q.algebra.span(q.projection.apply(b) for b in t.basis) for t in chain.terms])


def direct_sum_chain(c1: IdealChain, c2: IdealChain, total: LeibnizAlgebra | None = None) -> IdealChain:
    """Chain ``J_r = J_r^1 ⊕ J_r^2`` in ``g1 ⊕ g2``; the shorter chain repeats its last term."""
    g1, g2 = c1.algebra, c2.algebra
    total = direct_sum(g1, g2) if total is None else total
    n1, n2 = g1.dim, g2.dim
    z1, z2 = (0,) * n1, (0,) * n2
    terms = []
    for r in range(max(len(c1), len(c2))):
        a = c1.terms[min(r, len(c1) - 1)]
        b = c2.terms[min(r, len(c2) - 1)]
        terms.append(total.span([tuple(v) + z2 for v in a.basis] + [z1 + tuple(v) for v in b.basis]))
    return validate_chain(total, terms)


def _maximal(spaces: Iterable[AnchoredSubspace]) -> list[AnchoredSubspace]:
    uniq: list[AnchoredSubspace] = []
    for s in spaces:
        if s not in uniq:
            uniq.append(s)
    return [s for s in uniq if not any(o != s and o.contains(s) for o in uniq)]


def maximal_products(g: LeibnizAlgebra, ideal: AnchoredSubspace, pool: Sequence[AnchoredSubspace]) -> tuple[list, list]:
    """Inclusion-maximal members of ``{[H, I]}`` and ``{[I, H]}`` for ``H`` in the pool."""
    _check_ambient(g, ideal, *pool)
    for k, h in enumerate(pool):
        if not is_ideal(g, h):
            raise NotAnIdeal(f"pool member {k} is not a two-sided ideal", index=k)
    left = _maximal(product_space(g, h, ideal) for h in pool)
    right = _maximal(product_space(g, ideal, h) for h in pool)
    return left, right


# -- class predicates and the X-by-Y combinator ------------------------------

AlgebraPredicate = Callable[[LeibnizAlgebra], bool]


def is_abelian(g: LeibnizAlgebra) -> bool:
    return g.is_abelian()


def is_nilpotent(g: LeibnizAlgebra) -> bool:
    return lower_central_series(g).reaches_zero


def is_solvable(g: LeibnizAlgebra) -> bool:
    return derived_series(g).reaches_zero


def solvable_of_length(k: int) -> AlgebraPredicate:
    def pred(g: LeibnizAlgebra) -> bool:
        d = derived_series(g).derived_length
        return d is not None and d <= k

    pred.__name__ = f"solvable_{k}"
    return pred


def is_simple_algebra(g: LeibnizAlgebra) -> bool:
    """Certified simple; inconclusive verdicts count as not simple."""
    return is_simple(g).verdict is Verdict.SIMPLE


PREDICATES: dict[str, AlgebraPredicate] = {
    "abelian": is_abelian,
    "nilpotent": is_nilpotent,
    "solvable": is_solvable,
    "simple": is_simple_algebra,
}


def predicate(name: str) -> AlgebraPredicate:
    """Look up a predicate by name; ``solvable-K`` gives derived length at most K."""
    if name in PREDICATES:
        return PREDICATES[name]
    if name.startswith("solvable-"):
        return solvable_of_length(int(name.split("-", 1)[1]))
    raise KeyError(f"unknown class predicate {name!r}")


def is_x_by_y(g: LeibnizAlgebra, pred_x: AlgebraPredicate, pred_y: AlgebraPredicate, pool: Sequence[AnchoredSubspace]) -> AnchoredSubspace | None:
    """First pool ideal ``H`` with ``H`` in class X and ``g/H`` in class Y."""
    _check_ambient(g, *pool)
    for k, h in enumerate(pool):
        if not is_ideal(g, h):
            raise NotAnIdeal(f"pool member {k} is not a two-sided ideal", index=k)
    for h in pool:
        if pred_x(subalgebra(g, h)) and pred_y(quotient(g, h).algebra):
            return h
    return None


def default_pool(g: LeibnizAlgebra) -> list[AnchoredSubspace]:
    """Series terms, centers, Leib(g) and ideal closures of basis vectors, in that order."""
    cands = list(derived_series(g).terms) + list(lower_central_series(g).terms)
    cands += [center(g, side) for side in ("left", "right", "both")]
    cands.append(leibniz_kernel(g))
    cands += [ideal_closure(g, g.span([unit_vector(g.dim, i)])) for i in range(g.dim)]
    pool: list[AnchoredSubspace] = []
    for c in cands:
        if c not in pool and is_ideal(g, c):
            pool.append(c)
    return pool


def is_noetherian_witness_bounded(chain: IdealChain) -> bool:
    """Both witness indices exist and are at most the stabilization index."""
    w = quasi_noetherian_witness(chain)
    q = stabilization_index(chain)
    return w.complete and q is not None and w.m_left <= q and w.m_right <= q

