"""Simplicity of Leibniz algebras.

``g`` is simple when its Leibniz kernel is nonzero, proper, and the only
nontrivial two-sided ideal.  The classifier is three-valued: NOT_SIMPLE
comes with a witness ideal, SIMPLE is only returned with a certificate,
and everything else is INCONCLUSIVE.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    AnchoredSubspace,
    LeibnizAlgebra,
    _check_ambient,
    center,
    derived_series,
    ideal_closure,
    is_ideal,
    leibniz_kernel,
)
from .errors import NotAnIdeal
from .exactla import Matrix, Subspace, charpoly, kernel, solve_affine, unit_vector, vadd

NORTON_ATTEMPTS = 16
ENVELOPE_MAX_DIM = 12
ROOT_SEARCH_BOUND = 10**8


def module_splitting_complement(g: LeibnizAlgebra, ideal: AnchoredSubspace) -> AnchoredSubspace | None:
    """An ideal ``W`` with ``g = I ⊕ W``, or None when the extension does not split.

    Sections are ``s0 + tau`` with ``s0`` the non-pivot section of ``I`` and
    ``tau: g/I -> I`` unknown.  Requiring the section to intertwine every
    ``L_{e_i}`` and ``R_{e_i}`` with the induced action on ``g/I`` is linear
    in the entries of ``tau``.
    """
    _check_ambient(g, ideal)
    if not is_ideal(g, ideal):
        raise NotAnIdeal()
    n = g.dim
    ib = ideal.basis
    m = len(ib)
    cc = ideal.space.complement_coords
    k = len(cc)
    if k == 0:
        return g.zero()
    if m == 0:
        return g.whole()
    proj = ideal.space.quotient_projection()
    s0 = [unit_vector(n, c) for c in cc]
    # unknown x[t*m + r]: coefficient of basis vector r of I in tau(f_t)
    rows: list[list] = []
    rhs: list = []
    for op in g.left_operators + g.right_operators:
        op_ib = [op.apply(b) for b in ib]
        induced = [proj.apply(op.apply(s)) for s in s0]  # induced[t][u]: f_u coefficient of A f_t
        for t in range(k):
            target = op.apply(s0[t])
            want = [0] * n
            for u in range(k):
                if induced[t][u]:
                    want = vadd(want, tuple(induced[t][u] * x for x in s0[u]))
            for coord in range(n):
                row = [0] * (k * m)
                for r in range(m):
                    row[t * m + r] += op_ib[r][coord]
                    for u in range(k):
                        if induced[t][u]:
                            row[u * m + r] -= induced[t][u] * ib[r][coord]
                rows.append(row)
                rhs.append(want[coord] - target[coord])
    sol = solve_affine(Matrix(tuple(rows), k * m), rhs)
    if not sol.feasible:
        return None
    x = sol.particular
    sections = []
    for t in range(k):
        v = s0[t]
        for r in range(m):
            if x[t * m + r]:
                v = vadd(v, tuple(x[t * m + r] * c for c in ib[r]))
        sections.append(v)
    w = g.span(sections)
    assert w.dim == k and (w & ideal).is_zero() and is_ideal(g, w), "complement failed verification"
    return w


# -- irreducibility of the induced bimodule ----------------------------------


def _spin(v: Sequence, ops: Sequence[Matrix], n: int) -> Subspace:
    """Smallest subspace containing ``v`` and invariant under ``ops``."""
    space = Subspace(n, (tuple(v),))
    queue = list(space.basis)
    while queue:
        u = queue.pop()
        for op in ops:
            w = op.apply(u)
            if not space.member(w):
                space = Subspace(n, space.basis + (w,))
                queue.append(w)
    return space


def _random_element(ops: Sequence[Matrix], n: int, rng: random.Random) -> Matrix:
    """Random element of the unital algebra generated by ``ops``."""
    theta = Matrix.identity(n).scale(rng.randint(-2, 2))
    for _ in range(rng.randint(1, 3)):
        word = Matrix.identity(n)
        for _ in range(rng.randint(1, 3)):
            word = word @ rng.choice(ops)
        theta = theta + word.scale(rng.choice((-2, -1, 1, 2)))
    return theta


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small = [d for d in range(1, math.isqrt(k) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """Rational roots of ``c0 x^n + ... + cn``, by the rational root theorem.

    Returns an empty list when the cleared coefficients are too large to
    enumerate divisors of, so callers must treat the result as a subset.
    """
    coeffs = list(coeffs)
    roots = []
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        if 0 not in roots:
            roots.append(Fraction(0))
    if len(coeffs) <= 1:
        return roots
    den = math.lcm(*(Fraction(c).denominator for c in coeffs))
    ints = [int(Fraction(c) * den) for c in coeffs]
    lead, const = ints[0], ints[-1]
    if abs(lead) > ROOT_SEARCH_BOUND or abs(const) > ROOT_SEARCH_BOUND:
        return roots
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and _horner(ints, cand) == 0:
                    roots.append(cand)
    return roots


def _horner(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def envelope_dim(ops: Sequence[Matrix], n: int, cap: int | None = None) -> int:
    """Dimension of the unital matrix algebra generated by ``ops``."""
    ident = Matrix.identity(n)
    space = Subspace(n * n, (ident.flatten(),))
    queue = [ident]
    cap = n * n if cap is None else cap
    while queue and space.dim < cap:
        w = queue.pop()
        for op in ops:
            prod = op @ w
            flat = prod.flatten()
            if not space.member(flat):
                space = Subspace(n * n, space.basis + (flat,))
                queue.append(prod)
    return space.dim


class Irreducibility(enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


def _norton_step(theta: Matrix, ops, dual_ops, n: int):
    """Norton's criterion for one singular ``theta``; None when it says nothing."""
    null = kernel(theta)
    if null.is_zero():
        return None
    for v in null.basis:
        sub = _spin(v, ops, n)
        if sub.dim < n:
            return Irreducibility.REDUCIBLE, sub
    for w in kernel(theta.transpose()).basis:
        dual = _spin(w, dual_ops, n)
        if dual.dim < n:
            return Irreducibility.REDUCIBLE, dual.annihilator()
    if null.dim == 1:
        return Irreducibility.IRREDUCIBLE, None
    return None


def module_irreducibility(ops: Sequence[Matrix], n: int, seed: int = 0, attempts: int = NORTON_ATTEMPTS) -> tuple[Irreducibility, Subspace | None]:
    """Decide whether ``Q^n`` acted on by ``ops`` has a proper invariant subspace.

    REDUCIBLE comes with a proper nonzero invariant subspace.  IRREDUCIBLE
    is certified either by the operators generating all of ``End(Q^n)``
    (Burnside) or by Norton's criterion: some ``theta - λ`` in the
    enveloping algebra, with ``λ`` a rational eigenvalue, has a
    one-dimensional null space whose vectors spin up the module and whose
    dual null vectors spin up the dual.  Otherwise UNKNOWN.
    """
    if n <= 1:
        return Irreducibility.IRREDUCIBLE, None
    ops = [op for op in ops if not op.is_zero()]
    for i in range(n):
        sub = _spin(unit_vector(n, i), ops, n)
        if sub.dim < n:
            return Irreducibility.REDUCIBLE, sub
    if not ops:
        return Irreducibility.REDUCIBLE, Subspace(n, (unit_vector(n, 0),))
    if n <= ENVELOPE_MAX_DIM and envelope_dim(ops, n) == n * n:
        return Irreducibility.IRREDUCIBLE, None
    dual_ops = [op.transpose() for op in ops]
    ident = Matrix.identity(n)
    rng = random.Random(seed)
    for _ in range(attempts):
        theta = _random_element(ops, n, rng)
        for lam in rational_roots(charpoly(theta)):
            found = _norton_step(theta - ident.scale(lam), ops, dual_ops, n)
            if found is not None:
                return found
    return Irreducibility.UNKNOWN, None


# -- the classifier ----------------------------------------------------------


class Verdict(str, enum.Enum):
    SIMPLE = "simple"
    NOT_SIMPLE = "not_simple"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SimplicityResult:
    verdict: Verdict
    witness: AnchoredSubspace | None
    reason: str

    def __bool__(self) -> bool:
        return self.verdict is Verdict.SIMPLE


def _candidates(g: LeibnizAlgebra, leib: AnchoredSubspace) -> list[AnchoredSubspace]:
    n = g.dim
    out = [g.span([unit_vector(n, i)]) for i in range(n)]
    out += [g.span([vadd(unit_vector(n, i), unit_vector(n, j))]) for i, j in itertools.combinations(range(n), 2)]
    out += [g.span([v]) for v in leib.basis]
    for side in ("left", "right", "both"):
        z = center(g, side)
        out.append(z)
        out += [g.span([v]) for v in z.basis]
    d1 = derived_series(g).term(1)
    out.append(d1)
    out += [g.span([v]) for v in d1.basis]
    return out


def find_ideal_witness(g: LeibnizAlgebra, leib: AnchoredSubspace | None = None) -> AnchoredSubspace | None:
    """A proper nonzero two-sided ideal other than Leib(g) from the candidate closures.

    Witnesses not contained in Leib(g) are preferred; among equals the first
    candidate in scan order wins.
    """
    leib = leibniz_kernel(g) if leib is None else leib
    n = g.dim
    first = None
    seen = set()
    for cand in _candidates(g, leib):
        if cand.is_zero():
            continue
        k = ideal_closure(g, cand)
        if k.space in seen:
            continue
        seen.add(k.space)
        if 0 < k.dim < n and k != leib:
            if not leib.contains(k):
                return k
            if first is None:
                first = k
    return first


def is_simple(g: LeibnizAlgebra, seed: int = 0) -> SimplicityResult:
    n = g.dim
    leib = leibniz_kernel(g)
    if leib.is_zero():
        return SimplicityResult(Verdict.NOT_SIMPLE, None, "Leibniz kernel is zero")
    if leib.dim == n:
        return SimplicityResult(Verdict.NOT_SIMPLE, None, "Leibniz kernel is the whole algebra")
    witness = find_ideal_witness(g, leib)
    if witness is not None:
        return SimplicityResult(Verdict.NOT_SIMPLE, witness, "candidate closure is a proper ideal other than Leib(g)")
    comp = module_splitting_complement(g, leib)
    if comp is not None:
        return SimplicityResult(Verdict.NOT_SIMPLE, comp, "Leib(g) has an ideal complement")
    proj = leib.space.quotient_projection()
    k = n - leib.dim
    cc = leib.space.complement_coords
    section = Matrix.from_columns([unit_vector(n, c) for c in cc], n)
    ops = g.left_operators + g.right_operators
    top, sub = module_irreducibility([proj @ op @ section for op in ops], k, seed)
    if top is Irreducibility.REDUCIBLE:
        lifted = g.span([section.apply(v) for v in sub.basis] + list(leib.basis))
        assert is_ideal(g, lifted)
        return SimplicityResult(Verdict.NOT_SIMPLE, lifted, "g/Leib(g) has a proper sub-bimodule")
    # An ideal K other than 0, Leib, g meets Leib in 0 or Leib.  With both
    # layers irreducible, K ⊇ Leib forces K = Leib or g, and K ∩ Leib = 0
    # makes K an ideal complement, which was ruled out above.
    inner = Matrix(leib.basis, n).transpose()
    bottom, sub = module_irreducibility(
        [Matrix.from_columns([leib.space.coordinates(op.apply(b)) for b in leib.basis], leib.dim) for op in ops],
        leib.dim,
        seed,
    )
    if bottom is Irreducibility.REDUCIBLE:
        witness = g.span(inner.apply(v) for v in sub.basis)
        assert is_ideal(g, witness)
        return SimplicityResult(Verdict.NOT_SIMPLE, witness, "Leib(g) contains a smaller nonzero ideal")
    if top is Irreducibility.IRREDUCIBLE and bottom is Irreducibility.IRREDUCIBLE:
        return SimplicityResult(Verdict.SIMPLE, None, "no ideal complement to Leib(g); Leib(g) and g/Leib(g) irreducible")
    return SimplicityResult(Verdict.INCONCLUSIVE, None, f"irreducibility undecided after {NORTON_ATTEMPTS} attempts")
