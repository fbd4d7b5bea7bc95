"""Groebner machinery over prime fields.

Multivariate division, Buchberger's algorithm (normal selection strategy
with the coprimality and chain criteria, inter-reduction to the unique
reduced basis), finite footprints of zero-dimensional ideals, ideals
augmented by grid-polynomial products indexed by a minimal complement,
the closed-form reduced basis of I(S; J), and vanishing ideals of
multiplicity conditions computed by incremental evaluation-matrix
elimination.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

import numpy as np

from .field import PrimeField
from .grid import Grid
from .limits import check_enum
from .multiindex import DecreasingSet, Multiindex, dominates
from .ordering import MonomialOrdering, grevlex, grlex
from .polynomial import Polynomial, monomial_hasse_at


class InfiniteFootprintError(ValueError):
    """The ideal is not zero-dimensional, so its footprint is infinite."""


def divides(a: Multiindex, b: Multiindex) -> bool:
    """x^a divides x^b."""
    return dominates(b, a)


def lcm_expo(a: Multiindex, b: Multiindex) -> Multiindex:
    return tuple(max(x, y) for x, y in zip(a, b))


class Ideal:
    """A presentation of an ideal by a finite list of nonzero generators."""

    __slots__ = ("field", "num_vars", "generators")

    def __init__(self, generators: Iterable[Polynomial]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("an ideal presentation needs at least one generator")
        field = gens[0].field
        num_vars = gens[0].num_vars
        for g in gens:
            if g.field != field or g.num_vars != num_vars:
                raise ValueError("generators live in different rings")
            if g.is_zero():
                raise ValueError("zero generators are not allowed")
        self.field = field
        self.num_vars = num_vars
        self.generators = gens

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({list(self.generators)!r})"


class GroebnerBasis:
    """Monic basis elements sorted by leading monomial, plus the ordering."""

    __slots__ = ("elements", "ordering", "reduced")

    def __init__(
        self,
        elements: Iterable[Polynomial],
        ordering: MonomialOrdering,
        reduced: bool = False,
    ):
        elems = tuple(
            sorted(elements, key=lambda g: ordering.key(g.leading_monomial(ordering)))
        )
        if not elems:
            raise ValueError("a Groebner basis needs at least one element")
        for g in elems:
            if g.leading_coefficient(ordering) != 1:
                raise ValueError("basis elements must be monic")
        self.elements = elems
        self.ordering = ordering
        self.reduced = reduced

    @property
    def field(self) -> PrimeField:
        return self.elements[0].field

    @property
    def num_vars(self) -> int:
        return self.elements[0].num_vars

    def leading_monomials(self) -> tuple[Multiindex, ...]:
        return tuple(g.leading_monomial(self.ordering) for g in self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f modulo this basis."""
        _, r = divide(f, self.elements, self.ordering)
        return r

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_trivial(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ordering == self.ordering
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ordering, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({list(self.elements)!r}, reduced={self.reduced})"


class Footprint:
    """The finite staircase of standard monomials of a zero-dimensional ideal."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[Multiindex]):
        self.elements = frozenset(tuple(e) for e in elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, i):
        return tuple(i) in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __eq__(self, other):
        return isinstance(other, Footprint) and other.elements == self.elements

    def __repr__(self):
        return f"Footprint(size={self.size})"


# ----------------------------------------------------------------------
# division and Buchberger


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], ordering: MonomialOrdering
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum q_k d_k + r with no monomial of r
    divisible by any LM(d_k), and LM(q_k d_k) <= LM(f)."""
    field = f.field
    p = field.modulus
    div_data = [(d, d.lm_pair(ordering)) for d in divisors]
    quotients = [dict() for _ in divisors]
    remainder: dict[Multiindex, int] = {}
    work = dict(f.terms)
    while work:
        lm = max(work, key=ordering.key)
        lc = work.pop(lm)
        for idx, (d, (dlm, dlc)) in enumerate(div_data):
            if divides(dlm, lm):
                shift = tuple(a - b for a, b in zip(lm, dlm))
                c = lc * field.inv(dlc) % p
                quotients[idx][shift] = (quotients[idx].get(shift, 0) + c) % p
                for e, a in d.terms.items():
                    if e == dlm:
                        continue
                    t = tuple(x + y for x, y in zip(e, shift))
                    v = (work.get(t, 0) - c * a) % p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[lm] = lc
    qs = [Polynomial(f.field, f.num_vars, q) for q in quotients]
    return qs, Polynomial(f.field, f.num_vars, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, ordering: MonomialOrdering) -> Polynomial:
    flm, flc = f.lm_pair(ordering)
    glm, glc = g.lm_pair(ordering)
    gamma = lcm_expo(flm, glm)
    field = f.field
    sf = f.mul_monomial(
        tuple(a - b for a, b in zip(gamma, flm)), field.inv(flc)
    )
    sg = g.mul_monomial(
        tuple(a - b for a, b in zip(gamma, glm)), field.inv(glc)
    )
    return sf - sg


def _interreduce(
    elements: Sequence[Polynomial], ordering: MonomialOrdering
) -> list[Polynomial]:
    """Minimalize and tail-reduce a basis into the unique reduced form."""
    monic = sorted(
        (g.monic(ordering) for g in elements if not g.is_zero()),
        key=lambda g: ordering.key(g.leading_monomial(ordering)),
    )
    kept: list[Polynomial] = []
    kept_lms: list[Multiindex] = []
    for g in monic:
        lm = g.leading_monomial(ordering)
        if not any(divides(k, lm) for k in kept_lms):
            kept.append(g)
            kept_lms.append(lm)
    reduced = list(kept)
    for i, g in enumerate(reduced):
        others = reduced[:i] + reduced[i + 1 :]
        if others:
            _, reduced[i] = divide(g, others, ordering)
    return reduced


def buchberger(
    generators: Ideal | Iterable[Polynomial], ordering: MonomialOrdering
) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger's algorithm.

    Pairs are processed in normal selection order (smallest lcm first,
    ties by input index) and skipped by the coprimality criterion and the
    chain criterion (some LM_k divides the lcm and both companion pairs
    have already been handled).
    """
    if isinstance(generators, Ideal):
        gens = generators.generators
    else:
        gens = tuple(generators)
        Ideal(gens)
    G = [g.monic(ordering) for g in gens]
    lms = [g.leading_monomial(ordering) for g in G]

    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push_pairs(j: int):
        for i in range(j):
            gamma = lcm_expo(lms[i], lms[j])
            heapq.heappush(heap, (ordering.key(gamma), i, j))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        gamma = lcm_expo(lms[i], lms[j])
        if all(a + b == c for a, b, c in zip(lms[i], lms[j], gamma)):
            continue  # coprime leading monomials
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if divides(lms[k], gamma):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(G[i], G[j], ordering)
        _, r = divide(s, G, ordering)
        if not r.is_zero():
            G.append(r.monic(ordering))
            lms.append(G[-1].leading_monomial(ordering))
            push_pairs(len(G) - 1)
    return GroebnerBasis(_interreduce(G, ordering), ordering, reduced=True)


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """Ideal equality via uniqueness of the reduced basis (same ordering only)."""
    if a.ordering != b.ordering:
        raise ValueError("cannot compare Groebner bases under different orderings")
    ea = a.elements if a.reduced else tuple(_interreduce(a.elements, a.ordering))
    eb = b.elements if b.reduced else tuple(_interreduce(b.elements, b.ordering))
    return {frozenset(g.terms.items()) for g in ea} == {
        frozenset(g.terms.items()) for g in eb
    }


# ----------------------------------------------------------------------
# footprints


def footprint(basis: GroebnerBasis) -> Footprint:
    """Standard monomials of <LM(basis)>; requires a zero-dimensional ideal.

    Zero-dimensionality is pre-checked by scanning for a pure power of
    every variable among the leading monomials; the staircase is then a
    breadth-first walk from the origin.
    """
    lms = basis.leading_monomials()
    m = basis.num_vars
    box = 1
    for k in range(m):
        bound = None
        for lm in lms:
            if all(lm[t] == 0 for t in range(m) if t != k):
                e = lm[k]
                bound = e if bound is None else min(bound, e)
        if bound is None:
            raise InfiniteFootprintError(
                f"no pure power of x{k + 1} among the leading monomials; "
                "the footprint is infinite"
            )
        box *= max(bound, 1)
    check_enum(box, "footprint enumeration")
    origin = (0,) * m
    staircase: set[Multiindex] = set()
    frontier = [origin]
    seen = {origin}
    while frontier:
        i = frontier.pop()
        if any(divides(lm, i) for lm in lms):
            continue
        staircase.add(i)
        for k in range(m):
            nxt = i[:k] + (i[k] + 1,) + i[k + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return Footprint(staircase)


# ----------------------------------------------------------------------
# grid-augmented ideals


def grid_products(grid: Grid, J: DecreasingSet) -> list[Polynomial]:
    """prod_j G_j^{r_j} for r in the minimal complement B_J, sorted by r."""
    if J.num_vars != grid.num_vars:
        raise ValueError("decreasing set arity does not match the grid")
    defining = grid.defining_polys()
    out = []
    for r in J.minimal_complement():
        g = Polynomial.one(grid.field, grid.num_vars)
        for k, rk in enumerate(r):
            if rk:
                g = g * defining[k] ** rk
        out.append(g)
    return out


def augment_ideal(ideal: Ideal, J: DecreasingSet, grid: Grid) -> Ideal:
    """I_J = I + <prod_j G_j^{r_j} : r in B_J>."""
    if ideal.field != grid.field or ideal.num_vars != grid.num_vars:
        raise ValueError("ideal and grid live in different rings")
    return Ideal(list(ideal.generators) + grid_products(grid, J))


def grid_ideal_basis(
    grid: Grid, J: DecreasingSet, ordering: MonomialOrdering | None = None
) -> GroebnerBasis:
    """The closed-form reduced basis {prod_j G_j^{r_j} : r in B_J} of I(S; J).

    Reduced for every monomial ordering; the leading monomial of the
    product at r is x^(r_1 #S_1, ..., r_m #S_m) regardless of the ordering.
    """
    if ordering is None:
        ordering = grlex(grid.num_vars)
    return GroebnerBasis(grid_products(grid, J), ordering, reduced=True)


# ----------------------------------------------------------------------
# vanishing ideals of multiplicity conditions


def _eval_vector(
    field: PrimeField,
    alpha: Multiindex,
    columns: Sequence[tuple[tuple[int, ...], Multiindex]],
) -> np.ndarray:
    out = np.zeros(len(columns), dtype=np.int64)
    for idx, (point, j) in enumerate(columns):
        out[idx] = monomial_hasse_at(field, alpha, j, point)
    return out


def vanishing_ideal(
    field: PrimeField,
    points: Iterable[Sequence[int]],
    J: DecreasingSet,
    ordering: MonomialOrdering | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of I(V; J) = {F : F^(i)(a) = 0 for a in V, i in J}.

    Monomials are scanned in increasing order; each either extends the
    triangular set of independent evaluation vectors (a standard monomial)
    or closes into a basis element with that leading monomial.  The
    evaluation map on the final staircase is full rank by construction;
    a deficiency would be a bug and raises.
    """
    if ordering is None:
        ordering = grevlex(J.num_vars)
    p = field.modulus
    pts = sorted({tuple(c % p for c in pt) for pt in points})
    m = J.num_vars
    if not pts:
        return GroebnerBasis([Polynomial.one(field, m)], ordering, reduced=True)
    for pt in pts:
        if len(pt) != m:
            raise ValueError(f"point {pt} does not have {m} coordinates")
    inner = grlex(m)
    columns = [(pt, j) for pt in pts for j in sorted(J.elements, key=inner.key)]
    ncols = len(columns)
    check_enum(ncols * ncols, "vanishing ideal elimination")

    rows: list[np.ndarray] = []
    combos: list[dict[Multiindex, int]] = []
    pivots: list[int] = []
    std: list[Multiindex] = []
    gens: list[Polynomial] = []
    lms: list[Multiindex] = []

    origin = (0,) * m
    heap = [(ordering.key(origin), origin)]
    seen = {origin}
    while heap:
        _, alpha = heapq.heappop(heap)
        if any(divides(lm, alpha) for lm in lms):
            continue
        v = _eval_vector(field, alpha, columns)
        combo = {alpha: 1}
        for t, piv in enumerate(pivots):
            c = int(v[piv])
            if c:
                v = (v - c * rows[t]) % p
                for e, a in combos[t].items():
                    combo[e] = (combo.get(e, 0) - c * a) % p
        if not v.any():
            gens.append(Polynomial(field, m, combo))
            lms.append(alpha)
            continue
        piv = int(np.nonzero(v)[0][0])
        c = int(v[piv])
        if c != 1:
            inv = field.inv(c)
            v = v * inv % p
            combo = {e: a * inv % p for e, a in combo.items()}
        for t in range(len(rows)):
            ct = int(rows[t][piv])
            if ct:
                rows[t] = (rows[t] - ct * v) % p
                for e, a in combo.items():
                    combos[t][e] = (combos[t].get(e, 0) - ct * a) % p
        rows.append(v)
        combos.append(combo)
        pivots.append(piv)
        std.append(alpha)
        for k in range(m):
            nxt = alpha[:k] + (alpha[k] + 1,) + alpha[k + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (ordering.key(nxt), nxt))
    if len(std) != ncols:
        raise RuntimeError(
            f"evaluation rank {len(std)} != {ncols} on a decreasing set; "
            "this contradicts surjectivity of the evaluation map and is a bug"
        )
    return GroebnerBasis(gens, ordering, reduced=True)
