"""Brute-force enumeration of grid zeros with derivative conditions.

Everything here is exhaustive and guarded by the enumeration cap; it is
the ground truth the bound machinery is checked against, not a fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grid import Grid
from .groebner import Ideal, vanishing_ideal
from .limits import check_enum
from .multiindex import DecreasingSet, check_weights, weighted_ball
from .ordering import MonomialOrdering
from .polynomial import INFINITE, Polynomial


@dataclass(frozen=True)
class ZeroSet:
    """Common zeros a of an ideal with a_i absent from every shifted
    support for i in J, plus per-point weighted multiplicities when a
    single generator and a weight vector were supplied."""

    points: tuple[tuple[int, ...], ...]
    multiplicity_map: dict | None = None

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, a) -> bool:
        return tuple(a) in self.points

    def __iter__(self):
        return iter(self.points)


def zeros_with_multiplicity(
    ideal: Ideal,
    J: DecreasingSet,
    grid: Grid,
    weights: Sequence[int] | None = None,
) -> ZeroSet:
    """V_J(I) over the grid by scanning every point.

    A point counts when every generator has all J-indexed Hasse
    derivatives zero there.  With weights given the ideal must be
    principal and the map of exact weighted multiplicities is attached.
    """
    check_enum(grid.size, "zero enumeration")
    gens = ideal.generators
    if weights is not None:
        weights = check_weights(weights)
        if len(gens) != 1:
            raise ValueError(
                "weighted multiplicities are only defined for a single polynomial"
            )
    points = []
    mults = {} if weights is not None else None
    for a in grid.sorted_points():
        ok = True
        for g in gens:
            if not g.has_multiplicity(a, J):
                ok = False
                break
        if ok:
            points.append(a)
            if mults is not None:
                mults[a] = gens[0].weighted_multiplicity(a, weights)
    return ZeroSet(tuple(points), mults)


def multiplicity_sum(f: Polynomial, w: Sequence[int], grid: Grid):
    """sum over the grid of the weighted multiplicity of f; the left side
    of the weighted Schwartz-Zippel inequality."""
    if f.is_zero():
        raise ValueError("the zero polynomial has infinite multiplicity everywhere")
    w = check_weights(w)
    check_enum(grid.size, "multiplicity sum")
    return sum(f.weighted_multiplicity(a, w) for a in grid.points())


def sz_sharp_construction(
    grid: Grid, w: Sequence[int], i: Sequence[int], splits: Sequence[Sequence[int]]
) -> Polynomial:
    """A polynomial attaining equality in the weighted Schwartz-Zippel
    bound: prod_j prod_k (x_j - a_{j,k})^{r_{j,k}} where the nodes a_{j,*}
    exhaust S_j and the r_{j,*} sum to i_j.

    splits[j] lists the exponents r_{j,k} in the order of the grid's j-th
    coordinate set; zeros are allowed.
    """
    w = check_weights(w)
    m = grid.num_vars
    if len(w) != m:
        raise ValueError("weights arity does not match the grid")
    if len(i) != m or len(splits) != m:
        raise ValueError("exponent vector and splits must match the grid arity")
    f = Polynomial.one(grid.field, m)
    for j in range(m):
        nodes = grid.coordinate_sets[j]
        exps = tuple(splits[j])
        if len(exps) != len(nodes):
            raise ValueError(
                f"splits[{j}] must assign one exponent per element of S_{j}"
            )
        if any(e < 0 for e in exps):
            raise ValueError("split exponents must be natural numbers")
        if sum(exps) != i[j]:
            raise ValueError(f"splits[{j}] must sum to i_{j} = {i[j]}")
        for a, e in zip(nodes, exps):
            if e:
                lin = Polynomial.variable(grid.field, m, j) - Polynomial.constant(
                    grid.field, m, a
                )
                f = f * lin**e
    return f


def equality_case_builder(
    V: Sequence[Sequence[int]],
    J: DecreasingSet,
    grid: Grid,
    ordering: MonomialOrdering | None = None,
) -> Ideal:
    """The largest ideal with V_J = V: the vanishing ideal I(V; J).

    The footprint bound is tight for it, so it realizes the equality case
    of the bound for any target zero set inside the grid.
    """
    pts = []
    seen = set()
    for a in V:
        a = tuple(grid.field.normalize(c) for c in a)
        if a not in grid:
            raise ValueError(f"point {a} is not a grid point")
        if a not in seen:
            seen.add(a)
            pts.append(a)
    basis = vanishing_ideal(grid.field, pts, J, ordering)
    return Ideal(basis.elements)


__all__ = [
    "ZeroSet",
    "zeros_with_multiplicity",
    "multiplicity_sum",
    "sz_sharp_construction",
    "equality_case_builder",
    "INFINITE",
    "weighted_ball",
]
