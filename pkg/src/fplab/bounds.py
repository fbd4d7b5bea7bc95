"""Upper bounds on grid zeros with prescribed derivative conditions.

Three mechanisms, each packaged as a BoundReport:

* footprint_bound runs Buchberger on the grid-augmented ideal and counts
  standard monomials: #V_J(I) <= floor(#Delta(I_J) / #J).
* demillo_lipton_general_bound (and lm_footprint_bound for several
  leading monomials) uses only leading-monomial data: every j in J_S
  dominating a known LM leaves the staircase, so
  #V_J <= floor((#J_S - removed) / #J).  This is the estimate behind the
  comparison tables; it quantifies over all polynomials with that LM.
* schwartz_zippel_weighted bounds the total weighted multiplicity by
  #S * sum_j i_j w_j / #S_j for the lex leading monomial i, yielding a
  count bound floor(RHS / r) for a multiplicity threshold r.

A bound of at least #S carries no information beyond the trivial one and
is reported as NO_INFORMATION (None), rendered as '-' in tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Iterable, Sequence

from .grid import Grid
from .groebner import (
    GroebnerBasis,
    Ideal,
    augment_ideal,
    buchberger,
    footprint,
)
from .limits import check_enum
from .multiindex import (
    DecreasingSet,
    Multiindex,
    check_multiindex,
    check_weights,
    coordinate_box,
    dominates,
    grid_expand,
    in_grid_expansion,
    standard_ball,
    weighted_ball,
    weighted_order,
)
from .ordering import MonomialOrdering, grevlex, grlex, lex
from .polynomial import Polynomial

NO_INFORMATION = None


@dataclass(frozen=True)
class BoundReport:
    bound_value: int | None
    method: str
    witness_data: dict = dataclass_field(default_factory=dict)

    def informative(self) -> bool:
        return self.bound_value is not NO_INFORMATION


def _capped(raw: int, grid_size: int) -> int | None:
    return raw if raw < grid_size else NO_INFORMATION


# ----------------------------------------------------------------------
# footprint bounds (Buchberger route)


def footprint_bound(
    ideal: Ideal,
    J: DecreasingSet,
    grid: Grid,
    ordering: MonomialOrdering | None = None,
) -> BoundReport:
    """#V_J(I) <= floor(#Delta(I_J) / #J) for the augmented ideal I_J."""
    if ordering is None:
        ordering = grevlex(grid.num_vars)
    basis = buchberger(augment_ideal(ideal, J, grid), ordering)
    delta = footprint(basis)
    raw = delta.size // len(J)
    return BoundReport(
        _capped(raw, grid.size),
        "footprint",
        {
            "raw_bound": raw,
            "footprint_size": delta.size,
            "j_size": len(J),
            "js_size": grid.size * len(J),
            "grid_size": grid.size,
            "leading_monomials": list(basis.leading_monomials()),
        },
    )


def classical_footprint_bound(ideal, grid, ordering=None) -> BoundReport:
    """Plain zeros (no derivative conditions): J = {0}."""
    return footprint_bound(ideal, standard_ball(grid.num_vars, 1), grid, ordering)


def multiplicity_footprint_bound(ideal, r: int, grid, ordering=None) -> BoundReport:
    """Zeros of total multiplicity at least r."""
    return footprint_bound(ideal, standard_ball(grid.num_vars, r), grid, ordering)


def per_coordinate_footprint_bound(ideal, r: Sequence[int], grid, ordering=None) -> BoundReport:
    """Zeros of multiplicity at least r_j in each coordinate."""
    return footprint_bound(ideal, coordinate_box(r), grid, ordering)


def weighted_footprint_bound(ideal, w, r: int, grid, ordering=None) -> BoundReport:
    """Zeros of weighted multiplicity at least r."""
    return footprint_bound(ideal, weighted_ball(w, r), grid, ordering)


# ----------------------------------------------------------------------
# leading-monomial estimates


def staircase_removed_count(i: Sequence[int], J: DecreasingSet, grid) -> int:
    """#{j in J_S : j >= i componentwise}; requires i in J_S."""
    i = check_multiindex(i, J.num_vars)
    if not in_grid_expansion(i, J, grid):
        raise ValueError(f"{i} lies outside the grid expansion J_S")
    return sum(1 for j in grid_expand(J, grid) if dominates(j, i))


def lm_footprint_bound(lms: Iterable[Sequence[int]], J: DecreasingSet, grid) -> BoundReport:
    """Staircase estimate from known leading monomials only:
    #V_J <= floor((#J_S - #{j in J_S dominating some lm}) / #J)."""
    sizes = tuple(getattr(grid, "sizes", grid))
    grid_size = 1
    for s in sizes:
        grid_size *= s
    lms = [check_multiindex(lm, J.num_vars) for lm in lms]
    js = grid_expand(J, sizes)
    for lm in lms:
        if lm not in js:
            raise ValueError(f"leading monomial {lm} lies outside J_S; bound vacuous")
    check_enum(len(js) * max(len(lms), 1), "staircase estimate")
    removed = sum(1 for j in js if any(dominates(j, lm) for lm in lms))
    staircase = len(js) - removed
    raw = staircase // len(J)
    return BoundReport(
        _capped(raw, grid_size),
        "demillo-lipton-general",
        {
            "raw_bound": raw,
            "removed": removed,
            "staircase_estimate": staircase,
            "js_size": len(js),
            "j_size": len(J),
            "grid_size": grid_size,
            "leading_monomials": sorted(lms),
        },
    )


def demillo_lipton_general_bound(lm: Sequence[int], J: DecreasingSet, grid) -> BoundReport:
    """Staircase-estimate bound from a single leading monomial."""
    return lm_footprint_bound([lm], J, grid)


def demillo_lipton_nonzeros(degrees, grid) -> int:
    """Classical DeMillo-Lipton-Zippel: a nonzero polynomial with
    deg_{x_j} <= d_j < #S_j has at least prod_j (#S_j - d_j) non-roots."""
    if isinstance(degrees, Polynomial):
        degrees = tuple(degrees.degree_in(k) for k in range(degrees.num_vars))
    sizes = tuple(getattr(grid, "sizes", grid))
    degrees = tuple(degrees)
    if len(degrees) != len(sizes):
        raise ValueError("degree vector arity does not match the grid")
    out = 1
    for d, s in zip(degrees, sizes):
        if not 0 <= d < s:
            raise ValueError(f"need 0 <= degree {d} < size {s}")
        out *= s - d
    return out


def alon_furedi_nonzeros(degree, grid) -> int:
    """Alon-Furedi: a polynomial of total degree d not vanishing on all of
    the grid has at least min{prod y_j : 1 <= y_j <= #S_j, sum y_j >= sum #S_j - d}
    non-roots."""
    if isinstance(degree, Polynomial):
        degree = degree.degree()
    sizes = tuple(getattr(grid, "sizes", grid))
    total = sum(sizes)
    if not 0 <= degree <= total - len(sizes):
        raise ValueError(f"need 0 <= degree <= {total - len(sizes)}, got {degree}")
    need = total - degree
    best = {0: 1}
    for s in sizes:
        nxt: dict[int, int] = {}
        for acc, prod in best.items():
            for y in range(1, s + 1):
                key = min(acc + y, need)
                v = prod * y
                if key not in nxt or v < nxt[key]:
                    nxt[key] = v
        best = nxt
    return best[need]


# ----------------------------------------------------------------------
# weighted Schwartz-Zippel


def sz_rhs(i: Sequence[int], w: Sequence[int], sizes: Sequence[int]) -> Fraction:
    """#S * sum_j i_j w_j / #S_j as an exact fraction."""
    grid_size = 1
    for s in sizes:
        grid_size *= s
    return grid_size * sum(
        (Fraction(ij * wj, sj) for ij, wj, sj in zip(i, w, sizes, strict=True)),
        start=Fraction(0),
    )


def schwartz_zippel_weighted(
    f: Polynomial,
    w: Sequence[int],
    grid: Grid,
    lex_priority: Sequence[int] | None = None,
    r: int | None = None,
) -> BoundReport:
    """sum_{a in S} m_w(F, a) <= #S sum_j i_j w_j / #S_j for i = LM_lex(F).

    With a multiplicity threshold r the report also carries the count
    bound floor(RHS / r) on points of weighted multiplicity >= r;
    without r, bound_value is left as NO_INFORMATION and the exact RHS
    fraction sits in witness_data["rhs"].
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has unbounded multiplicity sum")
    w = check_weights(w)
    ordering = lex(f.num_vars, lex_priority)
    i = f.leading_monomial(ordering)
    rhs = sz_rhs(i, w, grid.sizes)
    witness = {
        "rhs": rhs,
        "lm": i,
        "weights": w,
        "grid_size": grid.size,
    }
    value = NO_INFORMATION
    if r is not None:
        if r < 1:
            raise ValueError("multiplicity threshold must satisfy r >= 1")
        raw = int(rhs / r)
        witness["raw_bound"] = raw
        witness["threshold"] = r
        value = _capped(raw, grid.size)
    return BoundReport(value, "schwartz-zippel-weighted", witness)


def sz_count_bound(i: Sequence[int], w: Sequence[int], sizes: Sequence[int], r: int) -> int | None:
    """Table-(b) cell: floor(RHS / r), NO_INFORMATION when >= #S."""
    grid_size = 1
    for s in sizes:
        grid_size *= s
    return _capped(int(sz_rhs(i, w, sizes) / r), grid_size)


# ----------------------------------------------------------------------
# Nullstellensatz witnesses


def nullstellensatz_witness(
    f: Polynomial,
    J: DecreasingSet,
    grid: Grid,
    ordering: MonomialOrdering | None = None,
) -> tuple[tuple[int, ...], Multiindex]:
    """A concrete (s, j) with F^(j)(s) != 0, j in J; exists whenever
    LM(f) lies in J_S."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no witness")
    if ordering is None:
        ordering = grevlex(f.num_vars)
    lm = f.leading_monomial(ordering)
    if not in_grid_expansion(lm, J, grid):
        raise ValueError(f"LM {lm} lies outside J_S; no witness is guaranteed")
    check_enum(grid.size, "witness scan")
    inner = grlex(f.num_vars)
    derivs = sorted(J.elements, key=inner.key)
    for a in grid.sorted_points():
        shifted = f.taylor_shift(a)
        for j in derivs:
            if shifted.coefficient(j):
                return a, j
    raise RuntimeError(
        "no witness found although LM(f) is in J_S; "
        "this contradicts the consecutive-derivative Nullstellensatz and is a bug"
    )


def alon_witness(f: Polynomial, i: Sequence[int], grid: Grid) -> tuple[int, ...]:
    """Classical witness: coefficient of x^i nonzero, deg f = |i|, and
    i_j < #S_j for all j force a point of the grid where f is nonzero."""
    i = check_multiindex(i, f.num_vars)
    if f.coefficient(i) == 0:
        raise ValueError(f"the coefficient of x^{i} vanishes")
    if f.degree() != sum(i):
        raise ValueError(f"deg f = {f.degree()} != |i| = {sum(i)}")
    for ij, sj in zip(i, grid.sizes):
        if ij >= sj:
            raise ValueError(f"need i_j < #S_j, got {ij} >= {sj}")
    check_enum(grid.size, "witness scan")
    for a in grid.sorted_points():
        if f.evaluate(a):
            return a
    raise RuntimeError(
        "no nonzero point although the Nullstellensatz hypotheses hold; bug"
    )


def weighted_nullstellensatz_witness(
    f: Polynomial, i: Sequence[int], w: Sequence[int], r: int, grid: Grid
) -> tuple[tuple[int, ...], Multiindex]:
    """Weighted witness: coefficient of x^i nonzero, deg_w f = |i|_w, and
    i in J_S for the weighted ball J force some |j|_w < r with F^(j)(s) != 0."""
    i = check_multiindex(i, f.num_vars)
    w = check_weights(w)
    if f.coefficient(i) == 0:
        raise ValueError(f"the coefficient of x^{i} vanishes")
    if f.weighted_degree(w) != weighted_order(i, w):
        raise ValueError("x^i does not reach the weighted degree of f")
    J = weighted_ball(w, r)
    if not in_grid_expansion(i, J, grid):
        raise ValueError(f"{i} lies outside J_S, so it removes no staircase monomials")
    # i is the weighted-degree leading exponent under lex with any priority
    # favoring it; scan directly rather than recomputing the LM.
    check_enum(grid.size, "witness scan")
    inner = grlex(f.num_vars)
    derivs = sorted(J.elements, key=inner.key)
    for a in grid.sorted_points():
        shifted = f.taylor_shift(a)
        for j in derivs:
            if shifted.coefficient(j):
                return a, j
    raise RuntimeError("no weighted witness although hypotheses hold; bug")


# ----------------------------------------------------------------------
# side-by-side comparison tables of the two count bounds


class ComparisonTable:
    """Both bounds for every lm in J_S under a weighted-ball condition.

    cells maps each lm to (footprint_estimate_bound, sz_count_bound),
    either entry NO_INFORMATION when it is >= #S.  Text and CSV renderings
    are only defined for two variables: one row per x1-power (text rows
    descending, CSV rows ascending), one column per
    x2-power present in J_S for that row.
    """

    def __init__(self, weights, r, sizes):
        weights = check_weights(weights)
        sizes = tuple(sizes)
        if len(sizes) != len(weights):
            raise ValueError("weights and sizes arity mismatch")
        J = weighted_ball(weights, r)
        js = grid_expand(J, sizes)
        check_enum(len(js) * len(js), "comparison table")
        grid_size = 1
        for s in sizes:
            grid_size *= s
        j_size = len(J)
        js_size = len(js)
        cells = {}
        for i in sorted(js):
            removed = sum(1 for j in js if dominates(j, i))
            a_cell = _capped((js_size - removed) // j_size, grid_size)
            b_cell = sz_count_bound(i, weights, sizes, r)
            cells[i] = (a_cell, b_cell)
        self.weights = weights
        self.r = r
        self.sizes = sizes
        self.j_size = j_size
        self.js_size = js_size
        self.grid_size = grid_size
        self.cells = cells

    KINDS = ("footprint", "schwartz-zippel")

    def _pick(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"table kind must be one of {self.KINDS}")
        idx = self.KINDS.index(kind)
        return {i: pair[idx] for i, pair in self.cells.items()}

    def _rows(self):
        if len(self.sizes) != 2:
            raise ValueError("table rendering is defined for two variables only")
        by_row: dict[int, int] = {}
        for (i1, i2) in self.cells:
            by_row[i1] = max(by_row.get(i1, -1), i2)
        return {i1: by_row[i1] + 1 for i1 in sorted(by_row)}

    @staticmethod
    def _cell_str(v) -> str:
        return "-" if v is NO_INFORMATION else str(v)

    @staticmethod
    def _row_label(i1: int) -> str:
        if i1 == 0:
            return "1"
        if i1 == 1:
            return "x1"
        return f"x1^{i1}"

    def to_text(self, kind: str) -> str:
        values = self._pick(kind)
        rows = self._rows()
        width = max(len(self._cell_str(v)) for v in values.values())
        label_width = max(len(self._row_label(i1)) for i1 in rows)
        lines = []
        for i1 in sorted(rows, reverse=True):
            cells = " ".join(
                f"{self._cell_str(values[(i1, i2)]):>{width}}" for i2 in range(rows[i1])
            )
            lines.append(f"{self._row_label(i1):<{label_width}} | {cells}")
        return "\n".join(lines) + "\n"

    def to_csv(self, kind: str) -> str:
        values = self._pick(kind)
        rows = self._rows()
        lines = []
        for i1 in sorted(rows):
            cells = [str(i1)] + [
                self._cell_str(values[(i1, i2)]) for i2 in range(rows[i1])
            ]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def comparison_table(w, r: int, sizes) -> ComparisonTable:
    return ComparisonTable(w, r, sizes)


# ----------------------------------------------------------------------
# whole-grid vanishing


def whole_grid_check(f: Polynomial, w, r: int, grid: Grid) -> bool:
    """Necessary condition for w-multiplicity >= r at every grid point of
    an equal-sided grid: r * #S <= deg_w(f) * s^(m-1)."""
    w = check_weights(w)
    if f.is_zero():
        raise ValueError("the zero polynomial is excluded")
    if r < 1:
        raise ValueError("threshold must satisfy r >= 1")
    sizes = set(grid.sizes)
    if len(sizes) != 1:
        raise ValueError(f"grid sides must be equal, got {grid.sizes}")
    s = sizes.pop()
    m = grid.num_vars
    return r * grid.size <= f.weighted_degree(w) * s ** (m - 1)
