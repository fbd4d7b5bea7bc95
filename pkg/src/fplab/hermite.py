"""Derivative-evaluation matrices, Hermite interpolation, and codes.

The evaluation map sends F to ((F^(i)(a))_{i in J})_{a in T}.  On the
monomials of J_S against the full grid it is a bijection, which gives a
unique interpolant supported on J_S; the generator matrices of the
evaluation codes are slices of the same map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .bounds import staircase_removed_count
from .field import PrimeField
from .grid import Grid
from .groebner import grid_ideal_basis
from .limits import check_enum
from .multiindex import (
    DecreasingSet,
    Multiindex,
    check_multiindex,
    in_grid_expansion,
)
from .ordering import MonomialOrdering, grlex
from .polynomial import Polynomial, monomial_hasse_at


def _as_multiindex_set(J) -> tuple[Multiindex, ...]:
    """Fixed scan order for a derivative set: graded-lex ascending."""
    elements = J.elements if isinstance(J, DecreasingSet) else set(map(tuple, J))
    if not elements:
        raise ValueError("the derivative set must be non-empty")
    m = len(next(iter(elements)))
    inner = grlex(m)
    return tuple(sorted((check_multiindex(i, m) for i in elements), key=inner.key))


@dataclass(frozen=True, eq=False)
class EvaluationMatrix:
    """entry[row m, column (a, i)] = (x^m)^(i)(a)."""

    field: PrimeField
    row_monomials: tuple[Multiindex, ...]
    columns: tuple[tuple[tuple[int, ...], Multiindex], ...]
    matrix: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def rank(self) -> int:
        return _kernels.rank(self.matrix, self.field.modulus)

    def is_invertible(self) -> bool:
        n, c = self.matrix.shape
        return n == c and self.rank() == n


def evaluation_matrix(
    field: PrimeField,
    basis: Sequence[Sequence[int]],
    points: Iterable[Sequence[int]],
    J,
) -> EvaluationMatrix:
    """Rows follow the basis order given; columns run over points in
    lexicographic coordinate order (outer) and J in graded-lex (inner)."""
    basis = [tuple(b) for b in basis]
    if not basis:
        raise ValueError("the monomial basis must be non-empty")
    m = len(basis[0])
    basis = [check_multiindex(b, m) for b in basis]
    p = field.modulus
    pts = sorted({tuple(c % p for c in pt) for pt in points})
    for pt in pts:
        if len(pt) != m:
            raise ValueError(f"point {pt} does not have {m} coordinates")
    derivs = _as_multiindex_set(J)
    if derivs and len(derivs[0]) != m:
        raise ValueError("derivative arity does not match the basis")
    columns = tuple((pt, i) for pt in pts for i in derivs)
    check_enum(len(basis) * len(columns), "evaluation matrix")
    mat = np.zeros((len(basis), len(columns)), dtype=np.int64)
    for r, alpha in enumerate(basis):
        for c, (pt, i) in enumerate(columns):
            mat[r, c] = monomial_hasse_at(field, alpha, i, pt)
    return EvaluationMatrix(field, tuple(basis), columns, mat)


# ----------------------------------------------------------------------
# univariate Hermite basis and the tensor construction


def hermite_univariate_basis(
    field: PrimeField, points: Sequence[int], M: int
) -> dict[tuple[int, int], Polynomial]:
    """One-variable polynomials F_{i,j} of degree < n(M+1) with
    F_{i,j}^(k)(a_l) = 1 exactly when (i, j) = (k, l) and 0 otherwise,
    for derivative orders up to M over the given distinct points.

    Solved through the confluent Vandermonde matrix: invert the square
    evaluation matrix of 1, x, ..., x^(n(M+1)-1) against the columns
    (a_l, k); its inverse's columns are the coefficient vectors.
    """
    if M < 0:
        raise ValueError("the derivative cap must be a natural number")
    p = field.modulus
    pts = [a % p for a in points]
    if len(set(pts)) != len(pts):
        raise ValueError("interpolation points must be distinct")
    n = len(pts)
    if n == 0:
        raise ValueError("at least one interpolation point is required")
    size = n * (M + 1)
    a = np.zeros((size, size), dtype=np.int64)
    for l, node in enumerate(pts):
        for k in range(M + 1):
            row = l * (M + 1) + k
            for e in range(size):
                a[row, e] = monomial_hasse_at(field, (e,), (k,), (node,))
    x = _kernels.inv(a, p)
    if x is None:
        raise RuntimeError(
            "confluent Vandermonde matrix is singular for distinct points; bug"
        )
    basis = {}
    for l in range(n):
        for k in range(M + 1):
            col = x[:, l * (M + 1) + k]
            terms = {(e,): int(col[e]) for e in range(size) if col[e]}
            basis[(k, l)] = Polynomial(field, 1, terms)
    return basis


def _lift(f: Polynomial, num_vars: int, index: int) -> Polynomial:
    """Reinterpret a one-variable polynomial in coordinate `index`."""
    terms = {}
    for (e,), c in f.terms.items():
        expo = [0] * num_vars
        expo[index] = e
        terms[tuple(expo)] = c
    return Polynomial(f.field, num_vars, terms)


def hermite_interpolate(
    field: PrimeField,
    points: Iterable[Sequence[int]],
    J,
    targets: Mapping,
    missing: int = 0,
) -> Polynomial:
    """A polynomial F with F^(i)(a) = targets[(a, i)] for every point a
    and every i in J (absent pairs default to `missing`).

    J may be any finite multiindex set.  The interpolant is the target-
    weighted sum of products of univariate Hermite basis elements, one
    factor per coordinate, over node sets covering the points.
    """
    derivs = _as_multiindex_set(J)
    m = len(derivs[0])
    p = field.modulus
    pts = sorted({tuple(c % p for c in pt) for pt in points})
    if not pts:
        return Polynomial.zero(field, m)
    for pt in pts:
        if len(pt) != m:
            raise ValueError(f"point {pt} does not have {m} coordinates")
    targets = {
        (tuple(c % p for c in pt), check_multiindex(i, m)): field.normalize(v)
        for (pt, i), v in targets.items()
    }
    cap = max((max(i) for i in derivs), default=0)
    nodes = [sorted({pt[k] for pt in pts}) for k in range(m)]
    factor = []
    for k in range(m):
        uni = hermite_univariate_basis(field, nodes[k], cap)
        factor.append(
            {key: _lift(poly, m, k) for key, poly in uni.items()}
        )
    index = [
        {node: l for l, node in enumerate(nodes[k])} for k in range(m)
    ]
    result = Polynomial.zero(field, m)
    for pt in pts:
        for i in derivs:
            b = targets.get((pt, i), field.normalize(missing))
            if not b:
                continue
            term = Polynomial.constant(field, m, b)
            for k in range(m):
                term = term * factor[k][(i[k], index[k][pt[k]])]
            result = result + term
    return result


def reduce_mod_grid(
    f: Polynomial,
    grid: Grid,
    J: DecreasingSet,
    ordering: MonomialOrdering | None = None,
) -> Polynomial:
    """Remainder of f modulo the vanishing ideal of (grid, J); the unique
    representative supported on J_S with the same evaluations."""
    return grid_ideal_basis(grid, J, ordering).reduce(f)


def hermite_interpolate_unique(
    grid: Grid,
    J: DecreasingSet,
    targets: Mapping,
    ordering: MonomialOrdering | None = None,
) -> Polynomial:
    """The unique polynomial supported on J_S hitting every target over
    the full grid; unspecified (point, derivative) pairs are taken as 0."""
    raw = hermite_interpolate(grid.field, grid.points(), J, targets)
    return reduce_mod_grid(raw, grid, J, ordering)


# ----------------------------------------------------------------------
# evaluation codes


@dataclass(frozen=True, eq=False)
class EvaluationCode:
    """Ev applied to the span of a monomial set M inside J_S.

    Codewords are length-#S tuples of #J-blocks; the generator matrix
    rows are the evaluations of the monomials, laid out in the column
    order of the evaluation map.
    """

    grid: Grid
    J: DecreasingSet
    monomials: tuple[Multiindex, ...]
    matrix: EvaluationMatrix

    @property
    def block_size(self) -> int:
        return len(self.J)

    @property
    def length(self) -> int:
        return self.grid.size

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def build_code(grid: Grid, monomials: Iterable[Sequence[int]], J: DecreasingSet) -> EvaluationCode:
    mons = sorted(
        {check_multiindex(mi, grid.num_vars) for mi in monomials},
        key=grlex(grid.num_vars).key,
    )
    if not mons:
        raise ValueError("the code needs a non-empty monomial set")
    for mi in mons:
        if not in_grid_expansion(mi, J, grid):
            raise ValueError(f"monomial exponent {mi} lies outside J_S")
    matrix = evaluation_matrix(grid.field, mons, grid.points(), J)
    if matrix.rank() != len(mons):
        raise RuntimeError(
            "generator rows are dependent although the monomials lie in J_S; bug"
        )
    return EvaluationCode(grid, J, tuple(mons), matrix)


def code_distance(code: EvaluationCode, mode: str = "brute-force") -> int:
    """Minimum block-Hamming weight.

    brute-force enumerates all q^dim codewords (guarded by the cap);
    lower-bound evaluates ceil(min removed-count / #J) over the code's
    monomials, a relaxation that never exceeds the true distance.
    """
    if mode == "brute-force":
        p = code.grid.field.modulus
        check_enum(p**code.dimension, "codeword enumeration")
        return _kernels.min_block_weight(code.matrix.matrix, p, code.block_size)
    if mode == "lower-bound":
        removed = min(
            staircase_removed_count(alpha, code.J, code.grid)
            for alpha in code.monomials
        )
        j_size = len(code.J)
        return -(-removed // j_size)
    raise ValueError(f"mode must be 'brute-force' or 'lower-bound', got {mode!r}")


def export_generator_matrix(code: EvaluationCode) -> str:
    """Row-major CSV of the generator matrix, entries in [0, p)."""
    lines = [",".join(str(int(v)) for v in row) for row in code.matrix.matrix]
    return "\n".join(lines) + "\n"
