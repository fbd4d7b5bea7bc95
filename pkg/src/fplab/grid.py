"""Finite grids S = S_1 x ... x S_m inside GF(p)^m.

A Grid keeps one finite set of field elements per coordinate (input order
preserved, duplicates rejected after reduction mod p) and builds the
defining polynomials G_j(x_j) = prod_{s in S_j} (x_j - s), whose powers
and products drive every grid-augmented ideal in this package.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .field import PrimeField
from .polynomial import Polynomial


class Grid:
    __slots__ = ("field", "coordinate_sets", "sizes")

    def __init__(self, field: PrimeField, coordinate_sets: Sequence[Sequence[int]]):
        sets = []
        for k, coords in enumerate(coordinate_sets):
            reduced = [c % field.modulus for c in coords]
            if not reduced:
                raise ValueError(f"coordinate set {k + 1} is empty")
            if len(set(reduced)) != len(reduced):
                raise ValueError(
                    f"coordinate set {k + 1} has duplicates after reduction mod "
                    f"{field.modulus}: {reduced}"
                )
            sets.append(tuple(reduced))
        if not sets:
            raise ValueError("a grid needs at least one coordinate set")
        self.field = field
        self.coordinate_sets = tuple(sets)
        self.sizes = tuple(len(s) for s in sets)

    @classmethod
    def full(cls, field: PrimeField, num_vars: int) -> "Grid":
        """The whole space GF(p)^m."""
        coords = tuple(range(field.modulus))
        return cls(field, (coords,) * num_vars)

    @property
    def num_vars(self) -> int:
        return len(self.coordinate_sets)

    @property
    def size(self) -> int:
        n = 1
        for s in self.sizes:
            n *= s
        return n

    def points(self):
        """All grid points, coordinate sets iterated in input order."""
        return product(*self.coordinate_sets)

    def sorted_points(self) -> list[tuple[int, ...]]:
        """Grid points in lexicographic coordinate order (the output order)."""
        return sorted(self.points())

    def __contains__(self, point) -> bool:
        point = tuple(point)
        if len(point) != self.num_vars:
            return False
        p = self.field.modulus
        return all(a % p in s for a, s in zip(point, self.coordinate_sets))

    def defining_poly(self, index: int) -> Polynomial:
        """G_j(x_j) = prod_{s in S_j} (x_j - s) as an m-variate polynomial."""
        x = Polynomial.variable(self.field, self.num_vars, index)
        g = Polynomial.one(self.field, self.num_vars)
        for s in self.coordinate_sets[index]:
            g = g * (x - Polynomial.constant(self.field, self.num_vars, s))
        return g

    def defining_polys(self) -> list[Polynomial]:
        return [self.defining_poly(k) for k in range(self.num_vars)]

    def __eq__(self, other):
        return (
            isinstance(other, Grid)
            and other.field == self.field
            and other.coordinate_sets == self.coordinate_sets
        )

    def __hash__(self):
        return hash((self.field, self.coordinate_sets))

    def __repr__(self):
        return f"Grid({self.field!r}, {self.coordinate_sets})"
