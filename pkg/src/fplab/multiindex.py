"""Multiindex combinatorics: weighted orders, decreasing sets, grid expansion.

Multiindices are plain tuples of naturals.  A set J of multiindices is
decreasing (downward closed) when i <= j componentwise and j in J imply
i in J.  Decreasing sets describe which Hasse derivatives a zero condition
constrains; their minimal complements B_J index the grid-polynomial
products that augment an ideal.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

Multiindex = tuple[int, ...]


def check_multiindex(i: Sequence[int], num_vars: int | None = None) -> Multiindex:
    t = tuple(i)
    if num_vars is not None and len(t) != num_vars:
        raise ValueError(f"multiindex {t} does not have {num_vars} coordinates")
    if not all(isinstance(c, int) and c >= 0 for c in t):
        raise ValueError(f"multiindex {t} must consist of naturals")
    return t


def dominates(i: Sequence[int], j: Sequence[int]) -> bool:
    """True when i >= j componentwise (x^j divides x^i)."""
    return all(a >= b for a, b in zip(i, j, strict=True))


def weighted_order(i: Sequence[int], w: Sequence[int]) -> int:
    """|i|_w = sum_j i_j * w_j."""
    return sum(a * b for a, b in zip(i, w, strict=True))


def check_weights(w: Sequence[int]) -> tuple[int, ...]:
    t = tuple(w)
    if not t or not all(isinstance(c, int) and c >= 1 for c in t):
        raise ValueError(f"weights {t} must be positive integers")
    return t


class DecreasingSet:
    """A finite nonempty downward-closed set of multiindices."""

    __slots__ = ("num_vars", "elements", "_minimal_complement")

    def __init__(self, elements: Iterable[Sequence[int]]):
        elems = frozenset(tuple(e) for e in elements)
        if not elems:
            raise ValueError("a decreasing set must contain the origin; got the empty set")
        arities = {len(e) for e in elems}
        if len(arities) != 1:
            raise ValueError("mixed multiindex arities in decreasing set")
        num_vars = arities.pop()
        if num_vars == 0:
            raise ValueError("multiindices need at least one coordinate")
        for e in elems:
            check_multiindex(e)
            for k in range(num_vars):
                if e[k] > 0:
                    pred = e[:k] + (e[k] - 1,) + e[k + 1 :]
                    if pred not in elems:
                        raise ValueError(
                            f"set is not downward closed: {e} present but {pred} missing"
                        )
        self.num_vars = num_vars
        self.elements = elems
        self._minimal_complement = None

    def minimal_complement(self) -> tuple[Multiindex, ...]:
        """B_J: the minimal multiindices outside J, sorted, always an antichain.

        A multiindex i is a minimal element of the complement exactly when
        i is outside J and every predecessor i - e_k lies in J, so the
        candidates are the single-step successors of members of J.
        """
        if self._minimal_complement is None:
            m = self.num_vars
            candidates = set()
            for e in self.elements:
                for k in range(m):
                    candidates.add(e[:k] + (e[k] + 1,) + e[k + 1 :])
            candidates -= self.elements
            minimal = []
            for c in candidates:
                ok = True
                for k in range(m):
                    if c[k] > 0:
                        pred = c[:k] + (c[k] - 1,) + c[k + 1 :]
                        if pred not in self.elements:
                            ok = False
                            break
                if ok:
                    minimal.append(c)
            self._minimal_complement = tuple(sorted(minimal))
        return self._minimal_complement

    def __contains__(self, i) -> bool:
        return tuple(i) in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __eq__(self, other):
        return isinstance(other, DecreasingSet) and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"DecreasingSet({sorted(self.elements)})"


def weighted_ball(w: Sequence[int], r: int) -> DecreasingSet:
    """{i : |i|_w < r} for positive weights w and threshold r >= 1."""
    w = check_weights(w)
    if r < 1:
        raise ValueError("weighted ball threshold must satisfy r >= 1")
    ranges = [range((r - 1) // wj + 1) for wj in w]
    return DecreasingSet(i for i in product(*ranges) if weighted_order(i, w) < r)


def coordinate_box(r: Sequence[int]) -> DecreasingSet:
    """{i : i_j < r_j for all j} for per-coordinate orders r_j >= 1."""
    r = tuple(r)
    if not all(isinstance(c, int) and c >= 1 for c in r):
        raise ValueError(f"box orders {r} must be positive integers")
    return DecreasingSet(product(*(range(rj) for rj in r)))


def standard_ball(num_vars: int, r: int) -> DecreasingSet:
    """{i : |i| < r}, the unweighted total-order ball."""
    return weighted_ball((1,) * num_vars, r)


def minimal_complement(J: DecreasingSet) -> tuple[Multiindex, ...]:
    return J.minimal_complement()


def _grid_sizes(grid) -> tuple[int, ...]:
    sizes = tuple(getattr(grid, "sizes", grid))
    if not sizes or not all(isinstance(s, int) and s >= 1 for s in sizes):
        raise ValueError(f"grid sizes {sizes} must be positive integers")
    return sizes


def grid_expand(J: DecreasingSet, grid) -> frozenset[Multiindex]:
    """J_S = {(p_j * s_j + t_j)_j : p in J, 0 <= t_j < s_j}.

    Accepts a Grid or a bare size tuple; #J_S = #S * #J since the boxes
    indexed by distinct p are disjoint.
    """
    sizes = _grid_sizes(grid)
    if len(sizes) != J.num_vars:
        raise ValueError("grid arity does not match decreasing set arity")
    out = set()
    for p in J.elements:
        ranges = [range(pj * sj, pj * sj + sj) for pj, sj in zip(p, sizes)]
        out.update(product(*ranges))
    return frozenset(out)


def in_grid_expansion(i: Sequence[int], J: DecreasingSet, grid) -> bool:
    """Membership in J_S without enumerating: floor-divide back into J."""
    sizes = _grid_sizes(grid)
    i = check_multiindex(i, J.num_vars)
    return tuple(c // s for c, s in zip(i, sizes)) in J
