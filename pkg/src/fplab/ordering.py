"""Monomial orderings with configurable variable priority.

Supports lex, graded lex, and graded reverse lex.  The priority argument
is a permutation of the variable indices, most significant first; the
default is x1 > x2 > ... > xm.  Every ordering exposes a key() usable
with max() and sorted(), so comparisons stay total and multiplicative.
"""

from __future__ import annotations

from typing import Sequence

KINDS = ("lex", "grlex", "grevlex")


class MonomialOrdering:
    __slots__ = ("kind", "num_vars", "priority")

    def __init__(self, kind: str, num_vars: int, priority: Sequence[int] | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown ordering kind {kind!r}, expected one of {KINDS}")
        if num_vars < 1:
            raise ValueError("num_vars must be at least 1")
        if priority is None:
            priority = tuple(range(num_vars))
        else:
            priority = tuple(priority)
            if sorted(priority) != list(range(num_vars)):
                raise ValueError(
                    f"priority {priority} is not a permutation of 0..{num_vars - 1}"
                )
        self.kind = kind
        self.num_vars = num_vars
        self.priority = priority

    def key(self, expo: Sequence[int]):
        """Sort key: bigger key means bigger monomial."""
        e = tuple(expo[k] for k in self.priority)
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e), e)
        # grevlex: grade first, then the monomial with the smaller exponent
        # in the least significant position wins.
        return (sum(e), tuple(-c for c in reversed(e)))

    def greater(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.key(a) > self.key(b)

    def max(self, expos):
        return max(expos, key=self.key)

    def sorted(self, expos, reverse: bool = False):
        return sorted(expos, key=self.key, reverse=reverse)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrdering)
            and other.kind == self.kind
            and other.num_vars == self.num_vars
            and other.priority == self.priority
        )

    def __hash__(self):
        return hash((self.kind, self.num_vars, self.priority))

    def __repr__(self):
        return f"MonomialOrdering({self.kind!r}, {self.num_vars}, priority={self.priority})"


def lex(num_vars: int, priority: Sequence[int] | None = None) -> MonomialOrdering:
    return MonomialOrdering("lex", num_vars, priority)


def grlex(num_vars: int, priority: Sequence[int] | None = None) -> MonomialOrdering:
    return MonomialOrdering("grlex", num_vars, priority)


def grevlex(num_vars: int, priority: Sequence[int] | None = None) -> MonomialOrdering:
    return MonomialOrdering("grevlex", num_vars, priority)
