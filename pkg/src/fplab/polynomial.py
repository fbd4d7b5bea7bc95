"""Sparse multivariate polynomials over a prime field, with Hasse calculus.

A Polynomial stores a dict mapping exponent tuples to nonzero residues.
Beyond ring arithmetic it provides the operations the footprint machinery
needs: Hasse derivatives, Taylor shifts F(x + a), weighted degrees and
multiplicities, and leading monomials under a chosen ordering.  A small
text format (x1..xm, ^, *, + and -) round-trips canonical forms.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping, Sequence

from .field import PrimeField
from .multiindex import (
    Multiindex,
    check_multiindex,
    check_weights,
    dominates,
    weighted_order,
)
from .ordering import MonomialOrdering, grlex

#: Multiplicity of the zero polynomial at any point.
INFINITE = math.inf


def _add_term(terms: dict, expo: Multiindex, coeff: int, p: int):
    c = (terms.get(expo, 0) + coeff) % p
    if c:
        terms[expo] = c
    else:
        terms.pop(expo, None)


class Polynomial:
    __slots__ = ("field", "num_vars", "terms")

    def __init__(
        self,
        field: PrimeField,
        num_vars: int,
        terms: Mapping[Sequence[int], int] | None = None,
    ):
        if num_vars < 1:
            raise ValueError("num_vars must be at least 1")
        clean: dict[Multiindex, int] = {}
        if terms:
            for expo, coeff in terms.items():
                expo = check_multiindex(expo, num_vars)
                c = coeff % field.modulus
                if c:
                    _add_term(clean, expo, c, field.modulus)
        self.field = field
        self.num_vars = num_vars
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, field: PrimeField, num_vars: int) -> "Polynomial":
        return cls(field, num_vars)

    @classmethod
    def constant(cls, field: PrimeField, num_vars: int, c: int) -> "Polynomial":
        return cls(field, num_vars, {(0,) * num_vars: c})

    @classmethod
    def one(cls, field: PrimeField, num_vars: int) -> "Polynomial":
        return cls.constant(field, num_vars, 1)

    @classmethod
    def variable(cls, field: PrimeField, num_vars: int, index: int) -> "Polynomial":
        """The variable x_{index+1} (0-based index)."""
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range")
        expo = tuple(1 if k == index else 0 for k in range(num_vars))
        return cls(field, num_vars, {expo: 1})

    @classmethod
    def monomial(
        cls, field: PrimeField, num_vars: int, expo: Sequence[int], coeff: int = 1
    ) -> "Polynomial":
        return cls(field, num_vars, {tuple(expo): coeff})

    # ------------------------------------------------------------------
    # ring structure

    def _check_compatible(self, other: "Polynomial"):
        if self.field != other.field or self.num_vars != other.num_vars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        p = self.field.modulus
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            _add_term(out, expo, coeff, p)
        return self._wrap(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        p = self.field.modulus
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            _add_term(out, expo, -coeff, p)
        return self._wrap(out)

    def __neg__(self) -> "Polynomial":
        p = self.field.modulus
        return self._wrap({e: p - c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        p = self.field.modulus
        out: dict[Multiindex, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = tuple(a + b for a, b in zip(ea, eb))
                _add_term(out, expo, ca * cb, p)
        return self._wrap(out)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial.one(self.field, self.num_vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.field.modulus
        c %= p
        if c == 0:
            return Polynomial.zero(self.field, self.num_vars)
        return self._wrap({e: a * c % p for e, a in self.terms.items()})

    def mul_monomial(self, expo: Sequence[int], coeff: int = 1) -> "Polynomial":
        expo = check_multiindex(expo, self.num_vars)
        p = self.field.modulus
        coeff %= p
        out = {}
        for e, c in self.terms.items():
            shifted = tuple(a + b for a, b in zip(e, expo))
            cc = c * coeff % p
            if cc:
                out[shifted] = cc
        return self._wrap(out)

    def _wrap(self, terms: dict) -> "Polynomial":
        poly = Polynomial.__new__(Polynomial)
        poly.field = self.field
        poly.num_vars = self.num_vars
        poly.terms = terms
        return poly

    # ------------------------------------------------------------------
    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def coefficient(self, expo: Sequence[int]) -> int:
        return self.terms.get(tuple(expo), 0)

    def support(self) -> set[Multiindex]:
        return set(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(e[index] for e in self.terms)

    def weighted_degree(self, w: Sequence[int]) -> int:
        """deg_w f = max |i|_w over the support; error on the zero polynomial."""
        w = check_weights(w)
        if not self.terms:
            raise ValueError("the zero polynomial has no weighted degree")
        return max(weighted_order(e, w) for e in self.terms)

    def leading_monomial(self, ordering: MonomialOrdering) -> Multiindex:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=ordering.key)

    def leading_coefficient(self, ordering: MonomialOrdering) -> int:
        return self.terms[self.leading_monomial(ordering)]

    def lm_pair(self, ordering: MonomialOrdering) -> tuple[Multiindex, int]:
        lm = self.leading_monomial(ordering)
        return lm, self.terms[lm]

    def monic(self, ordering: MonomialOrdering) -> "Polynomial":
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(self.field.inv(self.leading_coefficient(ordering)))

    # ------------------------------------------------------------------
    # evaluation and Hasse calculus

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.num_vars:
            raise ValueError("point arity does not match the polynomial")
        p = self.field.modulus
        pt = [a % p for a in point]
        total = 0
        for expo, coeff in self.terms.items():
            v = coeff
            for a, e in zip(pt, expo):
                if e:
                    v = v * pow(a, e, p) % p
            total = (total + v) % p
        return total

    def hasse_derivative(self, i: Sequence[int]) -> "Polynomial":
        """The coefficient of z^i in F(x + z), computed termwise.

        The term c * x^j contributes c * prod_k C(j_k, i_k) * x^(j - i)
        whenever i <= j componentwise; binomials are taken mod p by Lucas.
        """
        i = check_multiindex(i, self.num_vars)
        field = self.field
        p = field.modulus
        out: dict[Multiindex, int] = {}
        for j, c in self.terms.items():
            if not dominates(j, i):
                continue
            factor = c
            for jk, ik in zip(j, i):
                if ik:
                    factor = factor * field.binomial(jk, ik) % p
                    if factor == 0:
                        break
            if factor:
                _add_term(out, tuple(a - b for a, b in zip(j, i)), factor, p)
        return self._wrap(out)

    def taylor_shift(self, point: Sequence[int]) -> "Polynomial":
        """G(x) = F(x + a); the coefficient of x^i in G equals F^(i)(a)."""
        if len(point) != self.num_vars:
            raise ValueError("point arity does not match the polynomial")
        field = self.field
        p = field.modulus
        terms = self.terms
        for k, a in enumerate(point):
            a = a % p
            if a == 0 or not terms:
                continue
            powers = {0: 1}
            expansions: dict[int, list[tuple[int, int]]] = {}
            new: dict[Multiindex, int] = {}
            for expo, coeff in terms.items():
                ek = expo[k]
                if ek == 0:
                    _add_term(new, expo, coeff, p)
                    continue
                expansion = expansions.get(ek)
                if expansion is None:
                    for t in range(max(powers) + 1, ek + 1):
                        powers[t] = powers[t - 1] * a % p
                    expansion = []
                    for t in range(ek + 1):
                        b = field.binomial(ek, t) * powers[ek - t] % p
                        if b:
                            expansion.append((t, b))
                    expansions[ek] = expansion
                for t, b in expansion:
                    shifted = expo[:k] + (t,) + expo[k + 1 :]
                    _add_term(new, shifted, coeff * b, p)
            terms = new
        if terms is self.terms:
            terms = dict(terms)
        return self._wrap(terms)

    def weighted_multiplicity(self, point: Sequence[int], w: Sequence[int]):
        """m_w(F, a) = min |i|_w over the support of F(x + a); INFINITE for 0."""
        w = check_weights(w)
        if not self.terms:
            return INFINITE
        shifted = self.taylor_shift(point)
        return min(weighted_order(e, w) for e in shifted.terms)

    def multiplicity(self, point: Sequence[int]):
        return self.weighted_multiplicity(point, (1,) * self.num_vars)

    def has_multiplicity(self, point: Sequence[int], J) -> bool:
        """True when F^(i)(a) = 0 for every i in the decreasing set J."""
        if not self.terms:
            return True
        shifted = self.taylor_shift(point)
        return all(i not in shifted.terms for i in J.elements)

    # ------------------------------------------------------------------
    # comparison and display

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.field == self.field
            and other.num_vars == self.num_vars
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.field, self.num_vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.field.modulus}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def monomial_hasse_at(
    field: PrimeField, expo: Sequence[int], j: Sequence[int], point: Sequence[int]
) -> int:
    """(x^expo)^(j) evaluated at point: prod_k C(expo_k, j_k) point_k^(expo_k - j_k)."""
    if not dominates(expo, j):
        return 0
    p = field.modulus
    v = 1
    for ek, jk, ak in zip(expo, j, point):
        if jk:
            v = v * field.binomial(ek, jk) % p
        if ek > jk:
            v = v * pow(ak % p, ek - jk, p) % p
        if v == 0:
            break
    return v


# ----------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<var>x\d+)|(?P<op>[-+*^]))")


def format_poly(f: Polynomial) -> str:
    """Canonical text form: terms in descending graded lex, residues in [0, p)."""
    if not f.terms:
        return "0"
    order = grlex(f.num_vars)
    parts = []
    for expo in sorted(f.terms, key=order.key, reverse=True):
        coeff = f.terms[expo]
        factors = []
        for k, e in enumerate(expo):
            if e == 1:
                factors.append(f"x{k + 1}")
            elif e > 1:
                factors.append(f"x{k + 1}^{e}")
        if not factors:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{coeff}*" + "*".join(factors))
    return " + ".join(parts)


def parse_poly(text: str, field: PrimeField, num_vars: int) -> Polynomial:
    """Parse 'c*x1^a*x2^b + ...' into a Polynomial; inverse of format_poly."""
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            if text[pos:].strip():
                raise ValueError(f"unexpected character at position {pos}: {text[pos:]!r}")
            break
        if match.group("nat") is not None:
            tokens.append(("nat", int(match.group("nat"))))
        elif match.group("var") is not None:
            tokens.append(("var", int(match.group("var")[1:])))
        else:
            tokens.append(("op", match.group("op")))
        pos = match.end()
    if not tokens:
        raise ValueError("empty polynomial text")

    terms: dict[Multiindex, int] = {}
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None)

    while idx < len(tokens):
        sign = 1
        kind, value = peek()
        if kind == "op" and value in "+-":
            if value == "-":
                sign = -1
            idx += 1
            kind, value = peek()
        coeff = 1
        expo = [0] * num_vars
        saw_factor = False
        if kind == "nat":
            coeff = value
            idx += 1
            saw_factor = True
            kind, value = peek()
            if kind == "op" and value == "*":
                idx += 1
                kind, value = peek()
                if kind != "var":
                    raise ValueError("expected a variable after '*'")
        while kind == "var":
            if not 1 <= value <= num_vars:
                raise ValueError(f"variable x{value} out of range for {num_vars} variables")
            var = value - 1
            power = 1
            idx += 1
            kind, value = peek()
            if kind == "op" and value == "^":
                idx += 1
                kind, value = peek()
                if kind != "nat":
                    raise ValueError("expected an exponent after '^'")
                power = value
                idx += 1
                kind, value = peek()
            expo[var] += power
            saw_factor = True
            if kind == "op" and value == "*":
                idx += 1
                kind, value = peek()
                if kind == "var":
                    continue
                raise ValueError("expected a variable after '*'")
            break
        if not saw_factor:
            raise ValueError(f"expected a term at token {idx} of {text!r}")
        _add_term(terms, tuple(expo), sign * coeff, field.modulus)
    return Polynomial(field, num_vars, terms)
