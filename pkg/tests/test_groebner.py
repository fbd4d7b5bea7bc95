import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fplab import (
    DecreasingSet,
    Grid,
    GroebnerBasis,
    Ideal,
    InfiniteFootprintError,
    Polynomial,
    PrimeField,
    buchberger,
    divide,
    footprint,
    format_poly,
    grevlex,
    grid_expand,
    grid_ideal_basis,
    grid_products,
    grlex,
    ideal_equal,
    lex,
    parse_poly,
    s_polynomial,
    standard_ball,
    vanishing_ideal,
    weighted_ball,
)

from conftest import polynomials, random_decreasing_set, random_grid

F3 = PrimeField(3)
F5 = PrimeField(5)


def P(text, field=F5, m=2):
    return parse_poly(text, field, m)


class TestDivision:
    def test_univariate_example(self):
        q, r = divide(P("x1^2", m=1), [P("x1^2 - x1", m=1)], lex(1))
        assert q == [Polynomial.one(F5, 1)]
        assert r == P("x1", m=1)

    def test_remainder_has_no_divisible_monomials(self):
        f = P("x1^3*x2^2 + x1*x2 + x2")
        divisors = [P("x1*x2 - 1"), P("x2^2 - 1")]
        o = grlex(2)
        q, r = divide(f, divisors, o)
        assert f == sum((qi * di for qi, di in zip(q, divisors)), r)
        for mono in r.support():
            for d in divisors:
                lm = d.leading_monomial(o)
                assert not all(m >= l for m, l in zip(mono, lm))

    @given(polynomials(field=F5, max_exp=3), polynomials(field=F5, max_exp=3))
    @settings(max_examples=50)
    def test_divide_reconstructs(self, f, d):
        if d.is_zero():
            return
        o = grevlex(2)
        q, r = divide(f, [d], o)
        assert f == q[0] * d + r


class TestBuchberger:
    def test_two_variable_example(self):
        basis = buchberger([P("x1 - x2"), P("x1^2 - x1")], lex(2))
        assert {format_poly(g) for g in basis.elements} == {
            "x1 + 4*x2",
            "x2^2 + 4*x2",
        }

    def test_s_polynomial_criterion(self):
        gens = [P("x1^2*x2 - 1"), P("x1*x2^2 - x1")]
        o = grlex(2)
        basis = buchberger(gens, o)
        for i, g in enumerate(basis.elements):
            for h in basis.elements[i + 1 :]:
                s = s_polynomial(g, h, o)
                assert divide(s, list(basis.elements), o)[1].is_zero()

    def test_reduced_form(self):
        """Monic leading coefficients; no monomial of any element divisible
        by another element's leading monomial."""
        gens = [P("2*x1^2 + x2"), P("3*x1*x2 - 1"), P("x2^3 - x1")]
        o = grevlex(2)
        basis = buchberger(gens, o)
        lms = basis.leading_monomials()
        for g in basis.elements:
            assert g.leading_coefficient(o) == 1
            for mono in g.support():
                for other in basis.elements:
                    if other is g:
                        continue
                    lm = other.leading_monomial(o)
                    assert not all(a >= b for a, b in zip(mono, lm))
        assert len(set(lms)) == len(lms)

    def test_contains_generators(self):
        gens = [P("x1^2*x2 - x2"), P("x1*x2^2 - 1"), P("x1^3 - x2^2")]
        o = grevlex(2)
        basis = buchberger(gens, o)
        for g in gens:
            assert basis.reduce(g).is_zero()

    def test_unit_ideal(self):
        basis = buchberger([P("x1"), P("x1 + 1")], lex(2))
        assert basis.is_trivial()

    @given(
        st.lists(polynomials(field=F3, max_exp=2, max_terms=3), min_size=1, max_size=3)
    )
    @settings(max_examples=25, deadline=None)
    def test_ideal_membership_of_combinations(self, gens):
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            return
        o = grevlex(2)
        basis = buchberger(gens, o)
        combo = gens[0] * P("x1 + 2*x2^2", F3) + gens[-1] * P("x2", F3)
        assert basis.reduce(combo).is_zero()


class TestFootprint:
    def test_requires_zero_dimensional(self):
        basis = buchberger([P("x1")], lex(2))
        with pytest.raises(InfiniteFootprintError):
            footprint(basis)

    def test_staircase_example(self):
        basis = buchberger([P("x1^2 - 1"), P("x2^3 - x2")], lex(2))
        fp = footprint(basis)
        assert fp.size == 6
        assert set(fp) == {(a, b) for a in range(2) for b in range(3)}

    def test_unit_ideal_empty(self):
        basis = buchberger([Polynomial.one(F5, 2)], lex(2))
        assert footprint(basis).size == 0


class TestGridIdeal:
    def test_products_match_complement(self):
        grid = Grid(F3, [[0, 1], [0, 1]])
        J = weighted_ball((1, 1), 2)
        prods = grid_products(grid, J)
        assert [format_poly(g) for g in prods] == [
            "x2^4 + x2^3 + x2^2",
            "x1^2*x2^2 + 2*x1^2*x2 + 2*x1*x2^2 + x1*x2",
            "x1^4 + x1^3 + x1^2",
        ]

    def test_closed_form_is_reduced_basis_every_ordering(self):
        grid = Grid(F5, [[0, 1], [0, 2]])
        J = DecreasingSet([(0, 0), (1, 0), (0, 1)])
        for o in (lex(2), grlex(2), grevlex(2), lex(2, (1, 0))):
            closed = grid_ideal_basis(grid, J, o)
            recomputed = buchberger(grid_products(grid, J), o)
            assert set(closed.elements) == set(recomputed.elements)

    def test_nine_element_staircase_lms(self):
        grid = Grid(F5, [[0, 1], [0, 1]])
        J = DecreasingSet([(i, 0) for i in range(6)] + [(i, 1) for i in range(3)])
        basis = grid_ideal_basis(grid, J)
        assert basis.leading_monomials() == ((0, 4), (6, 2), (12, 0))

    def test_staircase_is_grid_expansion(self):
        rng = random.Random(7)
        for _ in range(10):
            grid = random_grid(rng, F5)
            J = random_decreasing_set(rng)
            basis = grid_ideal_basis(grid, J)
            assert set(footprint(basis)) == set(grid_expand(J, grid))


class TestVanishingIdeal:
    def test_single_point_double(self):
        basis = vanishing_ideal(F3, [(0, 0)], standard_ball(2, 2), grlex(2))
        assert {format_poly(g) for g in basis.elements} == {"x1^2", "x1*x2", "x2^2"}

    def test_no_points_gives_unit(self):
        basis = vanishing_ideal(F3, [], standard_ball(2, 1), grlex(2))
        assert basis.is_trivial()

    def test_footprint_size_counts_conditions(self):
        """#Delta(I(V;J)) = #V * #J: the evaluation map is onto."""
        rng = random.Random(3)
        for _ in range(10):
            grid = random_grid(rng, F5)
            J = random_decreasing_set(rng, max_size=4)
            pts = [
                a
                for a in grid.points()
                if rng.random() < 0.6
            ]
            basis = vanishing_ideal(F5, pts, J)
            assert footprint(basis).size == len(pts) * len(J)

    def test_elements_vanish_with_multiplicity(self):
        pts = [(0, 0), (1, 2)]
        J = weighted_ball((1, 2), 3)
        basis = vanishing_ideal(F5, pts, J)
        for g in basis.elements:
            for a in pts:
                assert g.has_multiplicity(a, J)

    def test_reduced_property(self):
        basis = vanishing_ideal(F5, [(0, 0), (1, 1), (2, 4)], standard_ball(2, 2))
        o = basis.ordering
        for g in basis.elements:
            assert g.leading_coefficient(o) == 1
            for mono in g.support():
                for other in basis.elements:
                    if other is g:
                        continue
                    lm = other.leading_monomial(o)
                    assert not all(a >= b for a, b in zip(mono, lm))

    def test_agrees_with_buchberger(self):
        rng = random.Random(11)
        for _ in range(5):
            grid = random_grid(rng, F3)
            J = random_decreasing_set(rng, max_size=3)
            pts = [a for a in grid.points() if rng.random() < 0.7]
            o = grevlex(2)
            direct = vanishing_ideal(F3, pts, J, o)
            rebuilt = buchberger(list(direct.elements), o)
            assert ideal_equal(direct, rebuilt)


def test_ideal_validation():
    with pytest.raises(ValueError):
        Ideal([])
    with pytest.raises(ValueError):
        Ideal([Polynomial.zero(F5, 2)])
    with pytest.raises(ValueError):
        Ideal([P("x1"), P("x1", F3)])


def test_groebner_basis_requires_monic():
    with pytest.raises(ValueError):
        GroebnerBasis([P("2*x1")], lex(2))
