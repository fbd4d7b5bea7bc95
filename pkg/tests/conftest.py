import random

from hypothesis import strategies as st

from fplab import DecreasingSet, Grid, Polynomial, PrimeField

SMALL_PRIMES = (2, 3, 5, 7)

fields = st.sampled_from([PrimeField(p) for p in SMALL_PRIMES])


@st.composite
def polynomials(draw, field=None, num_vars=2, max_exp=4, max_terms=5):
    if field is None:
        field = draw(fields)
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        expo = tuple(
            draw(st.integers(0, max_exp)) for _ in range(num_vars)
        )
        terms[expo] = draw(st.integers(0, field.modulus - 1))
    return Polynomial(field, num_vars, terms)


@st.composite
def decreasing_sets(draw, num_vars=2, max_size=6):
    """Grow downward-closed sets by adding successors whose predecessors
    are already present."""
    elements = {(0,) * num_vars}
    size = draw(st.integers(1, max_size))
    for _ in range(size - 1):
        candidates = sorted(
            {
                e[:k] + (e[k] + 1,) + e[k + 1 :]
                for e in elements
                for k in range(num_vars)
            }
            - elements
        )
        candidates = [
            c
            for c in candidates
            if all(
                c[:k] + (c[k] - 1,) + c[k + 1 :] in elements
                for k in range(num_vars)
                if c[k] > 0
            )
        ]
        elements.add(draw(st.sampled_from(candidates)))
    return DecreasingSet(elements)


@st.composite
def grids(draw, field=None, num_vars=2, max_side=3):
    if field is None:
        field = draw(fields)
    coords = []
    for _ in range(num_vars):
        side = draw(st.integers(1, min(max_side, field.modulus)))
        coords.append(draw(st.permutations(range(field.modulus)))[:side])
    return Grid(field, coords)


def random_polynomial(rng: random.Random, field, num_vars, max_exp=4, max_terms=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        expo = tuple(rng.randint(0, max_exp) for _ in range(num_vars))
        terms[expo] = rng.randint(0, field.modulus - 1)
    return Polynomial(field, num_vars, terms)


def random_decreasing_set(rng: random.Random, num_vars=2, max_size=6):
    elements = {(0,) * num_vars}
    for _ in range(rng.randint(0, max_size - 1)):
        candidates = sorted(
            {
                e[:k] + (e[k] + 1,) + e[k + 1 :]
                for e in elements
                for k in range(num_vars)
            }
            - elements
        )
        candidates = [
            c
            for c in candidates
            if all(
                c[:k] + (c[k] - 1,) + c[k + 1 :] in elements
                for k in range(num_vars)
                if c[k] > 0
            )
        ]
        elements.add(rng.choice(candidates))
    return DecreasingSet(elements)


def random_grid(rng: random.Random, field, num_vars=2, max_side=3):
    coords = []
    for _ in range(num_vars):
        side = rng.randint(1, min(max_side, field.modulus))
        coords.append(rng.sample(range(field.modulus), side))
    return Grid(field, coords)
