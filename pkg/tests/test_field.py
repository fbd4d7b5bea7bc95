import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fplab import PrimeField, binomial_mod_p, is_prime


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
    for n in range(40):
        assert is_prime(n) == (n in primes)


def test_is_prime_larger():
    assert is_prime(2_147_483_647)
    assert not is_prime(2_147_483_647 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_rejects_composite_modulus():
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField(1 << 32)


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(-50, 50), st.integers(-50, 50))
def test_field_arithmetic(p, a, b):
    f = PrimeField(p)
    assert f.add(a, b) == (a + b) % p
    assert f.sub(a, b) == (a - b) % p
    assert f.mul(a, b) == (a * b) % p
    assert f.neg(a) == (-a) % p


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(1, 100))
def test_inverse(p, a):
    f = PrimeField(p)
    if a % p == 0:
        with pytest.raises(ZeroDivisionError):
            f.inv(a)
    else:
        assert f.mul(a, f.inv(a)) == 1


class TestLucasBinomials:
    """binomial(n, k) mod p against the factorial formula."""

    @given(
        st.sampled_from([2, 3, 5, 7]),
        st.integers(0, 200),
        st.integers(0, 200),
    )
    def test_matches_comb(self, p, n, k):
        f = PrimeField(p)
        assert f.binomial(n, k) == math.comb(n, k) % p

    def test_out_of_range(self):
        f = PrimeField(5)
        assert f.binomial(3, 5) == 0
        assert f.binomial(3, -1) == 0

    def test_large_arguments(self):
        f = PrimeField(7)
        # digit-wise product: C(10,3) has base-7 digits (1,3) choose (0,3)
        assert f.binomial(10, 3) == (math.comb(1, 0) * math.comb(3, 3)) % 7
        assert f.binomial(7**6, 7**6 - 1) == 0  # a digit pair with k > n
        assert binomial_mod_p(10**12, 10**6, f) == f.binomial(10**12, 10**6)

    def test_kummer_vanishing(self):
        # C(p, k) = 0 mod p for 0 < k < p
        for p in (2, 3, 5, 7):
            f = PrimeField(p)
            for k in range(1, p):
                assert f.binomial(p, k) == 0


def test_elements_and_contains():
    f = PrimeField(5)
    assert list(f.elements()) == [0, 1, 2, 3, 4]
    assert 4 in f and 5 not in f and -1 not in f
