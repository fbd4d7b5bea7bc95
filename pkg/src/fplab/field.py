"""Prime field arithmetic on plain integer residues.

Field elements are ordinary Python ints reduced to the range [0, p).  A
PrimeField instance carries the modulus and supplies exact arithmetic,
inverses, and binomial coefficients mod p via Lucas' theorem.
"""

from __future__ import annotations

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3 * 10**24
# (Sorenson-Webster); far beyond the modulus cap of 2**31.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_MODULUS_LIMIT = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic primality test for n up to 64 bits."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _comb_digit(n: int, k: int, p: int) -> int:
    """C(n, k) mod p for base-p digits n, k < p, by the multiplicative formula."""
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    num = 1
    den = 1
    for t in range(1, k + 1):
        num = num * (n - k + t) % p
        den = den * t % p
    return num * pow(den, p - 2, p) % p


class PrimeField:
    """The finite field GF(p) for a prime modulus p < 2**31."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int):
        if not isinstance(modulus, int):
            raise ValueError("modulus must be an int")
        if modulus >= _MODULUS_LIMIT:
            raise ValueError(f"modulus {modulus} exceeds the 2**31 limit")
        if not is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        self.modulus = modulus

    def normalize(self, a: int) -> int:
        return a % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.modulus - 2, self.modulus)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.modulus

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.modulus)
        return pow(a % self.modulus, e, self.modulus)

    def binomial(self, n: int, k: int) -> int:
        """C(n, k) mod p via Lucas' theorem on base-p digits; 0 outside
        the triangle 0 <= k <= n."""
        if n < 0:
            raise ValueError("binomial needs a natural upper argument")
        if k < 0 or k > n:
            return 0
        p = self.modulus
        result = 1
        while n or k:
            result = result * _comb_digit(n % p, k % p, p) % p
            if result == 0:
                return 0
            n //= p
            k //= p
        return result

    def elements(self):
        """All residues 0..p-1, for exhaustive small-field scans."""
        return range(self.modulus)

    def __contains__(self, a):
        return isinstance(a, int) and 0 <= a < self.modulus

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("PrimeField", self.modulus))

    def __repr__(self):
        return f"PrimeField({self.modulus})"


def binomial_mod_p(n: int, k: int, field: PrimeField) -> int:
    return field.binomial(n, k)
