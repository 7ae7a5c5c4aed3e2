"""Exact integer primitives shared by the rest of the package.

Euclid's algorithm and its extended certificate, modular inverses and
powers, deterministic primality, trial-division factorization, and the
validated coprime-pair value objects used as parameters everywhere.
All functions are pure; all values are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "gcd",
    "extended_gcd",
    "mod_inverse",
    "pow_mod",
    "is_prime",
    "factorize",
    "CoprimePair",
    "OddCoprimePair",
]


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, with gcd(0, 0) = 0."""
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b).

    Rejects a = b = 0, where no certificate exists.
    """
    if a == 0 and b == 0:
        raise ValueError("extended_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """The x in [0, m) with a*x == 1 (mod m); mod_inverse(a, 1) = 0.

    Requires m >= 1 and gcd(a, m) = 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    g, x, _ = extended_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}: gcd = {g}")
    return x % m


def pow_mod(base: int, exp: int, m: int) -> int:
    """base**exp mod m by square-and-multiply, O(log exp) multiplications."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    result = 1 % m
    base %= m
    while exp:
        if exp & 1:
            result = result * base % m
        base = base * base % m
        exp >>= 1
    return result


# Strong-pseudoprime witnesses making the test deterministic for n < 3.3e24,
# far beyond the supported input range.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (fixed-witness strong pseudoprime test)."""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, multiplicity) pairs, primes ascending.

    factorize(1) = [].
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            out.append((p, r))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


@dataclass(frozen=True)
class CoprimePair:
    """A validated pair (a, b) of positive coprime integers.

    The inverse of a modulo b is computed once at construction; it backs
    the O(1) representability and solution-count formulas.
    """

    a: int
    b: int
    inv_a_mod_b: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError(f"pair members must be positive, got ({self.a}, {self.b})")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"({self.a}, {self.b}) are not coprime")
        object.__setattr__(self, "inv_a_mod_b", mod_inverse(self.a, self.b))


class OddCoprimePair(CoprimePair):
    """A CoprimePair whose members are both odd."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.a % 2 == 0 or self.b % 2 == 0:
            raise ValueError(f"({self.a}, {self.b}) must both be odd")
