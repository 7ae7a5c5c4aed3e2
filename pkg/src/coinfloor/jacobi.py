"""Legendre and Jacobi symbols via floor-sum parity, with layered oracles.

The production path maps the parity of S(b, a, (b-1)/2) to a sign:

    (a/b) = (-1)**sum_{i=1}^{(b-1)/2} floor(i*a/b)

for odd positive coprime a and b.  Oracle paths: prime factorization of the
denominator combined with Euler's criterion, a literal quadratic-residue
search for small prime moduli, and the half-range residue count whose
parity gives the Legendre symbol.  Two parity congruences (ge1, ge2) are
exposed as residuals; they are what lets the denominator and numerator of
the symbol split multiplicatively, and they vanish on their whole domain.

All symbol values are plain ints constrained to {-1, 0, +1}.
"""

from __future__ import annotations

from math import gcd

from .core import factorize, is_prime, pow_mod
from .floorsum import fast_floor_sum

__all__ = [
    "legendre_euler",
    "legendre_by_search",
    "jacobi_by_definition",
    "jacobi_eisenstein",
    "gauss_lemma_count",
    "ge1_residual",
    "ge2_residual",
    "jacobi_reciprocity_check",
]


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion a**((p-1)/2) mod p.

    0 if p divides a, +1 for quadratic residues, -1 for nonresidues.
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow_mod(a, (p - 1) // 2, p) == 1 else -1


def legendre_by_search(a: int, p: int) -> int:
    """Definitional Legendre symbol: scan for an x with x*x == a (mod p).

    O(p); the second-level oracle for small p.
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if a in {x * x % p for x in range(1, p)} else -1


def jacobi_by_definition(a: int, b: int) -> int:
    """Jacobi symbol (a/b) as the product of Legendre symbols over the
    prime factorization of the odd denominator b; (a/1) = +1."""
    if b < 1 or b % 2 == 0:
        raise ValueError(f"denominator must be a positive odd integer, got {b}")
    result = 1
    for prime, mult in factorize(b):
        s = legendre_euler(a, prime)
        if s == 0:
            return 0
        if s == -1 and mult % 2 == 1:
            result = -result
    return result


def jacobi_eisenstein(a: int, b: int) -> int:
    """Jacobi symbol (a/b) from the parity of the floor sum S(b, a, (b-1)/2).

    Requires a and b odd, positive, and coprime; even or negative
    numerators must go through jacobi_by_definition instead.
    """
    if a < 1 or b < 1 or a % 2 == 0 or b % 2 == 0:
        raise ValueError(f"need odd positive integers, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    return -1 if fast_floor_sum(b, a, (b - 1) // 2) % 2 else 1


def gauss_lemma_count(a: int, p: int) -> int:
    """Count the residues of a, 2a, ..., ((p-1)/2)*a mod p exceeding p/2.

    (-1) to this count equals the Legendre symbol (a/p).
    """
    _check_odd_prime(p)
    if gcd(a, p) != 1:
        raise ValueError(f"({a}, {p}) are not coprime")
    half = (p - 1) // 2
    return sum(1 for i in range(1, half + 1) if i * a % p > half)


def _check_odd_triple(a: int, b: int, c: int) -> None:
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 1 or v % 2 == 0:
            raise ValueError(f"{name} must be a positive odd integer, got {v}")
    if gcd(a, b) != 1 or gcd(a, c) != 1:
        raise ValueError(f"b = {b} and c = {c} must both be coprime to a = {a}")


def ge1_residual(a: int, b: int, c: int) -> int:
    """Parity defect of splitting the denominator:

        S(b*c, a, (bc-1)/2) - S(b, a, (b-1)/2) - S(c, a, (c-1)/2)  mod 2.

    Zero for odd positive a, b, c with b and c coprime to a.
    """
    _check_odd_triple(a, b, c)
    bc = b * c
    return (
        fast_floor_sum(bc, a, (bc - 1) // 2)
        - fast_floor_sum(b, a, (b - 1) // 2)
        - fast_floor_sum(c, a, (c - 1) // 2)
    ) % 2


def ge2_residual(a: int, b: int, c: int) -> int:
    """Parity defect of splitting the numerator:

        S(a, b*c, (a-1)/2) - S(a, b, (a-1)/2) - S(a, c, (a-1)/2)  mod 2.

    Zero for odd positive a, b, c with b and c coprime to a.
    """
    _check_odd_triple(a, b, c)
    h = (a - 1) // 2
    return (
        fast_floor_sum(a, b * c, h) - fast_floor_sum(a, b, h) - fast_floor_sum(a, c, h)
    ) % 2


def jacobi_reciprocity_check(a: int, b: int) -> bool:
    """Does (a/b)*(b/a) = (-1)**((a-1)(b-1)/4) hold?  (It always does.)

    Both sides are evaluated for odd positive coprime a and b, the left
    through the floor-sum engine.
    """
    lhs = jacobi_eisenstein(a, b) * jacobi_eisenstein(b, a)
    rhs = -1 if ((a - 1) * (b - 1) // 4) % 2 else 1
    return lhs == rhs
