"""Elementary exact number theory: primality, factorization, divisors,
totients, unit groups and multiplicative orders.

Everything works on plain Python integers, so no input can overflow; the
expensive pieces (totients, orders) are memoized because the enumeration
layers sweep them over every divisor of every modulus.
"""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic trial division (6k+-1 wheel)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, primes
    strictly increasing. factorize(1) is the empty product ()."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**j for d in ds for j in range(e + 1)]
    return sorted(ds)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Number of integers in [1, n] coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def units(n: int) -> list[int]:
    """The unit group of Z_n as a sorted list of representatives in [1, n)."""
    if n < 2:
        raise ValueError(f"units needs n >= 2, got {n}")
    return [k for k in range(1, n) if math.gcd(k, n) == 1]


def mult_order(k: int, n: int) -> int:
    """Least x >= 1 with k**x = 1 (mod n); requires gcd(k, n) = 1 and n >= 2."""
    if n < 2:
        raise ValueError(f"mult_order needs modulus >= 2, got {n}")
    k %= n
    if math.gcd(k, n) != 1:
        raise ValueError(f"mult_order undefined: gcd({k}, {n}) != 1")
    return _order(k, n)


@lru_cache(maxsize=None)
def _order(k: int, n: int) -> int:
    # The order divides phi(n); test the divisors of phi(n) in ascending
    # order with the C-level three-argument pow.
    for d in divisors(euler_phi(n)):
        if pow(k, d, n) == 1:
            return d
    raise AssertionError("unreachable: order must divide euler_phi(n)")


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers. Exact, unbounded."""
    if a < 1 or b < 1:
        raise ValueError(f"lcm needs positive arguments, got {a}, {b}")
    return math.lcm(a, b)
