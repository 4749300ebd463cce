"""Integer polynomials and two independent cyclotomic constructions.

A polynomial is a tuple of int coefficients indexed by degree with no
trailing zeros; () is zero. The n-th cyclotomic polynomial is computed two
unrelated ways and the pair is cross-checked in the tests:

* gcd route: the monic rational gcd of the sum polynomials
  Q_i = 1 + x**(n/p_i) + x**(2n/p_i) + ... + x**((p_i-1)n/p_i), one per
  distinct prime p_i of n, taken in descending prime order;
* division route: (x**n - 1) exactly divided by the cyclotomic
  polynomials of all proper divisors of n, recursively.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .numtheory import divisors, euler_phi, factorize

Poly = tuple[int, ...]


def poly(coeffs) -> Poly:
    """Normalize: strip trailing zeros, coerce to int."""
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(a: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(a) - 1


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Quotient a/b when b divides a in the integer polynomial ring;
    raises ValueError otherwise (nonzero remainder or fractional quotient)."""
    if not b:
        raise ValueError("division by the zero polynomial")
    rem = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(q) - 1, -1, -1):
        coef = rem[i + len(b) - 1] / lead
        q[i] = coef
        if coef:
            for j, c in enumerate(b):
                rem[i + j] -= coef * c
    if any(rem):
        raise ValueError("not an exact division: nonzero remainder")
    if any(c.denominator != 1 for c in q):
        raise ValueError("not an exact division: fractional quotient")
    return poly(int(c) for c in q)


def q_polynomial(n: int, i: int) -> Poly:
    """The i-th prime-power sum polynomial for n: with the distinct primes
    of n sorted descending as p_1 > p_2 > ..., this is
    sum_{j=0}^{p_i - 1} x**(j * n / p_i)."""
    if n < 2:
        raise ValueError(f"q_polynomial needs n >= 2, got {n}")
    primes = [p for p, _ in factorize(n)][::-1]
    if not 1 <= i <= len(primes):
        raise ValueError(f"i must be in 1..{len(primes)}, got {i}")
    p = primes[i - 1]
    step = n // p
    out = [0] * ((p - 1) * step + 1)
    for j in range(p):
        out[j * step] = 1
    return tuple(out)


def _rat_divmod(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    for i in range(len(q) - 1, -1, -1):
        coef = rem[i + len(b) - 1] / b[-1]
        q[i] = coef
        if coef:
            for j, c in enumerate(b):
                rem[i + j] -= coef * c
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


def _monic(a: list[Fraction]) -> list[Fraction]:
    lead = a[-1]
    return [c / lead for c in a]


def cyclotomic_via_gcd(n: int) -> Poly:
    """Cyclotomic polynomial of n >= 2 as the monic gcd of the sum
    polynomials q_polynomial(n, i), computed over exact rationals."""
    if n < 2:
        raise ValueError(f"cyclotomic_via_gcd needs n >= 2, got {n}")
    k = len(factorize(n))
    g = [Fraction(c) for c in q_polynomial(n, 1)]
    for i in range(2, k + 1):
        h = [Fraction(c) for c in q_polynomial(n, i)]
        while h:
            g, h = h, _rat_divmod(g, h)[1]
            if h:
                h = _monic(h)
        g = _monic(g)
    g = _monic(g)
    # clear denominators, divide out content, force positive leading coeff
    denom = 1
    for c in g:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in g]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    result = poly(ints)
    if result[-1] != 1 or degree(result) != euler_phi(n):
        raise AssertionError("gcd route produced a non-cyclotomic result")
    return result


_division_cache: dict[int, Poly] = {}


def cyclotomic_via_division(n: int) -> Poly:
    """Cyclotomic polynomial of n >= 1 by exact division of x**n - 1 by the
    cyclotomic polynomials of the proper divisors of n."""
    if n < 1:
        raise ValueError(f"cyclotomic_via_division needs n >= 1, got {n}")
    cached = _division_cache.get(n)
    if cached is not None:
        return cached
    num = poly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n):
        if d < n:
            num = poly_divexact(num, cyclotomic_via_division(d))
    _division_cache[n] = num
    return num


def companion_matrix(a: Poly):
    """Companion matrix of a monic polynomial of degree >= 1: ones on the
    superdiagonal, the negated lower coefficients along the bottom row."""
    m = degree(a)
    if m < 1:
        raise ValueError("companion needs degree >= 1")
    if a[-1] != 1:
        raise ValueError("companion needs a monic polynomial")
    rows = [tuple(1 if j == r + 1 else 0 for j in range(m)) for r in range(m - 1)]
    rows.append(tuple(-c for c in a[:m]))
    return tuple(rows)


def format_poly(a: Poly, var: str = "x") -> str:
    """Human form, ascending: "1 - x + x^2"; zero terms omitted."""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
