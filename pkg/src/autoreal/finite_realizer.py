"""Decide and realize permutations as automorphisms of Z_n and of
Z_p x Z_p.

Two enumeration routes exist for each group family and are kept strictly
apart so the tests can cross-check them:

* closed-form: cyclic_structure_for_unit / cyclic_structures build the
  structure of x -> k*x on Z_n from multiplicative orders over the
  divisors of n; p2_structures generates the three admissible families
  for Z_p x Z_p (single length d | p**2-1; pairs d, p*d for d | p-1; and
  lcm-merged pairs d1, d2 | p-1).
* brute force: cyclic_structure_oracle walks the actual permutation;
  gl2_oracle / gln_oracle enumerate every invertible matrix over Z_p.

Positive decisions come with witnesses (an explicit relabeling plus the
multiplier or matrix), machine-verified over the whole domain before they
are returned.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import BudgetExceededError, NotRealizableError
from .numtheory import divisors, euler_phi, factorize, is_prime, lcm, mult_order, units
from .structures import CycleStructure, Permutation, canonicalize, format_structure, structure_of

BUDGET_ENV = "AUTOREAL_ORACLE_BUDGET"
DEFAULT_ORACLE_BUDGET = 10_000_000
GL2_MAX_PRIME = 13
P2_MAX_PRIME = 1000
CYCLIC_MAX_N = 10**6


@dataclass(frozen=True)
class CyclicWitness:
    """Relabeling of {0..n-1} onto Z_n under which the permutation becomes
    x -> multiplier * x mod n."""

    n: int
    multiplier: int
    labeling: tuple[int, ...]


@dataclass(frozen=True)
class FpMatrix2:
    """An invertible 2x2 matrix over Z_p, entries reduced mod p."""

    p: int
    entries: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        p = self.p
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        e = tuple(tuple(v % p for v in row) for row in self.entries)
        if len(e) != 2 or any(len(row) != 2 for row in e):
            raise ValueError("entries must be 2x2")
        object.__setattr__(self, "entries", e)
        if (e[0][0] * e[1][1] - e[0][1] * e[1][0]) % p == 0:
            raise ValueError("matrix is singular mod p")


@dataclass(frozen=True)
class P2Witness:
    """Relabeling of {0..p*p-1} onto Z_p x Z_p under which the permutation
    becomes the matrix action. labeling[a] is the vector (x, y) of point a;
    vectors correspond to indices via i = x + p*y."""

    p: int
    matrix: FpMatrix2
    labeling: tuple[tuple[int, int], ...]


def oracle_budget() -> int:
    """Step budget for gln_oracle, from the environment or the default."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def _check_cyclic_args(n: int, k: int) -> int:
    if not 2 <= n <= CYCLIC_MAX_N:
        raise ValueError(f"n must be in 2..{CYCLIC_MAX_N}, got {n}")
    k %= n
    if math.gcd(k, n) != 1:
        raise ValueError(f"k must be a unit mod n: gcd({k}, {n}) != 1")
    return k


def cyclic_structure_for_unit(n: int, k: int) -> CycleStructure:
    """Closed-form cycle structure of x -> k*x on Z_n.

    Units fall into phi(n)/ord_n(k) cycles of length ord_n(k); the
    non-units of each intermediate modulus m | n (1 < m < n) contribute
    phi(m)/ord_m(k) cycles of length ord_m(k); zero is fixed.
    """
    k = _check_cyclic_args(n, k)
    counts: dict[int, int] = {}
    ell = mult_order(k, n)
    counts[ell] = euler_phi(n) // ell
    for m in divisors(n):
        if 1 < m < n:
            lam = mult_order(k, m)
            counts[lam] = counts.get(lam, 0) + euler_phi(m) // lam
    counts[1] = counts.get(1, 0) + 1
    return canonicalize(counts.items())


def cyclic_structure_oracle(n: int, k: int) -> CycleStructure:
    """Brute-force cycle structure of x -> k*x on Z_n: materialize the
    permutation and walk its cycles."""
    k = _check_cyclic_args(n, k)
    counts = kernels.unit_cycle_counts(n, k)
    return canonicalize(
        (length, int(c)) for length, c in enumerate(counts) if c
    )


@lru_cache(maxsize=None)
def cyclic_structures(n: int) -> frozenset[CycleStructure]:
    """All cycle structures of automorphisms of Z_n (closed-form route)."""
    return frozenset(cyclic_structure_for_unit(n, k) for k in units(n))


def check_cyclic(perm: Permutation) -> int | None:
    """Smallest multiplier k with x -> k*x matching the permutation's cycle
    structure, or None when no automorphism of Z_n does."""
    n = len(perm)
    if n < 2:
        raise ValueError(f"needs at least 2 points, got {n}")
    target = structure_of(perm)
    for k in units(n):
        if cyclic_structure_for_unit(n, k) == target:
            return k
    return None


def _cycles_ascending(images) -> list[list[int]]:
    """Cycle decomposition; each cycle starts at its smallest element, and
    the list is sorted by (length descending, smallest element ascending)."""
    n = len(images)
    seen = bytearray(n)
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = 1
            cyc.append(j)
            j = images[j]
        cycles.append(cyc)
    cycles.sort(key=lambda c: (-len(c), c[0]))
    return cycles


def realize_cyclic(perm: Permutation) -> CyclicWitness:
    """Explicit witness that the permutation is an automorphism of Z_n:
    a multiplier k and a relabeling with labeling[f(a)] = k * labeling[a]
    for every point a. Raises NotRealizableError when none exists."""
    n = len(perm)
    k = check_cyclic(perm)
    if k is None:
        raise NotRealizableError(
            f"structure {format_structure(structure_of(perm))} does not occur "
            f"among automorphisms of Z_{n}"
        )
    model = [(k * x) % n for x in range(n)]
    labeling = [0] * n
    for ours, theirs in zip(_cycles_ascending(perm.images), _cycles_ascending(model)):
        for a, x in zip(ours, theirs):
            labeling[a] = x
    witness = CyclicWitness(n, k, tuple(labeling))
    _verify_cyclic_witness(perm, witness)
    return witness


def _verify_cyclic_witness(perm: Permutation, w: CyclicWitness) -> None:
    n = w.n
    if sorted(w.labeling) != list(range(n)):
        raise RuntimeError("witness labeling is not a bijection")
    for a in range(n):
        if w.labeling[perm(a)] != (w.multiplier * w.labeling[a]) % n:
            raise RuntimeError("witness failed verification")


def _structure_rows_from_counts(row) -> CycleStructure:
    return canonicalize((length, int(c)) for length, c in enumerate(row) if c)


@lru_cache(maxsize=None)
def p2_structures(p: int) -> frozenset[CycleStructure]:
    """All cycle structures of automorphisms of Z_p x Z_p, generated from
    the three closed-form families and deduplicated."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p > P2_MAX_PRIME:
        raise ValueError(f"p must be <= {P2_MAX_PRIME}, got {p}")
    out = set()
    unit_divs = divisors(p - 1)
    for d in divisors(p * p - 1):
        out.add(canonicalize([(d, (p * p - 1) // d), (1, 1)]))
    for d in unit_divs:
        out.add(canonicalize([(p * d, (p - 1) // d), (d, (p - 1) // d), (1, 1)]))
    for i, d1 in enumerate(unit_divs):
        for d2 in unit_divs[i:]:
            m = lcm(d1, d2)
            out.add(
                canonicalize(
                    [
                        (m, (p - 1) ** 2 // m),
                        (d1, (p - 1) // d1),
                        (d2, (p - 1) // d2),
                        (1, 1),
                    ]
                )
            )
    return frozenset(out)


def gl2_oracle(p: int) -> frozenset[CycleStructure]:
    """Brute-force enumeration of all invertible 2x2 matrices over Z_p and
    the structures of their actions on the p*p points."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p > GL2_MAX_PRIME:
        raise ValueError(f"gl2_oracle enumerates p**4 matrices; p must be <= {GL2_MAX_PRIME}")
    rows = kernels.gl_structure_rows(p, 2)
    return frozenset(_structure_rows_from_counts(row) for row in rows)


def gln_estimated_steps(p: int, dim: int) -> int:
    """Cost model for gln_oracle: decode/eliminate every candidate matrix,
    then walk p**dim points for each invertible one."""
    npts = p**dim
    total = p ** (dim * dim)
    invertible = 1
    for i in range(dim):
        invertible *= npts - p**i
    return total * dim**3 + invertible * npts * dim**2


def gln_oracle(p: int, dim: int, budget: int | None = None) -> frozenset[CycleStructure]:
    """Brute-force structures of invertible dim x dim matrices over Z_p
    acting on p**dim points. Refuses (BudgetExceededError) when the
    estimated step count exceeds the budget."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if budget is None:
        budget = oracle_budget()
    est = gln_estimated_steps(p, dim)
    if est > budget:
        raise BudgetExceededError(
            f"gln_oracle({p}, {dim}) is estimated at {est} steps, over the "
            f"budget of {budget}; raise {BUDGET_ENV} to allow it"
        )
    rows = kernels.gl_structure_rows(p, dim)
    return frozenset(_structure_rows_from_counts(row) for row in rows)


def check_auto_p2(perm: Permutation, p: int) -> bool:
    """Whether the permutation of p*p points has the cycle structure of an
    automorphism of Z_p x Z_p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if len(perm) != p * p:
        raise ValueError(f"permutation is on {len(perm)} points, expected {p * p}")
    return structure_of(perm) in p2_structures(p)


def _fp2_images(p: int, entries) -> list[int]:
    """Permutation of point indices i = x + p*y under the matrix action."""
    (a, b), (c, d) = entries
    out = []
    for i in range(p * p):
        x, y = i % p, i // p
        out.append((a * x + b * y) % p + p * ((c * x + d * y) % p))
    return out


@lru_cache(maxsize=None)
def _smallest_primitive_root(p: int) -> int:
    for g in range(1, p):
        if mult_order(g, p) == p - 1:
            return g
    raise AssertionError("unreachable: Z_p always has a primitive root")


@lru_cache(maxsize=None)
def _quadratic_field(p: int) -> tuple[int, int, tuple[int, int]]:
    """Lexicographically smallest irreducible monic x**2 + b*x + c over
    Z_p, and the smallest generator (u, v) = u + v*x of the multiplicative
    group of the degree-2 extension, ordered by index u + p*v."""
    b = c = -1
    for b_ in range(p):
        for c_ in range(p):
            if all((t * t + b_ * t + c_) % p for t in range(p)):
                b, c = b_, c_
                break
        if b >= 0:
            break
    order = p * p - 1
    prime_parts = [q for q, _ in factorize(order)]
    for idx in range(1, p * p):
        cand = (idx % p, idx // p)
        if all(_fp2_pow(cand, order // q, p, b, c) != (1, 0) for q in prime_parts):
            return b, c, cand
    raise AssertionError("unreachable: the extension field group is cyclic")


def _fp2_mul(s, t, p: int, b: int, c: int) -> tuple[int, int]:
    # (s0 + s1*x)(t0 + t1*x) with x**2 = -b*x - c
    s0, s1 = s
    t0, t1 = t
    hi = s1 * t1
    return ((s0 * t0 - c * hi) % p, (s0 * t1 + s1 * t0 - b * hi) % p)


def _fp2_pow(base, e: int, p: int, b: int, c: int) -> tuple[int, int]:
    result = (1, 0)
    while e:
        if e & 1:
            result = _fp2_mul(result, base, p, b, c)
        base = _fp2_mul(base, base, p, b, c)
        e >>= 1
    return result


def _p2_recipes(p: int):
    """Deterministic (structure, matrix entries) pairs covering every
    admissible structure for Z_p x Z_p: scalars, distinct-eigenvalue
    diagonals, single-eigenvalue Jordan blocks, and multiplication by a
    degree-2 field extension element of each order not dividing p - 1."""
    g = _smallest_primitive_root(p)
    unit_divs = divisors(p - 1)
    recipes = []

    def predict(rows):
        return canonicalize(rows)

    for d in unit_divs:  # scalar alpha of order d: every nonzero orbit len d
        alpha = pow(g, (p - 1) // d, p)
        recipes.append(
            (
                predict([(d, (p * p - 1) // d), (1, 1)]),
                ((alpha, 0), (0, alpha)),
            )
        )
    for i, d1 in enumerate(unit_divs):  # diag(alpha, beta), distinct orders
        for d2 in unit_divs[i + 1:]:
            a1 = pow(g, (p - 1) // d1, p)
            a2 = pow(g, (p - 1) // d2, p)
            m = lcm(d1, d2)
            recipes.append(
                (
                    predict(
                        [
                            (m, (p - 1) ** 2 // m),
                            (d1, (p - 1) // d1),
                            (d2, (p - 1) // d2),
                            (1, 1),
                        ]
                    ),
                    ((a1, 0), (0, a2)),
                )
            )
    for d in unit_divs:  # Jordan block around an eigenvalue of order d
        alpha = pow(g, (p - 1) // d, p)
        recipes.append(
            (
                predict([(p * d, (p - 1) // d), (d, (p - 1) // d), (1, 1)]),
                ((alpha, 1), (0, alpha)),
            )
        )
    ext_orders = [d for d in divisors(p * p - 1) if (p - 1) % d != 0]
    if ext_orders:
        b, c, gen = _quadratic_field(p)
        for d in ext_orders:  # multiplication by a field element of order d
            w0, w1 = _fp2_pow(gen, (p * p - 1) // d, p, b, c)
            entries = ((w0, (-c * w1) % p), (w1, (w0 - b * w1) % p))
            recipes.append((predict([(d, (p * p - 1) // d), (1, 1)]), entries))
    return recipes


def p2_matrix_for_structure(p: int, cs: CycleStructure) -> FpMatrix2:
    """An invertible 2x2 matrix over Z_p whose action on the p*p points has
    exactly the requested structure; NotRealizableError when inadmissible.
    The chosen matrix is re-verified by walking its actual orbits."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p > P2_MAX_PRIME:
        raise ValueError(f"p must be <= {P2_MAX_PRIME}, got {p}")
    for predicted, entries in _p2_recipes(p):
        if predicted == cs:
            got = structure_of(Permutation(tuple(_fp2_images(p, entries))))
            if got != cs:
                raise RuntimeError(
                    f"recipe produced {format_structure(got)} instead of "
                    f"{format_structure(cs)}"
                )
            return FpMatrix2(p, entries)
    raise NotRealizableError(
        f"structure {format_structure(cs)} does not occur among automorphisms "
        f"of Z_{p} x Z_{p}"
    )


def realize_p2(perm: Permutation, p: int) -> P2Witness:
    """Explicit witness that the permutation of p*p points is an
    automorphism of Z_p x Z_p: a matrix and a relabeling onto vector pairs
    with labeling[f(a)] = matrix * labeling[a] for every point a."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if len(perm) != p * p:
        raise ValueError(f"permutation is on {len(perm)} points, expected {p * p}")
    cs = structure_of(perm)
    if cs not in p2_structures(p):
        raise NotRealizableError(
            f"structure {format_structure(cs)} does not occur among "
            f"automorphisms of Z_{p} x Z_{p}"
        )
    fm = p2_matrix_for_structure(p, cs)
    model = _fp2_images(p, fm.entries)
    point = [0] * len(perm)
    for ours, theirs in zip(_cycles_ascending(perm.images), _cycles_ascending(model)):
        for a, x in zip(ours, theirs):
            point[a] = x
    labeling = tuple((x % p, x // p) for x in point)
    witness = P2Witness(p, fm, labeling)
    _verify_p2_witness(perm, witness)
    return witness


def _verify_p2_witness(perm: Permutation, w: P2Witness) -> None:
    p = w.p
    (a, b), (c, d) = w.matrix.entries
    if sorted(x + p * y for x, y in w.labeling) != list(range(p * p)):
        raise RuntimeError("witness labeling is not a bijection")
    for pt in range(p * p):
        x, y = w.labeling[pt]
        if w.labeling[perm(pt)] != ((a * x + b * y) % p, (c * x + d * y) % p):
            raise RuntimeError("witness failed verification")
