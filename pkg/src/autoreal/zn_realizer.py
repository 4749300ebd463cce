"""Realize prescribed orbit lengths on the integer lattice with a single
unimodular matrix.

A descriptor (a finite set of cycle lengths, plus optionally infinite
chains) is achievable exactly when the length set is closed under least
common multiples and the whole thing describes a countably infinite set.
The witness is block-diagonal: one companion block of the cyclotomic
polynomial per requested length (its vectors all have that exact period),
plus a Fibonacci-style block with no periodic vectors at all when chains
are requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import NotRealizableError
from .intmat import (
    Matrix,
    block_diag,
    det,
    dims,
    identity,
    is_unimodular,
    mat_mul,
    mat_pow,
    mat_sub,
    mat_vec,
    matrix_to_json,
)
from .numtheory import divisors, lcm
from .poly import companion_matrix, cyclotomic_via_division
from .structures import ZStructureDescriptor, format_descriptor

CHAIN = "chain"


@dataclass(frozen=True)
class Violation:
    """One failed admissibility condition. condition 5 is lcm-closure
    (carries the offending pair and the missing value); condition 0 is the
    countable-infinity sanity check."""

    condition: int
    message: str
    pair: tuple[int, int] | None = None
    missing: int | None = None


@dataclass(frozen=True)
class Block:
    """One diagonal block of a realization: its label (a cycle length, or
    "chain"), offset into the matrix, and size."""

    label: int | str
    offset: int
    size: int


@dataclass(frozen=True)
class ZnRealization:
    descriptor: ZStructureDescriptor
    matrix: Matrix
    blocks: tuple[Block, ...]


def lcm_closure(lengths: Iterable[int]) -> frozenset[int]:
    """Smallest superset closed under pairwise least common multiples."""
    cur = set(int(v) for v in lengths)
    if not cur:
        raise ValueError("lcm_closure needs a nonempty set")
    for v in cur:
        if v < 1:
            raise ValueError(f"lengths must be >= 1, got {v}")
    while True:
        new = {lcm(a, b) for a in cur for b in cur} - cur
        if not new:
            return frozenset(cur)
        cur |= new


def validate_descriptor(d: ZStructureDescriptor) -> list[Violation]:
    """All admissibility violations; an empty list means realizable."""
    out = []
    if not d.lengths and not d.has_chains:
        out.append(
            Violation(0, "descriptor describes a single fixed point, not a countably infinite set")
        )
    lengths = sorted(d.lengths)
    for i, a in enumerate(lengths):
        for b in lengths[i + 1:]:
            m = lcm(a, b)
            if m not in d.lengths:
                out.append(
                    Violation(
                        5,
                        f"lengths {a} and {b} are present but lcm({a}, {b}) = {m} is missing",
                        pair=(a, b),
                        missing=m,
                    )
                )
    return out


def pure_cycle_matrix(n: int) -> Matrix:
    """A square integer matrix all of whose nonzero vectors have orbit
    length exactly n: the companion matrix of the n-th cyclotomic
    polynomial (1x1 identity for n = 1)."""
    if n < 1:
        raise ValueError(f"needs n >= 1, got {n}")
    if n == 1:
        return identity(1)
    return companion_matrix(cyclotomic_via_division(n))


def verify_pure_cycle(m: Matrix, n: int) -> bool:
    """Certify that m**n = I while m**d - I is invertible for every proper
    divisor d of n, i.e. every nonzero vector has period exactly n."""
    r, c = dims(m)
    if r != c:
        raise ValueError("needs a square matrix")
    if n < 1:
        raise ValueError(f"needs n >= 1, got {n}")
    if mat_pow(m, n) != identity(r):
        return False
    for d in divisors(n):
        if d < n and det(mat_sub(mat_pow(m, d), identity(r))) == 0:
            return False
    return True


def chain_block() -> Matrix:
    """2x2 unimodular block with no periodic vectors except zero; its
    powers hold the Fibonacci numbers, so m**k - I always has nonzero
    determinant."""
    return ((1, 1), (1, 0))


def verify_chain_block(m: Matrix, horizon: int) -> bool:
    """Certify det(m**k - I) != 0 for every 1 <= k <= horizon."""
    r, c = dims(m)
    if r != c:
        raise ValueError("needs a square matrix")
    if horizon < 1:
        raise ValueError(f"needs horizon >= 1, got {horizon}")
    power = identity(r)
    for _ in range(horizon):
        power = mat_mul(power, m)
        if det(mat_sub(power, identity(r))) == 0:
            return False
    return True


def classify_vector(m: Matrix, v: Sequence[int], lengths: Iterable[int]) -> int | str:
    """Orbit class of v under m, assuming the realized cycle lengths all
    divide l = lcm(lengths): the least period d | l when v is periodic,
    else "chain". The zero vector classifies as 1."""
    r, c = dims(m)
    if r != c or len(v) != r:
        raise ValueError("matrix must be square and match the vector length")
    ell = reduce(lcm, lengths, 1)
    v0 = tuple(int(x) for x in v)
    w = v0
    for t in range(1, ell + 1):
        w = mat_vec(m, w)
        if w == v0:
            return t if ell % t == 0 else CHAIN
    return CHAIN


def build_automorphism(d: ZStructureDescriptor) -> ZnRealization:
    """Unimodular block-diagonal witness for a valid descriptor: one pure
    cycle block per length (ascending) and a trailing chain block when
    requested. Raises NotRealizableError, listing every violated
    condition, when the descriptor is invalid."""
    violations = validate_descriptor(d)
    if violations:
        detail = "; ".join(v.message for v in violations)
        raise NotRealizableError(f"invalid descriptor {format_descriptor(d)}: {detail}")
    mats = []
    blocks = []
    offset = 0
    for n in sorted(d.lengths):
        b = pure_cycle_matrix(n)
        size = len(b)
        mats.append(b)
        blocks.append(Block(n, offset, size))
        offset += size
    if d.has_chains:
        b = chain_block()
        mats.append(b)
        blocks.append(Block(CHAIN, offset, 2))
        offset += 2
    m = block_diag(mats)
    _verify_realization(d, m, blocks)
    return ZnRealization(d, m, tuple(blocks))


def _verify_realization(d: ZStructureDescriptor, m: Matrix, blocks: list[Block]) -> None:
    if not is_unimodular(m):
        raise RuntimeError("realization matrix is not unimodular")
    n = len(m)
    lengths = sorted(d.lengths)
    horizon = 2 * max(lengths + [16])
    for blk in blocks:
        basis = tuple(1 if i == blk.offset else 0 for i in range(n))
        got = classify_vector(m, basis, lengths)
        if blk.label == CHAIN:
            sub = tuple(row[blk.offset:blk.offset + blk.size] for row in m[blk.offset:blk.offset + blk.size])
            if got != CHAIN or not verify_chain_block(sub, horizon):
                raise RuntimeError("chain block failed verification")
        elif got != blk.label:
            raise RuntimeError(
                f"block for length {blk.label} classifies as {got}"
            )


def realization_to_json(r: ZnRealization) -> dict:
    return {
        "descriptor": {
            "lengths": sorted(r.descriptor.lengths),
            "chains": r.descriptor.has_chains,
        },
        "matrix": matrix_to_json(r.matrix),
        "blocks": [
            {"label": str(b.label), "offset": b.offset, "size": b.size} for b in r.blocks
        ],
    }
