"""Exact integer matrices: multiplication, binary powering, fraction-free
determinants, block assembly, and the JSON/text wire formats.

A matrix is a tuple of row tuples of Python ints. Nothing here can
overflow; the Bareiss determinant in particular grows intermediate minors
well past 64 bits on the larger companion blocks and relies on exact
bignum division.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    """Build a matrix from nested iterables, checking rectangularity."""
    out = tuple(tuple(int(v) for v in row) for row in rows)
    if not out or not out[0]:
        raise ValueError("matrix needs at least one row and one column")
    width = len(out[0])
    for row in out:
        if len(row) != width:
            raise ValueError("ragged rows")
    return out


def dims(a: Matrix) -> tuple[int, int]:
    return len(a), len(a[0])


def identity(n: int) -> Matrix:
    if n < 1:
        raise ValueError(f"identity needs n >= 1, got {n}")
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise ValueError(f"shape mismatch: {ra}x{ca} times {rb}x{cb}")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if dims(a) != dims(b):
        raise ValueError("shape mismatch")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if dims(a) != dims(b):
        raise ValueError("shape mismatch")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_vec(a: Matrix, v: Sequence[int]) -> Vector:
    r, c = dims(a)
    if len(v) != c:
        raise ValueError(f"shape mismatch: {r}x{c} times vector of length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    """a**k by binary exponentiation; k >= 0, a square."""
    r, c = dims(a)
    if r != c:
        raise ValueError("mat_pow needs a square matrix")
    if k < 0:
        raise ValueError(f"mat_pow needs k >= 0, got {k}")
    result = identity(r)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def det(a: Matrix) -> int:
    """Determinant by the Bareiss fraction-free elimination.

    Every division below is exact (the divisor is the previous pivot, a
    leading principal minor), so the result is the exact integer
    determinant.
    """
    r, c = dims(a)
    if r != c:
        raise ValueError("det needs a square matrix")
    n = r
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def is_unimodular(a: Matrix) -> bool:
    r, c = dims(a)
    return r == c and det(a) in (1, -1)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    """Square blocks assembled along the diagonal, zeros elsewhere."""
    if not blocks:
        raise ValueError("block_diag needs at least one block")
    sizes = []
    for b in blocks:
        r, c = dims(b)
        if r != c:
            raise ValueError("block_diag blocks must be square")
        sizes.append(r)
    n = sum(sizes)
    rows = []
    offset = 0
    for b, size in zip(blocks, sizes):
        for r in range(size):
            row = [0] * n
            row[offset:offset + size] = b[r]
            rows.append(tuple(row))
        offset += size
    return tuple(rows)


def matrix_to_json(a: Matrix) -> dict:
    r, c = dims(a)
    return {"rows": r, "cols": c, "entries": [list(row) for row in a]}


def matrix_from_json(obj) -> Matrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or set(obj) != {"rows", "cols", "entries"}:
        raise ValueError("matrix object needs exactly the keys rows, cols, entries")
    a = matrix(obj["entries"])
    if dims(a) != (obj["rows"], obj["cols"]):
        raise ValueError("entries do not match the declared shape")
    return a


def format_matrix(a: Matrix) -> str:
    """Entries right-aligned in columns wide enough for the widest entry."""
    width = max(len(str(v)) for row in a for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in a)
