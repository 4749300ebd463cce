"""Hot counting kernels behind the exhaustive oracles.

Two interchangeable backends run the same function bodies: plain Python
over numpy arrays, and the numba-compiled version of exactly those bodies.
``AUTOREAL_BACKEND=numpy`` forces the uncompiled path, ``=numba`` requires
the compiled one; unset, numba is used when importable. The numba import
and JIT happen lazily on first kernel call, never at module import, so
command startup stays cheap.

All kernel arithmetic is int64. Inputs are range-checked by the callers
(moduli <= 1e6, fields with p**dim points small enough to enumerate), so
no intermediate can approach 2**63.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

BACKEND_ENV = "AUTOREAL_BACKEND"

_MAX_UNIQUE = 4096


def _cycle_counts(images):
    """counts[L] = number of cycles of length L in the permutation."""
    n = images.shape[0]
    seen = np.zeros(n, np.uint8)
    counts = np.zeros(n + 1, np.int64)
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while seen[j] == 0:
            seen[j] = 1
            j = images[j]
            length += 1
        counts[length] += 1
    return counts


def _unit_cycle_counts(n, k):
    """Cycle-length counts of x -> k*x mod n on {0..n-1}."""
    images = (np.arange(n, dtype=np.int64) * k) % n
    seen = np.zeros(n, np.uint8)
    counts = np.zeros(n + 1, np.int64)
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while seen[j] == 0:
            seen[j] = 1
            j = images[j]
            length += 1
        counts[length] += 1
    return counts


def _gl_structure_rows(p, dim, out):
    """Enumerate every invertible dim x dim matrix over Z_p and collect the
    distinct cycle-length count vectors of its action on the p**dim points.

    ``out`` is a preallocated (max_unique, p**dim + 1) int64 array. Returns
    the number of distinct rows written, or -1 if out was too small.
    """
    npts = p**dim
    total = p ** (dim * dim)
    mat = np.empty((dim, dim), np.int64)
    work = np.empty((dim, dim), np.int64)
    digits = np.empty(dim, np.int64)
    images = np.empty(npts, np.int64)
    seen = np.empty(npts, np.uint8)
    counts = np.empty(npts + 1, np.int64)
    nuniq = 0
    for code in range(total):
        c = code
        for r in range(dim):
            for s in range(dim):
                mat[r, s] = c % p
                c //= p
        # invertibility: Gaussian elimination mod p on a scratch copy
        for r in range(dim):
            for s in range(dim):
                work[r, s] = mat[r, s]
        singular = False
        for col in range(dim):
            piv = -1
            for r in range(col, dim):
                if work[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                singular = True
                break
            if piv != col:
                for s in range(dim):
                    t = work[col, s]
                    work[col, s] = work[piv, s]
                    work[piv, s] = t
            # pivot inverse via Fermat: a**(p-2) mod p
            inv = 1
            base = work[col, col] % p
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for r in range(col + 1, dim):
                f = (work[r, col] * inv) % p
                if f != 0:
                    for s in range(col, dim):
                        work[r, s] = (work[r, s] - f * work[col, s]) % p
        if singular:
            continue
        # permutation of point indices under the matrix action
        for v in range(npts):
            t = v
            for r in range(dim):
                digits[r] = t % p
                t //= p
            img = 0
            mulp = 1
            for r in range(dim):
                acc = 0
                for s in range(dim):
                    acc += mat[r, s] * digits[s]
                img += (acc % p) * mulp
                mulp *= p
            images[v] = img
        # cycle-length counts
        for v in range(npts):
            seen[v] = 0
        for v in range(npts + 1):
            counts[v] = 0
        for start in range(npts):
            if seen[start]:
                continue
            length = 0
            j = start
            while seen[j] == 0:
                seen[j] = 1
                j = images[j]
                length += 1
            counts[length] += 1
        # linear-scan dedupe into out
        found = False
        for u in range(nuniq):
            same = True
            for v in range(npts + 1):
                if out[u, v] != counts[v]:
                    same = False
                    break
            if same:
                found = True
                break
        if not found:
            if nuniq >= out.shape[0]:
                return -1
            for v in range(npts + 1):
                out[nuniq, v] = counts[v]
            nuniq += 1
    return nuniq


_PY_IMPLS = {
    "cycle_counts": _cycle_counts,
    "unit_cycle_counts": _unit_cycle_counts,
    "gl_structure_rows": _gl_structure_rows,
}

_NUMBA_IMPLS: dict | None = None
_WARNED = False


def python_impls() -> dict:
    """The uncompiled kernel functions."""
    return dict(_PY_IMPLS)


def numba_impls() -> dict:
    """The numba-compiled kernels (compiled lazily, cached on disk)."""
    global _NUMBA_IMPLS
    if _NUMBA_IMPLS is None:
        from numba import njit

        _NUMBA_IMPLS = {name: njit(cache=True)(fn) for name, fn in _PY_IMPLS.items()}
    return _NUMBA_IMPLS


def active_backend() -> str:
    """Resolve the backend name from the environment: 'numba' or 'numpy'."""
    choice = os.environ.get(BACKEND_ENV, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        return "numba"
    if choice:
        _warn_once(f"ignoring unknown {BACKEND_ENV}={choice!r}")
    try:
        import numba  # noqa: F401
    except ImportError:
        _warn_once("numba is not importable; falling back to the numpy backend")
        return "numpy"
    return "numba"


def _warn_once(message: str) -> None:
    global _WARNED
    if not _WARNED:
        warnings.warn(message, RuntimeWarning, stacklevel=3)
        _WARNED = True


def _impls() -> dict:
    if active_backend() == "numba":
        return numba_impls()
    return _PY_IMPLS


def cycle_counts(images) -> np.ndarray:
    """Cycle-length counts of an arbitrary permutation given as an image
    array; counts[L] = number of cycles of length L."""
    arr = np.ascontiguousarray(images, dtype=np.int64)
    return _impls()["cycle_counts"](arr)


def unit_cycle_counts(n: int, k: int) -> np.ndarray:
    """Cycle-length counts of x -> k*x mod n. Caller guarantees n <= 1e6 so
    k*x stays far below 2**63."""
    return _impls()["unit_cycle_counts"](n, k % n)


def gl_structure_rows(p: int, dim: int, max_unique: int = _MAX_UNIQUE) -> np.ndarray:
    """Distinct cycle-length count vectors over all invertible dim x dim
    matrices mod p; one row per distinct vector, row[L] = cycle count."""
    out = np.zeros((max_unique, p**dim + 1), np.int64)
    nuniq = _impls()["gl_structure_rows"](p, dim, out)
    if nuniq < 0:
        raise RuntimeError(f"more than {max_unique} distinct structures; raise max_unique")
    return out[:nuniq].copy()
