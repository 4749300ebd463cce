"""Permutations of {0..n-1}, canonical cycle structures, orbit-length
descriptors, and their text formats.

Text formats (all round-trip):

* permutation: line 1 is n, line 2 is the n images, 0-indexed::

      4
      1 0 3 2

* cycle structure: space-separated ``length^count`` tokens with lengths
  strictly decreasing, e.g. ``6^1 2^1 1^1``.

* descriptor: ``lengths=6,15,30 chains=yes`` (lengths ascending, possibly
  empty; chains is yes/no).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


class ParseError(ValueError):
    """Malformed text input; carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation on zero points")
        seen = bytearray(n)
        for v in images:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError("images are not a bijection of 0..n-1")
            seen[v] = 1

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]


@dataclass(frozen=True)
class CycleStructure:
    """Canonical multiset of cycle lengths: rows (length, count) with
    lengths strictly decreasing and counts >= 1."""

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(l), int(c)) for l, c in self.rows)
        object.__setattr__(self, "rows", rows)
        prev = None
        for length, count in rows:
            if length < 1 or count < 1:
                raise ValueError(f"bad row ({length}, {count})")
            if prev is not None and length >= prev:
                raise ValueError("lengths must be strictly decreasing")
            prev = length

    @property
    def total(self) -> int:
        """Number of points moved or fixed: sum of length * count."""
        return sum(l * c for l, c in self.rows)

    def lengths(self) -> list[int]:
        return [l for l, _ in self.rows]

    def __str__(self) -> str:
        return format_structure(self)


@dataclass(frozen=True)
class ZStructureDescriptor:
    """Requested orbit behavior on the integer lattice: a set of finite
    cycle lengths, plus whether infinite chains are wanted."""

    lengths: frozenset[int]
    has_chains: bool

    def __post_init__(self):
        lengths = frozenset(int(v) for v in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "has_chains", bool(self.has_chains))
        for v in lengths:
            if v < 1:
                raise ValueError(f"cycle lengths must be >= 1, got {v}")


def canonicalize(rows: Iterable[tuple[int, int]]) -> CycleStructure:
    """Merge duplicate lengths, drop zero counts, sort lengths descending."""
    merged: dict[int, int] = {}
    for length, count in rows:
        length = int(length)
        count = int(count)
        if length < 1:
            raise ValueError(f"cycle length must be >= 1, got {length}")
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        if count:
            merged[length] = merged.get(length, 0) + count
    return CycleStructure(tuple(sorted(merged.items(), reverse=True)))


def structure_of(perm: Permutation) -> CycleStructure:
    """Cycle structure of a permutation (single pass, O(n))."""
    images = perm.images
    n = len(images)
    seen = bytearray(n)
    counts: dict[int, int] = {}
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = images[j]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return canonicalize(counts.items())


def _int_token(token: str, line: int, column: int) -> int:
    if not re.fullmatch(r"-?\d+", token):
        raise ParseError(f"not an integer: {token!r}", line, column)
    return int(token)


def parse_permutation(text: str) -> Permutation:
    """Parse the two-line permutation format; errors carry line/column."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < 2:
        raise ParseError("expected two lines: n, then n images", line=len(lines) + 1)
    if len(lines) > 2:
        raise ParseError("unexpected extra content", line=3)
    header = lines[0].strip()
    if not header:
        raise ParseError("missing point count", line=1)
    n = _int_token(header, 1, lines[0].index(header) + 1)
    if n < 1:
        raise ParseError(f"point count must be >= 1, got {n}", line=1, column=1)
    tokens = list(re.finditer(r"\S+", lines[1]))
    if len(tokens) != n:
        raise ParseError(f"expected {n} images, got {len(tokens)}", line=2, column=1)
    images = [_int_token(m.group(), 2, m.start() + 1) for m in tokens]
    for m, v in zip(tokens, images):
        if not 0 <= v < n:
            raise ParseError(f"image {v} out of range 0..{n - 1}", 2, m.start() + 1)
    try:
        return Permutation(tuple(images))
    except ValueError as exc:
        raise ParseError(str(exc), line=2, column=1) from None


def format_permutation(perm: Permutation) -> str:
    return f"{len(perm)}\n{' '.join(str(v) for v in perm.images)}\n"


_STRUCTURE_TOKEN = re.compile(r"(\d+)\^(\d+)")


def parse_structure(text: str) -> CycleStructure:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty structure")
    rows = []
    for pos, token in enumerate(tokens, start=1):
        m = _STRUCTURE_TOKEN.fullmatch(token)
        if not m:
            raise ParseError(f"malformed token {token!r} (want length^count)", line=1, column=pos)
        length, count = int(m.group(1)), int(m.group(2))
        if length < 1 or count < 1:
            raise ParseError(f"token {token!r} needs length and count >= 1", line=1, column=pos)
        if rows and length >= rows[-1][0]:
            raise ParseError("lengths must be strictly decreasing", line=1, column=pos)
        rows.append((length, count))
    return CycleStructure(tuple(rows))


def format_structure(cs: CycleStructure) -> str:
    return " ".join(f"{l}^{c}" for l, c in cs.rows)


def parse_descriptor(text: str) -> ZStructureDescriptor:
    fields = text.split()
    if len(fields) != 2 or not fields[0].startswith("lengths=") or not fields[1].startswith("chains="):
        raise ParseError("expected 'lengths=... chains=yes|no'")
    body = fields[0][len("lengths="):]
    lengths = []
    if body:
        for part in body.split(","):
            if not re.fullmatch(r"\d+", part):
                raise ParseError(f"bad length {part!r}")
            lengths.append(int(part))
    flag = fields[1][len("chains="):]
    if flag not in ("yes", "no"):
        raise ParseError(f"bad chains flag {flag!r} (want yes or no)")
    try:
        return ZStructureDescriptor(frozenset(lengths), flag == "yes")
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_descriptor(d: ZStructureDescriptor) -> str:
    body = ",".join(str(v) for v in sorted(d.lengths))
    return f"lengths={body} chains={'yes' if d.has_chains else 'no'}"
