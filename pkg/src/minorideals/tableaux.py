"""Minors, shapes and bitableaux of a generic m x n matrix.

A minor ``[a_1 .. a_t | b_1 .. b_t]`` is the determinant of the submatrix on
rows ``a`` and columns ``b``.  A bitableau is a product of minors; it is stored
as the multiset of its factors in canonical order (size descending, then
lexicographic), so two products that agree as elements of the ring up to
commuting factors compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    DegreeBoundExceeded,
    IndexOutOfRange,
    InvalidShape,
    LengthMismatch,
    NonIncreasingIndices,
    ParseError,
    ShapeExceedsAmbient,
)

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True)
class Shape:
    """Weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise InvalidShape(f"shape parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidShape(f"shape must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Shape":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad shape {text!r}") from exc

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(map(str, self.parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part accessor, 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose(self) -> "Shape":
        if not self.parts:
            return Shape(())
        return Shape(tuple(sum(1 for s in self.parts if s >= j)
                           for j in range(1, self.parts[0] + 1)))

    def components(self) -> list[tuple[int, int]]:
        """Pairs (t_i, e_i): distinct parts t_1 > .. > t_u, e_i = max{j : s_j = t_i}."""
        out = []
        for j, s in enumerate(self.parts, start=1):
            if out and out[-1][0] == s:
                out[-1] = (s, j)
            else:
                out.append((s, j))
        return out

    def check_ambient(self, m: int, n: int) -> None:
        if self.parts and self.parts[0] > min(m, n):
            raise ShapeExceedsAmbient(
                f"part {self.parts[0]} exceeds min(m, n) = {min(m, n)}")


def partitions(total: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` with parts at most ``max_part``, in reverse lex order."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


@total_ordering
@dataclass(frozen=True)
class Minor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __len__(self):
        return len(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def _key(self):
        return (-len(self.rows), self.rows, self.cols)

    def __lt__(self, other):
        # canonical total order used for sorting factors, not the minor partial order
        return self._key() < other._key()

    def __str__(self):
        if not self.rows:
            return "[ | ]"
        return "[{} | {}]".format(" ".join(map(str, self.rows)),
                                  " ".join(map(str, self.cols)))

    __repr__ = __str__


def make_minor(rows: Sequence[int], cols: Sequence[int],
               m: int | None = None, n: int | None = None) -> Minor:
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise LengthMismatch(f"{len(rows)} row indices vs {len(cols)} column indices")
    for idx, bound, name in ((rows, m, "row"), (cols, n, "column")):
        if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
            raise NonIncreasingIndices(f"{name} indices not strictly increasing: {idx}")
        if idx and (idx[0] < 1 or (bound is not None and idx[-1] > bound)):
            raise IndexOutOfRange(f"{name} index out of range in {idx}")
    return Minor(rows, cols)


def minor_leq(a: Minor, b: Minor) -> bool:
    """The minor partial order: |a| >= |b| and entrywise a <= b on b's positions."""
    if len(a) < len(b):
        return False
    return (all(x <= y for x, y in zip(a.rows, b.rows))
            and all(x <= y for x, y in zip(a.cols, b.cols)))


@dataclass(frozen=True)
class Bitableau:
    factors: tuple[Minor, ...] = ()

    def __post_init__(self):
        facs = tuple(sorted(f for f in self.factors if len(f)))
        object.__setattr__(self, "factors", facs)

    @classmethod
    def of(cls, *pairs) -> "Bitableau":
        """Bitableau.of(([1, 2], [1, 3]), ([1], [2])) builds [1 2 | 1 3]*[1 | 2]."""
        return cls(tuple(make_minor(r, c) for r, c in pairs))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __lt__(self, other):
        return self.factors < other.factors

    def __mul__(self, other: "Bitableau") -> "Bitableau":
        return Bitableau(self.factors + other.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(map(str, self.factors))

    __repr__ = __str__

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(f) for f in self.factors))

    @property
    def degree(self) -> int:
        return sum(len(f) for f in self.factors)

    @property
    def left(self) -> list[list[int]]:
        return [list(f.rows) for f in self.factors]

    @property
    def right(self) -> list[list[int]]:
        return [list(f.cols) for f in self.factors]

    def bidegree(self, m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        rows, cols = [0] * m, [0] * n
        for f in self.factors:
            for a in f.rows:
                rows[a - 1] += 1
            for b in f.cols:
                cols[b - 1] += 1
        return tuple(rows), tuple(cols)

    @classmethod
    def from_tableaux(cls, left, right) -> "Bitableau":
        return cls(tuple(Minor(tuple(a), tuple(b)) for a, b in zip(left, right)))


def is_standard(d: Bitableau) -> bool:
    return all(minor_leq(d[i], d[i + 1]) for i in range(len(d) - 1))


def contains_superstandard(sigma: Bitableau, s: Shape,
                           m: int | None = None, n: int | None = None) -> bool:
    """Row i of sigma starts with 1, 2, .., s_i for every part s_i of ``s``."""
    if m is not None and n is not None:
        s.check_ambient(m, n)
    if len(sigma) < len(s):
        return False
    for delta, si in zip(sigma, s):
        if len(delta) < si or delta.rows[:si] != tuple(range(1, si + 1)):
            return False
    return True


def _fillings(shape: tuple[int, ...], content: Sequence[int],
              budget: list[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Tableaux of ``shape`` with strictly increasing rows, weakly increasing
    columns and value multiplicities ``content`` (values 1..len(content))."""
    remaining = list(content)

    def rec(i, above):
        if i == len(shape):
            if budget[0] <= 0:
                raise DegreeBoundExceeded("tableau enumeration cap exceeded")
            budget[0] -= 1
            yield ()
            return
        avail = [v + 1 for v, c in enumerate(remaining) if c > 0]
        for row in combinations(avail, shape[i]):
            if above is not None and any(x < y for x, y in zip(row, above)):
                continue
            for v in row:
                remaining[v - 1] -= 1
            # rows below fit only if enough entries are left
            if sum(remaining) >= sum(shape[i + 1:]):
                for rest in rec(i + 1, row):
                    yield (row,) + rest
            for v in row:
                remaining[v - 1] += 1

    if sum(content) != sum(shape):
        return iter(())
    return rec(0, None)


def enumerate_standard(m: int, n: int, bidegree, cap: int = DEFAULT_ENUM_CAP) -> list[Bitableau]:
    """All standard bitableaux on an m x n matrix with the given content."""
    rows, cols = (tuple(bidegree[0]), tuple(bidegree[1]))
    if len(rows) != m or len(cols) != n:
        raise LengthMismatch("bidegree does not match m, n")
    if min(rows + cols, default=0) < 0:
        raise ValueError("bidegree must be nonnegative")
    if sum(rows) != sum(cols):
        return []
    budget = [cap]
    out = []
    for shape in partitions(sum(rows), min(m, n)):
        lefts = list(_fillings(shape, rows, budget))
        if not lefts:
            continue
        rights = list(_fillings(shape, cols, budget))
        for left in lefts:
            for right in rights:
                out.append(Bitableau.from_tableaux(left, right))
                if len(out) > cap:
                    raise DegreeBoundExceeded("standard bitableau enumeration cap exceeded")
    return out


def bidegrees(m: int, n: int, degree: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (row, column) content vectors of the given total degree."""
    row_parts = list(compositions(degree, m))
    col_parts = list(compositions(degree, n))
    for r in row_parts:
        for c in col_parts:
            yield r, c


def compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``k`` parts, lexicographically descending."""
    if k == 0:
        if total == 0:
            yield ()
        return
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


_MINOR_RE = re.compile(r"\[([^\]|]*)\|([^\]|]*)\]")


def parse_minor(text: str) -> Minor:
    mt = _MINOR_RE.fullmatch(text.strip())
    if not mt:
        raise ParseError(f"bad minor {text!r}")
    try:
        rows = [int(t) for t in re.split(r"[\s,]+", mt.group(1).strip()) if t]
        cols = [int(t) for t in re.split(r"[\s,]+", mt.group(2).strip()) if t]
    except ValueError as exc:
        raise ParseError(f"bad minor {text!r}") from exc
    return make_minor(rows, cols)


def parse_bitableau(text: str) -> Bitableau:
    text = text.strip()
    if text in ("", "1"):
        return Bitableau(())
    return Bitableau(tuple(parse_minor(part) for part in text.split("*")))
