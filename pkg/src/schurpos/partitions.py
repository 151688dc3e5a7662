"""Partitions, skew shapes and the order-theoretic predicates built on them.

Diagrams follow the French convention: row 1 is the bottom row, cells are
``(row, column)`` pairs with both coordinates starting at 1.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadInputError,
    BoundExceededError,
    EmptyPartitionError,
    SumMismatchError,
)

WORD_MAX = 2**63 - 1
MAX_TOTAL_SIZE = int(os.environ.get("SCHURPOS_MAX_SIZE", "64"))


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; trailing zeros are dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(x) for x in parts)
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        parts = parts[:n]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise BadInputError(f"parts must be weakly decreasing: {parts}")
        if parts and (parts[-1] < 0 or parts[0] > WORD_MAX):
            raise BadInputError(f"parts out of range: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def at(self, i: int) -> int:
        """0-based part lookup that reads 0 past the end."""
        return self[i] if i < len(self) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


EMPTY = Partition()


@lru_cache(maxsize=None)
def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def conjugate(p: Sequence[int]) -> Partition:
    return Partition(_conjugate(tuple(Partition(p))))


def union(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Decreasing rearrangement of the parts of both partitions."""
    return Partition(sorted((x for x in (*p, *q) if x), reverse=True))


def partition_sum(p: Sequence[int], q: Sequence[int]) -> Partition:
    return Partition(a + b for a, b in zip_longest(p, q, fillvalue=0))


def sorted_desc(c: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(c, reverse=True))


def add_to_first(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition((1,))
    return Partition((p[0] + 1,) + tuple(p[1:]))


def dominance_leq(p: Sequence[int], q: Sequence[int]) -> bool:
    """Prefix-sum dominance; also accepts weakly decreasing integer sequences."""
    p, q = tuple(p), tuple(q)
    for seq in (p, q):
        if any(a < b for a, b in zip(seq, seq[1:])):
            raise BadInputError(f"not weakly decreasing: {seq}")
    if sum(p) != sum(q):
        raise SumMismatchError(f"|{p}| != |{q}|")
    pp = accumulate(p)
    qq = accumulate(q)
    for a, b in zip_longest(pp, qq):
        # past its end a prefix sum stays at the common total
        a = sum(p) if a is None else a
        b = sum(q) if b is None else b
        if a > b:
            return False
    return True


def is_subpartition(a: Sequence[int], b: Sequence[int]) -> bool:
    return len(a) <= len(b) and all(x <= y for x, y in zip(a, b))


def pair_contained(small: tuple, big: tuple) -> bool:
    """(alpha, beta) is contained in (mu, nu) componentwise."""
    return is_subpartition(small[0], big[0]) and is_subpartition(small[1], big[1])


def inversions(a: Sequence[int]) -> int:
    """Pairs i < j with a_i > a_j."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


@dataclass(frozen=True)
class SkewShape:
    """An explicit outer/inner description; equality is description equality."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not is_subpartition(self.inner, self.outer):
            raise BadInputError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_span(self, i: int) -> tuple[int, int]:
        """Half-open column range of row ``i`` (0-based)."""
        return self.inner.at(i), self.outer.at(i)

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i + 1, j + 1)
            for i in range(len(self.outer))
            for j in range(self.inner.at(i), self.outer[i])
        )

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __str__(self) -> str:
        if not self.inner:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def row_lengths(s: SkewShape) -> Partition:
    return Partition(sorted((s.outer.at(i) - s.inner.at(i) for i in range(len(s.outer))), reverse=True))


def col_lengths(s: SkewShape) -> Partition:
    return row_lengths(s.conjugate())


@dataclass(frozen=True)
class ShapeClass:
    rectangle: bool
    lines: frozenset[int]  # k such that the rectangle has k rows or k columns
    fat_hook: bool
    near_rectangle: bool
    hook: bool

    def is_k_line(self, k: int) -> bool:
        return self.rectangle and k in self.lines


def _is_rectangle(p: Sequence[int]) -> bool:
    return len(set(p)) <= 1


def classify_shape(p: Sequence[int]) -> ShapeClass:
    p = Partition(p)
    if not p:
        raise EmptyPartitionError("classify_shape needs a non-empty partition")
    rect = _is_rectangle(p)
    fat = len(set(p)) == 2
    near = False
    if fat:
        pc = conjugate(p)
        near = any(_is_rectangle(p[:i] + p[i + 1:]) for i in range(len(p))) or any(
            _is_rectangle(pc[:j] + pc[j + 1:]) for j in range(len(pc))
        )
    return ShapeClass(
        rectangle=rect,
        lines=frozenset((len(p), p[0])) if rect else frozenset(),
        fat_hook=fat,
        near_rectangle=near,
        hook=p.at(1) <= 1,
    )


@dataclass(frozen=True)
class StripKind:
    horizontal_strip: bool
    vertical_strip: bool
    weak_ribbon: bool
    ribbon: bool
    skewed_hook: bool


def _edge_connected(cells: frozenset) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def strip_kind(s: SkewShape) -> StripKind:
    cells = s.cells()
    outer_c, inner_c = conjugate(s.outer), conjugate(s.inner)
    horizontal = all(outer_c[j] - inner_c.at(j) <= 1 for j in range(len(outer_c)))
    vertical = all(s.outer[i] - s.inner.at(i) <= 1 for i in range(len(s.outer)))
    weak = not any(
        (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
        for (i, j) in cells
    )

    def hook(p):
        return bool(p) and p.at(1) <= 1

    return StripKind(
        horizontal_strip=horizontal,
        vertical_strip=vertical,
        weak_ribbon=weak,
        ribbon=weak and _edge_connected(cells),
        skewed_hook=hook(s.outer) and hook(s.inner),
    )


def is_minimal_pair(s: SkewShape) -> bool:
    mu, alpha = s.outer, s.inner
    if any(alpha[i] >= mu[i] for i in range(len(alpha))):
        return False
    mu_c, alpha_c = conjugate(mu), conjugate(alpha)
    return all(alpha_c[j] < mu_c[j] for j in range(len(alpha_c)))


# --- enumeration -------------------------------------------------------------


def check_bound(n: int) -> None:
    if n > MAX_TOTAL_SIZE:
        raise BoundExceededError(f"size {n} exceeds the configured limit {MAX_TOTAL_SIZE}")


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order (largest first)."""
    check_bound(n)
    parts = _partitions(n, n if max_part is None else max_part)
    return [Partition(p) for p in parts if max_length is None or len(p) <= max_length]


def subpartitions(p: Sequence[int]) -> Iterator[Partition]:
    """Every alpha contained in p (including the empty one and p itself)."""
    p = tuple(p)

    def rec(i, cap):
        if i == len(p):
            yield ()
            return
        yield ()
        for a in range(1, min(cap, p[i]) + 1):
            for rest in rec(i + 1, a):
                yield (a,) + rest

    for a in rec(0, p[0] if p else 0):
        yield Partition(a)


def minimal_skew_shapes(size: int) -> list[SkewShape]:
    """All minimal-pair descriptions with the given number of cells."""
    check_bound(size)
    out = []

    # every row holds a cell; a column whose inner part ends at row i needs
    # row i+1 to reach it, so dropping the inner part forces the outer part up
    def rec(outer, inner, left):
        if left == 0:
            if not inner or inner[-1] == 0:
                out.append(SkewShape(Partition(outer), Partition(inner)))
            return
        if outer:
            a_hi, m_hi = inner[-1], outer[-1]
        else:
            a_hi, m_hi = size - 1, 2 * size - 1
        for a in range(min(a_hi, m_hi - 1), -1, -1):
            m_lo = a + 1
            if inner and a < inner[-1]:
                m_lo = max(m_lo, inner[-1])
            for m in range(m_lo, min(m_hi, a + left) + 1):
                rec(outer + [m], inner + [a], left - (m - a))

    rec([], [], size)
    return sorted(out, key=lambda s: (s.outer, s.inner), reverse=True)


# --- text format -------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "()", "-", "0", "empty"):
        return EMPTY
    try:
        return Partition(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise BadInputError(f"cannot parse partition {text!r}") from exc


def parse_skew(text: str) -> SkewShape:
    outer, _, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner))
