"""Littlewood-Richardson fillings, coefficients and skew Schur expansions."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from ._kernels import run_lr
from .errors import SizeMismatchError
from .partitions import EMPTY, Partition, SkewShape, is_subpartition
from .vector import SchurVector

MEMO_SIZE = int(os.environ.get("SCHURPOS_MEMO_SIZE", "200000")) or None


@dataclass(frozen=True)
class LRFilling:
    """Entries of a skew shape, row by row from the bottom, each row left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def entries(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, row in enumerate(self.rows):
            start = self.shape.inner.at(i)
            for k, v in enumerate(row):
                out[(i + 1, start + k + 1)] = v
        return out

    def content(self) -> Partition:
        counts: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        return Partition(counts.get(i, 0) for i in range(1, max(counts, default=0) + 1))


def reading_word(f: LRFilling) -> tuple[int, ...]:
    """Bottom row first, each row read right to left."""
    return tuple(v for row in f.rows for v in reversed(row))


def is_lattice(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for a in word:
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def enumerate_lr_fillings(shape: SkewShape, content: Sequence[int]) -> list[LRFilling]:
    """All LR fillings of ``shape`` with the given content, ordered by reading word."""
    content = Partition(content)
    if shape.size != content.size:
        raise SizeMismatchError(f"shape has {shape.size} cells, content has {content.size}")
    nrows = len(shape.outer)
    spans = [shape.row_span(i) for i in range(nrows)]
    # cells in reading order: row by row from the bottom, right to left
    order = [(i, j) for i in range(nrows) for j in range(spans[i][1] - 1, spans[i][0] - 1, -1)]
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (len(content) + 2)
    found: list[LRFilling] = []

    def rec(k: int) -> None:
        if k == len(order):
            rows = tuple(tuple(grid[(i, j)] for j in range(*spans[i])) for i in range(nrows))
            found.append(LRFilling(shape, rows))
            return
        i, j = order[k]
        # right neighbour is already placed (same row, read earlier)
        hi = grid.get((i, j + 1), len(content))
        below = grid.get((i - 1, j), 0) if i > 0 and j >= spans[i - 1][0] else 0
        for v in range(max(below + 1, 1), hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            rec(k + 1)
            counts[v] -= 1
            del grid[(i, j)]

    rec(0)
    return found


@lru_cache(maxsize=MEMO_SIZE)
def _coefficient(theta: Partition, mu: Partition, nu: Partition) -> int:
    if not nu:
        return int(theta == mu)
    R, C = len(theta), len(nu)
    if C > R:
        return 0
    n, _ = run_lr(mu.padded(R), theta, nu, R, C, True, True, want_records=False)
    return n


def lr_coefficient(theta: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    theta, mu, nu = Partition(theta), Partition(mu), Partition(nu)
    if theta.size != mu.size + nu.size or not is_subpartition(mu, theta) or not is_subpartition(nu, theta):
        return 0
    return _coefficient(theta, mu, nu)


def _aggregate(recs) -> dict[Partition, int]:
    acc: dict[tuple, int] = {}
    for row in map(tuple, recs.tolist()):
        acc[row] = acc.get(row, 0) + 1
    return {Partition(k): c for k, c in acc.items()}


@lru_cache(maxsize=MEMO_SIZE)
def _product_terms(mu: Partition, nu: Partition) -> dict[Partition, int]:
    if not nu:
        return {mu: 1}
    if not mu:
        return {nu: 1}
    R, C = len(mu) + len(nu), len(nu)
    _, recs = run_lr(mu.padded(R), (0,) * R, nu, R, C, False, True)
    return _aggregate(recs)


def product_terms(mu: Sequence[int], nu: Sequence[int]) -> dict[Partition, int]:
    """Schur expansion of s_mu * s_nu as a plain dict (shared, do not mutate)."""
    mu, nu = Partition(mu), Partition(nu)
    # fewer content letters keeps the search shallow
    if (nu.size, len(nu), nu) > (mu.size, len(mu), mu):
        mu, nu = nu, mu
    return _product_terms(mu, nu)


@lru_cache(maxsize=MEMO_SIZE)
def _skew_terms(outer: Partition, inner: Partition) -> dict[Partition, int]:
    if not inner:
        return {outer: 1}
    R = len(outer)
    _, recs = run_lr(inner.padded(R), outer, (0,) * R, R, R, True, False)
    return _aggregate(recs)


def skew_schur_expand(s: SkewShape) -> SchurVector:
    return SchurVector._raw(dict(_skew_terms(s.outer, s.inner)))


def star_concatenate(a: SkewShape, b: SkewShape) -> SkewShape:
    """Place ``a`` bottom-right and ``b`` top-left so the pieces share no row or column."""
    if a.size == 0:
        return b
    if b.size == 0:
        return a
    shift = b.outer[0]
    outer = [x + shift for x in a.outer] + list(b.outer)
    inner = [x + shift for x in a.inner.padded(len(a.outer))] + list(b.inner)
    return SkewShape(Partition(outer), Partition(inner))
