"""The dealing (tilde) operation on pairs, m-tuples and skew pairs."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .errors import BadArityError, BadInputError
from .partitions import (
    Partition,
    SkewShape,
    col_lengths,
    conjugate,
    dominance_leq,
    row_lengths,
    sorted_desc,
    union,
)

DEBUG = os.environ.get("SCHURPOS_DEBUG", "").lower() in ("1", "true", "yes")


def tilde_pair(mu: Sequence[int], nu: Sequence[int]) -> tuple[Partition, Partition]:
    """Deal the combined parts alternately: odd positions to the first, even to the second."""
    gamma = union(mu, nu)
    return Partition(gamma[0::2]), Partition(gamma[1::2])


def tilde_m(mus: Sequence[Sequence[int]], m: int) -> list[Partition]:
    if m < 2 or len(mus) != m:
        raise BadArityError(f"expected {m} >= 2 partitions, got {len(mus)}")
    gamma: list[int] = []
    for mu in mus:
        gamma.extend(x for x in mu if x)
    gamma.sort(reverse=True)
    gamma += [0] * (-len(gamma) % m)
    return [Partition(gamma[i::m]) for i in range(m)]


def tilde_by_columns(mu: Sequence[int], nu: Sequence[int]) -> tuple[Partition, Partition]:
    """Same result as :func:`tilde_pair`, computed by balancing column lengths."""
    mc, nc = conjugate(mu), conjugate(nu)
    width = max(len(mc), len(nc))
    sums = [mc.at(i) + nc.at(i) for i in range(width)]
    lam_c = Partition((s + 1) // 2 for s in sums)
    rho_c = Partition(s // 2 for s in sums)
    return conjugate(lam_c), conjugate(rho_c)


@dataclass(frozen=True)
class SkewPair:
    first: SkewShape
    second: SkewShape

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


def skew_tilde(p: SkewPair) -> SkewPair:
    lam, rho = tilde_pair(p.first.outer, p.second.outer)
    sigma, tau = tilde_pair(p.first.inner, p.second.inner)
    q = SkewPair(SkewShape(lam, sigma), SkewShape(rho, tau))
    if DEBUG and not check_column_def(p, q):
        raise AssertionError(f"dealing and column balancing disagree on {p}")
    return q


def _columns_ok(mu, nu, lam, rho) -> bool:
    mc, nc, lc, rc = (conjugate(x) for x in (mu, nu, lam, rho))
    width = max(len(mc), len(nc), len(lc), len(rc))
    for i in range(width):
        if lc.at(i) + rc.at(i) != mc.at(i) + nc.at(i):
            return False
        if lc.at(i) - rc.at(i) not in (0, 1):
            return False
    return True


def check_column_def(p: SkewPair, q: SkewPair) -> bool:
    """Whether ``q`` balances the columns of ``p``, outers and inners separately."""
    return _columns_ok(p.first.outer, p.second.outer, q.first.outer, q.second.outer) and _columns_ok(
        p.first.inner, p.second.inner, q.first.inner, q.second.inner
    )


def support_max(p: SkewPair) -> Partition:
    return conjugate(union(col_lengths(p.first), col_lengths(p.second)))


def support_min(p: SkewPair) -> Partition:
    return union(row_lengths(p.first), row_lengths(p.second))


def check_row_col_dominance(p: SkewPair) -> bool:
    q = skew_tilde(p)
    rows_ok = dominance_leq(
        union(row_lengths(q.first), row_lengths(q.second)),
        union(row_lengths(p.first), row_lengths(p.second)),
    )
    cols_ok = dominance_leq(
        union(col_lengths(q.first), col_lengths(q.second)),
        union(col_lengths(p.first), col_lengths(p.second)),
    )
    return rows_ok and cols_ok


def union_with_part(p: Sequence[int], d: int) -> Partition:
    """Insert one extra part ``d`` into a partition."""
    return union(p, (d,))


def resequence_dominance(gamma: Sequence[int], delta: Sequence[int], epsilon: Sequence[int]) -> bool:
    """Compare sorted(gamma + epsilon) against sorted(gamma + delta) in dominance order.

    ``gamma`` must be weakly decreasing, ``delta`` weakly increasing and
    ``epsilon`` a rearrangement of ``delta``; inputs breaking this are rejected
    rather than normalised.
    """
    gamma, delta, epsilon = tuple(gamma), tuple(delta), tuple(epsilon)
    if not len(gamma) == len(delta) == len(epsilon):
        raise BadInputError("sequences must have equal lengths")
    if any(a < b for a, b in zip(gamma, gamma[1:])):
        raise BadInputError(f"gamma is not weakly decreasing: {gamma}")
    if any(a > b for a, b in zip(delta, delta[1:])):
        raise BadInputError(f"delta is not weakly increasing: {delta}")
    if sorted(delta) != sorted(epsilon):
        raise BadInputError("epsilon is not a rearrangement of delta")
    by_delta = sorted_desc(g + d for g, d in zip(gamma, delta))
    by_eps = sorted_desc(g + e for g, e in zip(gamma, epsilon))
    return dominance_leq(by_delta, by_eps)
