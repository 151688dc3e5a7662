"""Jacobi-Trudi matrices, Pluecker expansions of their minors and exploded determinants.

Row and column indices in the public API are 1-based, matching the bracket
notation ``[5264][1378]`` used when printing Pluecker relations.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Sequence, TypeVar

from .algebra import ONE, multiply, schur
from .errors import (
    BadInputError,
    BadInterleavingError,
    NotDistinctError,
    PreconditionViolated,
)
from .partitions import Partition, inversions, partition_sum, union
from .tilde import tilde_pair
from .vector import ZERO, SchurVector

T = TypeVar("T")


@dataclass(frozen=True)
class JTRowSpec:
    """Row whose j-th entry (1-based) is h_{leading_index + j - 1}."""

    leading_index: int
    width: int

    def indices(self) -> tuple[int, ...]:
        return tuple(self.leading_index + j for j in range(self.width))


def jt_rows(mu: Sequence[int], p: int) -> list[JTRowSpec]:
    mu = Partition(mu)
    if p < len(mu):
        raise BadInputError(f"p={p} is shorter than {mu}")
    return [JTRowSpec(mu.at(i) - i, p) for i in range(p)]


def h_gamma_rows(gamma: Sequence[int], p: int) -> list[JTRowSpec]:
    """Rows of the 2p x p matrix stacking the odd-part rows over the even-part rows."""
    gamma = Partition(gamma)
    if len(gamma) > 2 * p:
        raise BadInputError(f"{gamma} has more than {2 * p} parts")
    top = [JTRowSpec(gamma.at(2 * i) - i, p) for i in range(p)]
    bottom = [JTRowSpec(gamma.at(2 * i + 1) - i, p) for i in range(p)]
    return top + bottom


def leibniz_det(matrix: Sequence[Sequence[T]], mul: Callable[[T, T], T], one: T, zero: T,
                is_zero: Callable[[T], bool] = lambda x: not x) -> T:
    """Permutation-sum determinant over any commutative ring given by ``mul``/``+``/``-``."""
    n = len(matrix)
    total = zero
    for perm in permutations(range(n)):
        term = one
        for i, j in enumerate(perm):
            entry = matrix[i][j]
            if is_zero(entry):
                term = None
                break
            term = mul(term, entry)
        if term is None:
            continue
        if inversions(perm) % 2:
            total = total - term
        else:
            total = total + term
    return total


def minor_to_schur(rows: Sequence[int], specs: Sequence[JTRowSpec]) -> SchurVector:
    """Evaluate the minor on the given rows (1-based, in order) as a signed Schur function."""
    lead = [specs[r - 1].leading_index for r in rows]
    p = len(lead)
    if len(set(lead)) < p:
        return ZERO
    # sorting into decreasing order: each ascending pair costs one transposition
    ascents = sum(1 for i in range(p) for j in range(i + 1, p) if lead[i] < lead[j])
    e = sorted(lead, reverse=True)
    alpha = [e[i] + i for i in range(p)]
    if alpha[-1] < 0:
        return ZERO
    s = schur(alpha)
    return -s if ascents % 2 else s


def h_matrix_det(specs: Sequence[JTRowSpec]) -> SchurVector:
    """Expand det(h_{...}) directly in the Schur basis via products of h's."""
    def h(n):
        if n < 0:
            return ZERO
        return schur((n,)) if n else ONE

    matrix = [[h(i) for i in spec.indices()] for spec in specs]
    return leibniz_det(matrix, multiply, ONE, ZERO, lambda v: v.is_zero())


def plucker_terms(p: int, c_subset: Sequence[int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Terms of [1..p][p+1..2p] = sum over d of [a|c<-d][b|d<-c]."""
    c = tuple(c_subset)
    a = tuple(range(1, p + 1))
    b = tuple(range(p + 1, 2 * p + 1))
    if any(x not in a for x in c) or list(c) != sorted(set(c)):
        raise BadInputError(f"{c} is not an increasing subsequence of 1..{p}")
    out = []
    for d in combinations(b, len(c)):
        swap_a = dict(zip(c, d))
        swap_b = dict(zip(d, c))
        out.append((tuple(swap_a.get(x, x) for x in a), tuple(swap_b.get(x, x) for x in b)))
    return out


def format_bracket(rows: Sequence[int]) -> str:
    sep = "" if max(rows, default=0) < 10 else " "
    return "[" + sep.join(map(str, rows)) + "]"


def numeric_plucker_holds(matrix: Sequence[Sequence[int]], c_subset: Sequence[int]) -> bool:
    """Check the Pluecker relation on an integer 2p x p matrix with exact arithmetic."""
    p = len(matrix[0])

    def minor(rows):
        sub = [matrix[r - 1] for r in rows]
        return leibniz_det(sub, lambda x, y: x * y, 1, 0)

    lhs = minor(range(1, p + 1)) * minor(range(p + 1, 2 * p + 1))
    rhs = sum(minor(ra) * minor(rb) for ra, rb in plucker_terms(p, c_subset))
    return lhs == rhs


@dataclass(frozen=True)
class PluckerTerm:
    rows_a: tuple[int, ...]
    rows_b: tuple[int, ...]
    sign: int
    alpha: Partition
    beta: Partition

    def value(self) -> SchurVector:
        v = multiply(schur(self.alpha), schur(self.beta))
        return v if self.sign > 0 else -v


def specialcase_expansion(mu: Sequence[int], nu: Sequence[int]) -> list[PluckerTerm]:
    """Nonzero Pluecker terms making up s_lam s_rho - s_mu s_nu when mu + nu = lam + rho."""
    mu, nu = Partition(mu), Partition(nu)
    lam, rho = tilde_pair(mu, nu)
    if partition_sum(mu, nu) != partition_sum(lam, rho):
        raise PreconditionViolated(f"{mu} + {nu} differs from {lam} + {rho}")
    if mu.at(0) < nu.at(0):
        mu, nu = nu, mu
    gamma = union(mu, nu)
    p = max(1, (len(gamma) + 1) // 2)
    specs = h_gamma_rows(gamma, p)
    c = tuple(i + 1 for i in range(p) if mu.at(i) != lam.at(i))
    own = tuple(x + p for x in c)
    terms = []
    for ra, rb in plucker_terms(p, c):
        if tuple(x for x in ra if x > p) == own:
            continue
        va, vb = minor_to_schur(ra, specs), minor_to_schur(rb, specs)
        if va.is_zero() or vb.is_zero():
            continue
        (alpha, sa), = va.items()
        (beta, sb), = vb.items()
        terms.append(PluckerTerm(ra, rb, sa * sb, alpha, beta))
    return terms


def _interleaved(a: Sequence[int], b: Sequence[int]) -> bool:
    chain = [x for pair in zip(a, b) for x in pair]
    for i in range(len(chain) - 1):
        if i % 2 == 0 and not chain[i] >= chain[i + 1]:
            return False
        if i % 2 == 1 and not chain[i] > chain[i + 1]:
            return False
    return True


def inversion_lemma_check(a: Sequence[int], b: Sequence[int], c_idx: Sequence[int], d_idx: Sequence[int]) -> bool:
    """Swap a[c_idx] with b[d_idx] (0-based positions) and compare inversion counts.

    Raises :class:`NotDistinctError` when a swapped sequence repeats an entry,
    the case where the identity says nothing.
    """
    a, b = list(a), list(b)
    if len(a) != len(b) or len(c_idx) != len(d_idx):
        raise BadInputError("length mismatch")
    if list(c_idx) != sorted(set(c_idx)) or list(d_idx) != sorted(set(d_idx)):
        raise BadInputError("index subsequences must be strictly increasing")
    if not _interleaved(a, b):
        raise BadInterleavingError(f"{a} and {b} do not interleave")
    a2, b2 = a[:], b[:]
    for i, j in zip(c_idx, d_idx):
        a2[i], b2[j] = b[j], a[i]
    if len(set(a2)) < len(a2) or len(set(b2)) < len(b2):
        raise NotDistinctError("swapped sequences repeat an entry")
    return inversions(a2) == inversions(b2)


def _rect(n: int, k: int) -> SchurVector:
    if n < 0:
        return ZERO
    return schur((n,) * k) if n else ONE


def exploded_jt(mu: Sequence[int], k: int, p: int | None = None) -> SchurVector:
    """det(s_{(mu_i - i + j)^k}) expanded as a permutation sum of Schur products."""
    mu = Partition(mu)
    p = len(mu) if p is None else p
    if p < len(mu):
        raise BadInputError(f"p={p} is shorter than {mu}")
    if k < 1:
        raise BadInputError("k must be positive")
    matrix = [[_rect(mu.at(i) - i + j, k) for j in range(p)] for i in range(p)]
    return leibniz_det(matrix, multiply, ONE, ZERO, lambda v: v.is_zero())
