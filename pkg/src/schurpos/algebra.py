"""Multiplication in the Schur basis, supports, and the h/e images."""
from __future__ import annotations

from functools import reduce
from typing import Sequence, Union

from .errors import SumMismatchError
from .lr import product_terms, skew_schur_expand, star_concatenate
from .partitions import Partition, SkewShape, conjugate, dominance_leq
from .vector import SchurVector, is_schur_positive, omega  # noqa: F401  (re-exported)

Shape = Union[Sequence[int], SkewShape]


def schur(lam: Sequence[int]) -> SchurVector:
    return SchurVector.schur(lam)


ONE = schur(())


def multiply(a: SchurVector, b: SchurVector) -> SchurVector:
    acc: dict[Partition, int] = {}
    for mu, c in a.items():
        for nu, d in b.items():
            cd = c * d
            for theta, k in product_terms(mu, nu).items():
                acc[theta] = acc.get(theta, 0) + cd * k
    return SchurVector(acc)


def product(*factors: SchurVector) -> SchurVector:
    return reduce(multiply, factors, ONE)


def multiply_skew(a: SkewShape, b: SkewShape) -> SchurVector:
    return skew_schur_expand(star_concatenate(a, b))


def _as_skew(x: Shape) -> SkewShape:
    return x if isinstance(x, SkewShape) else SkewShape(Partition(x))


def support(mu: Shape, nu: Shape) -> set[Partition]:
    """Partitions with nonzero coefficient in the product of the two (skew) Schur functions."""
    if isinstance(mu, SkewShape) or isinstance(nu, SkewShape):
        return set(multiply_skew(_as_skew(mu), _as_skew(nu)))
    return set(product_terms(mu, nu))


def h_to_schur(mu: Sequence[int]) -> SchurVector:
    return product(*(schur((k,)) for k in Partition(mu)))


def e_to_schur(mu: Sequence[int]) -> SchurVector:
    return product(*(schur((1,) * k) for k in Partition(mu)))


def h_difference_positive(theta: Sequence[int], pi: Sequence[int]) -> bool:
    """Whether h_theta - h_pi is Schur-positive, decided by dominance."""
    theta, pi = Partition(theta), Partition(pi)
    if theta.size != pi.size:
        raise SumMismatchError(f"|{theta}| != |{pi}|")
    return dominance_leq(theta, pi)


__all__ = [
    "ONE", "schur", "multiply", "product", "multiply_skew", "support",
    "h_to_schur", "e_to_schur", "h_difference_positive", "is_schur_positive",
    "omega", "conjugate",
]
