"""Sparse integer combinations of Schur functions."""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import CoefficientOverflowError
from .partitions import WORD_MAX, Partition, conjugate


class SchurVector(Mapping):
    """Immutable map ``Partition -> nonzero int``; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = Partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in acc.items() if c}
        self._hash = None
        for c in self._terms.values():
            if abs(c) > WORD_MAX:
                raise CoefficientOverflowError(f"coefficient {c} does not fit a machine word")

    @classmethod
    def schur(cls, lam: Iterable[int]) -> "SchurVector":
        return cls({Partition(lam): 1})

    @classmethod
    def _raw(cls, terms: dict) -> "SchurVector":
        v = cls.__new__(cls)
        v._terms = terms
        v._hash = None
        return v

    def __getitem__(self, lam) -> int:
        return self._terms[Partition(lam)]

    def coefficient(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurVector):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "SchurVector") -> "SchurVector":
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            acc[lam] = acc.get(lam, 0) + c
        return SchurVector(acc)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def __neg__(self) -> "SchurVector":
        return SchurVector._raw({lam: -c for lam, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurVector({lam: c * other for lam, c in self._terms.items()})
        from .algebra import multiply

        return multiply(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {lam.size for lam in self._terms}

    def sorted_items(self) -> list[tuple[Partition, int]]:
        """Terms by decreasing degree, then reverse lexicographic."""
        return sorted(self._terms.items(), key=lambda t: (-t[0].size, tuple(-x for x in t[0])))

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coeff": c} for lam, c in self.sorted_items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for lam, c in self.sorted_items():
            name = "s[" + str(lam) + "]"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            out.append(f"{sign} {mag}{name}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self) -> str:
        return f"SchurVector({dict(self.sorted_items())!r})"


ZERO = SchurVector()


def is_schur_positive(v: SchurVector) -> bool:
    """True iff no coefficient is negative; the zero vector counts as positive."""
    return all(c > 0 for c in v.values())


def omega(v: SchurVector) -> SchurVector:
    return SchurVector._raw({conjugate(lam): c for lam, c in v.items()})
