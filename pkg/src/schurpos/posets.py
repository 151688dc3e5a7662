"""Posets of pairs of partitions ordered by Schur-positivity of product differences."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Mapping, Sequence

import numpy as np

from .algebra import h_to_schur
from .errors import BadRankError, PosetViolation, SizeMismatchError
from .lr import lr_coefficient, product_terms
from .partitions import EMPTY, Partition, check_bound, dominance_leq, partitions_of
from .tilde import tilde_pair


@dataclass(frozen=True, order=True)
class PairElement:
    """Unordered pair stored with the lexicographically smaller partition second."""

    first: Partition
    second: Partition

    @classmethod
    def of(cls, a: Sequence[int], b: Sequence[int]) -> "PairElement":
        a, b = Partition(a), Partition(b)
        return cls(a, b) if a >= b else cls(b, a)

    def label(self) -> str:
        return str(self.second) if self.second else "∅"

    def __str__(self) -> str:
        return f"({self.first}|{self.second})"


@dataclass(eq=False)
class Poset:
    elements: list[PairElement]
    less: np.ndarray  # less[i, j]: elements[i] < elements[j]
    name: str = ""
    gamma: Partition | None = None
    covers: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        self.less = np.asarray(self.less, dtype=bool)
        if not self.covers:
            self.covers = transitive_reduction(self.less)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.less, other.less)

    def index(self, e: PairElement) -> int:
        return self.elements.index(e)

    def relations(self) -> set[tuple[PairElement, PairElement]]:
        return {(self.elements[i], self.elements[j]) for i, j in zip(*np.nonzero(self.less))}

    def heights(self) -> list[int]:
        """Length of the longest chain ending at each element."""
        h = [0] * len(self)
        order = sorted(range(len(self)), key=lambda i: int(self.less[:, i].sum()))
        for j in order:
            below = np.nonzero(self.less[:, j])[0]
            h[j] = 1 + max((h[i] for i in below), default=-1)
        return h


def transitive_reduction(less: np.ndarray) -> list[tuple[int, int]]:
    m = less.astype(np.int64)
    through = (m @ m) > 0
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(less & ~through))]


def check_strict_order(less: np.ndarray) -> None:
    if less.diagonal().any():
        raise PosetViolation("relation is not irreflexive")
    if (less & less.T).any():
        raise PosetViolation("relation is not antisymmetric")
    m = less.astype(np.int64)
    if ((m @ m > 0) & ~less).any():
        raise PosetViolation("relation is not transitive")


def _dominates(big: Mapping, small: Mapping) -> bool:
    return all(big.get(k, 0) >= v for k, v in small.items())


def _order_by_products(elements: list[PairElement], prods: list[Mapping], name: str,
                       gamma: Partition | None = None) -> Poset:
    n = len(elements)
    less = np.zeros((n, n), dtype=bool)
    for i, j in combinations(range(n), 2):
        a, b = prods[i], prods[j]
        if a == b:
            raise PosetViolation(f"{elements[i]} and {elements[j]} have equal products")
        if _dominates(b, a):
            less[i, j] = True
        elif _dominates(a, b):
            less[j, i] = True
    check_strict_order(less)
    return Poset(elements, less, name=name, gamma=gamma)


def all_pairs(n: int) -> list[PairElement]:
    out = set()
    for a in range(n // 2 + 1):
        for mu in partitions_of(n - a):
            for nu in partitions_of(a):
                out.add(PairElement.of(mu, nu))
    return sorted(out, reverse=True)


def build_pn(n: int) -> Poset:
    check_bound(n)
    elements = all_pairs(n)
    prods = [product_terms(e.first, e.second) for e in elements]
    return _order_by_products(elements, prods, name=f"P_{n}")


def dealings(gamma: Sequence[int]) -> list[PairElement]:
    parts = [x for x in Partition(gamma)]
    out = set()
    for mask in range(1 << len(parts)):
        a = [x for i, x in enumerate(parts) if mask >> i & 1]
        b = [x for i, x in enumerate(parts) if not mask >> i & 1]
        out.add(PairElement.of(a, b))
    return sorted(out, reverse=True)


def build_dealings(gamma: Sequence[int]) -> Poset:
    gamma = Partition(gamma)
    check_bound(gamma.size)
    elements = dealings(gamma)
    prods = [product_terms(e.first, e.second) for e in elements]
    return _order_by_products(elements, prods, name=f"P({gamma})", gamma=gamma)


def build_h_pairs(n: int) -> Poset:
    """Pairs up to equal unions, ordered by positivity of h-product differences."""
    check_bound(n)
    elements = [PairElement.of(g, EMPTY) for g in partitions_of(n)]
    prods = [dict(h_to_schur(e.first).items()) for e in elements]
    return _order_by_products(elements, prods, name=f"H_{n}")


def dominance_poset(n: int) -> Poset:
    elements = [PairElement.of(g, EMPTY) for g in partitions_of(n)]
    k = len(elements)
    less = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(k):
            if i != j and dominance_leq(elements[i].first, elements[j].first):
                less[i, j] = True
    return Poset(elements, less, name=f"dominance({n})")


def maximum_element(p: Poset) -> PairElement | None:
    n = len(p)
    for i in range(n):
        if all(p.less[j, i] for j in range(n) if j != i):
            return p.elements[i]
    return None


def dealt_pair(gamma: Sequence[int]) -> PairElement:
    return PairElement.of(*tilde_pair(gamma, ()))


# --- isomorphism ---------------------------------------------------------------


def _fingerprints(p: Poset) -> list[tuple]:
    h = p.heights()
    down = p.less.sum(axis=0)
    up = p.less.sum(axis=1)
    lower = [0] * len(p)
    upper = [0] * len(p)
    for i, j in p.covers:
        upper[i] += 1
        lower[j] += 1
    return [(int(down[i]), int(up[i]), h[i], lower[i], upper[i]) for i in range(len(p))]


def find_isomorphism(p: Poset, q: Poset) -> dict[int, int] | None:
    """Exact backtracking search for an order isomorphism, pruned by fingerprints."""
    if len(p) != len(q):
        return None
    fp, fq = _fingerprints(p), _fingerprints(q)
    if sorted(fp) != sorted(fq):
        return None
    by_fp: dict[tuple, list[int]] = {}
    for j, f in enumerate(fq):
        by_fp.setdefault(f, []).append(j)
    order = sorted(range(len(p)), key=lambda i: (len(by_fp[fp[i]]), fp[i]))
    image: dict[int, int] = {}
    taken = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for j in by_fp[fp[i]]:
            if j in taken:
                continue
            if all(p.less[i, a] == q.less[j, b] and p.less[a, i] == q.less[b, j] for a, b in image.items()):
                image[i] = j
                taken.add(j)
                if extend(k + 1):
                    return True
                del image[i]
                taken.discard(j)
        return False

    return dict(image) if extend(0) else None


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return find_isomorphism(p, q) is not None


def is_weak_subposet(p: Poset, q: Poset, bijection: Mapping[PairElement, PairElement]) -> bool:
    """Whether every relation of ``p`` holds in ``q`` after mapping elements across."""
    if len(p) != len(q) or len(bijection) != len(p):
        raise SizeMismatchError("posets and correspondence must have equal sizes")
    idx = {e: k for k, e in enumerate(q.elements)}
    for i, j in zip(*np.nonzero(p.less)):
        a, b = idx[bijection[p.elements[i]]], idx[bijection[p.elements[j]]]
        if not q.less[a, b]:
            return False
    return True


def canonical_dealing_map(gamma1: Sequence[int], gamma2: Sequence[int]) -> dict[PairElement, PairElement]:
    """Match dealings of two part lists that agree in length, part by part."""
    g1, g2 = list(Partition(gamma1)), list(Partition(gamma2))
    if len(g1) != len(g2):
        raise SizeMismatchError(f"{gamma1} and {gamma2} have different lengths")
    out: dict[PairElement, PairElement] = {}
    for mask in range(1 << len(g1)):
        side = [mask >> i & 1 for i in range(len(g1))]
        e1 = PairElement.of([x for x, s in zip(g1, side) if s], [x for x, s in zip(g1, side) if not s])
        e2 = PairElement.of([x for x, s in zip(g2, side) if s], [x for x, s in zip(g2, side) if not s])
        if out.setdefault(e1, e2) != e2:
            raise SizeMismatchError("part positions do not give a well-defined correspondence")
    if len(set(out.values())) != len(out):
        raise SizeMismatchError("correspondence is not injective")
    return out


# --- chains of rectangles --------------------------------------------------------


def chain_witness(k: int, m: int, r: int) -> tuple[Partition, int, int]:
    """Shape separating consecutive dealings of k^m, with both LR coefficients."""
    if not 1 <= r <= m // 2:
        raise BadRankError(f"r={r} outside 1..{m // 2}")
    theta = Partition((2 * k,) * r + (k,) * (m - 2 * r))
    low = lr_coefficient(theta, (k,) * (m - r + 1), (k,) * (r - 1))
    high = lr_coefficient(theta, (k,) * (m - r), (k,) * r)
    return theta, low, high


def is_chain(p: Poset) -> bool:
    n = len(p)
    return all(p.less[i, j] or p.less[j, i] for i, j in combinations(range(n), 2))


# --- export ------------------------------------------------------------------------


def _dot_label(p: Poset, e: PairElement) -> str:
    if p.gamma is not None:
        return e.label()
    return ", ".join(str(x) for x in (e.first, e.second) if x) or "∅"


def export_dot(p: Poset) -> str:
    lines = [f'digraph "{p.name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, e in enumerate(p.elements):
        lines.append(f'  n{i} [label="{_dot_label(p, e)}"];')
    levels: dict[int, list[int]] = {}
    for i, h in enumerate(p.heights()):
        levels.setdefault(h, []).append(i)
    for h in sorted(levels):
        lines.append("  { rank=same; " + " ".join(f"n{i};" for i in levels[h]) + " }")
    for i, j in p.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(p: Poset) -> str:
    doc = {
        "name": p.name,
        "gamma": list(p.gamma) if p.gamma is not None else None,
        "elements": [[list(e.first), list(e.second)] for e in p.elements],
        "relations": [[int(i), int(j)] for i, j in zip(*np.nonzero(p.less))],
        "covers": [list(c) for c in p.covers],
    }
    return json.dumps(doc, indent=1)


def parse_poset_json(text: str) -> Poset:
    doc = json.loads(text)
    elements = [PairElement.of(a, b) for a, b in doc["elements"]]
    less = np.zeros((len(elements), len(elements)), dtype=bool)
    for i, j in doc["relations"]:
        less[i, j] = True
    gamma = Partition(doc["gamma"]) if doc.get("gamma") is not None else None
    return Poset(elements, less, name=doc.get("name", ""), gamma=gamma,
                 covers=[tuple(c) for c in doc.get("covers", [])])


def relabel(p: Poset, f: Callable[[PairElement], PairElement]) -> Poset:
    return Poset([f(e) for e in p.elements], p.less.copy(), name=p.name, gamma=p.gamma)
