"""Exhaustive verification sweeps with checkpointing and parallel workers.

Every sweep is a deterministic list of work items in graded lexicographic
order.  Items are checked in chunks, optionally across processes, and the
per-chunk results are merged by summing counts and sorting findings by item
index, so the report does not depend on the worker count.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .errors import BadInputError
from .lr import product_terms, skew_schur_expand
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    check_bound,
    classify_shape,
    minimal_skew_shapes,
    partitions_of,
    subpartitions,
)
from .tilde import SkewPair, skew_tilde, tilde_m, tilde_pair
from .vector import SchurVector

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "sweep report",
    "type": "object",
    "required": ["command", "bound", "params", "items", "checked", "skipped", "findings", "ok"],
    "properties": {
        "command": {"enum": ["fflp", "skew", "mtilde", "stembridge", "support"]},
        "bound": {"type": "integer", "minimum": 0},
        "params": {"type": "object"},
        "items": {"type": "integer", "minimum": 0},
        "checked": {"type": "integer", "minimum": 0},
        "skipped": {"type": "integer", "minimum": 0},
        "resumed_from": {"type": ["integer", "null"]},
        "ok": {"type": "boolean"},
        "findings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "input", "detail"],
                "properties": {
                    "index": {"type": "integer", "minimum": 0},
                    "input": {},
                    "detail": {},
                },
            },
        },
    },
    "additionalProperties": False,
}


@dataclass
class RunConfig:
    """Sweep settings.  Defaults: one worker, text output, seed 0, checkpoint every 2000 items."""

    max_total_size: int = 10
    worker_count: int = 1
    output_format: str = "text"
    seed: int = 0
    checkpoint: Path | None = None
    checkpoint_every: int = 2000

    def __post_init__(self):
        if self.max_total_size < 0:
            raise BadInputError("bound must be non-negative")
        if self.worker_count < 1:
            raise BadInputError("worker_count must be positive")
        if self.output_format not in ("text", "json", "dot"):
            raise BadInputError(f"unknown output format {self.output_format!r}")
        if self.checkpoint_every < 1:
            raise BadInputError("checkpoint_every must be positive")


@dataclass
class Report:
    command: str
    bound: int
    params: dict = field(default_factory=dict)
    items: int = 0
    checked: int = 0
    skipped: int = 0
    findings: list[dict] = field(default_factory=list)
    resumed_from: int | None = None

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "bound": self.bound,
            "params": self.params,
            "items": self.items,
            "checked": self.checked,
            "skipped": self.skipped,
            "resumed_from": self.resumed_from,
            "ok": self.ok,
            "findings": sorted(self.findings, key=lambda f: f["index"]),
        }


def validate_report(doc: dict) -> None:
    import jsonschema

    jsonschema.validate(doc, REPORT_SCHEMA)


# --- work items -------------------------------------------------------------------


def partition_pairs(bound: int) -> list[tuple[Partition, Partition]]:
    """Unordered pairs with |mu| + |nu| <= bound, the larger-size partition first."""
    check_bound(bound)
    out = []
    for n in range(bound + 1):
        for a in range(n // 2 + 1):
            for mu in partitions_of(n - a):
                for nu in partitions_of(a):
                    if a == n - a and mu < nu:
                        continue
                    out.append((mu, nu))
    return out


def partition_tuples(bound: int, m: int) -> list[tuple[Partition, ...]]:
    """Multisets of m partitions with total size <= bound, each in decreasing order."""
    check_bound(bound)
    out = []
    for n in range(bound + 1):
        pool = [p for k in range(n + 1) for p in partitions_of(k)]
        for combo in combinations_with_replacement(pool, m):
            if sum(p.size for p in combo) == n:
                out.append(tuple(sorted(combo, key=lambda p: (p.size, p), reverse=True)))
    return out


def _descriptions(size_bound: int) -> list[SkewShape]:
    out = []
    for n in range(size_bound + 1):
        for mu in partitions_of(n):
            out.extend(SkewShape(mu, a) for a in subpartitions(mu))
    return out


def skew_pairs(bound: int, minimal_only: bool) -> list[tuple[SkewShape, SkewShape]]:
    """Unordered pairs of skew shapes.

    Minimal descriptions are bounded by the number of cells; arbitrary
    descriptions have infinitely many per cell count, so for those the bound
    applies to the outer sizes |mu| + |nu| instead.
    """
    check_bound(bound)
    if minimal_only:
        by_size = [minimal_skew_shapes(k) for k in range(bound + 1)]
        out = []
        for n in range(bound + 1):
            for a in range(n // 2 + 1):
                big, small = by_size[n - a], by_size[a]
                for i, s in enumerate(big):
                    for j, t in enumerate(small):
                        if a == n - a and j > i:
                            break
                        out.append((s, t))
        return out
    shapes = _descriptions(bound)
    out = []
    for i, s in enumerate(shapes):
        for t in shapes[i:]:
            if s.outer.size + t.outer.size <= bound:
                out.append((s, t))
    return out


# --- checks -----------------------------------------------------------------------
# Each check returns None when the item passes, "skip" for a vacuous item, or a
# JSON-ready detail dict for a counterexample.


def _vector(d: dict) -> SchurVector:
    return SchurVector._raw(dict(d))


def _difference_detail(bigger: SchurVector, smaller: SchurVector) -> dict | None:
    diff = bigger - smaller
    if all(c > 0 for c in diff.values()):
        return None
    return {
        "difference": str(diff),
        "negative": [[list(p), c] for p, c in diff.sorted_items() if c < 0],
    }


def check_fflp(item) -> dict | str | None:
    mu, nu = item
    lam, rho = tilde_pair(mu, nu)
    if {lam, rho} == {mu, nu}:
        return "skip"
    return _difference_detail(_vector(product_terms(lam, rho)), _vector(product_terms(mu, nu)))


def check_support(item) -> dict | str | None:
    mu, nu = item
    lam, rho = tilde_pair(mu, nu)
    if {lam, rho} == {mu, nu}:
        return "skip"
    missing = set(product_terms(mu, nu)) - set(product_terms(lam, rho))
    if not missing:
        return None
    return {"missing": [list(p) for p in sorted(missing, reverse=True)]}


def check_mtilde(item) -> dict | str | None:
    new = tilde_m(item, len(item))
    if sorted(new) == sorted(item):
        return "skip"

    def prod(parts):
        acc = _vector({EMPTY: 1})
        for p in parts:
            acc = acc * _vector({Partition(p): 1})
        return acc

    return _difference_detail(prod(new), prod(item))


def _line_rectangle(p: Partition, k: int) -> bool:
    # the empty partition is the zero-line rectangle; s_() = 1 times anything is multiplicity-free
    return not p or classify_shape(p).is_k_line(k)


def stembridge_predicate(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """Multiplicity-freeness of s_mu s_nu read off the shapes alone."""
    mu, nu = Partition(mu), Partition(nu)
    if _line_rectangle(mu, 1) or _line_rectangle(nu, 1):
        return True
    cm, cn = classify_shape(mu), classify_shape(nu)
    for a, b, ca, cb in ((mu, nu, cm, cn), (nu, mu, cn, cm)):
        if ca.is_k_line(2) and (cb.fat_hook or cb.rectangle):
            return True
        if ca.rectangle and (cb.near_rectangle or cb.rectangle):
            return True
    return False


def check_stembridge(item) -> dict | None:
    mu, nu = item
    terms = product_terms(mu, nu)
    brute = max(terms.values(), default=0) <= 1
    predicted = stembridge_predicate(mu, nu)
    if brute == predicted:
        return None
    return {"predicted": predicted, "multiplicity_free": brute, "product": str(_vector(terms))}


def check_skew(item) -> dict | str | None:
    s, t = item
    q = skew_tilde(SkewPair(s, t))
    if {q.first, q.second} == {s, t}:
        return "skip"
    new = skew_schur_expand(q.first) * skew_schur_expand(q.second)
    old = skew_schur_expand(s) * skew_schur_expand(t)
    if new == old:
        return None
    return _difference_detail(new, old)


def _encode(item) -> list:
    return [str(x) for x in item]


COMMANDS: dict[str, tuple[Callable, Callable[..., list]]] = {
    "fflp": (check_fflp, lambda bound, **kw: partition_pairs(bound)),
    "support": (check_support, lambda bound, **kw: partition_pairs(bound)),
    "stembridge": (check_stembridge, lambda bound, **kw: partition_pairs(bound)),
    "mtilde": (check_mtilde, lambda bound, m=3, **kw: partition_tuples(bound, m)),
    "skew": (check_skew, lambda bound, minimal_only=True, **kw: skew_pairs(bound, minimal_only)),
}


def _run_chunk(args) -> tuple[int, int, list[dict]]:
    command, start, items = args
    check = COMMANDS[command][0]
    checked = skipped = 0
    findings = []
    for k, item in enumerate(items):
        res = check(item)
        if res == "skip":
            skipped += 1
            continue
        checked += 1
        if res is not None:
            findings.append({"index": start + k, "input": _encode(item), "detail": res})
    return checked, skipped, findings


def _chunks(items: list, start: int, size: int) -> Iterable[tuple[int, list]]:
    for i in range(start, len(items), size):
        yield i, items[i: i + size]


def read_checkpoint(path: Path, command: str, bound: int) -> dict | None:
    if not path.exists():
        return None
    doc = json.loads(path.read_text())
    if doc.get("command") != command or doc.get("bound") != bound:
        raise BadInputError(f"checkpoint {path} belongs to another run")
    return doc


def _write_checkpoint(path: Path, report: Report, last: int) -> None:
    doc = {
        "command": report.command,
        "bound": report.bound,
        "last_completed_index": last,
        "partial": {"checked": report.checked, "skipped": report.skipped, "findings": report.findings},
    }
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(doc))
    os.replace(tmp, path)


def run_sweep(command: str, config: RunConfig, **params) -> Report:
    """Run one sweep; resumes from ``config.checkpoint`` when it exists."""
    if command not in COMMANDS:
        raise BadInputError(f"unknown sweep {command!r}")
    bound = config.max_total_size
    items = COMMANDS[command][1](bound, **params)
    report = Report(command, bound, params=dict(params), items=len(items))
    start = 0
    if config.checkpoint is not None:
        doc = read_checkpoint(config.checkpoint, command, bound)
        if doc is not None:
            start = doc["last_completed_index"] + 1
            report.resumed_from = start
            partial = doc.get("partial", {})
            report.checked = partial.get("checked", 0)
            report.skipped = partial.get("skipped", 0)
            report.findings = list(partial.get("findings", []))
    size = config.checkpoint_every
    tasks = ((command, i, chunk) for i, chunk in _chunks(items, start, size))
    if config.worker_count > 1:
        pool = ProcessPoolExecutor(max_workers=config.worker_count)
        results = pool.map(_run_chunk, tasks)
    else:
        pool = None
        results = map(_run_chunk, tasks)
    try:
        done = start
        for checked, skipped, findings in results:
            report.checked += checked
            report.skipped += skipped
            report.findings.extend(findings)
            done = min(done + size, len(items))
            if config.checkpoint is not None:
                _write_checkpoint(config.checkpoint, report, done - 1)
    finally:
        if pool is not None:
            pool.shutdown()
    return report


def cmd_verify_fflp(bound: int, config: RunConfig | None = None) -> Report:
    return run_sweep("fflp", _with_bound(config, bound))


def cmd_verify_skew(bound: int, minimal_only: bool = True, config: RunConfig | None = None) -> Report:
    return run_sweep("skew", _with_bound(config, bound), minimal_only=minimal_only)


def cmd_verify_stembridge(bound: int, config: RunConfig | None = None) -> Report:
    return run_sweep("stembridge", _with_bound(config, bound))


def cmd_verify_mtilde(bound: int, m: int = 3, config: RunConfig | None = None) -> Report:
    if m < 2:
        raise BadInputError("m must be at least 2")
    return run_sweep("mtilde", _with_bound(config, bound), m=m)


def cmd_verify_support(bound: int, config: RunConfig | None = None) -> Report:
    return run_sweep("support", _with_bound(config, bound))


def _with_bound(config: RunConfig | None, bound: int) -> RunConfig:
    if config is None:
        return RunConfig(max_total_size=bound)
    return RunConfig(bound, config.worker_count, config.output_format, config.seed,
                     config.checkpoint, config.checkpoint_every)
