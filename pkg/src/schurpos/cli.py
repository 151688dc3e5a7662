"""Command-line entry point: ``schurpos <command> ...``.

Exit codes: 0 success or confirmed property, 1 refutation or counterexample,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import posets as ps
from .algebra import multiply
from .errors import SchurposError
from .jacobi_trudi import exploded_jt, format_bracket, plucker_terms
from .lr import enumerate_lr_fillings, lr_coefficient, reading_word, skew_schur_expand
from .partitions import SkewShape, parse_partition, parse_skew
from .sweeps import RunConfig, run_sweep, validate_report
from .tilde import SkewPair, skew_tilde, tilde_m, tilde_pair


def _emit(args, doc, text: str) -> None:
    if args.json is True or args.json == "-":
        print(json.dumps(doc, indent=1))
    else:
        print(text)


def _write(target: str, content: str) -> None:
    if target == "-":
        sys.stdout.write(content)
    else:
        Path(target).write_text(content)


def cmd_lrcoef(args) -> int:
    theta, mu, nu = (parse_partition(x) for x in (args.outer, args.inner, args.content))
    c = lr_coefficient(theta, mu, nu)
    doc: dict = {"coefficient": c}
    lines = [f"c^{{{theta}}}_{{{mu};{nu}}} = {c}"]
    if args.list_fillings and c:
        fillings = enumerate_lr_fillings(SkewShape(theta, mu), nu)
        doc["fillings"] = [[list(r) for r in f.rows] for f in fillings]
        for f in fillings:
            word = "".join(map(str, reading_word(f)))
            lines.append(f"  {word}  rows (bottom up): " + " | ".join(" ".join(map(str, r)) for r in f.rows))
    elif args.list_fillings:
        doc["fillings"] = []
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_product(args) -> int:
    a, b = parse_skew(args.a), parse_skew(args.b)
    v = multiply(skew_schur_expand(a), skew_schur_expand(b))
    _emit(args, v.to_json(), str(v))
    return 0


def cmd_tilde(args) -> int:
    if args.m is not None:
        parts = [parse_partition(p) for p in args.parts.split(";")] if args.parts else []
        out = tilde_m(parts, args.m)
        doc = {"input": [list(p) for p in parts], "output": [list(p) for p in out]}
        text = f"({', '.join(map(str, parts))})~ = ({', '.join(map(str, out))})"
        _emit(args, doc, text)
        return 0
    if args.mu is None or args.nu is None:
        raise SchurposError("tilde needs --mu and --nu, or --m with --parts")
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    if args.skew:
        p = SkewPair(SkewShape(mu, parse_partition(args.alpha or "")),
                     SkewShape(nu, parse_partition(args.beta or "")))
        q = skew_tilde(p)
        doc = {"input": [str(p.first), str(p.second)], "output": [str(q.first), str(q.second)]}
        _emit(args, doc, f"{p}~ = {q}")
        return 0
    lam, rho = tilde_pair(mu, nu)
    doc = {"input": [list(mu), list(nu)], "output": [list(lam), list(rho)]}
    _emit(args, doc, f"({mu}, {nu})~ = ({lam}, {rho})")
    return 0


def cmd_verify(args) -> int:
    config = RunConfig(
        max_total_size=args.bound,
        worker_count=args.workers,
        output_format="json" if args.json else "text",
        seed=args.seed,
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
        checkpoint_every=args.checkpoint_every,
    )
    params = {}
    if args.sweep == "skew":
        params["minimal_only"] = not args.all_pairs
    if args.sweep == "mtilde":
        if args.m < 2:
            raise SchurposError("--m must be at least 2")
        params["m"] = args.m
    report = run_sweep(args.sweep, config, **params)
    doc = report.to_dict()
    validate_report(doc)
    if args.json:
        print(json.dumps(doc, indent=1))
    else:
        print(f"{args.sweep}: bound={args.bound} items={report.items} "
              f"checked={report.checked} skipped={report.skipped} findings={len(report.findings)}")
        for f in doc["findings"]:
            label = "MISMATCH" if args.sweep == "stembridge" else "COUNTEREXAMPLE (would refute the conjecture)"
            print(f"{label} #{f['index']}: {' , '.join(f['input'])}")
            print("  " + json.dumps(f["detail"]))
    return 0 if report.ok else 1


def _poset_doc(p: ps.Poset) -> dict:
    return json.loads(ps.export_json(p))


def _poset_outputs(args, p: ps.Poset) -> None:
    if args.dot:
        _write(args.dot, ps.export_dot(p))
    if args.json not in (None, True, "-"):
        _write(args.json, ps.export_json(p))


def cmd_poset(args) -> int:
    if args.kind == "pn":
        p = ps.build_pn(args.n)
        _poset_outputs(args, p)
        _emit(args, _poset_doc(p), f"{p.name}: {len(p)} elements, {len(p.covers)} covers")
        return 0
    if args.kind == "dealings":
        p = ps.build_dealings(parse_partition(args.gamma))
        _poset_outputs(args, p)
        top = ps.maximum_element(p)
        doc = _poset_doc(p)
        doc["maximum"] = str(top) if top else None
        text = f"{p.name}: {len(p)} elements, {len(p.covers)} covers, maximum {top}"
        code = 0
        if args.check_max:
            expected = ps.dealt_pair(p.gamma)
            doc["maximum_is_dealt_pair"] = top == expected
            if top != expected:
                text += f"\nmaximum differs from the dealt pair {expected}"
                code = 1
        _emit(args, doc, text)
        return code
    g1, g2 = parse_partition(args.gamma1), parse_partition(args.gamma2)
    p, q = ps.build_dealings(g1), ps.build_dealings(g2)
    if args.mode == "iso":
        holds = ps.is_isomorphic(p, q)
    else:
        holds = ps.is_weak_subposet(p, q, ps.canonical_dealing_map(g1, g2))
    doc = {"mode": args.mode, "gamma1": list(g1), "gamma2": list(g2), "holds": holds,
           "relations": [len(p.relations()), len(q.relations())]}
    verb = "isomorphic to" if args.mode == "iso" else "a weak subposet of"
    _emit(args, doc, f"{p.name} is {'' if holds else 'not '}{verb} {q.name}")
    return 0 if holds else 1


def cmd_exploded_jt(args) -> int:
    mu = parse_partition(args.mu)
    v = exploded_jt(mu, args.k, args.p)
    negative = [(p, c) for p, c in v.sorted_items() if c < 0]
    doc = {"mu": list(mu), "k": args.k, "p": args.p or len(mu), "expansion": v.to_json(),
           "schur_positive": not negative}
    lines = [str(v)]
    code = 0
    if args.check_positive and negative:
        p, c = negative[0]
        lines.append(f"negative term: {c}*s[{p}]")
        doc["negative"] = [[list(p), c] for p, c in negative]
        code = 1
    _emit(args, doc, "\n".join(lines))
    return code


def cmd_plucker(args) -> int:
    c = tuple(int(x) for x in args.c.split(",")) if args.c.strip() else ()
    terms = plucker_terms(args.p, c)
    lhs = format_bracket(range(1, args.p + 1)) + format_bracket(range(args.p + 1, 2 * args.p + 1))
    rhs = [format_bracket(a) + format_bracket(b) for a, b in terms]
    doc = {"p": args.p, "c": list(c), "lhs": lhs, "terms": rhs}
    _emit(args, doc, lhs + " = " + " + ".join(rhs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurpos", description="Schur-positivity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, json_file=False):
        p = sub.add_parser(name, help=help_)
        if json_file:
            p.add_argument("--json", nargs="?", const="-", metavar="FILE",
                           help="print JSON, or write the poset JSON to FILE")
        else:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("lrcoef", cmd_lrcoef, "Littlewood-Richardson coefficient")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--content", required=True)
    p.add_argument("--list-fillings", action="store_true")

    p = add("product", cmd_product, "Schur expansion of a product of (skew) Schur functions")
    p.add_argument("--a", required=True, help="shape, optionally outer/inner")
    p.add_argument("--b", required=True)

    p = add("tilde", cmd_tilde, "deal the parts of a pair, skew pair or m-tuple")
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--skew", action="store_true", help="treat --mu/--nu as outers of a skew pair")
    p.add_argument("--alpha", help="inner shape of the first skew shape")
    p.add_argument("--beta", help="inner shape of the second skew shape")
    p.add_argument("--m", type=int)
    p.add_argument("--parts", help="partitions separated by ';'")

    p = add("verify", cmd_verify, "exhaustive conjecture sweeps")
    p.add_argument("sweep", choices=["fflp", "skew", "mtilde", "stembridge", "support"])
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checkpoint", help="resume from and update this JSON file")
    p.add_argument("--checkpoint-every", type=int, default=2000)
    p.add_argument("--all-pairs", action="store_true",
                   help="skew: all descriptions with |mu|+|nu| <= bound, not only minimal pairs")
    p.add_argument("--m", type=int, default=3)

    p = add("poset", cmd_poset, "build and export Schur-positivity posets", json_file=True)
    p.add_argument("kind", choices=["pn", "dealings", "compare"])
    p.add_argument("--n", type=int)
    p.add_argument("--gamma")
    p.add_argument("--gamma1")
    p.add_argument("--gamma2")
    p.add_argument("--mode", choices=["iso", "weak-subposet"], default="iso")
    p.add_argument("--dot", help="write DOT to this path ('-' for stdout)")
    p.add_argument("--check-max", action="store_true")

    p = add("exploded-jt", cmd_exploded_jt, "exploded Jacobi-Trudi determinant")
    p.add_argument("--mu", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--check-positive", action="store_true")

    p = add("plucker-demo", cmd_plucker, "print a Pluecker relation in bracket notation")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--c", required=True, help="comma-separated subset of 1..p")
    return parser


def _check_args(parser, args) -> None:
    if args.command == "poset":
        need = {"pn": ["n"], "dealings": ["gamma"], "compare": ["gamma1", "gamma2"]}[args.kind]
        missing = [f"--{k}" for k in need if getattr(args, k) is None]
        if missing:
            parser.error(f"poset {args.kind} needs {', '.join(missing)}")
    if args.command == "verify" and (args.bound < 0 or args.workers < 1):
        parser.error("--bound must be >= 0 and --workers >= 1")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_args(parser, args)
    try:
        return args.func(args)
    except ValueError as exc:  # SchurposError derives from ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
