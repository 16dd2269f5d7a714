"""Command-line interface: ``lgmodel group|statespace|mirror|paper-suite``.

Exit codes: 0 success, 1 regression, 2 input error, 3 internal invariant
violation, 4 mirror map not bijective.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import suite
from .mirror import (MirrorError, NotBijective, build_mirror_map, diff_against_table,
                     is_fermat_quintic, is_two_cubics, quintic_untwisted)
from .modelfile import BUILTIN, ModelFileError, resolve_model
from .polycore import InvalidModel, ParseError
from .statespace import InvariantViolation, assemble, render
from .symmetry import GroupTooLarge, NotASymmetry, build_group, orbit_type, polynomial_automorphisms

OK, REGRESSION, INPUT_ERROR, INVARIANT, NOT_BIJECTIVE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _load(source: str):
    try:
        return resolve_model(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def cmd_group(args) -> int:
    model = _load(args.model)
    G = build_group(model)
    S = assemble(model, G)
    perms = polynomial_automorphisms(model)
    types: dict = {}
    for s in S.sectors:
        types.setdefault(orbit_type(s.element, model, perms), []).append(s)
    shown = S.sectors if args.all else S.contributing
    print(f"model {model.name}, group {G.name}: order {G.order_mod_torus()} modulo the torus")
    print(f"{len(S.sectors)} elements fix a coordinate, {len(S.contributing)} contribute")
    print(f"{'element':>28} {'n':>2} {'r':>2} {'age':>4} {'#type':>5}")
    for s in shown:
        mult = len(types[orbit_type(s.element, model, perms)])
        print(f"{s.element.label():>28} {s.fd.n_gamma:>2} {s.fd.r_gamma:>2} {str(s.fd.age):>4} {mult:>5}")
    return OK


def cmd_statespace(args) -> int:
    model = _load(args.model)
    S = assemble(model, policy=args.policy)
    print(render(S, args.format))
    return OK


def cmd_mirror(args) -> int:
    a, b = _load(args.source), _load(args.target)
    if not ((is_two_cubics(a) and is_two_cubics(b)) or (is_fermat_quintic(a) and is_fermat_quintic(b))):
        raise UsageError("mirror needs the pair of cubics or the pair of quintics")
    A, B = assemble(a), assemble(b)
    out: dict = {"source_model": a.name, "target_model": b.name, "maps": []}
    degrees = [1] if is_two_cubics(a) else list(range(a.n - a.r))
    failed = None
    for k in degrees:
        try:
            M = build_mirror_map(A, B, k)
        except NotBijective as exc:
            failed = exc
            continue
        out["maps"].append(M.to_json())
        if args.check and is_two_cubics(a):
            diff = diff_against_table(M)
            out["table_diff"] = [{"element": list(d.row.ninths), "generator": d.row.omega,
                                  "printed": d.row.target, "computed": d.computed,
                                  "status": d.status, "detail": d.detail} for d in diff]
    if is_fermat_quintic(a):
        out["untwisted"] = [{"source": p.source.text(a.all_names), "target": p.target.text(b.all_names)}
                            for p in quintic_untwisted(A)]
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        _print_mirror(out)
    if failed is not None:
        print(f"not bijective: {failed}", file=sys.stderr)
        for lab in failed.dependent:
            print(f"  {lab}", file=sys.stderr)
        return NOT_BIJECTIVE
    if args.check and any(d["status"] == "unexpected" for d in out.get("table_diff", [])):
        return REGRESSION
    return OK


def _print_mirror(out: dict) -> None:
    for M in out["maps"]:
        print(f"# degree {M['degree']}: {len(M['pairs'])} generators, rank {M['rank']}")
        for p in M["pairs"]:
            print(f"{p['source']['generator']:>40}  ->  {p['target_monomial']}|id>   [{p['provenance']}]")
    if "untwisted" in out:
        print(f"# untwisted: {len(out['untwisted'])} generators")
        for p in out["untwisted"]:
            print(f"{p['source']:>40}  ->  {p['target']}")
    if "table_diff" in out:
        diff = out["table_diff"]
        counts = {s: sum(d["status"] == s for d in diff) for s in ("match", "documented-typo", "unexpected")}
        print(f"# table comparison: {counts['match']} match, {counts['documented-typo']} documented "
              f"misprints, {counts['unexpected']} unexpected")
        for d in diff:
            if d["status"] != "match":
                print(f"  {d['status']}: {d['generator']}|{d['element']}> printed {d['printed']}, "
                      f"computed {d['computed']}")


def cmd_regression_suite(args) -> int:
    overrides = {}
    for item in args.model or []:
        name, eq, path = item.partition("=")
        if not eq or name not in BUILTIN:
            raise UsageError(f"--model expects NAME=PATH with NAME one of {', '.join(BUILTIN)}")
        overrides[name] = _load(path)
    failures = total = 0
    only = set(args.only) if args.only else None
    for num, title, res in suite.run(overrides, only):
        total += 1
        failures += not res.ok
        print(f"[{'PASS' if res.ok else 'FAIL'}] {num}. {title}: {res.detail}")
        for d in res.discrepancies:
            print(f"       discrepancy: {d}")
    print(f"{total - failures} passed, {failures} failed")
    return REGRESSION if failures else OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lgmodel", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    models = f"model file, or one of: {', '.join(BUILTIN)}"

    p = sub.add_parser("group", help="list group elements that fix a coordinate")
    p.add_argument("model", help=models)
    p.add_argument("--all", action="store_true", help="include sectors that contribute nothing")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("statespace", help="Hodge diamond and per-sector breakdown")
    p.add_argument("model", help=models)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--policy", choices=("dual", "direct"), default="dual",
                   help="fill upper Jacobi slices by duality (default) or compute them")
    p.set_defaults(func=cmd_statespace)

    p = sub.add_parser("mirror", help="explicit mirror map between two models")
    p.add_argument("source", help=models)
    p.add_argument("target", help=models)
    p.add_argument("--check", action="store_true", help="compare with the reference table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("paper-suite", help="run the regression checks")
    p.add_argument("--model", action="append", metavar="NAME=PATH",
                   help="replace a built-in model (repeatable)")
    p.add_argument("--only", type=int, action="append", metavar="N",
                   choices=range(1, len(suite.CHECKS) + 1), help="run only check N (repeatable)")
    p.set_defaults(func=cmd_regression_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ModelFileError, ParseError, InvalidModel, NotASymmetry, GroupTooLarge,
            MirrorError, ValueError) as exc:
        print(f"lgmodel: error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except InvariantViolation as exc:
        print(f"lgmodel: internal invariant violated: {exc}", file=sys.stderr)
        return INVARIANT


if __name__ == "__main__":
    sys.exit(main())
