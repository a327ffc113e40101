"""rationalgenus command line: d tables, Theta tables, bounds, cone and profile checks."""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from pathlib import Path

from . import conelab, vhprofile
from .dinvariant import d_lens
from .errors import InputError, InternalConsistencyError, TruncationError
from .genusbounds import bound_report, nu_plus_of_class
from .homology import LensSpace, Manifold, order_of_class, parse_tuple, rational_longitude
from .serialize import frac_str, to_csv, to_json
from .simpleknot import theta_row, u_knot_class, u_knot_gradings


class ConsistencyFailure(Exception):
    """Command ran but one of its checks failed; output is still written."""


def _lens_arg(text: str) -> LensSpace:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"--lens expects p,q; got {text!r}") from exc
    return LensSpace(p, q)


def _coprime_pairs(p_max: int):
    yield 1, 1
    for p in range(2, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q


def _table(header, rows, fmt):
    if fmt == "json":
        return to_json([dict(zip(header, r)) for r in rows])
    return to_csv(header, rows)


def cmd_dtable(args) -> tuple[str, dict]:
    if args.pmax < 1:
        raise InputError(f"--pmax must be >= 1, got {args.pmax}")
    rows = [(p, q, i, d_lens(p, q, i)) for p, q in _coprime_pairs(args.pmax) for i in range(p)]
    return _table(("p", "q", "i", "d"), rows, args.format), {"pmax": args.pmax}


def cmd_theta(args) -> tuple[str, dict]:
    L = _lens_arg(args.lens)
    rows = []
    for a in range(L.p):
        r = theta_row(L, a)
        rows.append((r.cls, r.theta, r.d_gap, r.a_max, r.parity_ok, r.symmetry_ok))
    header = ("a", "theta", "d_gap", "a_max", "parity_ok", "symmetry_ok")
    return _table(header, rows, args.format), {"lens": str(L)}


def cmd_uknot(args) -> tuple[str, dict]:
    g = u_knot_gradings(args.p, args.n)
    match = u_knot_class(args.p, args.n)
    data = {
        "lens": str(match.lens),
        "class": match.chosen,
        "matching_classes": list(match.classes),
        "gradings": sorted(g.values),
        "a_max": g.a_max,
    }
    return to_json(data), {"p": args.p, "n": args.n}


def cmd_bounds(args) -> tuple[str, dict]:
    if args.sweep is not None:
        rows = []
        for p, q in _coprime_pairs(args.sweep):
            Y = Manifold.lens(p, q)
            for a in range(p):
                r = theta_row(LensSpace(p, q), a)
                nu = nu_plus_of_class(Y, (a,))
                eq = "seifert;slice" if r.theta == r.d_gap - 1 else ""
                rows.append((p, q, a, r.d_gap, r.theta, nu, eq))
        header = ("p", "q", "a", "d_gap", "theta", "nu", "equality_flags")
        return _table(header, rows, args.format), {"sweep_pmax": args.sweep}
    if args.cls is None or (args.lens is None and args.manifold is None):
        raise InputError("bounds needs --lens/--manifold with --class, or --sweep")
    Y = Manifold.parse(args.manifold) if args.manifold else Manifold((_lens_arg(args.lens),))
    a = parse_tuple(args.cls)
    lon = None
    if args.longitude:
        p1, q1 = (int(x) for x in args.longitude.split(","))
        lon = rational_longitude(order_of_class(Y, Y.check(a)), p1, q1)
    report = bound_report(Y, a, lon)
    problems = report.check()
    text = to_json(report.to_json())
    if problems:
        raise ConsistencyFailure("; ".join(problems))
    return text, {"manifold": str(Y), "class": list(a)}


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def check_cone(C: conelab.CircularCone, depth: int | None) -> dict:
    """Pattern and oracle verdicts for one cone plus any soundness violations."""
    row = {"labels": conelab.describe(C), "cells": [list(c) for c in C.cells], "A": C.a_cone}
    iv = conelab.find_nonsurjective_interval(C)
    star = conelab.star_nonsurjective(C)
    pv = conelab.pattern_verdict(C)
    row["interval"] = str(iv) if iv else None
    row["star"] = star
    row["pattern"] = pv.verdict if pv else "no-claim"
    try:
        ov = conelab.oracle_surjective(C, depth)
        deeper = conelab.oracle_surjective(C, ov.depth + 3)
    except TruncationError as exc:
        row["refused"] = str(exc)
        return row
    row["oracle"] = ov.verdict
    row["depth"] = ov.depth
    row["witness"] = ov.witness
    violations = []
    if deeper.surjective != ov.surjective:
        violations.append("oracle verdict changed at depth+3")
    if iv is not None and ov.surjective:
        violations.append(f"interval {iv} but oracle says surjective")
    if star and ov.surjective:
        violations.append("star present but oracle says surjective")
    if star and iv is None:
        violations.append("star present but no bad interval found")
    row["violations"] = violations
    return row


def cmd_cone_check(args) -> tuple[str, dict]:
    if args.file:
        data = _load_json(args.file)
        items = data["cones"] if isinstance(data, dict) and "cones" in data else data
        if isinstance(items, dict):
            items = [items]
        cones = [conelab.CircularCone.from_json(x) for x in items]
    else:
        cones = conelab.random_cones(args.seed, args.count)
    rows = [check_cone(C, args.depth) for C in cones]
    refusals = [i for i, r in enumerate(rows) if "refused" in r]
    violations = sum(len(r.get("violations", ())) for r in rows)
    checked = [r for r in rows if "refused" not in r]
    summary = {
        "cones": len(rows),
        "checked": len(checked),
        "refusals": len(refusals),
        "refused_indices": refusals,
        "violations": violations,
        "oracle_surjective": sum(r["oracle"] == "surjective" for r in checked),
        "pattern_claims": sum(r["pattern"] != "no-claim" for r in rows),
    }
    text = to_json({"summary": summary, "cones": rows})
    ranges = {"source": args.file or "random", "count": len(cones)}
    if violations:
        raise ConsistencyFailure(f"{violations} soundness violation(s)", text, ranges)
    return text, ranges


def cmd_profile_check(args) -> tuple[str, dict]:
    if args.file:
        data = _load_json(args.file)
        items = data["profiles"] if isinstance(data, dict) and "profiles" in data else data
        if isinstance(items, dict):
            items = [items]
        profiles = [vhprofile.profile_from_json(x) for x in items]
    else:
        profiles = [vhprofile.random_profile(args.seed * 1_000_003 + i) for i in range(args.count)]
    rows = []
    for P in profiles:
        fails = vhprofile.law_failures(P)
        row = {"profile": vhprofile.profile_to_json(P), "failures": fails}
        if not fails:
            row["columns"] = [
                {
                    "base": list(b),
                    "type": vhprofile.classify_column(P, b),
                    "middle": frac_str(vhprofile.middle_structure(P, b).grading),
                    "nu_plus": frac_str(vhprofile.nu_plus(P, b)),
                }
                for b in P.bases()
            ]
        rows.append(row)
    n_bad = sum(bool(r["failures"]) for r in rows)
    text = to_json({"summary": {"profiles": len(rows), "failing": n_bad}, "profiles": rows})
    ranges = {"source": args.file or "random", "count": len(rows)}
    if n_bad:
        raise ConsistencyFailure(f"{n_bad} profile(s) failed", text, ranges)
    return text, ranges


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--depth", type=int, default=None, help="cone truncation depth (default: per-cone minimum)")
    common.add_argument("--out", default=None, help="write output here plus <out>.manifest.json")
    common.add_argument("--format", choices=("csv", "json"), default="csv", help="table format")

    ap = argparse.ArgumentParser(prog="rationalgenus", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("d-table", parents=[common], help="d(L(p,q), i) for all p <= pmax")
    s.add_argument("--pmax", type=int, required=True)
    s.set_defaults(func=cmd_dtable)

    s = sub.add_parser("theta", parents=[common], help="Theta(a) per class of a lens space")
    s.add_argument("--lens", required=True, help="p,q")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("uknot", parents=[common], help="grading multiset of the U-knot O_{p/n}")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_uknot)

    s = sub.add_parser("bounds", parents=[common], help="genus bounds for one class, or a CSV sweep")
    s.add_argument("--lens", help="p,q")
    s.add_argument("--manifold", help='connected sum, e.g. "L(5,2)#L(3,1)"')
    s.add_argument("--class", dest="cls", help="homology class, comma separated residues")
    s.add_argument("--longitude", help="p',q' (default: derived from the linking form)")
    s.add_argument("--sweep", type=int, metavar="PMAX")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("cone-check", parents=[common], help="pattern vs oracle surjectivity")
    s.add_argument("--file")
    s.add_argument("--count", type=int, default=1000)
    s.set_defaults(func=cmd_cone_check)

    s = sub.add_parser("profile-check", parents=[common], help="V/H profile law checks")
    s.add_argument("--file")
    s.add_argument("--count", type=int, default=1000)
    s.set_defaults(func=cmd_profile_check)
    return ap


def _emit(args, argv, text: str, ranges: dict) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out is None:
        sys.stdout.write(text)
        return
    out = Path(args.out)
    data = text.encode()
    try:
        out.write_bytes(data)
        manifest = {
            "argv": list(argv),
            "command": args.command,
            "seed": args.seed,
            "depth": args.depth,
            "ranges": ranges,
            "outputs": {out.name: hashlib.sha256(data).hexdigest()},
        }
        Path(f"{out}.manifest.json").write_text(to_json(manifest) + "\n")
    except OSError as exc:
        raise InputError(f"cannot write {exc.filename}: {exc.strerror}") from exc


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        text, ranges = args.func(args)
        _emit(args, argv, text, ranges)
    except ConsistencyFailure as exc:
        msg, *rest = exc.args
        if rest:
            _emit(args, argv, *rest)
        print(f"consistency failure: {msg}", file=sys.stderr)
        return 3
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
