"""Command-line front end.

Exit status: 0 for determinate verdicts and passing verifications, 2 for an
undetermined verdict (the report is still printed), 1 for invalid
invocations and failed verifications.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .classify import UNDETERMINED, classify_hol
from .homcheck import sweep
from .parabolic import parabolic_from_nodes, parabolic_from_vector
from .realform import lookup_real_form
from .repthy import s_dimension, vanishing_condition
from .rootsys import SimpleType, build_root_system

SCHEMA_VERSION = "1.0"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}")


def _common(sub, *, orbit=False, real_form=False, real_form_required=False):
    sub.add_argument("--type", dest="family", choices=list("ABCDEFG"), type=str.upper)
    sub.add_argument("--rank", type=int)
    if real_form:
        sub.add_argument("--real-form", required=real_form_required)
    if orbit:
        group = sub.add_mutually_exclusive_group(required=True)
        group.add_argument("--nodes", type=_int_list)
        group.add_argument("--lambda0", type=_int_list)
    sub.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="holflag", description=(
        "Holomorphic automorphism groups of open real-form orbits in flag manifolds."
    ))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = subs.add_parser("classify", help="classify Hol(D) for one open orbit")
    _common(p, orbit=True, real_form=True, real_form_required=True)

    p = subs.add_parser("sweep", help="killing-chain search over all node sets")
    _common(p)

    p = subs.add_parser("verify", help="run the table reproduction suites")
    p.add_argument("--tables", action="store_true", help="run every table suite (default)")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = subs.add_parser("vanishing", help="test the cohomology vanishing condition for chi")
    _common(p, orbit=True)
    p.add_argument("--chi", type=_int_list, required=True)

    p = subs.add_parser("sdim", help="degree s = dim_C of the base cycle K0.z0")
    _common(p, orbit=True, real_form=True, real_form_required=True)
    return parser


def _resolve_type(args, rf=None) -> SimpleType:
    if args.family is None and args.rank is None:
        if rf is None:
            raise UsageError("--type and --rank are required")
        return rf.complex_type
    if args.family is None or args.rank is None:
        raise UsageError("--type and --rank must be given together")
    t = SimpleType(args.family, args.rank)
    if rf is not None and rf.complex_type != t:
        raise UsageError(
            f"real form {rf.name} has complex type {rf.complex_type}, not {t}"
        )
    return t


def _parabolic(args, rs):
    if args.nodes is not None:
        return parabolic_from_nodes(rs, args.nodes)
    return parabolic_from_vector(rs, args.lambda0)


def _orbit_input(args, t, rf=None) -> dict:
    out = {"type": str(t)}
    if rf is not None:
        out["real_form"] = rf.name
    if args.nodes is not None:
        out["nodes"] = sorted(set(args.nodes))
    else:
        out["lambda0"] = list(args.lambda0)
    return out


def _cmd_classify(args):
    rf = lookup_real_form(args.real_form)
    t = _resolve_type(args, rf)
    p = _parabolic(args, build_root_system(t))
    result = classify_hol(rf, p)
    report = {"command": "classify", "input": _orbit_input(args, t, rf), **result.to_dict()}
    if args.lambda0 is not None:
        report["input"]["canonical_nodes"] = sorted(p.nodes)
    return report, (2 if result.kind == UNDETERMINED else 0)


def _cmd_sweep(args):
    t = _resolve_type(args)
    rep = sweep(build_root_system(t))
    results = [
        {
            "nodes": sorted(phi),
            "chain_found": cert is not None,
            "certificate": None if cert is None else cert.to_dict(),
        }
        for phi, cert in rep.results
    ]
    exceptions = sorted(sorted(phi) for phi in rep.exceptions)
    return {
        "command": "sweep",
        "input": {"type": str(t)},
        "results": results,
        "exceptions": exceptions,
        "notes": list(rep.notes),
    }, 0


def _cmd_vanishing(args):
    t = _resolve_type(args)
    p = _parabolic(args, build_root_system(t))
    holds = vanishing_condition(p, args.chi)
    inp = _orbit_input(args, t)
    inp["chi"] = list(args.chi)
    return {"command": "vanishing", "input": inp, "holds": holds}, 0


def _cmd_sdim(args):
    rf = lookup_real_form(args.real_form)
    t = _resolve_type(args, rf)
    p = _parabolic(args, build_root_system(t))
    return {
        "command": "sdim",
        "input": _orbit_input(args, t, rf),
        "s": s_dimension(rf, p),
        "dim_flag": p.dim_flag,
    }, 0


def _cmd_verify(args):
    from .tables import run_all_tables

    checks = run_all_tables()
    ok = all(c["ok"] for c in checks)
    return {"command": "verify", "input": {"tables": True}, "checks": checks, "ok": ok}, (
        0 if ok else 1
    )


COMMANDS = {
    "classify": _cmd_classify,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "vanishing": _cmd_vanishing,
    "sdim": _cmd_sdim,
}


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def _fmt(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return "-" if v is None else str(v)


def render_text(report: dict) -> str:
    lines = [f"holflag {report['command']} (schema {report['schema_version']})"]
    for key, value in sorted(report["input"].items()):
        lines.append(f"  {key}: {_fmt(value)}")
    cmd = report["command"]
    if cmd == "classify":
        for key in ("kind", "group", "source"):
            lines.append(f"{key}: {_fmt(report[key])}")
        cert = report["certificate"]
        if cert is not None:
            lines.append("certificate:")
            for b in cert["betas"]:
                lines.append(f"  beta {_fmt(b)}")
            lines.append(f"  endpoint {_fmt(cert['endpoint'])}")
        for note in report["notes"]:
            lines.append(f"note: {note}")
        if report["isometry_note"]:
            lines.append(f"isometries: {report['isometry_note']}")
    elif cmd == "sweep":
        for row in report["results"]:
            status = "chain found" if row["chain_found"] else "no chain"
            lines.append(f"  nodes {_fmt(row['nodes'])}: {status}")
            if row["certificate"]:
                c = row["certificate"]
                lines.append(f"    betas {_fmt(c['betas'])} -> {_fmt(c['endpoint'])}")
        lines.append(f"exceptions: {_fmt(report['exceptions'])}")
        for note in report["notes"]:
            lines.append(f"note: {note}")
    elif cmd == "verify":
        for c in report["checks"]:
            lines.append(f"  [{'PASS' if c['ok'] else 'FAIL'}] {c['name']}: {c['detail']}")
        lines.append(f"ok: {report['ok']}")
    elif cmd == "vanishing":
        lines.append(f"holds: {report['holds']}")
    elif cmd == "sdim":
        lines.append(f"s: {report['s']}")
        lines.append(f"dim_flag: {report['dim_flag']}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report, code = COMMANDS[args.verb](args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    report = {"schema_version": SCHEMA_VERSION, **report}
    fmt = getattr(args, "format", "text")
    stdout.write(render_json(report) if fmt == "json" else render_text(report))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
