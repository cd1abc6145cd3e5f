"""Command-line interface.

    leibniz check FILE [right|left|both|lie|assoc]
    leibniz catalog list [--side S] [--codim K] [--n N]
    leibniz catalog build ID [--n N] [--param k=v ...] [--out FILE]
    leibniz analyze FILE series|center|derive|fingerprint|nilradical [--n N]
    leibniz transform FILE --matrix P.json [--expect TARGET.json] [--out FILE]
    leibniz verify-paper [--suite NAME]

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on input errors.  ``--json`` prints the same report as JSON.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import catalog
from .algebra import FormatError, load_table, serialize_table
from .catalog import InadmissibleParameters
from .derivations import derivation_space
from .extensions import apply_basis_change, load_basis_change, table_diff, verify_nilradical
from .identity import check_left_leibniz, check_right_leibniz, center, check_associativity, is_lie, check_jacobi
from .ratmat import format_rational, parse_rational
from .series import derived_series, lower_central_series
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    """Per-check verdicts plus free-form output lines, rendered as text or JSON."""

    def __init__(self, command: list[str]):
        self.command = command
        self.checks: list[dict] = []
        self.lines: list[str] = []
        self.data: dict = {}
        self.start = time.perf_counter()

    def check(self, name: str, passed: bool, evidence: str = "", informational: bool = False) -> None:
        self.checks.append({"check": name, "passed": bool(passed), "evidence": evidence,
                            "informational": informational})

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if all(c["passed"] for c in self.checks if not c["informational"]) else EXIT_FAIL

    def as_dict(self) -> dict:
        return {
            "command": " ".join(self.command),
            "checks": self.checks,
            "data": self.data,
            "output": self.lines,
            "seconds": round(time.perf_counter() - self.start, 3),
            "exit": self.exit_code,
        }

    def render_text(self) -> str:
        out = list(self.lines)
        for c in self.checks:
            tag = "PASS" if c["passed"] else ("NOTE" if c["informational"] else "FAIL")
            line = f"{tag}  {c['check']}"
            if c["evidence"]:
                line += f"  [{c['evidence']}]"
            out.append(line)
        if self.checks:
            failed = sum(1 for c in self.checks if not c["passed"] and not c["informational"])
            out.append(f"{len(self.checks)} checks, {failed} failed")
        return "\n".join(out)


# --------------------------------------------------------------------------
# Helpers
# --------------------------------------------------------------------------

def _load(path: str):
    try:
        return load_table(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except (FormatError, IndexError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_param_value(text: str):
    if "," in text:
        return tuple(_parse_param_value(x) for x in text.split(","))
    try:
        return parse_rational(text)
    except ValueError:
        try:
            return Fraction(text)
        except ValueError:
            raise InputError(f"parameter value {text!r} is not a rational number") from None


def _parse_params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"parameter {item!r} must look like name=value")
        k, v = item.split("=", 1)
        out[k.strip()] = _parse_param_value(v.strip())
    return out


def _identity_failures(rep, limit=3) -> str:
    if rep.holds:
        return ""
    shown = []
    for triple, defect in rep.failures[:limit]:
        coeffs = ", ".join(f"e{k + 1}:{format_rational(c)}" for k, c in enumerate(defect) if c)
        shown.append(f"{triple} defect {{{coeffs}}}")
    more = f" (+{len(rep.failures) - limit} more)" if len(rep.failures) > limit else ""
    return "; ".join(shown) + more


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_check(args, report: Report) -> None:
    t = _load(args.file)
    report.data["dim"] = t.dim
    what = args.what
    if what in ("right", "both"):
        rep = check_right_leibniz(t)
        report.check("right Leibniz identity", rep.holds, _identity_failures(rep))
    if what in ("left", "both"):
        rep = check_left_leibniz(t)
        report.check("left Leibniz identity", rep.holds, _identity_failures(rep))
    if what == "lie":
        ok = is_lie(t)
        report.check("Lie algebra (anticommutative and Jacobi)", ok,
                     "" if ok else _identity_failures(check_jacobi(t)) or "not anticommutative")
    if what == "assoc":
        rep = check_associativity(t)
        report.check("associativity", rep.holds, _identity_failures(rep))


def cmd_catalog_list(args, report: Report) -> None:
    sides = [args.side] if args.side else ["right", "left"]
    codims = [args.codim] if args.codim else [1, 2]
    rows = []
    for side in sides:
        for codim in codims:
            try:
                entries = catalog.enumerate_families(side, codim, args.n)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            if codim == 3:
                report.say(f"{side} codim 3: {catalog.CODIM3_NOTE}")
            for e in entries:
                dim = f"{e.fixed_n + e.codim}" if e.fixed_n is not None else f"n+{e.codim} (n>={e.min_n})"
                params = ",".join(p.name for p in e.params) or "-"
                rows.append({"side": side, "codim": codim, "id": e.cli_id, "name": e.id, "dim": dim,
                             "params": params, "conditions": e.condition_text(), "shared": e.side == "both"})
    for r in rows:
        report.say(f"{r['side']:5} {r['codim']}  {r['id']:7} {r['name']:10} dim {r['dim']:14} "
                   f"params {r['params']:10} {r['conditions']}")
    report.data["families"] = rows


def cmd_catalog_build(args, report: Report) -> None:
    if args.id.upper() == "L4":
        if args.n is None or args.n < 4:
            raise InputError("L4 needs --n with n >= 4")
        _emit_table(args, report, catalog.build_L4(args.n), f"L4({args.n}) dim={args.n}")
        return
    try:
        entry = catalog.get_entry(args.id)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    n = args.n if args.n is not None else entry.fixed_n
    if n is None:
        raise InputError(f"{entry.id} needs --n")
    params = _parse_params(args.param)
    try:
        t = catalog.build(args.id, n, params)
    except InadmissibleParameters as exc:
        report.check("parameters admissible", False, str(exc))
        return
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit_table(args, report, t, f"{entry.id} n={n} dim={t.dim}")


def _emit_table(args, report: Report, t, label: str) -> None:
    text = serialize_table(t)
    report.check("parameters admissible", True, label)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report.say(f"wrote {args.out}")
    else:
        report.data["algebra"] = json.loads(text)
        report.say(text.rstrip())


def cmd_analyze(args, report: Report) -> None:
    t = _load(args.file)
    what = args.what
    if what == "series":
        ds, ls = derived_series(t), lower_central_series(t)
        report.say(f"DS={ds.signature()} LS={ls.signature()}")
        report.data.update(ds=list(ds.dims), ls=list(ls.dims))
    elif what == "center":
        c = center(t)
        report.say(f"center dim {c.dim}: {c.describe()}")
        report.data.update(center_dim=c.dim, center=[[format_rational(x) for x in v] for v in c.vectors()])
    elif what == "derive":
        basis = derivation_space(t)
        report.say(f"derivation space dim {basis.dim}")
        for k, m in enumerate(basis.basis, start=1):
            report.say(f"d{k} = " + "; ".join(" ".join(format_rational(x) for x in m.row(r)) for r in range(m.rows)))
        report.data["derivation_dim"] = basis.dim
    elif what == "fingerprint":
        fp = catalog.fingerprint(t)
        for k, v in fp.as_dict().items():
            report.say(f"{k}: {v}")
        report.data["fingerprint"] = fp.as_dict()
    elif what == "nilradical":
        if args.n is None:
            raise InputError("analyze nilradical needs --n")
        try:
            rep = verify_nilradical(t, args.n)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        report.say(f"nilradical evidence for span(e1..e{args.n}) in dim {t.dim} ({rep.side} side)")
        for it in rep.items:
            report.check(f"({it.number}) {it.claim}", it.passed is not False, it.detail,
                         informational=it.passed is None)


def cmd_transform(args, report: Report) -> None:
    t = _load(args.file)
    try:
        P = load_basis_change(args.matrix)
    except OSError as exc:
        raise InputError(f"cannot read {args.matrix}: {exc.strerror or exc}") from None
    except FormatError as exc:
        raise InputError(f"{args.matrix}: {exc}") from None
    except ValueError as exc:
        report.check("change of basis is invertible", False, str(exc))
        return
    if P.dim != t.dim:
        raise InputError(f"matrix is {P.dim}x{P.dim} but the algebra has dim {t.dim}")
    new = apply_basis_change(t, P)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_table(new))
        report.say(f"wrote {args.out}")
    if args.expect:
        target = _load(args.expect)
        diff = table_diff(new, target)
        report.check("transformed table equals the expected table", not diff, diff[0] if diff else "")
    elif not args.out:
        report.data["algebra"] = json.loads(serialize_table(new))
        report.say(serialize_table(new).rstrip())


def cmd_verify_paper(args, report: Report) -> None:
    try:
        results = run_suites(args.suite)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    report.data["suites"] = [r.as_dict() for r in results]
    for r in results:
        failed = r.failures()
        report.check(f"suite {r.name}: {len(r.claims)} claims", r.passed,
                     f"{len(failed)} failed, {r.seconds:.2f}s")
        for c in r.claims:
            if not c.passed and not c.informational:
                report.say(f"FAIL  [{r.name}] {c.claim}: {c.subject}  {c.detail}")
            elif c.informational:
                report.say(f"NOTE  [{r.name}] {c.claim}: {c.subject}  {c.detail}")


# --------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    parser = argparse.ArgumentParser(prog="leibniz", description=__doc__.split("\n\n")[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check defining identities of an algebra file")
    p.add_argument("file")
    p.add_argument("what", nargs="?", default="both", choices=["right", "left", "both", "lie", "assoc"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("catalog", parents=[common], help="list or build classified algebras")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("list", parents=[common])
    q.add_argument("--side", choices=["right", "left"])
    q.add_argument("--codim", type=int, choices=[1, 2, 3])
    q.add_argument("--n", type=int)
    q.set_defaults(func=cmd_catalog_list)
    q = csub.add_parser("build", parents=[common])
    q.add_argument("id")
    q.add_argument("--n", type=int)
    q.add_argument("--param", nargs="*", default=[], metavar="K=V")
    q.add_argument("--out")
    q.set_defaults(func=cmd_catalog_build)

    p = sub.add_parser("analyze", parents=[common], help="series, center, derivations, fingerprint, nilradical")
    p.add_argument("file")
    p.add_argument("what", choices=["series", "center", "derive", "fingerprint", "nilradical"])
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", parents=[common], help="apply a change of basis")
    p.add_argument("file")
    p.add_argument("--matrix", required=True)
    p.add_argument("--expect")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify-paper", parents=[common], help="run the reproduction suites")
    p.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    report = Report(["leibniz"] + argv)
    try:
        args.func(args, report)
    except InputError as exc:
        if args.json:
            print(json.dumps({"command": " ".join(report.command), "error": str(exc), "exit": EXIT_INPUT}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.render_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
