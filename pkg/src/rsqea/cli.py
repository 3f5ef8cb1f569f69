"""Command-line front end.

    rsqea nf --algebra V "X4*X1"
    rsqea central --algebra V Z
    rsqea center --algebra U --max-degree 6
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, kernels
from .algebra import confluence_check, multiply, normal_form
from .audit import (NotStrictlyQCommuting, audit_passed, catalog_report, identity_catalog,
                    quotient_by_pbw_generator, run_identity_audit, verify_torus)
from .normality import (ZeroElement, center_basis, find_normal_spaces, is_rs_central,
                        normal_span_report)
from .parser import ParseError
from .presentations import build_presentation, printed_tower, serre_check, skew_tower_check, \
    tower_from_rules


class UsageError(Exception):
    pass


def _weight(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must look like 'a,b', got {text!r}") from None
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("weights are nonnegative")
    return (a, b)


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=("U", "V"), required=True)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--grid", type=_positive, default=None, help="exponent grid bound")

    ap = argparse.ArgumentParser(prog="rsqea", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version",
                    version=f"rsqea {__version__} (kernels: {kernels.BACKEND})")
    ap.add_argument("--list-identities", action="store_true",
                    help="print the audited identities with citations and exit")
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("nf", parents=[common], help="PBW normal form of an expression")
    p.add_argument("expr")
    p = sub.add_parser("comm", parents=[common], help="normal form of A*B - Q*B*A")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("q")
    p = sub.add_parser("central", parents=[common], help="(r,s)-centrality certificate")
    p.add_argument("expr")
    p = sub.add_parser("find-normal", parents=[common], help="normal elements of one weight")
    p.add_argument("--weight", type=_weight, required=True)
    p = sub.add_parser("center", parents=[common], help="central elements up to a degree")
    p.add_argument("--max-degree", type=_nonneg, default=8)
    p = sub.add_parser("normal-span", parents=[common],
                       help="compare normal elements with the predicted classification")
    p.add_argument("--max-degree", type=_nonneg, default=8)
    sub.add_parser("audit", parents=[common], help="check the catalogued identities")
    sub.add_parser("confluence", parents=[common], help="resolve all critical pairs")
    sub.add_parser("serre", parents=[common], help="check the defining relations")
    sub.add_parser("tower", parents=[common], help="check the printed skew polynomial data")
    sub.add_parser("torus", parents=[common], help="check the torus action")
    p = sub.add_parser("quotient", parents=[common], help="quotient by a normal PBW generator")
    p.add_argument("generator", nargs="?", default="X3")
    sub.add_parser("catalog", parents=[common], help="torus-invariant prime strata")
    return ap


def _parse(text, p):
    from .parser import parse
    return parse(text, p)


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def _report_status(rep):
    return 0 if rep.passed else 1


def cmd_nf(args, p):
    nf = normal_form(_parse(args.expr, p))
    _emit(args, nf.text(), {"input": args.expr, "normal_form": nf.text()})
    return 0


def cmd_comm(args, p):
    a = normal_form(_parse(args.a, p))
    b = normal_form(_parse(args.b, p))
    q = _parse(args.q, p)
    if set(q.terms) - {()}:
        raise UsageError("Q must be a scalar")
    qc = q.terms.get((), None)
    res = multiply(a, b) - multiply(b, a).scale(qc) if qc is not None else multiply(a, b)
    _emit(args, res.text(), {"a": args.a, "b": args.b, "q": args.q, "residual": res.text()})
    return 0


def cmd_central(args, p):
    el = normal_form(_parse(args.expr, p))
    try:
        cert = is_rs_central(el, p, args.grid)
    except ZeroElement as e:
        raise UsageError(str(e)) from None
    _emit(args, cert.text(), cert.to_dict())
    return 0


def cmd_find_normal(args, p):
    spaces = find_normal_spaces(args.weight, p, args.grid)
    dim = sum(len(s.basis) for s in spaces)
    lines = [f"dimension {dim}"]
    data = []
    for s in spaces:
        tup = ", ".join(f"{e}: r^{m} s^{n}" for e, (m, n) in zip(("e1", "e2"), s.exponents))
        for b in s.basis:
            lines.append(f"  ({tup})  {b.text()}")
            data.append({"exponents": [list(x) for x in s.exponents], "element": b.text()})
    _emit(args, "\n".join(lines), {"weight": list(args.weight), "dimension": dim,
                                   "elements": data})
    return 0


def cmd_center(args, p):
    basis = center_basis(args.max_degree, p, args.grid)
    texts = [b.text() for b in basis]
    _emit(args, f"dimension {len(texts)}: {{{', '.join(texts)}}}",
          {"max_degree": args.max_degree, "dimension": len(texts), "basis": texts})
    return 0


def cmd_normal_span(args, p):
    rep = normal_span_report(args.max_degree, p, args.grid)
    _emit(args, rep.text(), rep.to_dict())
    return 0 if rep.agree else 1


def cmd_audit(args, p):
    recs = run_identity_audit(p)
    lines = []
    for r in recs:
        lines.append(f"[{r.status}] {r.id}: {r.text}")
        if r.status != "verified":
            lines.append(f"    residual: {r.residual_text}")
        if r.correction:
            lines.append(f"    correction: {r.correction}")
    counts = {s: sum(r.status == s for r in recs) for s in ("verified", "corrected", "failed")}
    lines.append(", ".join(f"{v} {k}" for k, v in counts.items()))
    _emit(args, "\n".join(lines), [r.to_dict() for r in recs])
    return 0 if audit_passed(recs) else 1


def cmd_confluence(args, p):
    rep = confluence_check(p)
    _emit(args, rep.text(), rep.to_dict())
    return _report_status(rep)


def cmd_serre(args, p):
    rep = serre_check(p)
    _emit(args, rep.text(), rep.to_dict())
    return _report_status(rep)


def cmd_tower(args, p):
    reps = [skew_tower_check(p, tower_from_rules(p)), skew_tower_check(p, printed_tower(p.name))]
    _emit(args, "\n".join(r.text() for r in reps),
          {r.title: r.to_dict() for r in reps})
    return 0


def cmd_torus(args, p):
    rep = verify_torus(p)
    _emit(args, rep.text(), rep.to_dict())
    return _report_status(rep)


def cmd_quotient(args, p):
    try:
        qp, cls = quotient_by_pbw_generator(p, args.generator)
    except NotStrictlyQCommuting as e:
        raise UsageError(f"cannot quotient by {args.generator}: {e}") from None
    head = f"{qp.name} on generators {', '.join(qp.generators)}"
    _emit(args, head + "\n" + cls.text(), {"presentation": qp.name,
                                           "generators": list(qp.generators), **cls.to_dict()})
    return 0 if cls.confluence.passed else 1


def cmd_catalog(args, p):
    rep = catalog_report(p.name)
    _emit(args, rep.text(), rep.to_dict())
    return _report_status(rep)


COMMANDS = {
    "nf": cmd_nf, "comm": cmd_comm, "central": cmd_central, "find-normal": cmd_find_normal,
    "center": cmd_center, "normal-span": cmd_normal_span, "audit": cmd_audit,
    "confluence": cmd_confluence, "serre": cmd_serre, "tower": cmd_tower, "torus": cmd_torus,
    "quotient": cmd_quotient, "catalog": cmd_catalog,
}


def list_identities():
    for which in ("U", "V"):
        for rec in identity_catalog(which):
            print(f"{which}  {rec.id}: {rec.text}")
            print(f"      cite: {rec.citation}")


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.list_identities:
        list_identities()
        return 0
    if not args.command:
        ap.print_usage(sys.stderr)
        print("rsqea: error: a command is required", file=sys.stderr)
        return 2
    p = build_presentation(args.algebra)
    try:
        return COMMANDS[args.command](args, p)
    except (ParseError, UsageError) as e:
        print(f"rsqea: error: {e}", file=sys.stderr)
        return 2
