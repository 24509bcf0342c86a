"""Command-line interface.

Exit status: 0 success, 1 invalid graph, 2 hypothesis not satisfied,
3 usage error, 4 an oracle cross-check failed.
"""
import argparse
import sys
from pathlib import Path

from . import __version__
from . import elliptic as el
from . import invariants as inv
from . import oracle as orc
from . import report
from .cycles import PreconditionError
from .graph import GraphSyntaxError, InvalidGraphError, parse_graph, validate

EXIT_OK, EXIT_INVALID, EXIT_HYPOTHESIS, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path, allow_nonminimal):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    g = parse_graph(text)
    violations = validate(g, allow_nonminimal=allow_nonminimal)
    if violations:
        raise InvalidGraphError(violations)
    if allow_nonminimal:
        for v in g.vertices:
            if v.smooth_rational and v.self_int == -1:
                print(f"warning: vertex {v.id} is a contractible -1 curve; results carry no guarantee",
                      file=sys.stderr)
    return g


def _assumptions(args):
    return (inv.GORENSTEIN,) if getattr(args, "assume_gorenstein", False) else ()


def _emit(args, doc, lines):
    if args.json:
        print(report.dumps(doc))
    else:
        print("\n".join(lines))


def cmd_validate(args):
    try:
        g = parse_graph(Path(args.file).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    violations = validate(g, allow_nonminimal=args.allow_nonminimal)
    doc = report.document(g, "validate", extra={"violations": [v.message for v in violations]})
    _emit(args, doc, [v.message for v in violations] or ["valid"])
    return EXIT_INVALID if violations else EXIT_OK


def cmd_classify(args):
    g = _load(args.file, args.allow_nonminimal)
    assumptions = _assumptions(args)
    r = inv.classify(g)
    pg = inv.geometric_genus(g, r, assumptions)
    seq = el.elliptic_sequence(g) if r.m_plus_one else None
    rep = inv.InvariantReport(assumptions, r, pg, hypothesis_trail=pg.trail)
    doc = report.document(g, "classify", assumptions, r, seq, rep)
    lines = report.classification_text(r)
    lines.append(f"p_g = {pg}" + (f"  [{pg.note}]" if pg.note else ""))
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_sequence(args):
    g = _load(args.file, args.allow_nonminimal)
    seq = el.elliptic_sequence(g)
    doc = report.document(g, "sequence", sequence=seq)
    _emit(args, doc, report.sequence_text(g, seq))
    return EXIT_OK


def cmd_invariants(args):
    g = _load(args.file, args.allow_nonminimal)
    assumptions = _assumptions(args)
    rep = inv.invariant_report(g, assumptions)
    r = rep.classification
    seq = el.elliptic_sequence(g) if r.m_plus_one else None
    doc = report.document(g, "invariants", assumptions, r, seq, rep)
    _emit(args, doc, report.classification_text(r) + report.invariants_text(rep))
    if rep.refused:
        print(rep.refused, file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_OK


def cmd_hilbert(args):
    if args.k < 1:
        raise UsageError("--k must be a positive integer")
    g = _load(args.file, args.allow_nonminimal)
    assumptions = _assumptions(args)
    colength, graded = inv.hilbert_samuel(g, args.k, assumptions)
    result = {"k": args.k, "colength": colength, "graded_piece": graded}
    doc = report.document(g, "hilbert", assumptions, extra=result)
    _emit(args, doc, [f"k = {args.k}", f"dim O/m^k = {colength}", f"dim m^k/m^(k+1) = {graded}"])
    return EXIT_OK


def cmd_verify(args):
    g = _load(args.file, args.allow_nonminimal)
    bound = orc.parse_cap_spec(g, args.oracle_cap) if args.oracle_cap else None
    rows = orc.run_checks(g, bound)
    doc = report.document(g, "verify", oracle=rows)
    width = max(len(r["check"]) for r in rows)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']:<{width}}  {r['detail']}" for r in rows]
    _emit(args, doc, lines)
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_VERIFY


def _batch_one(path, assumptions):
    try:
        g = _load(path, False)
    except (GraphSyntaxError, InvalidGraphError) as exc:
        return None, str(exc)
    r = inv.classify(g)
    pg = inv.geometric_genus(g, r, assumptions)
    return (g, r, pg), None


def cmd_batch(args):
    directory = Path(args.dir)
    if not directory.is_dir():
        raise UsageError(f"{args.dir} is not a directory")
    assumptions = _assumptions(args)
    status = EXIT_OK
    for path in sorted(directory.glob("*.graph")):
        res, err = _batch_one(path, assumptions)
        if err is not None:
            status = EXIT_INVALID
            if args.json:
                print(report.dumps({"file": path.name, "error": err}, lines=True))
            else:
                print(f"{path.name}: invalid: {err}")
            continue
        g, r, pg = res
        if args.json:
            doc = report.document(g, "batch", assumptions, r,
                                  invariants=inv.InvariantReport(assumptions, r, pg, hypothesis_trail=pg.trail))
            print(report.dumps({"file": path.name, **doc}, lines=True))
        else:
            extra = f" m+1={r.m_plus_one}" if r.m_plus_one else ""
            print(f"{path.name}: {r.cls} chi={r.chi_znum} Z_num={report.fmt_cycle(r.znum)} "
                  f"Z_K={report.fmt_cycle(r.zk)}{extra} p_g={pg}")
    return status


def build_parser():
    p = _Parser(prog="resgraph", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"resgraph {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_, file_arg="file"):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument(file_arg)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--allow-nonminimal", action="store_true",
                        help="accept smooth rational -1 curves (warning only)")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a graph file")
    sp = add("classify", cmd_classify, "rational / elliptic / neither, Z_num, Z_K, m+1")
    sp.add_argument("--assume-gorenstein", action="store_true")
    add("sequence", cmd_sequence, "list the elliptic sequence")
    sp = add("invariants", cmd_invariants, "geometric genus, multiplicity, embedding dimension")
    sp.add_argument("--assume-gorenstein", action="store_true")
    sp = add("hilbert", cmd_hilbert, "Hilbert-Samuel function at k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--assume-gorenstein", action="store_true")
    sp = add("verify", cmd_verify, "brute-force cross-checks")
    sp.add_argument("--oracle-cap", help="'default', 'znum*<n>' or comma separated coefficients")
    sp = add("batch", cmd_batch, "classify every *.graph file in a directory", file_arg="dir")
    sp.add_argument("--assume-gorenstein", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphSyntaxError, InvalidGraphError) as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (inv.HypothesisError, PreconditionError) as exc:
        msg = str(exc)
        if not msg.startswith("hypothesis not satisfied"):
            msg = f"hypothesis not satisfied: {msg}"
        print(msg, file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (UsageError, orc.OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
