"""Command-line interface: ``eulerslopes <command> [options]``.

Exit status is 0 on success, 1 when a verification ran and failed, 2 for
malformed input and 3 for well-formed input outside an operation's domain.
Errors are reported on stderr as a single ``key=value`` record.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import density, figures, knots, lemmas
from .errors import DomainError, ParseError
from .euler import (Condition, FillingContext, RelEulerData, meridian_obstruction,
                    obstruction_residue, vanishing_iff)
from .records import format_csv, format_record
from .sets import EnumerationWindow, contains, enumerate_set, parse_descriptor
from .slopes import change_meridian, format_interval, format_slope, parse_interval, parse_slope

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


class Result:
    """Rows for record/CSV output plus a human-readable rendering."""

    def __init__(self, rows, text, status=EXIT_OK):
        self.rows = rows
        self.text = text
        self.status = status


def _window(args) -> EnumerationWindow:
    return EnumerationWindow(parse_interval(args.interval), args.max_denominator,
                             args.max_level)


def cmd_check(args) -> Result:
    ctx = FillingContext(k=args.k, x=args.x if args.x is not None else max(abs(args.a), 1),
                         euler_condition_1=Condition(args.condition))
    rel = RelEulerData(args.a, args.b)
    s = parse_slope(args.slope)
    residue = obstruction_residue(rel, ctx, s)
    verdict = vanishing_iff(rel, ctx, s)
    row = {"slope": format_slope(s), "a": args.a, "b": args.b, "k": args.k,
           "residue": residue, "euler_class": verdict.value}
    return Result([row], verdict.value)


def cmd_obstruct(args) -> Result:
    ctx = FillingContext(k=args.k, x=args.x)
    s = parse_slope(args.slope)
    n = meridian_obstruction(ctx, s)
    if n is None:
        return Result([{"slope": format_slope(s), "n": "none"}], "none")
    t = change_meridian(s, n)
    row = {"slope": format_slope(s), "n": n, "new_slope": format_slope(t)}
    return Result([row], f"n={n} new_slope={format_slope(t)}")


def cmd_set_member(args) -> Result:
    desc = parse_descriptor(args.set)
    s = parse_slope(args.slope)
    ans = "true" if contains(desc, s, args.max_level) else "false"
    return Result([{"set": str(desc), "slope": format_slope(s), "member": ans}], ans)


def cmd_set_enum(args) -> Result:
    desc = parse_descriptor(args.set)
    members = enumerate_set(desc, _window(args))
    rows = [{"set": str(desc), "slope": format_slope(s)} for s in members]
    return Result(rows, "\n".join(format_slope(s) for s in members))


def cmd_verify_lemmas(args) -> Result:
    checks = lemmas.lemma_suite()
    rows = [{"check": c.name, "ok": "true" if c.ok else "false", "detail": c.detail}
            for c in checks]
    status = EXIT_OK if all(c.ok for c in checks) else EXIT_FAILED
    return Result(rows, lemmas.format_lemma_report(checks).rstrip("\n"), status)


def cmd_gap(args) -> Result:
    if args.certificate:
        cert = density.parse_certificate(Path(args.certificate).read_text())
        desc = parse_descriptor(args.set) if args.set else cert.set_descriptor
    else:
        if not args.set or not args.interval:
            raise ParseError("gap needs --set and --interval, or --certificate FILE")
        desc = parse_descriptor(args.set)
        cert = density.gap_certificate(desc, parse_interval(args.interval))
    check = density.verify_certificate(desc, cert)
    doc = density.format_certificate(cert)
    if args.output:
        Path(args.output).write_text(doc)
    row = {"set": str(desc), "query_interval": format_interval(cert.query_interval),
           "cutoff_N": cert.cutoff_N,
           "certified_interval": format_interval(cert.certified_interval),
           "verification_denominator_bound": cert.verification_denominator_bound,
           "verified": "true" if check else "false", "reason": check.reason}
    text = doc + f"verified: {'true' if check else 'false'} ({check.reason})"
    return Result([row], text, EXIT_OK if check else EXIT_FAILED)


def cmd_knot_verdict(args) -> Result:
    knot = knots.parse_knot(args.knot)
    v = knots.lo_verdict(knot, parse_slope(args.slope))
    row = {"knot": str(knot), "slope": format_slope(v.slope),
           "foliation_detected": str(v.foliation_detected).lower(),
           "euler_zero": str(v.euler_zero).lower(),
           "lo_detected": str(v.lo_detected).lower()}
    text = "\n".join(f"{k}: {val}" for k, val in row.items())
    text += "\n" + "\n".join(f"used: {p}" for p in v.provenance)
    text += "\nnote: lo_detected=false means no conclusion, not non-left-orderable"
    return Result([row], text)


def cmd_knot_slopes(args) -> Result:
    knot = knots.parse_knot(args.knot)
    found = knots.lo_slopes(knot, _window(args))
    rows = [{"knot": str(knot), "slope": format_slope(s)} for s in found]
    return Result(rows, "\n".join(format_slope(s) for s in found))


def cmd_figure(args) -> Result:
    ids = list(range(1, 6)) if args.all else [args.id]
    if args.all and not args.out_dir:
        raise ParseError("figure --all needs --out-dir")
    if args.id is None and not args.all:
        raise ParseError("figure needs --id N or --all")
    rows, texts = [], []
    for fid in ids:
        spec = figures.figure_spec(fid)
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            paths = {"svg": out / f"figure{fid}.svg", "png": out / f"figure{fid}.png",
                     "csv": out / f"figure{fid}.csv"}
            paths["svg"].write_text(figures.render_svg(spec))
            paths["csv"].write_text(figures.render_csv(spec))
            figures.write_png(spec, paths["png"])
            for i, row in enumerate(spec.rows):
                counts = {c.value: sum(pt.cls is c for pt in row.points)
                          for c in figures.PointClass}
                rows.append({"figure": fid, "row": i, "label": row.label, **counts,
                             "svg": str(paths["svg"]), "png": str(paths["png"]),
                             "csv": str(paths["csv"])})
            texts.append(f"figure {fid}: wrote {paths['svg']}, {paths['png']}, {paths['csv']}")
        else:
            texts.append(figures.render_figure(spec, args.figure_format).rstrip("\n"))
            for i, row in enumerate(spec.rows):
                for pt in row.points:
                    rows.append({"figure": fid, "row": i, "label": row.label,
                                 "value": f"{pt.value.numerator}/{pt.value.denominator}",
                                 "class": pt.cls.value})
    return Result(rows, "\n".join(texts))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eulerslopes",
                description="Euler class criteria for Dehn filling slopes.")
    p.add_argument("--format", choices=("text", "records", "csv"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="congruence test for one (a, b, k, slope)")
    c.add_argument("--a", type=_int, required=True)
    c.add_argument("--b", type=_int, required=True)
    c.add_argument("--k", type=_int, default=1)
    c.add_argument("--x", type=_int, default=None,
                   help="Thurston norm (defaults to |a|; only validated)")
    c.add_argument("--condition", choices=[m.value for m in Condition], default="holds",
                   help="whether e(F) vanishes on X (default: holds)")
    c.add_argument("--slope", required=True)
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("obstruct", help="search for an obstructing meridian change")
    o.add_argument("--x", type=_int, required=True)
    o.add_argument("--k", type=_int, default=1)
    o.add_argument("--slope", required=True)
    o.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("set", help="slope set membership and enumeration")
    ssub = s.add_subparsers(dest="set_command", required=True, parser_class=_Parser)
    m = ssub.add_parser("member")
    m.add_argument("--set", required=True)
    m.add_argument("--slope", required=True)
    m.add_argument("--max-level", type=_int, default=None)
    m.set_defaults(func=cmd_set_member)
    e = ssub.add_parser("enum")
    e.add_argument("--set", required=True)
    e.add_argument("--interval", required=True)
    e.add_argument("--max-denominator", type=_int, required=True)
    e.add_argument("--max-level", type=_int, default=None)
    e.set_defaults(func=cmd_set_enum)

    v = sub.add_parser("verify", help="run verification suites")
    vsub = v.add_subparsers(dest="verify_command", required=True, parser_class=_Parser)
    vl = vsub.add_parser("lemmas")
    vl.set_defaults(func=cmd_verify_lemmas)

    g = sub.add_parser("gap", help="build and verify a gap certificate")
    g.add_argument("--set")
    g.add_argument("--interval")
    g.add_argument("--certificate", help="re-verify a certificate file instead")
    g.add_argument("--output", help="also write the certificate document here")
    g.set_defaults(func=cmd_gap)

    k = sub.add_parser("knot", help="left-orderability verdicts for knot families")
    ksub = k.add_subparsers(dest="knot_command", required=True, parser_class=_Parser)
    kv = ksub.add_parser("verdict")
    kv.add_argument("--knot", required=True)
    kv.add_argument("--slope", required=True)
    kv.set_defaults(func=cmd_knot_verdict)
    ks = ksub.add_parser("slopes")
    ks.add_argument("--knot", required=True)
    ks.add_argument("--interval", required=True)
    ks.add_argument("--max-denominator", type=_int, required=True)
    ks.set_defaults(func=cmd_knot_slopes, max_level=None)

    f = sub.add_parser("figure", help="render the built-in number-line figures")
    f.add_argument("--id", type=_int)
    f.add_argument("--all", action="store_true")
    f.add_argument("--figure-format", choices=("svg", "ascii", "csv"), default="svg",
                   help="document printed to stdout when --out-dir is not given")
    f.add_argument("--out-dir", help="write figureN.svg, .png and .csv here")
    f.set_defaults(func=cmd_figure)
    return p


def _emit(result: Result, fmt: str, stream) -> None:
    if fmt == "text":
        if result.text:
            stream.write(result.text + "\n")
    elif fmt == "records":
        for row in result.rows:
            stream.write(format_record(row) + "\n")
    else:
        if result.rows:
            stream.write(format_csv(result.rows))


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except ParseError as exc:
        stderr.write(format_record({"error": "usage", "message": str(exc)}) + "\n")
        return EXIT_USAGE
    except DomainError as exc:
        stderr.write(format_record({"error": "domain", "message": str(exc)}) + "\n")
        return EXIT_DOMAIN
    except OSError as exc:
        stderr.write(format_record({"error": "io", "message": str(exc)}) + "\n")
        return EXIT_FAILED
    _emit(result, args.format, stdout)
    return result.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
