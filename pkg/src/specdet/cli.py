"""Command-line interface.

    specdet det     --manifold sphere --dim 3 [--method closed|voros] [--digits 64]
    specdet table   --manifold all --max-dim 100 [--format csv|json|text]
    specdet figure  --manifold sphere --max-dim 10000
    specdet zeta    --manifold sphere --dim 3 --s 3 [--derivative]
    specdet poles   --manifold sphere --dim 4
    specdet coeffs  --kind v --n 5

Exit codes: 0 success, 2 usage, 3 convergence failure, 4 pole.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import combinatorics
from .determinants import TABLE_FAMILIES, DetResult, det_closed_form, det_table, det_voros
from .errors import ConvergenceTooSlow, PoleError, SpecDetError
from .expansion import Kind, Manifold, explicit_build
from .numeric import MAX_DIGITS, default_digits

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3
EXIT_POLE = 4

MIN_DIGITS = 10
FIGURE_MAX_DIM = 10_000

SINGLE = [k.value for k in Kind]


class UsageError(Exception):
    pass


def _digits(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"digits must be an integer, got {text!r}")
    if not MIN_DIGITS <= d <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}]")
    return d


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _env_digits() -> int:
    d = default_digits()
    return min(max(d, MIN_DIGITS), MAX_DIGITS)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specdet", description="Spectral zeta functions and determinants.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default):
        sp.add_argument("--digits", type=_digits, default=_env_digits(), help="working precision (default 64 or $SPECDET_DIGITS)")
        sp.add_argument("--format", choices=("csv", "json", "text"), default=fmt_default)
        sp.add_argument("--out", help="write to this file instead of stdout")

    d = sub.add_parser("det", help="determinant of one manifold")
    d.add_argument("--manifold", choices=SINGLE, required=True)
    d.add_argument("--dim", type=_positive, required=True)
    d.add_argument("--method", choices=("closed", "voros"), default="closed")
    common(d, "text")

    t = sub.add_parser("table", help="determinants for dims 1..max-dim")
    t.add_argument("--manifold", choices=SINGLE + ["all"], required=True)
    t.add_argument("--max-dim", type=_positive, required=True)
    t.add_argument("--places", type=_positive, help="significant digits printed (default: --digits)")
    t.add_argument("--workers", type=_positive, default=1)
    common(t, "csv")

    f = sub.add_parser("figure", help="CSV data (dim, value, parity) for plotting")
    f.add_argument("--manifold", choices=SINGLE, required=True)
    f.add_argument("--max-dim", type=_positive, required=True)
    f.add_argument("--places", type=_positive, help="significant digits printed (default: --digits)")
    f.add_argument("--workers", type=_positive, default=1)
    common(f, "csv")

    z = sub.add_parser("zeta", help="evaluate the shifted zeta function")
    z.add_argument("--manifold", choices=SINGLE, required=True)
    z.add_argument("--dim", type=_positive, required=True)
    z.add_argument("--s", required=True, help="real argument as a decimal or fraction string")
    z.add_argument("--derivative", action="store_true")
    z.add_argument("--show", action="store_true", help="also print the expansion")
    common(z, "text")

    po = sub.add_parser("poles", help="poles and residues of the shifted zeta function")
    po.add_argument("--manifold", choices=SINGLE, required=True)
    po.add_argument("--dim", type=_positive, required=True)
    common(po, "text")

    c = sub.add_parser("coeffs", help="exact coefficient tables")
    c.add_argument("--kind", choices=combinatorics.KINDS, required=True)
    c.add_argument("--n", type=_nonneg, help="single row n")
    c.add_argument("--max-n", type=_nonneg, help="all rows 0..max-n")
    c.add_argument("--format", choices=("csv", "json", "text"), default="text")
    c.add_argument("--out")
    return p


@contextmanager
def _sink(path):
    if path:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh
    else:
        yield sys.stdout


def _det_record(r: DetResult, places: int) -> dict:
    return {
        "manifold": r.manifold.kind.value,
        "dim": r.manifold.dim,
        "digits": r.digits,
        "neg_log_det": r.log_det_negated.to_string(places),
        "det": r.det.to_string(places),
    }


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_det(args) -> str:
    m = Manifold(Kind(args.manifold), args.dim)
    r = det_voros(m, args.digits) if args.method == "voros" else det_closed_form(m, args.digits)
    rec = _det_record(r, args.digits)
    if args.format == "json":
        return json.dumps(rec) + "\n"
    if args.format == "csv":
        return _csv_text(["dim", "value"], [[rec["dim"], rec["det"]]])
    return f"det {rec['det']}\nneg_log_det {rec['neg_log_det']}\n"


def cmd_table(args) -> str:
    places = args.places or args.digits
    results = det_table(args.manifold, args.max_dim, args.digits, workers=args.workers)
    if args.format == "json":
        return json.dumps([_det_record(r, places) for r in results], indent=1) + "\n"
    if args.manifold == "all":
        cols = {k: {} for k in TABLE_FAMILIES}
        for r in results:
            cols[r.manifold.kind][r.manifold.dim] = r.det.to_string(places)
        header = ["dim"] + [k.value for k in TABLE_FAMILIES]
        rows = [[d] + [cols[k][d] for k in TABLE_FAMILIES] for d in range(1, args.max_dim + 1)]
    else:
        header = ["dim", "value"]
        rows = [[r.manifold.dim, r.det.to_string(places)] for r in results]
    if args.format == "text":
        return "".join(" ".join(str(c) for c in row) + "\n" for row in [header] + rows)
    return _csv_text(header, rows)


def cmd_figure(args) -> str:
    if args.max_dim > FIGURE_MAX_DIM:
        raise UsageError(f"--max-dim must be at most {FIGURE_MAX_DIM}")
    if args.format != "csv":
        raise UsageError("figure data is emitted as csv only")
    places = args.places or args.digits
    results = det_table(args.manifold, args.max_dim, args.digits, workers=args.workers)
    rows = [
        [r.manifold.dim, r.det.to_string(places), "even" if r.manifold.dim % 2 == 0 else "odd"] for r in results
    ]
    return _csv_text(["dim", "value", "parity"], rows)


def cmd_zeta(args) -> str:
    m = Manifold(Kind(args.manifold), args.dim)
    e = explicit_build(m)
    s = args.s.strip()
    val = e.eval_deriv(s, args.digits) if args.derivative else e.eval(s, args.digits)
    text = val.to_string(args.digits)
    if args.format == "json":
        rec = {"manifold": m.kind.value, "dim": m.dim, "s": s, "derivative": args.derivative,
               "digits": args.digits, "value": text}
        if args.show:
            rec["expansion"] = str(e)
        return json.dumps(rec) + "\n"
    if args.format == "csv":
        return _csv_text(["s", "value"], [[s, text]])
    head = f"{e}\n" if args.show else ""
    return head + text + "\n"


def cmd_poles(args) -> str:
    m = Manifold(Kind(args.manifold), args.dim)
    poles = explicit_build(m).poles(args.digits)
    rows = [[str(p.location), str(p.residue_exact) if p.residue_exact is not None else p.residue.to_string()] for p in poles]
    if args.format == "json":
        return json.dumps([{"location": a, "residue": b} for a, b in rows]) + "\n"
    if args.format == "csv":
        return _csv_text(["location", "residue"], rows)
    return "".join(f"s = {a}  residue {b}\n" for a, b in rows)


def cmd_coeffs(args) -> str:
    if (args.n is None) == (args.max_n is None):
        raise UsageError("give exactly one of --n and --max-n")
    ns = [args.n] if args.n is not None else list(range(args.max_n + 1))
    top = max(ns)
    table = combinatorics.CoeffTable.build(args.kind, top)
    rows = [[n, k, str(table[(n, k)])] for n in ns for k in range(n + 1)]
    if args.format == "json":
        return json.dumps({"kind": args.kind, "rows": {str(n): [str(table[(n, k)]) for k in range(n + 1)] for n in ns}}) + "\n"
    if args.format == "csv":
        return _csv_text(["n", "k", "value"], rows)
    return "".join(f"{n} {k} {v}\n" for n, k, v in rows)


COMMANDS = {
    "det": cmd_det,
    "table": cmd_table,
    "figure": cmd_figure,
    "zeta": cmd_zeta,
    "poles": cmd_poles,
    "coeffs": cmd_coeffs,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"specdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PoleError as exc:
        print(f"specdet: {exc}", file=sys.stderr)
        return EXIT_POLE
    except ConvergenceTooSlow as exc:
        print(f"specdet: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (SpecDetError, ValueError) as exc:
        print(f"specdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _sink(args.out) as fh:
        fh.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
