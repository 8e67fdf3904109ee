"""``psc``: command-line access to complexes, purity, screens and oracles.

Exit status is 0 on success, 1 on a domain error (bad group parameters,
missing fixture, exhausted factoring budget) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import analysis, fileio, groups, numtheory, oracle
from .complexes import PrimeComplex, equal, from_spectrum
from .errors import ParseError, PscError


def _table(rows: list[dict], fmt: str) -> str:
    if not rows:
        return "" if fmt != "json" else "[]\n"
    cols = list(rows[0])
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        lines += ["| " + " | ".join(str(r[c]) for c in cols) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    lines += ["  ".join(str(r[c]).ljust(widths[c]) for c in cols).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _brace(s) -> str:
    return "{" + ",".join(str(p) for p in s) + "}"


def _resolve(arg: str, fixtures) -> PrimeComplex:
    """A group description, or a path to a complex or spectrum JSON file."""
    path = Path(arg)
    if arg.endswith(".json") and path.is_file():
        if "maximal" in fileio.read_json_object(path):
            return fileio.load_complex(path)
        return from_spectrum(fileio.load_spectrum(path).orders)
    return groups.complex_of(groups.GroupSpec.parse(arg), fixtures)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise ParseError(f"bad range {text!r}; expected LO..HI") from None


def cmd_complex(a) -> str:
    c = _resolve(a.spec, a.fixtures)
    if a.format == "json":
        return fileio.complex_to_json(c)
    if a.format == "dot":
        return fileio.emit_dot(c.prime_graph())
    return fileio.complex_to_text(c)


def cmd_purity(a) -> str:
    spec = groups.GroupSpec.parse(a.spec)
    if spec.family == "2G2":
        r = groups.ree2g2_purity(spec.params[0])
        x, y = r.witness
        return f"impure (witness {_brace(sorted(x))} vs {_brace(sorted(y))}: {r.reason})\n"
    return analysis.purity_report(spec, a.fixtures).describe() + "\n"


def cmd_scan(a) -> str:
    lo, hi = _parse_range(a.range)
    rows = []
    for r in analysis.purity_scan(a.family, lo, hi):
        rows.append(
            {
                "param": r.spec.params[0],
                "pure": r.pure,
                "max_size": r.max_size,
                "min_maximal_size": r.min_maximal_size,
                "witness": "" if r.witness is None else " ".join(_brace(s) for s in r.witness),
            }
        )
    return _table(rows, a.format)


def cmd_compare(a) -> str:
    x, y = _resolve(a.a, a.fixtures), _resolve(a.b, a.fixtures)
    if equal(x, y):
        return "equal\n"
    sx, sy = set(x.maximal), set(y.maximal)
    lines = ["different"]
    lines += [f"only in {a.a}: {_brace(s)}" for s in sorted(sx - sy)]
    lines += [f"only in {a.b}: {_brace(s)}" for s in sorted(sy - sx)]
    return "\n".join(lines) + "\n"


def cmd_screen(a) -> str:
    try:
        allowed = sorted({int(x) for x in a.allowed.split(",") if x.strip()})
    except ValueError:
        raise ParseError(f"bad prime list {a.allowed!r}") from None
    rows = [
        {"p": r.p, "r": r.r, "order": r.order, "bad": r.bad} for r in analysis.characteristic_screen(allowed)
    ]
    return _table(rows, a.format)


def cmd_tables(a) -> str:
    rows = [
        {"group": r.group, "max_size": r.max_size, "min_maximal_size": r.min_maximal_size}
        for r in analysis.table_sporadic_sizes(a.fixtures)
    ]
    return _table(rows, a.format)


def cmd_oracle(a) -> str:
    if a.kind == "sn":
        name, s = f"S{a.n}", oracle.sn_spectrum(a.n)
    elif a.kind == "an":
        name, s = f"A{a.n}", oracle.an_spectrum(a.n)
    else:
        name = f"{a.variant.upper()}({a.n},{a.q})"
        s = oracle.matrix_group_spectrum(a.n, a.q, a.variant)
    spec_file = fileio.SpectrumFile(name, tuple(sorted(s)), "psc oracle (exhaustive enumeration)")
    if a.output:
        fileio.save_spectrum(a.output, spec_file)
        return ""
    return fileio.spectrum_to_json(spec_file)


def cmd_nt(a) -> str:
    if a.op == "factor":
        f = numtheory.factorize(a.args[0])
        return " * ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in f.factors) + "\n"
    if a.op == "isprime":
        return f"{numtheory.is_prime(a.args[0])}\n".lower()
    if a.op == "order":
        return f"{numtheory.multiplicative_order(*a.args)}\n"
    if a.op == "ppd":
        r = numtheory.primitive_prime_divisors(*a.args)
        return f"{_brace(sorted(r.primitive_divisors))} exception={r.exception.name}\n"
    if a.op == "cyclotomic":
        return f"{numtheory.cyclotomic_value(*a.args)}\n"
    raise AssertionError(a.op)


_NT_ARITY = {"factor": 1, "isprime": 1, "order": 2, "ppd": 2, "cyclotomic": 2}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psc", description="Prime simplicial complexes of finite groups.")
    ap.add_argument("--fixtures", default=None, help="fixture directory (default: $PSC_FIXTURES or bundled)")
    # also accepted after the subcommand; SUPPRESS keeps the global value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixtures", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)
    fmt_choices = ["text", "markdown", "csv", "json"]

    p = sub.add_parser("complex", parents=[common], help="maximal simplices of a group's complex")
    p.add_argument("spec")
    p.add_argument("--format", choices=["json", "dot", "text"], default="text")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("purity", parents=[common], help="purity report with witness")
    p.add_argument("spec")
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("scan", parents=[common], help="purity over a parameter range, e.g. scan Sym 1..200")
    p.add_argument("family", choices=sorted(analysis._SCAN_MIN))
    p.add_argument("range")
    p.add_argument("--format", choices=fmt_choices, default="text")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("compare", parents=[common], help="compare two complexes (group specs or JSON files)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("screen", parents=[common], help="multiplicative-order screen over a prime set")
    p.add_argument("--allowed", required=True, help="comma-separated primes")
    p.add_argument("--format", choices=fmt_choices, default="text")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("tables", parents=[common], help="reproduce tables from fixture data")
    p.add_argument("table", choices=["sporadic"])
    p.add_argument("--format", choices=fmt_choices, default="text")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("oracle", parents=[common], help="brute-force spectra")
    osub = p.add_subparsers(dest="kind", required=True)
    for kind in ("sn", "an"):
        q = osub.add_parser(kind, parents=[common])
        q.add_argument("n", type=int)
        q.add_argument("--output")
    q = osub.add_parser("matrix", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--variant", choices=["gl", "sl", "psl"], default="psl")
    q.add_argument("--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("nt", parents=[common], help="number theory helpers")
    p.add_argument("op", choices=sorted(_NT_ARITY))
    p.add_argument("args", type=int, nargs="+")
    p.set_defaults(func=cmd_nt)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.command == "nt" and len(a.args) != _NT_ARITY[a.op]:
        ap.print_usage(sys.stderr)
        print(f"psc: error: nt {a.op} takes {_NT_ARITY[a.op]} integer(s)", file=sys.stderr)
        return 2
    try:
        sys.stdout.write(a.func(a))
    except ParseError as exc:
        print(f"psc: error: {exc}", file=sys.stderr)
        return 2
    except PscError as exc:
        print(f"psc: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
