"""Command-line interface: `levelkit <command> ...` or `python -m levelkit`."""

import argparse
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .algebra import ParseError, parse_structure
from .exact import format_scalar, to_scalar
from .partitions import Partition, dominates, level, parse_partition, preceding

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ helpers

def _records(fmt, rows, text):
    """rows: list of dicts for machine output; text: the plain rendering."""
    if fmt == "machine":
        return "".join(" ".join(f"{k}={v}" for k, v in r.items()) + "\n" for r in rows)
    if not text.strip():
        return ""
    return text if text.endswith("\n") else text + "\n"


def _partition(text):
    try:
        parts = parse_partition(text)
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _read(path):
    p = Path(path)
    if not p.exists():
        alt = resources.files("levelkit") / "witnesses" / Path(path).name
        if Path(path).parent.name == "witnesses" and alt.is_file():
            return alt.read_text(encoding="utf-8")
        raise UsageError(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def _structure(path):
    try:
        return parse_structure(_read(path))
    except (ParseError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _matrix(path):
    rows = []
    for raw in _read(path).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            try:
                rows.append([Fraction(x) for x in line.split()])
            except ValueError as exc:
                raise UsageError(f"{path}: {exc}") from None
    if any(len(r) != len(rows) for r in rows):
        raise UsageError(f"{path}: matrix is not square")
    return rows


def parse_specter(text):
    """'0:2,1;1/2:1' -> FullSpecter; '-' or '' is the empty specter."""
    from .spectra import FullSpecter
    text = text.strip()
    if text in ("", "-"):
        return FullSpecter([])
    pairs = []
    try:
        for chunk in text.split(";"):
            lam, part = chunk.split(":")
            pairs.append((to_scalar(Fraction(lam.strip())), parse_partition(part)))
        return FullSpecter(pairs)
    except ValueError as exc:
        raise UsageError(f"bad specter {text!r}: {exc}") from None


def _point(r, spec):
    from .tn import TnPoint
    if r not in ("0", "1"):
        raise UsageError("r must be 0 or 1")
    return TnPoint(int(r), parse_specter(spec))


def _specter_text(s):
    return ";".join(f"{format_scalar(l)}:{','.join(map(str, a))}" for l, a in s.pairs) or "-"


def _bool(x):
    return "true" if x else "false"


# ----------------------------------------------------------------- commands

def cmd_partition(args):
    a = _partition(args.a)
    if args.action == "level":
        v = level(a)
        return EXIT_OK, _records(args.format, [{"partition": _partition_text(a), "level": v}],
                                 str(v))
    if args.action == "preceding":
        covers = sorted(preceding(a), reverse=True)
        rows = [{"partition": _partition_text(a), "cover": _partition_text(b)} for b in covers]
        return EXIT_OK, _records(args.format, rows,
                                 "".join(_partition_text(b) + "\n" for b in covers))
    if args.b is None:
        raise UsageError("dominates needs two partitions")
    b = _partition(args.b)
    if a.total != b.total:
        raise UsageError("partitions have different totals")
    v = dominates(a, b)
    return EXIT_OK, _records(args.format, [{"a": _partition_text(a), "b": _partition_text(b),
                                            "dominates": _bool(v)}], _bool(v))


def _partition_text(a):
    return ",".join(map(str, a))


def cmd_spectrum(args):
    from .exact import NonSplitSpectrum
    from .spectra import fs_of_matrix
    try:
        s = fs_of_matrix(_matrix(args.file))
    except NonSplitSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL, ""
    rows = [{"eigenvalue": format_scalar(l), "partition": _partition_text(a)} for l, a in s.pairs]
    return EXIT_OK, _records(args.format, rows, repr(s))


def cmd_tn(args):
    from .tn import degenerates_T, emit_tn_tables, level_T, primary_set_T, primary_witness_T
    from .degeneration import verify_witness
    if args.action == "tables":
        rows = emit_tn_tables(args.n, args.max_level)
        return EXIT_OK, _table_output(args.format, rows, (1, 2, 3), args.n)
    if len(args.point) < 2:
        raise UsageError("expected R SPECTER")
    p = _point(args.point[0], args.point[1])
    if args.action == "level":
        v = level_T(p)
        return EXIT_OK, _records(args.format, [{"point": repr(p), "level": v}], str(v))
    if args.action == "degenerates":
        if len(args.point) != 4:
            raise UsageError("expected R1 SPECTER1 R2 SPECTER2")
        q = _point(args.point[2], args.point[3])
        if p.n != q.n:
            raise UsageError("points have different dimensions")
        v = degenerates_T(p, q)
        return EXIT_OK, _records(args.format, [{"source": repr(p), "target": repr(q),
                                                "degenerates": _bool(v)}], _bool(v))
    targets = sorted(primary_set_T(p), key=lambda q: (q.r, _specter_text(q.spec)))
    rows, lines, code = [], [], EXIT_OK
    for q in targets:
        ok = bool(verify_witness(primary_witness_T(p, q)))
        code = code if ok else EXIT_FAIL
        rows.append({"r": q.r, "specter": _specter_text(q.spec), "witness": _bool(ok)})
        lines.append(f"{q.r} {_specter_text(q.spec)} {'VERIFIED' if ok else 'FAILED'}")
    return code, _records(args.format, rows, "".join(l + "\n" for l in lines))


def _table_output(fmt, rows, tables, n):
    from .tn import render_table
    if fmt == "machine":
        recs = [{"table": r.table, "level": r.level, "r": r.r, "shape": _partition_text(r.shape),
                 "notation": r.notation.replace(" ", "")} for r in rows if r.table in tables]
        return _records(fmt, recs, "")
    return "".join(render_table(rows, t, n) for t in tables)


def cmd_check(args):
    from .degeneration import parse_witness, verify_witness
    try:
        w = parse_witness(_read(args.file))
    except (ParseError, ValueError) as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    v = verify_witness(w)
    text = "VERIFIED" if v else f"FAILED: {v.message}"
    rec = {"label": repr(w.label), "verified": _bool(v)}
    return (EXIT_OK if v else EXIT_FAIL), _records(args.format, [rec], text)


def cmd_gen_type(args):
    from .gentype import gen_type
    g = gen_type(_structure(args.file))
    return EXIT_OK, _records(args.format, [{"gen_type": g}], str(g))


def extension_from_structure(a):
    """Read an extension of ⟨e1,e2⟩ by the square-zero ideal ⟨e3..en⟩."""
    from .algebra import AlgebraStructure
    from .extensions import ExtensionSpec
    n = a.dim
    if n < 3:
        raise UsageError("need dim ≥ 3")
    c = a.constants
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not c[i][j][k]:
                    continue
                if i < 2 and j < 2 and k >= 2:
                    raise UsageError(f"e{i + 1}*e{j + 1} leaves <e1,e2>")
                if (i >= 2 or j >= 2) and k < 2:
                    raise UsageError(f"e{i + 1}*e{j + 1} leaves <e3..e{n}>")
                if i >= 2 and j >= 2:
                    raise UsageError(f"e{i + 1}*e{j + 1} is nonzero in the ideal")
    chi = AlgebraStructure(2, [[[c[i][j][k] for k in range(2)] for j in range(2)]
                               for i in range(2)])
    m = n - 2
    mats = [[[c[idx][j + 2][k + 2] for j in range(m)] for k in range(m)] for idx in (0, 1)]
    rmats = [[[c[j + 2][idx][k + 2] for j in range(m)] for k in range(m)] for idx in (0, 1)]
    return ExtensionSpec(chi, mats[0], rmats[0], mats[1], rmats[1])


def cmd_g2(args):
    from .extensions import NotNormalForm, g2_condition
    from .gentype import gen_type
    a = _structure(args.file)
    spec = extension_from_structure(a)
    try:
        cond = g2_condition(spec)
    except NotNormalForm as exc:
        raise UsageError(str(exc)) from None
    g = gen_type(a)
    agree = cond == (g == 2)
    rec = {"g2_condition": _bool(cond), "gen_type": g, "agree": _bool(agree)}
    text = f"g2_condition: {_bool(cond)}\ngen_type: {g}\n"
    return (EXIT_OK if agree else EXIT_FAIL), _records(args.format, [rec], text)


def cmd_classify(args):
    from .classify import filtered_level2, level1_list, level2_list, render_rows
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.action == "level1":
        rows = level1_list(args.n)
    elif args.action == "level2":
        rows = level2_list(args.n)
    else:
        if not args.predicate:
            raise UsageError("filter needs --predicate")
        rows = filtered_level2(args.n, args.predicate)
    recs = [{"notation": r.notation.replace(" ", ""), "name": r.name,
             "params": ",".join(r.params) or "-", "constraint": repr(r.constraint)}
            for r in rows]
    return EXIT_OK, _records(args.format, recs, render_rows(rows))


def cmd_emit_table(args):
    from .tn import emit_tn_tables
    if args.table not in (1, 2, 3):
        raise UsageError("table must be 1, 2 or 3")
    try:
        rows = emit_tn_tables(args.n, args.max_level, (args.table,))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, _table_output(args.format, rows, (args.table,), args.n)


def cmd_verify(args):
    from .checks import run_checks
    results = run_checks(jobs=args.jobs, quick=args.quick)
    ok = all(r[1] for r in results)
    recs = [{"check": name, "ok": _bool(passed), "detail": repr(detail)}
            for name, passed, detail in results]
    text = "".join(f"{'PASS' if passed else 'FAIL'} {name}: {detail}\n"
                   for name, passed, detail in results)
    text += "ALL PASS\n" if ok else "SOME CHECKS FAILED\n"
    return (EXIT_OK if ok else EXIT_FAIL), _records(args.format, recs, text)


# ------------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def build_parser():
    p = _Parser(prog="levelkit", description="Degenerations and levels of algebras.")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("partition", help="dominance level, covers and comparisons")
    s.add_argument("action", choices=("level", "preceding", "dominates"))
    s.add_argument("a")
    s.add_argument("b", nargs="?")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("spectrum", help="full specter of a rational matrix file")
    s.add_argument("file")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("tn", help="points T_r^S written as R SPECTER, e.g. 0 '0:2,1;1:1'")
    s.add_argument("action", choices=("level", "degenerates", "primary", "tables"))
    s.add_argument("point", nargs="*")
    s.add_argument("--n", type=int, default=5)
    s.add_argument("--max-level", type=int, default=5)
    s.set_defaults(func=cmd_tn)

    s = sub.add_parser("check-degeneration", help="verify a .deg witness file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen-type", help="generation type of an .alg structure")
    s.add_argument("file")
    s.set_defaults(func=cmd_gen_type)

    s = sub.add_parser("g2-check", help="G = 2 criterion for an extension of <e1,e2>")
    s.add_argument("file")
    s.set_defaults(func=cmd_g2)

    s = sub.add_parser("classify", help="level-1, level-2 and filtered lists")
    s.add_argument("action", choices=("level1", "level2", "filter"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--predicate",
                   choices=("anticommutative", "commutative", "jordan", "left_alternative"))
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("emit-table", help="rows of a T_n table")
    s.add_argument("table", type=int)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-level", type=int, default=5)
    s.set_defaults(func=cmd_emit_table)

    s = sub.add_parser("verify-paper", help="run every shipped certificate and oracle")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--quick", action="store_true", help="small G2 sweep instead of exhaustive")
    s.set_defaults(func=cmd_verify)

    for name, sp in sub.choices.items():
        sp.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    return p


def run(argv):
    """Returns (exit_code, stdout_text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError(parser.format_usage())
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}".rstrip(), file=sys.stderr)
        return EXIT_USAGE, ""


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
