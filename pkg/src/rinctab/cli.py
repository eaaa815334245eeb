"""Command-line interface: enumerate, stats, poly, count, map, convert, hook, verify.

Exit status: 0 success, 1 verification failure, 2 bad input or a map applied
outside its domain.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import bijections as bj
from . import qpoly, schroeder
from .errors import DivisibilityError, DomainError, InputError
from .stats import profile
from .tableaux import (
    Partition,
    Tableau,
    enumerate_inc,
    enumerate_rinc,
    enumerate_syt,
    parse_tableau,
)
from .verify import CHECKS, format_reports, run_checks

TABLEAU_MAPS = {
    "f": bj.f_map,
    "finv": bj.f_inv,
    "g": bj.g_map,
    "ginv": bj.g_inv,
    "phi": bj.phi,
    "phiinv": bj.phi_inv,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(message)


def _read_input(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit_tableau(t: Tableau, fmt: str) -> str:
    if fmt == "json":
        return t.to_json() + "\n"
    return t.to_text()


def _emit_poly(p: qpoly.QPoly, fmt: str) -> str:
    return (p.human() if fmt == "human" else p.to_json()) + "\n"


def _cmd_enumerate(args) -> tuple[str, int]:
    if args.family == "syt":
        if args.shape is None:
            raise InputError("--shape is required for --family syt")
        shape = Partition.parse(args.shape)
        items = [[list(r) for r in t.cells] for t in enumerate_syt(shape)]
        if args.format == "json":
            return json.dumps({"shape": list(shape.parts), "count": len(items), "tableaux": items}) + "\n", 0
        return "".join("\n".join(" ".join(map(str, r)) for r in t) + "\n\n" for t in items), 0
    _need(args, "n", "k")
    if args.family == "words":
        words = [w.letters for w in schroeder.enumerate_words(args.n, args.k)]
        if args.format == "json":
            return json.dumps({"n": args.n, "k": args.k, "count": len(words), "words": words}) + "\n", 0
        return "".join(w + "\n" for w in words), 0
    gen = enumerate_rinc(args.n, args.k, args.m) if args.family == "rinc" else enumerate_inc(args.n, args.k, args.m)
    tabs = list(gen)
    if args.format == "json":
        payload = {"n": args.n, "k": args.k, "m": args.m, "count": len(tabs),
                   "tableaux": [[list(t.row1), list(t.row2)] for t in tabs]}
        return json.dumps(payload) + "\n", 0
    return "\n".join(t.to_text() for t in tabs), 0


def _cmd_stats(args, stdin) -> tuple[str, int]:
    t = parse_tableau(_read_input(args.input, stdin))
    prof = profile(t)
    if args.format == "human":
        d = prof.to_dict()
        return (f"descents: {d['descents']}\nascents: {d['ascents']}\n"
                f"maj: {d['maj']}\namaj: {d['amaj']}\n"), 0
    return json.dumps(prof.to_dict()) + "\n", 0


def _need(args, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise InputError(f"{args.command} needs {', '.join(missing)}")


def _cmd_poly(args) -> tuple[str, int]:
    f = args.formula
    if f in ("Cq", "Ctq"):
        _need(args, "n")
        p = qpoly.FORMULAS[f](args.n)
    elif f in ("Sq", "Rq", "Rtq"):
        _need(args, "n", "k")
        p = qpoly.FORMULAS[f](args.n, args.k)
    elif f == "recurrence":
        _need(args, "n", "k")
        p = qpoly.recurrence_rhs_Rq(args.n, args.k)
    elif f == "bonin":
        _need(args, "n", "k")
        p = schroeder.bonin_sum(args.n, args.k)
    elif f == "qint":
        _need(args, "n")
        p = qpoly.q_int(args.n)
    elif f == "qbinom":
        _need(args, "n", "k")
        p = qpoly.q_binomial(args.n, args.k)
    else:  # hook
        _need(args, "shape")
        p = qpoly.q_hook_maj_sum(Partition.parse(args.shape))
    return _emit_poly(p, args.format), 0


def _cmd_count(args) -> tuple[str, int]:
    _need(args, "n")
    if args.which == "catalan":
        value = qpoly.catalan(args.n)
    elif args.which == "schroeder":
        value = sum(qpoly.count_r(args.n, k) for k in range(args.n + 1))
    else:
        _need(args, "k")
        value = (qpoly.count_r if args.which == "r" else qpoly.count_s)(args.n, args.k)
    if args.format == "human":
        return f"{value}\n", 0
    return json.dumps({"which": args.which, "n": args.n, "k": args.k, "value": value}) + "\n", 0


def _cmd_map(args, stdin) -> tuple[str, int]:
    text = _read_input(args.input, stdin)
    if args.map == "thetainv":
        w = schroeder.parse_word(text)
        t = schroeder.theta_inv(w)
        fmt = args.format or "text"
        return _emit_tableau(t, fmt), 0
    t = parse_tableau(text)
    fmt = args.format or ("json" if text.lstrip().startswith("{") else "text")
    if args.map == "theta":
        w = schroeder.theta(t)
        if fmt == "json":
            return json.dumps({"word": w.letters, "n": w.n, "k": w.k}) + "\n", 0
        return w.letters + "\n", 0
    return _emit_tableau(TABLEAU_MAPS[args.map](t), fmt), 0


def _cmd_convert(args, stdin) -> tuple[str, int]:
    text = _read_input(args.input, stdin)
    src, dst = args.from_, args.to
    if src == "path":
        word = schroeder.word_from_path(schroeder.parse_path(text))
    elif src == "word":
        word = schroeder.parse_word(text)
    else:
        word = schroeder.theta(parse_tableau(text))
    if dst == "word":
        return word.letters + "\n", 0
    if dst == "path":
        return schroeder.path_from_word(word).steps + "\n", 0
    return _emit_tableau(schroeder.theta_inv(word), args.format or "text"), 0


def _cmd_hook(args) -> tuple[str, int]:
    shape = Partition.parse(args.shape)
    hooks = qpoly.hook_lengths(shape)
    poly = qpoly.q_hook_maj_sum(shape)
    if args.format == "human":
        return f"hooks: {' '.join(map(str, hooks))}\nmaj sum: {poly.human()}\n", 0
    return json.dumps({"shape": list(shape.parts), "hooks": hooks, "coeffs": list(poly.coeffs)}) + "\n", 0


def _cmd_verify(args) -> tuple[str, int]:
    if args.nmax is not None and args.nmax < 1:
        raise InputError("--nmax must be at least 1")
    reports = run_checks(args.check, args.nmax)
    code = 0 if all(r.passed for r in reports) else 1
    return format_reports(reports, args.format), code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rinctab", description="Row-increasing 2 x n tableaux: statistics, q-formulas, bijections.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list a family of tableaux or words")
    p.add_argument("--family", choices=["rinc", "inc", "syt", "words"], default="rinc")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--shape")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("stats", help="descent/ascent sets and maj/amaj of a tableau")
    p.add_argument("input", nargs="?")
    p.add_argument("--format", choices=["json", "human"], default="json")

    p = sub.add_parser("poly", help="evaluate a closed-form polynomial")
    p.add_argument("--formula", required=True,
                   choices=["Cq", "Ctq", "Sq", "Rq", "Rtq", "recurrence", "bonin", "hook", "qint", "qbinom"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--shape")
    p.add_argument("--format", choices=["json", "human"], default="json")

    p = sub.add_parser("count", help="closed-form counts")
    p.add_argument("--which", choices=["r", "s", "catalan", "schroeder"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["json", "human"], default="json")

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("--map", required=True, choices=[*TABLEAU_MAPS, "theta", "thetainv"])
    p.add_argument("input", nargs="?")
    p.add_argument("--format", choices=["json", "text"])

    p = sub.add_parser("convert", help="convert between path, word and tableau")
    p.add_argument("--from", dest="from_", choices=["path", "word", "tableau"], required=True)
    p.add_argument("--to", choices=["path", "word", "tableau"], required=True)
    p.add_argument("input", nargs="?")
    p.add_argument("--format", choices=["json", "text"])

    p = sub.add_parser("hook", help="hook lengths and q-hook formula of a shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--format", choices=["json", "human"], default="json")

    p = sub.add_parser("verify", help="run the exhaustive checks")
    p.add_argument("--check", choices=["all", *CHECKS], default="all")
    p.add_argument("--nmax", type=int)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    return parser


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cmd = args.command
        if cmd == "enumerate":
            out, code = _cmd_enumerate(args)
        elif cmd == "stats":
            out, code = _cmd_stats(args, stdin)
        elif cmd == "poly":
            out, code = _cmd_poly(args)
        elif cmd == "count":
            out, code = _cmd_count(args)
        elif cmd == "map":
            out, code = _cmd_map(args, stdin)
        elif cmd == "convert":
            out, code = _cmd_convert(args, stdin)
        elif cmd == "hook":
            out, code = _cmd_hook(args)
        else:
            out, code = _cmd_verify(args)
    except (InputError, DomainError, DivisibilityError) as exc:
        print(f"rinctab: error: {exc}", file=stderr)
        return 2
    stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())
