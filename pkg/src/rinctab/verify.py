"""Exhaustive machine checks of the identities and bijections.

Each ``check_*`` returns a VerificationReport and never raises on a failed
identity: the first counterexample is recorded and the check stops there.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import bijections as bj
from .errors import DivisibilityError, DomainError, InputError
from .qpoly import (
    QPoly,
    catalan,
    count_r,
    count_s,
    formula_Cq,
    formula_Ctq,
    formula_Rq,
    formula_Rtq,
    formula_Sq,
    poly_sum,
    q_hook_maj_sum,
    recurrence_rhs_Rq,
)
from .schroeder import (
    bonin_sum,
    enumerate_words,
    path_from_word,
    theta,
    theta_inv,
    word_maj,
)
from .stats import amaj, ascent_set, descent_set, maj
from .tableaux import Partition, Tableau, enumerate_inc, enumerate_rinc, enumerate_syt, partitions

DEFAULT_N_MAX = 6
DEFAULT_FORMULA_N_MAX = 8
PRIME_OFFSETS = (0, 1, 4)
PRIME_N_MAX = 5


@dataclass
class VerificationReport:
    name: str
    params: dict
    status: str = "pass"
    counterexample: dict | None = None
    cases: int = 0
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, with_time: bool = True) -> dict:
        out = {
            "check": self.name,
            "params": self.params,
            "status": self.status,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }
        if with_time:
            out["wall_time"] = round(self.wall_time, 6)
        return out


class _Mismatch(Exception):
    def __init__(self, what: str, subject, expected, actual):
        super().__init__(what)
        self.payload = {
            "what": what,
            "input": _serialize(subject),
            "expected": _serialize(expected),
            "actual": _serialize(actual),
        }


def _serialize(x):
    if isinstance(x, Tableau):
        return x.to_text().strip()
    if isinstance(x, QPoly):
        return x.human()
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_serialize(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _serialize(v) for k, v in x.items()}
    return str(x)


class _Ctx:
    def __init__(self) -> None:
        self.cases = 0

    def expect(self, what: str, subject, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            raise _Mismatch(what, subject, expected, actual)

    def require(self, what: str, subject, ok: bool) -> None:
        self.expect(what, subject, True, bool(ok))


def _run(name: str, params: dict, body: Callable[[_Ctx], None]) -> VerificationReport:
    report = VerificationReport(name, params)
    ctx = _Ctx()
    start = time.perf_counter()
    try:
        body(ctx)
    except _Mismatch as exc:
        report.status = "fail"
        report.counterexample = exc.payload
    except (InputError, DomainError, DivisibilityError) as exc:
        report.status = "fail"
        report.counterexample = {"what": type(exc).__name__, "input": None, "expected": None, "actual": str(exc)}
    report.cases = ctx.cases
    report.wall_time = time.perf_counter() - start
    return report


def _grid(n_max: int) -> Iterator[tuple[int, int]]:
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            yield n, k


def check_maj_theorem(n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    """Sum of q^maj over RInc_k(2 x n) against R_q(n,k)."""

    def body(ctx: _Ctx) -> None:
        for n, k in _grid(n_max):
            brute = poly_sum(maj(t) for t in enumerate_rinc(n, k))
            ctx.expect("R_q(n,k)", {"n": n, "k": k}, formula_Rq(n, k), brute)

    return _run("maj", {"n_max": n_max}, body)


def check_amaj_theorem(n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    def body(ctx: _Ctx) -> None:
        for n, k in _grid(n_max):
            brute = poly_sum(amaj(t) for t in enumerate_rinc(n, k))
            ctx.expect("R~_q(n,k)", {"n": n, "k": k}, formula_Rtq(n, k), brute)
            if k == 0:
                ctx.expect("C~_q(n)", {"n": n}, formula_Ctq(n), brute)

    return _run("amaj", {"n_max": n_max}, body)


def _hook_shape(n: int, k: int) -> Partition:
    return Partition((n - k, n - k) + (1,) * k)


def check_sq_theorem(n_max: int = DEFAULT_N_MAX, hook_max: int = DEFAULT_FORMULA_N_MAX) -> VerificationReport:
    """S_q against Inc_k brute force and the hook formula; hook formula against SYT brute force."""

    def body(ctx: _Ctx) -> None:
        for n, k in _grid(n_max):
            if k > n - 1:
                continue
            sq = formula_Sq(n, k)
            brute = poly_sum(maj(t) for t in enumerate_inc(n, k))
            ctx.expect("S_q(n,k)", {"n": n, "k": k}, sq, brute)
            ctx.expect("S_q(n,k) vs hook formula on (n-k,n-k,1^k)", {"n": n, "k": k},
                       q_hook_maj_sum(_hook_shape(n, k)), sq)
            if k == 0:
                ctx.expect("S_q(n,0) = C_q(n)", {"n": n}, formula_Cq(n), sq)
        for size in range(1, hook_max + 1):
            for shape in partitions(size):
                brute = poly_sum(t.maj() for t in enumerate_syt(shape))
                ctx.expect("q-hook formula", {"shape": list(shape.parts)}, q_hook_maj_sum(shape), brute)

    return _run("sq", {"n_max": n_max, "hook_max": hook_max}, body)


def check_recurrences(n_max: int = DEFAULT_FORMULA_N_MAX) -> VerificationReport:
    def body(ctx: _Ctx) -> None:
        for n, k in _grid(n_max):
            p = {"n": n, "k": k}
            if 1 <= k < n:
                ctx.expect("R_q recurrence", p, formula_Rq(n, k), recurrence_rhs_Rq(n, k))
            ctx.expect("r = s(k) + s(k-1)", p, count_r(n, k), count_s(n, k) + count_s(n, k - 1))
            ctx.expect("R_q = q^(n-k) R~_q", p, formula_Rq(n, k), formula_Rtq(n, k).shift(n - k))
            ctx.expect("R_q(1) = r", p, count_r(n, k), formula_Rq(n, k)(1))
            ctx.expect("S_q(1) = s", p, count_s(n, k), formula_Sq(n, k)(1))
            if k == 0:
                ctx.expect("s(n,0) = Catalan", p, catalan(n), count_s(n, 0))

    return _run("recurrences", {"n_max": n_max}, body)


def _check_f(ctx: _Ctx, n_max: int) -> None:
    for n, k in _grid(n_max):
        if k == 0:
            continue
        images = set()
        for t in enumerate_rinc(n, k):
            if not t.has_equal_column():
                continue
            s = bj.f_map(t)
            ctx.require("f lands in Inc_{k-1}", t, not s.has_equal_column() and s.k == k - 1)
            ctx.expect("f inverse after f", t, t, bj.f_inv(s))
            images.add(s)
        target = set(enumerate_inc(n, k - 1))
        ctx.expect("f image is all of Inc_{k-1}", {"n": n, "k": k}, len(target), len(images))
        ctx.require("f image is all of Inc_{k-1}", {"n": n, "k": k}, images == target)
        for s in target:
            ctx.expect("f after f inverse", s, s, bj.f_map(bj.f_inv(s)))


def _check_g(ctx: _Ctx, n_max: int, offsets) -> None:
    for m in offsets:
        for n, k in _grid(n_max):
            images = set()
            for t in enumerate_rinc(n, k, m):
                if not bj.is_prime(t):
                    continue
                g = bj.g_map(t)
                images.add(g)
                ctx.expect("g preserves row 2", t, t.row2, g.row2)
                ctx.require("g lands in RInc^m_k", t, g.m == m and g.k == k)
                ctx.expect("g inverse after g", t, t, bj.g_inv(g))
                t21_once = t.row2[0] not in set(t.row1)
                if t21_once:
                    ctx.require("g lemma clause 1", t,
                                all(g.row1[i + 1] <= g.row2[i] for i in range(n - 1)))
                ctx.expect("g lemma clause 2", t, not t21_once, g.row1[-1] == g.row2[-1])
                shift = n - k if t.row1[0] == t.row2[0] else m + n - k
                ctx.expect("maj(g(T)) - amaj(T)", t, shift, maj(g) - amaj(t))
                prof = bj.skew_profile(t)
                ctx.expect("descent transfer", t,
                           ascent_set(t) - prof.ascents0, descent_set(g) - prof.descents0)
                if t.row1[0] != t.row2[0]:
                    _check_interleaving(ctx, t, prof, m, n, k)
            ctx.expect("g injective", {"n": n, "k": k, "m": m},
                       sum(1 for t in enumerate_rinc(n, k, m) if bj.is_prime(t)), len(images))


def _check_interleaving(ctx: _Ctx, t: Tableau, prof: bj.SkewProfile, m: int, n: int, k: int) -> None:
    d, xs, ys = prof.d, prof.X, prof.Y
    ctx.require("profile sizes", t, d >= 1 and len(xs) == d and len(ys) == d - 1 and xs[-1] == n - k)
    des = {m + xs[0]} | {m + xs[i] + ys[i - 1] for i in range(1, d)}
    asc = {m + xs[i] + ys[i] for i in range(d - 1)}
    ctx.expect("D(T0) interleaving", t, set(prof.descents0), des)
    ctx.expect("A(T0) interleaving", t, set(prof.ascents0), asc)
    ctx.expect("maj(T0) - amaj(T0)", t, m + n - k, sum(prof.descents0) - sum(prof.ascents0))


def _check_phi(ctx: _Ctx, n_max: int) -> None:
    for n, k in _grid(n_max):
        domain = list(enumerate_rinc(n, k))
        images = set()
        for t in domain:
            p = bj.phi(t)
            images.add(p)
            ctx.expect("phi preserves row 2", t, t.row2, p.row2)
            ctx.expect("maj(phi(T)) = amaj(T) + n - k", t, amaj(t) + n - k, maj(p))
            ctx.expect("phi inverse after phi", t, t, bj.phi_inv(p))
            ctx.expect("inverse cuts match prime decomposition", t,
                       list(bj.prime_decompose(t).boundaries), bj.phi_cuts(p))
            dec = bj.prime_decompose(t)
            ctx.require("blocks are prime and re-concatenate", t,
                        all(bj.is_prime(b) for b in dec.blocks) and dec.concatenate() == t)
        ctx.require("phi is onto RInc_k", {"n": n, "k": k}, images == set(domain))


GOLDEN = {
    "f_unglue": (([1, 3, 4, 5, 6], [2, 3, 4, 6, 7]), ([1, 3, 4, 5, 6], [2, 4, 6, 7, 8])),
    "g_case_a": (([5, 7, 8, 10, 11, 12], [6, 8, 9, 12, 13, 14]), ([5, 6, 7, 9, 10, 11], [6, 8, 9, 12, 13, 14])),
    "g_case_b": (([1, 2, 4, 5, 6, 9], [2, 3, 6, 7, 8, 9]), ([1, 3, 4, 5, 8, 9], [2, 3, 6, 7, 8, 9])),
    "g_case_c": (([5, 6, 8, 9, 10, 13], [7, 8, 11, 12, 13, 14]), ([5, 6, 7, 9, 10, 12], [7, 8, 11, 12, 13, 14])),
    "phi_blocks": (
        ([1, 2, 4, 5, 6, 9, 10, 12, 13, 14, 16, 18, 20], [2, 3, 6, 7, 8, 9, 11, 13, 15, 16, 17, 19, 20]),
        ([1, 3, 4, 5, 8, 9, 10, 11, 12, 14, 15, 18, 19], [2, 3, 6, 7, 8, 9, 11, 13, 15, 16, 17, 19, 20]),
    ),
}


def _check_golden(ctx: _Ctx) -> None:
    maps = {"f": bj.f_map, "g": bj.g_map, "phi": bj.phi}
    for name, (src, dst) in GOLDEN.items():
        t = Tableau.from_rows(*src)
        ctx.expect(name, t, Tableau.from_rows(*dst), maps[name.split("_")[0]](t))
    g_case = Tableau.from_rows(*GOLDEN["g_case_c"][0])
    prof = bj.skew_profile(g_case)
    ctx.expect("skew profile reference", g_case, ({6, 10}, {8}, 2, (2, 4), (2,)),
               (set(prof.descents0), set(prof.ascents0), prof.d, prof.X, prof.Y))
    big = Tableau.from_rows(*GOLDEN["phi_blocks"][0])
    ctx.expect("phi reference amaj -> maj", big, (95, 102), (amaj(big), maj(bj.phi(big))))


def check_bijections(n_max: int = DEFAULT_N_MAX, prime_n_max: int = PRIME_N_MAX) -> VerificationReport:
    def body(ctx: _Ctx) -> None:
        _check_golden(ctx)
        _check_f(ctx, n_max)
        _check_g(ctx, min(prime_n_max, n_max), PRIME_OFFSETS)
        _check_phi(ctx, n_max)

    return _run("bijections", {"n_max": n_max, "prime_n_max": min(prime_n_max, n_max),
                               "offsets": list(PRIME_OFFSETS)}, body)


def check_schroeder(n_max: int = DEFAULT_N_MAX, formula_n_max: int = DEFAULT_FORMULA_N_MAX) -> VerificationReport:
    def body(ctx: _Ctx) -> None:
        for n, k in _grid(n_max):
            words = set()
            for t in enumerate_rinc(n, k):
                w = theta(t)
                words.add(w)
                ctx.expect("theta inverse after theta", t, t, theta_inv(w))
                equal_cols = sum(1 for a, b in zip(*t.rows) if a == b)
                ctx.expect("equal columns = diagonal flats", t, equal_cols,
                           len(path_from_word(w).diagonal_flats()))
            all_words = set(enumerate_words(n, k))
            ctx.expect("word count = r(n,k)", {"n": n, "k": k}, count_r(n, k), len(all_words))
            ctx.require("theta is onto the words", {"n": n, "k": k}, words == all_words)
            for w in all_words:
                ctx.expect("theta after theta inverse", w.letters, w, theta(theta_inv(w)))
            small = {theta(t) for t in enumerate_inc(n, k)}
            small_words = {w for w in all_words if not path_from_word(w).diagonal_flats()}
            ctx.require("Inc_k <-> small Schroeder words", {"n": n, "k": k}, small == small_words)
        for n, k in _grid(formula_n_max):
            p = {"n": n, "k": k}
            ctx.expect("Schroeder maj sum", p, bonin_sum(n, k),
                       poly_sum(word_maj(w) for w in enumerate_words(n, k)))
            ctx.expect("R~_q = q^(k(k-1)/2) * Schroeder sum", p, formula_Rtq(n, k),
                       bonin_sum(n, k).shift(k * (k - 1) // 2))

    return _run("schroeder", {"n_max": n_max, "formula_n_max": formula_n_max}, body)


CHECKS = ("maj", "amaj", "sq", "recurrences", "bijections", "schroeder")


def run_checks(which: str = "all", n_max: int | None = None) -> list[VerificationReport]:
    """Run one or all checks.  ``n_max`` overrides both the tableau and the formula ranges."""
    names = CHECKS if which == "all" else (which,)
    if any(name not in CHECKS for name in names):
        raise InputError(f"unknown check {which!r}; choose from all, {', '.join(CHECKS)}")
    tab = n_max if n_max is not None else DEFAULT_N_MAX
    form = n_max if n_max is not None else DEFAULT_FORMULA_N_MAX
    runners = {
        "maj": lambda: check_maj_theorem(tab),
        "amaj": lambda: check_amaj_theorem(tab),
        "sq": lambda: check_sq_theorem(tab, form),
        "recurrences": lambda: check_recurrences(form),
        "bijections": lambda: check_bijections(tab),
        "schroeder": lambda: check_schroeder(tab, form),
    }
    return sorted((runners[name]() for name in names), key=lambda r: r.name)


def format_reports(reports: list[VerificationReport], fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "params", "status", "cases", "counterexample", "wall_time"])
        for r in reports:
            writer.writerow([
                r.name,
                json.dumps(r.params, sort_keys=True),
                r.status,
                r.cases,
                json.dumps(r.counterexample) if r.counterexample else "",
                f"{r.wall_time:.6f}",
            ])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            lines.append(f"{r.status.upper():4} {r.name:12} {params} cases={r.cases} ({r.wall_time:.2f}s)")
            if r.counterexample:
                lines.append(f"     first counterexample: {json.dumps(r.counterexample)}")
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown format {fmt!r}")
