"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails
(or a question is left undecided), 2 on bad input or usage.

Every command builds a list of flat row dicts plus human-readable lines;
``--format`` picks which of the two is written.  Degrees always appear as
``num/den`` strings in json and csv output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import (
    DEFAULT_BUDGET,
    Method,
    comm_degree,
    search_isoclinism,
    verify_isoclinism,
)
from .catalog import closed_form_degree, list_families, make, parse_family
from .corpus import CORPUS_VERSION, algebra_checks, corpus_items, run_corpus
from .errors import (
    AlternatingViolation,
    BudgetExceeded,
    FieldMismatch,
    JacobiViolation,
    LieCommError,
)
from .gfq import GF
from .lie_core import center, derived, is_stem, nilpotency_class
from .linalg import DEFAULT_CAP
from .serialize import emit, load, load_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class Result:
    code: int = EXIT_OK
    rows: list[dict] | None = field(default_factory=list)
    lines: list[str] = field(default_factory=list)


def frac(d: Fraction) -> str:
    return f"{d.numerator}/{d.denominator}"


def approx(d: Fraction) -> str:
    return f"{frac(d)} (approx {float(d):.6g})"


def _q_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


# -- commands ------------------------------------------------------------------


def cmd_validate(args) -> Result:
    res = Result()
    try:
        L = load(args.path)
    except JacobiViolation as exc:
        res.code = EXIT_FAIL
        res.rows.append(
            {
                "valid": False,
                "axiom": "jacobi",
                "error": "JacobiViolation",
                "triple": list(exc.triple),
                "coordinate": exc.coordinate,
                "message": str(exc),
            }
        )
        i, j, k = exc.triple
        res.lines.append(f"invalid: JacobiViolation at triple ({i},{j},{k}), coordinate {exc.coordinate}")
        return res
    except AlternatingViolation as exc:
        res.code = EXIT_FAIL
        res.rows.append({"valid": False, "axiom": "alternating", "error": "AlternatingViolation", "message": str(exc)})
        res.lines.append(f"invalid: AlternatingViolation: {exc}")
        return res
    res.rows.append({"valid": True, "name": L.name or "", "dim": L.dim, "q": L.field.q})
    res.lines.append(f"valid: {L.name or 'algebra'} of dim {L.dim} over {L.field!r}")
    return res


def cmd_info(args) -> Result:
    L = load(args.path)
    rep = comm_degree(L, Method.RANK_PROJECTIVE, args.cap)
    cls = nilpotency_class(L)
    zdim, ddim = center(L).dim, derived(L).dim
    row = {
        "name": L.name or "",
        "dim": L.dim,
        "q": L.field.q,
        "order": L.order,
        "center_dim": zdim,
        "derived_dim": ddim,
        "nilpotency_class": cls if cls is not None else "non-nilpotent",
        "abelian": L.is_abelian(),
        "stem": is_stem(L),
        "breadth": rep.breadth,
        "central_quotient_dim": rep.central_quotient_dim,
    }
    if L.is_abelian():
        summary = f"class {cls}, abelian"
    else:
        nil = f"class {cls}" if cls is not None else "non-nilpotent"
        summary = f"{nil}, Z dim {zdim}, L² dim {ddim}, breadth {rep.breadth}"
    lines = [f"{k}: {v}" for k, v in row.items()]
    lines[3] = f"order: {L.field.q}^{L.dim} = {L.order}"
    lines.append(f"summary: {summary}")
    return Result(rows=[row], lines=lines)


def cmd_degree(args) -> Result:
    L = load(args.path)
    rep = comm_degree(L, args.method, args.cap)
    res = Result()
    row = rep.to_json()
    row.pop("elapsed_seconds", None)
    row["rank_histogram"] = ";".join(f"{r}:{c}" for r, c in rep.rank_histogram.items())
    res.lines.append(f"degree: {approx(rep.degree)}")
    res.lines.append(f"method: {rep.method.value}, commuting pairs {rep.pair_count} of {rep.q ** (2 * rep.dim)}")
    res.lines.append(f"center dim {rep.center_dim}, derived dim {rep.derived_dim}, breadth {rep.breadth}")
    if args.oracle:
        naive = comm_degree(L, Method.NAIVE_PAIRS, args.cap)
        agree = naive.degree == rep.degree and naive.rank_histogram == rep.rank_histogram
        row["oracle"] = frac(naive.degree)
        row["oracle_agrees"] = agree
        if agree:
            res.lines.append(f"oracle: naive pairs agree ({frac(naive.degree)})")
        else:
            res.code = EXIT_FAIL
            res.lines.append(f"ORACLE MISMATCH: naive pairs gives {frac(naive.degree)}, {rep.method.value} gives {frac(rep.degree)}")
    res.rows.append(row)
    return res


def cmd_sweep(args) -> Result:
    res = Result()
    for q in args.q or [2, 3, 4, 5]:
        F = GF(q)
        spec = parse_family(args.family, F)
        d = comm_degree(make(spec), args.method, args.cap).degree
        closed = closed_form_degree(spec)
        match = d == closed
        if not match:
            res.code = EXIT_FAIL
        res.rows.append({"family": spec.key(), "q": q, "degree": frac(d), "closed_form": frac(closed), "match": match})
        res.lines.append(f"{spec.label()} q={q}: {frac(d)}  closed form {frac(closed)}  {'match' if match else 'MISMATCH'}")
    return res


def _check_rows(res: Result, checks, extra: dict, verbose: bool) -> None:
    for c in checks:
        if not c.passed:
            res.code = EXIT_FAIL
        res.rows.append({**extra, **c.to_json()})
        if verbose or not c.passed:
            res.lines.append(("  " if "item" in extra else "") + c.line())


def cmd_check(args) -> Result:
    res = Result()
    if args.corpus:
        items = corpus_items()
        failed = 0
        for item, checks in run_corpus(args.seed, items):
            bad = sum(not c.passed for c in checks)
            failed += bad
            status = "PASS" if not bad else "FAIL"
            res.lines.append(f"{status} {item.label()}: {len(checks) - bad}/{len(checks)} checks")
            _check_rows(res, checks, {"item": item.label()}, args.verbose)
        total = len(res.rows)
        res.lines.append(
            f"corpus v{CORPUS_VERSION}, seed {args.seed}: {len(items)} items, {total} checks, {failed} failed"
        )
        return res
    if args.path is None:
        raise _Usage("check needs PATH or --corpus")
    L = load(args.path)
    d = comm_degree(L, Method.RANK_PROJECTIVE, args.cap).degree
    res.lines.append(f"degree: {approx(d)}")
    _check_rows(res, algebra_checks(L, cap=args.cap), {}, True)
    return res


def cmd_isoclinic(args) -> Result:
    L, M = load(args.a), load(args.b)
    if L.field != M.field:
        raise FieldMismatch(f"{L.field!r} vs {M.field!r}")
    res = Result()
    dL = comm_degree(L, Method.RANK_PROJECTIVE, args.cap).degree
    dM = comm_degree(M, Method.RANK_PROJECTIVE, args.cap).degree
    row = {"degree_a": frac(dL), "degree_b": frac(dM)}

    if args.witness:
        w = load_witness(args.witness, L.field)
        verdict = "isoclinic" if verify_isoclinism(L, M, w) else "witness-rejected"
    else:
        try:
            w = search_isoclinism(L, M, args.budget)
        except BudgetExceeded as exc:
            w, verdict = None, "unknown"
            row["reason"] = str(exc)
        else:
            verdict = "isoclinic" if w is not None else "not-isoclinic"

    row["verdict"] = verdict
    res.lines.append(f"verdict: {verdict}")
    res.lines.append(f"degrees: {frac(dL)} and {frac(dM)}")
    if verdict == "isoclinic":
        row["witness"] = json.dumps(w.to_json(), sort_keys=True, separators=(",", ":"))
        res.lines.append(f"witness: {row['witness']}")
        row["degrees_equal"] = dL == dM
        if dL != dM:
            res.code = EXIT_FAIL
            res.lines.append("FAIL: isoclinic algebras with different degrees")
    elif verdict == "not-isoclinic":
        res.lines.append("(definitive: search space exhausted or invariant dimensions differ)")
    else:
        res.code = EXIT_FAIL
        if "reason" in row:
            res.lines.append(f"budget exceeded: {row['reason']}")
    res.rows.append(row)
    return res


def cmd_catalog(args) -> Result:
    res = Result()
    if args.action == "list":
        for name, desc in list_families():
            res.rows.append({"family": name, "description": desc})
            res.lines.append(f"{name:<12} {desc}")
        return res
    if not args.family:
        raise _Usage("catalog emit needs a FAMILY")
    L = make(parse_family(args.family, GF(args.q)))
    res.lines.append(emit(L).rstrip("\n"))
    res.rows = None  # the algebra document itself is the output
    return res


# -- plumbing ------------------------------------------------------------------


class _Usage(Exception):
    pass


def _render(res: Result, fmt: str) -> str:
    if res.rows is None or fmt == "text":
        return "".join(line + "\n" for line in res.lines)
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in res.rows)
    keys: list[str] = []
    for r in res.rows:
        keys.extend(k for k in r if k not in keys)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for r in res.rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="enumeration cap (default 10^7)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for the random basis changes")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="liecomm", description="Commutativity degree of Lie algebras over finite fields.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse an algebra file and check the axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common], help="structural summary")
    p.add_argument("path")
    p.set_defaults(func=cmd_info)

    methods = [m.value for m in Method]
    p = sub.add_parser("degree", parents=[common], help="exact commutativity degree")
    p.add_argument("path")
    p.add_argument("--method", choices=methods, default="projective")
    p.add_argument("--oracle", action="store_true", help="cross-check against the naive pair count")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("sweep", parents=[common], help="catalog family against its closed form over several q")
    p.add_argument("family", help="e.g. heisenberg:1, l57, heisenberg:1+abelian:2")
    p.add_argument("--q", type=_q_list, action="extend", help="comma-separated field sizes (default 2,3,4,5)")
    p.add_argument("--method", choices=methods, default="projective")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check", parents=[common], help="run the theorem checks")
    p.add_argument("path", nargs="?")
    p.add_argument("--corpus", action="store_true", help="run the built-in corpus instead of a file")
    p.add_argument("--verbose", action="store_true", help="print passing checks too (corpus mode)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("isoclinic", parents=[common], help="verify or search for an isoclinism")
    p.add_argument("a")
    p.add_argument("b")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--search", action="store_true", help="exhaustive search (the default)")
    mode.add_argument("--witness", help="JSON file with 'alpha' and 'beta' row lists")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("catalog", parents=[common], help="list or emit catalog algebras")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("family", nargs="?")
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        res = args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except (JacobiViolation, AlternatingViolation) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except LieCommError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(res, args.format)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
