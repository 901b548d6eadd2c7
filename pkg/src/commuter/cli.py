"""The commuter command line.

Subcommands cover every engine: check and normalize for .cmt files, prove
for user equations, theorem1/theorem3 for the built-in drivers, finset and
matrix for the two concrete models.

Exit codes: 0 success, 1 failed check or disproof, 2 budget exhausted,
3 usage or parse error.

Output is plain text by default.  ``--format structured`` switches to
line-delimited JSON records; the first record is always a header carrying
the format version and the command name.  Color is applied only when
stdout is a terminal and NO_COLOR is unset.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .core import Diagram, boundaries, fmt_word
from .duality import theorem1_dual_inverse, verify_theorem1, verify_theorem3
from .dsl import Document, load_document, parse_term, print_term
from .errors import BudgetError, CommuterError, NumericError, SearchExhausted
from .exchange import canonicalize, interchange_equal
from .finset import FinSetObj, PowerS, TimesS, atom_strong_check, canonical_alpha
from .matrix import TOL_CHAIN, TOL_EXACT, check_theorem1_numeric, check_theorem3_numeric
from .prover import ProofTrace, SearchBudget, prove_equal, rules_from_signature

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A002 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Output:
    structured: bool = False
    color: bool = False
    records: list[dict] = field(default_factory=list)

    def header(self, command: str) -> None:
        if self.structured:
            self.emit({"record": "header", "version": FORMAT_VERSION, "command": command})

    def emit(self, record: dict) -> None:
        if self.structured:
            print(json.dumps(record, sort_keys=True))

    def text(self, line: str = "") -> None:
        if not self.structured:
            print(line)

    def mark(self, word: str, good: bool) -> str:
        if not self.color:
            return word
        code = "32" if good else "31"
        return f"\x1b[{code}m{word}\x1b[0m"

    def status(self, status: str, exit_code: int) -> int:
        self.emit({"record": "status", "status": status, "exit": exit_code})
        return exit_code


def _trace_steps(trace: ProofTrace) -> list[dict]:
    steps = []
    for step in trace.steps:
        m = step.match
        steps.append(
            {
                "rule": step.rule,
                "direction": step.direction,
                "start": m.start,
                "end": m.end,
                "whisker": m.whisker_left,
            }
        )
    return steps


def _print_trace(out: Output, label: str, trace: ProofTrace) -> None:
    n = len(trace.steps)
    out.text(f"{label}: {n} step{'s' if n != 1 else ''}")
    for k, step in enumerate(trace.steps, start=1):
        m = step.match
        out.text(
            f"  {k}. {step.rule} {step.direction} @ slices[{m.start}..{m.end}] "
            f"whisker {m.whisker_left}"
        )
    out.emit(
        {
            "record": "trace",
            "goal": label,
            "input": fmt_word(trace.start.input),
            "steps": _trace_steps(trace),
            "length": n,
        }
    )


def _residual_report(out: Output, command: str, report) -> int:
    label = " ".join(f"{k}={v}" for k, v in report.dims.items())
    seed_part = f" seed={report.seed}" if report.seed is not None else ""
    out.text(f"{command} dims {label}{seed_part} tolerance {report.tolerance:g}")
    for name, value in report.residuals.items():
        out.text(f"  {name:<24} {value:.3e}")
    verdict = "ok" if report.ok else "FAILED"
    out.text(f"  {out.mark(verdict, report.ok)}")
    out.emit(
        {
            "record": "report",
            "command": command,
            "dims": report.dims,
            "seed": report.seed,
            "residuals": report.residuals,
            "tolerance": report.tolerance,
            "ok": report.ok,
        }
    )
    return out.status("ok" if report.ok else "failed", EXIT_OK if report.ok else EXIT_FAILED)


# ---------------------------------------------------------------- commands

def cmd_check(args, out: Output) -> int:
    doc = load_document(args.file)
    sig = doc.signature
    out.text(f"objects: {len(sig.objects)} ({' '.join(sig.objects)})")
    out.text(f"generators: {len(sig.morphisms)}")
    for gen in sig.morphisms.values():
        out.text(f"  {gen.name} : {fmt_word(gen.dom)} -> {fmt_word(gen.cod)}")
    out.text(f"diagrams: {len(doc.diagrams)}")
    for name, dia in doc.diagrams.items():
        src, dst = boundaries(dia)
        out.text(f"  {name} : {fmt_word(src)} -> {fmt_word(dst)} ({len(dia.slices)} slices)")
    out.text(f"rules: {len(doc.rules)}")
    for name, rule in doc.rules.items():
        src, dst = boundaries(rule.lhs)
        out.text(f"  {name} : {fmt_word(src)} -> {fmt_word(dst)}")
    out.emit(
        {
            "record": "summary",
            "objects": list(sig.objects),
            "generators": len(sig.morphisms),
            "diagrams": len(doc.diagrams),
            "rules": len(doc.rules),
        }
    )
    return out.status("ok", EXIT_OK)


def _load_terms(args) -> tuple[Document, Diagram, Diagram | None]:
    doc = load_document(args.file)
    lhs = parse_term(args.lhs, doc)
    rhs = parse_term(args.rhs, doc) if getattr(args, "rhs", None) else None
    return doc, lhs, rhs


def cmd_normalize(args, out: Output) -> int:
    _, lhs, rhs = _load_terms(args)
    canon = canonicalize(lhs)
    out.text(f"input:     {print_term(lhs)}")
    out.text(f"canonical: {print_term(canon.diagram)}")
    out.text(f"slices:    {canon.diagram}")
    out.emit(
        {
            "record": "normal_form",
            "input": print_term(lhs),
            "canonical": print_term(canon.diagram),
            "certificate": list(canon.certificate),
        }
    )
    if rhs is None:
        return out.status("ok", EXIT_OK)
    equal = interchange_equal(lhs, rhs)
    verdict = "equal" if equal else "not equal"
    out.text(f"comparison: {out.mark(verdict, equal)} (up to slice interchange)")
    out.emit({"record": "comparison", "equal": equal})
    return out.status("ok" if equal else "failed", EXIT_OK if equal else EXIT_FAILED)


def cmd_prove(args, out: Output) -> int:
    doc, lhs, rhs = _load_terms(args)
    if boundaries(lhs) != boundaries(rhs):
        out.text("not equal: boundaries differ")
        out.emit({"record": "comparison", "equal": False, "reason": "boundaries"})
        return out.status("failed", EXIT_FAILED)
    rules = rules_from_signature(doc.signature)
    budget = SearchBudget(max_depth_per_side=args.max_depth, max_nodes=args.max_nodes)
    try:
        trace = prove_equal(lhs, rhs, rules, budget)
    except SearchExhausted as e:
        out.text(f"budget exhausted: {e}")
        out.emit({"record": "budget", "stats": e.stats()})
        return out.status("budget", EXIT_BUDGET)
    _print_trace(out, f"{args.lhs} = {args.rhs}", trace)
    return out.status("ok", EXIT_OK)


def cmd_theorem1(args, out: Output) -> int:
    trace_right, trace_left = verify_theorem1()
    _print_trace(out, "alpha after gamma = id A X", trace_right)
    _print_trace(out, "gamma after alpha = id X A", trace_left)
    return out.status("ok", EXIT_OK)


def cmd_theorem3(args, out: Output) -> int:
    trace = verify_theorem3()
    _print_trace(out, "unit-counit composite = a", trace)
    dual_right, dual_left = theorem1_dual_inverse()
    _print_trace(out, "b after delta = id X B", dual_right)
    _print_trace(out, "delta after b = id B X", dual_left)
    return out.status("ok", EXIT_OK)


def cmd_finset_atom(args, out: Output) -> int:
    report = atom_strong_check(FinSetObj(args.d), args.max_j)
    out.text(f"atom check for |D| = {report.d_size}, scanning |J| = 0..{report.max_j}")
    for j, (ok, (dom, cod)) in enumerate(zip(report.bijective, report.sizes)):
        out.text(f"  |J| = {j}: {dom} -> {cod}  bijection: {'yes' if ok else 'no'}")
    out.text(f"  retract of 1: {'yes' if report.retract else 'no'}")
    if report.consistent:
        out.text(f"  verdict: {out.mark('ok', True)}")
    else:
        first = report.failures()[0]
        out.text(f"  verdict: {out.mark('FAILED', False)} (first failure at |J| = {first})")
    out.emit(
        {
            "record": "report",
            "command": "finset-atom",
            "d": report.d_size,
            "max_j": report.max_j,
            "bijective": list(report.bijective),
            "sizes": [list(s) for s in report.sizes],
            "retract": report.retract,
            "consistent": report.consistent,
        }
    )
    return out.status(
        "ok" if report.consistent else "failed",
        EXIT_OK if report.consistent else EXIT_FAILED,
    )


def cmd_finset_copower(args, out: Output) -> int:
    if args.power is not None:
        expr = PowerS(args.power)
        shown = f"power {args.power}"
    else:
        expr = TimesS(args.s)
        shown = f"times {args.s}"
    m = canonical_alpha(expr, args.j, FinSetObj(args.c))
    out.text(f"copower comparison for {shown}, j = {args.j}, |C| = {args.c}")
    out.text(f"  {m.dom.size} -> {m.cod.size}")
    out.text(f"  injective: {'yes' if m.is_injective else 'no'}")
    out.text(f"  surjective: {'yes' if m.is_surjective else 'no'}")
    ok = m.is_bijective
    out.text(f"  bijection: {out.mark('yes' if ok else 'no', ok)}")
    out.emit(
        {
            "record": "report",
            "command": "finset-copower",
            "functor": shown,
            "j": args.j,
            "c": args.c,
            "dom": m.dom.size,
            "cod": m.cod.size,
            "bijective": ok,
        }
    )
    return out.status("ok" if ok else "failed", EXIT_OK if ok else EXIT_FAILED)


def _parse_dims(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError
    a, b = (int(p) for p in parts)
    if a < 1 or b < 1:
        raise ValueError
    return a, b


_parse_dims.__name__ = "dims"  # argparse embeds the converter name in errors


def cmd_matrix_theorem1(args, out: Output) -> int:
    da, dx = args.dims
    report = check_theorem1_numeric(da, dx, args.seed, tolerance=TOL_CHAIN)
    return _residual_report(out, "matrix-theorem1", report)


def cmd_matrix_theorem3(args, out: Output) -> int:
    dn, dx = args.dims
    report = check_theorem3_numeric(dn, dx, tolerance=TOL_EXACT)
    return _residual_report(out, "matrix-theorem3", report)


# ---------------------------------------------------------------- wiring

def build_parser() -> _Parser:
    parser = _Parser(prog="commuter", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="output style (structured = line-delimited JSON)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("check", help="parse and type-check a .cmt file")
    p.add_argument("--file", required=True)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("normalize", help="canonical form of a term; compare two terms")
    p.add_argument("--file", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs")
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("prove", help="search for an equational proof")
    p.add_argument("--file", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--max-depth", type=int, default=8)
    p.add_argument("--max-nodes", type=int, default=50_000)
    p.set_defaults(run=cmd_prove)

    p = sub.add_parser("theorem1", help="inverse of a commutation map, both sides")
    p.set_defaults(run=cmd_theorem1)

    p = sub.add_parser("theorem3", help="co-variant composite plus the dualized inverse check")
    p.set_defaults(run=cmd_theorem3)

    p = sub.add_parser("finset", help="finite-set model checks")
    fs = p.add_subparsers(dest="finset_command", required=True, metavar="check")
    q = fs.add_parser("atom", help="constants-map bijectivity scan over small J")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--max-j", type=int, default=4)
    q.set_defaults(run=cmd_finset_atom)
    q = fs.add_parser("copower", help="comparison map out of a copower")
    grp = q.add_mutually_exclusive_group(required=True)
    grp.add_argument("--s", type=int, help="use the product functor S x -")
    grp.add_argument("--power", type=int, help="use the power functor (-)^S")
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--c", type=int, required=True)
    q.set_defaults(run=cmd_finset_copower)

    p = sub.add_parser("matrix", help="numeric model checks")
    mx = p.add_subparsers(dest="matrix_command", required=True, metavar="check")
    q = mx.add_parser("theorem1", help="random alpha, mate, inverse residuals")
    q.add_argument("--dims", type=_parse_dims, default=(2, 2), metavar="A,X")
    q.add_argument("--seed", type=int, default=42)
    q.set_defaults(run=cmd_matrix_theorem1)
    q = mx.add_parser("theorem3", help="flip instantiation, exact residuals")
    q.add_argument("--dims", type=_parse_dims, default=(2, 2), metavar="N,X")
    q.set_defaults(run=cmd_matrix_theorem3)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = Output(
        structured=(args.format == "structured"),
        color=sys.stdout.isatty() and "NO_COLOR" not in os.environ,
    )
    out.header(args.command)
    try:
        return args.run(args, out)
    except (SearchExhausted, BudgetError) as e:
        print(f"commuter: budget exhausted: {e}", file=sys.stderr)
        return out.status("budget", EXIT_BUDGET)
    except NumericError as e:
        print(f"commuter: numeric check failed: {e}", file=sys.stderr)
        return out.status("failed", EXIT_FAILED)
    except CommuterError as e:
        print(f"commuter: {type(e).__name__}: {e}", file=sys.stderr)
        return out.status("usage", EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
