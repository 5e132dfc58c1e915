"""Command-line front end.

Exit codes: 0 for a definite answer, 1 for usage or input errors, 2 when a
budgeted search ended without a verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

import jsonschema

from .braid_core import Budget, Equivalent, equivalent, format_word, parse_word, replay, simplify
from .one_one import one_one_equivalent, one_one_length_upper, parse_one_one
from .suite import RunConfig, paper_suite, suite_schema
from .torus_words import TorusType, directed_path, recognize_torus_word, torus_word
from .two_bridge import (CFExpansion, Form, cf_value, conway_params,
                         level_bound_rho1, level_bound_rho2, optimize_expansion, parse_entries,
                         rho1_word, rho2_word)

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2
ENV_BUDGET = "LEVELER_BUDGET_NODES"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _default_nodes() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return 10**6
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{ENV_BUDGET}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=_positive, default=None,
                        help=f"node budget for searches (default 10^6, or ${ENV_BUDGET})")
    common.add_argument("--budget-len", type=_positive, default=None,
                        help="maximum word length during searches (default 2*|input|+8)")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    ap = _Parser(prog="leveler", description="Torus words, (1,1)-words and 2-bridge level bounds.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("torus-word", parents=[common], help="torus word of a coprime type")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = sub.add_parser("recognize", parents=[common], help="type of a literal torus word")
    p.add_argument("word")
    p = sub.add_parser("conway", parents=[common], help="Conway parameters of P/Q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = sub.add_parser("cf-value", parents=[common], help="value of a continued fraction")
    p.add_argument("entries")
    p = sub.add_parser("describe", parents=[common], help="braid description of a rho-position")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--position", choices=["rho1", "rho2"], required=True)
    p.add_argument("--expansion", default=None, help="entries to use instead of the Conway ones")
    p = sub.add_parser("level-bound", parents=[common], help="level bound of an expansion")
    p.add_argument("entries")
    p.add_argument("--form", choices=["even-odd", "odd-even"], required=True)
    p = sub.add_parser("optimize", parents=[common], help="expansion with the smallest level bound")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--position", choices=["rho1", "rho2"], required=True)
    p = sub.add_parser("simplify", parents=[common], help="shortest equal word found by search")
    p.add_argument("word")
    for name, text in (("equiv", "equality in the reduced braid group"),
                       ("equiv11", "(1,1)-equivalence")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("word1")
        p.add_argument("word2")
    p = sub.add_parser("parse11", parents=[common], help="split a word into torus-word blocks")
    p.add_argument("word")
    p = sub.add_parser("one-one-length", parents=[common], help="upper bound for the (1,1)-length")
    p.add_argument("word")
    sub.add_parser("paper-suite", parents=[common], help="run the worked-example regression suite")
    return ap


def _rational(p: int, q: int) -> Fraction:
    if q == 0:
        raise UsageError("denominator must be nonzero")
    return Fraction(p, q)


def _expansion(text: str, form: Form) -> CFExpansion:
    return CFExpansion(parse_entries(text), form)


def _verdict_text(v) -> str:
    if isinstance(v, Equivalent):
        return f"equivalent ({len(v.certificate)} steps)\n{v.certificate.dumps()}"
    if v.verdict == "distinct":
        return f"distinct: {v.invariant} {tuple(v.value1)} vs {tuple(v.value2)}"
    r = v.report
    return f"unknown: {r.reason} after {r.nodes} nodes (max_len {r.max_len}, depth {r.depth})"


def dispatch(args, cfg: RunConfig) -> tuple[dict, dict, str, int]:
    """Run one subcommand; return ``(input, result, text, exit_code)``."""
    cmd = args.command
    if cmd == "torus-word":
        t = TorusType(args.p, args.q)
        word = torus_word(t)
        result = {"type": [t.p, t.q], "word": format_word(word)}
        if abs(t.p) + abs(t.q) >= 2:
            result["path"] = [list(v) for v in directed_path(t).vertices]
        return {"p": args.p, "q": args.q}, result, format_word(word), EXIT_OK
    if cmd == "recognize":
        w = parse_word(args.word)
        t = recognize_torus_word(w)
        result = {"word": format_word(w), "type": [t.p, t.q] if t else None}
        return {"word": args.word}, result, str(t) if t else "not a torus word", EXIT_OK
    if cmd == "conway":
        r = _rational(args.p, args.q)
        e = conway_params(r)
        return ({"p": args.p, "q": args.q}, {"value": str(r), "entries": list(e.entries)},
                str(e), EXIT_OK)
    if cmd == "cf-value":
        v = cf_value(parse_entries(args.entries))
        return {"entries": args.entries}, {"value": str(v)}, str(v), EXIT_OK
    if cmd == "describe":
        r = _rational(args.p, args.q)
        form = Form.EVEN_ODD if args.position == "rho1" else Form.ODD_EVEN
        if args.expansion:
            e = _expansion(args.expansion, form)
            if cf_value(e) != r:
                raise UsageError(f"{e} evaluates to {cf_value(e)}, not {r}")
        else:
            e = conway_params(r).as_form(form)
        word = rho1_word(e) if args.position == "rho1" else rho2_word(e)
        inp = {"p": args.p, "q": args.q, "position": args.position, "expansion": args.expansion}
        return inp, {"expansion": list(e.entries), "word": format_word(word)}, format_word(word), EXIT_OK
    if cmd == "level-bound":
        if args.form == "even-odd":
            bound = level_bound_rho1(_expansion(args.entries, Form.EVEN_ODD))
        else:
            bound = level_bound_rho2(_expansion(args.entries, Form.ODD_EVEN))
        return {"entries": args.entries, "form": args.form}, {"bound": bound}, str(bound), EXIT_OK
    if cmd == "optimize":
        r = _rational(args.p, args.q)
        e, bound = optimize_expansion(r, args.position)
        base = conway_params(r).as_form(e.form)
        base_bound = level_bound_rho1(base) if args.position == "rho1" else level_bound_rho2(base)
        result = {"expansion": list(e.entries), "bound": bound, "conway_bound": base_bound}
        return ({"p": args.p, "q": args.q, "position": args.position}, result,
                f"{e} bound {bound} (Conway parameters give {base_bound})", EXIT_OK)
    if cmd == "simplify":
        w = parse_word(args.word)
        end, cert, report = simplify(w, Budget(cfg.budget_len or len(w) + 4, cfg.budget_nodes))
        result = {"word": format_word(end), "certificate": cert.to_json(),
                  "search": report.to_json()}
        return {"word": args.word}, result, format_word(end), EXIT_OK
    if cmd in ("equiv", "equiv11"):
        w1, w2 = parse_word(args.word1), parse_word(args.word2)
        search = equivalent if cmd == "equiv" else one_one_equivalent
        v = search(w1, w2, cfg.budget(w1, w2), cfg.workers)
        if isinstance(v, Equivalent):
            assert replay(v.certificate)
        code = EXIT_UNKNOWN if v.verdict == "unknown" else EXIT_OK
        return {"word1": args.word1, "word2": args.word2}, v.to_json(), _verdict_text(v), code
    if cmd == "parse11":
        o = parse_one_one(parse_word(args.word))
        lines = [f"k = {o.k}"]
        for i, (t, w) in enumerate(o.blocks):
            if i:
                lines.append(f"  s^{o.seps[i - 1]}")
            lines.append(f"  [{w}]  type {t}")
        return {"word": args.word}, o.to_json(), "\n".join(lines), EXIT_OK
    if cmd == "one-one-length":
        w = parse_word(args.word)
        rep = one_one_length_upper(w, cfg.budget(w))
        lines = [f"upper bound {rep.upper}", f"witness {rep.witness}"]
        lines += [f"  block {format_word(b)}  type {t}" for t, b in rep.witness.blocks]
        if rep.witness.is_empty:
            lines.append("  empty word: |1| = 1 by convention, reported as type (1, 0)")
        lines.append(f"lower bound {rep.lower_status.value}")
        return {"word": args.word}, rep.to_json(), "\n".join(lines), EXIT_OK
    if cmd == "paper-suite":
        results = paper_suite(cfg)
        counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "unknown")}
        result = {"cases": [r.to_json() for r in results], "passed": counts["pass"],
                  "failed": counts["fail"], "unknown": counts["unknown"]}
        width = max(len(r.case) for r in results)
        lines = [f"{r.status.upper():7s} {r.case:{width}s}  expected {r.expected!r}, got {r.actual!r}"
                 f"  ({r.seconds:.2f}s)" for r in results]
        lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['unknown']} unknown")
        code = EXIT_OK if counts["pass"] == len(results) else (
            EXIT_UNKNOWN if counts["fail"] == 0 else EXIT_USAGE)
        return {}, result, "\n".join(lines), code
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    t0 = time.perf_counter()
    try:
        nodes = args.budget_nodes if args.budget_nodes is not None else _default_nodes()
        cfg = RunConfig(nodes, args.budget_len, args.workers, "json" if args.json else "text")
        inp, result, text, code = dispatch(args, cfg)
    except (UsageError, ValueError) as exc:
        # ValueError covers word syntax, bad types, expansion and parse errors
        print(f"leveler: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output == "json":
        doc = {"command": args.command, "input": inp, "result": result, "budget": cfg.to_json(),
               "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}
        if args.command == "paper-suite":
            jsonschema.validate(doc, suite_schema())
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
