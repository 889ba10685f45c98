"""Command-line entry point: ``fundlogic <subcommand> ...``.

Exit codes: 0 success, 1 domain failure (unexpected verdict, failing
facts or checks), 2 usage error (bad flags, unparsable input, unreadable file).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .engine import Budget, Invalid, Unknown, Valid, check, verdict_to_json
from .formula import (
    ParseError, SoritesParams, depth, godel_gentzen, parse, parse_sequent, size, to_text, variables,
)
from .lattice import LatticeError, load_lattice, represent, representation_model
from .rules import LOGICS, format_trace
from .semantics import FixpointViolation, UnknownVariable, evaluate_ordered, load_model, save_model
from .sorites import build_pseudosymmetric, build_symmetric, export_dot, verify_facts


class UsageError(Exception):
    pass


def _emit(args, text: str, doc: dict) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_formula(text: str):
    try:
        return parse(text)
    except ParseError as e:
        raise UsageError(f"cannot parse formula at byte {e.offset}: {e}") from None


def _fmt_states(states) -> str:
    return "{" + ", ".join(str(s) for s in states) + "}"


def cmd_parse(args) -> int:
    text = args.text
    if "|-" in text:
        try:
            s = parse_sequent(text)
        except ParseError as e:
            raise UsageError(f"cannot parse sequent at byte {e.offset}: {e}") from None
        _emit(args, str(s), {"lhs": to_text(s.lhs), "rhs": to_text(s.rhs)})
        return 0
    f = _parse_formula(text)
    _emit(args, to_text(f), {"formula": to_text(f), "size": size(f), "depth": depth(f),
                             "variables": sorted(variables(f))})
    return 0


def cmd_eval(args) -> int:
    try:
        m = load_model(args.model)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot load model {args.model}: {e}") from None
    f = _parse_formula(args.formula)
    try:
        ext = evaluate_ordered(m, f, args.semantics)
    except FixpointViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except UnknownVariable as e:
        raise UsageError(f"model has no valuation for {e.args[0]}") from None
    _emit(args, _fmt_states(ext), {"formula": to_text(f), "semantics": args.semantics,
                                   "extension": [str(s) for s in ext]})
    return 0


def cmd_check(args) -> int:
    try:
        goal = parse_sequent(args.sequent)
    except ParseError as e:
        raise UsageError(f"cannot parse sequent at byte {e.offset}: {e}") from None
    budget = Budget(max_size=args.max_size, universe_depth=args.depth, jobs=args.jobs)
    v = check(goal, args.logic, budget)
    if isinstance(v, Valid):
        text = f"Valid in {args.logic} ({len(v.trace)} steps, {v.method})"
        if args.trace:
            text += "\n" + format_trace(v.trace)
    elif isinstance(v, Invalid):
        text = f"Invalid in {args.logic}: {v.witness.describe()}"
        if args.witness:
            save_model(v.witness.model, args.witness, state=v.witness.state, semantics=v.witness.semantics)
    else:
        assert isinstance(v, Unknown)
        text = (f"Unknown in {args.logic}: no derivation within universe depth {v.universe_depth}, "
                f"no countermodel up to {v.max_size} states")
    doc = {"logic": args.logic, "sequent": str(goal), **verdict_to_json(v, with_trace=args.trace)}
    _emit(args, text, doc)
    if args.expect and v.kind != args.expect:
        return 1
    return 0


def cmd_sorites(args) -> int:
    try:
        params = SoritesParams(args.n, args.delta)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from None
    which = "pseudosymmetric" if args.pseudo else "symmetric"
    m = build_pseudosymmetric(params) if args.pseudo else build_symmetric(params)
    lines = [f"{which} Sorites model n={params.n} delta={params.delta}: {len(m.states)} states"]
    doc: dict = {"n": params.n, "delta": params.delta, "model": which, "states": [str(s) for s in m.states]}
    code = 0
    if args.verify_facts:
        rep = verify_facts(params, which, lem_left_end=args.lem_left_end)
        lines += [r.describe() for r in rep.results]
        lines.append("all facts pass" if rep.passed else "some facts FAIL")
        doc["facts"] = rep.to_json()
        code = 0 if rep.passed else 1
    if args.eval:
        f = _parse_formula(args.eval)
        try:
            ext = evaluate_ordered(m, f)
        except UnknownVariable as e:
            raise UsageError(f"Sorites model has no variable {e.args[0]}") from None
        lines.append(f"[[{to_text(f)}]] = {_fmt_states(ext)}")
        doc["eval"] = {"formula": to_text(f), "extension": [str(s) for s in ext]}
    if args.dot:
        export_dot(m, args.dot, "sorites")
        lines.append(f"wrote {args.dot}")
    _emit(args, "\n".join(lines), doc)
    return code


def cmd_translate(args) -> int:
    f = _parse_formula(args.gg)
    g = godel_gentzen(f)
    _emit(args, to_text(g), {"formula": to_text(f), "translation": to_text(g)})
    return 0


def cmd_represent(args) -> int:
    try:
        L = load_lattice(args.lattice)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot load lattice {args.lattice}: {e}") from None
    except LatticeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        rep = represent(L)
    except LatticeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    lines = [f"{len(rep.filters)} prime filters: {', '.join(str(s) for s in rep.frame.states)}"]
    lines += [f"  {name}: {'ok' if ok else 'FAIL'}" for name, ok in rep.checks.items()]
    lines.append("embedding verified" if rep.ok else "embedding FAILED")
    if args.dot:
        export_dot(representation_model(rep), args.dot, "filters")
        lines.append(f"wrote {args.dot}")
    _emit(args, "\n".join(lines), rep.to_json())
    return 0 if rep.ok else 1


def _default_jobs() -> int:
    raw = os.environ.get("WORKBENCH_JOBS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="parallel workers for countermodel search (env WORKBENCH_JOBS)")

    ap = argparse.ArgumentParser(prog="fundlogic", parents=[common],
                                 description="Fixpoint semantics, Sorites models and sequent checking.")
    ap.set_defaults(format="text", jobs=_default_jobs())
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("parse", parents=[common], help="parse and print a formula or sequent")
    sp.add_argument("text")
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("eval", parents=[common], help="evaluate a formula in a model file")
    sp.add_argument("--model", required=True)
    sp.add_argument("--formula", required=True)
    sp.add_argument("--semantics", choices=("fixpoint", "fine"), default="fixpoint")
    sp.set_defaults(func=cmd_eval)

    defaults = Budget()
    sp = sub.add_parser("check", parents=[common], help="decide a sequent in one of the logics")
    sp.add_argument("--logic", required=True, choices=LOGICS)
    sp.add_argument("--sequent", required=True)
    sp.add_argument("--max-size", type=int, default=defaults.max_size)
    sp.add_argument("--depth", type=int, default=defaults.universe_depth)
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--witness", metavar="FILE")
    sp.add_argument("--expect", choices=("valid", "invalid", "unknown"))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("sorites", parents=[common], help="build a Sorites model")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--pseudo", action="store_true", help="use the pseudosymmetric model")
    sp.add_argument("--verify-facts", action="store_true")
    sp.add_argument("--lem-left-end", choices=("stated", "emext"), default="stated")
    sp.add_argument("--eval", metavar="F")
    sp.add_argument("--dot", metavar="PATH")
    sp.set_defaults(func=cmd_sorites)

    sp = sub.add_parser("translate", parents=[common], help="Goedel-Gentzen translation")
    sp.add_argument("--gg", required=True, metavar="F")
    sp.set_defaults(func=cmd_translate)

    sp = sub.add_parser("represent", parents=[common], help="prime-filter representation of a lattice")
    sp.add_argument("--lattice", required=True, metavar="FILE")
    sp.add_argument("--dot", metavar="PATH")
    sp.set_defaults(func=cmd_represent)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.jobs < 1:
        ap.error("--jobs must be positive")
    if getattr(args, "max_size", 1) < 1:
        ap.error("--max-size must be positive")
    if getattr(args, "depth", 0) < 0:
        ap.error("--depth must be non-negative")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
