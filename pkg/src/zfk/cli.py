"""Command-line entry point: batch subcommands and an interactive REPL."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .coset import CoSet, encode
from .duality import supplement
from .errors import ParseError, UndecidableFragment, ZFKError
from .logic.axioms import anti_correspondence, derive_anti_axiom, lookup, normalize
from .logic.evaluate import Evaluator
from .logic.parser import parse, parse_formula, parse_term, to_text
from .logic.rewrite import contravaluate, dualize, nnf, term_complement
from .logic.syntax import is_formula
from .modelcheck import DEFAULT_CAP, DEFAULT_TUPLE_CAP, check_identity_suite, enumerate_universe, run_axiom_suite

CONFIG_ENV = "ZFK_CONFIG"


@dataclass
class SessionConfig:
    rank_bound: int = 2
    width_bound: int = 2
    element_cap: int = DEFAULT_CAP
    tuple_cap: int = DEFAULT_TUPLE_CAP
    seed: int = 0
    output: str = "text"
    strict: bool = False

    def __post_init__(self):
        for f in ("rank_bound", "width_bound", "element_cap", "tuple_cap", "seed"):
            if getattr(self, f) < 0:
                raise ValueError(f"{f} must be non-negative")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")

    @classmethod
    def load(cls, path: str) -> "SessionConfig":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def universe(self):
        return enumerate_universe(self.rank_bound, self.width_bound, self.element_cap)


# flag name -> config field
_FLAGS = {
    "rank": "rank_bound",
    "width": "width_bound",
    "cap": "element_cap",
    "tuples": "tuple_cap",
    "seed": "seed",
}


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("session")
    for flag in _FLAGS:
        g.add_argument(f"--{flag}", type=int, metavar="N", default=argparse.SUPPRESS)
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    g.add_argument("--strict", action="store_true", default=argparse.SUPPRESS, help="treat partial verdicts as failures")
    g.add_argument("--config", metavar="PATH", default=argparse.SUPPRESS,
                   help=f"JSON session config (default: ${CONFIG_ENV})")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="zfk", description="Finite-or-cofinite set codes, axioms and rewrites.",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.add_parser("check-axioms", parents=[common], help="run the axiom suite on a test universe")
    sub.add_parser("check-identities", parents=[common], help="run the identity suite on a test universe")
    sub.add_parser("enumerate", parents=[common], help="list the test universe")
    rw = sub.add_parser("rewrite", parents=[common], help="transform a formula or term")
    mode = rw.add_mutually_exclusive_group()
    for m, h in (("cv", "contra-valuation, normalized"), ("dual", "dualization"), ("nnf", "negation normal form"),
                 ("anti", "anti form of an axiom row (name, label or formula)"), ("comp", "term complement")):
        mode.add_argument(f"--{m}", dest="mode", action="store_const", const=m, help=h)
    rw.add_argument("expr")
    ev = sub.add_parser("eval", parents=[common], help="evaluate a formula or term")
    ev.add_argument("expr")
    sub.add_parser("repl", parents=[common], help="interactive session")
    return parser


def resolve_config(ns: argparse.Namespace, environ=None) -> SessionConfig:
    environ = os.environ if environ is None else environ
    path = getattr(ns, "config", None) or environ.get(CONFIG_ENV)
    cfg = SessionConfig.load(path) if path else SessionConfig()
    data = asdict(cfg)
    for flag, key in _FLAGS.items():
        if hasattr(ns, flag):
            data[key] = getattr(ns, flag)
    if getattr(ns, "json", False):
        data["output"] = "json"
    if getattr(ns, "strict", False):
        data["strict"] = True
    return SessionConfig(**data)


# -- subcommands --------------------------------------------------------------


def _emit_report(report, cfg: SessionConfig, out) -> int:
    if cfg.output == "json":
        print(report.to_json(), file=out)
    else:
        print(report.to_text(), file=out)
        if report.partial and not report.failed:
            note = "failing (--strict)" if cfg.strict else "passing with a warning"
            print(f"warning: {len(report.partial)} partial verdicts (approximated over U), {note}", file=out)
    return 0 if report.ok(cfg.strict) else 1


def rewrite(expr: str, mode: Optional[str]) -> str:
    mode = mode or "nnf"
    if mode == "comp":
        return to_text(term_complement(parse_term(expr)))
    if mode == "anti":
        try:
            schema = lookup(expr)
        except KeyError:
            return to_text(normalize(anti_correspondence(parse_formula(expr))))
        return derive_anti_axiom(schema).text
    f = parse_formula(expr)
    if mode == "cv":
        return to_text(normalize(contravaluate(f)))
    if mode == "dual":
        return to_text(dualize(f))
    return to_text(nnf(f))


def evaluate_expr(expr: str, cfg: SessionConfig, universe=None):
    """Evaluate text; returns ``(node, value, approximate)``."""
    node = parse(expr)
    if is_formula(node):
        # the universe is only built if a quantifier needs it
        try:
            return node, Evaluator().eval(node, {}), False
        except UndecidableFragment:
            pass
        dom = tuple(universe if universe is not None else cfg.universe())
        ev = Evaluator(domain=dom)
        return node, ev.eval(node, {}), ev.approximate
    return node, Evaluator().term(node, {}), False


def _format_value(expr, value, approximate, cfg: SessionConfig) -> str:
    if cfg.output == "json":
        doc = {"input": expr, "approximate": approximate}
        if isinstance(value, CoSet):
            doc.update(kind="term", value=json.loads(encode(value)), text=str(value))
        else:
            doc.update(kind="formula", value=value)
        return json.dumps(doc, sort_keys=True)
    if isinstance(value, CoSet):
        return str(value)
    s = "true" if value else "false"
    return s + (f"  (approximate over U({cfg.rank_bound},{cfg.width_bound}))" if approximate else "")


def _run(ns, cfg: SessionConfig, out) -> int:
    cmd = ns.command
    if cmd == "check-axioms":
        return _emit_report(run_axiom_suite(cfg.universe(), cfg.tuple_cap, cfg.seed), cfg, out)
    if cmd == "check-identities":
        return _emit_report(check_identity_suite(cfg.universe(), cfg.tuple_cap, cfg.seed), cfg, out)
    if cmd == "enumerate":
        U = cfg.universe()
        if cfg.output == "json":
            doc = {"rank": U.rank_bound, "width": U.width_bound, "size": len(U),
                   "elements": [json.loads(encode(a)) for a in U]}
            print(json.dumps(doc, sort_keys=True), file=out)
        else:
            for a in U:
                print(a, file=out)
        return 0
    if cmd == "rewrite":
        text = rewrite(ns.expr, ns.mode)
        if cfg.output == "json":
            text = json.dumps({"input": ns.expr, "mode": ns.mode or "nnf", "output": text}, sort_keys=True)
        print(text, file=out)
        return 0
    if cmd == "eval":
        node, value, approx = evaluate_expr(ns.expr, cfg)
        print(_format_value(ns.expr, value, approx, cfg), file=out)
        return 0
    if cmd == "repl":
        return repl(cfg)
    raise AssertionError(cmd)


# -- REPL ---------------------------------------------------------------------

REPL_HELP = """\
expressions: a formula prints true/false, a term prints its code
:anti <row|formula>   anti form of an axiom row or formula
:comp <term>          term complement
:S <term>             supplement
:cv / :dual / :nnf <formula>
:quit"""


def repl_line(line: str, cfg: SessionConfig, universe=None) -> Optional[str]:
    """Handle one REPL input; returns the text to print, or None to quit."""
    line = line.strip()
    if not line:
        return ""
    try:
        if line.startswith(":"):
            cmd, _, arg = line[1:].partition(" ")
            arg = arg.strip()
            if cmd in ("quit", "q", "exit"):
                return None
            if cmd == "help":
                return REPL_HELP
            if cmd == "S":
                return str(supplement(Evaluator().term(parse_term(arg), {})))
            modes = {"anti": "anti", "comp": "comp", "cv": "cv", "dual": "dual", "nnf": "nnf"}
            if cmd in modes:
                return rewrite(arg, modes[cmd])
            return f"unknown command :{cmd} (try :help)"
        _, value, approx = evaluate_expr(line, cfg, universe)
        return _format_value(line, value, approx, cfg)
    except ParseError as exc:
        return f"parse error: {exc}"
    except (ZFKError, KeyError, ValueError) as exc:
        return f"error: {exc}"


def repl(cfg: SessionConfig, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    interactive = stdin.isatty()
    universe = None
    try:
        universe = cfg.universe()
    except ZFKError as exc:
        print(f"warning: {exc}; unguarded quantifiers will fail", file=stdout)
    if interactive:
        print("zfk REPL, :help for commands", file=stdout)
    while True:
        if interactive:
            stdout.write("zfk> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        res = repl_line(line, cfg, universe)
        if res is None:
            break
        if res:
            print(res, file=stdout)
    return 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        cfg = resolve_config(ns)
    except (OSError, ValueError, TypeError) as exc:
        print(f"zfk: bad configuration: {exc}", file=sys.stderr)
        return 2
    try:
        return _run(ns, cfg, out)
    except ParseError as exc:
        print(f"zfk: parse error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"zfk: {exc.args[0]}", file=sys.stderr)
        return 2
    except ZFKError as exc:
        print(f"zfk: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
