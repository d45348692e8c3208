"""Command line: parse -> compile -> normalize -> compare / evaluate / export.

Exit codes: 0 success (or equal), 1 not equal, 2 error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from hocospan import dot
from hocospan.axioms import ALL_AXIOMS, expected_to_hold, run_suite
from hocospan.cospan import GraphCospan, mapping_cylinder
from hocospan.normal import NormalCospan, encode, normalize, to_json
from hocospan.termlang import Semantics, Term, TermError, compile_term, infer_arity, parse
from hocospan.tqft import (
    AlgebraError,
    InvalidAlgebraError,
    eval_normal_cospan,
    resolve_algebra,
    validate_algebra,
)

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


@dataclass
class CliConfig:
    semantics: Semantics = "homotopy"
    inputs: list[str] = field(default_factory=list)
    algebra: Optional[str] = None
    output_format: str = "text"
    seed: int = 0
    max_arity: int = 8

    def __post_init__(self):
        if self.max_arity < 1:
            raise CliError(f"arity bound must be at least 1, got {self.max_arity}")


def read_term(path: str) -> Term:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CliError(f"{path}: cannot read: {e}") from None
    try:
        t = parse(text)
        infer_arity(t)
    except TermError as e:
        raise CliError(f"{path}:{e}") from None
    return t


def compile_file(path: str, semantics: Semantics) -> GraphCospan:
    return compile_term(read_term(path), semantics)


def normal_form(path: str, semantics: Semantics) -> NormalCospan:
    return normalize(compile_file(path, semantics))


def cmd_normalize(cfg: CliConfig, out) -> int:
    for path in cfg.inputs:
        p = normal_form(path, cfg.semantics)
        if len(cfg.inputs) > 1:
            out.write(f"== {path}\n")
        out.write(to_json(p) + "\n" if cfg.output_format == "json" else encode(p))
    return EXIT_OK


def cmd_eq(cfg: CliConfig, out) -> int:
    a, b = (normal_form(path, cfg.semantics) for path in cfg.inputs)
    return EXIT_OK if a == b else EXIT_DIFFERENT


def cmd_eval(cfg: CliConfig, out) -> int:
    if cfg.algebra is None:
        raise CliError("eval needs --algebra")
    (path,) = cfg.inputs
    t = read_term(path)
    arity = infer_arity(t)
    if max(arity) > cfg.max_arity:
        raise CliError(f"{path}: arity {arity.dom}->{arity.cod} exceeds the bound {cfg.max_arity}")
    A = resolve_algebra(cfg.algebra)
    report = validate_algebra(A)
    if not report.ok:
        raise InvalidAlgebraError(report)
    out.write(eval_normal_cospan(normalize(compile_term(t, cfg.semantics)), A).to_text())
    return EXIT_OK


def cmd_dot(cfg: CliConfig, out, cylinder: bool = False) -> int:
    (path,) = cfg.inputs
    f = compile_file(path, cfg.semantics)
    if cylinder:
        f = mapping_cylinder(f)
    out.write(dot.to_dot(f))
    return EXIT_OK


def cmd_check_axioms(cfg: CliConfig, out, instances: int = 100) -> int:
    results = run_suite(cfg.semantics, seed=cfg.seed, instances=instances)
    matches = True
    out.write(f"semantics={cfg.semantics} seed={cfg.seed} instances={instances}\n")
    for axiom, r in zip(ALL_AXIOMS, results):
        expected = expected_to_hold(axiom, cfg.semantics)
        matches &= r.passed == expected
        status = "PASS" if r.passed else "FAIL"
        note = "" if r.passed == expected else " (unexpected)"
        out.write(
            f"{r.name:<16} {status}  generators={'ok' if r.on_generators else 'differ'} "
            f"contexts={r.contexts_passed}/{r.contexts_run}{note}\n"
        )
    out.write(f"pattern {'OK' if matches else 'MISMATCH'}\n")
    return EXIT_OK if matches else EXIT_DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hocospan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--strict", action="store_true", help="compose by set pushout instead of homotopy pushout")
        return p

    p = common(sub.add_parser("normalize", help="print the canonical normal form of term files"))
    p.add_argument("files", nargs="+")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = common(sub.add_parser("eq", help="exit 0 if two terms denote the same morphism, 1 if not"))
    p.add_argument("files", nargs=2)

    p = common(sub.add_parser("eval", help="evaluate a term in a Frobenius algebra"))
    p.add_argument("file")
    p.add_argument("--algebra", required=True, help="built-in name (rationals, dual, split, truncated3) or file path")
    p.add_argument("--max-arity", type=int, default=8)

    p = common(sub.add_parser("dot", help="export the compiled apex as a Graphviz graph"))
    p.add_argument("file")
    p.add_argument("--cylinder", action="store_true", help="apply the mapping cylinder first")

    p = common(sub.add_parser("check-axioms", help="run the Frobenius axiom suite"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=100)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    files = getattr(args, "files", None) or ([args.file] if hasattr(args, "file") else [])
    try:
        cfg = CliConfig(
            semantics="strict" if args.strict else "homotopy",
            inputs=list(files),
            algebra=getattr(args, "algebra", None),
            output_format=getattr(args, "format", "text"),
            seed=getattr(args, "seed", 0),
            max_arity=getattr(args, "max_arity", 8),
        )
        if args.command == "normalize":
            return cmd_normalize(cfg, out)
        if args.command == "eq":
            return cmd_eq(cfg, out)
        if args.command == "eval":
            return cmd_eval(cfg, out)
        if args.command == "dot":
            return cmd_dot(cfg, out, cylinder=args.cylinder)
        return cmd_check_axioms(cfg, out, instances=args.instances)
    except InvalidAlgebraError as e:
        err.write("hocospan: invalid algebra\n" + e.report.to_text())
        return EXIT_ERROR
    except (CliError, AlgebraError, OSError) as e:
        err.write(f"hocospan: {e}\n")
        return EXIT_ERROR
    except Exception as e:  # never a traceback on malformed input
        err.write(f"hocospan: internal error: {type(e).__name__}: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
