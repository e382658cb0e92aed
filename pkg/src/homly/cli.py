"""Command-line interface.

Exit codes: 0 when a suite passes or a construction succeeds, 1 when a suite
finds counterexamples, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import catalog, constructions, io, morphisms, suites
from .algebra import random_algebra
from .errors import HomlyError
from .exact import LinearMap, parse_rational

log = logging.getLogger("homly")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CONSTRUCTIONS = ("prop24", "cor33", "eq41", "lie-ly", "j-alpha")
TWIST_MODES = ("thm31", "cor32", "cor33")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise HomlyError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_algebra(path: str):
    return io.parse_algebra(_read(path))


def cmd_verify(args) -> int:
    A = _load_algebra(args.algebra)
    suite = args.suite
    if args.b6 == "printed":
        if suite not in ("hom-ly", "hom-ly-printed-b6"):
            raise HomlyError("--b6 printed only applies to the hom-ly suite")
        suite = "hom-ly-printed-b6"
    report = suites.run_suite(A, suite, max_counterexamples=args.max_counterexamples)
    sys.stdout.write(io.emit_report(report, args.format, A.basis))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_derive(args) -> int:
    A = _load_algebra(args.algebra)
    kind = args.construction
    if kind == "prop24":
        out = constructions.prop24_triple(A)
    elif kind == "cor33":
        out = constructions.twist_malcev(A, LinearMap.identity(A.dim))
    elif kind == "eq41":
        out = constructions.eq41_algebra(A)
    elif kind == "lie-ly":
        out = constructions.lie_to_ly(A)
    else:
        out = A.replace(ternary=constructions.j_alpha(A),
                        name=f"{A.name}|j-alpha" if A.name else "j-alpha")
    _write(io.emit_algebra(out), args.output)
    return EXIT_OK


def cmd_twist(args) -> int:
    A = _load_algebra(args.algebra)
    beta = io.parse_map(_read(args.morphism))
    fn = {"thm31": constructions.yau_twist, "cor32": constructions.twist_ly,
          "cor33": constructions.twist_malcev}[args.mode]
    _write(io.emit_algebra(fn(A, beta)), args.output)
    return EXIT_OK


def cmd_endos(args) -> int:
    A = _load_algebra(args.algebra)
    if args.candidates:
        cands = io.parse_candidates(_read(args.candidates))
    elif args.permutations:
        cands = morphisms.permutation_candidates(A.dim, args.signed, cap=args.cap)
    else:
        values = [parse_rational(s.strip()) for s in args.scalars.split(",") if s.strip()]
        cands = morphisms.scalar_candidates(A.dim, values)
    kept = morphisms.filter_endomorphisms(A, cands, args.commute)
    log.info("%d of %d candidates are endomorphisms", len(kept), len(cands))
    _write(io.emit_candidates(kept), args.output)
    return EXIT_OK


def cmd_probe(args) -> int:
    A = _load_algebra(args.algebra)
    report = constructions.probe_homly_from_hommalcev(A, args.max_counterexamples)
    sys.stdout.write(io.emit_report(report, args.format, A.basis))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_random(args) -> int:
    A = random_algebra(args.dim, args.seed, skew_binary=args.skew, with_ternary=args.ternary,
                       alpha="random" if args.random_alpha else "identity")
    _write(io.emit_algebra(A), args.output)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        sys.stdout.write("".join(f"{name}\n" for name in catalog.names()))
    else:
        sys.stdout.write(catalog.text(args.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="homly", description="Exact checks and constructions for Hom-Lie-Yamaguti algebras.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def report_opts(sp):
        sp.add_argument("--max-counterexamples", type=int, default=5, metavar="N")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("verify", help="run an identity suite")
    sp.add_argument("algebra", nargs="?", default="-", help="algebra file (default: stdin)")
    sp.add_argument("--suite", required=True, choices=suites.SUITE_IDS)
    sp.add_argument("--b6", choices=("strict", "printed"), default="strict")
    report_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("derive", help="build a derived algebra")
    sp.add_argument("algebra", nargs="?", default="-")
    sp.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_derive)

    sp = sub.add_parser("twist", help="twist an algebra along an endomorphism")
    sp.add_argument("algebra", nargs="?", default="-")
    sp.add_argument("--morphism", required=True)
    sp.add_argument("--mode", choices=TWIST_MODES, default="thm31")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_twist)

    sp = sub.add_parser("endos", help="filter candidate maps down to endomorphisms")
    sp.add_argument("algebra", nargs="?", default="-")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--candidates")
    src.add_argument("--permutations", action="store_true")
    src.add_argument("--scalars", help="comma-separated rationals; write --scalars=-1,0,1/2 when the list starts with a sign")
    sp.add_argument("--signed", action="store_true")
    sp.add_argument("--commute", action="store_true", help="also require commuting with alpha")
    sp.add_argument("--cap", type=int, default=morphisms.DEFAULT_CANDIDATE_CAP)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_endos)

    sp = sub.add_parser("probe", help="test a Hom-Malcev algebra with the derived ternary for Hom-LY axioms")
    sp.add_argument("algebra", nargs="?", default="-")
    report_opts(sp)
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("random", help="emit a seeded random algebra")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--skew", action="store_true")
    sp.add_argument("--ternary", action="store_true")
    sp.add_argument("--random-alpha", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("catalog", help="list bundled algebras or print one")
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_catalog)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (HomlyError, ValueError) as exc:
        print(f"homly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
