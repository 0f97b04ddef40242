"""Batch front end.

Exit codes: 0 witness found / certificate verified / threshold known, 1 NotFound / Reject /
Unknown, 2 usage or input error, 3 a proof-impossible branch executed.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ._sync import SyncWrapper
from .basic import chvatal_komlos_extract, clique_chain_extract, extract_clique_vs_monopath
from .bounds import bound
from .canonical import (
    extract_3uniform_clique_vs_tightpath,
    extract_lexicographic_nonincreasing,
    extract_non_increasing,
)
from .codec import dump_certificate, dumps, load_certificate, loads
from .enums import BoundFormula, ChainMode, Color, Notion, PatternKind, Shape, Strategy
from .exceptions import ParadoxError, RamseyError
from .generators import generate_es_extremal, generate_lower_bound_blocked, generate_random
from .models import PairLabeling, PatternSpec, TripleColoring, TwoColoring
from .oracle import GoldenRecord, Oracle, Threshold, write_golden
from .pathpower import (
    extract_blowup_vs_clique,
    extract_diagonal_pathpower,
    extract_pathpower_vs_clique,
)
from .rednet import extract_clique_vs_powerpath
from .witness import Certificate, Instance, verify_certificate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_PARADOX = 3

PARAM_NAMES = ("s", "t", "n", "p", "q", "m")


class UsageError(Exception):
    """Flags that parse but do not fit together."""


@dataclass(frozen=True, slots=True)
class Theorem:
    instance: type
    params: tuple[str, ...]
    run: Callable[[Any, Mapping[str, int], argparse.Namespace], Certificate | None]


def _lex_or_strategy(
    lab: PairLabeling, p: Mapping[str, int], args: argparse.Namespace
) -> Certificate | None:
    if args.strategy is None:
        return extract_lexicographic_nonincreasing(lab, p["s"])
    return extract_non_increasing(lab, p["s"], Strategy(args.strategy))


THEOREMS: dict[str, Theorem] = {
    "es": Theorem(
        TwoColoring, ("s", "n"), lambda g, p, _: extract_clique_vs_monopath(g, p["s"], p["n"])
    ),
    "ck": Theorem(
        PairLabeling, ("p", "q"), lambda lab, p, _: chvatal_komlos_extract(lab, p["p"], p["q"])
    ),
    "chain": Theorem(
        TwoColoring,
        ("t", "m"),
        lambda g, p, a: clique_chain_extract(g, p["t"], p["m"], ChainMode(a.mode), p.get("n")),
    ),
    "powerpath_clique": Theorem(
        TwoColoring, ("t", "n"), lambda g, p, _: extract_pathpower_vs_clique(g, p["t"], p["n"])
    ),
    "diagonal_powerpath": Theorem(
        TwoColoring, ("t", "n"), lambda g, p, _: extract_diagonal_pathpower(g, p["t"], p["n"])
    ),
    "tightpath3": Theorem(
        TripleColoring,
        ("s", "n"),
        lambda h, p, _: extract_3uniform_clique_vs_tightpath(h, p["s"], p["n"]),
    ),
    "lex_nonincreasing": Theorem(PairLabeling, ("s",), _lex_or_strategy),
    "clique_powerpath": Theorem(
        TwoColoring,
        ("s", "t", "n"),
        lambda g, p, a: extract_clique_vs_powerpath(
            g, p["s"], p["t"], p["n"], r=a.r, seed=a.seed
        ),
    ),
    "blowup": Theorem(
        TwoColoring, ("t", "n"), lambda g, p, _: extract_blowup_vs_clique(g, p["t"], p["n"])
    ),
}


# --- Argument helpers ---


def _collect_params(args: argparse.Namespace) -> dict[str, int]:
    params: dict[str, int] = {}
    for token in args.params or ():
        key, eq, raw = token.partition("=")
        if not eq:
            raise UsageError(f"--params expects key=value, got {token!r}")
        try:
            params[key] = int(raw)
        except ValueError:
            raise UsageError(f"Parameter {key} must be an integer") from None
    for name in PARAM_NAMES:
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    return params


def _require(params: Mapping[str, int], names: Sequence[str], what: str) -> None:
    missing = [name for name in names if name not in params]
    if missing:
        raise UsageError(f"{what} needs {', '.join('--' + m for m in missing)}")


def parse_pattern(text: str, color: Color) -> PatternSpec:
    """``kind:size[:t]``, e.g. ``clique:3`` or ``path_power:5:2``."""
    parts = text.split(":")
    try:
        kind = PatternKind(parts[0])
        numbers = [int(x) for x in parts[1:]]
    except ValueError:
        raise UsageError(f"Bad pattern {text!r}") from None
    if not 1 <= len(numbers) <= 2:
        raise UsageError(f"Pattern {text!r} needs a size and an optional t")
    return PatternSpec(kind, numbers[0], color, *numbers[1:])


def _read_instance(path: str) -> Instance:
    return loads(Path(path).read_text())


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    for name in PARAM_NAMES:
        parser.add_argument(f"--{name}", type=int, help=f"parameter {name}")
    parser.add_argument("--params", nargs="*", metavar="KEY=VALUE", help="parameters as pairs")


# --- Commands ---


def cmd_gen(args: argparse.Namespace) -> int:
    params = _collect_params(args)
    match args.kind:
        case "random":
            instance = generate_random(
                args.shape,
                args.n_vertices,
                n_colors=args.n_colors,
                p_blue=args.p_blue,
                seed=args.seed,
            )
        case "blocked":
            _require(params, ("s", "t", "n"), "gen blocked")
            if args.inner is None:
                raise UsageError("gen blocked needs --inner")
            inner = _read_instance(args.inner)
            if not isinstance(inner, TwoColoring):
                raise UsageError("--inner must be an ORC2 coloring")
            instance = generate_lower_bound_blocked(params["s"], params["t"], params["n"], inner)
        case _:
            _require(params, ("s", "n"), "gen extremal")
            instance = generate_es_extremal(params["s"], params["n"])
    _emit(dumps(instance), args.output)
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    theorem = THEOREMS[args.theorem]
    params = _collect_params(args)
    _require(params, theorem.params, f"extract --theorem {args.theorem}")
    instance = _read_instance(args.input)
    if not isinstance(instance, theorem.instance):
        raise UsageError(f"--theorem {args.theorem} needs a {theorem.instance.__name__} input")
    cert = theorem.run(instance, params, args)
    if cert is None:
        print("NotFound", file=sys.stderr)
        return EXIT_NOT_FOUND
    verdict = verify_certificate(instance, cert)
    if not verdict:
        print(f"Extracted certificate failed re-verification: {verdict}", file=sys.stderr)
        return EXIT_PARADOX
    _emit(dump_certificate(cert), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    instance = _read_instance(args.input)
    cert = load_certificate(Path(args.cert).read_text())
    verdict = verify_certificate(instance, cert)
    print(verdict)
    return EXIT_OK if verdict else EXIT_NOT_FOUND


def _golden(args: argparse.Namespace, params: dict[str, int | str], result: Threshold) -> None:
    directory = Path(args.golden)
    stem = "_".join([args.target, *(f"{k}{v}" for k, v in params.items())]).replace(":", "-")
    witness = None
    if result.extremal is not None:
        witness = f"{stem}.txt"
        directory.mkdir(parents=True, exist_ok=True)
        (directory / witness).write_text(dumps(result.extremal))
    record = GoldenRecord(args.target, params, result.value, witness)
    provenance = f"pyordramsey oracle --target {args.target} --n-max {result.n_max}"
    path = write_golden(directory, stem, [record], provenance=provenance)
    logger.info("Wrote %s", path)


def _query(args: argparse.Namespace, oracle: SyncWrapper) -> tuple[Threshold, dict[str, int | str]]:
    params = _collect_params(args)
    golden: dict[str, int | str]
    match args.target:
        case "ramsey":
            if args.red is None or args.blue is None:
                raise UsageError("oracle --target ramsey needs --red and --blue")
            red = parse_pattern(args.red, Color.RED)
            blue = parse_pattern(args.blue, Color.BLUE)
            result = oracle.exact_ordered_ramsey(red, blue)
            golden = {"red": args.red, "blue": args.blue}
        case "g":
            _require(params, ("n", "s"), "oracle --target g")
            notion = Notion(args.notion)
            result = oracle.exact_g(params["n"], params["s"], notion=notion)
            golden = {"n": params["n"], "s": params["s"], "notion": notion.value}
        case _:
            _require(params, ("n", "s", "t"), "oracle --target f")
            result = oracle.exact_f(params["n"], params["s"], params["t"])
            golden = {"n": params["n"], "s": params["s"], "t": params["t"]}
    return result, golden


def cmd_oracle(args: argparse.Namespace) -> int:
    oracle = Oracle(n_max=args.n_max, jobs=args.jobs, split_depth=args.split_depth).sync
    try:
        result, golden = _query(args, oracle)
    finally:
        oracle.close()
    print("unknown" if result.value is None else result.value)
    if args.golden is not None:
        _golden(args, golden, result)
    return EXIT_OK if result.is_known else EXIT_NOT_FOUND


def cmd_bound(args: argparse.Namespace) -> int:
    print(bound(args.formula, **_collect_params(args)))
    return EXIT_OK


# --- Parser ---


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyordramsey", description="Ordered Ramsey witnesses, certificates and oracles."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate an instance")
    gen.add_argument("kind", choices=["random", "blocked", "extremal"])
    gen.add_argument("--shape", choices=[s.value for s in Shape], default=Shape.PAIRS.value)
    gen.add_argument("--n-vertices", "-N", type=int, default=8)
    gen.add_argument("--n-colors", type=int, default=2)
    gen.add_argument("--p-blue", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--inner", help="ORC2 file with the interval coloring (blocked)")
    gen.add_argument("--output", "-o")
    _add_param_flags(gen)
    gen.set_defaults(handler=cmd_gen)

    extract = commands.add_parser("extract", help="run a constructive extractor")
    extract.add_argument("--theorem", choices=list(THEOREMS), required=True)
    extract.add_argument("--input", "-i", required=True)
    extract.add_argument("--output", "-o")
    extract.add_argument("--seed", type=int, default=0)
    extract.add_argument("--r", type=int, help="block order override (clique_powerpath)")
    extract.add_argument(
        "--mode", choices=[m.value for m in ChainMode], default=ChainMode.MONO.value
    )
    extract.add_argument(
        "--strategy", choices=[s.value for s in Strategy], help="lex_nonincreasing only"
    )
    _add_param_flags(extract)
    extract.set_defaults(handler=cmd_extract)

    verify = commands.add_parser("verify", help="re-check a certificate")
    verify.add_argument("--input", "-i", required=True)
    verify.add_argument("--cert", "-c", required=True)
    verify.set_defaults(handler=cmd_verify)

    oracle = commands.add_parser("oracle", help="exact thresholds by exhaustive search")
    oracle.add_argument("--target", choices=["ramsey", "g", "f"], required=True)
    oracle.add_argument("--red", help="red pattern kind:size[:t]")
    oracle.add_argument("--blue", help="blue pattern kind:size[:t]")
    oracle.add_argument("--notion", choices=[n.value for n in Notion], default=Notion.FULL.value)
    oracle.add_argument("--n-max", type=int, default=8)
    oracle.add_argument("--jobs", type=int, default=1)
    oracle.add_argument("--split-depth", type=int, default=3)
    oracle.add_argument("--golden", metavar="DIR", help="write golden record and witness here")
    _add_param_flags(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    bound_cmd = commands.add_parser("bound", help="evaluate a bound formula")
    bound_cmd.add_argument("--formula", choices=[f.value for f in BoundFormula], required=True)
    _add_param_flags(bound_cmd)
    bound_cmd.set_defaults(handler=cmd_bound)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO)
    try:
        return args.handler(args)
    except ParadoxError as e:
        print(f"ParadoxError: {e}", file=sys.stderr)
        return EXIT_PARADOX
    except (RamseyError, UsageError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
