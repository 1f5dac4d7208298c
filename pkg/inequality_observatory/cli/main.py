"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..catalog import Point, Verdict, classify, complementary, list_catalog, lookup
from ..checker import SuiteConfig, run_suite
from ..errors import InvalidTuple, ObservatoryError
from ..means import SignedTuple, WeightedTuple
from ..numerics import PrecisionContext
from ..transforms import get_witness, list_witnesses, verify_witness
from ..utils.serialization import short_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_INTEGER = re.compile(r"^[+-]?\d+$")
_WEIGHTS_PREFIX = "w="

Row = Tuple[List[str], Optional[List[str]]]


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Attach one stderr handler to the package logger."""
    root = logging.getLogger("inequality_observatory")
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    root.setLevel(level)
    if not any(getattr(h, "_observatory_cli", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
        handler._observatory_cli = True  # type: ignore[attr-defined]
        root.addHandler(handler)
    for handler in root.handlers:
        handler.setLevel(level)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inequality-observatory",
        description="Classify points against a catalog of classical inequalities and check equivalence witnesses.",
    )
    parser.add_argument("--json", action="store_true", help="Emit JSON on stdout")
    parser.add_argument("--seed", type=int, default=None, help="Master seed (default 42)")
    parser.add_argument("--samples", type=int, default=None, help="Samples per entry or per witness direction")
    parser.add_argument("--precision", type=int, default=None, help="Working precision in bits (default 128)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("list", help="List catalog entries")

    check = commands.add_parser("check", help="Classify one point")
    check.add_argument("name")
    check.add_argument("--param", action="append", default=[], metavar="K=V")
    check.add_argument("--point", action="append", default=[], metavar="CSV", help="Scalar variables (first tuple for tuple-only entries)")
    check.add_argument("--tuple", action="append", default=[], metavar="CSV", help="Tuple values; a 'w=' prefix gives the weights of the previous tuple")
    check.add_argument("--weights", action="append", default=[], metavar="CSV", help="Weights of the tuples, in order")
    check.add_argument("--complement", action="store_true", help="Use the complementary inequality")

    witness = commands.add_parser("witness", help="Verify one equivalence witness by sampling")
    witness.add_argument("name")
    witness.add_argument("--param", action="append", default=[], metavar="K=V")

    commands.add_parser("witnesses", help="List registered witnesses")

    suite = commands.add_parser("suite", help="Run the full suite")
    suite.add_argument("--config", default=None, help="JSON file mirroring SuiteConfig")
    suite.add_argument("--workers", type=int, default=None)

    explain = commands.add_parser("explain", help="Describe one catalog entry")
    explain.add_argument("name")
    return parser


def parse_value(text: str, ctx: PrecisionContext) -> Any:
    """Integers stay int, other numerals become scalars, anything else is passed through as text."""
    text = text.strip()
    if _INTEGER.match(text):
        return int(text)
    try:
        return ctx.scalar(text)
    except ObservatoryError:
        return text


def parse_params(items: Sequence[str], ctx: PrecisionContext) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"Parameter '{item}' must look like key=value.")
        params[key.strip()] = parse_value(value, ctx)
    return params


def _csv(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _rows(args: argparse.Namespace, has_scalars: bool) -> Tuple[List[str], List[Row]]:
    """Split --point/--tuple/--weights into scalar text and (values, weights) rows."""
    scalars: List[str] = []
    raw: List[str] = []
    for item in args.point:
        if has_scalars and not item.startswith(_WEIGHTS_PREFIX):
            scalars.extend(_csv(item))
        else:
            raw.append(item)
    raw.extend(args.tuple)
    rows: List[Row] = []
    for item in raw:
        if item.startswith(_WEIGHTS_PREFIX):
            if not rows:
                raise ValueError("Weights given before any tuple.")
            rows[-1] = (rows[-1][0], _csv(item[len(_WEIGHTS_PREFIX):]))
        else:
            rows.append((_csv(item), None))
    for index, item in enumerate(args.weights):
        if index >= len(rows):
            raise ValueError("More --weights than tuples.")
        rows[index] = (rows[index][0], _csv(item))
    return scalars, rows


def build_point(args: argparse.Namespace, signed: bool, has_scalars: bool, ctx: PrecisionContext) -> Point:
    scalars, rows = _rows(args, has_scalars)
    kind = SignedTuple if signed else WeightedTuple
    tuples = [kind.of(values, weights, ctx=ctx) for values, weights in rows]
    return Point.of(scalars, tuples, ctx=ctx)


def _emit(payload: Any, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_list(args: argparse.Namespace, ctx: PrecisionContext) -> int:
    listings = list_catalog()
    lines = []
    for item in listings:
        arity = ", ".join(item.scalar_names + tuple(f"{t}[n]" for t in item.tuple_names))
        extra = f"  [{item.constraints}]" if item.constraints else ""
        lines.append(f"{item.name:<22} {item.paper_ref:<16} ({arity}){extra}")
    _emit([item.to_dict() for item in listings], args.json, "\n".join(lines))
    return EXIT_OK


def cmd_check(args: argparse.Namespace, ctx: PrecisionContext) -> int:
    d = lookup(args.name, parse_params(args.param, ctx), ctx)
    if args.complement:
        d = complementary(d)
    try:
        pt = build_point(args, d.entry.signed_tuples, bool(d.scalar_names), ctx)
    except InvalidTuple as exc:
        logger.info("tuple rejected: %s", exc)
        _emit({"entry": d.to_dict(), "classification": {"verdict": Verdict.OUTSIDE.value}}, args.json, Verdict.OUTSIDE.value)
        return EXIT_OK
    result = classify(d, pt, ctx)
    text = result.verdict.value
    if result.margin is not None:
        text = f"{text} margin={short_text(result.margin)}"
    _emit({"entry": d.to_dict(), "point": pt.to_dict(), "classification": result.to_dict()}, args.json, text)
    return EXIT_FAILURE if result.verdict is Verdict.VIOLATED else EXIT_OK


def cmd_witness(args: argparse.Namespace, ctx: PrecisionContext) -> int:
    w = get_witness(args.name)
    samples = args.samples if args.samples is not None else SuiteConfig().witness_samples
    seed = args.seed if args.seed is not None else SuiteConfig().seed
    report = verify_witness(w, samples, seed, ctx, params=parse_params(args.param, ctx))
    lines = [
        f"{w.name}: {w.source} -> {w.target} ({w.reference})",
        f"directions={','.join(d.value for d in report.directions)} samples={samples} seed={seed}",
        f"failures={len(report.failures)} equality_hits={report.equality_hits} skipped={report.skipped}",
    ]
    lines.extend(f"  {f.direction.value} #{f.index}: {f.reason}" for f in report.failures[:10])
    _emit(report.to_dict(), args.json, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_witnesses(args: argparse.Namespace, ctx: PrecisionContext) -> int:
    witnesses = list_witnesses()
    lines = [
        f"{w.name:<22} {w.kind.value:<13} {w.source} -> {w.target}  {w.reference}  [{'/'.join(d.value for d in w.directions)}]"
        for w in witnesses
    ]
    _emit([w.to_dict() for w in witnesses], args.json, "\n".join(lines))
    return EXIT_OK


def cmd_suite(args: argparse.Namespace, ctx: PrecisionContext) -> int:
    config = SuiteConfig.from_json(args.config) if args.config else SuiteConfig.from_env()
    config = config.with_overrides(
        seed=args.seed,
        samples=args.samples,
        precision_bits=args.precision,
        workers=args.workers,
    )
    report = run_suite(config)
    lines = [
        f"seed={report.seed} precision={report.precision_bits} wall_time={report.wall_time:.1f}s",
        f"entries={len(report.entries)} violations={report.violations}",
        f"witnesses={len(report.witnesses)} failures={report.witness_failures}",
    ]
    failed = [e.key for e in report.entries if not e.passed] + [w.witness for w in report.witnesses if not w.passed]
    for group in ("limits", "monotonicity", "chains", "consistency"):
        broken = sum(not item.passed for item in getattr(report, group))
        lines.append(f"{group}: {len(getattr(report, group)) - broken}/{len(getattr(report, group))} passed")
    lines.extend(f"  FAILED {name}" for name in failed)
    lines.append("PASSED" if report.passed else "FAILED")
    _emit(report.to_dict(), args.json, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_explain(args: argparse.Namespace, ctx: PrecisionContext) -> int:
    d = lookup(args.name, None, ctx)
    entry = d.entry
    payload: Dict[str, Any] = {
        **entry.listing().to_dict(),
        "statement": entry.statement,
        "direction": d.direction.value,
        "validity": entry.validity_text,
        "equality": entry.equality_text,
    }
    lines = [
        f"{entry.name} ({entry.reference})",
        f"  {entry.statement}",
        f"  direction: {d.direction.symbol} ({d.direction.value})",
        f"  valid on:  {entry.validity_text}",
        f"  equality:  {entry.equality_text}",
    ]
    for spec in entry.params:
        lines.append(f"  param {spec.name}: {spec.constraint or spec.kind.value} (default {spec.default})")
    if entry.has_complement:
        payload["complement"] = {"validity": entry.complement_validity_text, "equality": entry.complement_equality_text}
        lines.append(f"  complement ({d.direction.reversed().symbol}) on: {entry.complement_validity_text}")
        lines.append(f"  complement equality: {entry.complement_equality_text}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "list": cmd_list,
    "check": cmd_check,
    "witness": cmd_witness,
    "witnesses": cmd_witnesses,
    "suite": cmd_suite,
    "explain": cmd_explain,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.verbose, args.quiet)
    try:
        ctx = PrecisionContext(precision_bits=args.precision) if args.precision else PrecisionContext()
        return COMMANDS[args.command](args, ctx)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
