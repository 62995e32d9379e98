"""Command-line front end: ``hilbcat audit|factor|extend|demo-nonfull``.

Exit codes: 0 on success, 1 when a property fails, 2 on usage, configuration
or fixture errors.
"""
import argparse
import logging
import sys
from typing import List, Optional

from .config import RING_NAMES, AuditConfiguration
from .errors import ConfigError, FixtureParseError
from .functors import SHIPPED_MONOIDS
from .laws.report import exit_code, render_text, write_reports
from .laws.runner import run_audit
from .laws.suites import SUITE_NAMES
from .observability import setup_logging
from .paths import LOGS_DIR
from .scalars import SHIPPED_HOMS
from .tools import demo_non_fullness, extend_fixture, factor_fixture, format_result

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbcat", description="Exact pre-Hilbert category models and their property audits")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--structured-logs", action="store_true", help="one JSON object per log line")
    sub = parser.add_subparsers(dest="command", required=True)

    audit = sub.add_parser("audit", help="run property suites and write audit.json / audit.txt")
    audit.add_argument("--ring", default=None, help=f"one of {', '.join(RING_NAMES)} (or qsqrt<d>)")
    audit.add_argument("--suite", action="append", default=None,
                       help=f"suite name or 'all'; repeatable ({', '.join(SUITE_NAMES)})")
    audit.add_argument("--seed", type=int, default=None, help="unsigned 64-bit seed (env HILBCAT_SEED)")
    audit.add_argument("--samples", type=int, default=None)
    audit.add_argument("--oracle-vectors", type=int, default=None,
                       help="vectors sampled per morphism when cross-checking a bound (default 1000)")
    audit.add_argument("--max-dim", type=int, default=None)
    audit.add_argument("--entry-height", type=int, default=None)
    audit.add_argument("--out", default=None, help="report directory (default output/reports)")
    audit.add_argument("--jobs", type=int, default=None, help="suites run concurrently")
    audit.add_argument("--input", default=None, help="fixture to audit alongside the generated instances")

    fact = sub.add_parser("factor", help="factor every morphism of a fixture")
    fact.add_argument("input", help="fixture file")
    fact.add_argument("--out", default=None)

    ext = sub.add_parser("extend", help="extend a fixture along a ring monomorphism")
    ext.add_argument("hom", choices=sorted(SHIPPED_HOMS))
    ext.add_argument("input", help="fixture file")
    ext.add_argument("--out", default=None)
    ext.add_argument("--field-only", action="store_true", help="refuse extensions into non-fields")

    demo = sub.add_parser("demo-nonfull", help="search for a preimage of the summand swap")
    demo.add_argument("--monoid", default="bool", choices=sorted(SHIPPED_MONOIDS))
    return parser


def _settings(args: argparse.Namespace) -> AuditConfiguration:
    return AuditConfiguration.from_env(
        ring=args.ring,
        seed=args.seed,
        samples=args.samples,
        oracle_vectors=args.oracle_vectors,
        max_dim=args.max_dim,
        entry_height=args.entry_height,
        suites=tuple(args.suite) if args.suite else None,
        input_path=args.input,
        out_path=args.out,
        jobs=args.jobs,
        log_level=args.log_level,
        structured_logs=args.structured_logs or None,
    ).validate()


def cmd_audit(args: argparse.Namespace) -> int:
    try:
        settings = _settings(args)
    except ConfigError as e:
        print(f"hilbcat: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        reports = run_audit(settings)
    except FixtureParseError as e:
        print(f"hilbcat: {e}", file=sys.stderr)
        return EXIT_USAGE
    settings_dict = {
        "ring": settings.ring,
        "seed": settings.seed,
        "samples": settings.samples,
        "oracle_vectors": settings.oracle_vectors,
        "max_dim": settings.max_dim,
        "entry_height": settings.entry_height,
        "suites": list(settings.selected_suites()),
    }
    paths = write_reports(reports, settings.out_path, settings_dict)
    print(render_text(reports), end="")
    for path in paths:
        print(f"wrote {path}")
    return exit_code(reports)


def _emit(result: dict, failure_key: Optional[str] = None) -> int:
    if "error" in result:
        print(f"hilbcat: {result['error']}", file=sys.stderr)
        return EXIT_USAGE
    print(format_result(result))
    if failure_key is not None and not result.get(failure_key, True):
        return EXIT_FAILURE
    return EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    return _emit(factor_fixture(args.input, args.out), failure_key="valid")


def cmd_extend(args: argparse.Namespace) -> int:
    result = extend_fixture(args.hom, args.input, args.out, field_only=args.field_only)
    if "error" not in result and any("FAILED" in line for line in result["transcript"]):
        print(format_result(result))
        return EXIT_FAILURE
    return _emit(result)


def cmd_demo_nonfull(args: argparse.Namespace) -> int:
    return _emit(demo_non_fullness(args.monoid), failure_key="witness_found")


COMMANDS = {
    "audit": cmd_audit,
    "factor": cmd_factor,
    "extend": cmd_extend,
    "demo-nonfull": cmd_demo_nonfull,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        level = args.log_level or AuditConfiguration.from_env().log_level
    except ConfigError as e:
        print(f"hilbcat: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(level=level, structured=args.structured_logs)
    logger.debug("command %s, logs under %s", args.command, LOGS_DIR)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
