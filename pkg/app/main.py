import argparse
import sys
from typing import Sequence

from cli.config.cli_config import cli_settings
from cli.enum.exit_code import ExitCode
from cli.routes.matrix_routes import matrix_router
from cli.routes.oscillation_routes import oscillation_router
from cli.routes.pencil_routes import pencil_router
from cli.routes.verify_routes import verify_router
from cli.services.report_service import get_report_service
from common.errors.exceptions import CanonformError
from common.log.logger import logger


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """Flags accepted both before and after the subcommand name."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="machine-readable output",
    )
    parser.add_argument(
        "--no-transform",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="invariants only, no transformation matrices",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=argparse.SUPPRESS if suppress else cli_settings.DEFAULT_SEED,
        help="seed of the randomized self-tests",
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canonform",
        description="Exact Smith, Jordan, Frobenius and Weierstrass canonical forms with certificates",
        parents=[_global_flags(suppress=False)],
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for router in (matrix_router, pencil_router, oscillation_router, verify_router):
        router.include_in(subparsers, parents=[_global_flags(suppress=True)])
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK if e.code in (0, None) else ExitCode.INPUT_ERROR

    try:
        report = args.handler(args)
    except CanonformError as e:
        logger.error(f"{args.command}: {type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return ExitCode(e.exit_code)

    print(get_report_service().render(report, as_json=args.json, with_transforms=not args.no_transform))
    if not report.verified:
        logger.error(f"{args.command}: verification failed")
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
