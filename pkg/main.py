import argparse
import importlib
import inspect
import logging
import os
import pkgutil
import sys

from errors import (
    COMPUTATION_ERRORS,
    EXIT_COMPUTATION,
    EXIT_OK,
    EXIT_USAGE,
    USAGE_ERRORS,
    FormSourceError,
)
from settings import get_settings

logger = logging.getLogger("trigforms")

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(BASE_DIR, "data")


# -----------------------------
# SAFE REGISTER CALLER
# -----------------------------
def safe_register(func, subparsers, data_dir):
    if not func:
        return
    params = inspect.signature(func).parameters
    if len(params) == 2:
        func(subparsers, data_dir)
    elif len(params) == 1:
        func(subparsers)
    else:
        func()


# -----------------------------
# AUTO-LOADER
# -----------------------------
def auto_load_command_modules(subparsers, data_dir):
    import commands

    for _, module_name, _ in pkgutil.iter_modules(commands.__path__):
        module = importlib.import_module(f"commands.{module_name}")
        if hasattr(module, "register"):
            safe_register(getattr(module, "register"), subparsers, data_dir)
            logger.debug("Auto-loaded module: commands.%s", module_name)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigforms",
        description="Binary forms from 2cos(2pi/n), 2sin(2pi/n) and Chebyshev polynomials: "
        "automorphism groups, invariants and sweeps.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.add_argument("--precision", type=int, default=None, help="working precision in bits")
    parser.add_argument("--denom-bound", type=int, default=None, help="largest denominator in rational reconstruction")
    parser.add_argument("--tol", type=float, default=None, help="relative tolerance for the area quadrature")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes for sweeps")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    auto_load_command_modules(subparsers, DATA_DIR)
    return parser


def configure_logging(level: str, verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_settings().with_overrides(
            precision=args.precision,
            denom_bound=args.denom_bound,
            tol=args.tol,
            jobs=args.jobs,
        )
    except ValueError as e:
        parser.error(str(e))
    configure_logging(settings.log_level, args.verbose)

    try:
        return args.func(args, settings) or EXIT_OK
    except FormSourceError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE
    except COMPUTATION_ERRORS as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
