# ABOUTME: graph-entropy entry point: argparse subcommands, validation, CSV/SVG output, exit codes.
# ABOUTME: Exit 2 for invalid flags, 1 for numeric failures, 0 on success.

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from autobots_devtools_shared_lib.common.observability import get_logger
from dotenv import load_dotenv
from pydantic import ValidationError

from autobots_graph_entropy.cli.commands import Table, run_command
from autobots_graph_entropy.cli.config import Command, OutputFormat, RunConfig
from autobots_graph_entropy.cli.settings import CliSettings, init_cli_settings, load_presets
from autobots_graph_entropy.common.errors import DomainError, GraphEntropyError
from autobots_graph_entropy.common.utils.formatting import write_csv
from autobots_graph_entropy.configs.constants import APP_NAME
from autobots_graph_entropy.domains.entropy import Convention

logger = get_logger(__name__)


def _float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from exc


def _complex_list(text: str) -> list[complex]:
    try:
        return [complex(item.replace(" ", "")) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated numbers such as 1.5 or 0.5+2j, got {text!r}"
        ) from exc


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", type=Path, help="Write to this file instead of stdout")
    parser.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None
    )


def _add_range_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--l-min", type=int, help="Smallest decimation factor")
    parser.add_argument("--l-max", type=int, help="Largest decimation factor")
    parser.add_argument("--log-steps", type=int, help="Log-spaced integer steps (default: all)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Spectral zeta, heat trace and entanglement entropy of diamond graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    zeta = sub.add_parser("zeta", help="Closed-form spectral zeta function")
    zeta.add_argument("--l", type=int, dest="decimation", help="Decimation factor (>= 3)")
    zeta.add_argument("--s", type=_complex_list, dest="s_values", help="Comma-separated s values")

    poles = sub.add_parser("poles", help="Pole tower and residue coefficients")
    poles.add_argument("--l", type=int, dest="decimation")
    poles.add_argument("--n-max", type=int)

    heat = sub.add_parser("heat", help="Heat-kernel trace, direct and asymptotic")
    heat.add_argument("--l", type=int, dest="decimation")
    heat.add_argument("--t-min", type=float)
    heat.add_argument("--t-max", type=float)
    heat.add_argument("--points", type=int)
    heat.add_argument("--n-max", type=int)
    heat.add_argument("--check-decimation", action="store_true")

    entropy = sub.add_parser("entropy", help="Entanglement entropy with log-periodic corrections")
    entropy.add_argument("--l", type=int, dest="decimation")
    entropy.add_argument("--epsilon", type=_float_list, dest="epsilons", help="UV cutoffs")
    entropy.add_argument("--n-max", type=int)
    entropy.add_argument("--convention", choices=[c.value for c in Convention])

    scan = sub.add_parser("scan", help="Dimensionless entropy versus decimation factor")
    _add_range_flags(scan)

    corrections = sub.add_parser("corrections", help="Correction prefactors versus l")
    _add_range_flags(corrections)
    corrections.add_argument("--n", type=_int_list, dest="orders", help="Comma-separated orders")
    corrections.add_argument(
        "--verify", action="store_true", help="Add quadrature columns for comparison"
    )
    corrections.add_argument(
        "--epsilon", type=_float_list, dest="epsilons", help="Cutoff used by --verify"
    )

    for command_parser in (zeta, poles, heat, entropy, scan, corrections):
        _add_output_flags(command_parser)
    return parser


def build_run_config(
    args: argparse.Namespace, presets: dict[str, Any], settings: CliSettings
) -> RunConfig:
    """Merge parsed flags over the command's presets and validate."""
    values = {key: value for key, value in vars(args).items() if value is not None}
    command = Command(values["command"])
    defaults = dict(presets.get(str(command), {}) or {})
    defaults.pop("inset", None)
    if "orders" not in values and "orders" in defaults:
        values["orders"] = defaults["orders"]
    if "epsilons" not in values and "epsilon" in defaults:
        values["epsilons"] = defaults["epsilon"]
    for key in ("l_min", "l_max", "log_steps", "t_min", "t_max", "points", "convention"):
        if key not in values and defaults.get(key) is not None:
            values[key] = defaults[key]
    if command is Command.CORRECTIONS and "epsilons" not in values:
        values["epsilons"] = presets.get("entropy", {}).get("epsilon", [])
    values.setdefault("output_format", settings.default_format)
    return RunConfig.model_validate(values)


def _emit(table: Table, config: RunConfig) -> None:
    if config.output_format is OutputFormat.SVG and config.output is not None:
        from autobots_graph_entropy.cli.plotting import write_svg

        write_svg(table, config.output)
        return
    if config.output is None:
        write_csv(sys.stdout, table.header, table.rows, table.footer)
        return
    with config.output.open("w", encoding="utf-8", newline="") as handle:
        write_csv(handle, table.header, table.rows, table.footer)


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    settings = init_cli_settings()
    if settings.debug:
        logging.getLogger("autobots_graph_entropy").setLevel(logging.DEBUG)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        config = build_run_config(args, load_presets(settings.presets_path), settings)
    except (ValidationError, DomainError) as exc:
        print(f"{APP_NAME}: invalid arguments: {exc}", file=sys.stderr)
        return 2

    logger.info(f"{config.command} started")
    try:
        table = run_command(config)
        _emit(table, config)
    except GraphEntropyError as exc:
        logger.error(f"{config.command} failed: {exc}")
        print(f"{APP_NAME}: {config.command} failed: {exc}", file=sys.stderr)
        return 1
    logger.info(f"{config.command} finished: {len(table.rows)} rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())
