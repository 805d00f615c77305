"""Kommandozeile für die Orbit-Sensing-Experimente.

Beispiele::

    python orbit_cli.py verify --config configs/zyklisch_regulaer.toml
    python orbit_cli.py counterexample --n 8 --s 2
    python orbit_cli.py phase-transition --config configs/phasenuebergang.toml --out ergebnis.csv --no-timestamp

Exit-Codes: 0 Erfolg, 1 verletzte Invariante, 2 Konfigurationsfehler,
3 Aufzählungsbudget überschritten.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from experimentmodul import (
    COMMANDS,
    CounterexampleReport,
    VerifyReport,
    cmd_counterexample,
)
from module.ergebnis_export import render_csv, write_csv
from module.experiment_config import ExperimentConfig, load_config, with_overrides
from module.fehler import (
    BudgetExceededError,
    ConfigurationError,
    InvariantViolation,
    OrbitSensingError,
)
from module.protokoll import configure_logging

__all__ = ["EXIT_OK", "EXIT_INVARIANT", "EXIT_CONFIG", "EXIT_BUDGET", "build_parser", "main"]

logger = logging.getLogger("experimentmodul.cli")

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3


def _add_common(parser: argparse.ArgumentParser, *, needs_config: bool) -> None:
    parser.add_argument("--config", type=Path, required=needs_config, help="TOML-Konfiguration")
    parser.add_argument("--seed", type=int, default=None, help="Master-Seed (überschreibt die Konfiguration)")
    parser.add_argument("--out", type=Path, default=None, help="Ziel-CSV")
    parser.add_argument(
        "--no-timestamp",
        action="store_true",
        help="keine Zeitstempelzeile in der CSV (byte-identische Ausgaben)",
    )
    parser.add_argument("--threads", type=int, default=None, help="parallele Versuche")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, …")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbit_cli",
        description="Compressed Sensing mit Gruppenorbit-Messungen",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("verify", "Invarianten von Gruppe, Darstellung und Fourier-Analyse prüfen"),
        ("constant", "Orbit-Spaltenkonstante über eine Ω-Familie tabellieren"),
        ("rip", "Restricted-Isometry-Konstante gezogener Messmatrizen"),
        ("phase-transition", "Erfolgsquote über ein (s, m)-Raster"),
        ("bound", "Messschranken neben n auswerten"),
    ):
        _add_common(sub.add_parser(name, help=help_text), needs_config=True)

    counter = sub.add_parser("counterexample", help="fester Ω ohne s-dünne Rekonstruktion")
    _add_common(counter, needs_config=False)
    counter.add_argument("--n", type=int, default=None, help="Gruppenordnung n")
    counter.add_argument("--s", type=int, default=None, help="Sparsity s (teilt n)")
    return parser


def _config(args: argparse.Namespace) -> ExperimentConfig:
    config = load_config(args.config) if args.config is not None else ExperimentConfig()
    return with_overrides(
        config,
        seed=args.seed,
        output=args.out,
        threads=args.threads,
        timestamp=False if args.no_timestamp else None,
    )


def _emit(frame: pd.DataFrame, config: ExperimentConfig) -> None:
    if config.output is not None:
        write_csv(frame, config.output, timestamp=config.timestamp)
    else:
        sys.stdout.write(render_csv(frame, timestamp=config.timestamp))


def _run(args: argparse.Namespace) -> int:
    config = _config(args)
    logger.info("Befehl %s, Master-Seed %d", args.command, config.master_seed)
    if args.command == "counterexample":
        n = args.n if args.n is not None else config.counterexample.n
        s = args.s if args.s is not None else config.counterexample.s
        report: CounterexampleReport = cmd_counterexample(n, s, seed=config.master_seed)
        print(report.render())
        if config.output is not None:
            write_csv(report.to_frame(), config.output, timestamp=config.timestamp)
        return EXIT_OK

    result = COMMANDS[args.command](config)
    if isinstance(result, VerifyReport):
        print(result.render())
        if config.output is not None:
            write_csv(result.to_frame(), config.output, timestamp=config.timestamp)
        if not result.passed:
            names = ", ".join(c.name for c in result.failed)
            print(f"Invariante verletzt: {names}", file=sys.stderr)
            return EXIT_INVARIANT
        return EXIT_OK

    _emit(result, config)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    configure_logging(args.log_level)
    try:
        return _run(args)
    except InvariantViolation as exc:
        print(f"Invariante verletzt: {exc.check}: {exc.detail}", file=sys.stderr)
        return EXIT_INVARIANT
    except BudgetExceededError as exc:
        print(f"Budget überschritten: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConfigurationError, OrbitSensingError, ValueError) as exc:
        print(f"Konfigurationsfehler: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
