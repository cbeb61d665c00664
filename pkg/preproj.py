"""Preproj: start modules and initial seeds of Dynkin quivers, cross-checked."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional

from loguru import logger

from checks.base import DEFAULT_SEED
from config_loader import DEFAULT_CONFIG_PATH, ConfigError, load_config
from controllers.sweep_controller import SweepController
from dynkin.diagram import FAMILIES, DynkinType
from dynkin.quiver import Quiver, build_quiver, parse_arrows, pictured_orientation
from errors import CheckFailure, ConsistencyError, ValidationError
from exporters import csv_io, json_io, text
from exporters.dot import graded_dot, seed_dot, window_dot
from loaders.check_loader import load_checks
from numerics.dimensions import dimvec_table
from seed import build_seed
from start.graded import graded_quiver
from start.module import dq_table, rigidity_certificate
from translation.window import auslander_window

LOG_FORMAT = (
    "{time:YYYY-MM-DDTHH:mm:ss} - "
    "{extra[COMPONENT_TYPE]:<10} - "
    "{extra[ENTITY_NAME]:<15} - "
    "{level:<8} - "
    "{message}"
)

FORMATS: Dict[str, tuple] = {
    "window": ("json", "dot", "text"),
    "dims": ("json", "csv", "text"),
    "start": ("json", "dot", "text"),
    "seed": ("json", "dot", "text"),
    "check": ("json", "text"),
    "dq-table": ("json", "csv", "text"),
    "sweep": ("json", "text"),
}
QUIVER_COMMANDS = ("window", "dims", "start", "seed", "check")


@dataclass
class RunConfig:
    command: str
    family: Optional[str] = None
    rank: Optional[int] = None
    arrows: Optional[str] = None
    pictured: bool = False
    output_format: str = "json"
    output: Optional[str] = None
    seed: Optional[int] = None
    max_rank: int = 8
    workers: Optional[int] = None
    config_path: Optional[str] = None
    log_level: Optional[str] = None

    def validate(self) -> None:
        if self.command not in FORMATS:
            raise ValidationError(f"Unknown command {self.command!r}")
        if self.output_format not in FORMATS[self.command]:
            raise ValidationError(
                f"--format {self.output_format} is not supported by {self.command}; "
                f"choose one of {', '.join(FORMATS[self.command])}"
            )
        if self.command in QUIVER_COMMANDS:
            if self.family is None or self.rank is None:
                raise ValidationError(f"{self.command} requires --type and --rank")
            if self.pictured and self.arrows is not None:
                raise ValidationError("--pictured and --arrows are mutually exclusive")
        if self.command == "dq-table" and self.family not in FAMILIES:
            raise ValidationError(f"dq-table requires --family, one of {', '.join(FAMILIES)}")
        if not 1 <= self.max_rank <= 8:
            raise ValidationError(f"--max-rank must lie in [1, 8], got {self.max_rank}")
        if self.workers is not None and self.workers < 1:
            raise ValidationError(f"--workers must be positive, got {self.workers}")

    def quiver(self) -> Quiver:
        dynkin = DynkinType(self.family, self.rank)
        if self.pictured:
            return pictured_orientation(dynkin)
        return build_quiver(dynkin, parse_arrows(self.arrows or ""))


class Preproj:
    def __init__(self, config: RunConfig):
        self.config = config
        self.suite: Dict[str, Any] = {}
        self.failure: Optional[ConsistencyError] = None
        self.setup_logging(config.log_level or "INFO")

    def setup_logging(self, level: str, log_file: Optional[str] = None) -> None:
        """Configure Loguru logger based on documented log format."""
        colorize = "NO_COLOR" not in os.environ and sys.stderr.isatty()
        handlers: List[Dict[str, Any]] = [
            {
                "sink": sys.stderr,
                "format": LOG_FORMAT,
                "level": level.upper(),
                "colorize": colorize,
            }
        ]
        if log_file:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            handlers.append(
                {
                    "sink": log_file,
                    "format": LOG_FORMAT,
                    "rotation": "10 MB",
                    "retention": "7 days",
                    "compression": "zip",
                    "serialize": False,
                    "level": level.upper(),
                }
            )
        logger.configure(
            handlers=handlers,
            extra={"COMPONENT_TYPE": "system", "ENTITY_NAME": "global"},
        )

    def log(self, message, level="INFO", component_type="system", entity_name="global"):
        """Centralized logging function with documented fields."""
        if not isinstance(entity_name, str):
            entity_name = str(entity_name)
        logger.bind(COMPONENT_TYPE=component_type, ENTITY_NAME=entity_name).log(level.upper(), message)

    def initialize_config(self) -> None:
        """Load the check suite and apply its runtime section."""
        path = self.config.config_path or DEFAULT_CONFIG_PATH
        try:
            self.suite = load_config(path)
        except ConfigError as e:
            self.log(f"Failed to load configuration: {e}", level="ERROR")
            raise

        runtime = self.suite.get("runtime", {})
        if self.config.log_level is None and (runtime.get("log_level") or runtime.get("log_file")):
            self.setup_logging(runtime.get("log_level", "INFO"), runtime.get("log_file"))
        self.log(f"Configuration loaded from {path}", level="DEBUG")

    @property
    def seed(self) -> int:
        if self.config.seed is not None:
            return self.config.seed
        return int(self.suite.get("runtime", {}).get("seed", DEFAULT_SEED))

    @property
    def workers(self) -> int:
        if self.config.workers is not None:
            return self.config.workers
        return int(self.suite.get("runtime", {}).get("workers", 1))

    def check_defaults(self) -> Dict[str, Any]:
        defaults = dict(self.suite["checks"].get("defaults", {}))
        defaults["seed"] = self.seed
        return defaults

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------
    def execute(self) -> str:
        handler: Callable[[], str] = {
            "window": self._window,
            "dims": self._dims,
            "start": self._start,
            "seed": self._seed,
            "check": self._check,
            "dq-table": self._dq_table,
            "sweep": self._sweep,
        }[self.config.command]
        return handler()

    def _render(self, payload: Mapping[str, Any], render_text: Callable[[Mapping[str, Any]], str]) -> str:
        if self.config.output_format == "text":
            return render_text(payload)
        return json_io.dumps(payload)

    def _window(self) -> str:
        window = auslander_window(self.config.quiver())
        if self.config.output_format == "dot":
            return window_dot(window)
        return self._render(json_io.window_payload(window), text.window_text)

    def _dims(self) -> str:
        quiver = self.config.quiver()
        if self.config.output_format == "csv":
            return csv_io.dims_csv(dimvec_table(quiver), quiver.rank)
        return self._render(json_io.dims_payload(quiver), text.dims_text)

    def _start(self) -> str:
        quiver = self.config.quiver()
        if self.config.output_format == "dot":
            return graded_dot(graded_quiver(quiver))
        payload = json_io.start_payload(quiver)
        if not payload["rigid"]:
            self.log(f"Not rigid: <d,d>={payload['euler']} dim End={payload['dimEnd']}", level="ERROR",
                     component_type="start", entity_name=quiver.label)
        return self._render(payload, text.start_text)

    def _seed(self) -> str:
        quiver = self.config.quiver()
        if self.config.output_format == "dot":
            return seed_dot(build_seed(quiver))
        return self._render(json_io.seed_payload(quiver), text.seed_text)

    def _check(self) -> str:
        quiver = self.config.quiver()
        self.initialize_config()
        checks = load_checks(self.suite["checks"]["definitions"], self.check_defaults())
        outcomes = []
        for check in checks:
            if not check.applies_to(quiver):
                self.log(f"Skipping {check.id}: rank above {check.max_rank}", level="DEBUG",
                         component_type="check", entity_name=quiver.label)
                continue
            outcomes.append(check.evaluate(quiver))

        seed = build_seed(quiver)
        window = auslander_window(quiver)
        payload = {
            "quiver": quiver.to_dict(),
            "label": quiver.label,
            "r": window.size,
            "N": window.to_dict()["N"],
            "e": list(seed.exchangeable),
            "rigid": rigidity_certificate(quiver).rigid,
            "checks": [outcome.to_dict() for outcome in outcomes],
            "passed": all(outcome.passed for outcome in outcomes),
        }
        failing = [outcome for outcome in outcomes if not outcome.passed]
        if failing:
            self.failure = failing[0].as_error()
        return self._render(payload, text.check_text)

    def _dq_table(self) -> str:
        table = dq_table(self.config.family, self.config.max_rank)
        mismatched = {rank: entry for rank, entry in table.items() if entry["closed_form"] != entry["dim_end"]}
        if mismatched:
            self.failure = CheckFailure(
                "closed form of dim End matches the computed value",
                {"family": self.config.family, "ranks": sorted(mismatched)},
            )
        if self.config.output_format == "csv":
            return csv_io.dq_table_csv(table)
        if self.config.output_format == "text":
            return text.dq_table_text(table)
        return json_io.dumps({str(rank): entry for rank, entry in table.items()})

    def _sweep(self) -> str:
        self.initialize_config()
        controller = SweepController(
            definitions=self.suite["checks"]["definitions"],
            defaults=self.check_defaults(),
            workers=self.workers,
            log_callback=self.log,
        )
        summary = controller.run(controller.quivers(self.config.max_rank))
        if not summary.passed:
            self.failure = CheckFailure(
                "every quiver passes the check suite",
                {"failures": list(summary.failures)},
            )
        return self._render(summary.to_dict(), text.sweep_text)

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------
    def emit(self, artifact: str) -> None:
        if self.config.output:
            Path(self.config.output).write_text(artifact, encoding="utf-8")
            self.log(f"Wrote {self.config.command} output to {self.config.output}", component_type="io")
        else:
            sys.stdout.write(artifact)
            sys.stdout.flush()

        if self.failure is not None:
            raise self.failure


def _witness_json(exc: ConsistencyError, quiver_label: Optional[str]) -> str:
    witness = dict(exc.witness)
    if quiver_label and "quiver" not in witness:
        witness["quiver"] = quiver_label
    return json.dumps({"identity": exc.identity, "witness": witness}, sort_keys=True, default=str)


def run(config: RunConfig) -> int:
    """Execute one command; the return value is the process exit code."""

    label = None
    try:
        app = Preproj(config)
        config.validate()
        if config.command in QUIVER_COMMANDS:
            label = config.quiver().label
        artifact = app.execute()
        app.emit(artifact)
    except ConsistencyError as exc:
        logger.bind(COMPONENT_TYPE="system", ENTITY_NAME=label or "global").error(f"Consistency failure: {exc}")
        sys.stderr.write(_witness_json(exc, label) + "\n")
        return exc.exit_code
    except ValidationError as exc:
        logger.bind(COMPONENT_TYPE="system", ENTITY_NAME=label or "global").error(str(exc))
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    return 0


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1 and name the offending flag."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", default="json", help="json, dot, csv or text")
    common.add_argument("--output", help="write to PATH instead of stdout")
    common.add_argument("--log-level", dest="log_level", type=str.upper,
                        choices=["TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])

    quiver_options = _ArgumentParser(add_help=False)
    quiver_options.add_argument("--type", dest="family", type=str.upper, choices=FAMILIES, required=True)
    quiver_options.add_argument("--rank", type=int, required=True)
    quiver_options.add_argument("--arrows", help="orientation as t>h pairs, comma separated")
    quiver_options.add_argument("--pictured", action="store_true", help="use the orientation of the dim End table")

    suite_options = _ArgumentParser(add_help=False)
    suite_options.add_argument("--config", dest="config_path", help="check-suite configuration file")
    suite_options.add_argument("--seed", type=int, help="seed for sampled identities")

    parser = _ArgumentParser(prog="preproj.py", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("window", parents=[common, quiver_options], help="the Auslander window of ZQ")
    commands.add_parser("dims", parents=[common, quiver_options], help="dimension vectors of the window objects")
    commands.add_parser("start", parents=[common, quiver_options], help="the start module and its certificate")
    commands.add_parser("seed", parents=[common, quiver_options], help="the initial seed")
    commands.add_parser("check", parents=[common, quiver_options, suite_options], help="run the check suite")

    table = commands.add_parser("dq-table", parents=[common], help="closed forms of dim End")
    table.add_argument("--family", type=str.upper, choices=FAMILIES, required=True)
    table.add_argument("--max-rank", dest="max_rank", type=int, default=8)

    sweep = commands.add_parser("sweep", parents=[common, suite_options], help="check every orientation")
    sweep.add_argument("--max-rank", dest="max_rank", type=int, default=8)
    sweep.add_argument("--workers", type=int)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    fields = RunConfig.__dataclass_fields__
    config = RunConfig(**{key: value for key, value in vars(args).items() if key in fields})
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
