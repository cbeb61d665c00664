"""Run the property checks over every orientation of every type up to a rank."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from dynkin.diagram import all_types
from dynkin.quiver import Quiver, orientations, quiver_from_dict
from loaders.check_loader import load_checks


@dataclass(frozen=True)
class QuiverReport:
    label: str
    outcomes: Tuple[Mapping[str, Any], ...]

    @property
    def passed(self) -> bool:
        return all(outcome["passed"] for outcome in self.outcomes)


@dataclass(frozen=True)
class SweepSummary:
    reports: Tuple[QuiverReport, ...]
    check_ids: Tuple[str, ...] = field(default=())

    @property
    def failures(self) -> Tuple[str, ...]:
        return tuple(report.label for report in self.reports if not report.passed)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        tally: Dict[str, Dict[str, int]] = {
            check_id: {"passed": 0, "failed": 0, "skipped": 0} for check_id in self.check_ids
        }
        for report in self.reports:
            seen = set()
            for outcome in report.outcomes:
                seen.add(outcome["id"])
                tally[outcome["id"]]["passed" if outcome["passed"] else "failed"] += 1
            for check_id in set(self.check_ids) - seen:
                tally[check_id]["skipped"] += 1
        return {
            "quivers": len(self.reports),
            "failed": len(self.failures),
            "failures": list(self.failures),
            "checks": tally,
            "passed": self.passed,
        }


_SUITES: Dict[str, list] = {}


def _suite(key: str) -> list:
    """Checks are loaded once per process for each distinct configuration."""

    if key not in _SUITES:
        definitions, defaults = json.loads(key)
        _SUITES[key] = load_checks(definitions, defaults)
    return _SUITES[key]


def evaluate_quiver(
    payload: Mapping[str, Any],
    definitions: Sequence[Mapping[str, Any]],
    defaults: Mapping[str, Any],
) -> QuiverReport:
    """Worker entry point; arguments and result cross the process boundary."""

    quiver = quiver_from_dict(payload)
    outcomes = []
    for check in _suite(json.dumps([definitions, defaults], sort_keys=True)):
        if check.applies_to(quiver):
            outcomes.append(check.evaluate(quiver).to_dict())
    return QuiverReport(quiver.label, tuple(outcomes))


class SweepController:
    """Fan out the check suite over quivers on a bounded process pool."""

    def __init__(
        self,
        *,
        definitions: Sequence[Mapping[str, Any]],
        defaults: Optional[Mapping[str, Any]] = None,
        workers: int = 1,
        log_callback=None,
    ) -> None:
        self.definitions = [dict(definition) for definition in definitions]
        self.defaults = dict(defaults or {})
        self.workers = max(1, int(workers))
        self._log_callback = log_callback

    @staticmethod
    def quivers(max_rank: int) -> List[Quiver]:
        return [quiver for dynkin in all_types(max_rank) for quiver in orientations(dynkin)]

    def run(self, quivers: Iterable[Quiver]) -> SweepSummary:
        # Raises ConfigError here rather than inside a worker.
        _suite(json.dumps([self.definitions, self.defaults], sort_keys=True))
        payloads = [quiver.to_dict() for quiver in quivers]
        self._log(f"Sweeping {len(payloads)} quivers with {self.workers} worker(s)")

        if self.workers == 1:
            reports = [evaluate_quiver(payload, self.definitions, self.defaults) for payload in payloads]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                futures = [
                    pool.submit(evaluate_quiver, payload, self.definitions, self.defaults) for payload in payloads
                ]
                reports = [future.result() for future in futures]

        reports.sort(key=lambda report: report.label)
        for report in reports:
            if not report.passed:
                failing = [outcome["id"] for outcome in report.outcomes if not outcome["passed"]]
                self._log(f"Failing checks: {', '.join(failing)}", level="ERROR", entity=report.label)

        summary = SweepSummary(tuple(reports), tuple(d.get("id", d["how"]) for d in self.definitions))
        self._log(f"Sweep finished: {len(reports)} quivers, {len(summary.failures)} failing")
        return summary

    def _log(self, message: str, *, level: str = "INFO", entity: str = "global") -> None:
        if self._log_callback:
            self._log_callback(
                message,
                level=level,
                component_type="sweep",
                entity_name=entity,
            )
            return

        logger.bind(COMPONENT_TYPE="sweep", ENTITY_NAME=entity).log(level.upper(), message)
