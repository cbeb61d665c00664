"""Shared machinery for property checks run by ``check`` and ``sweep``."""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Mapping, Tuple

from loguru import logger

from dynkin.quiver import Quiver
from errors import CheckFailure, ConsistencyError

DEFAULT_MAX_RANK = 8
DEFAULT_SEED = 20240

Identity = Tuple[str, bool, Mapping[str, Any]]


@dataclass(frozen=True)
class Failure:
    identity: str
    witness: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"identity": self.identity, "witness": dict(self.witness)}


@dataclass(frozen=True)
class CheckOutcome:
    check_id: str
    quiver: str
    identities: int
    failures: Tuple[Failure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_error(self) -> CheckFailure:
        """The first failure as an exception carrying its witness."""

        first = self.failures[0]
        return CheckFailure(first.identity, {"quiver": self.quiver, "check": self.check_id, **first.witness})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.check_id,
            "quiver": self.quiver,
            "identities": self.identities,
            "failures": [failure.identity for failure in self.failures],
            "witnesses": [failure.to_dict() for failure in self.failures],
            "passed": self.passed,
        }


class PropertyCheck(ABC):
    """A group of identities evaluated on one quiver.

    Subclasses implement ``_identities()`` yielding ``(identity, holds, witness)``
    triples. A :class:`ConsistencyError` raised while computing counts as a
    failure of the identity it names.
    """

    DEFAULT_MAX_RANK = DEFAULT_MAX_RANK

    def __init__(self, config: Mapping[str, Any]):
        self.config = dict(config)
        self.id = self.config.get("id", self.__class__.__name__)
        self.max_rank = int(self.config.get("max_rank", self.DEFAULT_MAX_RANK))
        self.seed = int(self.config.get("seed", DEFAULT_SEED))

    @abstractmethod
    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        """Yield every identity this check covers for ``quiver``."""

    def applies_to(self, quiver: Quiver) -> bool:
        return quiver.rank <= self.max_rank

    def evaluate(self, quiver: Quiver) -> CheckOutcome:
        log = logger.bind(COMPONENT_TYPE="check", ENTITY_NAME=quiver.label)
        count = 0
        failures = []
        try:
            for identity, holds, witness in self._identities(quiver):
                count += 1
                if not holds:
                    failures.append(Failure(identity, dict(witness)))
        except ConsistencyError as exc:
            count += 1
            failures.append(Failure(exc.identity, dict(exc.witness)))

        for failure in failures:
            log.error(f"{self.id}: {failure.identity} fails {failure.witness}")
        log.debug(f"{self.id}: {count - len(failures)}/{count} identities hold")
        return CheckOutcome(self.id, quiver.label, count, tuple(failures))

    def get_metadata(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "how": self.config.get("how"),
            "max_rank": self.max_rank,
        }
