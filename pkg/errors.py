"""Exception types shared across preproj.

Two families exist. :class:`ValidationError` covers input that does not
describe a valid object (exit code 1). :class:`ConsistencyError` covers two
computations that must agree but do not (exit code 2); it carries the failing
identity and a witness so the CLI can report it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, ClassVar, Mapping


class PreprojError(Exception):
    """Base class for every error raised by preproj."""

    exit_code: ClassVar[int] = 1


class ValidationError(PreprojError):
    """Raised when user supplied input is rejected."""

    exit_code: ClassVar[int] = 1


class InvalidDynkinType(ValidationError):
    """Unknown family or a rank outside the family's range."""


class EdgeMismatch(ValidationError):
    """The arrow set is not an orientation of the Dynkin diagram."""


class NotASource(ValidationError):
    """Reflection requested at a vertex with incoming arrows."""


class OutOfWindow(ValidationError):
    """A ZQ vertex outside the Auslander window was used as a window object."""


class WrongFamily(ValidationError):
    """No closed form is known for the requested family and rank."""


class InvalidWord(ValidationError):
    """A word uses letters that are not vertices of the diagram."""


@dataclass(eq=False)
class ConsistencyError(PreprojError):
    """Two independent computations disagree."""

    identity: str
    witness: Mapping[str, Any] = field(default_factory=dict)

    exit_code: ClassVar[int] = 2

    def __str__(self) -> str:
        if not self.witness:
            return self.identity
        details = ", ".join(f"{key}={value}" for key, value in sorted(self.witness.items()))
        return f"{self.identity} ({details})"

    def __reduce__(self):
        return (self.__class__, (self.identity, dict(self.witness)))


class InternalInconsistency(ConsistencyError):
    """A structural identity of the translation quiver failed."""


class NegativeKnit(ConsistencyError):
    """Knitting produced a negative dimension."""


class CaseMismatch(ConsistencyError):
    """Overlapping cases of the Hom-dimension formula disagree."""


class CheckFailure(ConsistencyError):
    """A property check reported a failure."""
