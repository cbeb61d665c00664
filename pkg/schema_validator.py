"""Validator for the keywords ``docs/configuration_schema.json`` uses.

Supported: ``type`` (a name or a list of names), ``enum``, ``pattern``,
``minimum``, ``maximum``, ``required``, ``properties``,
``additionalProperties: false``, ``minItems`` and ``items``. Other keywords
are ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Dict, Mapping, Sequence, Tuple

Path = Tuple[Any, ...]

_TYPES: Dict[str, Callable[[Any], bool]] = {
    "object": lambda value: isinstance(value, Mapping),
    "array": lambda value: isinstance(value, (list, tuple)),
    "string": lambda value: isinstance(value, str),
    "integer": lambda value: isinstance(value, int) and not isinstance(value, bool),
    "null": lambda value: value is None,
}


@dataclass
class SchemaValidationError(Exception):
    path: Sequence[Any]
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"

    @property
    def location(self) -> str:
        if not self.path:
            return "<root>"
        return ".".join(str(part) for part in self.path)


def validate_schema(instance: Any, schema: Mapping[str, Any]) -> None:
    """Raise :class:`SchemaValidationError` at the first violation found."""

    _validate(instance, schema, ())


def _validate(instance: Any, schema: Mapping[str, Any], path: Path) -> None:
    if "type" in schema:
        expected = schema["type"]
        names = expected if isinstance(expected, list) else [expected]
        if not any(_TYPES[name](instance) for name in names):
            raise SchemaValidationError(path, f"Expected type {', '.join(names)}, got {type(instance).__name__}")

    if "enum" in schema and instance not in schema["enum"]:
        raise SchemaValidationError(path, f"Expected one of {schema['enum']!r}, got {instance!r}")

    if "pattern" in schema and re.fullmatch(schema["pattern"], instance) is None:
        raise SchemaValidationError(path, f"Value {instance!r} does not match pattern {schema['pattern']!r}")

    if "minimum" in schema and instance < schema["minimum"]:
        raise SchemaValidationError(path, f"Value {instance!r} is less than minimum {schema['minimum']!r}")

    if "maximum" in schema and instance > schema["maximum"]:
        raise SchemaValidationError(path, f"Value {instance!r} is greater than maximum {schema['maximum']!r}")

    if isinstance(instance, Mapping):
        _validate_object(instance, schema, path)
    elif isinstance(instance, (list, tuple)):
        _validate_array(instance, schema, path)


def _validate_object(instance: Mapping[str, Any], schema: Mapping[str, Any], path: Path) -> None:
    for key in schema.get("required", []):
        if key not in instance:
            raise SchemaValidationError(path + (key,), "Missing required property")

    properties = schema.get("properties", {})
    for key, value in instance.items():
        if key in properties:
            _validate(value, properties[key], path + (key,))
        elif schema.get("additionalProperties", True) is False:
            raise SchemaValidationError(path + (key,), "Additional properties are not allowed")


def _validate_array(instance: Sequence[Any], schema: Mapping[str, Any], path: Path) -> None:
    if len(instance) < schema.get("minItems", 0):
        raise SchemaValidationError(path, "Array has fewer items than allowed")

    for index, item in enumerate(instance):
        _validate(item, schema.get("items", {}), path + (index,))
