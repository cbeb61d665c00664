"""JSON payloads of the CLI and their parsing back into domain objects.

Output is deterministic: keys are sorted, objects and arrows appear in the
sorted order of the underlying data, and every document ends with a newline.
"""
from __future__ import annotations

import json
from typing import Any, Dict, Mapping

from dynkin.quiver import Quiver, quiver_from_dict
from errors import ValidationError
from numerics.dimensions import dimvec_table, knit_all
from seed import build_seed
from start.graded import graded_quiver
from start.module import rigidity_certificate, start_module
from translation.window import AusWindow, auslander_window
from translation.zq import ZQVertex


def dumps(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Dict[str, Any]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"Invalid JSON document: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValidationError("JSON document must be an object")
    return payload


def window_payload(window: AusWindow) -> Dict[str, Any]:
    return window.to_dict()


def dims_payload(quiver: Quiver) -> Dict[str, Any]:
    table = dimvec_table(quiver)
    ordered = sorted(table, key=lambda x: (x.vertex, x.column))
    return {
        "quiver": quiver.to_dict(),
        "dims": [{"object": list(x), "dim": list(table[x])} for x in ordered],
        "knit_agrees": knit_all(quiver) == table,
    }


def start_payload(quiver: Quiver) -> Dict[str, Any]:
    data = start_module(quiver)
    certificate = rigidity_certificate(quiver)
    return {
        "quiver": quiver.to_dict(),
        "summands": [{"object": list(x), "dim": list(data.summands[x])} for x in sorted(data.summands)],
        "total": list(data.total),
        "dimEnd": data.dim_end,
        "euler": certificate.euler,
        "rigid": certificate.rigid,
        "graded": graded_quiver(quiver).to_dict(),
    }


def seed_payload(quiver: Quiver) -> Dict[str, Any]:
    seed = build_seed(quiver)
    payload = seed.to_dict()
    payload["quiver"] = quiver.to_dict()
    payload["ordering"] = [list(x) for x in seed.ordering.objects]
    return payload


def quiver_from_payload(payload: Mapping[str, Any]) -> Quiver:
    """The quiver of any payload above."""

    try:
        return quiver_from_dict(payload["quiver"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"Payload has no usable quiver: {exc}") from exc


def window_from_payload(payload: Mapping[str, Any]) -> AusWindow:
    """Rebuild the window of the payload's quiver and require it to match the payload."""

    window = auslander_window(quiver_from_payload(payload))
    objects = [ZQVertex(*pair) for pair in payload.get("objects", [])]
    arrows = [(ZQVertex(*src), ZQVertex(*dst)) for src, dst in payload.get("arrows", [])]
    exponents = {int(q): int(n) for q, n in payload.get("N", {}).items()}
    if tuple(objects) != window.objects:
        raise ValidationError(f"Objects in the payload differ from the window of {window.quiver.label}")
    if tuple(arrows) != window.arrows:
        raise ValidationError(f"Arrows in the payload differ from the window of {window.quiver.label}")
    if exponents != window.N:
        raise ValidationError(f"Exponents in the payload differ from the window of {window.quiver.label}")
    return window
