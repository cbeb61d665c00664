"""Plain-text summaries for terminal use."""
from __future__ import annotations

from typing import Any, List, Mapping


def _vector(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def window_text(payload: Mapping[str, Any]) -> str:
    lines = [f"N: {_vector(payload['N'][q] for q in sorted(payload['N'], key=int))}"]
    lines.append(f"objects ({len(payload['objects'])}): " + " ".join(_vector(x) for x in payload["objects"]))
    lines.append(f"arrows ({len(payload['arrows'])}):")
    lines += [f"  {_vector(src)} -> {_vector(dst)}" for src, dst in payload["arrows"]]
    return "\n".join(lines) + "\n"


def dims_text(payload: Mapping[str, Any]) -> str:
    lines = [f"{_vector(entry['object'])}: {_vector(entry['dim'])}" for entry in payload["dims"]]
    lines.append(f"knitting agrees: {payload['knit_agrees']}")
    return "\n".join(lines) + "\n"


def start_text(payload: Mapping[str, Any]) -> str:
    lines = [f"M{_vector(entry['object'])}: {_vector(entry['dim'])}" for entry in payload["summands"]]
    lines.append(f"dim M_Q = {_vector(payload['total'])}")
    lines.append(f"dim End = {payload['dimEnd']}, <d,d> = {payload['euler']}, rigid: {payload['rigid']}")
    return "\n".join(lines) + "\n"


def seed_text(payload: Mapping[str, Any]) -> str:
    lines: List[str] = [
        f"word: {_vector(payload['word'])}",
        f"e: {_vector(payload['e'])}",
        "theta: " + " ".join(f"{j}->{k}" for j, k in sorted(payload["theta"].items(), key=lambda item: int(item[0]))),
        f"B: {len(payload['Brows'])}x{len(payload['columns'])}, B': {len(payload['Bprime_rows'])}x{len(payload['columns'])}",
    ]
    lines += [f"  minor {m['k']}: varpi_{m['fundamental']} -> {_vector(m['weight'])}" for m in payload["minors"]]
    return "\n".join(lines) + "\n"


def check_text(payload: Mapping[str, Any]) -> str:
    lines = [f"{payload['label']}: r={payload['r']} rigid={payload['rigid']}"]
    for outcome in payload["checks"]:
        status = "ok" if outcome["passed"] else "FAILED"
        lines.append(f"  {outcome['id']:<12} {status}")
        lines += [f"    {identity}" for identity in outcome["failures"]]
    return "\n".join(lines) + "\n"


def dq_table_text(table: Mapping[int, Mapping[str, int]]) -> str:
    lines = [f"{rank:>2}  {entry['closed_form']:>8}  {entry['dim_end']:>8}" for rank, entry in sorted(table.items())]
    return "\n".join(lines) + "\n"


def sweep_text(payload: Mapping[str, Any]) -> str:
    lines = [f"{payload['quivers']} quivers, {payload['failed']} failing"]
    lines += [f"  {label}" for label in payload["failures"]]
    return "\n".join(lines) + "\n"
