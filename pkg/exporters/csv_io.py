"""CSV tables: dimension vectors per window object and the dim End table."""
from __future__ import annotations

import csv
import io
from typing import Iterable, Mapping, Sequence

from numerics.dimensions import dimvec_rows
from numerics.euler import DimVector
from translation.zq import ZQVertex


def _write(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def dims_csv(table: Mapping[ZQVertex, DimVector], rank: int) -> str:
    """Header ``i,q,d1,...,dn``; rows sorted by ``(q, i)``."""

    header = ["i", "q"] + [f"d{p}" for p in range(1, rank + 1)]
    return _write(header, dimvec_rows(table))


def dq_table_csv(table: Mapping[int, Mapping[str, int]]) -> str:
    rows = ((rank, entry["closed_form"], entry["dim_end"]) for rank, entry in sorted(table.items()))
    return _write(["rank", "closed_form", "dim_end"], rows)


def read_dims_csv(text: str) -> dict:
    """Inverse of :func:`dims_csv`."""

    reader = csv.reader(io.StringIO(text))
    next(reader, None)
    return {ZQVertex(int(row[0]), int(row[1])): tuple(int(v) for v in row[2:]) for row in reader if row}
