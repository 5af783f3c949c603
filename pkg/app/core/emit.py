"""Rendering of command results as JSON documents or CSV tables"""
import csv
import enum
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Sequence

import numpy as np
from rest_framework.renderers import JSONRenderer

from dist_core.dist import Dist, ScoreVector

JSON = "json"
CSV = "csv"
FORMATS = (JSON, CSV)


@dataclass
class Table:
    """Column names and rows; rendered as records in JSON"""
    header: Sequence[str]
    rows: List[Sequence] = field(default_factory=list)

    def records(self) -> List[dict]:
        return [dict(zip(self.header, row)) for row in self.rows]


def jsonable(value: Any) -> Any:
    """Plain JSON types: exact rationals become "a/b" strings and
    non-finite floats null"""
    if isinstance(value, Table):
        return jsonable(value.records())
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, Dist):
        return jsonable(value.probs)
    if isinstance(value, ScoreVector):
        return jsonable(value.values)
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return [jsonable(item) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return str(value)


def render_json(result: Any, seed: int, version: str) -> str:
    document = {
        "result": jsonable(result),
        "meta": {"seed": seed, "version": version},
    }
    return JSONRenderer().render(document).decode("utf-8")


def _cell(value: Any) -> str:
    value = jsonable(value)
    if value is None:
        return "nan"
    if isinstance(value, list):
        return " ".join(_cell(item) for item in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def as_table(result: Any) -> Table:
    """Tables pass through, records and flat mappings become rows"""
    if isinstance(result, Table):
        return result
    if isinstance(result, dict):
        return Table(tuple(result), [tuple(result.values())])
    if isinstance(result, (list, tuple)) and result and all(
        isinstance(item, dict) for item in result
    ):
        header = tuple(result[0])
        return Table(header, [tuple(item.get(k) for k in header)
                              for item in result])
    if not isinstance(result, (list, tuple, set, frozenset)):
        return Table(("value",), [(result,)])
    return Table(("value",), [(item,) for item in result])


def render_csv(result: Any) -> str:
    table = as_table(result)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()
