"""JSON readers and writers for matrices, graphs and partitions.

Matrix entries travel as decimal strings so arbitrary precision survives
JSON round-trips; readers also accept plain JSON integers.
"""
from __future__ import annotations

import json
from typing import Any

from .graphs import Graph
from .intmat import IntegerMatrix
from .partitions import Partition

INT64_MAX = 2**63 - 1


class FormatError(ValueError):
    pass


def json_int(x: int) -> int | str:
    """Plain number when it fits in a signed 64-bit int, else a decimal string."""
    return x if -INT64_MAX - 1 <= x <= INT64_MAX else str(x)


def _parse_int(x: Any, where: str) -> int:
    if isinstance(x, bool):
        raise FormatError(f"{where}: boolean is not an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        s = x.strip()
        if s.lstrip("+-").isdigit():
            return int(s)
    raise FormatError(f"{where}: expected an integer or decimal string, got {x!r}")


def matrix_to_dict(m: IntegerMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "data": [[str(x) for x in row] for row in m]}


def matrix_from_dict(obj: Any) -> IntegerMatrix:
    if not isinstance(obj, dict):
        raise FormatError("matrix JSON must be an object")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except KeyError as exc:
        raise FormatError(f"matrix JSON missing key {exc}") from None
    rows = _parse_int(rows, "rows")
    cols = _parse_int(cols, "cols")
    if rows < 1 or cols < 1:
        raise FormatError("rows and cols must be positive")
    if not isinstance(data, list) or len(data) != rows:
        raise FormatError(f"data must hold exactly {rows} rows")
    parsed = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"row {i} must hold exactly {cols} entries")
        parsed.append([_parse_int(x, f"entry ({i}, {j})") for j, x in enumerate(row)])
    return IntegerMatrix(parsed)


def dumps_matrix(m: IntegerMatrix) -> str:
    return json.dumps(matrix_to_dict(m))


def loads_matrix(text: str) -> IntegerMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return matrix_from_dict(obj)


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_dict(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj:
        raise FormatError("graph JSON must be an object with 'n' and 'edges'")
    n = _parse_int(obj["n"], "n")
    edges = obj.get("edges", [])
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 for e in edges
    ):
        raise FormatError("edges must be a list of [i, j] pairs")
    try:
        return Graph(n, [[_parse_int(v, "edge vertex") for v in e] for e in edges])
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def loads_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return graph_from_dict(obj)


def partition_to_dict(p: Partition) -> dict:
    return {"cells": p.as_lists()}


def partition_from_dict(obj: Any) -> Partition:
    if not isinstance(obj, dict) or not isinstance(obj.get("cells"), list):
        raise FormatError("partition JSON must be an object with a 'cells' list")
    cells = obj["cells"]
    if any(not isinstance(c, list) for c in cells):
        raise FormatError("each cell must be a list of vertices")
    try:
        return Partition([[_parse_int(v, "cell vertex") for v in c] for c in cells])
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
