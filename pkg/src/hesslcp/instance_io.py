"""Reading and writing instance files and cycle files.

An instance file is a JSON object with keys "matrix" (array of arrays) and
"rhs" (array), plus an optional "name".  Entries are integers or rational
literal strings like "-81" and "7/3"; float literals are rejected outright
because they cannot carry exact data.  A cycle file is a JSON array of
bases, each an array of 1-based indices.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import HessLCPError, InstanceFormatError
from .exact import Matrix, Vector, as_scalar, format_scalar
from .lcp import LCPInstance


def _reject_float(token):
    raise InstanceFormatError(
        f"float literal {token!r} not allowed; write rationals as strings like \"7/3\""
    )


def _loads_json(text: str):
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from None


def _entry(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InstanceFormatError(
            f"{where}: expected integer or rational string, got {value!r}"
        )
    try:
        return as_scalar(value)
    except ValueError as exc:
        raise InstanceFormatError(f"{where}: {exc}") from None


def loads_instance(text: str) -> LCPInstance:
    data = _loads_json(text)
    if not isinstance(data, dict):
        raise InstanceFormatError("instance file must be a JSON object")
    if "matrix" not in data or "rhs" not in data:
        raise InstanceFormatError('instance file needs "matrix" and "rhs" keys')
    raw_matrix, raw_rhs = data["matrix"], data["rhs"]
    if not isinstance(raw_matrix, list) or not all(isinstance(r, list) for r in raw_matrix):
        raise InstanceFormatError('"matrix" must be an array of arrays')
    if not isinstance(raw_rhs, list):
        raise InstanceFormatError('"rhs" must be an array')
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InstanceFormatError('"name" must be a string')
    try:
        matrix = Matrix(
            [
                [_entry(x, f"matrix[{i + 1}][{j + 1}]") for j, x in enumerate(row)]
                for i, row in enumerate(raw_matrix)
            ]
        )
        rhs = Vector(_entry(x, f"rhs[{i + 1}]") for i, x in enumerate(raw_rhs))
        return LCPInstance(matrix, rhs, name=name)
    except InstanceFormatError:
        raise
    except HessLCPError as exc:
        raise InstanceFormatError(str(exc)) from None


def load_instance(path) -> LCPInstance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from None
    return loads_instance(text)


def _entry_out(x):
    return int(x.numerator) if x.denominator == 1 else format_scalar(x)


def dumps_instance(instance: LCPInstance) -> str:
    """Deterministic serialization; integers stay bare, fractions become strings.

    Matrix rows are kept on single lines so the file reads like the matrix.
    """
    lines = ["{"]
    if instance.name is not None:
        lines.append(f'  "name": {json.dumps(instance.name)},')
    rows = [[_entry_out(x) for x in row] for row in instance.matrix.rows()]
    lines.append('  "matrix": [')
    lines.append(",\n".join("    " + json.dumps(row) for row in rows))
    lines.append("  ],")
    lines.append(f'  "rhs": {json.dumps([_entry_out(x) for x in instance.rhs])}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_instance(instance: LCPInstance, path):
    Path(path).write_text(dumps_instance(instance))


def loads_cycle(text: str) -> list:
    """Parse a cycle file into a list of frozenset bases."""
    data = _loads_json(text)
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise InstanceFormatError("cycle file must be an array of index arrays")
    out = []
    for i, raw in enumerate(data):
        for x in raw:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InstanceFormatError(
                    f"cycle[{i + 1}]: indices must be integers, got {x!r}"
                )
        out.append(frozenset(raw))
    return out


def load_cycle(path) -> list:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from None
    return loads_cycle(text)
