"""Command reports rendered as plain text or JSON.

Values are restricted to JSON-native data: scalars, vectors (lists of element
tokens) and matrices (lists of lists of tokens). Matrices are stored as
``{"matrix": [...], "cols": N}`` so that empty matrices keep their width.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from lcdcodes.matrix import MatrixFq


def matrix_value(M: MatrixFq) -> dict:
    return {"matrix": [r.split(" ") if r else [] for r in M.format()], "cols": M.ncols}


def vector_value(v) -> list[str]:
    return [str(x) for x in v]


@dataclass
class Report:
    command: str
    entries: dict[str, Any] = field(default_factory=dict)

    def add(self, key: str, value: Any) -> None:
        if isinstance(value, MatrixFq):
            value = matrix_value(value)
        self.entries[key] = value

    def to_json(self) -> str:
        return json.dumps({"command": self.command, "entries": self.entries}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        return cls(data["command"], data["entries"])

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key, value in self.entries.items():
            lines.extend(_text_lines(key, value))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() + "\n" if fmt == "json" else self.to_text()


def _scalar(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _text_lines(key: str, value: Any) -> list[str]:
    if isinstance(value, dict) and "matrix" in value:
        rows = value["matrix"]
        head = f"{key}: [{len(rows)}x{value['cols']}]"
        width = max((len(t) for r in rows for t in r), default=1)
        return [head] + ["  " + " ".join(t.rjust(width) for t in r) for r in rows]
    if isinstance(value, dict):
        out = [f"{key}:"]
        for k, v in value.items():
            out.extend("  " + s for s in _text_lines(k, v))
        return out
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return [f"{key}:"] + ["  (" + ", ".join(map(_scalar, r)) + ")" for r in value]
        return [f"{key}: (" + ", ".join(map(_scalar, value)) + ")"]
    if isinstance(value, str) and "\n" in value:
        return [f"{key}: |"] + ["  " + s for s in value.rstrip("\n").split("\n")]
    return [f"{key}: {_scalar(value)}"]
