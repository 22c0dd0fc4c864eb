"""Report objects shared by the verification suites and the CLI."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import __version__

STATUSES = ("verified", "failed", "skipped", "recorded-from-paper")


def jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if hasattr(v, "to_json"):
        return jsonable(v.to_json())
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return str(v)


@dataclass
class ResultItem:
    name: str
    status: str
    value: Any = None
    citation: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status, "value": jsonable(self.value)}
        if self.citation:
            out["citation"] = self.citation
        return out


@dataclass
class Report:
    task: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: List[ResultItem] = field(default_factory=list)
    timings_ms: Dict[str, float] = field(default_factory=dict)
    certificates: List[dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, status: str, value: Any = None, citation: Optional[str] = None) -> ResultItem:
        item = ResultItem(name, status, value, citation)
        self.results.append(item)
        return item

    def check(self, name: str, ok: bool, value: Any = None, citation: Optional[str] = None) -> bool:
        self.add(name, "verified" if ok else "failed", value, citation)
        return ok

    def extend(self, other: "Report", prefix: str = ""):
        for r in other.results:
            self.results.append(ResultItem(prefix + r.name, r.status, r.value, r.citation))
        for k, v in other.timings_ms.items():
            self.timings_ms[prefix + k] = v
        self.certificates.extend(other.certificates)
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return not any(r.status == "failed" for r in self.results)

    def get(self, name: str) -> ResultItem:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        out = {"task": self.task, "tool_version": __version__, "inputs": jsonable(self.inputs),
               "results": [r.to_json() for r in self.results],
               "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()}}
        if self.certificates:
            out["certificates"] = jsonable(self.certificates)
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["task", "name", "status", "value", "citation"])
        for r in self.results:
            v = jsonable(r.value)
            w.writerow([self.task, r.name, r.status, v if isinstance(v, (str, int)) else json.dumps(v, sort_keys=True),
                         r.citation or ""])
        return buf.getvalue()

    def render(self) -> str:
        width = max((len(r.name) for r in self.results), default=4)
        lines = [f"== {self.task} =="]
        for r in self.results:
            v = jsonable(r.value)
            shown = v if isinstance(v, str) else json.dumps(v, sort_keys=True)
            if len(shown) > 100:
                shown = shown[:97] + "..."
            lines.append(f"{r.name:<{width}}  {r.status:<19}  {shown}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


SCHEMA = {
    "type": "object",
    "required": ["task", "tool_version", "inputs", "results", "timings_ms"],
    "properties": {
        "task": {"type": "string"},
        "tool_version": {"type": "string"},
        "inputs": {"type": "object"},
        "results": {"type": "array", "items": {
            "type": "object", "required": ["name", "status", "value"],
            "properties": {"name": {"type": "string"}, "status": {"enum": list(STATUSES)},
                           "citation": {"type": "string"}}}},
        "timings_ms": {"type": "object"},
    },
}
