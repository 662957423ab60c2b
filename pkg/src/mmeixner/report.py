"""Outcome records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .algebra import PolyX, format_rational


def to_jsonable(value: Any) -> Any:
    """Convert exact values into JSON-friendly structures.

    Fractions become ``"p/q"`` strings and polynomials become coefficient
    lists, lowest power first.
    """
    if isinstance(value, PolyX):
        return value.to_json()
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


@dataclass
class RelationReport:
    relation: str
    instance: dict
    passed: bool
    lhs: Any = None
    rhs: Any = None
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {
            "relation": self.relation,
            "instance": _instance_json(self.instance),
            "pass": self.passed,
            "lhs": to_jsonable(self.lhs),
            "rhs": to_jsonable(self.rhs),
        }
        if self.notes:
            out["notes"] = to_jsonable(self.notes)
        return out


def _instance_json(instance: dict) -> dict:
    out = {}
    for k, v in instance.items():
        # multi-indices and orderings stay as integer lists
        if isinstance(v, tuple) and all(isinstance(e, int) for e in v):
            out[k] = list(v)
        elif isinstance(v, int) and not isinstance(v, bool):
            out[k] = v
        else:
            out[k] = to_jsonable(v)
    return out


def combine(relation: str, instance: dict, parts: Iterable[RelationReport]) -> RelationReport:
    """Fold sub-checks into one report that carries the first failure."""
    parts = list(parts)
    for p in parts:
        if not p.passed:
            inst = dict(instance)
            inst["part"] = p.relation
            inst.update(p.instance)
            return RelationReport(relation, inst, False, p.lhs, p.rhs,
                                  {"parts_checked": len(parts)})
    return RelationReport(relation, dict(instance), True, None, None,
                          {"parts_checked": len(parts)})


def summarize(name: str, reports: Iterable[RelationReport]) -> dict:
    """Aggregate a sweep of reports into a single JSON-ready summary."""
    reports = list(reports)
    failed = [r for r in reports if not r.passed]
    return {
        "check": name,
        "pass": not failed,
        "count": len(reports),
        "failures": len(failed),
        "first_failure": failed[0].to_json() if failed else None,
    }
