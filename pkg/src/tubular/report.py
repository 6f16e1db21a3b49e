"""Decision reports and exact JSON serialization of verdicts and certificates.

A report is one (group, property) verdict plus its route, citation, notes, and
an optional machine-checkable certificate.  Rationals serialize as "p/q"
strings so certificates round-trip exactly; certificates never pass through
floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cat0 import ObstructionDatum
from .core import IntVec2, QForm2, Rat
from .cubulate import Arc, EquitableSet
from .fbc import Functional

YES, NO, UNKNOWN = "Yes", "No", "Unknown"


@dataclass(frozen=True)
class DecisionReport:
    group: str
    property: str
    verdict: str  # Yes / No / Unknown, or a decider-specific word (e.g. Obstructed)
    route: str
    certificate: dict | None = None
    citation: str = ""
    notes: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "group": self.group,
            "property": self.property,
            "verdict": self.verdict,
            "route": self.route,
            "certificate": self.certificate,
            "citation": self.citation,
            "notes": list(self.notes),
        }


def reports_to_json(reports: list[DecisionReport]) -> str:
    return json.dumps([r.to_json_obj() for r in reports], indent=2) + "\n"


def rat_str(r: Rat) -> str:
    f = Fraction(r)
    return f"{f.numerator}/{f.denominator}"


def rat_from_str(s: str) -> Rat:
    return Fraction(s)


def serialize_qform(q: QForm2, cos_phi: Rat | None = None) -> dict:
    out = {
        "type": "quadratic_form",
        "a": rat_str(q.a),
        "b": rat_str(q.b),
        "c": rat_str(q.c),
    }
    if cos_phi is not None:
        out["cos_phi"] = rat_str(cos_phi)
    return out


def deserialize_qform(obj: dict) -> QForm2:
    return QForm2(rat_from_str(obj["a"]), rat_from_str(obj["b"]), rat_from_str(obj["c"]))


def serialize_functional(f: Functional) -> dict:
    return {
        "type": "integer_functional",
        "coefficients": {v: [a, b] for v, (a, b) in f.coeffs},
    }


def deserialize_functional(obj: dict) -> Functional:
    return Functional(
        tuple((v, (int(a), int(b))) for v, (a, b) in obj["coefficients"].items())
    )


def serialize_equitable(s: EquitableSet) -> dict:
    return {
        "type": "equitable_set",
        "sets": {v: [[x.x, x.y] for x in vecs] for v, vecs in s.sets},
    }


def deserialize_equitable(obj: dict) -> EquitableSet:
    return EquitableSet(
        tuple(
            (v, tuple(IntVec2(int(x), int(y)) for x, y in vecs))
            for v, vecs in obj["sets"].items()
        )
    )


def serialize_cycle(cycle: tuple[tuple[Arc, int], ...], holonomy: Rat) -> dict:
    return {
        "type": "dilation_cycle",
        "holonomy": rat_str(holonomy),
        "steps": [
            {
                "edge": arc.edge_label,
                "from": f"{arc.src_circle[0]}:{arc.src_circle[1]}",
                "to": f"{arc.dst_circle[0]}:{arc.dst_circle[1]}",
                "weight": rat_str(arc.weight),
                "direction": d,
            }
            for arc, d in cycle
        ],
    }


def serialize_obstruction(o: ObstructionDatum) -> dict:
    return {
        "type": "obstruction",
        "kind": o.kind.value,
        "indices": list(o.indices),
        "values": [rat_str(v) for v in o.values],
    }


def serialize_forced_values(values: tuple[Rat, ...]) -> dict:
    return {"type": "forced_values", "values": [rat_str(v) for v in values]}
