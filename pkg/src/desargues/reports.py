"""Result records shared by the checkers and suite runners."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .plane import Point, Sloped, Vertical, format_line, format_point
from .scalars import Quaternion, Residue

MAX_WITNESSES = 5


def to_jsonable(obj):
    """Replace geometric objects and scalars by their canonical text forms."""
    if isinstance(obj, Point):
        return format_point(obj)
    if isinstance(obj, (Sloped, Vertical)):
        return format_line(obj)
    if isinstance(obj, (Fraction, Residue, Quaternion)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


@dataclass
class ClaimResult:
    """Outcome of one executable claim.

    ``status`` is ``pass``, ``fail``, ``skipped`` (not applicable to the model)
    or ``not-instantiable`` (stated but cannot be realized by any model here).
    """

    claim: str
    anchor: str
    tested: int = 0
    applicable: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)
    status: str = ""
    note: str = ""

    def record(self, ok: bool, witness=None, applicable: bool = True) -> None:
        self.tested += 1
        if applicable:
            self.applicable += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)

    def finish(self) -> ClaimResult:
        if not self.status:
            self.status = "fail" if self.failures else "pass"
        return self

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "skipped", "not-instantiable")

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "anchor": self.anchor,
            "status": self.finish().status,
            "tested": self.tested,
            "applicable": self.applicable,
            "failures": self.failures,
            "witnesses": to_jsonable(self.witnesses),
        }
        if self.note:
            out["note"] = self.note
        return out


def load_schema(name: str) -> dict:
    """One of the bundled JSON schemas: ``trace``, ``run`` or ``suite_report``."""
    import json
    from importlib.resources import files

    return json.loads(files("desargues").joinpath("schemas", f"{name}.schema.json").read_text("utf-8"))
