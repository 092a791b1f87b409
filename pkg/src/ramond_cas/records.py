"""Verification records returned by the identity checkers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verification:
    """Outcome of one mechanical identity check.

    ``residue`` holds the rendered difference ``lhs - rhs`` whenever the
    check fails, so a broken straightening step can be read off directly.
    """

    name: str
    inputs: dict
    passed: bool
    residue: str | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict[str, Any]:
        out = {
            "id": self.name,
            "inputs": {k: _plain(v) for k, v in self.inputs.items()},
            "status": "pass" if self.passed else "fail",
        }
        if not self.passed:
            out["residue"] = self.residue
        if self.detail:
            out["detail"] = {k: _plain(v) for k, v in self.detail.items()}
        return out


def _plain(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def check_zero(name: str, inputs: dict, residue, **detail) -> Verification:
    """Build a record asserting that ``residue`` (anything with ``is_zero``) vanishes."""
    ok = residue.is_zero()
    return Verification(name, inputs, ok, None if ok else str(residue), detail)
