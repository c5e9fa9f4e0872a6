"""Validation reports: a list of violated-law instances with witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    law: str
    witness: dict = field(default_factory=dict)
    structural: bool = False
    module: str = ""

    def describe(self) -> str:
        wit = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        prefix = f"[{self.module}] " if self.module else ""
        kind = "structural" if self.structural else "law"
        return f"{prefix}{kind} {self.law}: {wit}"

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "law": self.law,
            "structural": self.structural,
            "witness": {k: _jsonable(v) for k, v in self.witness.items()},
        }


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


class Report(list):
    """List of :class:`Violation`; empty means every checked law holds."""

    def __init__(self, items=(), module: str = ""):
        super().__init__(items)
        self.module = module

    def add(self, law: str, structural: bool = False, **witness) -> None:
        self.append(Violation(law, witness, structural, self.module))

    @property
    def ok(self) -> bool:
        return not self

    @property
    def structural_errors(self) -> list[Violation]:
        return [v for v in self if v.structural]

    @property
    def law_failures(self) -> list[Violation]:
        return [v for v in self if not v.structural]

    def laws(self) -> set[str]:
        return {v.law for v in self}

    def to_json(self) -> list[dict]:
        return [v.to_json() for v in self]
