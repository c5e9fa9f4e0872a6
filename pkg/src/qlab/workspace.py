"""Workspaces: one JSON document naming a quantaloid and everything built over it.

Document shape::

    {"quantaloid": {"builtin": "boolean"} | <quantaloid document>,
     "categories": {name: <category document>},
     "functors": {name: <functor document>},
     "distributors": {name: <distributor document>},
     "closure_spaces": {name: {"category": name, "closure": {"i": j}}},
     "infomorphisms": {name: {"F": name, "G": name, "phi": name, "psi": name}},
     "config": {"cap": int}}

Only ``quantaloid`` is required.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .closure import QClosureSpace, validate_closure_space
from .errors import StructuralError
from .presheaf import CONTRA, enumerate_presheaves
from .qcat import QCategory, QFunctor, validate_category, validate_functor
from .qdist import Infomorphism, QDistributor, validate_distributor, validate_infomorphism
from .quantaloid import Quantaloid, validate_quantaloid
from .report import Report
from .serialize import (category_to_doc, distributor_to_doc, functor_to_doc, parse_category,
                        parse_distributor, parse_functor, parse_quantaloid, quantaloid_to_doc)

BUNDLED = ("ctx", "l3", "macneille")
SECTIONS = ("categories", "functors", "distributors", "closure_spaces", "infomorphisms")


@dataclass
class Workspace:
    quantaloid: Quantaloid
    quantaloid_doc: dict
    categories: dict[str, QCategory] = field(default_factory=dict)
    functors: dict[str, QFunctor] = field(default_factory=dict)
    distributors: dict[str, QDistributor] = field(default_factory=dict)
    closure_spaces: dict[str, QClosureSpace] = field(default_factory=dict)
    infomorphisms: dict[str, Infomorphism] = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict, repr=False)

    def name_of(self, obj) -> str:
        for section in SECTIONS:
            for k, v in getattr(self, section).items():
                if v is obj:
                    return k
        raise KeyError("object is not part of this workspace")

    def validate(self) -> Report:
        """Every validator over every named object; structural quantaloid errors stop early."""
        rep = Report(module="workspace")
        qrep = validate_quantaloid(self.quantaloid)
        rep.extend(qrep)
        if qrep.structural_errors:
            return rep
        if self.quantaloid.dualizing is not None and not self.quantaloid.is_girard:
            rep.add("dualizing family is not cyclic and dualizing", name="quantaloid")
        for name, A in self.categories.items():
            rep.extend(_named(validate_category(A), name))
        for name, F in self.functors.items():
            rep.extend(_named(validate_functor(F), name))
        for name, phi in self.distributors.items():
            rep.extend(_named(validate_distributor(phi), name))
        for name, info in self.infomorphisms.items():
            rep.extend(_named(validate_infomorphism(info), name))
        for name, space in self.closure_spaces.items():
            rep.extend(_named(validate_closure_space(space), name))
        return rep

    def to_doc(self) -> dict:
        doc: dict = {"quantaloid": self.quantaloid_doc}
        names = {id(A): k for k, A in self.categories.items()}
        if self.categories:
            doc["categories"] = {k: category_to_doc(A) for k, A in self.categories.items()}
        if self.functors:
            doc["functors"] = {k: functor_to_doc(F, names[id(F.source)], names[id(F.target)])
                               for k, F in self.functors.items()}
        if self.distributors:
            doc["distributors"] = {k: distributor_to_doc(p, names[id(p.source)], names[id(p.target)])
                                   for k, p in self.distributors.items()}
        if self.closure_spaces:
            doc["closure_spaces"] = {k: {"category": names[id(s.base)],
                                         "closure": {str(i): j for i, j in enumerate(s.operator)}}
                                     for k, s in self.closure_spaces.items()}
        if self.infomorphisms:
            doc["infomorphisms"] = {k: {"F": self.name_of(i.F), "G": self.name_of(i.G),
                                        "phi": self.name_of(i.phi), "psi": self.name_of(i.psi)}
                                    for k, i in self.infomorphisms.items()}
        if self.config:
            doc["config"] = dict(self.config)
        return doc


def _named(report: Report, name: str) -> Report:
    out = Report(module=report.module)
    for v in report:
        out.add(v.law, v.structural, name=name, **v.witness)
    return out


def _section(doc: dict, key: str) -> dict:
    value = doc.get(key, {})
    if not isinstance(value, dict):
        raise StructuralError(f"{key!r} must be an object")
    return value


def _ref(table: dict, key: str, kind: str):
    if key not in table:
        raise StructuralError(f"unknown {kind} {key!r}")
    return table[key]


def parse_workspace(doc: dict, cap: Optional[int] = None) -> Workspace:
    """Resolve every cross-reference; raises :class:`StructuralError` on malformed input."""
    if not isinstance(doc, dict) or "quantaloid" not in doc:
        raise StructuralError("workspace needs a 'quantaloid' entry")
    try:
        q = parse_quantaloid(doc["quantaloid"])
    except (KeyError, TypeError, ValueError) as exc:
        raise StructuralError(f"malformed quantaloid: {exc}") from exc
    config = dict(_section(doc, "config"))
    ws = Workspace(q, doc["quantaloid"], config=config, raw=doc)
    try:
        for k, d in _section(doc, "categories").items():
            ws.categories[k] = parse_category(q, d, name=k)
        for k, d in _section(doc, "functors").items():
            ws.functors[k] = parse_functor(d, ws.categories, name=k)
        for k, d in _section(doc, "distributors").items():
            ws.distributors[k] = parse_distributor(d, ws.categories, name=k)
        for k, d in _section(doc, "closure_spaces").items():
            A = _ref(ws.categories, d.get("category"), "category")
            P = enumerate_presheaves(A, CONTRA, cap if cap is not None else config.get("cap"))
            raw = d.get("closure", {})
            n = len(P.elements)
            if set(raw) != {str(i) for i in range(n)}:
                raise StructuralError(f"closure map of {k!r} must cover indices 0..{n - 1}")
            op = tuple(int(raw[str(i)]) for i in range(n))
            ws.closure_spaces[k] = QClosureSpace(A, op, P, name=k)
        for k, d in _section(doc, "infomorphisms").items():
            ws.infomorphisms[k] = Infomorphism(_ref(ws.functors, d.get("F"), "functor"),
                                               _ref(ws.functors, d.get("G"), "functor"),
                                               _ref(ws.distributors, d.get("phi"), "distributor"),
                                               _ref(ws.distributors, d.get("psi"), "distributor"))
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise StructuralError(f"malformed workspace: {exc}") from exc
    return ws


def read_document(path_or_name: str) -> dict:
    """Load a JSON file, or a bundled fixture by name."""
    if path_or_name in BUNDLED and not Path(path_or_name).exists():
        text = resources.files("qlab.fixtures").joinpath(f"{path_or_name}.json").read_text("utf-8")
    else:
        text = Path(path_or_name).read_text("utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path_or_name}: {exc}") from exc


def load_workspace(path_or_name: str, cap: Optional[int] = None) -> Workspace:
    return parse_workspace(read_document(path_or_name), cap)


def quantaloid_document(ws: Workspace) -> dict:
    """The fully expanded quantaloid document, even for builtin references."""
    return quantaloid_to_doc(ws.quantaloid)
