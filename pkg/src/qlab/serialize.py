"""JSON documents for quantaloids, categories, functors, distributors and lattices.

Every ``*_to_doc`` function emits the canonical form: defaults are omitted
where the schema allows it and :func:`dumps` sorts keys, so
``dumps(x_to_doc(parse_x(doc))) == dumps(doc)`` for canonical documents.
Pair keys are written ``"x,y"``; ids containing a comma are rejected.
"""
from __future__ import annotations

import json
from typing import Mapping, Optional

from .errors import StructuralError
from .presheaf import CO, CoPresheaf, Presheaf, PresheafCategory, _Weight
from .qcat import QCategory, QFunctor, underlying_preorder
from .qdist import QDistributor, make_distributor
from .quantaloid import DualizingFamily, HomLattice, Quantaloid, builtin_quantaloid


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _pair(a: str, b: str) -> str:
    for s in (a, b):
        if "," in s:
            raise StructuralError(f"id {s!r} contains a comma")
    return f"{a},{b}"


def _split(key: str, n: int = 2) -> tuple[str, ...]:
    parts = tuple(key.split(","))
    if len(parts) != n:
        raise StructuralError(f"malformed pair key {key!r}")
    return parts


def _require(doc: Mapping, *keys: str) -> None:
    if not isinstance(doc, Mapping):
        raise StructuralError("expected an object")
    for k in keys:
        if k not in doc:
            raise StructuralError(f"missing field {k!r}")


# -- quantaloids -------------------------------------------------------------------

def quantaloid_to_doc(q: Quantaloid) -> dict:
    homs, compose = {}, {}
    for (a, b), lat in q.homs.items():
        c = lat.carrier
        homs[f"{a}->{b}"] = {
            "carrier": list(c),
            "leq": [[x, y] for x in c for y in c if lat.le(x, y)],
            "joins": {_pair(x, y): lat.join(x, y) for x in c for y in c},
            "meets": {_pair(x, y): lat.meet(x, y) for x in c for y in c},
        }
    for (a, b, c), table in q.tables.items():
        compose[f"{a}->{b}->{c}"] = {_pair(g, f): v for (g, f), v in table.items()}
    doc = {"objects": list(q.objects), "homs": homs, "compose": compose, "units": dict(q.units)}
    if q.dualizing is not None:
        doc["dualizing"] = dict(q.dualizing.d)
    return doc


def parse_quantaloid(doc: Mapping, name: str = "custom") -> Quantaloid:
    """Build a quantaloid from a document or a ``{"builtin": ..., "n": ...}`` reference.

    Missing ``joins``/``meets`` are derived from ``leq``; given ones are kept
    verbatim so that the validator can judge them.
    """
    _require(doc)
    if "builtin" in doc:
        return builtin_quantaloid(doc["builtin"], doc.get("n"))
    _require(doc, "objects", "homs", "compose", "units")
    objects = tuple(doc["objects"])
    homs = {}
    for key, h in doc["homs"].items():
        ends = tuple(key.split("->"))
        if len(ends) != 2 or any(e not in objects for e in ends):
            raise StructuralError(f"bad hom key {key!r}")
        _require(h, "carrier", "leq")
        carrier = tuple(h["carrier"])
        leq = [tuple(p) for p in h["leq"]]
        if "joins" in h and "meets" in h:
            leq_set = frozenset(leq) | {(x, x) for x in carrier}
            tops = [t for t in carrier if all((x, t) in leq_set for x in carrier)]
            bots = [z for z in carrier if all((z, x) in leq_set for x in carrier)]
            if not tops or not bots:
                raise StructuralError(f"hom {key} lacks top or bottom")
            joins = {_split(k): v for k, v in h["joins"].items()}
            meets = {_split(k): v for k, v in h["meets"].items()}
            homs[ends] = HomLattice(carrier, leq_set, joins, meets, tops[0], bots[0])
        else:
            homs[ends] = HomLattice.from_order(carrier, leq)
    tables = {}
    for key, t in doc["compose"].items():
        ends = tuple(key.split("->"))
        if len(ends) != 3 or any(e not in objects for e in ends):
            raise StructuralError(f"bad compose key {key!r}")
        tables[ends] = {_split(k): v for k, v in t.items()}
    dual = doc.get("dualizing")
    return Quantaloid(objects, homs, tables, dict(doc["units"]),
                      DualizingFamily(dict(dual)) if dual is not None else None, name)


# -- categories and functors -------------------------------------------------------

def category_to_doc(A: QCategory) -> dict:
    q = A.q
    hom = {}
    for x in A.objects:
        for y in A.objects:
            default = q.unit(A.t(x)) if x == y else q.hom(A.t(x), A.t(y)).bottom
            if A(x, y) != default:
                hom[_pair(x, y)] = A(x, y)
    return {"objects": [{"id": x, "type": A.t(x)} for x in A.objects], "hom": hom}


def parse_category(q: Quantaloid, doc: Mapping, name: str = "") -> QCategory:
    _require(doc, "objects")
    pairs = []
    for o in doc["objects"]:
        _require(o, "id", "type")
        if o["type"] not in q.objects:
            raise StructuralError(f"object {o['id']!r} has unknown type {o['type']!r}")
        if "," in o["id"]:
            raise StructuralError(f"id {o['id']!r} contains a comma")
        pairs.append((o["id"], o["type"]))
    ids = {x for x, _ in pairs}
    if len(ids) != len(pairs):
        raise StructuralError("duplicate object ids")
    hom = {}
    for key, v in doc.get("hom", {}).items():
        x, y = _split(key)
        if x not in ids or y not in ids:
            raise StructuralError(f"hom entry {key!r} names an unknown object")
        hom[x, y] = v
    return QCategory.build(q, pairs, hom, name)


def functor_to_doc(F: QFunctor, source: str, target: str) -> dict:
    return {"source": source, "target": target, "map": {x: F(x) for x in F.source.objects}}


def parse_functor(doc: Mapping, categories: Mapping[str, QCategory], name: str = "") -> QFunctor:
    _require(doc, "source", "target", "map")
    A, B = _lookup(categories, doc["source"]), _lookup(categories, doc["target"])
    mapping = dict(doc["map"])
    if set(mapping) != set(A.objects):
        raise StructuralError(f"functor {name!r} must map exactly the source objects")
    if any(y not in B for y in mapping.values()):
        raise StructuralError(f"functor {name!r} maps to an unknown object")
    return QFunctor(A, B, mapping, name)


def _lookup(categories: Mapping[str, QCategory], key: str) -> QCategory:
    if key not in categories:
        raise StructuralError(f"unknown category {key!r}")
    return categories[key]


# -- distributors and presheaves ---------------------------------------------------

def distributor_to_doc(phi: QDistributor, source: str, target: str) -> dict:
    q, A, B = phi.q, phi.source, phi.target
    matrix = {_pair(x, y): phi(x, y) for x, y in phi.cells() if phi(x, y) != q.hom(A.t(x), B.t(y)).bottom}
    return {"source": source, "target": target, "matrix": matrix}


def parse_distributor(doc: Mapping, categories: Mapping[str, QCategory], name: str = "") -> QDistributor:
    _require(doc, "source", "target")
    A, B = _lookup(categories, doc["source"]), _lookup(categories, doc["target"])
    entries = {}
    for key, v in doc.get("matrix", {}).items():
        x, y = _split(key)
        if x not in A or y not in B:
            raise StructuralError(f"matrix entry {key!r} names an unknown object")
        entries[x, y] = v
    return make_distributor(A, B, entries, name)


def weight_to_doc(w: _Weight) -> dict:
    return {"type": w.type, "values": w.as_dict()}


def parse_weight(A: QCategory, doc: Mapping, variance: str = "contra") -> _Weight:
    _require(doc, "type", "values")
    values = doc["values"]
    if set(values) != set(A.objects):
        raise StructuralError("presheaf values must cover exactly the domain objects")
    cls = CoPresheaf if variance == CO else Presheaf
    return cls.of(A, doc["type"], values)


# -- lattices and DOT --------------------------------------------------------------

def lattice_to_doc(lattice) -> dict:
    """``concepts``/``kan`` output: concepts with value maps plus the hom table."""
    ids = [f"c{i}" for i in range(len(lattice.pairs))]
    concepts = []
    for cid, pair in zip(ids, lattice.pairs):
        entry = {"id": cid, "type": pair.type, "extent": pair.extent.as_dict()}
        if pair.intent is not None:
            entry["intent"] = pair.intent.as_dict()
        concepts.append(entry)
    hom = {_pair(ids[i], ids[j]): lattice.hom(i, j) for i in range(len(ids)) for j in range(len(ids))}
    return {"kind": lattice.kind, "concepts": concepts, "hom": hom}


def to_dot(A: QCategory, labels: Optional[Mapping[str, str]] = None, name: str = "G") -> str:
    """Hasse diagram of the underlying preorder, one node per ``≅``-class.

    Each class is drawn as its first member in canonical order; edges point
    upwards (from smaller to larger).  Types are grouped into clusters.
    """
    pre = underlying_preorder(A)
    labels = labels or {}
    reps = []
    for x in A.objects:
        if not any(pre.le(x, r) and pre.le(r, x) for r in reps):
            reps.append(x)
    lines = [f"digraph {json.dumps(name, ensure_ascii=False)} {{", "  rankdir=BT;"]
    for k, X in enumerate(A.q.objects):
        group = [r for r in reps if A.t(r) == X]
        if not group:
            continue
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={json.dumps(X, ensure_ascii=False)};")
        for r in group:
            lines.append(f"    {json.dumps(r, ensure_ascii=False)} "
                         f"[label={json.dumps(labels.get(r, r), ensure_ascii=False)}];")
        lines.append("  }")
    for a in reps:
        for b in reps:
            if a == b or not pre.le(a, b) or pre.le(b, a):
                continue
            between = any(c not in (a, b) and pre.le(a, c) and pre.le(c, b) and not pre.le(c, a)
                          and not pre.le(b, c) for c in reps)
            if not between:
                lines.append(f"  {json.dumps(a, ensure_ascii=False)} -> {json.dumps(b, ensure_ascii=False)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def presheaf_category_to_doc(P: PresheafCategory) -> dict:
    """A presheaf category as a plain category document (objects are presheaf labels)."""
    return category_to_doc(P)
