import json
from importlib import resources

import pytest

from helpers import discrete
from qlab import StructuralError, boolean, lukasiewicz, rel_like, validate_quantaloid
from qlab.isbell import concept_lattice
from qlab.presheaf import PA
from qlab.qcat import QFunctor
from qlab.serialize import (category_to_doc, distributor_to_doc, dumps, functor_to_doc, lattice_to_doc,
                            parse_category, parse_distributor, parse_functor, parse_quantaloid, parse_weight,
                            quantaloid_to_doc, to_dot, weight_to_doc)
from qlab.workspace import BUNDLED, load_workspace, parse_workspace, read_document


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_fixtures_round_trip(name):
    text = resources.files("qlab.fixtures").joinpath(f"{name}.json").read_text("utf-8")
    ws = load_workspace(name)
    assert dumps(ws.to_doc()) == text
    assert not ws.validate()


@pytest.mark.parametrize("q", [boolean(), lukasiewicz(3), rel_like(2)], ids=lambda q: q.name)
def test_quantaloid_round_trip(q):
    doc = quantaloid_to_doc(q)
    back = parse_quantaloid(json.loads(dumps(doc)))
    assert dumps(quantaloid_to_doc(back)) == dumps(doc)
    assert validate_quantaloid(back).ok
    assert back.is_girard == q.is_girard


def test_quantaloid_from_order_only():
    doc = quantaloid_to_doc(boolean())
    for h in doc["homs"].values():
        del h["joins"], h["meets"]
    assert validate_quantaloid(parse_quantaloid(doc)).ok


def test_builtin_reference():
    assert parse_quantaloid({"builtin": "lukasiewicz", "n": 4}).hom("*", "*").carrier[1] == "1/3"


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("units"),
    lambda d: d["homs"].update({"*->Z": {"carrier": ["0"], "leq": []}}),
    lambda d: d["compose"].update({"*->*": {}}),
    lambda d: d["compose"]["*->*->*"].update({"0,1,0": "0"}),
])
def test_malformed_quantaloids(mutate):
    doc = quantaloid_to_doc(boolean())
    mutate(doc)
    with pytest.raises(StructuralError):
        parse_quantaloid(doc)


def test_category_functor_distributor_round_trip(q2, ctx):
    A, B, phi = ctx
    cats = {"A": A, "B": B}
    assert parse_category(q2, category_to_doc(A)) == A
    assert category_to_doc(A)["hom"] == {}
    assert parse_distributor(distributor_to_doc(phi, "A", "B"), cats) == phi
    F = QFunctor(A, B, {"x1": "y1", "x2": "y2"})
    assert parse_functor(functor_to_doc(F, "A", "B"), cats) == F


def test_category_rejects_commas(q2):
    with pytest.raises(StructuralError):
        parse_category(q2, {"objects": [{"id": "a,b", "type": "*"}]})
    with pytest.raises(StructuralError):
        parse_category(q2, {"objects": [{"id": "a", "type": "Z"}]})


def test_weight_round_trip(l3):
    A = discrete(l3, ["a", "b"])
    for w in PA(A).elements:
        assert parse_weight(A, weight_to_doc(w)) == w


def test_lattice_document(ctx):
    A, B, phi = ctx
    doc = lattice_to_doc(concept_lattice(phi))
    assert doc["kind"] == "isbell"
    assert [c["id"] for c in doc["concepts"]] == ["c0", "c1"]
    assert doc["hom"]["c0,c1"] == "1" and doc["hom"]["c1,c0"] == "0"


def test_dot_collapses_isomorphic_objects(q2):
    from helpers import poset
    A = poset(q2, ["a", "b", "c"], [("a", "b"), ("b", "a"), ("a", "c"), ("b", "c")])
    dot = to_dot(A, name="T")
    assert dot.startswith("digraph")
    assert '"a" -> "c";' in dot
    assert '"b"' not in dot
    assert dot.count("->") == 1


def test_workspace_errors():
    with pytest.raises(StructuralError):
        parse_workspace({})
    with pytest.raises(StructuralError):
        parse_workspace({"quantaloid": {"builtin": "boolean"}, "functors": {"F": {"source": "X", "target": "Y",
                                                                                   "map": {}}}})
    with pytest.raises(StructuralError):
        parse_workspace({"quantaloid": {"builtin": "boolean"},
                         "categories": {"A": {"objects": [{"id": "a", "type": "*"}]}},
                         "closure_spaces": {"C": {"category": "A", "closure": {"0": 1}}}})


def test_read_document_rejects_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(StructuralError):
        read_document(str(p))


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": "½"}) == '{\n  "a": "½",\n  "b": 1\n}\n'
