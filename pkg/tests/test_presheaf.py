import itertools
from fractions import Fraction

import pytest

from helpers import discrete, poset, support
from oracles import subsets
from qlab import CapExceeded, PreconditionError, QArrow, lukasiewicz
from qlab.presheaf import (CO, CONTRA, CoPresheaf, PA, PdA, Presheaf, bound_search, density_check,
                           enumerate_presheaves, estimate_presheaves, find_isomorphism, is_complete, presheaf_inf,
                           presheaf_sup, pull_back, push_forward, sup_functor, tensor_formula, tensor_search,
                           transport, validate_weight, yoneda, yoneda_functor)
from qlab.qcat import enumerate_functors, is_functor_adjunction, validate_category, validate_functor

FENCE = (["a", "b", "c"], [("a", "b"), ("c", "b")])


def down_sets(ids, less):
    return {s for s in subsets(ids) if all(x in s for x, y in less if y in s)}


def up_sets(ids, less):
    return {s for s in subsets(ids) if all(y in s for x, y in less if x in s)}


@pytest.mark.parametrize("ids,less", [(["a"], []), (["a", "b"], []), (["a", "b"], [("a", "b")]), FENCE])
def test_boolean_presheaves_are_down_and_up_sets(q2, ids, less):
    A = poset(q2, ids, less)
    P, Pd = PA(A), PdA(A)
    assert {support(m) for m in P.elements} == down_sets(ids, less)
    assert {support(m) for m in Pd.elements} == up_sets(ids, less)
    assert len(P.elements) == len(down_sets(ids, less))
    for m, n in itertools.product(P.elements, repeat=2):
        assert P.le(m.label, n.label) == (support(m) <= support(n))
    # the order on P†A is reverse inclusion
    for m, n in itertools.product(Pd.elements, repeat=2):
        assert Pd.le(m.label, n.label) == (support(n) <= support(m))


def test_lukasiewicz_counts():
    l3 = lukasiewicz(3)
    assert len(PA(discrete(l3, ["a", "b"])).elements) == 9
    # on the chain a ≤ b a presheaf needs μ(b) ≤ μ(a)
    chain = poset(l3, ["a", "b"], [("a", "b")])
    vals = {(m["a"], m["b"]) for m in PA(chain).elements}
    assert len(vals) == 6 and all(Fraction(b) <= Fraction(a) for a, b in vals)


def test_canonical_order_and_labels(q2):
    A = discrete(q2, ["a", "b"])
    assert PA(A).objects == ("*[0 0]", "*[0 1]", "*[1 0]", "*[1 1]")
    assert PA(A).element("*[1 0]")["a"] == "1"
    assert PA(A) is PA(A)


def test_presheaf_categories_are_valid(q2, l3):
    for A in (poset(q2, *FENCE), discrete(l3, ["a", "b"])):
        for P in (PA(A), PdA(A)):
            assert validate_category(P).ok


def test_cap_exceeded(q2):
    A = discrete(q2, [f"o{i}" for i in range(5)])
    assert estimate_presheaves(A) == 32
    with pytest.raises(CapExceeded):
        enumerate_presheaves(A, CONTRA, cap=31)
    assert len(enumerate_presheaves(A, CONTRA, cap=32).elements) == 32


def test_unknown_variance(q2):
    with pytest.raises(PreconditionError):
        enumerate_presheaves(discrete(q2, ["a"]), "sideways")


def test_weight_validation(q2):
    A = poset(q2, ["a", "b"], [("a", "b")])
    assert validate_weight(Presheaf(A, "*", ("0", "1"))).laws() == {"μ(x')∘A(x,x') ≤ μ(x)"}
    assert validate_weight(CoPresheaf(A, "*", ("1", "0"))).laws() == {"A(x,x')∘λ(x) ≤ λ(x')"}
    assert validate_weight(Presheaf(A, "*", ("0",))).structural_errors


@pytest.mark.parametrize("variance", [CONTRA, CO])
def test_yoneda_lemma(l3, variance):
    A = poset(l3, ["a", "b"], [("a", "b")])
    P = enumerate_presheaves(A, variance)
    Y = yoneda_functor(A, variance)
    assert validate_functor(Y).is_fully_faithful
    for a in A.objects:
        ya = yoneda(A, a, variance).label
        for w in P.elements:
            if variance == CONTRA:
                assert P(ya, w.label) == w[a]
            else:
                assert P(w.label, ya) == w[a]


def test_yoneda_rejects_unknown_object(q2):
    with pytest.raises(PreconditionError):
        yoneda(discrete(q2, ["a"]), "z")


def test_sup_in_boolean_presheaf_category_is_union(q2):
    A = poset(q2, *FENCE)
    P = PA(A)
    PP = PA(P)
    for Phi in PP.elements:
        union = frozenset().union(*(support(P.element(lbl)) for lbl in support(Phi)))
        assert support(presheaf_sup(P, Phi)) == union


def test_inf_in_boolean_presheaf_category_is_intersection(q2):
    A = poset(q2, ["a", "b"], [("a", "b")])
    P = PA(A)
    for Psi in PdA(P).elements:
        chosen = [support(P.element(lbl)) for lbl in support(Psi)]
        expect = frozenset(A.objects).intersection(*chosen)
        assert support(presheaf_inf(P, Psi)) == expect


def test_closed_form_sup_agrees_with_search(l3):
    A = discrete(l3, ["a"])
    for P in (PA(A), PdA(A)):
        for Phi in PA(P).elements:
            s = presheaf_sup(P, Phi)
            assert bound_search(P, Phi, "sup") == s.label
        for Psi in PdA(P).elements:
            assert bound_search(P, Psi, "inf") == presheaf_inf(P, Psi).label


def test_tensor_formula_agrees_with_search(l3):
    A = poset(l3, ["a", "b"], [("a", "b")])
    for P in (PA(A), PdA(A)):
        for w in P.elements:
            for f in l3.hom("*", "*").carrier:
                arrow = QArrow("*", "*", f)
                assert tensor_search(P, arrow, w.label) == tensor_formula(P, arrow, w).label
                assert tensor_search(P, arrow, w.label, "cotensor") == tensor_formula(P, arrow, w, "cotensor").label


def test_lukasiewicz_tensor_of_half_exists():
    l3 = lukasiewicz(3)
    A = discrete(l3, ["a"])
    assert tensor_search(A, QArrow("*", "*", "1/2"), "a") == "a"


def test_presheaf_categories_are_complete(q2, l3):
    for A in (poset(q2, *FENCE), discrete(l3, ["a"])):
        for P in (PA(A), PdA(A)):
            rep = is_complete(P)
            assert rep.complete and rep.equivalence_holds and rep.sup_is_join_of_tensors


def test_incomplete_category(q2):
    A = discrete(q2, ["a", "b"])
    rep = is_complete(A)
    assert not rep.complete and rep.equivalence_holds
    with pytest.raises(PreconditionError):
        sup_functor(A)


def test_sup_is_left_inverse_of_yoneda(q2):
    A = PA(poset(q2, ["a", "b"], [("a", "b")]))
    sup = sup_functor(A)
    Y = yoneda_functor(A)
    assert all(sup(Y(a)) == a for a in A.objects)


def test_transport_adjunctions(q2):
    A = poset(q2, ["a", "b"], [("a", "b")])
    B = poset(q2, ["u", "v", "w"], [("u", "v"), ("w", "v")])
    for F in enumerate_functors(A, B):
        fwd, back = transport(F, "forward"), transport(F, "backward")
        assert validate_functor(fwd).ok and validate_functor(back).ok
        assert is_functor_adjunction(fwd, back)
        fwd_co, back_co = transport(F, "forward", CO), transport(F, "backward", CO)
        assert is_functor_adjunction(back_co, fwd_co)
        for a in A.objects:
            assert push_forward(F, yoneda(A, a)) == yoneda(B, F(a))
        for m in PA(B).elements:
            assert pull_back(F, m).values == tuple(m[F(x)] for x in A.objects)
    with pytest.raises(PreconditionError):
        transport(F, "sideways")


def test_yoneda_is_dense(q2):
    A = poset(q2, *FENCE)
    ok, witness = density_check(yoneda_functor(A), "sup_dense")
    assert ok and all(witness.values())
    ok, _ = density_check(yoneda_functor(A, CO), "inf_dense")
    assert ok


def test_find_isomorphism(q2):
    A = poset(q2, ["a", "b"], [("a", "b")])
    B = poset(q2, ["v", "u"], [("u", "v")])
    iso = find_isomorphism(A, B)
    assert iso is not None and iso.mapping == {"a": "u", "b": "v"}
    assert find_isomorphism(A, discrete(q2, ["u", "v"])) is None
    # P of a one-point category is the two-element chain
    assert find_isomorphism(PA(discrete(q2, ["p"])), A) is not None
