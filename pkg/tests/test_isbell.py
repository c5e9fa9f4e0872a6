import itertools
import random
from fractions import Fraction

import pytest

from helpers import discrete, poset, support
from oracles import fca_concepts, fuzzy_down, fuzzy_subsethood, fuzzy_up, luk_implies
from qlab import BoundaryMismatch, PreconditionError, make_distributor
from qlab.closure import is_continuous, validate_closure_space
from qlab.isbell import (certify, concept_lattice, dense_pair_reconstruction, infomorphism_to_continuous,
                         intent_category, isbell_closure, isbell_functor, isbell_interior, isbell_poset_isomorphism,
                         is_state_property_system, phi_down, phi_up, sps_unit, zeta)
from qlab.presheaf import PA, PdA, yoneda
from qlab.qcat import QFunctor, enumerate_categories, identity_functor, is_functor_adjunction
from qlab.qdist import Infomorphism, enumerate_distributors


def incidence(phi):
    return {k for k, v in phi.matrix.items() if v == "1"}


def concepts(phi):
    return {(support(p.extent), support(p.intent)) for p in concept_lattice(phi).pairs}


def test_ctx_concepts(ctx):
    A, B, phi = ctx
    assert concepts(phi) == {(frozenset({"x1"}), frozenset({"y1", "y2"})),
                             (frozenset({"x1", "x2"}), frozenset({"y2"}))}
    lattice = concept_lattice(phi)
    assert len(lattice) == 2
    assert lattice.hom(0, 1) == "1" and lattice.hom(1, 0) == "0"


def test_ctx_operators(ctx):
    A, B, phi = ctx
    P = PA(A)
    up = phi_up(phi, P.element("*[0 1]"))
    assert support(up) == {"y2"}
    assert support(phi_down(phi, up)) == {"x1", "x2"}
    assert support(phi_up(phi, P.element("*[0 0]"))) == {"y1", "y2"}


def test_random_contexts_match_fca(q2):
    rng = random.Random(5)
    for _ in range(15):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        A = discrete(q2, [f"g{i}" for i in range(n)])
        B = discrete(q2, [f"m{j}" for j in range(m)])
        phi = make_distributor(A, B, {k: rng.choice("01") for k in itertools.product(A.objects, B.objects)})
        assert concepts(phi) == fca_concepts(A.objects, B.objects, incidence(phi))


def test_lukasiewicz_adjunction_against_fuzzy_oracle(l3):
    A, B = discrete(l3, ["a1", "a2"]), discrete(l3, ["b1", "b2"])
    phi = make_distributor(A, B, {("a1", "b1"): "1", ("a1", "b2"): "1/2", ("a2", "b2"): "1"})
    F = Fraction
    mat = {k: F(v) for k, v in phi.matrix.items()}
    for mu in PA(A).elements:
        want = fuzzy_up({x: F(mu[x]) for x in A.objects}, mat, A.objects, B.objects, luk_implies)
        assert {y: F(v) for y, v in phi_up(phi, mu).as_dict().items()} == want
    for lam in PdA(B).elements:
        want = fuzzy_down({y: F(lam[y]) for y in B.objects}, mat, A.objects, B.objects, luk_implies)
        assert {x: F(v) for x, v in phi_down(phi, lam).as_dict().items()} == want
    for mu, lam in itertools.product(PA(A).elements, PdA(B).elements):
        mu_d = {x: F(mu[x]) for x in A.objects}
        lam_d = {y: F(lam[y]) for y in B.objects}
        left = fuzzy_subsethood(lam_d, fuzzy_up(mu_d, mat, A.objects, B.objects, luk_implies), luk_implies)
        right = fuzzy_subsethood(mu_d, fuzzy_down(lam_d, mat, A.objects, B.objects, luk_implies), luk_implies)
        assert left == right


def test_isbell_functors_are_adjoint(q2, ctx):
    A, B, phi = ctx
    up = isbell_functor(phi)
    PdB, PA_ = PdA(B), PA(A)
    down = QFunctor(PdB, PA_, {l.label: PA_.intern(phi_down(phi, l)).label for l in PdB.elements})
    assert is_functor_adjunction(up, down)
    interior = isbell_interior(phi)
    assert all(PdB.le(interior(l), l) for l in PdB.objects)


def test_isbell_closure_is_a_closure(q2):
    A = poset(q2, ["a", "b"], [("a", "b")])
    B = discrete(q2, ["u", "v"])
    for phi in enumerate_distributors(A, B):
        assert validate_closure_space(isbell_closure(phi)).ok


def test_intent_category_is_dual(ctx):
    A, B, phi = ctx
    lattice = concept_lattice(phi)
    intents = intent_category(lattice)
    # extents grow while intents shrink
    assert lattice.category.le(lattice.pairs[0].extent.label, lattice.pairs[1].extent.label)
    assert intents.le(PdA(B).intern(lattice.pairs[0].intent).label, PdA(B).intern(lattice.pairs[1].intent).label)
    assert len(intents.objects) == 2


def test_zeta_recovers_space(q2, ctx):
    A, B, phi = ctx
    space = isbell_closure(phi)
    assert isbell_closure(zeta(space)).operator == space.operator


def test_infomorphism_gives_continuous_map(q2, ctx):
    A, B, phi = ctx
    A1 = discrete(q2, ["x1"])
    phi1 = make_distributor(A1, B, {("x1", "y1"): "1", ("x1", "y2"): "1"})
    info = Infomorphism(QFunctor(A1, A, {"x1": "x1"}), identity_functor(B), phi1, phi)
    cm = infomorphism_to_continuous(info)
    assert is_continuous(cm.functor, cm.source, cm.target)
    bad = Infomorphism(QFunctor(A1, A, {"x1": "x2"}), identity_functor(B), phi1, phi)
    with pytest.raises(PreconditionError):
        infomorphism_to_continuous(bad)


def test_dense_pair_certifies(ctx):
    A, B, phi = ctx
    lattice, F, G = dense_pair_reconstruction(phi)
    X = lattice.category
    cert = certify(X, F, G, phi)
    assert cert and cert.witness is None
    assert all(cert.iso(x) == x for x in X.objects)


def test_certify_rejects_wrong_distributor(ctx):
    A, B, phi = ctx
    lattice, F, G = dense_pair_reconstruction(phi)
    other = make_distributor(A, B, {("x1", "y1"): "1", ("x1", "y2"): "1"})
    cert = certify(lattice.category, F, G, other)
    assert not cert and cert.witness["condition"] == "X(F−,G−) = φ"


def test_certify_rejects_incomplete_target(q2, ctx):
    A, B, phi = ctx
    X = discrete(q2, ["p", "q"])
    F = QFunctor(A, X, {"x1": "p", "x2": "q"})
    G = QFunctor(B, X, {"y1": "p", "y2": "q"})
    cert = certify(X, F, G, phi)
    assert cert.witness["condition"] == "complete and skeletal"


def test_state_property_system(q2, ctx):
    A, B, phi = ctx
    space = isbell_closure(phi)
    z = zeta(space)
    ok, why = is_state_property_system(A, space.fixed_category, z)
    assert ok and why is None
    info, iso = sps_unit(A, space.fixed_category, z)
    assert iso
    with pytest.raises(PreconditionError):
        is_state_property_system(A, B, phi)
    with pytest.raises(BoundaryMismatch):
        is_state_property_system(B, A, phi)


def test_poset_isomorphism_on_small_categories(q2):
    cats = [C for n in (1, 2) for C in enumerate_categories(q2, [(f"o{i}", "*") for i in range(n)])]
    for A, B in itertools.product(cats[:3], repeat=2):
        assert isbell_poset_isomorphism(A, B).ok


def test_representables_map_to_rows(ctx):
    A, B, phi = ctx
    for x in A.objects:
        up = phi_up(phi, yoneda(A, x))
        assert up.values == tuple(phi(x, y) for y in B.objects)
