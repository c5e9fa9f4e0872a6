"""Law suites: clean on correct inputs, and each one notices a planted fault."""
import pytest

from helpers import discrete, poset
from qlab import boolean, lukasiewicz, make_distributor
from qlab import laws
from qlab.closure import identity_space
from qlab.presheaf import Presheaf
from qlab.qcat import enumerate_functors
from qlab.qdist import QDistributor


@pytest.fixture
def small_cats(q2):
    return [discrete(q2, ["a"]), poset(q2, ["a", "b"], [("a", "b")])]


def test_dist_suite_clean(small_cats):
    assert laws.dist_suite(small_cats).ok


def test_dist_suite_lukasiewicz_single_object():
    assert laws.dist_suite([discrete(lukasiewicz(3), ["a"])]).ok


def test_dist_suite_detects_broken_composition(small_cats, monkeypatch):
    real = laws.compose_dist

    def faulty(psi, phi):
        out = real(psi, phi)
        A, C = out.source, out.target
        return QDistributor(A, C, {k: "0" for k in out.matrix})

    monkeypatch.setattr(laws, "compose_dist", faulty)
    rep = laws.dist_suite(small_cats, identities=False)
    assert "left unit law" in rep.laws()


def test_dist_suite_detects_broken_implication(small_cats, monkeypatch):
    real = laws.dist_left_implication

    def faulty(eta, phi):
        out = real(eta, phi)
        return QDistributor(out.source, out.target, {k: "1" for k in out.matrix})

    monkeypatch.setattr(laws, "dist_left_implication", faulty)
    assert "ξ∘φ ≤ η ⇔ ξ ≤ η↙φ" in laws.dist_suite(small_cats, identities=False).laws()


def test_distributor_and_adjunction_laws(small_cats):
    A, B = small_cats
    functors = list(enumerate_functors(A, B)) + list(enumerate_functors(B, B))
    assert laws.distributor_laws(small_cats, functors).ok
    assert laws.functor_adjunction_laws(B, B).ok
    assert laws.functor_adjunction_laws(A, B).ok


def test_presheaf_suite(small_cats, l3):
    A, B = small_cats
    assert laws.presheaf_suite(B, list(enumerate_functors(A, B))).ok
    assert laws.presheaf_suite(discrete(l3, ["a"]), deep=True).ok


def test_presheaf_suite_detects_broken_sup(small_cats, monkeypatch):
    def faulty(P, Phi):
        return P.elements[0]

    monkeypatch.setattr(laws, "presheaf_sup", faulty)
    assert "sup formula agrees with witness search" in laws.presheaf_suite(small_cats[1]).laws()


def test_left_adjoint_characterization(q2):
    from qlab.presheaf import PA
    A = PA(discrete(q2, ["a"]))
    B = PA(poset(q2, ["u", "v"], [("u", "v")]))
    assert laws.left_adjoint_characterization(A, B).ok


def test_closure_suite(small_cats):
    spaces = [identity_space(A) for A in small_cats]
    assert laws.closure_suite(spaces).ok


def test_isbell_and_kan_suites(ctx, l3):
    A, B, phi = ctx
    assert laws.isbell_suite(phi).ok
    assert laws.kan_suite(phi).ok
    A3, B3 = discrete(l3, ["a1", "a2"]), discrete(l3, ["b1", "b2"])
    psi = make_distributor(A3, B3, {("a1", "b1"): "1", ("a1", "b2"): "1/2", ("a2", "b2"): "1"})
    assert laws.isbell_suite(psi, deep=False).ok
    assert laws.kan_suite(psi, deep=False).ok


def test_isbell_suite_detects_broken_down(ctx, monkeypatch):
    A, B, phi = ctx

    def faulty(phi, lam):
        return Presheaf(phi.source, lam.type, tuple("0" for _ in phi.source.objects))

    monkeypatch.setattr(laws, "phi_down", faulty)
    assert "P†B(φ↑μ, λ) = PA(μ, φ↓λ)" in laws.isbell_suite(phi).laws()


def test_kan_suite_detects_broken_star(ctx, monkeypatch):
    A, B, phi = ctx

    def faulty(phi, lam):
        return Presheaf(phi.source, lam.type, tuple("1" for _ in phi.source.objects))

    monkeypatch.setattr(laws, "phi_star", faulty)
    assert "PA(φ*λ, μ) = PB(λ, φ_*μ)" in laws.kan_suite(phi).laws()


def test_functor_kan_laws(small_cats):
    A, B = small_cats
    for F in enumerate_functors(A, B):
        assert laws.functor_kan_laws(F).ok


def test_girard_suite(ctx, l3):
    A, B, phi = ctx
    assert laws.girard_suite([phi], [discrete(boolean(), ["a"])]).ok
    psi = make_distributor(discrete(l3, ["a"]), discrete(l3, ["b"]), {("a", "b"): "1/2"})
    assert laws.girard_suite([psi], [discrete(l3, ["a"])]).ok
