"""End-to-end acceptance checks; each prints a PASS/FAIL line in the terminal summary."""
import itertools
import random
import time
from fractions import Fraction

import pytest

from helpers import discrete, support
from oracles import (fca_concepts, fuzzy_down, fuzzy_subsethood, fuzzy_up, is_order_isomorphic, luk_implies,
                     macneille_cuts)
from qlab import boolean, lukasiewicz, make_distributor, rel_like
from qlab.closure import (QClosureSpace, canonical_closure, classify_endo, eta_unit, extension_candidates,
                          identity_space, is_continuous, triangle_functors, universal_extension)
from qlab.errors import NotContinuous
from qlab.isbell import (certify, concept_lattice, dense_pair_reconstruction, isbell_closure,
                         isbell_poset_isomorphism, phi_down, phi_up, zeta)
from qlab.kan import (GirardDistributorContext, girard_kan_identity_check, kan_closure, kan_lattice,
                      kan_poset_isomorphism, why_kan_check)
from qlab.laws import dist_suite, residuation_laws
from qlab.presheaf import PA, PdA, density_check
from qlab.qcat import QCategory, QFunctor, enumerate_categories, enumerate_functors, right_adjoint
from qlab.qdist import enumerate_distributors
from qlab.workspace import load_workspace

criterion = pytest.mark.criterion


class Clock:
    def __init__(self, bound):
        self.bound = bound
        self.start = time.perf_counter()

    def check(self):
        elapsed = time.perf_counter() - self.start
        assert elapsed < self.bound, f"took {elapsed:.2f}s, bound {self.bound}s"


def ctx_objects():
    q = boolean()
    A, B = discrete(q, ["x1", "x2"], "A"), discrete(q, ["y1", "y2"], "B")
    phi = make_distributor(A, B, {("x1", "y1"): "1", ("x1", "y2"): "1", ("x2", "y2"): "1"}, name="phi")
    return A, B, phi


def all_closure_spaces(A):
    P = PA(A)
    for C in enumerate_functors(P, P):
        if classify_endo(C).closure:
            yield QClosureSpace(A, tuple(P.position[P.element(C(e.label))] for e in P.elements), P)


@criterion(1, "quantaloid residuation on Q2, L3, L4, rel_like(2)", 1.0)
def test_criterion_1_residuation():
    clock = Clock(1.0)
    for q in (boolean(), lukasiewicz(3), lukasiewicz(4), rel_like(2)):
        rep = residuation_laws(q)
        assert rep.ok, rep
        # second route: each implication is the largest solution, found by scanning
        for a, b, x in itertools.product(q.objects, repeat=3):
            for f in q.hom(a, b).carrier:
                for g in q.hom(a, x).carrier:
                    sols = [h for h in q.hom(b, x).carrier if q.le(a, x, q.cmp(a, b, x, h, f), g)]
                    assert q.hom(b, x).join_all(sols) == q.lda(a, b, x, g, f)
    clock.check()


@criterion(2, "Q-Dist laws over discrete Q2 categories with at most 2 objects", 10.0)
def test_criterion_2_qdist():
    clock = Clock(10.0)
    q = boolean()
    rep = dist_suite([discrete(q, ["a"]), discrete(q, ["a", "b"])])
    assert rep.ok, rep
    clock.check()


@criterion(3, "Isbell adjunction on CTX and all 81 L3 2x2 matrices", 30.0)
def test_criterion_3_isbell_adjunction():
    clock = Clock(30.0)
    A, B, phi = ctx_objects()
    cases = [(phi, None)]
    l3 = lukasiewicz(3)
    A3, B3 = discrete(l3, ["a1", "a2"]), discrete(l3, ["b1", "b2"])
    cells = list(itertools.product(A3.objects, B3.objects))
    for values in itertools.product(l3.hom("*", "*").carrier, repeat=4):
        cases.append((make_distributor(A3, B3, dict(zip(cells, values))), luk_implies))
    assert len(cases) == 82
    violations = 0
    for psi, implies in cases:
        P, Pd = PA(psi.source), PdA(psi.target)
        xs, ys = psi.source.objects, psi.target.objects
        for mu in P.elements:
            up = phi_up(psi, mu)
            for lam in Pd.elements:
                if Pd.hom_of(up, lam) != P.hom_of(mu, phi_down(psi, lam)):
                    violations += 1
                if implies is None:
                    continue
                mat = {k: Fraction(v) for k, v in psi.matrix.items()}
                mu_d = {x: Fraction(mu[x]) for x in xs}
                lam_d = {y: Fraction(lam[y]) for y in ys}
                oracle_up = fuzzy_up(mu_d, mat, xs, ys, implies)
                oracle_down = fuzzy_down(lam_d, mat, xs, ys, implies)
                if {y: Fraction(v) for y, v in up.as_dict().items()} != oracle_up:
                    violations += 1
                lhs = fuzzy_subsethood(lam_d, oracle_up, implies)
                rhs = fuzzy_subsethood(mu_d, oracle_down, implies)
                if lhs != rhs or Fraction(Pd.hom_of(up, lam)) != lhs:
                    violations += 1
    assert violations == 0
    clock.check()


@criterion(4, "concept lattices of 50 random Boolean contexts match brute-force FCA", 10.0)
def test_criterion_4_fca_oracle():
    clock = Clock(10.0)
    q = boolean()
    rng = random.Random(2024)
    for _ in range(50):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        A = discrete(q, [f"g{i}" for i in range(n)])
        B = discrete(q, [f"m{j}" for j in range(m)])
        phi = make_distributor(A, B, {k: rng.choice("01") for k in itertools.product(A.objects, B.objects)})
        got = {(support(p.extent), support(p.intent)) for p in concept_lattice(phi).pairs}
        incidence = {k for k, v in phi.matrix.items() if v == "1"}
        assert got == fca_concepts(A.objects, B.objects, incidence)
    clock.check()


@criterion(5, "CTX point values of M(phi) and K(phi)", 1.0)
def test_criterion_5_ctx_values():
    clock = Clock(1.0)
    A, B, phi = ctx_objects()
    concepts = {(support(p.extent), support(p.intent)) for p in concept_lattice(phi).pairs}
    assert concepts == {(frozenset({"x1"}), frozenset({"y1", "y2"})),
                        (frozenset({"x1", "x2"}), frozenset({"y2"}))}
    fixed = [support(p.extent) for p in kan_lattice(phi).pairs]
    assert len(fixed) == 3
    assert set(fixed) == {frozenset(), frozenset({"y1"}), frozenset({"y1", "y2"})}
    clock.check()


@criterion(6, "MacNeille completion of antichain, fence and diamond-minus-top", 5.0)
def test_criterion_6_macneille():
    clock = Clock(5.0)
    ws = load_workspace("macneille")
    assert set(ws.categories) == {"antichain", "fence", "diamond_minus_top"}
    for name, P in ws.categories.items():
        leq = {(x, y) for x in P.objects for y in P.objects if P.le(x, y)}
        cuts = macneille_cuts(P.objects, leq)
        lattice = concept_lattice(ws.distributors[f"id_{name}"])
        extents = [support(e) for e in lattice.extents()]
        assert set(extents) == set(cuts)
        M = lattice.category
        assert is_order_isomorphic(M.objects, M.le, cuts, lambda s, t: s <= t)
    clock.check()


@criterion(7, "graph and cograph Kan identities for all Q2 functors on at most 3 objects and 20 random L3 functors", 60.0)
def test_criterion_7_functor_kan_identities():
    clock = Clock(60.0)
    q = boolean()
    cats = [C for n in (1, 2, 3) for C in enumerate_categories(q, [(f"o{i}", "*") for i in range(n)])]
    assert len(cats) == 1 + 4 + 29
    count = 0
    for A, B in itertools.product(cats, repeat=2):
        for F in enumerate_functors(A, B):
            rep = why_kan_check(F)
            assert rep.ok, rep
            count += 1
    assert count > 0
    l3 = lukasiewicz(3)
    l3_cats = [C for n in (1, 2, 3) for C in enumerate_categories(l3, [(f"o{i}", "*") for i in range(n)])]
    rng = random.Random(7)
    done = 0
    while done < 20:
        A, B = rng.choice(l3_cats), rng.choice(l3_cats)
        functors = list(enumerate_functors(A, B))
        if not functors:
            continue
        rep = why_kan_check(rng.choice(functors))
        assert rep.ok, rep
        done += 1
    clock.check()


@criterion(8, "Girard bridge on L3 for all 81 distributors between 2x2 discrete contexts", 30.0)
def test_criterion_8_girard():
    clock = Clock(30.0)
    l3 = lukasiewicz(3)
    ctx = GirardDistributorContext(l3)
    A, B = discrete(l3, ["a1", "a2"]), discrete(l3, ["b1", "b2"])
    dists = list(enumerate_distributors(A, B))
    assert len(dists) == 81
    for phi in dists:
        rep = girard_kan_identity_check(ctx, phi)
        assert rep.ok, rep
        neg = ctx.neg_dist(phi)
        for x, y in phi.cells():
            assert Fraction(neg(y, x)) == 1 - Fraction(phi(x, y))
    clock.check()


@criterion(9, "closure-space unit, naturality, universal extension and recovery from zeta", 60.0)
def test_criterion_9_closure_adjunctions():
    clock = Clock(60.0)
    A, B, phi = ctx_objects()
    spaces = {"A": list(all_closure_spaces(A)), "B": list(all_closure_spaces(B))}
    derived = [isbell_closure(phi), kan_closure(phi), identity_space(A), identity_space(B)]
    cats = {"A": A, "B": B}

    # the unit is continuous into the canonical closure of the fixed points, and ζ recovers the space
    for space in derived + spaces["A"] + spaces["B"]:
        eta = eta_unit(space)
        assert is_continuous(eta, space, canonical_closure(space.fixed_category))
        assert isbell_closure(zeta(space)).operator == space.operator
    # the closure table of CTX sends {x1} to {x1} and {x2} to {x1, x2}
    ctx_space = isbell_closure(phi)
    eta = eta_unit(ctx_space)
    assert support(ctx_space.presheaves.element(eta("x1"))) == {"x1"}
    assert support(ctx_space.presheaves.element(eta("x2"))) == {"x1", "x2"}

    # naturality F▷∘η_C = η_D∘F for 10 seeded random continuous maps
    rng = random.Random(9)
    pool = []
    for s, t in itertools.product("AB", repeat=2):
        for F in enumerate_functors(cats[s], cats[t]):
            for C, D in itertools.product(spaces[s], spaces[t]):
                if is_continuous(F, C, D):
                    pool.append((F, C, D))
    for F, C, D in rng.sample(pool, 10):
        right, _ = triangle_functors(F, C, D)
        eta_c, eta_d = eta_unit(C), eta_unit(D)
        assert all(right(eta_c(x)) == eta_d(F(x)) for x in F.source.objects)

    # universal extension into complete skeletal targets
    targets = [PA(B), PA(A), concept_lattice(phi).category]
    extended = 0
    for space in (isbell_closure(phi), identity_space(A)):
        eta = eta_unit(space)
        for T in targets:
            canon = canonical_closure(T)
            for F in enumerate_functors(A, T):
                if not is_continuous(F, space, canon):
                    with pytest.raises(NotContinuous):
                        universal_extension(F, space)
                    continue
                ext = universal_extension(F, space)
                assert right_adjoint(ext) is not None
                assert all(ext(eta(x)) == F(x) for x in A.objects)
                assert extension_candidates(F, space) == [ext]
                extended += 1
    assert extended > 0
    clock.check()


@criterion(10, "dense pair reconstruction and certification for CTX", 10.0)
def test_criterion_10_dense_pair():
    clock = Clock(10.0)
    A, B, phi = ctx_objects()
    lattice, F, G = dense_pair_reconstruction(phi)
    X = lattice.category
    assert density_check(F, "sup_dense")[0]
    assert density_check(G, "inf_dense")[0]
    assert all(X(F(x), G(y)) == phi(x, y) for x in A.objects for y in B.objects)
    cert = certify(X, F, G, phi)
    assert cert and sorted(cert.iso.mapping.values()) == sorted(X.objects)

    q = boolean()
    # wrong distributor
    other = make_distributor(A, B, {("x1", "y1"): "1", ("x2", "y2"): "1"})
    assert certify(X, F, G, other).witness["condition"] == "X(F−,G−) = φ"
    # target that is not complete
    Xd = discrete(q, ["p", "q"])
    bad = certify(Xd, QFunctor(A, Xd, {"x1": "p", "x2": "q"}), QFunctor(B, Xd, {"y1": "p", "y2": "q"}), phi)
    assert bad.witness["condition"] == "complete and skeletal"
    # three-element chain: F misses the middle, then G misses the lower part
    chain = QCategory.build(q, [("0", "*"), ("1", "*"), ("2", "*")],
                            {("0", "1"): "1", ("1", "2"): "1", ("0", "2"): "1"})
    one = discrete(q, ["s"])
    full = make_distributor(one, one, {("s", "s"): "1"})
    miss_f = certify(chain, QFunctor(one, chain, {"s": "0"}), QFunctor(one, chain, {"s": "2"}), full)
    assert miss_f.witness["condition"] == "F sup-dense" and miss_f.witness["object"] == "1"
    two = discrete(q, ["p", "r"])
    both = make_distributor(two, one, {("p", "s"): "1", ("r", "s"): "1"})
    miss_g = certify(chain, QFunctor(two, chain, {"p": "1", "r": "2"}), QFunctor(one, chain, {"s": "2"}), both)
    assert miss_g.witness["condition"] == "G inf-dense" and miss_g.witness["object"] == "0"
    clock.check()


@criterion(11, "Isbell and Kan poset isomorphisms on 1- and 2-object Q2 categories", 120.0)
def test_criterion_11_poset_isomorphisms():
    clock = Clock(120.0)
    q = boolean()
    cats = [C for n in (1, 2) for C in enumerate_categories(q, [(f"o{i}", "*") for i in range(n)])]
    assert len(cats) == 5
    for A, B in itertools.product(cats, repeat=2):
        rep = isbell_poset_isomorphism(A, B)
        assert rep.ok, rep
        rep = kan_poset_isomorphism(A, B)
        assert rep.ok, rep
    clock.check()
