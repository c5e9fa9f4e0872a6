"""Law suites run exhaustively over finite instances.

Each function returns a :class:`Report`; an empty report means every
instance of every law holds.  The suites are shared by the tests and the
``qlab check`` command.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

from .closure import (QClosureSpace, classify_endo, eta_unit, is_continuous, preimages_closed,
                      validate_closure_space)
from .isbell import concept_lattice, intent_category, isbell_closure, isbell_interior, phi_down, phi_up
from .kan import (GirardDistributorContext, girard_kan_identity_check, kan_lattice, phi_lowstar, phi_star,
                  why_kan_check)
from .presheaf import (CO, CONTRA, bound_search, enumerate_presheaves, is_complete, preserves_joins,
                       preserves_sups, preserves_tensors, presheaf_sup, tensor_formula, tensor_search, transport,
                       yoneda, yoneda_functor)
from .qcat import (QCategory, QFunctor, compose_functors, enumerate_functors, is_functor_adjunction,
                   right_adjoint, underlying_preorder, validate_category, validate_functor)
from .qdist import (QDistributor, cograph, column, compose_dist, dist_join, dist_left_implication, dist_leq,
                    dist_right_implication, enumerate_distributors, graph, identity_dist, is_dist_adjunction, row,
                    validate_distributor)
from .quantaloid import DualizingFamily, HomLattice, QArrow, Quantaloid, validate_dualizing_family, validate_quantaloid
from .report import Report


# -- quantaloid-level laws -------------------------------------------------------

def residuation_laws(q: Quantaloid, rep: Optional[Report] = None) -> Report:
    """``h∘f ≤ g ⇔ h ≤ g↙f`` and ``f∘h ≤ g ⇔ h ≤ f↘g`` over all typed triples."""
    rep = Report(module="quantaloid") if rep is None else rep
    objs = q.objects
    for a, b, x in itertools.product(objs, repeat=3):
        for f in q.hom(a, b).carrier:
            for g in q.hom(a, x).carrier:
                imp = q.lda(a, b, x, g, f)
                for h in q.hom(b, x).carrier:
                    if q.le(a, x, q.cmp(a, b, x, h, f), g) != q.le(b, x, h, imp):
                        rep.add("h∘f ≤ g ⇔ h ≤ g↙f", objects=(a, b, x), f=f, g=g, h=h)
    for a, b, x in itertools.product(objs, repeat=3):
        for f in q.hom(a, b).carrier:
            for g in q.hom(x, b).carrier:
                imp = q.rda(x, a, b, f, g)
                for h in q.hom(x, a).carrier:
                    if q.le(x, b, q.cmp(x, a, b, f, h), g) != q.le(x, a, h, imp):
                        rep.add("f∘h ≤ g ⇔ h ≤ f↘g", objects=(a, b, x), f=f, g=g, h=h)
    return rep


def adjoint_pairs(q: Quantaloid) -> list[tuple[str, str, str, str]]:
    """All ``(A, B, f, g)`` with ``f ⊣ g`` for ``f: A → B``."""
    found = []
    for a, b in itertools.product(q.objects, repeat=2):
        for f in q.hom(a, b).carrier:
            for g in q.hom(b, a).carrier:
                if (q.le(a, a, q.unit(a), q.cmp(a, b, a, g, f))
                        and q.le(b, b, q.cmp(b, a, b, f, g), q.unit(b))):
                    found.append((a, b, f, g))
    return found


def adjoint_arrow_identities(q: Quantaloid, rep: Optional[Report] = None) -> Report:
    """The four identity groups satisfied by every adjoint pair ``f ⊣ g``."""
    rep = Report(module="quantaloid") if rep is None else rep
    objs = q.objects
    H = lambda s, t: q.hom(s, t).carrier  # noqa: E731
    for a, b, f, g in adjoint_pairs(q):
        w = dict(A=a, B=b, f=f, g=g)
        for x in objs:
            for h in H(b, x):
                if q.cmp(a, b, x, h, f) != q.lda(b, a, x, h, g):
                    rep.add("(1) h∘f = h↙g", h=h, X=x, **w)
            for h in H(x, b):
                if q.cmp(x, b, a, g, h) != q.rda(x, a, b, f, h):
                    rep.add("(1) g∘h = f↘h", h=h, X=x, **w)
        for x, y in itertools.product(objs, repeat=2):
            # (2) h: X→A, h': Y→B  and  h: A→X, h': B→Y
            for h in H(x, a):
                fh = q.cmp(x, a, b, f, h)
                for h2 in H(y, b):
                    if q.rda(y, x, b, fh, h2) != q.rda(y, x, a, h, q.cmp(y, b, a, g, h2)):
                        rep.add("(2) (f∘h)↘h' = h↘(g∘h')", h=h, h_prime=h2, X=x, Y=y, **w)
            for h in H(a, x):
                hg = q.cmp(b, a, x, h, g)
                for h2 in H(b, y):
                    if q.lda(a, x, y, q.cmp(a, b, y, h2, f), h) != q.lda(b, x, y, h2, hg):
                        rep.add("(2) (h'∘f)↙h = h'↙(h∘g)", h=h, h_prime=h2, X=x, Y=y, **w)
            # (3) h: X→Y, h': B→Y  and  h: X→Y, h': X→B
            for h in H(x, y):
                for h2 in H(b, y):
                    left = q.cmp(a, b, x, q.rda(b, x, y, h, h2), f)
                    if left != q.rda(a, x, y, h, q.cmp(a, b, y, h2, f)):
                        rep.add("(3) (h↘h')∘f = h↘(h'∘f)", h=h, h_prime=h2, X=x, Y=y, **w)
                for h2 in H(x, b):
                    left = q.cmp(y, b, a, g, q.lda(x, y, b, h2, h))
                    if left != q.lda(x, y, a, q.cmp(x, b, a, g, h2), h):
                        rep.add("(3) g∘(h'↙h) = (g∘h')↙h", h=h, h_prime=h2, X=x, Y=y, **w)
            # (4) h: B→X, h': Y→X  and  h: Y→B, h': Y→X
            for h in H(b, x):
                hf = q.cmp(a, b, x, h, f)
                for h2 in H(y, x):
                    if q.cmp(y, b, a, g, q.rda(y, b, x, h, h2)) != q.rda(y, a, x, hf, h2):
                        rep.add("(4) g∘(h↘h') = (h∘f)↘h'", h=h, h_prime=h2, X=x, Y=y, **w)
            for h in H(y, b):
                gh = q.cmp(y, b, a, g, h)
                for h2 in H(y, x):
                    if q.cmp(a, b, x, q.lda(y, b, x, h2, h), f) != q.lda(y, a, x, h2, gh):
                        rep.add("(4) (h'↙h)∘f = h'↙(g∘h)", h=h, h_prime=h2, X=x, Y=y, **w)
    return rep


def girard_identities(q: Quantaloid, family: DualizingFamily, rep: Optional[Report] = None) -> Report:
    """Identities of a dualizing family for ``f: A→B``, ``g: B→C``, ``h: A→C``."""
    rep = Report(module="quantaloid") if rep is None else rep
    d = family.d
    for a, b, c in itertools.product(q.objects, repeat=3):
        da, db, dc = d[a], d[b], d[c]
        for f in q.hom(a, b).carrier:
            for g in q.hom(b, c).carrier:
                gf = q.cmp(a, b, c, g, f)
                first = q.lda(c, a, c, dc, q.rda(c, a, b, f, q.rda(c, b, c, g, dc)))
                second = q.rda(a, c, a, q.lda(b, c, a, q.lda(a, b, a, da, f), g), da)
                if not gf == first == second:
                    rep.add("(1) g∘f = d_C↙(f↘(g↘d_C)) = ((d_A↙f)↙g)↘d_A", objects=(a, b, c), f=f, g=g)
            for h in q.hom(a, c).carrier:
                left = q.rda(c, b, c, q.lda(a, b, c, h, f), dc)
                if left != q.cmp(c, a, b, f, q.rda(c, a, c, h, dc)):
                    rep.add("(2) (h↙f)↘d_C = f∘(h↘d_C)", objects=(a, b, c), f=f, h=h)
        for g in q.hom(b, c).carrier:
            for h in q.hom(a, c).carrier:
                left = q.lda(a, b, a, da, q.rda(a, b, c, g, h))
                if left != q.cmp(b, c, a, q.lda(a, c, a, da, h), g):
                    rep.add("(2) d_A↙(g↘h) = (d_A↙h)∘g", objects=(a, b, c), g=g, h=h)
            for f in q.hom(a, b).carrier:
                left = q.rda(a, c, b, q.lda(b, c, b, db, g), f)
                if left != q.lda(b, a, c, g, q.rda(b, a, b, f, db)):
                    rep.add("(3) (d_B↙g)↘f = g↙(f↘d_B)", objects=(a, b, c), f=f, g=g)
    return rep


def negation_laws(q: Quantaloid, family: DualizingFamily, rep: Optional[Report] = None) -> Report:
    """``¬`` is an antitone involution."""
    rep = Report(module="quantaloid") if rep is None else rep
    d = family.d
    neg = lambda a, b, f: q.lda(a, b, a, d[a], f)  # noqa: E731
    for a, b in itertools.product(q.objects, repeat=2):
        for f in q.hom(a, b).carrier:
            if neg(b, a, neg(a, b, f)) != f:
                rep.add("¬¬f = f", src=a, dst=b, f=f)
            for g in q.hom(a, b).carrier:
                if q.le(a, b, f, g) and not q.le(b, a, neg(a, b, g), neg(a, b, f)):
                    rep.add("f ≤ g ⇒ ¬g ≤ ¬f", src=a, dst=b, f=f, g=g)
    return rep


def quantaloid_suite(q: Quantaloid) -> Report:
    rep = validate_quantaloid(q)
    if rep.structural_errors:
        return rep
    residuation_laws(q, rep)
    adjoint_arrow_identities(q, rep)
    if q.dualizing is not None and q.is_girard:
        girard_identities(q, q.dualizing, rep)
        negation_laws(q, q.dualizing, rep)
    return rep


# -- Q-Dist as a finite quantaloid ------------------------------------------------

def _dist_label(phi: QDistributor) -> str:
    return ",".join(phi(x, y) for x, y in phi.cells()) or "∅"


class DistQuantaloid:
    """``Q-Dist`` restricted to the given categories, tabulated as a :class:`Quantaloid`.

    Composition, order, joins and meets come from the distributor-level
    operations, so validating the table checks those operations.  The
    formula implications are kept separately in :meth:`formula_lda` /
    :meth:`formula_rda` for comparison against the table's brute-force ones.
    """

    def __init__(self, categories: Sequence[QCategory]):
        self.categories = {f"C{i}": A for i, A in enumerate(categories)}
        names = tuple(self.categories)
        self.arrows: dict = {}
        self.by_label: dict = {}
        homs = {}
        for s, t in itertools.product(names, repeat=2):
            A, B = self.categories[s], self.categories[t]
            items = list(enumerate_distributors(A, B))
            self.arrows[s, t] = items
            labels = [_dist_label(p) for p in items]
            self.by_label[s, t] = dict(zip(labels, items))
            leq = {(labels[i], labels[j]) for i, p in enumerate(items) for j, r in enumerate(items) if dist_leq(p, r)}
            find = self.by_label[s, t]
            joins, meets = {}, {}
            for p, r in itertools.product(items, repeat=2):
                lp, lr = _dist_label(p), _dist_label(r)
                joins[lp, lr] = _dist_label(dist_join([p, r], A, B))
                meets[lp, lr] = _dist_label(_dist_meet(p, r))
            bottom = _dist_label(dist_join([], A, B))
            top = _dist_label(_dist_meet_all([], A, B))
            assert bottom in find and top in find
            homs[s, t] = HomLattice(tuple(labels), frozenset(leq), joins, meets, top, bottom)
        tables = {}
        for s, m, t in itertools.product(names, repeat=3):
            tables[s, m, t] = {(_dist_label(psi), _dist_label(phi)): _dist_label(compose_dist(psi, phi))
                               for phi in self.arrows[s, m] for psi in self.arrows[m, t]}
        units = {s: _dist_label(identity_dist(self.categories[s])) for s in names}
        dualizing = None
        q = next(iter(self.categories.values())).q if self.categories else None
        if q is not None and q.is_girard:
            ctx = GirardDistributorContext(q)
            dualizing = DualizingFamily({s: _dist_label(ctx.neg_category(A)) for s, A in self.categories.items()})
        self.quantaloid = Quantaloid(names, homs, tables, units, dualizing, name="Q-Dist")

    def dist(self, s: str, t: str, label: str) -> QDistributor:
        return self.by_label[s, t][label]

    def formula_lda(self, a, b, x, g, f) -> str:
        return _dist_label(dist_left_implication(self.dist(a, x, g), self.dist(a, b, f)))

    def formula_rda(self, x, a, b, f, g) -> str:
        return _dist_label(dist_right_implication(self.dist(a, b, f), self.dist(x, b, g)))


def _dist_meet(p: QDistributor, r: QDistributor) -> QDistributor:
    A, B, q = p.source, p.target, p.q
    return QDistributor(A, B, {(x, y): q.hom(A.t(x), B.t(y)).meet(p(x, y), r(x, y)) for x, y in p.cells()})


def _dist_meet_all(items, A, B) -> QDistributor:
    q = A.q
    return QDistributor(A, B, {(x, y): q.hom(A.t(x), B.t(y)).meet_all(p(x, y) for p in items)
                               for x in A.objects for y in B.objects})


def dist_suite(categories: Sequence[QCategory], identities: bool = True) -> Report:
    """Quantaloid laws of ``Q-Dist`` on the given categories plus formula residuation."""
    dq = DistQuantaloid(categories)
    q = dq.quantaloid
    rep = Report(module="qdist")
    for v in validate_quantaloid(q):
        rep.add(v.law, v.structural, **v.witness)
    names = q.objects
    for a, b, x in itertools.product(names, repeat=3):
        for f in q.hom(a, b).carrier:
            for g in q.hom(a, x).carrier:
                imp = dq.formula_lda(a, b, x, g, f)
                for h in q.hom(b, x).carrier:
                    if q.le(a, x, q.cmp(a, b, x, h, f), g) != q.le(b, x, h, imp):
                        rep.add("ξ∘φ ≤ η ⇔ ξ ≤ η↙φ", objects=(a, b, x), phi=f, eta=g, xi=h)
        for f in q.hom(a, b).carrier:
            for g in q.hom(x, b).carrier:
                imp = dq.formula_rda(x, a, b, f, g)
                for h in q.hom(x, a).carrier:
                    if q.le(x, b, q.cmp(x, a, b, f, h), g) != q.le(x, a, h, imp):
                        rep.add("ψ∘ξ ≤ η ⇔ ξ ≤ ψ↘η", objects=(a, b, x), psi=f, eta=g, xi=h)
    if identities:
        adjoint_arrow_identities(q, rep)
    return rep


def distributor_laws(categories: Sequence[QCategory], functors: Iterable[QFunctor] = ()) -> Report:
    """Graph/cograph adjunctions, fully faithful and essentially surjective identities, row/column notation."""
    rep = Report(module="qdist")
    for F in functors:
        gr, co = graph(F), cograph(F)
        if not is_dist_adjunction(gr, co):
            rep.add("F♮ ⊣ F^♮", functor=F.name)
        if validate_functor(F).is_fully_faithful and compose_dist(co, gr) != identity_dist(F.source):
            rep.add("fully faithful ⇒ F^♮∘F♮ = 1", functor=F.name)
        B = F.target
        surjective = all(any(B.iso(y, F(x)) for x in F.source.objects) for y in B.objects)
        if surjective and compose_dist(gr, co) != identity_dist(B):
            rep.add("essentially surjective ⇒ F♮∘F^♮ = 1", functor=F.name)
    for A, B, C in itertools.product(categories, repeat=3):
        for phi in enumerate_distributors(A, B):
            for psi in enumerate_distributors(B, C):
                comp = compose_dist(psi, phi)
                for x in A.objects:
                    # (ψ∘φ)(x,−) = ψ∘φ(x,−): row of a composite is the composite with the row
                    expected = tuple(
                        A.q.hom(A.t(x), C.t(z)).join_all(
                            A.q.cmp(A.t(x), B.t(y), C.t(z), psi(y, z), row(phi, x)[y]) for y in B.objects)
                        for z in C.objects)
                    if row(comp, x).values != expected:
                        rep.add("(ψ∘φ)(x,−) = ψ∘φ(x,−)", x=x)
    return rep


# -- category level ------------------------------------------------------------------

def functor_adjunction_laws(A: QCategory, B: QCategory) -> Report:
    """For every adjunction ``F ⊣ G`` found exhaustively, ``F♮ = G^♮`` and ``G♮ ⊣ F♮``."""
    rep = Report(module="qcat")
    Fs = list(enumerate_functors(A, B))
    Gs = list(enumerate_functors(B, A))
    for F in Fs:
        for G in Gs:
            adj = is_functor_adjunction(F, G)
            hom_eq = all(B(F(x), y) == A(x, G(y)) for x in A.objects for y in B.objects)
            if adj != hom_eq:
                rep.add("F ⊣ G ⇔ B(F−,−) = A(−,G−)", F=F.mapping, G=G.mapping)
            if adj:
                if graph(F).matrix != cograph(G).matrix:
                    rep.add("F♮ = G^♮", F=F.mapping, G=G.mapping)
                if not is_dist_adjunction(graph(G), graph(F)):
                    rep.add("G♮ ⊣ F♮", F=F.mapping, G=G.mapping)
                if classify_endo(compose_functors(G, F)).kind != "closure":
                    rep.add("G∘F is a closure operator", F=F.mapping, G=G.mapping)
                if not classify_endo(compose_functors(F, G)).interior:
                    rep.add("F∘G is an interior operator", F=F.mapping, G=G.mapping)
        found = right_adjoint(F)
        exhaustive = [G for G in Gs if is_functor_adjunction(F, G)]
        if (found is None) != (not exhaustive):
            rep.add("right adjoint search agrees with exhaustive scan", F=F.mapping)
    return rep


# -- presheaf level ------------------------------------------------------------------

def presheaf_suite(A: QCategory, functors: Iterable[QFunctor] = (), cap: Optional[int] = None,
                   deep: bool = True) -> Report:
    """Yoneda, completeness, transport adjunctions and tensor formulas on ``A``.

    ``deep`` additionally checks completeness of ``PA`` and ``P†A``, which
    needs presheaves on the presheaf categories.
    """
    rep = Report(module="presheaf")
    for variance in (CONTRA, CO):
        P = enumerate_presheaves(A, variance, cap)
        if not validate_category(P).ok:
            rep.add("presheaf category is a Q-category", variance=variance)
        if not underlying_preorder(P).skeletal:
            rep.add("presheaf category is skeletal", variance=variance)
        Y = yoneda_functor(A, variance, cap)
        if not validate_functor(Y).is_fully_faithful:
            rep.add("Yoneda embedding is fully faithful", variance=variance)
        for a in A.objects:
            ya = yoneda(A, a, variance)
            for m in P.elements:
                value = P.hom_of(ya, m) if variance == CONTRA else P.hom_of(m, ya)
                if value != m[a]:
                    rep.add("Yoneda lemma", variance=variance, a=a, presheaf=m.label)
        for m in P.elements:
            for X in A.q.objects:
                for f in A.q.hom(m.type, X).carrier:
                    arrow = QArrow(m.type, X, f)
                    if tensor_formula(P, arrow, m, "tensor").label != tensor_search(P, arrow, m.label, "tensor"):
                        rep.add("tensor closed form", variance=variance, presheaf=m.label, f=f, X=X)
                for f in A.q.hom(X, m.type).carrier:
                    arrow = QArrow(X, m.type, f)
                    if tensor_formula(P, arrow, m, "cotensor").label != tensor_search(P, arrow, m.label, "cotensor"):
                        rep.add("cotensor closed form", variance=variance, presheaf=m.label, f=f, X=X)
        if deep:
            report = is_complete(P, cap)
            if not report.complete:
                rep.add("presheaf category is complete", variance=variance)
            if variance == CONTRA:
                PP = enumerate_presheaves(P, CONTRA, cap)
                graph_y = graph(yoneda_functor(A, CONTRA, cap))
                for Phi in PP.elements:
                    s = presheaf_sup(P, Phi)
                    if s.label != bound_search(P, Phi, "sup"):
                        rep.add("sup formula agrees with witness search", weight=Phi.label)
                    via_graph = tuple(
                        A.q.hom(A.t(x), Phi.type).join_all(
                            A.q.cmp(A.t(x), P.t(m), Phi.type, Phi[m], graph_y(x, m)) for m in P.objects)
                        for x in A.objects)
                    if s.values != via_graph:
                        rep.add("sup Φ = Φ∘(Y_A)♮", weight=Phi.label)
    for F in functors:
        fwd, bwd = transport(F, "forward", CONTRA, cap), transport(F, "backward", CONTRA, cap)
        if not is_functor_adjunction(fwd, bwd):
            rep.add("F→ ⊣ F←", functor=F.name)
        cofwd, cobwd = transport(F, "forward", CO, cap), transport(F, "backward", CO, cap)
        if not is_functor_adjunction(cobwd, cofwd):
            rep.add("F⇐ ⊣ F⇒", functor=F.name)
        YA, YB = yoneda_functor(F.source, CONTRA, cap), yoneda_functor(F.target, CONTRA, cap)
        for x in F.source.objects:
            if YB(F(x)) != fwd(YA(x)):
                rep.add("Y_B∘F = F→∘Y_A", functor=F.name, x=x)
    return rep


def left_adjoint_characterization(A: QCategory, B: QCategory, cap: Optional[int] = None) -> Report:
    """For ``A`` complete: left adjoint ⇔ tensors and joins preserved ⇔ sups preserved."""
    rep = Report(module="presheaf")
    for F in enumerate_functors(A, B):
        la = right_adjoint(F) is not None
        tj = preserves_tensors(F) and preserves_joins(F)
        sp = preserves_sups(F, cap)
        if not la == tj == sp:
            rep.add("left adjoint ⇔ tensors+joins ⇔ sups", F=F.mapping, left_adjoint=la,
                    tensors_joins=tj, sups=sp)
    return rep


# -- closure / isbell / kan -----------------------------------------------------------

def closure_suite(spaces: Iterable[QClosureSpace], maps: Iterable[tuple] = (), cap: Optional[int] = None) -> Report:
    rep = Report(module="closure")
    for space in spaces:
        rep.extend(validate_closure_space(space))
        eta = eta_unit(space)
        if not validate_functor(eta).ok:
            rep.add("η is a functor", space=space.name)
        C = space.as_functor()
        if classify_endo(C).kind != "closure":
            rep.add("operator is a closure operator", space=space.name)
    for F, C, D in maps:
        cont = is_continuous(F, C, D)
        if cont != preimages_closed(F, C, D):
            rep.add("continuity ⇔ preimages of closed are closed", functor=F.name)
    return rep


def isbell_suite(phi: QDistributor, cap: Optional[int] = None, deep: bool = True) -> Report:
    """Isbell adjunction, closure and concept-lattice laws; ``deep`` adds completeness of ``M(φ)``."""
    rep = Report(module="isbell")
    A, B = phi.source, phi.target
    PA_ = enumerate_presheaves(A, CONTRA, cap)
    PdB = enumerate_presheaves(B, CO, cap)
    for m in PA_.elements:
        up = PdB.intern(phi_up(phi, m))
        for l in PdB.elements:
            if PdB.hom_of(up, l) != PA_.hom_of(m, phi_down(phi, l)):
                rep.add("P†B(φ↑μ, λ) = PA(μ, φ↓λ)", mu=m.label, lam=l.label)
    space = isbell_closure(phi, cap)
    rep.extend(validate_closure_space(space))
    for y in B.objects:
        if not space.is_closed(PA_.intern(column(phi, y))):
            rep.add("columns are closed", y=y)
    inner = isbell_interior(phi, cap)
    for x in A.objects:
        r = PdB.intern(row(phi, x))
        if inner(r.label) != r.label:
            rep.add("rows are interior-fixed", x=x)
        if phi_up(phi, yoneda(A, x)) != row(phi, x):
            rep.add("φ↑∘Y = rows", x=x)
    for y in B.objects:
        if phi_down(phi, yoneda(B, y, CO)) != column(phi, y):
            rep.add("φ↓∘Y† = columns", y=y)
    lattice = concept_lattice(phi, cap)
    M = lattice.category
    intents = intent_category(lattice, cap)
    for i, p in enumerate(lattice.pairs):
        if phi_down(phi, p.intent) != p.extent:
            rep.add("φ↓ inverts φ↑ on fixed points", extent=p.extent.label)
        for j, r in enumerate(lattice.pairs):
            if PA_.hom_of(p.extent, r.extent) != PdB.hom_of(p.intent, r.intent):
                rep.add("PA(μ1,μ2) = P†B(λ1,λ2)", i=i, j=j)
    if len(set(intents.objects)) != len(lattice):
        rep.add("π₂ is injective")
    if deep and not is_complete(M, cap).complete:
        rep.add("M(φ) is complete")
    return rep


def kan_suite(phi: QDistributor, cap: Optional[int] = None, deep: bool = True) -> Report:
    """Kan adjunction laws; ``deep`` adds completeness of ``K(φ)``."""
    rep = Report(module="kan")
    A, B = phi.source, phi.target
    PA_ = enumerate_presheaves(A, CONTRA, cap)
    PB_ = enumerate_presheaves(B, CONTRA, cap)
    for l in PB_.elements:
        star = phi_star(phi, l)
        for m in PA_.elements:
            if PA_.hom_of(star, m) != PB_.hom_of(l, phi_lowstar(phi, m)):
                rep.add("PA(φ*λ, μ) = PB(λ, φ_*μ)", lam=l.label, mu=m.label)
    for y in B.objects:
        if phi_star(phi, yoneda(B, y)) != column(phi, y):
            rep.add("φ*∘Y_B = columns", y=y)
    lattice = kan_lattice(phi, cap)
    if deep and not is_complete(lattice.category, cap).complete:
        rep.add("K(φ) is complete")
    return rep


def functor_kan_laws(F: QFunctor, cap: Optional[int] = None) -> Report:
    rep = why_kan_check(F, cap)
    if validate_functor(F).is_fully_faithful:
        co, gr = cograph(F), graph(F)
        K = kan_lattice(co, cap)
        PA_ = enumerate_presheaves(F.source, CONTRA, cap)
        if [p.extent for p in K.pairs] != list(PA_.elements):
            rep.add("K(F^♮) = PA for fully faithful F", functor=F.name)
        for m in PA_.elements:
            if phi_star(gr, phi_star(co, m)) != m:
                rep.add("(F^♮)*(μ)∘F♮ = μ", presheaf=m.label)
            if phi_star(gr, phi_lowstar(gr, m)) != m:
                rep.add("(F♮)_*(μ)∘F♮ = μ", presheaf=m.label)
    return rep


def girard_suite(distributors: Iterable[QDistributor], categories: Sequence[QCategory] = (),
                 cap: Optional[int] = None) -> Report:
    rep = Report(module="girard")
    for phi in distributors:
        ctx = GirardDistributorContext(phi.q)
        rep.extend(girard_kan_identity_check(ctx, phi, cap))
        negA = ctx.neg_category(phi.source)
        if not validate_distributor(negA).ok:
            rep.add("¬A is a distributor", category=phi.source.name)
    if categories:
        dq = DistQuantaloid(categories)
        q = dq.quantaloid
        if q.dualizing is None:
            rep.add("Q-Dist negation family exists")
        else:
            for v in validate_dualizing_family(q, q.dualizing):
                rep.add(f"Q-Dist family: {v.law}", **v.witness)
    return rep
