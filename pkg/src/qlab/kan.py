"""Kan adjunctions, pointwise Kan extensions and negation over Girard bases.

For ``φ: A ⇸ B`` the pair ``φ* ⊣ φ_* : PB ⇄ PA`` induces the closure
``φ_*∘φ*`` on ``PB``; its fixed points form ``K(φ)``.
"""
from __future__ import annotations

from typing import Optional

from .closure import QClosureSpace, closure_space
from .errors import BoundaryMismatch, PreconditionError
from .isbell import ConceptLattice, ConceptPair, _same, isbell_closure, phi_down, phi_up
from .presheaf import (CONTRA, CoPresheaf, Presheaf, _Weight, bound_search, enumerate_presheaves, pull_back,
                       sup_row, yoneda)
from .qcat import QCategory, QFunctor, enumerate_functors, functor_leq, right_adjoint, validate_functor
from .qdist import (QDistributor, cograph, column, dist_left_implication, dist_leq, dist_right_implication,
                    enumerate_distributors, graph)
from .quantaloid import Quantaloid
from .report import Report


def phi_star(phi: QDistributor, lam: Presheaf) -> Presheaf:
    """``φ*(λ) = λ∘φ``, i.e. ``x ↦ ⋁_y λ(y)∘φ(x, y)``."""
    A, B, q, X = phi.source, phi.target, phi.q, lam.type
    if not _same(lam.domain, B):
        raise BoundaryMismatch("presheaf does not live on the target of φ")
    cols = tuple(zip(B.objects, (B.t(y) for y in B.objects), lam.values))
    values = []
    for x in A.objects:
        tx = A.t(x)
        values.append(q.hom(tx, X).join_all(q.cmp(tx, ty, X, v, phi(x, y)) for y, ty, v in cols))
    return Presheaf(A, X, tuple(values))


def phi_lowstar(phi: QDistributor, mu: Presheaf) -> Presheaf:
    """``φ_*(μ) = μ↙φ``, i.e. ``y ↦ ⋀_x μ(x)↙φ(x, y)``."""
    A, B, q, X = phi.source, phi.target, phi.q, mu.type
    if not _same(mu.domain, A):
        raise BoundaryMismatch("presheaf does not live on the source of φ")
    rows = tuple(zip(A.objects, (A.t(x) for x in A.objects), mu.values))
    values = []
    for y in B.objects:
        ty = B.t(y)
        values.append(q.hom(ty, X).meet_all(q.lda(tx, ty, X, v, phi(x, y)) for x, tx, v in rows))
    return Presheaf(B, X, tuple(values))


def kan_closure(phi: QDistributor, cap: Optional[int] = None) -> QClosureSpace:
    """The closure space ``(B, φ_*∘φ*)``."""
    return closure_space(phi.target, lambda l: phi_lowstar(phi, phi_star(phi, l)), cap, name="φ_*φ*")


def kan_lattice(phi: QDistributor, cap: Optional[int] = None) -> ConceptLattice:
    """``K(φ)``: the presheaves on ``B`` fixed by ``φ_*∘φ*``; intents are omitted."""
    space = kan_closure(phi, cap)
    return ConceptLattice("kan", phi, tuple(ConceptPair(l) for l in space.closed), space.fixed_category)


def why_kan_check(F: QFunctor, cap: Optional[int] = None) -> Report:
    """Check ``(F^♮)_* = F← = (F_♮)*`` on ``PB`` and both Kan adjunctions."""
    rep = Report(module="kan")
    if not validate_functor(F).ok:
        raise PreconditionError("invalid functor")
    co, gr = cograph(F), graph(F)
    PA_ = enumerate_presheaves(F.source, CONTRA, cap)
    PB_ = enumerate_presheaves(F.target, CONTRA, cap)
    co_low = {lam: phi_lowstar(co, lam) for lam in PB_.elements}
    gr_star = {lam: phi_star(gr, lam) for lam in PB_.elements}
    co_star = {mu: phi_star(co, mu) for mu in PA_.elements}
    gr_low = {mu: phi_lowstar(gr, mu) for mu in PA_.elements}
    for lam in PB_.elements:
        a, b, c = co_low[lam], pull_back(F, lam), gr_star[lam]
        if not (a == b == c):
            rep.add("(F^♮)_* = F← = (F_♮)*", presheaf=lam.label, cograph_lowstar=a.label,
                    pullback=b.label, graph_star=c.label)
    for mu in PA_.elements:
        up = PB_.intern(co_star[mu])
        if not PA_.le(mu.label, PA_.intern(phi_lowstar(co, up)).label):
            rep.add("μ ≤ (F^♮)_*(F^♮)*μ", presheaf=mu.label)
        down = PB_.intern(gr_low[mu])
        if not PA_.le(PA_.intern(phi_star(gr, down)).label, mu.label):
            rep.add("(F_♮)*(F_♮)_*μ ≤ μ", presheaf=mu.label)
        for lam in PB_.elements:
            if PB_.hom_of(up, lam) != PA_.hom_of(mu, co_low[lam]):
                rep.add("PB((F^♮)*μ, λ) = PA(μ, (F^♮)_*λ)", mu=mu.label, lam=lam.label)
            if PA_.hom_of(gr_star[lam], mu) != PB_.hom_of(lam, down):
                rep.add("PA((F_♮)*λ, μ) = PB(λ, (F_♮)_*μ)", mu=mu.label, lam=lam.label)
    for lam in PB_.elements:
        down = PA_.intern(co_low[lam])
        if not PB_.le(PB_.intern(phi_star(co, down)).label, lam.label):
            rep.add("(F^♮)*(F^♮)_*λ ≤ λ", presheaf=lam.label)
        up = PA_.intern(gr_star[lam])
        if not PB_.le(lam.label, PB_.intern(phi_lowstar(gr, up)).label):
            rep.add("λ ≤ (F_♮)_*(F_♮)*λ", presheaf=lam.label)
    return rep


def pointwise_kan_extension(F: QFunctor, G: QFunctor, c: str) -> tuple[CoPresheaf, Optional[str]]:
    """``B↙((F^♮)*(G♮(−, c)))`` as a covariant presheaf on ``B``, plus a representing object.

    The representing object ``b`` satisfies ``B(b, −)`` equal to the result and
    is searched separately; ``None`` when absent.
    """
    if not _same(F.source, G.source):
        raise BoundaryMismatch("F and G need a common source")
    weight = column(graph(G), c)
    pushed = phi_star(cograph(F), weight)
    B = F.target
    values = sup_row(B, pushed)
    result = CoPresheaf(B, pushed.type, tuple(values[y] for y in B.objects))
    return result, bound_search(B, pushed, "sup")


def kan_functor(phi: QDistributor, cap: Optional[int] = None) -> QFunctor:
    """``φ*`` as a functor ``PB → PA``."""
    PA_ = enumerate_presheaves(phi.source, CONTRA, cap)
    PB_ = enumerate_presheaves(phi.target, CONTRA, cap)
    return QFunctor(PB_, PA_, {l.label: PA_.intern(phi_star(phi, l)).label for l in PB_.elements}, name="φ*")


def kan_poset_isomorphism(A: QCategory, B: QCategory, cap: Optional[int] = None) -> Report:
    """``φ ↦ φ*`` is an order-preserving bijection onto the left adjoints ``PB → PA``.

    The left adjoints are found by exhaustive functor enumeration; the inverse
    sends ``G`` to the distributor ``(x, y) ↦ G(Y y)(x)``.
    """
    rep = Report(module="kan")
    PA_ = enumerate_presheaves(A, CONTRA, cap)
    PB_ = enumerate_presheaves(B, CONTRA, cap)
    dists = list(enumerate_distributors(A, B))
    image = [kan_functor(phi, cap) for phi in dists]
    lefts = [G for G in enumerate_functors(PB_, PA_) if right_adjoint(G) is not None]
    if len(set(image)) != len(dists):
        rep.add("φ ↦ φ* is injective")
    if set(image) != set(lefts):
        rep.add("φ ↦ φ* hits exactly the left adjoints", image=len(set(image)), left_adjoints=len(lefts))
    for G in lefts:
        entries = {(x, y): PA_.element(G(PB_.intern(yoneda(B, y)).label))[x] for x in A.objects for y in B.objects}
        if kan_functor(QDistributor(A, B, entries), cap) != G:
            rep.add("G = (⌞G∘Y_B⌟)*", G=dict(G.mapping))
    for phi, star in zip(dists, image):
        for psi, star2 in zip(dists, image):
            if dist_leq(phi, psi) != functor_leq(star, star2):
                rep.add("φ ≤ ψ ⇔ φ* ≤ ψ*", phi=dict(phi.matrix), psi=dict(psi.matrix))
    return rep


# -- negation ----------------------------------------------------------------------

class GirardDistributorContext:
    """Negation on arrows, categories, distributors and (co)presheaves over a Girard base."""

    def __init__(self, q: Quantaloid):
        if not q.is_girard:
            raise PreconditionError(f"{q.name} is not a Girard quantaloid")
        self.q = q

    def neg_arrow(self, a: str, b: str, f: str) -> str:
        """``¬f = d_a↙f : b → a`` for ``f: a → b``."""
        return self.q.neg(a, b, f)

    def neg_category(self, A: QCategory) -> QDistributor:
        """``¬A : A ⇸ A`` with ``(¬A)(y, x) = ¬A(x, y)``."""
        return QDistributor(A, A, {(y, x): self.neg_arrow(A.t(x), A.t(y), A(x, y))
                                   for y in A.objects for x in A.objects}, name="¬A")

    def neg_dist(self, phi: QDistributor) -> QDistributor:
        """``¬φ = ¬A↙φ : B ⇸ A``."""
        return dist_left_implication(self.neg_category(phi.source), phi)

    def neg_dist_right(self, phi: QDistributor) -> QDistributor:
        """``¬φ = φ↘¬B``; agrees with :meth:`neg_dist` by cyclicity."""
        return dist_right_implication(phi, self.neg_category(phi.target))

    def neg_entrywise(self, phi: QDistributor) -> QDistributor:
        """``(¬φ)(y, x) = ¬φ(x, y)``."""
        A, B = phi.source, phi.target
        return QDistributor(B, A, {(y, x): self.neg_arrow(A.t(x), B.t(y), phi(x, y))
                                   for y in B.objects for x in A.objects})

    def neg_weight(self, w: _Weight) -> _Weight:
        """Presheaves and copresheaves swap: ``(¬μ)(x) = ¬μ(x)``."""
        A = w.domain
        if isinstance(w, Presheaf):
            return CoPresheaf(A, w.type, tuple(self.neg_arrow(A.t(x), w.type, w[x]) for x in A.objects))
        return Presheaf(A, w.type, tuple(self.neg_arrow(w.type, A.t(x), w[x]) for x in A.objects))


def neg_dist(ctx: GirardDistributorContext, phi: QDistributor) -> QDistributor:
    return ctx.neg_dist(phi)


def girard_kan_identity_check(ctx: GirardDistributorContext, phi: QDistributor,
                              cap: Optional[int] = None) -> Report:
    """Check ``φ* = ¬∘(¬φ)↑`` and ``φ_* = (¬φ)↓∘¬`` on every presheaf, and ``φ_*φ* = (¬φ)↓(¬φ)↑``."""
    rep = Report(module="kan")
    neg = ctx.neg_dist(phi)
    if neg != ctx.neg_dist_right(phi):
        rep.add("¬A↙φ = φ↘¬B", phi=phi.name)
    if neg != ctx.neg_entrywise(phi):
        rep.add("(¬φ)(y,x) = ¬φ(x,y)", phi=phi.name)
    if ctx.neg_dist(neg) != phi:
        rep.add("¬¬φ = φ", phi=phi.name)
    PA_ = enumerate_presheaves(phi.source, CONTRA, cap)
    PB_ = enumerate_presheaves(phi.target, CONTRA, cap)
    for lam in PB_.elements:
        if phi_star(phi, lam) != ctx.neg_weight(phi_up(neg, lam)):
            rep.add("φ* = ¬∘(¬φ)↑", presheaf=lam.label)
    for mu in PA_.elements:
        if phi_lowstar(phi, mu) != phi_down(neg, ctx.neg_weight(mu)):
            rep.add("φ_* = (¬φ)↓∘¬", presheaf=mu.label)
    if kan_closure(phi, cap).operator != isbell_closure(neg, cap).operator:
        rep.add("φ_*φ* = (¬φ)↓(¬φ)↑", phi=phi.name)
    return rep
