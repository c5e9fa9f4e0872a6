"""Isbell adjunctions and the complete categories of concept pairs.

For ``φ: A ⇸ B`` the pair ``φ↑ ⊣ φ↓ : PA ⇄ P†B`` induces the closure
``φ↓∘φ↑`` on ``PA``.  Its fixed points, paired with their intents, form
``M(φ)``; over the two-element base this is the formal concept lattice of
the incidence matrix ``φ``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .closure import QClosureSpace, closure_space, continuous_map, ContinuousMap
from .errors import BoundaryMismatch, PreconditionError
from .presheaf import (CO, CONTRA, CoPresheaf, Presheaf, bound_search, density_check,
                       enumerate_presheaves, is_complete, yoneda)
from .qcat import (QCategory, QFunctor, enumerate_functors, full_subcategory, functor_leq, identity_functor,
                   right_adjoint, underlying_preorder)
from .qdist import (Infomorphism, QDistributor, cograph, column, dist_leq, enumerate_distributors, graph,
                    is_infomorphism, row)
from .report import Report


def _same(A: QCategory, B: QCategory) -> bool:
    return A is B or A == B


def phi_up(phi: QDistributor, mu: Presheaf) -> CoPresheaf:
    """``φ↑(μ) = φ↙μ``, i.e. ``y ↦ ⋀_x φ(x, y)↙μ(x)``."""
    A, B, q, X = phi.source, phi.target, phi.q, mu.type
    if not _same(mu.domain, A):
        raise BoundaryMismatch("presheaf does not live on the source of φ")
    return CoPresheaf(B, X, tuple(
        q.hom(X, B.t(y)).meet_all(q.lda(A.t(x), X, B.t(y), phi(x, y), mu[x]) for x in A.objects)
        for y in B.objects))


def phi_down(phi: QDistributor, lam: CoPresheaf) -> Presheaf:
    """``φ↓(λ) = λ↘φ``, i.e. ``x ↦ ⋀_y λ(y)↘φ(x, y)``."""
    A, B, q, X = phi.source, phi.target, phi.q, lam.type
    if not _same(lam.domain, B):
        raise BoundaryMismatch("copresheaf does not live on the target of φ")
    return Presheaf(A, X, tuple(
        q.hom(A.t(x), X).meet_all(q.rda(A.t(x), X, B.t(y), lam[y], phi(x, y)) for y in B.objects)
        for x in A.objects))


def isbell_closure(phi: QDistributor, cap: Optional[int] = None) -> QClosureSpace:
    """The closure space ``(A, φ↓∘φ↑)``."""
    return closure_space(phi.source, lambda m: phi_down(phi, phi_up(phi, m)), cap, name="φ↓φ↑")


def isbell_interior(phi: QDistributor, cap: Optional[int] = None) -> QFunctor:
    """``φ↑∘φ↓`` as an endofunctor of ``P†B``."""
    P = enumerate_presheaves(phi.target, CO, cap)
    return QFunctor(P, P, {l.label: P.intern(phi_up(phi, phi_down(phi, l))).label for l in P.elements},
                    name="φ↑φ↓")


@dataclass(frozen=True)
class ConceptPair:
    extent: Presheaf
    intent: Optional[CoPresheaf] = None

    @property
    def type(self) -> str:
        return self.extent.type


@dataclass(frozen=True, eq=False)
class ConceptLattice:
    """Fixed points of the Isbell (``kind="isbell"``) or Kan (``kind="kan"``) closure.

    ``category`` is the full subcategory of the presheaf category on the
    extents; its objects are the extent labels in canonical order.
    """

    kind: str
    phi: QDistributor
    pairs: tuple[ConceptPair, ...]
    category: QCategory

    def __len__(self) -> int:
        return len(self.pairs)

    def extents(self) -> list[Presheaf]:
        return [p.extent for p in self.pairs]

    def hom(self, i: int, j: int) -> str:
        return self.category(self.pairs[i].extent.label, self.pairs[j].extent.label)

    def pair_of(self, label: str) -> ConceptPair:
        for p in self.pairs:
            if p.extent.label == label:
                return p
        raise KeyError(label)


def concept_lattice(phi: QDistributor, cap: Optional[int] = None) -> ConceptLattice:
    """``M(φ)``: every closed presheaf paired with its intent ``φ↑μ``."""
    space = isbell_closure(phi, cap)
    pairs = tuple(ConceptPair(m, phi_up(phi, m)) for m in space.closed)
    return ConceptLattice("isbell", phi, pairs, space.fixed_category)


def intent_category(lattice: ConceptLattice, cap: Optional[int] = None) -> QCategory:
    """The intents as a full subcategory of ``P†B``, in the order of ``lattice.pairs``."""
    P = enumerate_presheaves(lattice.phi.target, CO, cap)
    return full_subcategory(P, [P.intern(p.intent).label for p in lattice.pairs])


def infomorphism_to_continuous(info: Infomorphism, cap: Optional[int] = None) -> ContinuousMap:
    """``U(F, G) = F : (A, φ↓φ↑) → (A′, ψ↓ψ↑)``."""
    if not is_infomorphism(info.F, info.G, info.phi, info.psi):
        raise PreconditionError("not an infomorphism")
    return continuous_map(info.F, isbell_closure(info.phi, cap), isbell_closure(info.psi, cap))


def zeta(space: QClosureSpace) -> QDistributor:
    """``ζ_C(x, μ) = μ(x)`` from ``A`` to the closed presheaves."""
    A, M = space.base, space.fixed_category
    P = space.presheaves
    return QDistributor(A, M, {(x, m): P.element(m)[x] for x in A.objects for m in M.objects}, name="ζ")


def _require_complete_skeletal(B: QCategory, cap) -> None:
    if not is_complete(B, cap).complete:
        raise PreconditionError("target category is not complete")
    if not underlying_preorder(B).skeletal:
        raise PreconditionError("target category is not skeletal")


def is_state_property_system(A: QCategory, B: QCategory, phi: QDistributor,
                             cap: Optional[int] = None) -> tuple[bool, Optional[str]]:
    """Check ``φ(−, inf λ) = λ↘φ`` for all ``λ ∈ P†B`` and ``B(y, y′) = φ(−, y′)↙φ(−, y)``.

    Returns the verdict and the name of the first failing condition.
    """
    if not (_same(phi.source, A) and _same(phi.target, B)):
        raise BoundaryMismatch("φ must run from A to B")
    _require_complete_skeletal(B, cap)
    for lam in enumerate_presheaves(B, CO, cap).elements:
        b = bound_search(B, lam, "inf")
        if column(phi, b) != phi_down(phi, lam):
            return False, f"φ(−,inf λ) = λ↘φ fails at λ={lam.label}"
    PA_ = enumerate_presheaves(A, CONTRA, cap)
    for y in B.objects:
        for y2 in B.objects:
            if B(y, y2) != PA_.hom_of(column(phi, y), column(phi, y2)):
                return False, f"B(y,y') = φ(−,y')↙φ(−,y) fails at y={y}, y'={y2}"
    return True, None


def sps_unit(A: QCategory, B: QCategory, phi: QDistributor,
             cap: Optional[int] = None) -> tuple[Infomorphism, bool]:
    """``η_φ = (1_A, y ↦ φ(−, y))`` from ``ζ`` of ``(A, φ↓φ↑)`` to ``φ``.

    Returns the infomorphism and whether its column map is an isomorphism.
    """
    ok, why = is_state_property_system(A, B, phi, cap)
    if not ok:
        raise PreconditionError(f"not a state property system: {why}")
    space = isbell_closure(phi, cap)
    z = zeta(space)
    M = space.fixed_category
    P = space.presheaves
    G = QFunctor(B, M, {y: P.intern(column(phi, y)).label for y in B.objects}, name="columns")
    info = Infomorphism(identity_functor(A), G, z, phi)
    if not is_infomorphism(info.F, info.G, info.phi, info.psi):
        raise PreconditionError("column map does not give an infomorphism")
    bijective = sorted(G.mapping.values()) == sorted(M.objects) and len(set(G.mapping.values())) == len(B)
    faithful = all(B(y, y2) == M(G(y), G(y2)) for y in B.objects for y2 in B.objects)
    return info, bijective and faithful


def dense_pair_reconstruction(phi: QDistributor, cap: Optional[int] = None):
    """``F a = (φ↓(φ(a,−)), φ(a,−))`` and ``G b = (φ(−,b), φ↑(φ(−,b)))`` into ``M(φ)``.

    Returns ``(lattice, F, G)`` with ``F: A → M`` and ``G: B → M`` acting on extent labels.
    """
    lattice = concept_lattice(phi, cap)
    M = lattice.category
    P = enumerate_presheaves(phi.source, CONTRA, cap)
    F = QFunctor(phi.source, M, {a: P.intern(phi_down(phi, row(phi, a))).label for a in phi.source.objects},
                 name="F")
    G = QFunctor(phi.target, M, {b: P.intern(column(phi, b)).label for b in phi.target.objects}, name="G")
    return lattice, F, G


@dataclass
class Certificate:
    iso: Optional[QFunctor]
    witness: Optional[dict]

    def __bool__(self) -> bool:
        return self.iso is not None


def certify(X: QCategory, F: QFunctor, G: QFunctor, phi: QDistributor,
            cap: Optional[int] = None) -> Certificate:
    """Recognise ``X ≅ M(φ)`` from a sup-dense ``F`` and inf-dense ``G`` with ``X(F−, G−) = φ``.

    On success returns ``H x = (F♮(−, x), G^♮(x, −))`` as an isomorphism onto
    ``M(φ)`` (on extent labels); otherwise the first failing condition.
    """
    try:
        _require_complete_skeletal(X, cap)
    except PreconditionError as exc:
        return Certificate(None, {"condition": "complete and skeletal", "detail": str(exc)})
    for x in phi.source.objects:
        for y in phi.target.objects:
            if X(F(x), G(y)) != phi(x, y):
                return Certificate(None, {"condition": "X(F−,G−) = φ", "x": x, "y": y})
    dense, wit = density_check(F, "sup_dense", cap)
    if not dense:
        missing = next(k for k, v in wit.items() if v is None)
        return Certificate(None, {"condition": "F sup-dense", "object": missing})
    dense, wit = density_check(G, "inf_dense", cap)
    if not dense:
        missing = next(k for k, v in wit.items() if v is None)
        return Certificate(None, {"condition": "G inf-dense", "object": missing})
    lattice = concept_lattice(phi, cap)
    M = lattice.category
    P = enumerate_presheaves(phi.source, CONTRA, cap)
    gF, cG = graph(F), cograph(G)
    mapping = {}
    for x in X.objects:
        extent = P.intern(column(gF, x))
        if extent.label not in M:
            return Certificate(None, {"condition": "H lands in M(φ)", "object": x})
        pair = lattice.pair_of(extent.label)
        if pair.intent != row(cG, x):
            return Certificate(None, {"condition": "H intent", "object": x})
        mapping[x] = extent.label
    H = QFunctor(X, M, mapping, name="H")
    if len(set(mapping.values())) != len(M) or len(X) != len(M):
        return Certificate(None, {"condition": "H bijective"})
    for x in X.objects:
        for x2 in X.objects:
            if X(x, x2) != M(H(x), H(x2)):
                return Certificate(None, {"condition": "H fully faithful", "x": x, "x_prime": x2})
    return Certificate(H, None)


def isbell_functor(phi: QDistributor, cap: Optional[int] = None) -> QFunctor:
    """``φ↑`` as a functor ``PA → P†B``."""
    PA_ = enumerate_presheaves(phi.source, CONTRA, cap)
    PdB = enumerate_presheaves(phi.target, CO, cap)
    return QFunctor(PA_, PdB, {m.label: PdB.intern(phi_up(phi, m)).label for m in PA_.elements}, name="φ↑")


def isbell_poset_isomorphism(A: QCategory, B: QCategory, cap: Optional[int] = None) -> Report:
    """``φ ↦ φ↑`` is an order-reversing bijection onto the left adjoints ``PA → P†B``.

    The left adjoints are found by exhaustive functor enumeration; the inverse
    sends ``F`` to the distributor ``(x, y) ↦ F(Y x)(y)``.
    """
    rep = Report(module="isbell")
    PA_ = enumerate_presheaves(A, CONTRA, cap)
    PdB = enumerate_presheaves(B, CO, cap)
    dists = list(enumerate_distributors(A, B))
    image = [isbell_functor(phi, cap) for phi in dists]
    lefts = [F for F in enumerate_functors(PA_, PdB) if right_adjoint(F) is not None]
    if len(set(image)) != len(dists):
        rep.add("φ ↦ φ↑ is injective")
    if set(image) != set(lefts):
        rep.add("φ ↦ φ↑ hits exactly the left adjoints", image=len(set(image)), left_adjoints=len(lefts))
    for F in lefts:
        entries = {(x, y): PdB.element(F(PA_.intern(yoneda(A, x)).label))[y] for x in A.objects for y in B.objects}
        phi = QDistributor(A, B, entries)
        if isbell_functor(phi, cap) != F:
            rep.add("F = (⌞F∘Y_A⌟)↑", F=dict(F.mapping))
    for phi, up in zip(dists, image):
        for psi, up2 in zip(dists, image):
            if dist_leq(phi, psi) != functor_leq(up2, up):
                rep.add("φ ≤ ψ ⇔ ψ↑ ≤ φ↑", phi=dict(phi.matrix), psi=dict(psi.matrix))
    return rep
