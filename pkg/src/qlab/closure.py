"""Closure operators and systems, Q-closure spaces and continuous functors.

A closure space stores its operator as a tuple of indices into the canonical
enumeration of ``PA``: ``operator[i]`` is the index of ``C(μ_i)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from .errors import BoundaryMismatch, NotContinuous, PreconditionError
from .qcat import (QCategory, QFunctor, enumerate_functors, full_subcategory, inclusion, iso_saturate,
                   left_adjoint, right_adjoint, underlying_preorder, validate_functor)
from .presheaf import (CONTRA, Presheaf, PresheafCategory, bound_search, enumerate_presheaves,
                       is_complete, pull_back, push_forward, tensor_search, yoneda)
from .quantaloid import QArrow
from .report import Report


# -- endofunctors --------------------------------------------------------------

@dataclass(frozen=True)
class EndoClassification:
    closure: bool
    interior: bool

    @property
    def kind(self) -> str:
        if self.closure:
            return "closure"
        return "interior" if self.interior else "neither"


def classify_endo(F: QFunctor) -> EndoClassification:
    """Closure iff ``1 ≤ F`` and ``F² ≅ F``; interior iff ``F ≤ 1`` and ``F² ≅ F``.

    Both flags are reported; the identity is both.
    """
    A = F.source
    if F.target is not A and F.target != A:
        raise BoundaryMismatch("not an endofunctor")
    if not validate_functor(F).ok:
        raise PreconditionError("invalid endofunctor")
    idempotent = all(A.iso(F(F(x)), F(x)) for x in A.objects)
    up = all(A.le(x, F(x)) for x in A.objects)
    down = all(A.le(F(x), x) for x in A.objects)
    return EndoClassification(idempotent and up, idempotent and down)


@dataclass(frozen=True)
class ClosureSystem:
    """An isomorphism-closed set of objects of ``ambient``."""

    ambient: QCategory
    members: tuple[str, ...]

    @cached_property
    def category(self) -> QCategory:
        return full_subcategory(self.ambient, self.members, name=f"{self.ambient.name}|fix")

    def inclusion(self) -> QFunctor:
        return inclusion(self.category, self.ambient)

    def reflector(self) -> Optional[QFunctor]:
        """The left adjoint of the inclusion, when one exists."""
        return left_adjoint(self.inclusion())


def make_closure_system(ambient: QCategory, members: Iterable[str]) -> ClosureSystem:
    return ClosureSystem(ambient, iso_saturate(ambient, members))


def fixed_points(F: QFunctor) -> ClosureSystem:
    """Objects with ``Fx ≅ x``, saturated under ``≅``."""
    cls = classify_endo(F)
    if cls.kind == "neither":
        raise PreconditionError("fixed points need a closure or interior operator")
    A = F.source
    return make_closure_system(A, [x for x in A.objects if A.iso(F(x), x)])


def is_closure_system(ambient: QCategory, members: Iterable[str]) -> bool:
    """Whether the inclusion of the (saturated) members has a left adjoint."""
    system = make_closure_system(ambient, members)
    return system.reflector() is not None


def is_interior_system(ambient: QCategory, members: Iterable[str]) -> bool:
    system = make_closure_system(ambient, members)
    return right_adjoint(system.inclusion()) is not None


# -- closure spaces ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QClosureSpace:
    base: QCategory
    operator: tuple[int, ...]
    presheaves: PresheafCategory
    name: str = ""

    def close(self, mu: Presheaf) -> Presheaf:
        P = self.presheaves
        return P.elements[self.operator[P.position[mu]]]

    def as_functor(self) -> QFunctor:
        P = self.presheaves
        return QFunctor(P, P, {e.label: P.elements[self.operator[i]].label for i, e in enumerate(P.elements)},
                        name=self.name or "C")

    @cached_property
    def closed(self) -> tuple[Presheaf, ...]:
        P = self.presheaves
        return tuple(e for i, e in enumerate(P.elements) if self.operator[i] == i)

    @cached_property
    def fixed_category(self) -> QCategory:
        """``C(PA)`` as a full subcategory of ``PA``."""
        return full_subcategory(self.presheaves, [e.label for e in self.closed],
                                name=f"C({self.presheaves.name})")

    def is_closed(self, mu: Presheaf) -> bool:
        return self.close(mu) == mu


def closure_space(A: QCategory, fn: Callable[[Presheaf], Presheaf], cap: Optional[int] = None,
                  name: str = "") -> QClosureSpace:
    """Tabulate ``fn`` on the canonical enumeration of ``PA``."""
    P = enumerate_presheaves(A, CONTRA, cap)
    return QClosureSpace(A, tuple(P.position[P.intern(fn(m))] for m in P.elements), P, name)


def identity_space(A: QCategory, cap: Optional[int] = None) -> QClosureSpace:
    return closure_space(A, lambda m: m, cap, name="id")


def validate_closure_space(space: QClosureSpace) -> Report:
    rep = Report(module="closure")
    P, op = space.presheaves, space.operator
    if len(op) != len(P.elements) or any(not 0 <= i < len(P.elements) for i in op):
        rep.add("operator is not a total index map", structural=True, size=len(op))
        return rep
    C = space.as_functor()
    for v in validate_functor(C):
        rep.add(f"operator {v.law}", structural=v.structural, **v.witness)
    for i, m in enumerate(P.elements):
        if not P.le(m.label, P.elements[op[i]].label):
            rep.add("1 ≤ C", presheaf=m.label)
        if op[op[i]] != op[i]:
            rep.add("C∘C = C", presheaf=m.label)
    return rep


def _check_spaces(F: QFunctor, C: QClosureSpace, D: QClosureSpace) -> None:
    if C.base is not F.source and C.base != F.source:
        raise BoundaryMismatch("source space does not match the functor")
    if D.base is not F.target and D.base != F.target:
        raise BoundaryMismatch("target space does not match the functor")


def is_continuous(F: QFunctor, C: QClosureSpace, D: QClosureSpace) -> bool:
    """``F→∘C ≤ D∘F→`` pointwise in ``PB``."""
    _check_spaces(F, C, D)
    PB = D.presheaves
    for m in C.presheaves.elements:
        left = PB.intern(push_forward(F, C.close(m)))
        right = D.close(PB.intern(push_forward(F, m)))
        if not PB.le(left.label, right.label):
            return False
    return True


def preimages_closed(F: QFunctor, C: QClosureSpace, D: QClosureSpace) -> bool:
    """``F←(λ)`` is C-closed for every D-closed ``λ``."""
    _check_spaces(F, C, D)
    PA_ = C.presheaves
    return all(C.is_closed(PA_.intern(pull_back(F, lam))) for lam in D.closed)


def canonical_closure(A: QCategory, cap: Optional[int] = None) -> QClosureSpace:
    """``C_A = Y∘sup`` on ``PA`` for a complete ``A``."""
    if not is_complete(A, cap).complete:
        raise PreconditionError("canonical closure needs a complete category")
    return closure_space(A, lambda m: yoneda(A, bound_search(A, m, "sup")), cap, name="C_A")


def triangle_functors(F: QFunctor, C: QClosureSpace, D: QClosureSpace) -> tuple[QFunctor, QFunctor]:
    """``F▷ = D∘F→`` on ``C(PA)`` and ``F◁ = F←`` on ``D(PB)``."""
    if not is_continuous(F, C, D):
        raise NotContinuous("functor is not continuous between the given spaces")
    CA, DB = C.fixed_category, D.fixed_category
    PA_, PB_ = C.presheaves, D.presheaves
    right = QFunctor(CA, DB, {m.label: D.close(PB_.intern(push_forward(F, m))).label for m in C.closed},
                     name="F▷")
    left = QFunctor(DB, CA, {l.label: PA_.intern(pull_back(F, l)).label for l in D.closed}, name="F◁")
    return right, left


def eta_unit(space: QClosureSpace) -> QFunctor:
    """``η = C∘Y_A : A → C(PA)``."""
    A = space.base
    return QFunctor(A, space.fixed_category, {x: space.close(space.presheaves.intern(yoneda(A, x))).label
                                              for x in A.objects}, name="η")


def universal_extension(F: QFunctor, space: QClosureSpace, cap: Optional[int] = None) -> QFunctor:
    """``F̄ = sup_B∘F→`` restricted to ``C(PA)``."""
    B = F.target
    if not underlying_preorder(B).skeletal:
        raise PreconditionError("target must be skeletal")
    target_space = canonical_closure(B, cap)
    if not is_continuous(F, space, target_space):
        raise NotContinuous("functor is not continuous into the canonical closure space")
    return QFunctor(space.fixed_category, B,
                    {m.label: bound_search(B, push_forward(F, m), "sup") for m in space.closed}, name="F̄")


def extension_candidates(F: QFunctor, space: QClosureSpace) -> list[QFunctor]:
    """Every left-adjoint functor ``H: C(PA) → B`` with ``H∘η = F``, by exhaustive search."""
    eta = eta_unit(space)
    found = []
    for H in enumerate_functors(space.fixed_category, F.target):
        if all(H(eta(x)) == F(x) for x in F.source.objects) and right_adjoint(H) is not None:
            found.append(H)
    return found


def closed_under_meets_and_cotensors(A: QCategory, members: Iterable[str]) -> bool:
    """Subcategory test: ambient meets of members and cotensors of members stay inside."""
    inside = set(iso_saturate(A, members))
    q = A.q
    for x in inside:
        for X in q.objects:
            for f in q.hom(X, A.t(x)).carrier:
                c = tensor_search(A, QArrow(X, A.t(x), f), x, "cotensor")
                if c is not None and c not in inside:
                    return False
    for X in q.objects:
        fiber = [a for a in A.objects if A.t(a) == X and a in inside]
        for r in range(len(fiber) + 1):
            for items in itertools.combinations(fiber, r):
                lower = [m for m in A.objects if A.t(m) == X and all(A.le(m, s) for s in items)]
                meets = [m for m in lower if all(A.le(o, m) for o in lower)]
                if meets and meets[0] not in inside:
                    return False
    return True



@dataclass(frozen=True, eq=False)
class ContinuousMap:
    functor: QFunctor
    source: QClosureSpace
    target: QClosureSpace


def continuous_map(F: QFunctor, C: QClosureSpace, D: QClosureSpace) -> ContinuousMap:
    if not is_continuous(F, C, D):
        raise NotContinuous("functor is not continuous between the given spaces")
    return ContinuousMap(F, C, D)
