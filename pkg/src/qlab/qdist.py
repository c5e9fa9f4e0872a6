"""Q-distributors: composition, implications, graphs and infomorphisms."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import BoundaryMismatch
from .qcat import QCategory, QFunctor, compose_functors, identity_functor, validate_functor
from .report import Report


def _same(A: QCategory, B: QCategory) -> bool:
    return A is B or A == B


@dataclass(frozen=True, eq=False)
class QDistributor:
    """A matrix ``φ(x, y) ∈ Q(tx, ty)`` for ``x`` in ``source`` and ``y`` in ``target``."""

    source: QCategory
    target: QCategory
    matrix: Mapping[tuple[str, str], str]
    name: str = ""

    def __call__(self, x: str, y: str) -> str:
        return self.matrix[x, y]

    @property
    def q(self):
        return self.source.q

    def __eq__(self, other) -> bool:
        if not isinstance(other, QDistributor):
            return NotImplemented
        return (_same(self.source, other.source) and _same(self.target, other.target)
                and all(self.matrix[k] == other.matrix[k] for k in self.cells()))

    def __hash__(self):
        return hash(tuple(self.matrix[k] for k in self.cells()))

    def cells(self) -> Iterator[tuple[str, str]]:
        return itertools.product(self.source.objects, self.target.objects)

    def __repr__(self) -> str:
        return f"<QDistributor {self.name or ''} {len(self.source)}x{len(self.target)}>"


@dataclass(frozen=True)
class Infomorphism:
    """``F: A → A′`` and ``G: B′ → B`` between ``phi: A ⇸ B`` and ``psi: A′ ⇸ B′``."""

    F: QFunctor
    G: QFunctor
    phi: QDistributor
    psi: QDistributor


def make_distributor(A: QCategory, B: QCategory, entries: Mapping | None = None, name: str = "") -> QDistributor:
    """Distributor with omitted entries defaulting to bottom."""
    entries = dict(entries or {})
    q = A.q
    matrix = {(x, y): entries.get((x, y), q.hom(A.t(x), B.t(y)).bottom)
              for x in A.objects for y in B.objects}
    return QDistributor(A, B, matrix, name)


def validate_distributor(phi: QDistributor) -> Report:
    rep = Report(module="qdist")
    A, B = phi.source, phi.target
    if A.q is not B.q:
        rep.add("different base quantaloids", structural=True)
        return rep
    q = A.q
    for x, y in phi.cells():
        v = phi.matrix.get((x, y))
        if v is None:
            rep.add("missing matrix entry", structural=True, x=x, y=y)
        elif v not in q.hom(A.t(x), B.t(y)):
            rep.add("matrix entry outside carrier", structural=True, x=x, y=y, value=v)
    if rep:
        return rep
    for x in A.objects:
        tx = A.t(x)
        for y, y2 in itertools.product(B.objects, repeat=2):
            ty, ty2 = B.t(y), B.t(y2)
            if not q.le(tx, ty, q.cmp(tx, ty2, ty, B(y2, y), phi(x, y2)), phi(x, y)):
                rep.add("B(y',y)∘φ(x,y') ≤ φ(x,y)", x=x, y=y, y_prime=y2)
    for y in B.objects:
        ty = B.t(y)
        for x, x2 in itertools.product(A.objects, repeat=2):
            tx, tx2 = A.t(x), A.t(x2)
            if not q.le(tx, ty, q.cmp(tx, tx2, ty, phi(x2, y), A(x, x2)), phi(x, y)):
                rep.add("φ(x',y)∘A(x,x') ≤ φ(x,y)", x=x, x_prime=x2, y=y)
    return rep


def compose_dist(psi: QDistributor, phi: QDistributor) -> QDistributor:
    """``ψ∘φ`` with ``(ψ∘φ)(x, z) = ⋁_y ψ(y, z)∘φ(x, y)``."""
    if not _same(phi.target, psi.source):
        raise BoundaryMismatch("ψ.source must equal φ.target")
    A, B, C = phi.source, phi.target, psi.target
    q = A.q
    matrix = {}
    for x in A.objects:
        tx = A.t(x)
        for z in C.objects:
            tz = C.t(z)
            matrix[x, z] = q.hom(tx, tz).join_all(
                q.cmp(tx, B.t(y), tz, psi(y, z), phi(x, y)) for y in B.objects)
    return QDistributor(A, C, matrix)


def identity_dist(A: QCategory) -> QDistributor:
    return QDistributor(A, A, {(x, y): A(x, y) for x in A.objects for y in A.objects}, name=f"id_{A.name}")


def dist_left_implication(eta: QDistributor, phi: QDistributor) -> QDistributor:
    """``η↙φ : B ⇸ C`` for ``η: A ⇸ C`` and ``φ: A ⇸ B``."""
    if not _same(eta.source, phi.source):
        raise BoundaryMismatch("η and φ need a common source")
    A, B, C = phi.source, phi.target, eta.target
    q = A.q
    matrix = {}
    for y in B.objects:
        ty = B.t(y)
        for z in C.objects:
            tz = C.t(z)
            matrix[y, z] = q.hom(ty, tz).meet_all(
                q.lda(A.t(x), ty, tz, eta(x, z), phi(x, y)) for x in A.objects)
    return QDistributor(B, C, matrix)


def dist_right_implication(psi: QDistributor, eta: QDistributor) -> QDistributor:
    """``ψ↘η : A ⇸ B`` for ``ψ: B ⇸ C`` and ``η: A ⇸ C``."""
    if not _same(psi.target, eta.target):
        raise BoundaryMismatch("ψ and η need a common target")
    A, B, C = eta.source, psi.source, psi.target
    q = A.q
    matrix = {}
    for x in A.objects:
        tx = A.t(x)
        for y in B.objects:
            ty = B.t(y)
            matrix[x, y] = q.hom(tx, ty).meet_all(
                q.rda(tx, ty, C.t(z), psi(y, z), eta(x, z)) for z in C.objects)
    return QDistributor(A, B, matrix)


def graph(F: QFunctor) -> QDistributor:
    """``F♮(x, y) = B(Fx, y)``."""
    A, B = F.source, F.target
    return QDistributor(A, B, {(x, y): B(F(x), y) for x in A.objects for y in B.objects})


def cograph(F: QFunctor) -> QDistributor:
    """``F^♮(y, x) = B(y, Fx)``."""
    A, B = F.source, F.target
    return QDistributor(B, A, {(y, x): B(y, F(x)) for y in B.objects for x in A.objects})


def _check_parallel(phi: QDistributor, psi: QDistributor) -> None:
    if not (_same(phi.source, psi.source) and _same(phi.target, psi.target)):
        raise BoundaryMismatch("distributors are not parallel")


def dist_leq(phi: QDistributor, psi: QDistributor) -> bool:
    """Local (pointwise) order."""
    _check_parallel(phi, psi)
    A, B, q = phi.source, phi.target, phi.q
    return all(q.le(A.t(x), B.t(y), phi(x, y), psi(x, y)) for x, y in phi.cells())


def dist_join(items: Iterable[QDistributor], A: QCategory, B: QCategory) -> QDistributor:
    items = list(items)
    for phi in items:
        if not (_same(phi.source, A) and _same(phi.target, B)):
            raise BoundaryMismatch("distributor outside the hom-set")
    q = A.q
    return QDistributor(A, B, {(x, y): q.hom(A.t(x), B.t(y)).join_all(p(x, y) for p in items)
                               for x in A.objects for y in B.objects})


def is_dist_adjunction(phi: QDistributor, psi: QDistributor) -> bool:
    """``φ ⊣ ψ``: ``1_A ≤ ψ∘φ`` and ``φ∘ψ ≤ 1_B`` in the local order."""
    if not (_same(phi.source, psi.target) and _same(phi.target, psi.source)):
        raise BoundaryMismatch("ψ must run opposite to φ")
    return (dist_leq(identity_dist(phi.source), compose_dist(psi, phi))
            and dist_leq(compose_dist(phi, psi), identity_dist(phi.target)))


def is_infomorphism(F: QFunctor, G: QFunctor, phi: QDistributor, psi: QDistributor) -> bool:
    """``φ(x, Gy′) = ψ(Fx, y′)`` for all ``x`` and ``y′``."""
    if not (_same(F.source, phi.source) and _same(F.target, psi.source)
            and _same(G.source, psi.target) and _same(G.target, phi.target)):
        raise BoundaryMismatch("functors do not fit the distributors")
    return all(phi(x, G(y)) == psi(F(x), y) for x in phi.source.objects for y in psi.target.objects)


def compose_infomorphisms(first: Infomorphism, second: Infomorphism) -> Infomorphism:
    """``(F′∘F, G∘G′)`` for ``first: φ → ψ`` and ``second: ψ → χ``."""
    if first.psi is not second.phi and first.psi != second.phi:
        raise BoundaryMismatch("infomorphisms do not share the middle distributor")
    return Infomorphism(compose_functors(second.F, first.F), compose_functors(first.G, second.G),
                        first.phi, second.psi)


def identity_infomorphism(phi: QDistributor) -> Infomorphism:
    return Infomorphism(identity_functor(phi.source), identity_functor(phi.target), phi, phi)


def validate_infomorphism(info: Infomorphism) -> Report:
    rep = Report(module="qdist")
    for label, F in (("F", info.F), ("G", info.G)):
        sub = validate_functor(F)
        for v in sub:
            rep.add(f"{label}: {v.law}", structural=v.structural, **v.witness)
    if rep:
        return rep
    try:
        ok = is_infomorphism(info.F, info.G, info.phi, info.psi)
    except BoundaryMismatch as exc:
        rep.add("boundary mismatch", structural=True, detail=str(exc))
        return rep
    if not ok:
        for x in info.phi.source.objects:
            for y in info.psi.target.objects:
                if info.phi(x, info.G(y)) != info.psi(info.F(x), y):
                    rep.add("φ(x,Gy') = ψ(Fx,y')", x=x, y_prime=y)
    return rep


def enumerate_distributors(A: QCategory, B: QCategory) -> Iterator[QDistributor]:
    """Every distributor ``A ⇸ B``, in lexicographic order of carrier indices."""
    q = A.q
    cells = [(x, y) for x in A.objects for y in B.objects]
    choices = [q.hom(A.t(x), B.t(y)).carrier for x, y in cells]
    for values in itertools.product(*choices):
        phi = QDistributor(A, B, dict(zip(cells, values)))
        if validate_distributor(phi).ok:
            yield phi


def row(phi: QDistributor, x: str):
    """``φ(x, −)`` as a covariant presheaf on the target."""
    from .presheaf import CoPresheaf
    B = phi.target
    return CoPresheaf(B, phi.source.t(x), tuple(phi(x, y) for y in B.objects))


def column(phi: QDistributor, y: str):
    """``φ(−, y)`` as a contravariant presheaf on the source."""
    from .presheaf import Presheaf
    A = phi.source
    return Presheaf(A, phi.target.t(y), tuple(phi(x, y) for x in A.objects))

