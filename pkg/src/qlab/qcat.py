"""Q-typed sets, Q-categories, Q-functors and functor adjunctions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional

from .errors import BoundaryMismatch, PreconditionError
from .quantaloid import Quantaloid
from .report import Report


@dataclass(frozen=True)
class QTypedSet:
    elements: tuple[str, ...]
    type_of: Mapping[str, str]

    def __hash__(self):
        return hash(self.elements)


class QCategory:
    """A Q-category: typed objects plus a hom matrix ``hom[x, y] ∈ Q(tx, ty)``.

    ``hom`` may be any mapping; presheaf categories pass a lazily evaluated one.
    """

    def __init__(self, q: Quantaloid, base: QTypedSet, hom: Mapping[tuple[str, str], str], name: str = ""):
        self.q = q
        self.base = base
        self.hom = hom
        self.name = name

    @classmethod
    def build(cls, q: Quantaloid, objects, hom: Optional[Mapping] = None, name: str = "") -> "QCategory":
        """Build from ``objects`` (pairs ``(id, type)`` or a dict) and a partial hom table.

        Missing diagonal entries default to the unit, other missing entries to bottom.
        """
        pairs = list(objects.items()) if isinstance(objects, Mapping) else list(objects)
        elements = tuple(x for x, _ in pairs)
        types = dict(pairs)
        given = dict(hom or {})
        full = {}
        for x in elements:
            for y in elements:
                if (x, y) in given:
                    full[x, y] = given[x, y]
                elif x == y:
                    full[x, y] = q.unit(types[x])
                else:
                    full[x, y] = q.hom(types[x], types[y]).bottom
        return cls(q, QTypedSet(elements, types), full, name)

    @property
    def objects(self) -> tuple[str, ...]:
        return self.base.elements

    def t(self, x: str) -> str:
        return self.base.type_of[x]

    def __call__(self, x: str, y: str) -> str:
        return self.hom[x, y]

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.objects)}

    def __contains__(self, x) -> bool:
        return x in self.index

    def __len__(self) -> int:
        return len(self.objects)

    def le(self, x: str, y: str) -> bool:
        """Underlying preorder: same type and ``1 ≤ A(x, y)``."""
        tx = self.t(x)
        return tx == self.t(y) and self.q.le(tx, tx, self.q.unit(tx), self.hom[x, y])

    def iso(self, x: str, y: str) -> bool:
        return self.le(x, y) and self.le(y, x)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, QCategory):
            return NotImplemented
        return (self.q is other.q and self.objects == other.objects
                and all(self.t(x) == other.t(x) for x in self.objects)
                and all(self.hom[k] == other.hom[k] for k in itertools.product(self.objects, repeat=2)))

    def __hash__(self):
        return hash(self.objects)

    def __repr__(self) -> str:
        label = self.name or "QCategory"
        return f"<{label}: {len(self.objects)} objects over {self.q.name}>"


@dataclass(frozen=True, eq=False)
class QFunctor:
    source: QCategory
    target: QCategory
    mapping: Mapping[str, str]
    name: str = ""

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and all(self.mapping[x] == other.mapping[x] for x in self.source.objects))

    def __hash__(self):
        return hash(tuple(self.mapping[x] for x in self.source.objects))


@dataclass(frozen=True)
class Preorder:
    relation: frozenset
    isomorphic: frozenset
    skeletal: bool

    def le(self, x, y) -> bool:
        return (x, y) in self.relation


class FunctorReport(Report):
    def __init__(self, items=(), module="qcat"):
        super().__init__(items, module=module)
        self.is_fully_faithful = False

    @property
    def is_functor(self) -> bool:
        return self.ok


# -- validation ---------------------------------------------------------------

def validate_category(A: QCategory) -> Report:
    rep = Report(module="qcat")
    q = A.q
    if len(set(A.objects)) != len(A.objects):
        rep.add("duplicate objects", structural=True, objects=A.objects)
    for x in A.objects:
        if x not in A.base.type_of or A.t(x) not in q.objects:
            rep.add("object type missing or unknown", structural=True, object=x)
    if rep:
        return rep
    for x, y in itertools.product(A.objects, repeat=2):
        v = A.hom.get((x, y)) if hasattr(A.hom, "get") else A.hom[x, y]
        if v is None:
            rep.add("missing hom entry", structural=True, x=x, y=y)
        elif v not in q.hom(A.t(x), A.t(y)):
            rep.add("hom entry outside carrier", structural=True, x=x, y=y, value=v)
    if rep:
        return rep
    for x in A.objects:
        tx = A.t(x)
        if not q.le(tx, tx, q.unit(tx), A(x, x)):
            rep.add("unit axiom 1 ≤ A(x,x)", x=x, value=A(x, x))
    for x, y, z in itertools.product(A.objects, repeat=3):
        tx, ty, tz = A.t(x), A.t(y), A.t(z)
        if not q.le(tx, tz, q.cmp(tx, ty, tz, A(y, z), A(x, y)), A(x, z)):
            rep.add("composition A(y,z)∘A(x,y) ≤ A(x,z)", x=x, y=y, z=z)
    return rep


def underlying_preorder(A: QCategory) -> Preorder:
    rel = frozenset((x, y) for x in A.objects for y in A.objects if A.le(x, y))
    iso = frozenset((x, y) for x, y in rel if x != y and (y, x) in rel)
    return Preorder(rel, iso, not iso)


def validate_functor(F: QFunctor) -> FunctorReport:
    rep = FunctorReport()
    A, B = F.source, F.target
    for x in A.objects:
        if x not in F.mapping:
            rep.add("map not total", structural=True, x=x)
        elif F.mapping[x] not in B:
            rep.add("image outside target", structural=True, x=x, image=F.mapping[x])
    if rep:
        return rep
    if A.q is not B.q:
        rep.add("different base quantaloids", structural=True)
        return rep
    q = A.q
    for x in A.objects:
        if B.t(F(x)) != A.t(x):
            rep.add("type preservation", x=x, image=F(x))
    if rep:
        return rep
    faithful = True
    for x, y in itertools.product(A.objects, repeat=2):
        a, b = A(x, y), B(F(x), F(y))
        if a != b:
            faithful = False
        if not q.le(A.t(x), A.t(y), a, b):
            rep.add("hom expansion A(x,y) ≤ B(Fx,Fy)", x=x, y=y)
    rep.is_fully_faithful = faithful and rep.ok
    return rep


def _same_signature(F: QFunctor, G: QFunctor) -> None:
    if F.source != G.source or F.target != G.target:
        raise BoundaryMismatch("functors have different source or target")


def functor_leq(F: QFunctor, G: QFunctor) -> bool:
    _same_signature(F, G)
    return all(F.target.le(F(x), G(x)) for x in F.source.objects)


def identity_functor(A: QCategory) -> QFunctor:
    return QFunctor(A, A, {x: x for x in A.objects}, name=f"1_{A.name}")


def compose_functors(G: QFunctor, F: QFunctor) -> QFunctor:
    """``G∘F``."""
    if F.target != G.source:
        raise BoundaryMismatch("functors are not composable")
    return QFunctor(F.source, G.target, {x: G(F(x)) for x in F.source.objects})


def is_functor_adjunction(F: QFunctor, G: QFunctor) -> bool:
    if F.source != G.target or F.target != G.source:
        raise BoundaryMismatch("G must run opposite to F")
    GF, FG = compose_functors(G, F), compose_functors(F, G)
    return functor_leq(identity_functor(F.source), GF) and functor_leq(FG, identity_functor(F.target))


# -- constructions ------------------------------------------------------------

def discrete_category(q: Quantaloid, base: QTypedSet, name: str = "") -> QCategory:
    return QCategory.build(q, [(x, base.type_of[x]) for x in base.elements], name=name)


def star_category(q: Quantaloid, X: str, name: str = "*") -> QCategory:
    if X not in q.objects:
        raise PreconditionError(f"{X!r} is not an object of {q.name}")
    return QCategory.build(q, [("*", X)], name=name)


def full_subcategory(A: QCategory, members: Iterable[str], name: str = "") -> QCategory:
    keep = set(members)
    elements = tuple(x for x in A.objects if x in keep)
    hom = {(x, y): A(x, y) for x in elements for y in elements}
    return QCategory(A.q, QTypedSet(elements, {x: A.t(x) for x in elements}), hom, name)


def inclusion(sub: QCategory, A: QCategory) -> QFunctor:
    return QFunctor(sub, A, {x: x for x in sub.objects})


def iso_saturate(A: QCategory, members: Iterable[str]) -> tuple[str, ...]:
    """Close ``members`` under ≅ in ``A``, keeping canonical object order."""
    base = set(members)
    return tuple(x for x in A.objects if any(x == m or A.iso(x, m) for m in base))


def enumerate_categories(q: Quantaloid, objects) -> Iterator[QCategory]:
    """All valid Q-categories on the given typed objects, in lexicographic hom order."""
    pairs = list(objects.items()) if isinstance(objects, Mapping) else list(objects)
    elements = [x for x, _ in pairs]
    types = dict(pairs)
    cells = [(x, y) for x in elements for y in elements]
    choices = []
    for x, y in cells:
        lat = q.hom(types[x], types[y])
        if x == y:
            u = q.unit(types[x])
            choices.append([e for e in lat.carrier if lat.le(u, e)])
        else:
            choices.append(list(lat.carrier))
    for values in itertools.product(*choices):
        C = QCategory(q, QTypedSet(tuple(elements), types), dict(zip(cells, values)))
        if validate_category(C).ok:
            yield C


def enumerate_functors(A: QCategory, B: QCategory) -> Iterator[QFunctor]:
    """All Q-functors ``A → B`` in lexicographic order of their object maps.

    Depth-first over the objects of ``A`` with the hom-expansion condition
    checked against every already placed object.
    """
    q = A.q
    xs = A.objects
    options = [[y for y in B.objects if B.t(y) == A.t(x)] for x in xs]
    image: list[str] = []

    def fits(i: int, y: str) -> bool:
        x = xs[i]
        for j in range(i + 1):
            xj, yj = xs[j], (y if j == i else image[j])
            if not q.le(A.t(x), A.t(xj), A(x, xj), B(y, yj)):
                return False
            if not q.le(A.t(xj), A.t(x), A(xj, x), B(yj, y)):
                return False
        return True

    def walk(i: int):
        if i == len(xs):
            yield QFunctor(A, B, dict(zip(xs, image)))
            return
        for y in options[i]:
            if fits(i, y):
                image.append(y)
                yield from walk(i + 1)
                image.pop()

    yield from walk(0)


def right_adjoint(F: QFunctor) -> Optional[QFunctor]:
    """The right adjoint of ``F`` chosen canonically, or ``None``.

    ``G`` is right adjoint iff ``B(Fx, y) = A(x, Gy)`` for all x, y, so each
    ``Gy`` can be searched for independently; any two choices are isomorphic.
    """
    A, B = F.source, F.target
    mapping = {}
    for y in B.objects:
        for a in A.objects:
            if A.t(a) == B.t(y) and all(B(F(x), y) == A(x, a) for x in A.objects):
                mapping[y] = a
                break
        else:
            return None
    return QFunctor(B, A, mapping)


def left_adjoint(G: QFunctor) -> Optional[QFunctor]:
    """The left adjoint of ``G: B → A`` chosen canonically, or ``None``."""
    B, A = G.source, G.target
    mapping = {}
    for x in A.objects:
        for b in B.objects:
            if B.t(b) == A.t(x) and all(B(b, y) == A(x, G(y)) for y in B.objects):
                mapping[x] = b
                break
        else:
            return None
    return QFunctor(A, B, mapping)
