"""Presheaf categories, Yoneda, transported functors, suprema and completeness.

Presheaf categories are enumerated eagerly in a canonical order: quantaloid
objects in declaration order, then value vectors ordered by carrier index.
Every "first witness" rule below refers to that order.  Objects of a
:class:`PresheafCategory` are string labels such as ``*[1 0]``; the labels
map back to :class:`Presheaf` / :class:`CoPresheaf` values.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

from .errors import BoundaryMismatch, CapExceeded, PreconditionError, StructuralError
from .qcat import QCategory, QFunctor, QTypedSet
from .quantaloid import QArrow
from .report import Report

CONTRA = "contra"
CO = "co"
DEFAULT_CAP = 20000


@dataclass(frozen=True)
class _Weight:
    domain: QCategory = field(compare=False, repr=False)
    type: str
    values: tuple[str, ...]

    @classmethod
    def of(cls, domain: QCategory, type: str, values: Mapping[str, str]):
        return cls(domain, type, tuple(values[x] for x in domain.objects))

    def __getitem__(self, x: str) -> str:
        return self.values[self.domain.index[x]]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.domain.objects, self.values))

    @property
    def label(self) -> str:
        return f"{self.type}[{' '.join(self.values)}]"

    def support(self) -> frozenset:
        """Objects carrying a non-bottom value; handy for two-valued bases."""
        return frozenset(x for x, v in zip(self.domain.objects, self.values)
                         if v != self._lattice(x).bottom)


@dataclass(frozen=True)
class Presheaf(_Weight):
    """Contravariant presheaf: ``values[x] ∈ Q(tx, type)``."""

    def _lattice(self, x):
        return self.domain.q.hom(self.domain.t(x), self.type)


@dataclass(frozen=True)
class CoPresheaf(_Weight):
    """Covariant presheaf: ``values[x] ∈ Q(type, tx)``."""

    def _lattice(self, x):
        return self.domain.q.hom(self.type, self.domain.t(x))


def validate_weight(w: _Weight) -> Report:
    """Check carriers and the distributor condition of a (co)presheaf."""
    rep = Report(module="presheaf")
    A, X, q = w.domain, w.type, w.domain.q
    if X not in q.objects:
        rep.add("unknown type object", structural=True, type=X)
        return rep
    if len(w.values) != len(A.objects):
        rep.add("value vector length", structural=True, expected=len(A.objects), got=len(w.values))
        return rep
    contra = isinstance(w, Presheaf)
    for x in A.objects:
        if w[x] not in w._lattice(x):
            rep.add("value outside carrier", structural=True, x=x, value=w[x])
    if rep:
        return rep
    for x, x2 in itertools.product(A.objects, repeat=2):
        tx, tx2 = A.t(x), A.t(x2)
        if contra:
            if not q.le(tx, X, q.cmp(tx, tx2, X, w[x2], A(x, x2)), w[x]):
                rep.add("μ(x')∘A(x,x') ≤ μ(x)", x=x, x_prime=x2)
        elif not q.le(X, tx2, q.cmp(X, tx, tx2, A(x, x2), w[x]), w[x2]):
            rep.add("A(x,x')∘λ(x) ≤ λ(x')", x=x, x_prime=x2)
    return rep


class _LazyHom(Mapping):
    """Hom matrix of a presheaf category, evaluated on demand."""

    def __init__(self, cat: "PresheafCategory"):
        self._cat = cat
        self._memo: dict = {}

    def __getitem__(self, key):
        v = self._memo.get(key)
        if v is None:
            cat = self._cat
            v = cat.hom_of(cat.element(key[0]), cat.element(key[1]))
            self._memo[key] = v
        return v

    def __iter__(self):
        return iter(itertools.product(self._cat.objects, repeat=2))

    def __len__(self):
        return len(self._cat.objects) ** 2


class PresheafCategory(QCategory):
    """``PA`` (variance ``contra``) or ``P†A`` (variance ``co``) over ``domain``."""

    def __init__(self, domain: QCategory, variance: str, elements):
        self.domain = domain
        self.variance = variance
        self.elements = tuple(elements)
        self.position = {e: i for i, e in enumerate(self.elements)}
        labels = tuple(e.label for e in self.elements)
        self._by_label = dict(zip(labels, self.elements))
        base = QTypedSet(labels, {e.label: e.type for e in self.elements})
        prefix = "P" if variance == CONTRA else "Pd"
        super().__init__(domain.q, base, _LazyHom(self), name=f"{prefix}({domain.name})")

    def element(self, label: str) -> _Weight:
        return self._by_label[label]

    def label_of(self, w: _Weight) -> str:
        if w not in self.position:
            raise StructuralError(f"{w.label} is not an object of {self.name}")
        return w.label

    def intern(self, w: _Weight) -> _Weight:
        i = self.position.get(w)
        if i is None:
            raise StructuralError(f"{w.label} is not an object of {self.name}")
        return self.elements[i]

    def hom_of(self, mu: _Weight, lam: _Weight) -> str:
        """``PA(μ, λ) = λ↙μ`` or ``P†A(μ, λ) = λ↘μ``."""
        q = self.q
        X, Y = mu.type, lam.type
        lat = q.hom(X, Y)
        cells = zip(self.domain_types, lam.values, mu.values)
        if self.variance == CONTRA:
            return lat.meet_all(q.lda(t, X, Y, l, m) for t, l, m in cells)
        return lat.meet_all(q.rda(X, Y, t, l, m) for t, l, m in cells)

    @cached_property
    def domain_types(self) -> tuple[str, ...]:
        return tuple(self.domain.t(x) for x in self.domain.objects)

    def weight_class(self):
        return Presheaf if self.variance == CONTRA else CoPresheaf


# -- enumeration --------------------------------------------------------------

def _carrier(A: QCategory, variance: str, x: str, X: str):
    q = A.q
    return q.hom(A.t(x), X).carrier if variance == CONTRA else q.hom(X, A.t(x)).carrier


def estimate_presheaves(A: QCategory, variance: str = CONTRA) -> int:
    return sum(math.prod(len(_carrier(A, variance, x, X)) for x in A.objects) for X in A.q.objects)


def _value_vectors(A: QCategory, variance: str, X: str) -> Iterator[tuple[str, ...]]:
    q = A.q
    xs = A.objects
    ts = [A.t(x) for x in xs]
    options = [_carrier(A, variance, x, X) for x in xs]
    chosen: list[str] = []

    def ok(i, j):
        # condition for the ordered pair (x_i, x_j)
        if variance == CONTRA:
            return q.le(ts[i], X, q.cmp(ts[i], ts[j], X, chosen[j], A(xs[i], xs[j])), chosen[i])
        return q.le(X, ts[j], q.cmp(X, ts[i], ts[j], A(xs[i], xs[j]), chosen[i]), chosen[j])

    def walk(k):
        if k == len(xs):
            yield tuple(chosen)
            return
        for v in options[k]:
            chosen.append(v)
            if all(ok(k, j) and ok(j, k) for j in range(k + 1)):
                yield from walk(k + 1)
            chosen.pop()

    yield from walk(0)


def enumerate_presheaves(A: QCategory, variance: str = CONTRA, cap: Optional[int] = None) -> PresheafCategory:
    """All (co)presheaves on ``A`` in canonical order, as a Q-category.

    Raises :class:`CapExceeded` when the estimate ``Σ_X Π_x |carrier|``
    exceeds ``cap`` (default 20000).  Results are cached on ``A``.
    """
    if variance not in (CONTRA, CO):
        raise PreconditionError(f"unknown variance {variance!r}")
    cap = DEFAULT_CAP if cap is None else cap
    est = estimate_presheaves(A, variance)
    if est > cap:
        raise CapExceeded(est, cap)
    cache = A.__dict__.setdefault("_presheaf_cache", {})
    if variance not in cache:
        cls = Presheaf if variance == CONTRA else CoPresheaf
        elements = [cls(A, X, vals) for X in A.q.objects for vals in _value_vectors(A, variance, X)]
        cache[variance] = PresheafCategory(A, variance, elements)
    return cache[variance]


def PA(A: QCategory, cap: Optional[int] = None) -> PresheafCategory:
    return enumerate_presheaves(A, CONTRA, cap)


def PdA(A: QCategory, cap: Optional[int] = None) -> PresheafCategory:
    return enumerate_presheaves(A, CO, cap)


# -- Yoneda -------------------------------------------------------------------

def yoneda(A: QCategory, a: str, variance: str = CONTRA) -> _Weight:
    """``Y a = A(−, a)`` or ``Y† a = A(a, −)``."""
    if a not in A:
        raise PreconditionError(f"{a!r} is not an object of the category")
    if variance == CONTRA:
        return Presheaf(A, A.t(a), tuple(A(x, a) for x in A.objects))
    return CoPresheaf(A, A.t(a), tuple(A(a, x) for x in A.objects))


def yoneda_functor(A: QCategory, variance: str = CONTRA, cap: Optional[int] = None) -> QFunctor:
    P = enumerate_presheaves(A, variance, cap)
    return QFunctor(A, P, {a: yoneda(A, a, variance).label for a in A.objects},
                    name="Y" if variance == CONTRA else "Yd")


# -- transported functors ------------------------------------------------------

def push_forward(F: QFunctor, mu: Presheaf) -> Presheaf:
    """``F→(μ)(y) = ⋁_x μ(x)∘B(y, Fx)``."""
    A, B, q, X = F.source, F.target, F.source.q, mu.type
    return Presheaf(B, X, tuple(
        q.hom(B.t(y), X).join_all(q.cmp(B.t(y), A.t(x), X, mu[x], B(y, F(x))) for x in A.objects)
        for y in B.objects))


def pull_back(F: QFunctor, lam: Presheaf) -> Presheaf:
    """``F←(λ)(x) = λ(Fx)``."""
    return Presheaf(F.source, lam.type, tuple(lam[F(x)] for x in F.source.objects))


def push_forward_co(F: QFunctor, lam: CoPresheaf) -> CoPresheaf:
    """``F⇒(λ)(y) = ⋁_x B(Fx, y)∘λ(x)``."""
    A, B, q, X = F.source, F.target, F.source.q, lam.type
    return CoPresheaf(B, X, tuple(
        q.hom(X, B.t(y)).join_all(q.cmp(X, A.t(x), B.t(y), B(F(x), y), lam[x]) for x in A.objects)
        for y in B.objects))


def pull_back_co(F: QFunctor, lam: CoPresheaf) -> CoPresheaf:
    """``F⇐(λ)(x) = λ(Fx)``."""
    return CoPresheaf(F.source, lam.type, tuple(lam[F(x)] for x in F.source.objects))


def transport(F: QFunctor, direction: str, variance: str = CONTRA, cap: Optional[int] = None) -> QFunctor:
    """``F→``/``F←`` (contra) or ``F⇒``/``F⇐`` (co) as functors between presheaf categories."""
    PA_ = enumerate_presheaves(F.source, variance, cap)
    PB_ = enumerate_presheaves(F.target, variance, cap)
    if direction == "forward":
        op = push_forward if variance == CONTRA else push_forward_co
        return QFunctor(PA_, PB_, {e.label: op(F, e).label for e in PA_.elements})
    if direction == "backward":
        op = pull_back if variance == CONTRA else pull_back_co
        return QFunctor(PB_, PA_, {e.label: op(F, e).label for e in PB_.elements})
    raise PreconditionError(f"unknown direction {direction!r}")


# -- suprema and infima in presheaf categories ---------------------------------

def _check_weight_on(P: QCategory, w: _Weight, cls) -> None:
    if not isinstance(w, cls):
        raise BoundaryMismatch(f"expected a {cls.__name__}")
    if w.domain is not P and w.domain != P:
        raise BoundaryMismatch("weight lives on a different category")
    rep = validate_weight(w)
    if not rep.ok:
        raise PreconditionError(f"invalid weight: {rep[0].describe()}")


def presheaf_sup(P: PresheafCategory, Phi: Presheaf) -> _Weight:
    """Supremum of a presheaf ``Φ`` on ``P`` by the closed formula.

    In ``PA``: ``(sup Φ)(x) = ⋁_μ Φ(μ)∘μ(x)``.  In ``P†A``: ``(sup Φ)(x) = ⋀_λ λ(x)↙Φ(λ)``.
    """
    _check_weight_on(P, Phi, Presheaf)
    A, q, Y = P.domain, P.q, Phi.type
    if P.variance == CONTRA:
        vals = tuple(q.hom(A.t(x), Y).join_all(
            q.cmp(A.t(x), m.type, Y, Phi[m.label], m[x]) for m in P.elements) for x in A.objects)
        return P.intern(Presheaf(A, Y, vals))
    vals = tuple(q.hom(Y, A.t(x)).meet_all(
        q.lda(l.type, Y, A.t(x), l[x], Phi[l.label]) for l in P.elements) for x in A.objects)
    return P.intern(CoPresheaf(A, Y, vals))


def presheaf_inf(P: PresheafCategory, Psi: CoPresheaf) -> _Weight:
    """Infimum of a copresheaf ``Ψ`` on ``P`` by the closed formula.

    In ``PA``: ``(inf Ψ)(x) = ⋀_μ Ψ(μ)↘μ(x)``.  In ``P†A``: ``(inf Ψ)(x) = ⋁_λ λ(x)∘Ψ(λ)``.
    """
    _check_weight_on(P, Psi, CoPresheaf)
    A, q, Y = P.domain, P.q, Psi.type
    if P.variance == CONTRA:
        vals = tuple(q.hom(A.t(x), Y).meet_all(
            q.rda(A.t(x), Y, m.type, Psi[m.label], m[x]) for m in P.elements) for x in A.objects)
        return P.intern(Presheaf(A, Y, vals))
    vals = tuple(q.hom(Y, A.t(x)).join_all(
        q.cmp(Y, l.type, A.t(x), l[x], Psi[l.label]) for l in P.elements) for x in A.objects)
    return P.intern(CoPresheaf(A, Y, vals))


# -- witness searches ----------------------------------------------------------

def _first_with_row(A: QCategory, X: str, row: dict) -> Optional[str]:
    for a in A.objects:
        if A.t(a) == X and all(A(a, y) == v for y, v in row.items()):
            return a
    return None


def _first_with_column(A: QCategory, X: str, col: dict) -> Optional[str]:
    for a in A.objects:
        if A.t(a) == X and all(A(x, a) == v for x, v in col.items()):
            return a
    return None


def sup_row(A: QCategory, mu: Presheaf) -> dict:
    """The row ``A↙μ`` a supremum of ``μ`` must have."""
    q, X = A.q, mu.type
    return {y: q.hom(X, A.t(y)).meet_all(q.lda(A.t(x), X, A.t(y), A(x, y), mu[x]) for x in A.objects)
            for y in A.objects}


def inf_column(A: QCategory, lam: CoPresheaf) -> dict:
    """The column ``λ↘A`` an infimum of ``λ`` must have."""
    q, X = A.q, lam.type
    return {x: q.hom(A.t(x), X).meet_all(q.rda(A.t(x), X, A.t(y), lam[y], A(x, y)) for y in A.objects)
            for x in A.objects}


def bound_search(A: QCategory, weight: _Weight, kind: str = "sup") -> Optional[str]:
    """First object (canonical order) that is a supremum/infimum of ``weight``, or ``None``."""
    if kind == "sup":
        return _first_with_row(A, weight.type, sup_row(A, weight))
    if kind == "inf":
        return _first_with_column(A, weight.type, inf_column(A, weight))
    raise PreconditionError(f"unknown bound kind {kind!r}")


def tensor_search(A: QCategory, f: QArrow, x: str, kind: str = "tensor") -> Optional[str]:
    """Witness for ``f⊗x`` (``f: tx → X``) or ``f↣x`` (``f: X → tx``), or ``None``."""
    q, tx = A.q, A.t(x)
    if kind == "tensor":
        if f.src != tx:
            raise BoundaryMismatch("tensor needs f with source tx")
        X = f.dst
        row = {y: q.lda(tx, X, A.t(y), A(x, y), f.value) for y in A.objects}
        return _first_with_row(A, X, row)
    if kind == "cotensor":
        if f.dst != tx:
            raise BoundaryMismatch("cotensor needs f with target tx")
        X = f.src
        col = {z: q.rda(A.t(z), X, tx, f.value, A(z, x)) for z in A.objects}
        return _first_with_column(A, X, col)
    raise PreconditionError(f"unknown kind {kind!r}")


def tensor_formula(P: PresheafCategory, f: QArrow, w: _Weight, kind: str = "tensor") -> _Weight:
    """Closed forms: in ``PA`` ``f⊗μ = f∘μ`` and ``g↣μ = g↘μ``; in ``P†A`` ``f⊗λ = λ↙f`` and ``g↣λ = λ∘g``."""
    A, q, T = P.domain, P.q, w.type
    if kind == "tensor":
        if f.src != T:
            raise BoundaryMismatch("tensor needs f with source tw")
        X = f.dst
        if P.variance == CONTRA:
            vals = tuple(q.cmp(A.t(x), T, X, f.value, w[x]) for x in A.objects)
        else:
            vals = tuple(q.lda(T, X, A.t(x), w[x], f.value) for x in A.objects)
    elif kind == "cotensor":
        if f.dst != T:
            raise BoundaryMismatch("cotensor needs f with target tw")
        X = f.src
        if P.variance == CONTRA:
            vals = tuple(q.rda(A.t(x), X, T, f.value, w[x]) for x in A.objects)
        else:
            vals = tuple(q.cmp(X, T, A.t(x), w[x], f.value) for x in A.objects)
    else:
        raise PreconditionError(f"unknown kind {kind!r}")
    return P.intern(P.weight_class()(A, X, vals))


def weighted_colimit(F: QFunctor, weight: _Weight, kind: str = "colim") -> Optional[str]:
    """``colim_μ F`` (``B(c, −) = F♮↙μ``) or ``lim_λ F`` (``B(−, l) = λ↘F^♮``)."""
    A, B, q = F.source, F.target, F.source.q
    X = weight.type
    if kind == "colim":
        row = {y: q.hom(X, B.t(y)).meet_all(q.lda(A.t(x), X, B.t(y), B(F(x), y), weight[x]) for x in A.objects)
               for y in B.objects}
        return _first_with_row(B, X, row)
    if kind == "lim":
        col = {y: q.hom(B.t(y), X).meet_all(q.rda(B.t(y), X, A.t(x), weight[x], B(y, F(x))) for x in A.objects)
               for y in B.objects}
        return _first_with_column(B, X, col)
    raise PreconditionError(f"unknown kind {kind!r}")


# -- completeness --------------------------------------------------------------

def _is_join(A: QCategory, items, j: str) -> bool:
    X = A.t(j)
    if not all(A.le(s, j) for s in items):
        return False
    return all(A.le(j, u) for u in A.objects if A.t(u) == X and all(A.le(s, u) for s in items))


def _fiber(A: QCategory, X: str) -> list[str]:
    return [a for a in A.objects if A.t(a) == X]


def find_join(A: QCategory, X: str, items) -> Optional[str]:
    """First join of ``items`` in the type-``X`` fiber of the underlying preorder."""
    for j in _fiber(A, X):
        if _is_join(A, items, j):
            return j
    return None


def is_order_complete(A: QCategory) -> bool:
    """Every type fiber has all joins; for finite preorders bottom plus binary joins suffice."""
    for X in A.q.objects:
        fiber = _fiber(A, X)
        if find_join(A, X, ()) is None:
            return False
        for a, b in itertools.combinations(fiber, 2):
            if find_join(A, X, (a, b)) is None:
                return False
    return True


def is_tensored(A: QCategory, kind: str = "tensor") -> bool:
    q = A.q
    for x in A.objects:
        for X in q.objects:
            if kind == "tensor":
                arrows = (QArrow(A.t(x), X, f) for f in q.hom(A.t(x), X).carrier)
            else:
                arrows = (QArrow(X, A.t(x), f) for f in q.hom(X, A.t(x)).carrier)
            if any(tensor_search(A, f, x, kind) is None for f in arrows):
                return False
    return True


@dataclass
class CompletenessReport:
    complete: bool
    sups: dict
    tensored: bool
    cotensored: bool
    order_complete: bool
    sup_is_join_of_tensors: bool

    @property
    def equivalence_holds(self) -> bool:
        return self.complete == (self.tensored and self.cotensored and self.order_complete)

    def __bool__(self) -> bool:
        return self.complete


def is_complete(A: QCategory, cap: Optional[int] = None) -> CompletenessReport:
    """Whether every presheaf on ``A`` has a supremum, with the supremum table."""
    P = enumerate_presheaves(A, CONTRA, cap)
    sups = {m.label: bound_search(A, m, "sup") for m in P.elements}
    complete = all(s is not None for s in sups.values())
    tensored = is_tensored(A, "tensor")
    join_ok = True
    if complete:
        for m in P.elements:
            tensors = [tensor_search(A, QArrow(A.t(a), m.type, m[a]), a) for a in A.objects]
            if any(t is None for t in tensors) or not _is_join(A, tensors, sups[m.label]):
                join_ok = False
                break
    return CompletenessReport(complete, sups, tensored, is_tensored(A, "cotensor"),
                              is_order_complete(A), join_ok)


def sup_functor(A: QCategory, cap: Optional[int] = None) -> QFunctor:
    """``sup: PA → A`` for a complete ``A``."""
    P = enumerate_presheaves(A, CONTRA, cap)
    mapping = {}
    for m in P.elements:
        s = bound_search(A, m, "sup")
        if s is None:
            raise PreconditionError(f"{m.label} has no supremum; category is not complete")
        mapping[m.label] = s
    return QFunctor(P, A, mapping, name="sup")


def density_check(F: QFunctor, kind: str = "sup_dense", cap: Optional[int] = None) -> tuple[bool, dict]:
    """Whether every object of the target is ``sup F→(μ)`` (or ``inf F⇒(λ)``) for some weight.

    Returns the verdict and a map from target objects to the first witness label (or ``None``).
    """
    B = F.target
    if kind == "sup_dense":
        P = enumerate_presheaves(F.source, CONTRA, cap)
        bounds = ((w, bound_search(B, push_forward(F, w), "sup")) for w in P.elements)
    elif kind == "inf_dense":
        P = enumerate_presheaves(F.source, CO, cap)
        bounds = ((w, bound_search(B, push_forward_co(F, w), "inf")) for w in P.elements)
    else:
        raise PreconditionError(f"unknown density kind {kind!r}")
    witness: dict = {y: None for y in B.objects}
    for w, s in bounds:
        if s is None:
            continue
        for y in B.objects:
            if witness[y] is None and (y == s or B.iso(y, s)):
                witness[y] = w.label
    return all(v is not None for v in witness.values()), witness


# -- isomorphism and preservation --------------------------------------------------

def find_isomorphism(A: QCategory, B: QCategory) -> Optional[QFunctor]:
    """A type-preserving bijection with ``A(x, y) = B(Fx, Fy)``, or ``None``."""
    if len(A) != len(B) or A.q is not B.q:
        return None
    xs = A.objects
    image: list[str] = []
    used: set = set()

    def walk(i):
        if i == len(xs):
            return dict(zip(xs, image))
        x = xs[i]
        for y in B.objects:
            if y in used or B.t(y) != A.t(x):
                continue
            image.append(y)
            if all(A(x, xs[j]) == B(y, image[j]) and A(xs[j], x) == B(image[j], y) for j in range(i + 1)):
                used.add(y)
                found = walk(i + 1)
                if found is not None:
                    return found
                used.discard(y)
            image.pop()
        return None

    found = walk(0)
    return None if found is None else QFunctor(A, B, found, name="iso")


def preserves_tensors(F: QFunctor) -> bool:
    A, B, q = F.source, F.target, F.source.q
    for x in A.objects:
        for X in q.objects:
            for f in q.hom(A.t(x), X).carrier:
                arrow = QArrow(A.t(x), X, f)
                t = tensor_search(A, arrow, x)
                if t is None:
                    continue
                s = tensor_search(B, arrow, F(x))
                if s is None or not B.iso(F(t), s):
                    return False
    return True


def preserves_joins(F: QFunctor) -> bool:
    """Joins within each type fiber of the underlying preorder, including the empty join."""
    A, B = F.source, F.target
    for X in A.q.objects:
        fiber = _fiber(A, X)
        for r in range(len(fiber) + 1):
            for items in itertools.combinations(fiber, r):
                j = find_join(A, X, items)
                if j is not None and not _is_join(B, [F(s) for s in items], F(j)):
                    return False
    return True


def preserves_sups(F: QFunctor, cap: Optional[int] = None) -> bool:
    A, B = F.source, F.target
    for m in enumerate_presheaves(A, CONTRA, cap).elements:
        a = bound_search(A, m, "sup")
        if a is None:
            continue
        s = bound_search(B, push_forward(F, m), "sup")
        if s is None or not B.iso(F(a), s):
            return False
    return True
