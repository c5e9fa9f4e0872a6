"""Finite quantaloids stored as explicit tables.

Every hom-object is a finite lattice given by its order relation and its
binary join/meet tables.  Composition is a table per composable triple of
objects.  Implications are computed on demand as joins over the filtered
carrier and memoised per quantaloid instance.

Internal code uses the positional helpers :meth:`Quantaloid.cmp`,
:meth:`Quantaloid.lda` and :meth:`Quantaloid.rda`, which take the object
types explicitly because element labels are only meaningful inside their
hom-lattice.  The typed public API works on :class:`QArrow` values.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import BoundaryMismatch, PreconditionError, StructuralError
from .report import Report

# Exhaustive subset checks are only run for carriers up to this size; above it
# binary joins plus the empty join are checked, which is equivalent for
# finite lattices.
SUBSET_CHECK_LIMIT = 10


@dataclass(frozen=True, eq=False)
class HomLattice:
    carrier: tuple[str, ...]
    leq: frozenset
    joins: Mapping[tuple[str, str], str]
    meets: Mapping[tuple[str, str], str]
    top: str
    bottom: str

    @classmethod
    def from_order(cls, carrier: Iterable[str], leq_pairs: Iterable[tuple[str, str]]) -> "HomLattice":
        """Build the lattice on ``carrier`` whose order is the reflexive closure of ``leq_pairs``.

        Joins and meets are looked up by brute force; a missing bound raises
        :class:`StructuralError`.
        """
        carrier = tuple(carrier)
        leq = set(leq_pairs) | {(a, a) for a in carrier}
        if not carrier:
            raise StructuralError("empty carrier")

        def lub(a, b):
            ups = [u for u in carrier if (a, u) in leq and (b, u) in leq]
            least = [u for u in ups if all((u, v) in leq for v in ups)]
            if not least:
                raise StructuralError(f"no join of {a} and {b}")
            return least[0]

        def glb(a, b):
            downs = [d for d in carrier if (d, a) in leq and (d, b) in leq]
            great = [d for d in downs if all((v, d) in leq for v in downs)]
            if not great:
                raise StructuralError(f"no meet of {a} and {b}")
            return great[0]

        joins = {(a, b): lub(a, b) for a in carrier for b in carrier}
        meets = {(a, b): glb(a, b) for a in carrier for b in carrier}
        top = [t for t in carrier if all((a, t) in leq for a in carrier)]
        bottom = [z for z in carrier if all((z, a) in leq for a in carrier)]
        if not top or not bottom:
            raise StructuralError("lattice lacks top or bottom")
        return cls(carrier, frozenset(leq), joins, meets, top[0], bottom[0])

    @classmethod
    def chain(cls, labels: Iterable[str]) -> "HomLattice":
        labels = tuple(labels)
        leq = {(labels[i], labels[j]) for i in range(len(labels)) for j in range(i, len(labels))}
        return cls.from_order(labels, leq)

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.carrier)}

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def join(self, a: str, b: str) -> str:
        return self.joins[a, b]

    def meet(self, a: str, b: str) -> str:
        return self.meets[a, b]

    def join_all(self, items: Iterable[str]) -> str:
        acc = self.bottom
        for e in items:
            acc = self.joins[acc, e]
        return acc

    def meet_all(self, items: Iterable[str]) -> str:
        acc = self.top
        for e in items:
            acc = self.meets[acc, e]
        return acc

    def __contains__(self, e) -> bool:
        return e in self.index

    def __len__(self) -> int:
        return len(self.carrier)


@dataclass(frozen=True)
class DualizingFamily:
    """One endo-arrow ``d[A]`` per object; makes a Girard quantaloid when cyclic and dualizing."""

    d: Mapping[str, str]

    def __hash__(self):
        return hash(tuple(sorted(self.d.items())))


@dataclass(frozen=True)
class QArrow:
    src: str
    dst: str
    value: str


@dataclass(frozen=True, eq=False)
class Quantaloid:
    objects: tuple[str, ...]
    homs: Mapping[tuple[str, str], HomLattice]
    tables: Mapping[tuple[str, str, str], Mapping[tuple[str, str], str]]
    units: Mapping[str, str]
    dualizing: Optional[DualizingFamily] = None
    name: str = "custom"
    _memo: dict = field(default_factory=dict, repr=False)

    def __repr__(self) -> str:
        return f"Quantaloid({self.name!r}, objects={self.objects!r})"

    def hom(self, a: str, b: str) -> HomLattice:
        return self.homs[a, b]

    def unit(self, a: str) -> str:
        return self.units[a]

    def le(self, a: str, b: str, f: str, g: str) -> bool:
        return (f, g) in self.homs[a, b].leq

    def cmp(self, a: str, b: str, c: str, g: str, f: str) -> str:
        """``g∘f`` for ``f: a→b`` and ``g: b→c``."""
        return self.tables[a, b, c][g, f]

    def lda(self, a: str, b: str, x: str, g: str, f: str) -> str:
        """Left implication ``g↙f: b→x`` for ``g: a→x`` and ``f: a→b``."""
        key = ("l", a, b, x, g, f)
        memo = self._memo
        if key not in memo:
            table = self.tables[a, b, x]
            target = self.homs[a, x].leq
            hbx = self.homs[b, x]
            memo[key] = hbx.join_all(h for h in hbx.carrier if (table[h, f], g) in target)
        return memo[key]

    def rda(self, x: str, a: str, b: str, f: str, g: str) -> str:
        """Right implication ``f↘g: x→a`` for ``f: a→b`` and ``g: x→b``."""
        key = ("r", x, a, b, f, g)
        memo = self._memo
        if key not in memo:
            table = self.tables[x, a, b]
            target = self.homs[x, b].leq
            hxa = self.homs[x, a]
            memo[key] = hxa.join_all(h for h in hxa.carrier if (table[f, h], g) in target)
        return memo[key]

    def neg(self, a: str, b: str, f: str) -> str:
        """``¬f = d_a↙f : b→a`` using the attached dualizing family."""
        if self.dualizing is None:
            raise PreconditionError(f"{self.name} carries no dualizing family")
        return self.lda(a, b, a, self.dualizing.d[a], f)

    @property
    def is_girard(self) -> bool:
        if self.dualizing is None:
            return False
        key = ("girard", self.dualizing)
        if key not in self._memo:
            self._memo[key] = validate_dualizing_family(self, self.dualizing).ok
        return self._memo[key]

    def with_tables(self, tables) -> "Quantaloid":
        """Copy with a replaced composition table (used to build mutants)."""
        return Quantaloid(self.objects, self.homs, tables, self.units, self.dualizing, self.name + "'")


# -- typed public API ---------------------------------------------------------

def _check_arrow(q: Quantaloid, f: QArrow) -> None:
    if (f.src, f.dst) not in q.homs or f.value not in q.homs[f.src, f.dst]:
        raise BoundaryMismatch(f"{f} is not an arrow of {q.name}")


def compose(q: Quantaloid, g: QArrow, f: QArrow) -> QArrow:
    _check_arrow(q, g)
    _check_arrow(q, f)
    if f.dst != g.src:
        raise BoundaryMismatch(f"cannot compose {g} after {f}")
    return QArrow(f.src, g.dst, q.cmp(f.src, f.dst, g.dst, g.value, f.value))


def left_implication(q: Quantaloid, g: QArrow, f: QArrow) -> QArrow:
    """``g↙f``: the largest ``h`` with ``h∘f ≤ g``."""
    _check_arrow(q, g)
    _check_arrow(q, f)
    if g.src != f.src:
        raise BoundaryMismatch(f"source mismatch: {g} vs {f}")
    return QArrow(f.dst, g.dst, q.lda(f.src, f.dst, g.dst, g.value, f.value))


def right_implication(q: Quantaloid, f: QArrow, g: QArrow) -> QArrow:
    """``f↘g``: the largest ``h`` with ``f∘h ≤ g``."""
    _check_arrow(q, g)
    _check_arrow(q, f)
    if f.dst != g.dst:
        raise BoundaryMismatch(f"target mismatch: {f} vs {g}")
    return QArrow(g.src, f.src, q.rda(g.src, f.src, f.dst, f.value, g.value))


def is_arrow_adjunction(q: Quantaloid, f: QArrow, g: QArrow) -> bool:
    _check_arrow(q, f)
    _check_arrow(q, g)
    a, b = f.src, f.dst
    if (g.src, g.dst) != (b, a):
        raise BoundaryMismatch(f"{g} is not typed opposite to {f}")
    return (q.le(a, a, q.unit(a), q.cmp(a, b, a, g.value, f.value))
            and q.le(b, b, q.cmp(b, a, b, f.value, g.value), q.unit(b)))


def negation(q: Quantaloid, family: DualizingFamily, f: QArrow) -> QArrow:
    key = ("girard", family)
    if key not in q._memo:
        q._memo[key] = validate_dualizing_family(q, family).ok
    if not q._memo[key]:
        raise PreconditionError("family is not cyclic and dualizing")
    _check_arrow(q, f)
    return QArrow(f.dst, f.src, q.lda(f.src, f.dst, f.src, family.d[f.src], f.value))


# -- validation ---------------------------------------------------------------

def _structural_checks(q: Quantaloid, rep: Report) -> None:
    if len(set(q.objects)) != len(q.objects):
        rep.add("duplicate objects", structural=True, objects=q.objects)
    for a, b in itertools.product(q.objects, repeat=2):
        lat = q.homs.get((a, b))
        if lat is None:
            rep.add("missing hom", structural=True, hom=f"{a}->{b}")
            continue
        where = f"{a}->{b}"
        if not lat.carrier:
            rep.add("empty carrier", structural=True, hom=where)
            continue
        if len(set(lat.carrier)) != len(lat.carrier):
            rep.add("duplicate carrier elements", structural=True, hom=where)
        members = set(lat.carrier)
        for e in (lat.top, lat.bottom):
            if e not in members:
                rep.add("bound outside carrier", structural=True, hom=where, element=e)
        for x, y in lat.leq:
            if x not in members or y not in members:
                rep.add("order pair outside carrier", structural=True, hom=where, pair=(x, y))
        for name, table in (("join", lat.joins), ("meet", lat.meets)):
            for x, y in itertools.product(lat.carrier, repeat=2):
                v = table.get((x, y))
                if v is None:
                    rep.add(f"missing {name} entry", structural=True, hom=where, pair=(x, y))
                elif v not in members:
                    rep.add(f"{name} entry outside carrier", structural=True, hom=where, pair=(x, y), value=v)
    if rep:
        return
    for a in q.objects:
        u = q.units.get(a)
        if u is None:
            rep.add("missing unit", structural=True, object=a)
        elif u not in q.homs[a, a]:
            rep.add("unit outside carrier", structural=True, object=a, value=u)
    for a, b, c in itertools.product(q.objects, repeat=3):
        table = q.tables.get((a, b, c))
        where = f"{a}->{b}->{c}"
        if table is None:
            rep.add("missing compose table", structural=True, table=where)
            continue
        target = q.homs[a, c]
        for g, f in itertools.product(q.homs[b, c].carrier, q.homs[a, b].carrier):
            v = table.get((g, f))
            if v is None:
                rep.add("missing compose entry", structural=True, table=where, pair=(g, f))
            elif v not in target:
                rep.add("compose entry outside carrier", structural=True, table=where, pair=(g, f), value=v)


def _lattice_checks(lat: HomLattice, where: str, rep: Report) -> None:
    c = lat.carrier
    le = lat.le
    for a in c:
        if not le(a, a):
            rep.add("order reflexivity", hom=where, a=a)
    for a, b in itertools.product(c, repeat=2):
        if a != b and le(a, b) and le(b, a):
            rep.add("order antisymmetry", hom=where, a=a, b=b)
    for a, b, d in itertools.product(c, repeat=3):
        if le(a, b) and le(b, d) and not le(a, d):
            rep.add("order transitivity", hom=where, a=a, b=b, c=d)
    for a, b in itertools.product(c, repeat=2):
        j, m = lat.join(a, b), lat.meet(a, b)
        if not (le(a, j) and le(b, j)) or any(le(a, u) and le(b, u) and not le(j, u) for u in c):
            rep.add("join is least upper bound", hom=where, a=a, b=b, join=j)
        if not (le(m, a) and le(m, b)) or any(le(d, a) and le(d, b) and not le(d, m) for d in c):
            rep.add("meet is greatest lower bound", hom=where, a=a, b=b, meet=m)
    for e in c:
        if not le(lat.bottom, e) or not le(e, lat.top):
            rep.add("bottom/top bounds", hom=where, element=e)


def _subsets(carrier):
    if len(carrier) <= SUBSET_CHECK_LIMIT:
        for r in range(len(carrier) + 1):
            yield from itertools.combinations(carrier, r)
    else:
        yield ()
        yield from itertools.combinations(carrier, 2)


def validate_quantaloid(q: Quantaloid) -> Report:
    """Check lattice, associativity, unit and join-preservation laws exhaustively.

    Structural problems are reported with ``structural=True`` and stop the
    axiom checks, which would otherwise read missing entries.
    """
    rep = Report(module="quantaloid")
    _structural_checks(q, rep)
    if rep:
        return rep
    objs = q.objects
    for a, b in itertools.product(objs, repeat=2):
        _lattice_checks(q.homs[a, b], f"{a}->{b}", rep)
    if rep:
        return rep
    for a, b in itertools.product(objs, repeat=2):
        for f in q.homs[a, b].carrier:
            if q.cmp(a, b, b, q.unit(b), f) != f:
                rep.add("left unit law", src=a, dst=b, f=f)
            if q.cmp(a, a, b, f, q.unit(a)) != f:
                rep.add("right unit law", src=a, dst=b, f=f)
    for a, b, c, d in itertools.product(objs, repeat=4):
        for f in q.homs[a, b].carrier:
            for g in q.homs[b, c].carrier:
                gf = q.cmp(a, b, c, g, f)
                for h in q.homs[c, d].carrier:
                    if q.cmp(a, c, d, h, gf) != q.cmp(a, b, d, q.cmp(b, c, d, h, g), f):
                        rep.add("associativity", objects=(a, b, c, d), f=f, g=g, h=h)
    for a, b, c in itertools.product(objs, repeat=3):
        hab, hbc, hac = q.homs[a, b], q.homs[b, c], q.homs[a, c]
        for s in _subsets(hab.carrier):
            js = hab.join_all(s)
            for g in hbc.carrier:
                if q.cmp(a, b, c, g, js) != hac.join_all(q.cmp(a, b, c, g, f) for f in s):
                    rep.add("join preservation (right argument)", objects=(a, b, c), g=g, subset=s)
        for s in _subsets(hbc.carrier):
            js = hbc.join_all(s)
            for f in hab.carrier:
                if q.cmp(a, b, c, js, f) != hac.join_all(q.cmp(a, b, c, g, f) for g in s):
                    rep.add("join preservation (left argument)", objects=(a, b, c), f=f, subset=s)
    return rep


def validate_dualizing_family(q: Quantaloid, family: DualizingFamily) -> Report:
    rep = Report(module="quantaloid")
    for a in q.objects:
        if a not in family.d:
            rep.add("family not total", structural=True, object=a)
        elif family.d[a] not in q.homs[a, a]:
            rep.add("family element outside carrier", structural=True, object=a, value=family.d[a])
    if rep:
        return rep
    d = family.d
    for a, b in itertools.product(q.objects, repeat=2):
        for f in q.homs[a, b].carrier:
            left = q.lda(a, b, a, d[a], f)
            right = q.rda(b, a, b, f, d[b])
            if left != right:
                rep.add("cyclic", src=a, dst=b, f=f, left=left, right=right)
            if q.rda(a, b, a, left, d[a]) != f:
                rep.add("dualizing (d_A↙f)↘d_A = f", src=a, dst=b, f=f)
            if q.lda(b, a, b, d[b], right) != f:
                rep.add("dualizing d_B↙(f↘d_B) = f", src=a, dst=b, f=f)
    return rep


# -- built-in quantaloids -----------------------------------------------------

def _label(k: int, n: int) -> str:
    return str(Fraction(k, n - 1))


@functools.lru_cache(maxsize=None)
def builtin_quantaloid(name: str, n: Optional[int] = None) -> Quantaloid:
    """Fixture factory: ``boolean``, ``lukasiewicz`` (n levels) or ``rel_like`` (n objects).

    All three come with the bottom element as dualizing family.
    """
    if name == "boolean":
        return _two_valued(("*",), "boolean")
    if name == "lukasiewicz":
        if n is None or n < 2:
            raise PreconditionError("lukasiewicz needs n >= 2")
        labels = tuple(_label(k, n) for k in range(n))
        lat = HomLattice.chain(labels)
        top = n - 1
        table = {(labels[i], labels[j]): labels[max(0, i + j - top)]
                 for i in range(n) for j in range(n)}
        return Quantaloid(("*",), {("*", "*"): lat}, {("*", "*", "*"): table},
                          {"*": labels[-1]}, DualizingFamily({"*": labels[0]}), f"lukasiewicz({n})")
    if name == "rel_like":
        if n is None or n < 1:
            raise PreconditionError("rel_like needs at least one object")
        names = tuple(chr(ord("A") + i) for i in range(n)) if n <= 26 else tuple(f"A{i}" for i in range(n))
        return _two_valued(names, f"rel_like({n})")
    raise PreconditionError(f"unknown builtin quantaloid {name!r}")


def _two_valued(objects: tuple[str, ...], name: str) -> Quantaloid:
    lat = HomLattice.chain(("0", "1"))
    meet = {(g, f): lat.meet(g, f) for g in lat.carrier for f in lat.carrier}
    homs = {(a, b): lat for a in objects for b in objects}
    tables = {k: meet for k in itertools.product(objects, repeat=3)}
    return Quantaloid(objects, homs, tables, {a: "1" for a in objects},
                      DualizingFamily({a: "0" for a in objects}), name)


def boolean() -> Quantaloid:
    return builtin_quantaloid("boolean")


def lukasiewicz(n: int) -> Quantaloid:
    return builtin_quantaloid("lukasiewicz", n)


def rel_like(k: int) -> Quantaloid:
    return builtin_quantaloid("rel_like", k)
