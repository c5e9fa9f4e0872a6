"""Small constructors shared by the test modules."""
from qlab import QCategory


def discrete(q, ids, name=""):
    return QCategory.build(q, [(i, "*") for i in ids], name=name)


def poset(q, ids, less, name=""):
    """Two-valued category of a poset given by its strict pairs (reflexivity is implicit)."""
    return QCategory.build(q, [(i, "*") for i in ids], {(x, y): "1" for x, y in less}, name=name)


def support(w):
    return frozenset(w.support())
