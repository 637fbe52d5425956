"""Matrices shipped with the package so checks need no external files."""

from __future__ import annotations

from .matrices import LabeledIntMatrix

_E6 = tuple(f"e{i}" for i in range(1, 7))

# B_G of two triangles sharing a vertex, each oriented cyclically: vertices
# u=1, a=2, b=3, c=4, d=5 and arcs e1=b->a, e2=a->u, e3=u->b, e4=u->c,
# e5=d->u, e6=c->d.  Its permanent is 0 (as for every orientation).
B1_3_3_STORED = LabeledIntMatrix(
    _E6,
    _E6,
    (
        (0, 1, -1, 0, 0, 0),
        (-1, 0, 1, 1, 1, 0),
        (1, -1, 0, -1, -1, 0),
        (0, -1, -1, 0, -1, 1),
        (0, 1, 1, 1, 0, -1),
        (0, 0, 0, -1, 1, 0),
    ),
)

# Columns e1, e2 and e4 of the matrix above, each taken twice: a witness
# for pind(B) <= 2 with permanent -8.
B1_3_3_STORED_SELECTION = LabeledIntMatrix(
    _E6,
    ("e1", "e1#2", "e2", "e2#2", "e4", "e4#2"),
    (
        (0, 0, 1, 1, 0, 0),
        (-1, -1, 0, 0, 1, 1),
        (1, 1, -1, -1, -1, -1),
        (0, 0, -1, -1, 0, 0),
        (0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, -1, -1),
    ),
)

# the lower-right block produced when a triangle is glued on (rows e32, e31,
# e21; columns v2, v3, e31 - e21)
K3_BLOCK = LabeledIntMatrix(
    ("e32", "e31", "e21"),
    ("v2", "v3", "e31-e21"),
    ((1, -1, -2), (0, -1, -1), (-1, 0, 1)),
)

FIXTURES = {
    "b1-3-3-stored": B1_3_3_STORED,
    "b1-3-3-stored-selection": B1_3_3_STORED_SELECTION,
    "k3-block": K3_BLOCK,
}


def fixture(name: str) -> LabeledIntMatrix:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
