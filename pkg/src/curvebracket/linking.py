"""Crossing combinatorics of taut curve representatives on a fat graph.

Model.  Draw a class x taut on the thickened one-vertex fat graph:
strands run parallel inside bands and all crossings happen inside the
vertex disc.  Lift to the universal cover, an infinite tree with the
same counterclockwise germ order at every vertex.  Each rotation i of x
gives a bi-infinite periodic reduced word, i.e. a line in the tree
aligned so that the vertex visit between letters -1 and 0 sits at the
base vertex.  Two lines force a transversal crossing of the projected
curves exactly when their four ends alternate in the circular order of
tree ends, which is computed from the germ order:

  * ends whose rays leave the base vertex through three distinct germs
    are oriented like those germs in the counterclockwise cyclic order;
  * two rays sharing a first germ are ordered inside their sector by
    walking to the first divergence: after a common prefix ending with
    letter w the arrival germ is -w, and the ray exiting through the
    germ that follows -w sooner counterclockwise comes first.

Counting.  A crossing pair of lines shares a segment in the tree
(possibly a single vertex, possibly traversed by the two lines in
opposite directions) and therefore shows up at one aligned rotation
pair (i, j) per shared vertex.  Each crossing is counted once, at the
unique shared vertex where the first line arrives along an edge the
second line does not use: cell (i, j) is canonical iff

    U[-1] != V[-1]   (rules out interior/far cells of parallel overlap
                      and pairs of identical lines)
    U[-1] != -V[0]   (same for overlap traversed in opposite directions
                      and for a line paired with its own reversal)

where U, V are the bi-infinite words of the two aligned lines.  The
sign of a linked pair is the circular orientation of (U forward end,
V forward end, U backward end); with counterclockwise germ order
(a, b, A, B) on the punctured torus this makes the pair of core curves
a, b linked with sign +1, the calibration pinned in the bracket module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .surface import SurfaceSymbol, germ_positions
from .words import (
    CyclicClass,
    PreconditionError,
    TrivialClassError,
    primitive_root,
)


class UnguaranteedPairError(PreconditionError):
    """The input pair is outside the regime where the linked-pair count
    is guaranteed to equal the geometric intersection number."""


@dataclass(frozen=True)
class Occurrence:
    """A rotation of a class: the strand aligned at vertex visit i."""

    cls: CyclicClass
    index: int

    def __post_init__(self):
        if not 0 <= self.index < max(len(self.cls), 1):
            raise ValueError("rotation index out of range")


@dataclass(frozen=True)
class LinkedPair:
    """A pair of occurrences forcing a transversal crossing, with sign."""

    occ1: Occurrence
    occ2: Occurrence
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")


def turn_sign(s: SurfaceSymbol, d: int, x: int, y: int) -> int:
    """+1 if (d, x, y) occur counterclockwise in the germ order, else -1."""
    if d == x or d == y or x == y:
        raise ValueError("turn_sign needs three pairwise distinct germs")
    pos = germ_positions(s)
    n2 = 2 * s.rank
    return 1 if (pos[x] - pos[d]) % n2 < (pos[y] - pos[d]) % n2 else -1


def _orient(pos: dict[int, int], n2: int, g1: int, g2: int, g3: int) -> int:
    return 1 if (pos[g2] - pos[g1]) % n2 < (pos[g3] - pos[g1]) % n2 else -1


@lru_cache(maxsize=1 << 18)
def _linked_cells(
    s: SurfaceSymbol, x: tuple[int, ...], y: tuple[int, ...]
) -> tuple[tuple[int, int, int], ...]:
    """All canonical linked cells (i, j, sign) of the rotation grid."""
    pos = germ_positions(s)
    n2 = 2 * s.rank
    m, l = len(x), len(y)
    cap = m + l + 1  # Fine-Wilf: distinct periodic rays diverge before this
    cells = []
    for i in range(m):
        u_prev = x[i - 1]
        u0 = x[i]
        for j in range(l):
            v_prev = y[j - 1]
            v0 = y[j]
            if u_prev == v_prev or u_prev == -v0:
                continue  # not the canonical cell for this pair of lines

            # forward side: V's forward ray against the U line
            if u0 == v0:
                k = 1
                while x[(i + k) % m] == y[(j + k) % l]:
                    k += 1
                    if k > cap:
                        raise AssertionError("rays failed to diverge")
                s1 = _orient(pos, n2, -x[(i + k - 1) % m], x[(i + k) % m], y[(j + k) % l])
            else:
                s1 = _orient(pos, n2, u0, v0, -u_prev)

            # backward side: V's backward ray against the U line
            if u0 == -v_prev:
                k = 1
                while x[(i + k) % m] == -y[(j - 1 - k) % l]:
                    k += 1
                    if k > cap:
                        raise AssertionError("rays failed to diverge")
                s2 = _orient(pos, n2, -x[(i + k - 1) % m], x[(i + k) % m], -y[(j - 1 - k) % l])
            else:
                s2 = _orient(pos, n2, u0, -v_prev, -u_prev)

            if s1 != s2:
                cells.append((i, j, s1))
    return tuple(cells)


def linked_pairs(
    s: SurfaceSymbol, x: CyclicClass, y: CyclicClass
) -> tuple[LinkedPair, ...]:
    """All linked pairs of occurrences of x and y, ordered by (i, j).

    Every forced crossing of taut representatives appears exactly once.
    Pairs of equal or mutually inverse strands never link (parallel taut
    copies are drawn disjoint).
    """
    if x.is_trivial or y.is_trivial:
        raise TrivialClassError("linked pairs need non-trivial classes")
    return tuple(
        LinkedPair(Occurrence(x, i), Occurrence(y, j), sign)
        for i, j, sign in _linked_cells(s, x.letters, y.letters)
    )


def intersection_number(s: SurfaceSymbol, x: CyclicClass, y: CyclicClass) -> int:
    """Geometric intersection number of two primitive classes with
    distinct primitive roots; the linked-pair count."""
    if x.is_trivial or y.is_trivial:
        raise TrivialClassError("intersection number needs non-trivial classes")
    root_x, mult_x = primitive_root(x)
    root_y, mult_y = primitive_root(y)
    if mult_x != 1 or mult_y != 1:
        raise UnguaranteedPairError(
            "intersection_number is only guaranteed for primitive classes; "
            "use linked_pairs for the raw count"
        )
    if root_x == root_y:
        raise UnguaranteedPairError(
            "intersection_number is only guaranteed for distinct primitive roots"
        )
    return len(_linked_cells(s, x.letters, y.letters))


def self_intersection(s: SurfaceSymbol, x: CyclicClass) -> int:
    """Self-intersection number of a primitive class: linked pairs of x
    with itself, one per unordered pair of occurrences."""
    if x.is_trivial:
        raise TrivialClassError("self-intersection needs a non-trivial class")
    _, mult = primitive_root(x)
    if mult != 1:
        raise UnguaranteedPairError("self_intersection requires a primitive class")
    cells = _linked_cells(s, x.letters, x.letters)
    if len(cells) % 2:
        raise AssertionError("self linked cells must pair up")
    return len(cells) // 2


__all__ = [
    "LinkedPair",
    "Occurrence",
    "UnguaranteedPairError",
    "intersection_number",
    "linked_pairs",
    "self_intersection",
    "turn_sign",
]
