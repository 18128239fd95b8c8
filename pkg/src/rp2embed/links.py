"""Three-component links (two circles and a point pair, or one circle and two pairs).

A link is split when some circle bounding a disk has exactly two pieces
inside and the third outside; the point pair counts as one piece.  For two
disjoint cycles ``A``, ``B`` and a vertex pair this leaves two nonsplit
patterns:

* ``NonsplitIa``: neither cycle lies in the other's disk, and each disk
  holds one of the two points;
* ``NonsplitIb``: ``B`` lies in the disk of ``A``, one point is inside the
  disk of ``A`` (possibly inside ``B`` as well) and the other outside it.

A 1-homologous cycle bounds no disk and always leaves the link split.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .config import Budget, BudgetExceeded
from .graph import Cycle, Graph
from .rp2 import (
    EmbeddingError,
    NotEmbeddableError,
    Rp2Embedding,
    embedding_to_json,
    enumerate_rp2_embeddings,
    sides_of_zero_cycle,
)
from .scheme import HomologyClass, Surface
from .verdict import INCONCLUSIVE, PreconditionError, PropertyVerdict

TYPE2_INTERPRETATION = "derived"


class LinkError(ValueError):
    """Link pieces overlap or do not belong to the graph."""


class LinkClass(str, enum.Enum):
    SPLIT = "Split"
    NONSPLIT_IA = "NonsplitIa"
    NONSPLIT_IB = "NonsplitIb"
    NONSPLIT_II = "NonsplitII"

    @property
    def nonsplit(self) -> bool:
        return self is not LinkClass.SPLIT


def _pair(p: tuple[int, int]) -> tuple[int, int]:
    a, b = int(p[0]), int(p[1])
    if a == b:
        raise LinkError("a point pair needs two distinct vertices")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class TypeILink:
    cycle_a: Cycle
    cycle_b: Cycle
    points: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", _pair(self.points))
        a, b = set(self.cycle_a.vertices), set(self.cycle_b.vertices)
        if a & b:
            raise LinkError("the two cycles share a vertex")
        if set(self.points) & (a | b):
            raise LinkError("a point lies on one of the cycles")


@dataclass(frozen=True)
class TypeIILink:
    cycle: Cycle
    pair_a: tuple[int, int]
    pair_b: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pair_a", _pair(self.pair_a))
        object.__setattr__(self, "pair_b", _pair(self.pair_b))
        pts = set(self.pair_a) | set(self.pair_b)
        if len(pts) != 4:
            raise LinkError("the two pairs share a vertex")
        if pts & set(self.cycle.vertices):
            raise LinkError("a point lies on the cycle")


@dataclass(frozen=True)
class ClassifiedLink:
    link: TypeILink | TypeIILink
    link_class: LinkClass

    def to_json(self, embedding: Rp2Embedding | None = None) -> dict[str, Any]:
        if isinstance(self.link, TypeILink):
            out: dict[str, Any] = {
                "type": "I",
                "cycles": [list(self.link.cycle_a.vertices), list(self.link.cycle_b.vertices)],
                "points": list(self.link.points),
            }
        else:
            out = {
                "type": "II",
                "cycles": [list(self.link.cycle.vertices)],
                "pairs": [list(self.link.pair_a), list(self.link.pair_b)],
                "interpretation": TYPE2_INTERPRETATION,
            }
        out["class"] = self.link_class.value
        if embedding is not None:
            out["embedding"] = embedding_to_json(embedding)
        return out


def _check_in_graph(e: Rp2Embedding, cycles: list[Cycle], points: list[int]) -> None:
    for c in cycles:
        if not c.is_in(e.graph):
            raise LinkError(f"{c.vertices} is not a cycle of the graph")
    for p in points:
        if not 0 <= p < e.graph.vertex_count:
            raise LinkError(f"vertex {p} is not in the graph")


def classify_type1(e: Rp2Embedding, link: TypeILink) -> LinkClass:
    a, b = link.cycle_a, link.cycle_b
    p, q = link.points
    _check_in_graph(e, [a, b], [p, q])
    if e.homology(a) is HomologyClass.ONE or e.homology(b) is HomologyClass.ONE:
        return LinkClass.SPLIT
    sa, sb = sides_of_zero_cycle(e, a), sides_of_zero_cycle(e, b)
    if b.vertices[0] in sa.inside.vertices:
        outer = sa
    elif a.vertices[0] in sb.inside.vertices:
        outer = sb
    else:
        if (p in sa.inside.vertices and q in sb.inside.vertices) or (
            q in sa.inside.vertices and p in sb.inside.vertices
        ):
            return LinkClass.NONSPLIT_IA
        return LinkClass.SPLIT
    # a disk holding both points would contain the outer cycle and hence
    # the inner one; a disk holding neither misses a piece
    if (p in outer.inside.vertices) != (q in outer.inside.vertices):
        return LinkClass.NONSPLIT_IB
    return LinkClass.SPLIT


def classify_type2(e: Rp2Embedding, link: TypeIILink) -> LinkClass:
    """Nonsplit when the cycle bounds a disk, every pair has a point in it
    and some point lies outside it.

    A pair wholly outside can be cut off together with nothing else, so
    a circle around the cycle and the other pair splits the link; with all
    four points inside, a circle inside the disk around both pairs does.
    """
    c = link.cycle
    _check_in_graph(e, [c], list(link.pair_a) + list(link.pair_b))
    if e.homology(c) is HomologyClass.ONE:
        return LinkClass.SPLIT
    inside = sides_of_zero_cycle(e, c).inside.vertices
    counts = [sum(v in inside for v in pair) for pair in (link.pair_a, link.pair_b)]
    if min(counts) >= 1 and sum(counts) < 4:
        return LinkClass.NONSPLIT_II
    return LinkClass.SPLIT


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def has_nonsplit_type1(e: Rp2Embedding) -> ClassifiedLink | None:
    """First nonsplit two-cycle link found in ``e``, or ``None``."""
    full = e.all_mask
    zeros = e.zero_cycles
    for i, za in enumerate(zeros):
        if not za.inside_mask:
            continue
        outside_a = full & ~za.vertex_mask & ~za.inside_mask
        for j, zb in enumerate(zeros):
            if i == j or za.vertex_mask & zb.vertex_mask:
                continue
            if zb.vertex_mask & za.inside_mask:
                inner_point = za.inside_mask & ~zb.vertex_mask
                if outside_a and inner_point:
                    link = TypeILink(za.cycle, zb.cycle, (_low(inner_point), _low(outside_a)))
                    return ClassifiedLink(link, LinkClass.NONSPLIT_IB)
            elif j > i and zb.inside_mask and not za.vertex_mask & zb.inside_mask:
                link = TypeILink(za.cycle, zb.cycle, (_low(za.inside_mask), _low(zb.inside_mask)))
                return ClassifiedLink(link, LinkClass.NONSPLIT_IA)
    return None


def has_nonsplit_type2(e: Rp2Embedding) -> ClassifiedLink | None:
    full = e.all_mask
    for z in e.zero_cycles:
        inside = z.inside_mask
        outside = full & ~z.vertex_mask & ~inside
        if bin(inside).count("1") >= 2 and outside and bin(inside | outside).count("1") >= 4:
            i1 = _low(inside)
            i2 = _low(inside & ~(1 << i1))
            o1 = _low(outside)
            fourth = _low((inside | outside) & ~(1 << i1 | 1 << i2 | 1 << o1))
            return ClassifiedLink(TypeIILink(z.cycle, (i1, o1), (i2, fourth)), LinkClass.NONSPLIT_II)
    return None


def _universal_link_check(
    g: Graph, surface: Surface, property_id: str, budget: Budget | None, workers: int, reduced: bool
) -> PropertyVerdict:
    try:
        for e in enumerate_rp2_embeddings(g, surface=surface, reduced=reduced, budget=budget, workers=workers):
            if has_nonsplit_type1(e) is None:
                return PropertyVerdict(property_id, False, embedding=e)
    except BudgetExceeded as exc:
        return PropertyVerdict(property_id, None, INCONCLUSIVE, note=str(exc))
    return PropertyVerdict(property_id, True)


def is_ippi3l(g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True) -> PropertyVerdict:
    """Whether every projective-plane embedding holds a nonsplit two-cycle link."""
    from .props import require_projective_planar

    require_projective_planar(g, budget=budget, workers=workers)
    return _universal_link_check(g, Surface.PROJECTIVE, "ippi3l", budget, workers, reduced)


def is_ii3l_plane(g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True) -> PropertyVerdict:
    """Plane analogue of :func:`is_ippi3l`."""
    from .props import is_planar

    if not is_planar(g, budget=budget, workers=workers):
        raise PreconditionError("graph is not planar")
    try:
        return _universal_link_check(g, Surface.PLANE, "ii3l-plane", budget, workers, reduced)
    except NotEmbeddableError as exc:
        raise PreconditionError(str(exc)) from None


__all__ = [
    "ClassifiedLink",
    "EmbeddingError",
    "LinkClass",
    "LinkError",
    "TypeILink",
    "TypeIILink",
    "classify_type1",
    "classify_type2",
    "has_nonsplit_type1",
    "has_nonsplit_type2",
    "is_ii3l_plane",
    "is_ippi3l",
]
