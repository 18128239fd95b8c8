"""Graph properties decided by quantifying over all embeddings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .config import Budget, BudgetExceeded
from .graph import Graph, component_graphs, one_step_minors
from .rp2 import (
    NotEmbeddableError,
    Rp2Embedding,
    all_pairs_share_face,
    enumerate_rp2_embeddings,
    find_separating_zero_cycle,
    has_face_with_all_vertices,
    is_closed_cell,
    pair_without_common_face,
)
from .scheme import Surface, enumerate_schemes
from .verdict import INCONCLUSIVE, PreconditionError, PropertyVerdict


def find_separating_cycle(e: Rp2Embedding):
    """A 0-homologous cycle with off-cycle vertices on both of its sides."""
    z = find_separating_zero_cycle(e)
    return None if z is None else z.cycle


# ----------------------------------------------------------------------------
# embeddability

def _has_schemes(g: Graph, surface: Surface, budget: Budget | None, workers: int) -> bool:
    return next(enumerate_schemes(g, surface, budget=budget, workers=workers), None) is not None


def is_planar(g: Graph, *, budget: Budget | None = None, workers: int = 1) -> bool:
    return all(_has_schemes(sub, Surface.PLANE, budget, workers) for sub, _ in component_graphs(g))


def is_projective_planar(g: Graph, *, budget: Budget | None = None, workers: int = 1) -> bool:
    nonplanar = 0
    for sub, _ in component_graphs(g):
        if _has_schemes(sub, Surface.PLANE, budget, workers):
            continue
        if not _has_schemes(sub, Surface.PROJECTIVE, budget, workers):
            return False
        nonplanar += 1
    return nonplanar <= 1


def require_projective_planar(g: Graph, *, budget: Budget | None = None, workers: int = 1) -> None:
    if not is_projective_planar(g, budget=budget, workers=workers):
        raise PreconditionError("graph is not projective planar")


# ----------------------------------------------------------------------------
# generic quantifiers

def _stream(g: Graph, surface: Surface, budget: Budget | None, workers: int, reduced: bool) -> Iterator[Rp2Embedding]:
    return enumerate_rp2_embeddings(g, surface=surface, reduced=reduced, budget=budget, workers=workers)


def _for_all(
    property_id: str,
    g: Graph,
    holds: Callable[[Rp2Embedding], bool],
    *,
    budget: Budget | None,
    workers: int,
    reduced: bool,
    surface: Surface = Surface.PROJECTIVE,
) -> PropertyVerdict:
    try:
        for e in _stream(g, surface, budget, workers, reduced):
            if not holds(e):
                return PropertyVerdict(property_id, False, embedding=e)
    except BudgetExceeded as exc:
        return PropertyVerdict(property_id, None, INCONCLUSIVE, note=str(exc))
    return PropertyVerdict(property_id, True)


def _exists(
    property_id: str,
    g: Graph,
    holds: Callable[[Rp2Embedding], bool],
    *,
    budget: Budget | None,
    workers: int,
    reduced: bool,
    surface: Surface = Surface.PROJECTIVE,
) -> PropertyVerdict:
    verdict = _for_all(property_id, g, lambda e: not holds(e), budget=budget, workers=workers, reduced=reduced,
                       surface=surface)
    return verdict.negated(property_id)


# ----------------------------------------------------------------------------
# properties

def is_separating_graph(g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True) -> PropertyVerdict:
    """True when every projective-plane embedding has a separating cycle."""
    require_projective_planar(g, budget=budget, workers=workers)
    return _for_all("separating", g, lambda e: find_separating_zero_cycle(e) is not None,
                    budget=budget, workers=workers, reduced=reduced)


def is_nonseparating_graph(g: Graph, **kw) -> PropertyVerdict:
    return is_separating_graph(g, **kw).negated("nonseparating")


def is_strongly_nonseparating(
    g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True
) -> PropertyVerdict:
    """Some embedding in which every two vertices lie on a common face."""
    require_projective_planar(g, budget=budget, workers=workers)
    return _exists("strongly-nonseparating", g, all_pairs_share_face, budget=budget, workers=workers, reduced=reduced)


def is_weakly_separating(g: Graph, **kw) -> PropertyVerdict:
    return is_strongly_nonseparating(g, **kw).negated("weakly-separating")


def is_outer_projective_planar(
    g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True
) -> PropertyVerdict:
    if not is_projective_planar(g, budget=budget, workers=workers):
        return PropertyVerdict("outer-projective-planar", False, note="graph is not projective planar")
    return _exists("outer-projective-planar", g, lambda e: has_face_with_all_vertices(e) is not None,
                   budget=budget, workers=workers, reduced=reduced)


def is_outerplanar(g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True) -> PropertyVerdict:
    if not is_planar(g, budget=budget, workers=workers):
        return PropertyVerdict("outerplanar", False, note="graph is not planar")
    return _exists("outerplanar", g, lambda e: has_face_with_all_vertices(e) is not None,
                   budget=budget, workers=workers, reduced=reduced, surface=Surface.PLANE)


def is_closed_cell_all(g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True) -> PropertyVerdict:
    require_projective_planar(g, budget=budget, workers=workers)
    return _for_all("closed-cell-all", g, is_closed_cell, budget=budget, workers=workers, reduced=reduced)


def is_closed_nonseparating(
    g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True
) -> PropertyVerdict:
    """Every embedding without a separating cycle is closed cell."""
    require_projective_planar(g, budget=budget, workers=workers)
    return _for_all(
        "closed-nonseparating",
        g,
        lambda e: is_closed_cell(e) or find_separating_zero_cycle(e) is not None,
        budget=budget,
        workers=workers,
        reduced=reduced,
    )


def is_nonplanar_and_nonouter_pp(
    g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True
) -> PropertyVerdict:
    pid = "nonplanar-and-nonouter-pp"
    try:
        if is_planar(g, budget=budget, workers=workers):
            return PropertyVerdict(pid, False, note="graph is planar")
    except BudgetExceeded as exc:
        return PropertyVerdict(pid, None, INCONCLUSIVE, note=str(exc))
    return is_outer_projective_planar(g, budget=budget, workers=workers, reduced=reduced).negated(pid)


def _embeddability_verdict(pid: str, surface: Surface):
    def check(g: Graph, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True) -> PropertyVerdict:
        test = is_planar if surface is Surface.PLANE else is_projective_planar
        try:
            if not test(g, budget=budget, workers=workers):
                return PropertyVerdict(pid, False)
            e = next(enumerate_rp2_embeddings(g, surface=surface, reduced=reduced, budget=budget, workers=workers))
        except BudgetExceeded as exc:
            return PropertyVerdict(pid, None, INCONCLUSIVE, note=str(exc))
        return PropertyVerdict(pid, True, embedding=e)

    return check


# ----------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class PropertySpec:
    id: str
    check: Callable[..., PropertyVerdict]
    # True when every graph having a minor with the property has it too,
    # so minimality can be decided from one-step minors alone
    upward_closed: bool
    description: str


def _registry() -> dict[str, PropertySpec]:
    from .links import is_ii3l_plane, is_ippi3l

    specs = [
        PropertySpec("separating", is_separating_graph, True, "every embedding has a separating cycle"),
        PropertySpec("nonseparating", is_nonseparating_graph, False, "some embedding has no separating cycle"),
        PropertySpec("strongly-nonseparating", is_strongly_nonseparating, False,
                     "some embedding has every vertex pair on a common face"),
        PropertySpec("weakly-separating", is_weakly_separating, True, "not strongly nonseparating"),
        PropertySpec("outer-projective-planar", is_outer_projective_planar, False,
                     "some embedding has a face holding every vertex"),
        PropertySpec("outerplanar", is_outerplanar, False, "some plane embedding has a face holding every vertex"),
        PropertySpec("planar", _embeddability_verdict("planar", Surface.PLANE), False, "embeds in the plane"),
        PropertySpec("projective-planar", _embeddability_verdict("projective-planar", Surface.PROJECTIVE), False,
                     "embeds in the projective plane"),
        PropertySpec("closed-cell-all", is_closed_cell_all, False, "every embedding is closed cell"),
        PropertySpec("closed-nonseparating", is_closed_nonseparating, False,
                     "every embedding without a separating cycle is closed cell"),
        PropertySpec("ippi3l", is_ippi3l, True, "every embedding has a nonsplit two-cycle link"),
        PropertySpec("ii3l-plane", is_ii3l_plane, True, "every plane embedding has a nonsplit two-cycle link"),
        PropertySpec("nonplanar-and-nonouter-pp", is_nonplanar_and_nonouter_pp, True,
                     "nonplanar and not outer-projective-planar"),
    ]
    return {s.id: s for s in specs}


PROPERTY_IDS = (
    "separating",
    "nonseparating",
    "strongly-nonseparating",
    "weakly-separating",
    "outer-projective-planar",
    "outerplanar",
    "planar",
    "projective-planar",
    "closed-cell-all",
    "closed-nonseparating",
    "ippi3l",
    "ii3l-plane",
    "nonplanar-and-nonouter-pp",
)


def property_spec(property_id: str) -> PropertySpec:
    reg = _registry()
    if property_id not in reg:
        raise KeyError(f"unknown property {property_id!r}; known: {', '.join(PROPERTY_IDS)}")
    return reg[property_id]


def check_property(
    g: Graph, property_id: str, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True
) -> PropertyVerdict:
    spec = property_spec(property_id)
    try:
        return spec.check(g, budget=budget, workers=workers, reduced=reduced)
    except NotEmbeddableError as exc:
        raise PreconditionError(str(exc)) from None
    except BudgetExceeded as exc:
        return PropertyVerdict(property_id, None, INCONCLUSIVE, note=str(exc))


def is_minor_minimal(
    g: Graph, property_id: str, *, budget: Budget | None = None, workers: int = 1, reduced: bool = True
) -> PropertyVerdict:
    """Whether ``g`` has the property and none of its one-step minors does."""
    spec = property_spec(property_id)
    if not spec.upward_closed:
        raise PreconditionError(
            f"{property_id!r} is not inherited by larger graphs, so one-step minors cannot decide minimality"
        )
    own = check_property(g, property_id, budget=budget, workers=workers, reduced=reduced)
    if own.value is None:
        return PropertyVerdict(f"minor-minimal:{property_id}", None, INCONCLUSIVE, note=own.note)
    if not own.value:
        raise PreconditionError(f"graph does not have property {property_id!r}")
    for h in one_step_minors(g):
        try:
            v = check_property(h, property_id, budget=budget, workers=workers, reduced=reduced)
        except PreconditionError:
            continue
        if v.value is None:
            return PropertyVerdict(f"minor-minimal:{property_id}", None, INCONCLUSIVE, note=v.note)
        if v.value:
            return PropertyVerdict(f"minor-minimal:{property_id}", False, minor=h,
                                   note="a one-step minor has the property")
    return PropertyVerdict(f"minor-minimal:{property_id}", True)
