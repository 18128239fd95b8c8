from __future__ import annotations

import networkx as nx
import pytest

from rp2embed.catalog import Catalog, builtin
from rp2embed.config import Budget
from rp2embed.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    one_step_minors,
)
from rp2embed.props import (
    PROPERTY_IDS,
    check_property,
    is_closed_cell_all,
    is_closed_nonseparating,
    is_minor_minimal,
    is_nonplanar_and_nonouter_pp,
    is_outer_projective_planar,
    is_outerplanar,
    is_planar,
    is_projective_planar,
    is_separating_graph,
    is_strongly_nonseparating,
    is_weakly_separating,
    property_spec,
)
from rp2embed.rp2 import all_pairs_share_face, find_separating_zero_cycle, has_face_with_all_vertices, validate
from rp2embed.verdict import INCONCLUSIVE, PreconditionError

K1 = Graph(1, ())


def _from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in h.edges)))


def _cone(g: Graph) -> Graph:
    apex = g.vertex_count
    return Graph(apex + 1, g.edges + tuple((v, apex) for v in range(apex)))


ATLAS = [_from_nx(h) for h in nx.graph_atlas_g()[1:] if h.number_of_nodes() <= 6]
ATLAS7 = [_from_nx(h) for h in nx.graph_atlas_g()[1:] if h.number_of_nodes() == 7]


# -- independent oracles -----------------------------------------------------

def test_planarity_matches_networkx():
    for g in ATLAS + ATLAS7:
        assert is_planar(g) == nx.check_planarity(g.to_networkx())[0], g.edges


def test_outerplanarity_matches_apex_planarity():
    # a graph is outerplanar exactly when adding a vertex joined to all keeps it planar
    for g in ATLAS:
        expected = nx.check_planarity(_cone(g).to_networkx())[0]
        assert is_outerplanar(g).value == expected, g.edges


def test_outer_projective_planarity_matches_cone():
    for g in ATLAS:
        assert is_outer_projective_planar(g).value == is_projective_planar(_cone(g)), g.edges


def test_projective_planarity_spot_values():
    petersen = _from_nx(nx.petersen_graph())
    assert is_projective_planar(petersen)
    assert is_projective_planar(complete_graph(6))
    assert not is_projective_planar(complete_graph(7))
    assert not is_projective_planar(complete_multipartite((4, 4)))
    assert not is_projective_planar(disjoint_union(complete_graph(5), complete_graph(5)))
    assert is_projective_planar(disjoint_union(complete_graph(5), complete_graph(4)))


# -- frozen classifications --------------------------------------------------

@pytest.mark.parametrize(
    "name, separating",
    [
        ("k22", False), ("k23", False), ("k24", False), ("k33", False), ("k34", False),
        ("k1_1", False), ("k1_2", False), ("k1_3", False), ("k1_4", False), ("k1_5", False), ("k1_6", False),
        ("k52", True), ("k25", True),
        ("k4", False), ("k5", False), ("k6", False),
        ("alpha1", True), ("alpha2", True), ("alpha3", True), ("gamma6", True), ("zeta3", True), ("theta1", True),
    ],
)
def test_separating_classification(name, separating):
    assert is_separating_graph(builtin(name).graph).value is separating


@pytest.mark.parametrize(
    "name, opp, sns, closed_nonsep",
    [
        ("k1", True, True, False),
        ("k4", True, True, False),
        ("k5", True, True, True),
        ("k33", True, True, True),
        ("k6", False, True, True),
        ("k6_minus_2e_adjacent", False, True, True),
        ("k6_minus_2e_nonadjacent", False, True, True),
        ("alpha1", False, False, True),
        ("gamma6", False, False, True),
    ],
)
def test_frozen_property_values(name, opp, sns, closed_nonsep):
    g = builtin(name).graph
    assert is_outer_projective_planar(g).value is opp
    assert is_strongly_nonseparating(g).value is sns
    assert is_closed_nonseparating(g).value is closed_nonsep


def test_outerplanar_obstructions():
    for g in (complete_graph(4), complete_multipartite((3, 2))):
        assert is_outerplanar(g).value is False
        for h in one_step_minors(g):
            assert is_outerplanar(h).value is True


def test_nonplanar_graph_is_not_outerplanar():
    v = is_outerplanar(complete_graph(5))
    assert v.value is False and "planar" in v.note


def test_closed_cell_all():
    assert is_closed_cell_all(complete_graph(5)).value is True
    assert is_closed_cell_all(complete_graph(4)).value is False


# -- laws over the catalog ---------------------------------------------------

PP_ENTRIES = [e for e in Catalog().entries if e.name != "k44"]


@pytest.mark.parametrize("entry", PP_ENTRIES, ids=[e.name for e in PP_ENTRIES])
def test_catalog_laws(entry):
    g = entry.graph
    assert is_projective_planar(g)
    opp = is_outer_projective_planar(g).value
    sns = is_strongly_nonseparating(g).value
    sep = is_separating_graph(g).value
    # outer-projective-planar => strongly nonseparating => not separating
    assert not opp or sns
    assert not sns or not sep
    with_point = disjoint_union(g, K1)
    if not opp:
        assert is_weakly_separating(with_point).value is True
        if not is_planar(g):
            assert is_separating_graph(with_point).value is True


@pytest.mark.parametrize("name", ["k4", "k5", "k33", "k6_minus_2e_adjacent", "k23", "k1_4"])
def test_strongly_nonseparating_is_minor_closed(name):
    g = builtin(name).graph
    assert is_strongly_nonseparating(g).value
    for h in one_step_minors(g):
        assert is_strongly_nonseparating(h).value


@pytest.mark.parametrize(
    "name", ["alpha1", "alpha2", "alpha3", "gamma6", "zeta3", "theta1", "k6_minus_2e_adjacent",
             "k6_minus_2e_nonadjacent"]
)
def test_not_outer_projective_planar(name):
    assert is_outer_projective_planar(builtin(name).graph).value is False


def test_every_builtin_but_k44_is_projective_planar():
    for e in Catalog().entries:
        assert is_projective_planar(e.graph) == (e.name != "k44")


# -- witnesses ---------------------------------------------------------------

def test_nonseparating_witness():
    v = is_separating_graph(complete_multipartite((3, 3)))
    assert v.value is False
    assert validate(v.embedding) == []
    assert find_separating_zero_cycle(v.embedding) is None


def test_strongly_nonseparating_witness():
    v = is_strongly_nonseparating(complete_graph(5))
    assert v.value is True and all_pairs_share_face(v.embedding)


def test_outer_projective_planar_witness():
    v = is_outer_projective_planar(complete_graph(5))
    assert v.value and has_face_with_all_vertices(v.embedding) is not None


# -- reduced stream ----------------------------------------------------------

@pytest.mark.parametrize("name", ["alpha1", "k5", "k33", "gamma6", "theta1", "k6_minus_2e_adjacent", "k4_k4_k4"])
def test_reduced_stream_gives_same_verdicts(name):
    g = builtin(name).graph
    for check in (is_separating_graph, is_strongly_nonseparating, is_closed_nonseparating, is_outer_projective_planar):
        assert check(g, reduced=True).value == check(g, reduced=False).value


@pytest.mark.parametrize("name", ["alpha1", "alpha2", "k32_k32_k32", "k4_k4_k32", "k6_minus_2e_adjacent_u_k4"])
def test_reduced_stream_gives_same_link_verdicts(name):
    from rp2embed.links import is_ii3l_plane, is_ippi3l

    g = builtin(name).graph
    assert is_ippi3l(g, reduced=True).value == is_ippi3l(g, reduced=False).value
    if is_planar(g):
        assert is_ii3l_plane(g, reduced=True).value == is_ii3l_plane(g, reduced=False).value


# -- registry and minimality -------------------------------------------------

def test_registry():
    assert set(PROPERTY_IDS) == {property_spec(p).id for p in PROPERTY_IDS}
    with pytest.raises(KeyError):
        property_spec("bogus")


def test_precondition_on_non_projective_planar():
    with pytest.raises(PreconditionError):
        check_property(complete_multipartite((4, 4)), "separating")
    assert check_property(complete_multipartite((4, 4)), "outer-projective-planar").value is False


def test_budget_makes_verdict_inconclusive():
    v = check_property(builtin("alpha1").graph, "separating", budget=Budget(5))
    assert v.value is None and v.status == INCONCLUSIVE
    with pytest.raises(ValueError):
        bool(v)
    assert v.to_json()["status"] == "inconclusive"


def test_minor_minimal_preconditions():
    with pytest.raises(PreconditionError):
        is_minor_minimal(complete_graph(4), "outer-projective-planar")
    with pytest.raises(PreconditionError):
        is_minor_minimal(complete_graph(4), "separating")


def test_minor_minimal_negative_has_witness():
    v = is_minor_minimal(complete_graph(6), "nonplanar-and-nonouter-pp")
    assert v.value is False
    assert is_nonplanar_and_nonouter_pp(v.minor).value is True


@pytest.mark.parametrize("name", ["alpha1", "theta1", "gamma6"])
def test_minor_minimal_separating(name):
    assert is_minor_minimal(builtin(name).graph, "separating").value is True


def test_separating_graph_with_extra_edge_is_not_minimal():
    g = builtin("theta1").graph
    missing = [(u, v) for u in range(g.vertex_count) for v in range(u + 1, g.vertex_count) if not g.has_edge(u, v)]
    assert missing
    for edge in missing:
        bigger = Graph(g.vertex_count, g.edges + (edge,))
        assert is_separating_graph(bigger).value is True
        v = is_minor_minimal(bigger, "separating")
        assert v.value is False and is_separating_graph(v.minor).value is True
