from __future__ import annotations

import dataclasses
import json

import pytest

from rp2embed.catalog import builtin, k6_minus_two_edges
from rp2embed.config import Budget, BudgetExceeded
from rp2embed.graph import (
    Cycle,
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    disjoint_union_all,
    empty_graph,
)
from rp2embed.rp2 import (
    CrosscapFaceChoice,
    EmbeddingError,
    EssentialRoot,
    Host,
    NotEmbeddableError,
    Placement,
    PlaneRoot,
    Rp2Embedding,
    embedding_from_json,
    embedding_to_json,
    enumerate_rp2_embeddings,
    find_separating_zero_cycle,
    is_closed_cell,
    sides_of_zero_cycle,
    validate,
)
from rp2embed.scheme import HomologyClass, Surface, scheme_from_text

K4 = complete_graph(4)


def stream(g, **kw):
    return list(enumerate_rp2_embeddings(g, **kw))


# -- frozen stream sizes -----------------------------------------------------

@pytest.mark.parametrize(
    "g, count, closed",
    [
        (Graph(1, ()), 1, 0),
        (cycle_graph(3), 3, 1),
        (K4, 22, 14),
        (disjoint_union(K4, Graph(1, ())), 74, 0),
        (complete_graph(5), 54, 54),
        (complete_multipartite((3, 3)), 12, 12),
    ],
    ids=["k1", "c3", "k4", "k4+k1", "k5", "k33"],
)
def test_stream_sizes(g, count, closed):
    es = stream(g)
    assert len(es) == count
    assert sum(is_closed_cell(e) for e in es) == closed


def test_two_k4_stream_all_separating():
    es = stream(disjoint_union(K4, K4))
    assert len(es) == 1120
    assert all(find_separating_zero_cycle(e) is not None for e in es)


def test_plane_stream_of_c3():
    es = stream(cycle_graph(3), surface=Surface.PLANE)
    assert len(es) == 2
    assert all(isinstance(e.root, PlaneRoot) for e in es)
    assert all(e.crosscap_face is None for e in es)


# -- structural invariants ---------------------------------------------------

INVARIANT_GRAPHS = {
    "k4": K4,
    "k5": complete_graph(5),
    "k33": complete_multipartite((3, 3)),
    "c3+c3": disjoint_union(cycle_graph(3), cycle_graph(3)),
    "k4+k1+k1": disjoint_union_all([K4, Graph(1, ()), Graph(1, ())]),
    "k5+c3": disjoint_union(complete_graph(5), cycle_graph(3)),
    "alpha1": builtin("alpha1").graph,
    "theta1": builtin("theta1").graph,
}


@pytest.fixture(scope="module", params=sorted(INVARIANT_GRAPHS))
def embeddings(request):
    return stream(INVARIANT_GRAPHS[request.param])


def test_every_embedding_validates(embeddings):
    for e in embeddings:
        assert validate(e) == []


def test_json_round_trip(embeddings):
    for e in embeddings[:200]:
        obj = embedding_to_json(e)
        again = embedding_from_json(json.loads(json.dumps(obj)))
        assert embedding_to_json(again) == obj
        assert validate(again) == []


def test_at_most_one_moebius_face(embeddings):
    for e in embeddings:
        labels = [f.label for f in e.global_faces]
        assert labels.count("Moebius") <= 1
        assert (labels.count("Moebius") == 1) == isinstance(e.root, CrosscapFaceChoice)


def test_cycle_sides_partition(embeddings):
    for e in embeddings[:150]:
        all_faces = {f.id for f in e.global_faces}
        for z in e.zero_cycles:
            sides = sides_of_zero_cycle(e, z.cycle)
            inside, outside = sides.inside, sides.outside
            on = set(z.cycle.vertices)
            assert not inside.vertices & outside.vertices
            assert inside.vertices | outside.vertices | on == set(range(e.graph.vertex_count))
            assert set(inside.faces).isdisjoint(outside.faces)
            assert set(inside.faces) | set(outside.faces) == all_faces
            # the fast mask path agrees with the face walk
            assert sum(1 << v for v in inside.vertices) == z.inside_mask
            if e.crosscap_face is not None:
                assert e.crosscap_face not in inside.faces


def test_one_cycles_pairwise_meet(embeddings):
    for e in embeddings:
        ones = e.one_cycles
        for i, a in enumerate(ones):
            for b in ones[i + 1:]:
                assert set(a.vertices) & set(b.vertices)


def test_one_cycles_have_no_sides(embeddings):
    for e in embeddings[:50]:
        for c in e.one_cycles:
            assert e.homology(c) is HomologyClass.ONE
            with pytest.raises(EmbeddingError):
                sides_of_zero_cycle(e, c)


@pytest.mark.parametrize(
    "g", [complete_graph(5), complete_multipartite((3, 3)), k6_minus_two_edges(True), k6_minus_two_edges(False)]
)
def test_connected_nonplanar_embeddings_are_cellular(g):
    es = stream(g)
    assert es
    assert all(isinstance(e.root, EssentialRoot) and is_closed_cell(e) for e in es)


# -- errors ------------------------------------------------------------------

def test_nonplanar_in_plane_raises():
    with pytest.raises(NotEmbeddableError):
        stream(complete_graph(5), surface=Surface.PLANE)


def test_two_nonplanar_components_raise():
    with pytest.raises(NotEmbeddableError):
        stream(disjoint_union(complete_graph(5), complete_multipartite((3, 3))))


def test_not_projective_planar_raises():
    with pytest.raises(NotEmbeddableError):
        stream(complete_multipartite((4, 4)))


def test_budget_counts_arrangements():
    with pytest.raises(BudgetExceeded):
        stream(disjoint_union(K4, K4), budget=Budget(200))


def test_reduced_stream_is_smaller():
    g = disjoint_union(K4, K4)
    assert len(stream(g, reduced=True)) < len(stream(g))


# -- validate catches damage -------------------------------------------------

def _first_nested(g):
    for e in enumerate_rp2_embeddings(g):
        if any(p.host is not None for p in e.placements):
            return e
    raise AssertionError("no nested embedding")


def test_validate_flags_bad_outer_face():
    e = stream(K4)[0]
    p = e.placements[0]
    bad = dataclasses.replace(e, placements=(dataclasses.replace(p, outer_face=99),))
    assert validate(bad)


def test_validate_flags_host_cycle():
    e = _first_nested(disjoint_union(cycle_graph(3), cycle_graph(3)))
    a, b = e.placements
    a2 = dataclasses.replace(a, host=Host(b.component, 1 - b.outer_face))
    b2 = dataclasses.replace(b, host=Host(a.component, 1 - a.outer_face))
    assert validate(dataclasses.replace(e, placements=(a2, b2)))


def test_validate_flags_missing_component():
    e = stream(disjoint_union(cycle_graph(3), cycle_graph(3)))[0]
    assert validate(dataclasses.replace(e, placements=e.placements[:1]))


def test_validate_flags_planar_scheme_as_root():
    e = stream(K4)[0]
    p = e.placements[0]
    bad = dataclasses.replace(e, root=EssentialRoot(0, p.scheme), placements=())
    assert validate(bad)


def test_validate_flags_essential_component_without_host():
    g = disjoint_union(complete_graph(5), cycle_graph(3))
    e = next(x for x in stream(g) if x.placements)
    p = e.placements[0]
    assert validate(dataclasses.replace(e, placements=(dataclasses.replace(p, host=None),)))


ONE_SIDED_TRIANGLE = "V 3\nE 0 1 -\nE 0 2 +\nE 1 2 +\nR 0 : 0>1 0>2\nR 1 : 1>0 1>2\nR 2 : 2>0 2>1\n"


def test_validate_reports_disjoint_one_sided_cycles():
    twisted = scheme_from_text(ONE_SIDED_TRIANGLE)
    assert len(twisted.faces) == 1
    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    e = Rp2Embedding(g, ((0, 1, 2), (3, 4, 5)), EssentialRoot(0, twisted), (Placement(1, twisted, 0, Host(0, 0)),))
    problems = validate(e)
    assert any("placed scheme has V-E+F = 1" in p for p in problems)
    assert any("1-homologous cycles" in p and "are disjoint" in p for p in problems)


def test_validate_accepts_one_sided_triangle_as_root():
    twisted = scheme_from_text(ONE_SIDED_TRIANGLE)
    e = Rp2Embedding(cycle_graph(3), ((0, 1, 2),), EssentialRoot(0, twisted), ())
    assert validate(e) == []


def test_from_json_rejects_garbage():
    with pytest.raises(EmbeddingError):
        embedding_from_json({"format": "something-else"})
    obj = embedding_to_json(stream(K4)[0])
    obj["root"]["type"] = "torus"
    with pytest.raises(EmbeddingError):
        embedding_from_json(obj)
    del obj["placements"]
    with pytest.raises(EmbeddingError):
        embedding_from_json(obj)


def test_homology_of_foreign_cycle():
    e = stream(K4)[0]
    with pytest.raises(EmbeddingError):
        e.homology(Cycle((0, 1, 5)))
