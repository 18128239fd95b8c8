from __future__ import annotations

import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rp2embed.graph import (
    Cycle,
    Graph,
    GraphError,
    GraphFormatError,
    automorphisms,
    complete_graph,
    complete_multipartite,
    connected_components,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    format_graph,
    girth,
    is_connected,
    is_isomorphic,
    one_step_minors,
    parse_graph,
    path_graph,
    relabel,
    simple_cycles,
    split_vertex,
)


@st.composite
def graphs(draw, max_vertices=7, connected=False):
    n = draw(st.integers(1, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if connected:
        extra = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        chosen = sorted(set(chosen) | set(extra))
    return Graph(n, tuple(chosen))


# -- file format -------------------------------------------------------------

def test_parse_and_format_round_trip():
    text = "# a comment\nV 4\nE 0 1\nE 1 2\n\nE 2 3\n"
    g = parse_graph(text)
    assert g.vertex_count == 4 and g.edges == ((0, 1), (1, 2), (2, 3))
    assert parse_graph(format_graph(g, comment="path")) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("E 0 1\nV 2\n", 1),
        ("V 3\nV 3\n", 2),
        ("V 3\nE 1 0\n", 2),
        ("V 3\nE 1 1\n", 2),
        ("V 3\nE 0 3\n", 2),
        ("V 3\nE 0 1\nE 0 1\n", 3),
        ("V 3\nX 0 1\n", 2),
        ("V 3\nE 0\n", 2),
        ("V -1\n", 1),
        ("V 17\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line_no == line


def test_parse_requires_vertex_line():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing\n")


def test_edge_cap():
    text = "V 16\n" + "".join(f"E {u} {v}\n" for u, v in list(itertools.combinations(range(16), 2))[:33])
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(2, ((0, 1), (1, 0)))


# -- constructors and structure ---------------------------------------------

def test_constructors():
    assert complete_graph(5).edge_count == 10
    assert cycle_graph(5).degree_sequence() == (2,) * 5
    assert path_graph(4).edge_count == 3
    k33 = complete_multipartite((3, 3))
    assert k33.vertex_count == 6 and k33.edge_count == 9
    assert nx.is_bipartite(k33.to_networkx())


def test_components():
    g = disjoint_union(complete_graph(3), empty_graph(2))
    assert connected_components(g) == [(0, 1, 2), (3,), (4,)]
    assert not is_connected(g)
    assert is_connected(complete_graph(1))


# -- minors ------------------------------------------------------------------

def test_minors_of_k4():
    minors = one_step_minors(complete_graph(4))
    assert len(minors) == 2
    assert any(is_isomorphic(m, complete_graph(3)) for m in minors)
    assert any(is_isomorphic(m, delete_edge(complete_graph(4), (0, 1))) for m in minors)


def test_contraction_simplifies():
    h = contract_edge(complete_graph(4), (0, 1))
    assert is_isomorphic(h, complete_graph(3))


def test_delete_vertex():
    h = delete_vertex(complete_graph(5), 2)
    assert is_isomorphic(h, complete_graph(4))


@given(graphs(max_vertices=6))
@settings(max_examples=60, deadline=None)
def test_one_step_minors_are_minors(g):
    gx = g.to_networkx()
    for h in one_step_minors(g):
        assert h.vertex_count + h.edge_count < g.vertex_count + g.edge_count
        # every one-step minor arises from a single deletion or contraction
        found = False
        for u, v in g.edges:
            for cand in (nx.contracted_nodes(gx, u, v, self_loops=False), nx.restricted_view(gx, [], [(u, v)])):
                if nx.is_isomorphic(nx.Graph(cand), h.to_networkx()):
                    found = True
        for v in range(g.vertex_count):
            sub = gx.copy()
            sub.remove_node(v)
            if nx.is_isomorphic(sub, h.to_networkx()):
                found = True
        assert found


@given(graphs(max_vertices=6, connected=True), st.data())
@settings(max_examples=60, deadline=None)
def test_split_then_contract_round_trip(g, data):
    v = data.draw(st.integers(0, g.vertex_count - 1))
    nbrs = sorted(g.adjacency[v])
    side_b = {w for w in nbrs if data.draw(st.booleans())}
    h = split_vertex(g, v, set(nbrs) - side_b, side_b)
    assert h.vertex_count == g.vertex_count + 1
    back = contract_edge(h, (v, g.vertex_count))
    assert is_isomorphic(back, g)


# -- cycles ------------------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cycle_count_closed_form(n):
    expected = sum(math.comb(n, k) * math.factorial(k - 1) // 2 for k in range(3, n + 1))
    assert len(simple_cycles(complete_graph(n))) == expected


@given(graphs(max_vertices=7))
@settings(max_examples=60, deadline=None)
def test_cycles_match_networkx(g):
    ours = {frozenset(c.edge_pairs()) for c in simple_cycles(g)}
    theirs = {
        frozenset(tuple(sorted((c[i], c[(i + 1) % len(c)]))) for i in range(len(c)))
        for c in nx.simple_cycles(g.to_networkx())
        if len(c) >= 3
    }
    assert ours == theirs


def test_cycle_canonical_form():
    assert Cycle((2, 0, 1)) == Cycle((0, 2, 1)) == Cycle((1, 2, 0))
    with pytest.raises(GraphError):
        Cycle((0, 1))
    with pytest.raises(GraphError):
        Cycle((0, 1, 0))


def test_girth():
    assert girth(complete_graph(4)) == 3
    assert girth(complete_multipartite((3, 3))) == 4
    assert girth(path_graph(5)) is None


# -- isomorphism -------------------------------------------------------------

def test_automorphism_counts():
    assert len(automorphisms(complete_graph(4))) == 24
    assert len(automorphisms(cycle_graph(5))) == 10


@given(graphs(max_vertices=6), st.permutations(range(6)), st.permutations(range(6)))
@settings(max_examples=60, deadline=None)
def test_isomorphism_is_an_equivalence(g, p, q):
    n = g.vertex_count
    perm1 = [x for x in p if x < n]
    perm2 = [x for x in q if x < n]
    h1 = relabel(g, perm1)
    h2 = relabel(h1, perm2)
    assert is_isomorphic(g, g)
    assert is_isomorphic(g, h1) and is_isomorphic(h1, g)
    assert is_isomorphic(h1, h2) and is_isomorphic(g, h2)
