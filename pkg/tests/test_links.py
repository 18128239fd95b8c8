from __future__ import annotations

import itertools

import numpy as np
import pytest
from scipy import ndimage

from rp2embed.catalog import builtin
from rp2embed.graph import Cycle, Graph, complete_graph, cycle_graph, disjoint_union, disjoint_union_all, simple_cycles
from rp2embed.links import (
    LinkClass,
    LinkError,
    TypeIILink,
    TypeILink,
    classify_type1,
    classify_type2,
    has_nonsplit_type1,
    has_nonsplit_type2,
    is_ii3l_plane,
    is_ippi3l,
)
from rp2embed.rp2 import Host, enumerate_rp2_embeddings
from rp2embed.scheme import HomologyClass, Surface
from rp2embed.verdict import PreconditionError

K1 = Graph(1, ())
C3 = cycle_graph(3)


# -- a geometric oracle for plane configurations -----------------------------
#
# Every plane embedding of triangles and isolated vertices is drawn on a
# pixel grid: each triangle becomes a rectangle outline, the components it
# hosts are drawn inside it.  A simple closed curve avoiding the pieces lies
# in one region of the complement and can enclose any set of that region's
# holes and points, so "split" is decided by trying every such choice.

def _inner_face(e, comp):
    return 1 - e.outer_face_of(comp)


def _measure(e, comp, sizes):
    if len(e.components[comp]) == 1:
        sizes[comp] = (1, 1)
        return sizes[comp]
    kids = e.children_of(Host(comp, _inner_face(e, comp)))
    dims = [_measure(e, k, sizes) for k in kids]
    w = max(3, sum(d[0] for d in dims) + 2 * (len(dims) + 1))
    h = max(3, max((d[1] for d in dims), default=0) + 4)
    sizes[comp] = (w + 2, h + 2)
    return sizes[comp]


def _draw(e, comp, x, y, sizes, canvas, owner):
    w, h = sizes[comp]
    if len(e.components[comp]) == 1:
        owner[comp] = [(y, x)]
        return
    pix = [(y, x + i) for i in range(w)] + [(y + h - 1, x + i) for i in range(w)]
    pix += [(y + j, x) for j in range(h)] + [(y + j, x + w - 1) for j in range(h)]
    for p in pix:
        canvas[p] = True
    owner[comp] = pix
    cx = x + 3
    for k in e.children_of(Host(comp, _inner_face(e, comp))):
        _draw(e, k, cx, y + 3, sizes, canvas, owner)
        cx += sizes[k][0] + 2


def _picture(e):
    sizes = {}
    roots = e.children_of(None)
    dims = [_measure(e, r, sizes) for r in roots]
    width = sum(d[0] for d in dims) + 2 * (len(dims) + 1) + 2
    height = max(d[1] for d in dims) + 6
    canvas = np.zeros((height, width), dtype=bool)
    owner = {}
    x = 3
    for r in roots:
        _draw(e, r, x, 3, sizes, canvas, owner)
        x += sizes[r][0] + 2
    return canvas, owner


def geometric_split(e, pieces):
    """``pieces``: lists of components; a piece of two points is a pair."""
    curves, owner = _picture(e)
    free = ~curves
    regions, count = ndimage.label(free)
    comp_pixels = {c: owner[c] for c in owner}

    def where(c):
        return comp_pixels[c][0]

    for r in range(1, count + 1):
        mask = regions == r
        rest, nrest = ndimage.label(~mask, structure=np.ones((3, 3)))
        unbounded = mask[0, 0]
        holes = []
        for k in range(1, nrest + 1):
            part = rest == k
            touches = part[0, :].any() or part[-1, :].any() or part[:, 0].any() or part[:, -1].any()
            if unbounded or not touches:
                holes.append({c for c in owner if part[where(c)]})
        points_here = [c for c in owner if len(e.components[c]) == 1 and mask[where(c)]]
        for nh in range(len(holes) + 1):
            for hs in itertools.combinations(holes, nh):
                enclosed_holes = set().union(*hs) if hs else set()
                for npts in range(len(points_here) + 1):
                    for ps in itertools.combinations(points_here, npts):
                        enclosed = enclosed_holes | set(ps)
                        inside = [all(c in enclosed for c in p) for p in pieces]
                        outside = [not any(c in enclosed for c in p) for p in pieces]
                        for i in range(3):
                            if outside[i] and all(inside[j] for j in range(3) if j != i):
                                return True
    return False


def _component_of(e, v):
    return next(i for i, ids in enumerate(e.components) if v in ids)


TYPE1_GRAPH = disjoint_union_all([C3, C3, K1, K1])
TYPE2_GRAPH = disjoint_union_all([C3, K1, K1, K1, K1])


def test_type1_classification_matches_geometry():
    a, b = Cycle((0, 1, 2)), Cycle((3, 4, 5))
    seen = set()
    for e in enumerate_rp2_embeddings(TYPE1_GRAPH, surface=Surface.PLANE):
        ca, cb, p, q = (_component_of(e, v) for v in (0, 3, 6, 7))
        split = geometric_split(e, [[ca], [cb], [p, q]])
        cls = classify_type1(e, TypeILink(a, b, (6, 7)))
        assert cls.nonsplit == (not split)
        nested = e.children_of(Host(ca, _inner_face(e, ca))).count(cb) or e.children_of(
            Host(cb, _inner_face(e, cb))).count(ca)
        if cls.nonsplit:
            assert cls is (LinkClass.NONSPLIT_IB if nested else LinkClass.NONSPLIT_IA)
        seen.add(cls)
    assert seen == {LinkClass.SPLIT, LinkClass.NONSPLIT_IA, LinkClass.NONSPLIT_IB}


def test_type2_classification_matches_geometry():
    c = Cycle((0, 1, 2))
    seen = set()
    for e in enumerate_rp2_embeddings(TYPE2_GRAPH, surface=Surface.PLANE):
        cc = _component_of(e, 0)
        for pa, pb in (((3, 4), (5, 6)), ((3, 5), (4, 6)), ((3, 6), (4, 5))):
            pieces = [[cc], [_component_of(e, v) for v in pa], [_component_of(e, v) for v in pb]]
            cls = classify_type2(e, TypeIILink(c, pa, pb))
            assert cls.nonsplit == (not geometric_split(e, pieces))
            seen.add(cls)
    assert seen == {LinkClass.SPLIT, LinkClass.NONSPLIT_II}


# -- the fast searches agree with the classifiers ----------------------------

def _brute_type1(e):
    cycles = simple_cycles(e.graph)
    n = e.graph.vertex_count
    for a, b in itertools.permutations(cycles, 2):
        if set(a.vertices) & set(b.vertices):
            continue
        rest = [v for v in range(n) if v not in a.vertices and v not in b.vertices]
        for p, q in itertools.combinations(rest, 2):
            if classify_type1(e, TypeILink(a, b, (p, q))).nonsplit:
                return True
    return False


def _brute_type2(e):
    n = e.graph.vertex_count
    for c in simple_cycles(e.graph):
        rest = [v for v in range(n) if v not in c.vertices]
        for quad in itertools.combinations(rest, 4):
            x, y, z, w = quad
            for pa, pb in (((x, y), (z, w)), ((x, z), (y, w)), ((x, w), (y, z))):
                if classify_type2(e, TypeIILink(c, pa, pb)).nonsplit:
                    return True
    return False


@pytest.mark.parametrize(
    "g",
    [TYPE1_GRAPH, disjoint_union(C3, complete_graph(4)), builtin("alpha1").graph,
     disjoint_union_all([complete_graph(4), K1, K1])],
    ids=["c3+c3+k1+k1", "c3+k4", "alpha1", "k4+k1+k1"],
)
def test_fast_search_matches_brute_force(g):
    for e in list(enumerate_rp2_embeddings(g, reduced=True))[:150]:
        found = has_nonsplit_type1(e)
        assert (found is not None) == _brute_type1(e)
        if found is not None:
            assert classify_type1(e, found.link) is found.link_class
        found2 = has_nonsplit_type2(e)
        assert (found2 is not None) == _brute_type2(e)
        if found2 is not None:
            assert classify_type2(e, found2.link) is found2.link_class


# -- symmetry and homology ---------------------------------------------------

def test_classification_symmetric_in_its_pieces():
    a, b = Cycle((0, 1, 2)), Cycle((3, 4, 5))
    for e in enumerate_rp2_embeddings(TYPE1_GRAPH):
        ref = classify_type1(e, TypeILink(a, b, (6, 7)))
        assert classify_type1(e, TypeILink(b, a, (6, 7))) is ref
        assert classify_type1(e, TypeILink(a, b, (7, 6))) is ref
    c = Cycle((0, 1, 2))
    for e in enumerate_rp2_embeddings(TYPE2_GRAPH):
        ref = classify_type2(e, TypeIILink(c, (3, 4), (5, 6)))
        assert classify_type2(e, TypeIILink(c, (5, 6), (3, 4))) is ref
        assert classify_type2(e, TypeIILink(c, (4, 3), (6, 5))) is ref


def test_one_homologous_cycle_always_splits():
    g = disjoint_union_all([complete_graph(5), C3, K1, K1])
    checked = 0
    for e in list(enumerate_rp2_embeddings(g))[:300]:
        for one in e.one_cycles:
            if set(one.vertices) & {5, 6, 7}:
                continue
            rest = [v for v in range(5) if v not in one.vertices]
            if len(rest) < 2:
                continue
            link = TypeILink(one, Cycle((5, 6, 7)), (8, 9))
            assert classify_type1(e, link) is LinkClass.SPLIT
            assert classify_type1(e, TypeILink(Cycle((5, 6, 7)), one, (8, 9))) is LinkClass.SPLIT
            checked += 1
    assert checked > 0


def test_two_disjoint_separating_cycles_give_nonsplit_link():
    g = disjoint_union(builtin("gamma6").graph, builtin("k52").graph)
    checked = 0
    for e in itertools.islice(enumerate_rp2_embeddings(g, reduced=True), 300):
        full = e.all_mask
        seps = [z for z in e.zero_cycles if z.inside_mask and full & ~z.vertex_mask & ~z.inside_mask]
        if any(not x.vertex_mask & y.vertex_mask for x, y in itertools.combinations(seps, 2)):
            assert has_nonsplit_type1(e) is not None
            checked += 1
    assert checked > 0


# -- examples ----------------------------------------------------------------

def test_first_alpha1_embedding_holds_an_unnested_link():
    e = next(enumerate_rp2_embeddings(builtin("alpha1").graph))
    found = has_nonsplit_type1(e)
    assert found.link_class is LinkClass.NONSPLIT_IA
    assert found.to_json() == {"class": "NonsplitIa", "cycles": [[0, 1, 3], [4, 5, 7]], "points": [2, 6], "type": "I"}


def test_link_validation():
    with pytest.raises(LinkError):
        TypeILink(Cycle((0, 1, 2)), Cycle((2, 3, 4)), (5, 6))
    with pytest.raises(LinkError):
        TypeILink(Cycle((0, 1, 2)), Cycle((3, 4, 5)), (0, 6))
    with pytest.raises(LinkError):
        TypeILink(Cycle((0, 1, 2)), Cycle((3, 4, 5)), (6, 6))
    with pytest.raises(LinkError):
        TypeIILink(Cycle((0, 1, 2)), (3, 4), (4, 5))
    e = next(enumerate_rp2_embeddings(TYPE1_GRAPH))
    with pytest.raises(LinkError):
        classify_type1(e, TypeILink(Cycle((0, 1, 3)), Cycle((4, 5, 2)), (6, 7)))


def test_type2_json_marks_interpretation():
    e = next(x for x in enumerate_rp2_embeddings(TYPE2_GRAPH) if has_nonsplit_type2(x))
    assert has_nonsplit_type2(e).to_json()["interpretation"] == "derived"


# -- universal link properties -----------------------------------------------

def test_two_k4_not_ippi3l():
    v = is_ippi3l(builtin("alpha1").graph)
    assert v.value is False
    assert has_nonsplit_type1(v.embedding) is None


@pytest.mark.parametrize("name", ["alpha1", "alpha2", "alpha3"])
def test_plane_ii3l(name):
    assert is_ii3l_plane(builtin(name).graph).value is True


def test_plane_ii3l_negative_and_precondition():
    assert is_ii3l_plane(complete_graph(4)).value is False
    assert is_ii3l_plane(disjoint_union(complete_graph(4), C3)).value is False
    with pytest.raises(PreconditionError):
        is_ii3l_plane(complete_graph(5))
    with pytest.raises(PreconditionError):
        is_ippi3l(builtin("k44").graph)
