"""Pure-Python implementations of the hot loops.

All routines work on flat integer arrays describing a signed rotation
system.  Dart ``d`` belongs to edge ``d >> 1``; dart ``2e`` leaves the first
endpoint of edge ``e`` and dart ``2e + 1`` leaves the second.  ``nxt[d]`` is
the dart following ``d`` in the rotation at its origin, ``prv`` the inverse,
and ``-1`` marks darts that are not present yet.

A flag ``2d + t`` is a dart together with a side ``t``.  Side 0 of ``d``
and side 1 of ``nxt[d]`` share a corner.  Faces are the orbits of the two
involutions "cross the edge" and "turn at the corner".
"""
from __future__ import annotations

import itertools
from typing import Sequence

IMPLEMENTATION = "python"


class LimitExceeded(Exception):
    """Raised when an enumeration would produce more results than allowed."""


def face_labels(nxt: Sequence[int], prv: Sequence[int], sign: Sequence[int]) -> tuple[list[int], int]:
    """Assign a face number to every flag of the present darts."""
    nflags = 2 * len(nxt)
    lab = [-1] * nflags
    count = 0
    for f0 in range(nflags):
        if lab[f0] >= 0 or nxt[f0 >> 1] < 0:
            continue
        f = f0
        while True:
            lab[f] = count
            d = f >> 1
            g = ((d ^ 1) << 1) | ((f & 1) ^ (sign[d >> 1] > 0))
            lab[g] = count
            dg = g >> 1
            if g & 1:
                f = prv[dg] << 1
            else:
                f = (nxt[dg] << 1) | 1
            if f == f0:
                break
        count += 1
    return lab, count


def enumerate_embeddings(
    vertex_count: int,
    edges: Sequence[tuple[int, int]],
    tree: Sequence[int],
    extra: Sequence[int],
    max_genus: int,
    keep: Sequence[int],
    limit: int,
    worker: int = 0,
    workers: int = 1,
    split_depth: int = 1,
) -> list[tuple[int, tuple[int, ...], tuple[int, ...], int]]:
    """Enumerate tree-normalized signed rotation systems of a connected graph.

    Every rotation of the spanning ``tree`` is extended by inserting the
    ``extra`` edges one at a time into a corner pair of a common face with
    either sign; branches whose Euler genus exceeds ``max_genus`` are cut.
    Returns ``(branch, nxt, sign, genus)`` for completed systems whose genus
    is in ``keep``.  ``branch`` numbers the search nodes at ``split_depth``
    in depth-first order; only branches congruent to ``worker`` modulo
    ``workers`` are explored.
    """
    m = len(edges)
    nd = 2 * m
    nxt = [-1] * nd
    prv = [-1] * nd
    sign = [1] * m
    keep_set = set(keep)
    results: list[tuple[int, tuple[int, ...], tuple[int, ...], int]] = []
    origin = [0] * nd
    for e, (u, v) in enumerate(edges):
        origin[2 * e] = u
        origin[2 * e + 1] = v

    tree_darts: list[list[int]] = [[] for _ in range(vertex_count)]
    for e in tree:
        tree_darts[edges[e][0]].append(2 * e)
        tree_darts[edges[e][1]].append(2 * e + 1)
    if vertex_count > 1 and any(not ds for ds in tree_darts):
        raise ValueError("the tree must span a connected graph")
    anchor = [ds[0] if ds else -1 for ds in tree_darts]
    per_vertex = []
    for ds in tree_darts:
        if len(ds) <= 2:
            per_vertex.append([tuple(ds)])
        else:
            per_vertex.append([(ds[0],) + p for p in itertools.permutations(ds[1:])])

    split_depth = min(split_depth, len(extra))
    branch_counter = [0]
    current_branch = [0]
    base_edges = len(tree)

    def rec(depth: int) -> None:
        lab, nfaces = face_labels(nxt, prv, sign)
        genus = 2 - vertex_count + base_edges + depth - nfaces
        if genus > max_genus:
            return
        if depth == split_depth:
            b = branch_counter[0]
            branch_counter[0] += 1
            if b % workers != worker:
                return
            current_branch[0] = b
        if depth == len(extra):
            if genus in keep_set:
                results.append((current_branch[0], tuple(nxt), tuple(sign), genus))
                if len(results) > limit:
                    raise LimitExceeded
            return
        e = extra[depth]
        u, v = edges[e]
        a, b = 2 * e, 2 * e + 1
        corners_u = []
        x = anchor[u]
        while True:
            corners_u.append(x)
            x = nxt[x]
            if x == anchor[u]:
                break
        corners_v = []
        y = anchor[v]
        while True:
            corners_v.append(y)
            y = nxt[y]
            if y == anchor[v]:
                break
        for x in corners_u:
            fx = lab[2 * x]
            for y in corners_v:
                if lab[2 * y] != fx:
                    continue
                xn = nxt[x]
                nxt[x] = a
                prv[a] = x
                nxt[a] = xn
                prv[xn] = a
                yn = nxt[y]
                nxt[y] = b
                prv[b] = y
                nxt[b] = yn
                prv[yn] = b
                for s in (1, -1):
                    sign[e] = s
                    rec(depth + 1)
                sign[e] = 1
                nxt[y] = yn
                prv[yn] = y
                nxt[x] = xn
                prv[xn] = x
                nxt[a] = prv[a] = nxt[b] = prv[b] = -1

    for combo in itertools.product(*per_vertex):
        for ds in combo:
            k = len(ds)
            for i, d in enumerate(ds):
                nxt[d] = ds[(i + 1) % k]
                prv[ds[(i + 1) % k]] = d
        rec(0)
    return results


def canonical_code(nxt: Sequence[int], sign: Sequence[int], roots: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least breadth-first relabelling code over ``roots``.

    Two signed rotation systems of connected graphs get equal codes (with
    all flags as roots) exactly when their flag structures are isomorphic,
    which identifies vertex switchings, mirror images and relabellings.
    """
    nd = len(nxt)
    nflags = 2 * nd
    prv = [0] * nd
    for d in range(nd):
        prv[nxt[d]] = d
    cross = [0] * nflags
    turn = [0] * nflags
    for f in range(nflags):
        d = f >> 1
        cross[f] = ((d ^ 1) << 1) | ((f & 1) ^ (sign[d >> 1] > 0))
        turn[f] = (prv[d] << 1) if f & 1 else ((nxt[d] << 1) | 1)
    best: list[int] | None = None
    for r in roots:
        num = [-1] * nflags
        num[r] = 0
        order = [r]
        code: list[int] = []
        tied = best is not None
        worse = False
        i = 0
        while i < len(order):
            f = order[i]
            i += 1
            for g in (cross[f], turn[f], f ^ 1):
                c = num[g]
                if c < 0:
                    c = num[g] = len(order)
                    order.append(g)
                if tied:
                    bc = best[len(code)]
                    if c > bc:
                        worse = True
                        break
                    if c < bc:
                        tied = False
                code.append(c)
            if worse:
                break
        if not worse and (best is None or not tied):
            best = code
    return tuple(best) if best is not None else ()
