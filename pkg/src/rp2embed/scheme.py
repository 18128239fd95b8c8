"""Signed rotation systems: cellular embeddings of connected graphs.

A dart is an integer ``2 * e + direction``; dart ``2e`` leaves the smaller
endpoint of edge ``e`` and ``2e + 1`` leaves the larger one, so ``d ^ 1`` is
the reverse dart.  A scheme stores, for every vertex, the cyclic order of
the darts leaving it (``rotation``) and a sign per edge (``signature``).
"""
from __future__ import annotations

import enum
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import _kernel
from .config import Budget, BudgetExceeded
from .graph import Cycle, Graph, GraphError, is_connected


class SchemeError(ValueError):
    """Invalid input to a scheme operation."""


class Surface(str, enum.Enum):
    PLANE = "plane"
    PROJECTIVE = "projective"

    @property
    def euler_genus(self) -> int:
        return 0 if self is Surface.PLANE else 1


class HomologyClass(str, enum.Enum):
    ZERO = "Zero"
    ONE = "One"


def dart(edge: int, direction: int) -> int:
    return 2 * edge + direction


def dart_edge(d: int) -> int:
    return d >> 1


def dart_origin(g: Graph, d: int) -> int:
    return g.edges[d >> 1][d & 1]


def dart_head(g: Graph, d: int) -> int:
    return g.edges[d >> 1][1 - (d & 1)]


@dataclass(frozen=True)
class FaceWalk:
    """One face: its darts in walk order and the vertices they leave from."""

    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True, eq=True)
class EmbeddingScheme:
    """Rotation system with edge signature for a connected graph.

    The constructor performs no validation so that malformed schemes can be
    inspected with :func:`scheme_problems`; enumerated schemes are always
    well formed.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    signature: tuple[int, ...]

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.graph.vertex_count, self.graph.edges, self.rotation, self.signature))

    @classmethod
    def from_next(cls, g: Graph, nxt: Sequence[int], sign: Sequence[int]) -> "EmbeddingScheme":
        rotation = []
        for v in range(g.vertex_count):
            ds = [2 * g.edge_id(v, w) + (0 if v < w else 1) for w in g.adjacency[v]]
            if not ds:
                rotation.append(())
                continue
            start = min(ds)
            cyc = [start]
            x = nxt[start]
            while x != start:
                cyc.append(x)
                x = nxt[x]
            rotation.append(tuple(cyc))
        return cls(g, tuple(rotation), tuple(int(s) for s in sign))

    @classmethod
    def from_neighbor_orders(
        cls, g: Graph, orders: Sequence[Sequence[int]], signs: dict[tuple[int, int], int] | None = None
    ) -> "EmbeddingScheme":
        """Build a scheme from cyclic neighbour lists and optional negative edges."""
        rotation = []
        for v, order in enumerate(orders):
            rotation.append(tuple(2 * g.edge_id(v, w) + (0 if v < w else 1) for w in order))
        sig = [1] * g.edge_count
        for (u, w), s in (signs or {}).items():
            sig[g.edge_id(u, w)] = s
        return cls(g, tuple(rotation), tuple(sig))

    @cached_property
    def next_dart(self) -> tuple[int, ...]:
        nxt = [-1] * (2 * self.graph.edge_count)
        for ds in self.rotation:
            for i, d in enumerate(ds):
                nxt[d] = ds[(i + 1) % len(ds)]
        return tuple(nxt)

    @cached_property
    def prev_dart(self) -> tuple[int, ...]:
        prv = [-1] * (2 * self.graph.edge_count)
        for ds in self.rotation:
            for i, d in enumerate(ds):
                prv[ds[(i + 1) % len(ds)]] = d
        return tuple(prv)

    @cached_property
    def flag_faces(self) -> tuple[tuple[int, ...], int]:
        """Face number of every flag ``2 * dart + side`` and the face count."""
        if self.graph.edge_count == 0:
            return (), 1
        lab, count = _kernel.face_labels(list(self.next_dart), list(self.prev_dart), list(self.signature))
        return tuple(lab), count

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        return tuple(_walks(self))

    @cached_property
    def edge_sides(self) -> tuple[tuple[int, int], ...]:
        """The faces on the two sides of every edge."""
        lab, _ = self.flag_faces
        return tuple((lab[4 * e], lab[4 * e + 1]) for e in range(self.graph.edge_count))

    @cached_property
    def vertex_faces(self) -> tuple[frozenset[int], ...]:
        if self.graph.edge_count == 0:
            return tuple(frozenset({0}) for _ in range(self.graph.vertex_count))
        lab, _ = self.flag_faces
        return tuple(frozenset(lab[2 * d + t] for d in ds for t in (0, 1)) for ds in self.rotation)

    @cached_property
    def face_vertex_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.faces)
        for v, fs in enumerate(self.vertex_faces):
            for f in fs:
                masks[f] |= 1 << v
        return tuple(masks)

    @cached_property
    def negative_edge_mask(self) -> int:
        mask = 0
        for e, s in enumerate(self.signature):
            if s < 0:
                mask |= 1 << e
        return mask

    def is_orientable(self) -> bool:
        return is_orientable(self)


def _walks(s: EmbeddingScheme) -> Iterator[FaceWalk]:
    g = s.graph
    if g.edge_count == 0:
        yield FaceWalk((), (0,) if g.vertex_count else ())
        return
    lab, count = s.flag_faces
    nxt, prv, sign = s.next_dart, s.prev_dart, s.signature
    started = [False] * count
    for f0, face in enumerate(lab):
        if started[face]:
            continue
        started[face] = True
        darts = []
        f = f0
        while True:
            d = f >> 1
            darts.append(d)
            gflag = ((d ^ 1) << 1) | ((f & 1) ^ (sign[d >> 1] > 0))
            dg = gflag >> 1
            f = (prv[dg] << 1) if gflag & 1 else ((nxt[dg] << 1) | 1)
            if f == f0:
                break
        yield FaceWalk(tuple(darts), tuple(dart_origin(g, d) for d in darts))


# ----------------------------------------------------------------------------
# basic invariants

def scheme_problems(s: EmbeddingScheme) -> list[str]:
    """Structural defects; an empty list means the scheme is well formed."""
    g = s.graph
    problems = []
    if len(s.rotation) != g.vertex_count:
        problems.append(f"rotation lists {len(s.rotation)} vertices, graph has {g.vertex_count}")
    if len(s.signature) != g.edge_count:
        problems.append(f"signature has {len(s.signature)} entries, graph has {g.edge_count} edges")
    if any(x not in (1, -1) for x in s.signature):
        problems.append("signs must be +1 or -1")
    seen: dict[int, int] = {}
    for v, ds in enumerate(s.rotation):
        for d in ds:
            if not 0 <= d < 2 * g.edge_count:
                problems.append(f"vertex {v}: dart {d} does not exist")
                continue
            if d in seen:
                problems.append(f"dart {d} appears in the rotations of vertices {seen[d]} and {v}")
                continue
            seen[d] = v
            if dart_origin(g, d) != v:
                problems.append(f"vertex {v}: dart {d} leaves vertex {dart_origin(g, d)}")
        if v < g.vertex_count and len(ds) != g.degree(v):
            problems.append(f"vertex {v}: rotation length {len(ds)} differs from degree {g.degree(v)}")
    missing = set(range(2 * g.edge_count)) - set(seen)
    if missing:
        problems.append(f"darts missing from every rotation: {sorted(missing)}")
    return problems


def _require_connected(s: EmbeddingScheme) -> None:
    if s.graph.vertex_count == 0 or not is_connected(s.graph):
        raise SchemeError("scheme operations need a nonempty connected graph")


def trace_faces(s: EmbeddingScheme) -> list[FaceWalk]:
    return list(s.faces)


def euler_genus(s: EmbeddingScheme) -> int:
    _require_connected(s)
    g = s.graph
    return 2 - g.vertex_count + g.edge_count - len(s.faces)


def is_orientable(s: EmbeddingScheme) -> bool:
    """Whether some set of vertex switchings makes every sign positive."""
    _require_connected(s)
    g = s.graph
    state = [0] * g.vertex_count
    state[0] = 1
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            want = state[x] * s.signature[g.edge_id(x, y)]
            if state[y] == 0:
                state[y] = want
                stack.append(y)
            elif state[y] != want:
                return False
    return True


def switch_vertex(s: EmbeddingScheme, v: int) -> EmbeddingScheme:
    """Reverse the rotation at ``v`` and negate the signs of its edges."""
    g = s.graph
    rotation = list(s.rotation)
    ds = rotation[v]
    if ds:
        rev = (ds[0],) + tuple(reversed(ds[1:]))
        rotation[v] = rev
    sig = list(s.signature)
    for w in g.adjacency[v]:
        sig[g.edge_id(v, w)] *= -1
    return EmbeddingScheme(g, tuple(rotation), tuple(sig))


def mirror(s: EmbeddingScheme) -> EmbeddingScheme:
    """Reverse every rotation, keeping the signs."""
    rotation = tuple(((ds[0],) + tuple(reversed(ds[1:]))) if ds else () for ds in s.rotation)
    return EmbeddingScheme(s.graph, rotation, s.signature)


def walk_sign(s: EmbeddingScheme, walk: FaceWalk) -> int:
    prod = 1
    for d in walk.darts:
        prod *= s.signature[d >> 1]
    return prod


def cycle_edge_ids(g: Graph, c: Cycle) -> list[int]:
    try:
        return [g.edge_id(u, v) for u, v in c.edge_pairs()]
    except GraphError:
        raise SchemeError(f"{c.vertices} is not a cycle of the graph") from None


def cycle_homology(s: EmbeddingScheme, c: Cycle) -> HomologyClass:
    prod = 1
    for e in cycle_edge_ids(s.graph, c):
        prod *= s.signature[e]
    return HomologyClass.ONE if prod < 0 else HomologyClass.ZERO


# ----------------------------------------------------------------------------
# enumeration

def spanning_tree(g: Graph) -> tuple[list[int], list[int]]:
    """Depth-first spanning tree edges from vertex 0 and the remaining edges."""
    seen = [False] * g.vertex_count
    tree: list[int] = []
    if g.vertex_count:
        seen[0] = True
        stack = [(0, iter(g.adjacency[0]))]
        while stack:
            x, it = stack[-1]
            for y in it:
                if not seen[y]:
                    seen[y] = True
                    tree.append(g.edge_id(x, y))
                    stack.append((y, iter(g.adjacency[y])))
                    break
            else:
                stack.pop()
    in_tree = set(tree)
    return tree, [e for e in range(g.edge_count) if e not in in_tree]


def _run_partition(args: tuple) -> list:
    return _kernel.enumerate_embeddings(*args)


_SCHEME_CACHE: dict[tuple[Graph, Surface], tuple[EmbeddingScheme, ...]] = {}


def _scheme_list(g: Graph, target: Surface, limit: int, workers: int) -> tuple[EmbeddingScheme, ...]:
    key = (g, target)
    cached = _SCHEME_CACHE.get(key)
    if cached is not None:
        if len(cached) > limit:
            raise _kernel.LimitExceeded
        return cached
    if g.edge_count == 0:
        out: tuple[EmbeddingScheme, ...] = ()
        if target is Surface.PLANE:
            out = (EmbeddingScheme(g, ((),), ()),)
    else:
        tree, extra = spanning_tree(g)
        genus = target.euler_genus
        base = (g.vertex_count, list(g.edges), tree, extra, genus, [genus], limit)
        if workers <= 1:
            raw = _kernel.enumerate_embeddings(*base)
        else:
            jobs = [base + (i, workers, 2) for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_run_partition, jobs))
            raw = sorted((r for part in parts for r in part), key=lambda r: r[0])
            if len(raw) > limit:
                raise _kernel.LimitExceeded
        out = tuple(EmbeddingScheme.from_next(g, nxt, sign) for _, nxt, sign, _ in raw)
    if len(_SCHEME_CACHE) > 4096:
        _SCHEME_CACHE.clear()
    _SCHEME_CACHE[key] = out
    return out


def enumerate_schemes(
    g: Graph,
    target: Surface | str,
    *,
    budget: Budget | None = None,
    workers: int = 1,
) -> Iterator[EmbeddingScheme]:
    """Every cellular scheme of ``g`` on the target surface.

    Signs are normalized so that the depth-first spanning tree from vertex 0
    is all positive, which leaves exactly one representative per switching
    class.  The order is deterministic and independent of ``workers``.
    """
    target = Surface(target)
    if g.vertex_count == 0 or not is_connected(g):
        raise SchemeError("scheme enumeration needs a nonempty connected graph")
    limit = budget.remaining() if budget is not None else None
    try:
        schemes = _scheme_list(g, target, limit if limit is not None else 1 << 62, workers)
    except _kernel.LimitExceeded:
        raise BudgetExceeded(
            f"work budget of {budget.limit} exhausted while enumerating schemes of a {g.vertex_count}-vertex component"
        ) from None
    if budget is not None:
        budget.charge(len(schemes))
    return iter(schemes)


# ----------------------------------------------------------------------------
# canonical forms

def scheme_code(s: EmbeddingScheme) -> tuple[int, ...]:
    """Invariant of the scheme up to switching, mirroring and relabelling."""
    return _kernel.canonical_code(list(s.next_dart), list(s.signature), range(4 * s.graph.edge_count))


def marked_face_code(s: EmbeddingScheme, face: int) -> tuple[int, ...]:
    """Like :func:`scheme_code`, but the isomorphism must fix ``face``."""
    if s.graph.edge_count == 0:
        return ()
    lab, _ = s.flag_faces
    roots = [f for f, x in enumerate(lab) if x == face]
    return _kernel.canonical_code(list(s.next_dart), list(s.signature), roots)


def equivalence_class_count(
    g: Graph, constraint: Surface | str, *, budget: Budget | None = None, workers: int = 1
) -> int:
    return len({scheme_code(s) for s in enumerate_schemes(g, constraint, budget=budget, workers=workers)})


def class_representatives(
    schemes: Iterable[EmbeddingScheme],
) -> list[EmbeddingScheme]:
    """First scheme of every equivalence class, in input order."""
    seen: set[tuple[int, ...]] = set()
    reps = []
    for s in schemes:
        code = scheme_code(s)
        if code not in seen:
            seen.add(code)
            reps.append(s)
    return reps


# ----------------------------------------------------------------------------
# text serialization

_DART_RE = re.compile(r"^(\d+)>(\d+)$")


def scheme_to_text(s: EmbeddingScheme) -> str:
    """Serialize as ``V``/``E``/``R`` records.

    ``E u v +`` gives an edge with its sign and ``R v : v>a v>b ...`` the
    darts leaving ``v`` in cyclic order, each named by its endpoints.
    """
    g = s.graph
    lines = [f"V {g.vertex_count}"]
    for (u, v), sgn in zip(g.edges, s.signature):
        lines.append(f"E {u} {v} {'+' if sgn > 0 else '-'}")
    for v, ds in enumerate(s.rotation):
        names = " ".join(f"{v}>{dart_head(g, d)}" for d in ds)
        lines.append(f"R {v} : {names}".rstrip())
    return "\n".join(lines) + "\n"


def scheme_from_text(text: str) -> EmbeddingScheme:
    n = None
    edges: list[tuple[int, int]] = []
    signs: list[int] = []
    orders: dict[int, list[int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "V":
                n = int(parts[1])
            elif parts[0] == "E":
                edges.append((int(parts[1]), int(parts[2])))
                if parts[3] not in "+-" or len(parts[3]) != 1:
                    raise ValueError(parts[3])
                signs.append(1 if parts[3] == "+" else -1)
            elif parts[0] == "R":
                v = int(parts[1])
                if parts[2] != ":":
                    raise ValueError(parts[2])
                heads = []
                for tok in parts[3:]:
                    m = _DART_RE.match(tok)
                    if not m or int(m.group(1)) != v:
                        raise ValueError(tok)
                    heads.append(int(m.group(2)))
                orders[v] = heads
            else:
                raise ValueError(parts[0])
        except (IndexError, ValueError) as exc:
            raise SchemeError(f"line {line_no}: cannot parse {line!r} ({exc})") from None
    if n is None:
        raise SchemeError("missing V record")
    g = Graph(n, tuple(edges))
    if list(g.edges) != edges:
        raise SchemeError("edges must be listed once each, as u < v, in sorted order")
    try:
        rotation = tuple(
            tuple(2 * g.edge_id(v, w) + (0 if v < w else 1) for w in orders.get(v, ())) for v in range(n)
        )
    except GraphError as exc:
        raise SchemeError(str(exc)) from None
    return EmbeddingScheme(g, rotation, tuple(signs))
