"""Simple undirected graphs, constructors, minors, cycles and isomorphism."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx

MAX_VERTICES = 16
MAX_EDGES = 32


class GraphError(ValueError):
    """Raised when a graph would violate the simple-graph invariants."""


class GraphFormatError(GraphError):
    """Raised by :func:`parse_graph`; carries the offending line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _normalize_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """A simple labeled graph on vertices ``0 .. vertex_count - 1``.

    Edges are stored once as ``(u, v)`` with ``u < v`` in sorted order, so
    two graphs with the same edge set compare equal.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", _normalize_edges(self.vertex_count, self.edges))
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise GraphError("labels must name every vertex")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self.edge_index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.vertex_count))
        h.add_edges_from(self.edges)
        return h

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its cyclic vertex sequence.

    The canonical form starts at the smallest vertex and walks toward the
    smaller of its two cycle neighbours.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(int(v) for v in self.vertices)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise GraphError(f"not a simple cycle: {vs}")
        object.__setattr__(self, "vertices", canonical_cycle(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            out.append((u, v) if u < v else (v, u))
        return out

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask

    def is_in(self, g: Graph) -> bool:
        return all(0 <= v < g.vertex_count for v in self.vertices) and all(
            g.has_edge(u, v) for u, v in self.edge_pairs()
        )


def canonical_cycle(vs: Sequence[int]) -> tuple[int, ...]:
    k = vs.index(min(vs))
    rot = tuple(vs[k:]) + tuple(vs[:k])
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


# ----------------------------------------------------------------------------
# text format

def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Blank lines and lines starting with ``#`` are ignored.  Exactly one
    ``V <n>`` line must precede the ``E <u> <v>`` lines, and each edge must
    satisfy ``0 <= u < v < n``.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise GraphFormatError(line_no, f"expected integers, got {line!r}") from None
        if tag == "V":
            if n is not None:
                raise GraphFormatError(line_no, "repeated V line")
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError(line_no, "V line needs one nonnegative integer")
            n = nums[0]
            if n > MAX_VERTICES:
                raise GraphFormatError(line_no, f"at most {MAX_VERTICES} vertices are supported")
        elif tag == "E":
            if n is None:
                raise GraphFormatError(line_no, "E line before V line")
            if len(nums) != 2:
                raise GraphFormatError(line_no, "E line needs two vertices")
            u, v = nums
            if u == v:
                raise GraphFormatError(line_no, f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(line_no, f"endpoint out of range 0..{n - 1}")
            if u > v:
                raise GraphFormatError(line_no, "edge endpoints must be written u < v")
            if (u, v) in seen:
                raise GraphFormatError(line_no, f"duplicate edge {u} {v}")
            seen.add((u, v))
            edges.append((u, v))
            if len(edges) > MAX_EDGES:
                raise GraphFormatError(line_no, f"at most {MAX_EDGES} edges are supported")
        else:
            raise GraphFormatError(line_no, f"unknown record {tag!r}")
    if n is None:
        raise GraphFormatError(0, "missing V line")
    return Graph(n, tuple(edges))


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"V {g.vertex_count}")
    lines.extend(f"E {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# constructors

def empty_graph(n: int = 0) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    if not part_sizes:
        raise GraphError("need at least one part")
    if any(int(p) <= 0 for p in part_sizes):
        raise GraphError("part sizes must be positive")
    owner: list[int] = []
    for i, size in enumerate(part_sizes):
        owner.extend([i] * int(size))
    n = len(owner)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]]
    return Graph(n, tuple(edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.vertex_count
    return Graph(shift + h.vertex_count, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty_graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def glue_at_vertex(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Identify vertex ``u`` of ``g`` with vertex ``v`` of ``h``.

    Vertices of ``g`` keep their indices; the remaining vertices of ``h``
    follow in their original order.
    """
    if not 0 <= u < g.vertex_count:
        raise GraphError(f"vertex {u} not in first graph")
    if not 0 <= v < h.vertex_count:
        raise GraphError(f"vertex {v} not in second graph")
    remap = {}
    nxt = g.vertex_count
    for w in range(h.vertex_count):
        if w == v:
            remap[w] = u
        else:
            remap[w] = nxt
            nxt += 1
    return Graph(nxt, g.edges + tuple((remap[a], remap[b]) for a, b in h.edges))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``i`` renamed ``perm[i]``."""
    return Graph(g.vertex_count, tuple((perm[u], perm[v]) for u, v in g.edges))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``vertices`` (renumbered in the given order) and the old ids."""
    order = tuple(vertices)
    pos = {v: i for i, v in enumerate(order)}
    edges = tuple((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
    return Graph(len(order), edges), order


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def component_graphs(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    return [induced_subgraph(g, comp) for comp in connected_components(g)]


# ----------------------------------------------------------------------------
# minors

def delete_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    key = tuple(sorted(edge))
    return Graph(g.vertex_count, tuple(e for e in g.edges if e != key))


def delete_vertex(g: Graph, v: int) -> Graph:
    keep = [w for w in range(g.vertex_count) if w != v]
    return induced_subgraph(g, keep)[0]


def contract_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Contract ``edge`` into its smaller endpoint, dropping loops and parallels."""
    u, v = sorted(edge)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")

    def image(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = set()
    for a, b in g.edges:
        a2, b2 = image(a), image(b)
        if a2 != b2:
            edges.add((min(a2, b2), max(a2, b2)))
    return Graph(g.vertex_count - 1, tuple(edges))


def raw_one_step_minors(g: Graph) -> Iterator[Graph]:
    for e in g.edges:
        yield delete_edge(g, e)
    for v in range(g.vertex_count):
        yield delete_vertex(g, v)
    for e in g.edges:
        yield contract_edge(g, e)


def one_step_minors(g: Graph) -> list[Graph]:
    """Distinct (up to isomorphism) graphs one deletion or contraction away.

    The result is sorted by vertex count, edge count and edge list so it is
    reproducible.
    """
    return dedupe_isomorphic(raw_one_step_minors(g))


def dedupe_isomorphic(graphs: Iterable[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    for h in graphs:
        key = invariant_key(h)
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    out = [h for bucket in buckets.values() for h in bucket]
    out.sort(key=lambda h: (h.vertex_count, h.edge_count, h.edges))
    return out


def split_vertex(g: Graph, v: int, side_a: Iterable[int], side_b: Iterable[int]) -> Graph:
    """Replace ``v`` by adjacent vertices ``v`` and ``n`` sharing its neighbours.

    Neighbours in ``side_a`` stay on ``v``; those in ``side_b`` move to the
    new vertex ``n = vertex_count``.
    """
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} not in graph")
    a, b = set(side_a), set(side_b)
    if a & b:
        raise GraphError("neighbour partition overlaps")
    if a | b != set(g.adjacency[v]):
        raise GraphError("neighbour partition must cover exactly the neighbours")
    new = g.vertex_count
    edges = [e for e in g.edges if v not in e]
    edges += [(v, w) for w in a]
    edges += [(w, new) for w in b]
    edges.append((v, new))
    return Graph(new + 1, tuple(edges))


# ----------------------------------------------------------------------------
# cycles

def simple_cycles(g: Graph) -> list[Cycle]:
    """Every simple cycle once, in canonical form, sorted by length then vertices."""
    adj = g.adjacency
    found: list[tuple[int, ...]] = []
    for start in range(g.vertex_count):
        path = [start]
        on_path = 1 << start

        def extend(x: int) -> None:
            nonlocal on_path
            for y in adj[x]:
                if y == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                elif y > start and not on_path >> y & 1:
                    path.append(y)
                    on_path |= 1 << y
                    extend(y)
                    on_path &= ~(1 << y)
                    path.pop()

        extend(start)
    found.sort(key=lambda c: (len(c), c))
    return [Cycle(c) for c in found]


def girth(g: Graph) -> int | None:
    best = None
    adj = g.adjacency
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


# ----------------------------------------------------------------------------
# isomorphism

def invariant_key(g: Graph) -> tuple:
    return (
        g.vertex_count,
        g.edge_count,
        g.degree_sequence(),
        nx.weisfeiler_lehman_graph_hash(g.to_networkx(), iterations=3),
    )


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if (g.vertex_count, g.edge_count, g.degree_sequence()) != (h.vertex_count, h.edge_count, h.degree_sequence()):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the edge set."""
    matcher = nx.algorithms.isomorphism.GraphMatcher(g.to_networkx(), g.to_networkx())
    perms = [tuple(m[i] for i in range(g.vertex_count)) for m in matcher.isomorphisms_iter()]
    perms.sort()
    return perms
