"""Embeddings of possibly disconnected graphs in the projective plane.

An embedding is described by a *root* and a nesting forest of placements.
The root is either

* an :class:`EssentialRoot`: one component drawn cellularly with a
  nonorientable scheme; its faces are disks that may host other components;
* a :class:`CrosscapFaceChoice`: every component is drawn in a disk and the
  region that holds the top-level components also holds the crosscap;
* a :class:`PlaneRoot`: the same arrangement read in the plane, where the
  top-level region is the unbounded one.

Every other component gets a plane scheme, an outer face and a host, which
is either the root region (``None``) or a face of another component.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence, Union

from .config import Budget
from .graph import Cycle, Graph, component_graphs, connected_components, simple_cycles
from .scheme import (
    EmbeddingScheme,
    HomologyClass,
    SchemeError,
    Surface,
    class_representatives,
    cycle_edge_ids,
    enumerate_schemes,
    marked_face_code,
    scheme_from_text,
    scheme_problems,
    scheme_to_text,
    walk_sign,
)


class NotEmbeddableError(ValueError):
    """The graph has no embedding on the requested surface."""


class EmbeddingError(ValueError):
    """A query does not apply to the given embedding."""


@dataclass(frozen=True)
class EssentialRoot:
    component: int
    scheme: EmbeddingScheme
    kind = "essential"


@dataclass(frozen=True)
class CrosscapFaceChoice:
    kind = "crosscap"


@dataclass(frozen=True)
class PlaneRoot:
    kind = "plane"


Root = Union[EssentialRoot, CrosscapFaceChoice, PlaneRoot]


@dataclass(frozen=True)
class Host:
    component: int
    face: int


@dataclass(frozen=True)
class Placement:
    component: int
    scheme: EmbeddingScheme
    outer_face: int
    host: Host | None


@dataclass(frozen=True)
class GlobalFace:
    id: int
    owner: tuple[int, int] | None
    walks: tuple[tuple[int, ...], ...]
    vertex_mask: int
    label: str

    @property
    def vertices(self) -> tuple[int, ...]:
        return _bits(self.vertex_mask)


@dataclass(frozen=True)
class Side:
    faces: tuple[int, ...]
    vertices: frozenset[int]


@dataclass(frozen=True)
class CycleSides:
    inside: Side
    outside: Side


@dataclass(frozen=True)
class ZeroCycle:
    """A 0-homologous cycle with the vertices strictly inside its disk."""

    cycle: Cycle
    component: int
    vertex_mask: int
    inside_mask: int


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _to_global(mask: int, ids: Sequence[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << ids[i]
        mask >>= 1
        i += 1
    return out


# ----------------------------------------------------------------------------
# per-scheme cycle tables

@dataclass(frozen=True)
class _CycleRecord:
    cycle: Cycle
    vertex_mask: int
    homology: HomologyClass
    # face bitmasks of the two sides and the off-cycle vertices on each side
    side_faces: tuple[int, int] = (0, 0)
    side_vertices: tuple[int, int] = (0, 0)
    disk_side: int = -1


@lru_cache(maxsize=None)
def _cycles_of(g: Graph) -> tuple[Cycle, ...]:
    return tuple(simple_cycles(g))


def _split_faces(s: EmbeddingScheme, cycle_edges: set[int]) -> list[int]:
    """Face groups (as bitmasks) left connected after cutting along the cycle."""
    nfaces = len(s.faces)
    adj = [0] * nfaces
    for e, (a, b) in enumerate(s.edge_sides):
        if e not in cycle_edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    groups = []
    left = (1 << nfaces) - 1
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            f = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[f] & ~comp
            comp |= new
            frontier |= new
        groups.append(comp)
        left &= ~comp
    return groups


@lru_cache(maxsize=65536)
def _cycle_table(s: EmbeddingScheme) -> tuple[_CycleRecord, ...]:
    g = s.graph
    neg = s.negative_edge_mask
    face_masks_of_vertex = [sum(1 << f for f in fs) for fs in s.vertex_faces]
    records = []
    for c in _cycles_of(g):
        eids = cycle_edge_ids(g, c)
        emask = sum(1 << e for e in eids)
        vmask = c.vertex_mask
        if bin(emask & neg).count("1") % 2:
            records.append(_CycleRecord(c, vmask, HomologyClass.ONE))
            continue
        groups = _split_faces(s, set(eids))
        if len(groups) != 2:
            raise SchemeError(f"cycle {c.vertices} with even sign splits faces into {len(groups)} groups")
        verts = [0, 0]
        for v in range(g.vertex_count):
            if vmask >> v & 1:
                continue
            verts[0 if face_masks_of_vertex[v] & groups[0] else 1] |= 1 << v
        disk = -1
        for i, grp in enumerate(groups):
            nf = bin(grp).count("1")
            ne = sum(1 for e in range(g.edge_count) if e not in eids and (grp >> s.edge_sides[e][0]) & 1)
            if nf - ne + bin(verts[i]).count("1") == 1:
                disk = i
        records.append(_CycleRecord(c, vmask, HomologyClass.ZERO, (groups[0], groups[1]), (verts[0], verts[1]), disk))
    return tuple(records)


@lru_cache(maxsize=65536)
def _placed_cycles(s: EmbeddingScheme, ids: tuple[int, ...], outer: int | None):
    """For every 0-homologous cycle: global cycle, masks and the disk-side faces."""
    out = []
    for rec in _cycle_table(s):
        if rec.homology is HomologyClass.ONE:
            continue
        if outer is None:
            side = rec.disk_side
        else:
            side = 1 if rec.side_faces[0] >> outer & 1 else 0
        gcycle = Cycle(tuple(ids[v] for v in rec.cycle.vertices))
        out.append(
            (
                gcycle,
                _to_global(rec.vertex_mask, ids),
                _bits(rec.side_faces[side]),
                _to_global(rec.side_vertices[side], ids),
            )
        )
    return tuple(out)


# ----------------------------------------------------------------------------
# the embedding object

@dataclass(frozen=True, eq=False)
class Rp2Embedding:
    graph: Graph
    components: tuple[tuple[int, ...], ...]
    root: Root
    placements: tuple[Placement, ...]

    @property
    def surface(self) -> Surface:
        return Surface.PLANE if isinstance(self.root, PlaneRoot) else Surface.PROJECTIVE

    @property
    def is_essential(self) -> bool:
        return isinstance(self.root, EssentialRoot)

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.graph.vertex_count) - 1

    @cached_property
    def _layout(self):
        schemes: dict[int, EmbeddingScheme] = {}
        outer: dict[int, int | None] = {}
        if isinstance(self.root, EssentialRoot):
            schemes[self.root.component] = self.root.scheme
            outer[self.root.component] = None
        children: dict[Host | None, list[int]] = {}
        for p in self.placements:
            schemes[p.component] = p.scheme
            outer[p.component] = p.outer_face
            children.setdefault(p.host, []).append(p.component)
        return schemes, outer, children

    def scheme_of(self, component: int) -> EmbeddingScheme:
        return self._layout[0][component]

    def outer_face_of(self, component: int) -> int | None:
        return self._layout[1][component]

    def children_of(self, host: Host | None) -> list[int]:
        return self._layout[2].get(host, [])

    def component_mask(self, component: int) -> int:
        return sum(1 << v for v in self.components[component])

    @cached_property
    def subtree_masks(self) -> dict[int, int]:
        """Vertices of each component together with everything nested in it."""
        memo: dict[int, int] = {}

        def walk(c: int, depth: int) -> int:
            if c in memo:
                return memo[c]
            if depth > len(self.components):
                raise EmbeddingError("nesting forest has a cycle")
            mask = self.component_mask(c)
            nfaces = len(self.scheme_of(c).faces)
            for f in range(nfaces):
                for child in self.children_of(Host(c, f)):
                    mask |= walk(child, depth + 1)
            memo[c] = mask
            return mask

        for c in range(len(self.components)):
            walk(c, 0)
        return memo

    def hosted_mask(self, host: Host | None) -> int:
        mask = 0
        for child in self.children_of(host):
            mask |= self.subtree_masks[child]
        return mask

    def _outer_walk(self, c: int) -> tuple[tuple[int, ...], int]:
        s = self.scheme_of(c)
        f = self.outer_face_of(c)
        ids = self.components[c]
        walk = tuple(ids[v] for v in s.faces[f].vertices)
        return walk, _to_global(s.face_vertex_masks[f], ids)

    @cached_property
    def _faces_and_index(self) -> tuple[tuple[GlobalFace, ...], dict[tuple[int, int], int]]:
        faces: list[GlobalFace] = []
        index: dict[tuple[int, int], int] = {}
        if not self.is_essential:
            walks, mask = [], 0
            for child in self.children_of(None):
                w, m = self._outer_walk(child)
                walks.append(w)
                mask |= m
            label = "Outer" if isinstance(self.root, PlaneRoot) else "Moebius"
            faces.append(GlobalFace(0, None, tuple(walks), mask, label))
        for c, ids in enumerate(self.components):
            s = self.scheme_of(c)
            outer = self.outer_face_of(c)
            for f, fw in enumerate(s.faces):
                if f == outer:
                    continue
                walks = [tuple(ids[v] for v in fw.vertices)]
                mask = _to_global(s.face_vertex_masks[f], ids)
                kids = self.children_of(Host(c, f))
                for child in kids:
                    w, m = self._outer_walk(child)
                    walks.append(w)
                    mask |= m
                index[(c, f)] = len(faces)
                faces.append(GlobalFace(len(faces), (c, f), tuple(walks), mask, "Punctured" if kids else "Disk"))
        for p in self.placements:
            index[(p.component, p.outer_face)] = 0 if p.host is None else index[(p.host.component, p.host.face)]
        return tuple(faces), index

    @property
    def global_faces(self) -> tuple[GlobalFace, ...]:
        return self._faces_and_index[0]

    def face_id(self, component: int, local_face: int) -> int:
        """Global face containing the given local face of a component."""
        return self._faces_and_index[1][(component, local_face)]

    @property
    def crosscap_face(self) -> int | None:
        return 0 if isinstance(self.root, CrosscapFaceChoice) else None

    @cached_property
    def zero_cycles(self) -> tuple[ZeroCycle, ...]:
        out = []
        for c, ids in enumerate(self.components):
            s = self.scheme_of(c)
            outer = self.outer_face_of(c)
            for gcycle, vmask, disk_faces, own_inside in _placed_cycles(s, ids, outer):
                inside = own_inside
                for f in disk_faces:
                    inside |= self.hosted_mask(Host(c, f))
                out.append(ZeroCycle(gcycle, c, vmask, inside))
        return tuple(out)

    @cached_property
    def one_cycles(self) -> tuple[Cycle, ...]:
        out = []
        for c, ids in enumerate(self.components):
            for rec in _cycle_table(self.scheme_of(c)):
                if rec.homology is HomologyClass.ONE:
                    out.append(Cycle(tuple(ids[v] for v in rec.cycle.vertices)))
        return tuple(out)

    def locate_cycle(self, c: Cycle) -> tuple[int, Cycle]:
        """Component holding ``c`` and the cycle in that component's numbering."""
        for comp, ids in enumerate(self.components):
            if c.vertices[0] in ids:
                pos = {v: i for i, v in enumerate(ids)}
                if any(v not in pos for v in c.vertices):
                    raise EmbeddingError(f"{c.vertices} is not a cycle of the graph")
                local = Cycle(tuple(pos[v] for v in c.vertices))
                if not local.is_in(self.scheme_of(comp).graph):
                    raise EmbeddingError(f"{c.vertices} is not a cycle of the graph")
                return comp, local
        raise EmbeddingError(f"{c.vertices} is not a cycle of the graph")

    def homology(self, c: Cycle) -> HomologyClass:
        comp, local = self.locate_cycle(c)
        s = self.scheme_of(comp)
        prod = 1
        for e in cycle_edge_ids(s.graph, local):
            prod *= s.signature[e]
        return HomologyClass.ONE if prod < 0 else HomologyClass.ZERO


# ----------------------------------------------------------------------------
# queries

def faces(e: Rp2Embedding) -> list[GlobalFace]:
    return list(e.global_faces)


def is_closed_cell(e: Rp2Embedding) -> bool:
    return all(f.label == "Disk" for f in e.global_faces)


def has_face_with_all_vertices(e: Rp2Embedding) -> GlobalFace | None:
    for f in e.global_faces:
        if f.vertex_mask == e.all_mask:
            return f
    return None


def all_pairs_share_face(e: Rp2Embedding) -> bool:
    masks = [f.vertex_mask for f in e.global_faces]
    for v in range(e.graph.vertex_count):
        reach = 0
        for m in masks:
            if m >> v & 1:
                reach |= m
        if reach != e.all_mask:
            return False
    return True


def pair_without_common_face(e: Rp2Embedding) -> tuple[int, int] | None:
    masks = [f.vertex_mask for f in e.global_faces]
    for v in range(e.graph.vertex_count):
        reach = 0
        for m in masks:
            if m >> v & 1:
                reach |= m
        missing = e.all_mask & ~reach
        if missing:
            w = (missing & -missing).bit_length() - 1
            return (min(v, w), max(v, w))
    return None


def sides_of_zero_cycle(e: Rp2Embedding, c: Cycle) -> CycleSides:
    comp, local = e.locate_cycle(c)
    s = e.scheme_of(comp)
    eids = cycle_edge_ids(s.graph, local)
    if sum(1 for x in eids if s.signature[x] < 0) % 2:
        raise EmbeddingError(f"cycle {c.vertices} is 1-homologous and bounds no disk")
    groups = _split_faces(s, set(eids))
    outer = e.outer_face_of(comp)
    if outer is None:
        rec = next(r for r in _cycle_table(s) if r.cycle == local)
        disk = groups[rec.disk_side] if rec.side_faces[0] == groups[0] else groups[1 - rec.disk_side]
    else:
        disk = groups[0] if not groups[0] >> outer & 1 else groups[1]
    ids = e.components[comp]
    inside_faces: set[int] = set()
    inside_vertices = 0
    pending = []
    for f in _bits(disk):
        inside_faces.add(e.face_id(comp, f))
        pending.extend(e.children_of(Host(comp, f)))
    while pending:
        child = pending.pop()
        inside_vertices |= e.component_mask(child)
        cs = e.scheme_of(child)
        for f in range(len(cs.faces)):
            if f != e.outer_face_of(child):
                inside_faces.add(e.face_id(child, f))
            pending.extend(e.children_of(Host(child, f)))
    on_cycle = c.vertex_mask
    for v, fs in enumerate(s.vertex_faces):
        gv = ids[v]
        if not on_cycle >> gv & 1 and any(disk >> f & 1 for f in fs):
            inside_vertices |= 1 << gv
    outside_vertices = e.all_mask & ~on_cycle & ~inside_vertices
    outside_faces = [f.id for f in e.global_faces if f.id not in inside_faces]
    return CycleSides(
        Side(tuple(sorted(inside_faces)), frozenset(_bits(inside_vertices))),
        Side(tuple(outside_faces), frozenset(_bits(outside_vertices))),
    )


def find_separating_zero_cycle(e: Rp2Embedding) -> ZeroCycle | None:
    full = e.all_mask
    for z in e.zero_cycles:
        if z.inside_mask and full & ~z.vertex_mask & ~z.inside_mask:
            return z
    return None


# ----------------------------------------------------------------------------
# validation

def validate(e: Rp2Embedding) -> list[str]:
    """Invariant violations of a (possibly hand-built) embedding."""
    problems: list[str] = []
    g = e.graph
    comps = connected_components(g)
    if sorted(e.components) != sorted(comps):
        problems.append("component vertex sets do not match the graph")
        return problems
    entries: list[tuple[int, EmbeddingScheme, int | None, bool]] = []
    if isinstance(e.root, EssentialRoot):
        entries.append((e.root.component, e.root.scheme, None, True))
    entries.extend((p.component, p.scheme, p.outer_face, False) for p in e.placements)
    placed = [c for c, _, _, _ in entries]
    if sorted(placed) != list(range(len(e.components))):
        problems.append(f"components placed {sorted(placed)}, expected each of 0..{len(e.components) - 1} once")
        return problems
    well_formed = True
    for c, s, outer, is_root in entries:
        sub = component_graphs(g)[c][0]
        if s.graph != sub:
            problems.append(f"component {c}: scheme graph differs from the component")
            well_formed = False
            continue
        bad = scheme_problems(s)
        if bad:
            problems.extend(f"component {c}: {msg}" for msg in bad)
            well_formed = False
            continue
        nf = len(s.faces)
        chi = sub.vertex_count - sub.edge_count + nf
        if is_root and chi != 1:
            problems.append(f"component {c}: essential scheme has V-E+F = {chi}, expected 1")
        if not is_root and chi != 2:
            problems.append(f"component {c}: placed scheme has V-E+F = {chi}, expected 2")
        if sum(len(w) for w in s.faces) != 2 * sub.edge_count:
            problems.append(f"component {c}: face walks do not use every dart exactly once")
        odd = sum(1 for w in s.faces if walk_sign(s, w) < 0)
        if odd % 2:
            problems.append(f"component {c}: odd number ({odd}) of faces with negative sign product")
        if outer is not None and not 0 <= outer < nf:
            problems.append(f"component {c}: outer face {outer} out of range")
            well_formed = False
    if not well_formed:
        return problems
    ones = []
    for c, ids in enumerate(e.components):
        for rec in _cycle_table(e.scheme_of(c)):
            if rec.homology is HomologyClass.ONE:
                ones.append((c, _to_global(rec.vertex_mask, ids), rec.cycle))
    for (c1, m1, z1), (c2, m2, z2) in itertools.combinations(ones, 2):
        if not m1 & m2:
            problems.append(
                f"1-homologous cycles {_bits(m1)} (component {c1}) and {_bits(m2)} (component {c2}) are disjoint"
            )
            break
    for p in e.placements:
        if p.host is None:
            if isinstance(e.root, EssentialRoot):
                problems.append(f"component {p.component}: needs a host face inside the essential root")
            continue
        hc, hf = p.host.component, p.host.face
        if hc == p.component or not 0 <= hc < len(e.components):
            problems.append(f"component {p.component}: invalid host component {hc}")
            continue
        hs = e.scheme_of(hc)
        if not 0 <= hf < len(hs.faces) or hf == e.outer_face_of(hc):
            problems.append(f"component {p.component}: invalid host face {hf} of component {hc}")
    if problems:
        return problems
    try:
        e.subtree_masks
    except EmbeddingError as exc:
        problems.append(str(exc))
        return problems
    if sum(1 for f in e.global_faces if f.label == "Moebius") > 1:
        problems.append("more than one Moebius face")
    return problems


# ----------------------------------------------------------------------------
# enumeration

@dataclass
class _ComponentChoices:
    ids: tuple[int, ...]
    graph: Graph
    options: list[tuple[EmbeddingScheme, int]]
    roots: list[EmbeddingScheme]


def _component_choices(
    g: Graph, surface: Surface, reduced: bool, budget: Budget | None, workers: int
) -> list[_ComponentChoices]:
    out = []
    for sub, ids in component_graphs(g):
        planar = list(enumerate_schemes(sub, Surface.PLANE, budget=budget, workers=workers))
        roots: list[EmbeddingScheme] = []
        if surface is Surface.PROJECTIVE:
            roots = list(enumerate_schemes(sub, Surface.PROJECTIVE, budget=budget, workers=workers))
        if not planar and not roots:
            raise NotEmbeddableError(f"component {list(ids)} does not embed in the {surface.value} plane")
        options = [(s, f) for s in planar for f in range(len(s.faces))]
        if reduced:
            seen = set()
            kept = []
            for s, f in options:
                code = marked_face_code(s, f)
                if code not in seen:
                    seen.add(code)
                    kept.append((s, f))
            options = kept
            roots = class_representatives(roots)
        out.append(_ComponentChoices(ids, sub, options, roots))
    return out


def _host_forests(members: list[int], inner_faces: dict[int, list[int]], root_hosts: list[Host | None]):
    cands = []
    for j in members:
        opts: list[Host | None] = list(root_hosts)
        for i in members:
            if i != j:
                opts.extend(Host(i, f) for f in inner_faces[i])
        cands.append(opts)
    for combo in itertools.product(*cands):
        parent = dict(zip(members, combo))
        if _acyclic(parent):
            yield parent


def _acyclic(parent: dict[int, Host | None]) -> bool:
    for start in parent:
        x, steps = start, 0
        while True:
            h = parent[x]
            if h is None or h.component not in parent:
                break
            x = h.component
            steps += 1
            if steps > len(parent):
                return False
    return True


def _ordered_placements(parent: dict[int, Host | None], chosen: dict[int, tuple[EmbeddingScheme, int]]):
    depth: dict[int, int] = {}

    def d(j: int) -> int:
        if j not in depth:
            h = parent[j]
            depth[j] = 0 if h is None or h.component not in parent else d(h.component) + 1
        return depth[j]

    order = sorted(parent, key=lambda j: (d(j), j))
    return tuple(Placement(j, chosen[j][0], chosen[j][1], parent[j]) for j in order)


def enumerate_rp2_embeddings(
    g: Graph,
    *,
    surface: Surface | str = Surface.PROJECTIVE,
    reduced: bool = False,
    budget: Budget | None = None,
    workers: int = 1,
) -> Iterator[Rp2Embedding]:
    """Every embedding of ``g`` in the projective plane (or the plane).

    With ``reduced=True`` each component's plane scheme and outer face are
    taken up to symmetry of the component, and essential roots up to scheme
    equivalence.  The reduced stream is enough for any question that does
    not depend on vertex names within a component.
    """
    surface = Surface(surface)
    comps = _component_choices(g, surface, reduced, budget, workers)
    components = tuple(c.ids for c in comps)
    nonplanar = [i for i, c in enumerate(comps) if not c.options]
    if len(nonplanar) > 1:
        raise NotEmbeddableError("two nonplanar components cannot share the projective plane")
    k = len(comps)

    def arrangements(members: list[int], root_hosts: list[Host | None], root: Root):
        option_lists = [comps[j].options for j in members]
        for combo in itertools.product(*option_lists):
            chosen = dict(zip(members, combo))
            inner = {j: [f for f in range(len(chosen[j][0].faces)) if f != chosen[j][1]] for j in members}
            for parent in _host_forests(members, inner, root_hosts):
                if budget is not None:
                    budget.charge()
                yield Rp2Embedding(g, components, root, _ordered_placements(parent, chosen))

    if not nonplanar:
        root: Root = PlaneRoot() if surface is Surface.PLANE else CrosscapFaceChoice()
        yield from arrangements(list(range(k)), [None], root)
    if surface is Surface.PLANE:
        return
    for r in nonplanar or range(k):
        for scheme in comps[r].roots:
            others = [j for j in range(k) if j != r]
            hosts: list[Host | None] = [Host(r, f) for f in range(len(scheme.faces))]
            yield from arrangements(others, hosts, EssentialRoot(r, scheme))


# ----------------------------------------------------------------------------
# witness serialization

EMBEDDING_FORMAT = "rp2embed-embedding/1"


def embedding_to_json(e: Rp2Embedding) -> dict:
    root: dict = {"type": e.root.kind}
    if isinstance(e.root, EssentialRoot):
        root["component"] = e.root.component
        root["scheme"] = scheme_to_text(e.root.scheme)
    return {
        "format": EMBEDDING_FORMAT,
        "surface": e.surface.value,
        "graph": {"vertices": e.graph.vertex_count, "edges": [list(x) for x in e.graph.edges]},
        "components": [list(c) for c in e.components],
        "root": root,
        "crosscap_face": e.crosscap_face,
        "placements": [
            {
                "component": p.component,
                "scheme": scheme_to_text(p.scheme),
                "outer_face": p.outer_face,
                "host": None if p.host is None else {"component": p.host.component, "face": p.host.face},
            }
            for p in e.placements
        ],
    }


def embedding_from_json(obj: dict) -> Rp2Embedding:
    try:
        if obj.get("format") != EMBEDDING_FORMAT:
            raise EmbeddingError(f"unsupported embedding format {obj.get('format')!r}")
        graph = Graph(int(obj["graph"]["vertices"]), tuple(tuple(x) for x in obj["graph"]["edges"]))
        components = tuple(tuple(int(v) for v in c) for c in obj["components"])
        kind = obj["root"]["type"]
        root: Root
        if kind == "essential":
            root = EssentialRoot(int(obj["root"]["component"]), scheme_from_text(obj["root"]["scheme"]))
        elif kind == "crosscap":
            root = CrosscapFaceChoice()
        elif kind == "plane":
            root = PlaneRoot()
        else:
            raise EmbeddingError(f"unknown root type {kind!r}")
        placements = []
        for p in obj["placements"]:
            host = p["host"]
            placements.append(
                Placement(
                    int(p["component"]),
                    scheme_from_text(p["scheme"]),
                    int(p["outer_face"]),
                    None if host is None else Host(int(host["component"]), int(host["face"])),
                )
            )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, EmbeddingError):
            raise
        raise EmbeddingError(f"malformed embedding witness: {exc}") from None
    return Rp2Embedding(graph, components, root, tuple(placements))
