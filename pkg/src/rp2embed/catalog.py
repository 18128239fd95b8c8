"""Named graphs, external catalog files and the classification report."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

import jsonschema

from .config import Budget
from .graph import (
    Graph,
    GraphError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_edge,
    disjoint_union,
    disjoint_union_all,
    empty_graph,
)


class CatalogError(ValueError):
    """Unknown name, duplicate name or malformed catalog file."""


CATALOG_SCHEMA = {
    "type": "object",
    "required": ["name", "vertices", "edges"],
    "properties": {
        "name": {"type": "string", "minLength": 1, "pattern": "^[A-Za-z0-9_.+-]+$"},
        "vertices": {"type": "integer", "minimum": 0, "maximum": 16},
        "edges": {
            "type": "array",
            "maxItems": 32,
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        },
        "tags": {"type": "array", "items": {"type": "string"}},
        "source": {"type": "string"},
    },
    "additionalProperties": False,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    family: str
    provenance: str = "builtin"
    tags: tuple[str, ...] = ()
    source: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges],
            "tags": list(self.tags),
            "source": self.source,
        }


def cube_graph() -> Graph:
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return Graph(8, tuple(edges))


def gamma6_graph() -> Graph:
    """Two hubs joined by five paths, two of which share a middle stretch.

    Vertices 1..8 of the drawing are stored as 0..7.
    """
    named = [(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2), (5, 7), (7, 6), (6, 2), (5, 8), (8, 6)]
    return Graph(8, tuple((u - 1, v - 1) for u, v in named), labels=tuple(str(i) for i in range(1, 9)))


def k6_minus_two_edges(adjacent: bool) -> Graph:
    g = delete_edge(complete_graph(6), (0, 1))
    return delete_edge(g, (0, 2) if adjacent else (2, 3))


def _builtins() -> list[CatalogEntry]:
    k4 = complete_graph(4)
    k32 = complete_multipartite([3, 2])
    entries = [
        CatalogEntry("k1", empty_graph(1), "complete", tags=("complete",), source="single vertex"),
        CatalogEntry("c3", cycle_graph(3), "cycle", tags=("cycle",), source="triangle"),
        CatalogEntry("k4", k4, "complete", tags=("complete",), source="complete graph on 4 vertices"),
        CatalogEntry("k5", complete_graph(5), "complete", tags=("complete",), source="complete graph on 5 vertices"),
        CatalogEntry("k6", complete_graph(6), "complete", tags=("complete",), source="complete graph on 6 vertices"),
        CatalogEntry("k32", k32, "complete-bipartite", tags=("complete-bipartite",), source="K3,2"),
        CatalogEntry("k33", complete_multipartite([3, 3]), "complete-bipartite", tags=("complete-bipartite",),
                     source="K3,3"),
        CatalogEntry("k34", complete_multipartite([3, 4]), "complete-bipartite", tags=("complete-bipartite",),
                     source="K3,4"),
        CatalogEntry("k44", complete_multipartite([4, 4]), "complete-bipartite",
                     tags=("complete-bipartite", "negative-control"), source="K4,4; does not embed"),
        CatalogEntry("k52", complete_multipartite([5, 2]), "complete-bipartite", tags=("complete-bipartite",),
                     source="K5,2"),
    ]
    for n in range(2, 6):
        entries.append(CatalogEntry(f"k2{n}", complete_multipartite([2, n]), "complete-bipartite",
                                    tags=("complete-bipartite",), source=f"K2,{n}"))
    for n in range(1, 7):
        entries.append(CatalogEntry(f"k1_{n}", complete_multipartite([1, n]), "star", tags=("star",),
                                    source=f"K1,{n}"))
    entries += [
        CatalogEntry("alpha1", disjoint_union(k4, k4), "alpha", tags=("alpha", "table1"), source="K4 + K4"),
        CatalogEntry("alpha2", disjoint_union(k4, k32), "alpha", tags=("alpha", "table1"), source="K4 + K3,2"),
        CatalogEntry("alpha3", disjoint_union(k32, k32), "alpha", tags=("alpha", "table1"), source="K3,2 + K3,2"),
        CatalogEntry("gamma6", gamma6_graph(), "gamma", tags=("gamma", "table1"),
                     source="paths 1-3-2, 1-4-2, 1-5-2, 1-5-7-6-2, 1-5-8-6-2"),
        CatalogEntry("zeta3", cube_graph(), "zeta", tags=("zeta", "table1"), source="cube graph"),
        CatalogEntry("theta1", complete_multipartite([5, 2]), "theta", tags=("theta", "table1"), source="K5,2"),
        CatalogEntry("k6_minus_2e_adjacent", k6_minus_two_edges(True), "k6-minus-2e", tags=("k6-minus-2e",),
                     source="K6 without edges 0-1 and 0-2"),
        CatalogEntry("k6_minus_2e_nonadjacent", k6_minus_two_edges(False), "k6-minus-2e", tags=("k6-minus-2e",),
                     source="K6 without edges 0-1 and 2-3"),
    ]
    for combo in itertools.combinations_with_replacement(("k4", "k32"), 3):
        parts = [k4 if c == "k4" else k32 for c in combo]
        entries.append(CatalogEntry("_".join(combo), disjoint_union_all(parts), "triple", tags=("triple",),
                                    source=" + ".join("K4" if c == "k4" else "K3,2" for c in combo)))
    for adjacent in (True, False):
        tag = "adjacent" if adjacent else "nonadjacent"
        entries.append(CatalogEntry(f"k6_minus_2e_{tag}_u_k4", disjoint_union(k6_minus_two_edges(adjacent), k4),
                                    "k6-minus-2e-union", tags=("k6-minus-2e",), source=f"K6 minus two {tag} edges + K4"))
    return entries


BUILTIN_ENTRIES: tuple[CatalogEntry, ...] = tuple(_builtins())


def _entry_from_json(obj: dict, where: str) -> CatalogEntry:
    try:
        jsonschema.validate(obj, CATALOG_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise CatalogError(f"{where}: {exc.message}") from None
    try:
        g = Graph(obj["vertices"], tuple(tuple(e) for e in obj["edges"]))
    except GraphError as exc:
        raise CatalogError(f"{where}: {exc}") from None
    tags = tuple(obj.get("tags", ()))
    family = tags[0] if tags else "external"
    return CatalogEntry(obj["name"], g, family, "external", tags, obj.get("source", ""))


def load_external(path: str | Path, taken: Iterable[str] = ()) -> list[CatalogEntry]:
    """Read catalog entries from a JSON file (one object or a list of them).

    An empty file yields no entries.  Names already in ``taken`` or repeated
    within the file are rejected.
    """
    text = Path(path).read_text()
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON ({exc})") from None
    items = data if isinstance(data, list) else [data]
    names = set(taken)
    out = []
    for i, obj in enumerate(items):
        entry = _entry_from_json(obj, f"{path}[{i}]")
        if entry.name in names:
            raise CatalogError(f"{path}[{i}]: duplicate name {entry.name!r}")
        names.add(entry.name)
        out.append(entry)
    return out


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...] = BUILTIN_ENTRIES

    @classmethod
    def with_external(cls, paths: Iterable[str | Path]) -> "Catalog":
        entries = list(BUILTIN_ENTRIES)
        for p in paths:
            entries.extend(load_external(p, taken=[e.name for e in entries]))
        return cls(tuple(entries))

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise CatalogError(f"unknown catalog graph {name!r}; figure-bound graphs can be loaded from a JSON file")


def builtin(name: str) -> CatalogEntry:
    return Catalog().get(name)


# ----------------------------------------------------------------------------
# classification report

def expected_rows() -> dict[str, dict]:
    text = resources.files("rp2embed").joinpath("data/table1_expected.json").read_text()
    return {row["name"]: row for row in json.loads(text)}


@dataclass
class ReportRow:
    name: str
    family: str
    spp: bool | None
    snspp: bool | None
    weakly_separating_with_k1: bool | None = None
    expected: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def matches(self) -> bool | None:
        if self.expected is None:
            return None
        return self.spp == self.expected["spp"] and self.snspp == self.expected["snspp"]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "spp": self.spp,
            "snspp": self.snspp,
            "weakly_separating_with_k1": self.weakly_separating_with_k1,
            "expected": None if self.expected is None else {"spp": self.expected["spp"], "snspp": self.expected["snspp"]},
            "matches": self.matches,
            "notes": self.notes,
        }


@dataclass
class Report:
    rows: list[ReportRow]

    @property
    def all_match(self) -> bool:
        return all(r.matches is not False for r in self.rows)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.rows]

    def to_text(self) -> str:
        def yn(x: bool | None) -> str:
            return "?" if x is None else ("Yes" if x else "No")

        header = ("Graph", "SPP?", "SNSPP?", "G+K1 weakly SPP?", "Expected", "Match")
        lines = [header]
        for r in self.rows:
            exp = "-" if r.expected is None else f"{yn(r.expected['spp'])}/{yn(r.expected['snspp'])}"
            ws = "-" if r.spp else yn(r.weakly_separating_with_k1)
            match = "-" if r.matches is None else ("ok" if r.matches else "MISMATCH")
            lines.append((r.name, yn(r.spp), yn(r.snspp), ws, exp, match))
        widths = [max(len(row[i]) for row in lines) for i in range(len(header))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in lines) + "\n"


def table1_entries(catalog: Catalog | None = None) -> list[CatalogEntry]:
    catalog = catalog or Catalog()
    return [e for e in catalog.entries if "table1" in e.tags]


def table1_report(
    entries: Iterable[CatalogEntry], budget_factory: Callable[[], Budget] | None = None, workers: int = 1
) -> Report:
    """Separating / strongly nonseparating status of each entry.

    For entries that are not separating, the weakly separating status of the
    entry plus an isolated vertex is reported as well.  Each cell gets a
    fresh budget; a cell that runs out is reported as unknown with a note.
    """
    from .props import is_separating_graph, is_strongly_nonseparating, is_weakly_separating

    budget_factory = budget_factory or Budget
    expected = expected_rows()
    rows = []
    for entry in entries:
        row = ReportRow(entry.name, entry.family, None, None, expected=expected.get(entry.name))
        spp = is_separating_graph(entry.graph, budget=budget_factory(), workers=workers)
        snspp = is_strongly_nonseparating(entry.graph, budget=budget_factory(), workers=workers)
        row.spp, row.snspp = spp.value, snspp.value
        for label, v in (("spp", spp), ("snspp", snspp)):
            if v.value is None:
                row.notes.append(f"{label}: {v.note}")
        if spp.value is False:
            ws = is_weakly_separating(disjoint_union(entry.graph, empty_graph(1)), budget=budget_factory(),
                                      workers=workers)
            row.weakly_separating_with_k1 = ws.value
            if ws.value is None:
                row.notes.append(f"weakly separating with K1: {ws.note}")
        rows.append(row)
    return Report(rows)
