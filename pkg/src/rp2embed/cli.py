"""Command-line front end.

Exit codes: 0 when the answer is yes, 1 when it is no, 2 for bad input or
an unmet precondition, 3 when the work budget ran out first.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .catalog import Catalog, CatalogError, table1_entries, table1_report
from .config import DEFAULT_MAX_SCHEMES, BudgetExceeded, RunConfig
from .graph import Cycle, Graph, GraphError, is_connected, is_isomorphic, one_step_minors, parse_graph
from .links import (
    ClassifiedLink,
    LinkClass,
    LinkError,
    TypeIILink,
    TypeILink,
    classify_type1,
    classify_type2,
    has_nonsplit_type1,
    has_nonsplit_type2,
)
from .props import PROPERTY_IDS, check_property, is_minor_minimal
from .rp2 import (
    EmbeddingError,
    NotEmbeddableError,
    Rp2Embedding,
    all_pairs_share_face,
    embedding_from_json,
    embedding_to_json,
    enumerate_rp2_embeddings,
    find_separating_zero_cycle,
    has_face_with_all_vertices,
    is_closed_cell,
    validate,
)
from .scheme import SchemeError, Surface, enumerate_schemes, equivalence_class_count
from .verdict import INCONCLUSIVE, PreconditionError, PropertyVerdict

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
REPORT_FORMAT = "rp2embed-report/1"


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


@dataclass
class Outcome:
    code: int
    report: dict[str, Any]
    text: str


# ----------------------------------------------------------------------------
# graph sources

def load_source(source: str, config: RunConfig) -> tuple[Graph, str]:
    """Resolve ``catalog:NAME`` or a graph file path to a graph."""
    if source.startswith("catalog:"):
        try:
            catalog = Catalog.with_external(config.external_catalogs)
            g = catalog.get(source[len("catalog:"):]).graph
        except CatalogError as exc:
            raise InputError(str(exc)) from None
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror or exc}") from None
        try:
            g = parse_graph(text)
        except GraphError as exc:
            raise InputError(f"{source}: {exc}") from None
    if g.vertex_count > config.max_vertices or g.edge_count > config.max_edges:
        raise InputError(
            f"graph has {g.vertex_count} vertices and {g.edge_count} edges; "
            f"limits are {config.max_vertices} and {config.max_edges}"
        )
    return g, source


def _graph_json(g: Graph, source: str) -> dict[str, Any]:
    return {"source": source, "vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def _yes_no(value: bool | None) -> str:
    return "inconclusive" if value is None else ("yes" if value else "no")


def _verdict_code(value: bool | None) -> int:
    if value is None:
        return EXIT_BUDGET
    return EXIT_TRUE if value else EXIT_FALSE


def _check_property_id(pid: str) -> None:
    if pid not in PROPERTY_IDS:
        raise InputError(f"unknown property {pid!r}; known: {', '.join(PROPERTY_IDS)}")


# ----------------------------------------------------------------------------
# check

def _verdict_report(command: str, g: Graph, source: str, v: PropertyVerdict, witness: bool) -> dict[str, Any]:
    body = v.to_json()
    report: dict[str, Any] = {
        "format": REPORT_FORMAT,
        "command": command,
        "graph": _graph_json(g, source),
        "property": body["property"],
        "verdict": body["verdict"],
        "status": body["status"],
    }
    if "note" in body:
        report["note"] = body["note"]
    if witness:
        report["witness"] = body["witness"]
    return report


def cmd_check(args: argparse.Namespace, config: RunConfig) -> Outcome:
    if args.replay:
        return cmd_replay(args.replay, config)
    if args.source is None or args.property is None:
        raise InputError("check needs a graph source and --property (or --replay FILE)")
    _check_property_id(args.property)
    g, source = load_source(args.source, config)
    v = check_property(g, args.property, budget=config.new_budget(), workers=config.workers)
    report = _verdict_report("check", g, source, v, config.witness)
    text = f"{args.property}: {_yes_no(v.value)}"
    if v.note:
        text += f" ({v.note})"
    return Outcome(_verdict_code(v.value), report, text)


def cmd_minor_minimal(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _check_property_id(args.property)
    g, source = load_source(args.source, config)
    v = is_minor_minimal(g, args.property, budget=config.new_budget(), workers=config.workers)
    report = _verdict_report("minor-minimal", g, source, v, config.witness)
    text = f"minor-minimal for {args.property}: {_yes_no(v.value)}"
    if v.minor is not None:
        text += f"\nminor with the property: V {v.minor.vertex_count}, edges {list(v.minor.edges)}"
    return Outcome(_verdict_code(v.value), report, text)


# ----------------------------------------------------------------------------
# replay

def _no_separating_cycle(e: Rp2Embedding) -> bool:
    return find_separating_zero_cycle(e) is None


def _no_nonsplit_link(e: Rp2Embedding) -> bool:
    return has_nonsplit_type1(e) is None


def _has_outer_face(e: Rp2Embedding) -> bool:
    return has_face_with_all_vertices(e) is not None


def _embeds(e: Rp2Embedding) -> bool:
    return True


# (property, claimed verdict) -> surface of the witness and what it must show
_EMBEDDING_CLAIMS: dict[tuple[str, bool], tuple[Surface, Callable[[Rp2Embedding], bool]]] = {
    ("separating", False): (Surface.PROJECTIVE, _no_separating_cycle),
    ("nonseparating", True): (Surface.PROJECTIVE, _no_separating_cycle),
    ("strongly-nonseparating", True): (Surface.PROJECTIVE, all_pairs_share_face),
    ("weakly-separating", False): (Surface.PROJECTIVE, all_pairs_share_face),
    ("outer-projective-planar", True): (Surface.PROJECTIVE, _has_outer_face),
    ("nonplanar-and-nonouter-pp", False): (Surface.PROJECTIVE, _has_outer_face),
    ("outerplanar", True): (Surface.PLANE, _has_outer_face),
    ("closed-cell-all", False): (Surface.PROJECTIVE, lambda e: not is_closed_cell(e)),
    ("closed-nonseparating", False): (
        Surface.PROJECTIVE,
        lambda e: not is_closed_cell(e) and _no_separating_cycle(e),
    ),
    ("ippi3l", False): (Surface.PROJECTIVE, _no_nonsplit_link),
    ("ii3l-plane", False): (Surface.PLANE, _no_nonsplit_link),
    ("planar", True): (Surface.PLANE, _embeds),
    ("projective-planar", True): (Surface.PROJECTIVE, _embeds),
}


def _load_embedding(obj: Any, g: Graph) -> Rp2Embedding:
    if not isinstance(obj, dict):
        raise InputError("witness has no embedding")
    try:
        e = embedding_from_json(obj)
    except (EmbeddingError, GraphError, SchemeError) as exc:
        raise InputError(f"malformed embedding: {exc}") from None
    if e.graph != g:
        raise InputError("the witness embedding is of a different graph")
    return e


def _link_from_json(obj: dict[str, Any]) -> ClassifiedLink:
    try:
        cls = LinkClass(obj["class"])
        if obj["type"] == "I":
            a, b = obj["cycles"]
            link: TypeILink | TypeIILink = TypeILink(Cycle(tuple(a)), Cycle(tuple(b)), tuple(obj["points"]))
        else:
            (c,) = obj["cycles"]
            pa, pb = obj["pairs"]
            link = TypeIILink(Cycle(tuple(c)), tuple(pa), tuple(pb))
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        raise InputError(f"malformed link witness: {exc}") from None
    return ClassifiedLink(link, cls)


def cmd_replay(path: str, config: RunConfig) -> Outcome:
    """Re-validate the witness stored in a report and re-derive its claim."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not JSON: {exc}") from None
    if not isinstance(data, dict) or data.get("format") != REPORT_FORMAT:
        raise InputError(f"{path} is not a report written by this tool")
    try:
        gj = data["graph"]
        g = Graph(int(gj["vertices"]), tuple(tuple(x) for x in gj["edges"]))
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        raise InputError(f"malformed graph in report: {exc}") from None
    if "witness" not in data:
        raise InputError("the report carries no witness; rerun with --witness")
    witness = data["witness"]
    command = data.get("command")
    problems: list[str] = []
    checked: list[str] = []

    if command == "links":
        if witness is None:
            raise InputError("the report found no link, so there is nothing to replay")
        e = _load_embedding(witness.get("embedding"), g)
        errors = validate(e)
        problems += errors
        if not errors:
            checked.append("embedding validates")
        for key in ("type1", "type2"):
            if witness.get(key) is None:
                continue
            claimed = _link_from_json(witness[key])
            try:
                if isinstance(claimed.link, TypeILink):
                    actual = classify_type1(e, claimed.link)
                else:
                    actual = classify_type2(e, claimed.link)
            except LinkError as exc:
                problems.append(f"{key}: {exc}")
                continue
            checked.append(f"{key} link classifies as {actual.value}")
            if actual is not claimed.link_class:
                problems.append(f"{key}: claimed {claimed.link_class.value}, found {actual.value}")
    elif command in ("check", "minor-minimal"):
        pid = data.get("property", "")
        value = data.get("verdict")
        if witness is None:
            raise InputError(f"a {_yes_no(value)} verdict for {pid!r} comes with no witness to replay")
        if command == "minor-minimal":
            base = pid.split(":", 1)[-1]
            if value is not False or "minor" not in witness:
                raise InputError("only a 'no' minimality verdict carries a replayable minor")
            mj = witness["minor"]
            try:
                minor = Graph(int(mj["vertices"]), tuple(tuple(x) for x in mj["edges"]))
            except (KeyError, TypeError, ValueError, GraphError) as exc:
                raise InputError(f"malformed minor: {exc}") from None
            if not any(is_isomorphic(minor, h) for h in one_step_minors(g)):
                problems.append("the witness is not a one-step minor of the graph")
            checked.append("witness is a one-step minor")
            v = check_property(minor, base, budget=config.new_budget(), workers=config.workers)
            if v.value is None:
                return Outcome(EXIT_BUDGET, {"format": REPORT_FORMAT, "command": "replay", "status": INCONCLUSIVE,
                                             "note": v.note}, f"replay inconclusive: {v.note}")
            checked.append(f"minor has {base}: {_yes_no(v.value)}")
            if not v.value:
                problems.append(f"the minor does not have {base!r}")
        else:
            claim = _EMBEDDING_CLAIMS.get((pid, value))
            if claim is None or witness.get("embedding") is None:
                raise InputError(f"a {_yes_no(value)} verdict for {pid!r} has no embedding witness to replay")
            surface, holds = claim
            e = _load_embedding(witness["embedding"], g)
            errors = validate(e)
            problems += errors
            if not errors:
                checked.append("embedding validates")
            if e.surface is not surface:
                problems.append(f"witness lives in the {e.surface.value} surface, expected {surface.value}")
            elif not holds(e):
                problems.append(f"the embedding does not show {pid} = {_yes_no(value)}")
            else:
                checked.append(f"embedding shows {pid} = {_yes_no(value)}")
    else:
        raise InputError(f"cannot replay reports of command {command!r}")

    ok = not problems
    report = {
        "format": REPORT_FORMAT,
        "command": "replay",
        "replayed": command,
        "graph": _graph_json(g, gj.get("source", "")),
        "valid": ok,
        "checked": checked,
        "problems": problems,
    }
    text = "witness replays cleanly" if ok else "witness FAILED:\n  " + "\n  ".join(problems)
    return Outcome(EXIT_TRUE if ok else EXIT_FALSE, report, text)


# ----------------------------------------------------------------------------
# embeddings

def cmd_embeddings(args: argparse.Namespace, config: RunConfig) -> Outcome:
    g, source = load_source(args.source, config)
    surface = Surface(args.surface)
    budget = config.new_budget()
    report: dict[str, Any] = {
        "format": REPORT_FORMAT,
        "command": "embeddings",
        "graph": _graph_json(g, source),
        "surface": surface.value,
    }
    if args.classes:
        if g.vertex_count == 0 or not is_connected(g):
            raise InputError("--classes needs a connected graph")
        schemes = list(enumerate_schemes(g, surface, budget=budget, workers=config.workers))
        classes = equivalence_class_count(g, surface, budget=budget, workers=config.workers)
        report.update(mode="classes", schemes=len(schemes), classes=classes)
        return Outcome(EXIT_TRUE, report, str(classes))
    try:
        stream = list(enumerate_rp2_embeddings(g, surface=surface, budget=budget, workers=config.workers))
    except NotEmbeddableError:
        stream = []
    if args.list:
        report.update(mode="list", count=len(stream), embeddings=[embedding_to_json(e) for e in stream])
        text = "\n".join(json.dumps(embedding_to_json(e), sort_keys=True) for e in stream)
        return Outcome(EXIT_TRUE, report, text)
    report.update(mode="count", count=len(stream))
    if surface is Surface.PROJECTIVE:
        report["closed_cell"] = sum(1 for e in stream if is_closed_cell(e))
    return Outcome(EXIT_TRUE, report, str(len(stream)))


# ----------------------------------------------------------------------------
# links

def cmd_links(args: argparse.Namespace, config: RunConfig) -> Outcome:
    """Look for nonsplit links in one embedding, chosen by its stream index."""
    g, source = load_source(args.source, config)
    surface = Surface(args.surface)
    if args.index < 0:
        raise InputError("--index must be nonnegative")
    chosen = None
    count = 0
    for i, e in enumerate(enumerate_rp2_embeddings(g, surface=surface, budget=config.new_budget(),
                                                   workers=config.workers)):
        count = i + 1
        if i == args.index:
            chosen = e
            break
    if chosen is None:
        raise InputError(f"the graph has only {count} embeddings in the {surface.value} surface")
    type1 = has_nonsplit_type1(chosen)
    type2 = has_nonsplit_type2(chosen)
    report: dict[str, Any] = {
        "format": REPORT_FORMAT,
        "command": "links",
        "graph": _graph_json(g, source),
        "surface": surface.value,
        "index": args.index,
        "nonsplit_type1": None if type1 is None else type1.link_class.value,
        "nonsplit_type2": None if type2 is None else type2.link_class.value,
    }
    if config.witness:
        if type1 is None and type2 is None:
            report["witness"] = None
        else:
            report["witness"] = {
                "embedding": embedding_to_json(chosen),
                "type1": None if type1 is None else type1.to_json(),
                "type2": None if type2 is None else type2.to_json(),
            }
    lines = [f"embedding #{args.index}"]
    for label, link in (("type I", type1), ("type II", type2)):
        if link is None:
            lines.append(f"{label}: every link splits")
        else:
            lines.append(f"{label}: {link.link_class.value} {json.dumps(link.to_json(), sort_keys=True)}")
    return Outcome(EXIT_TRUE if type1 is not None else EXIT_FALSE, report, "\n".join(lines))


# ----------------------------------------------------------------------------
# table1 and catalog

def cmd_table1(args: argparse.Namespace, config: RunConfig) -> Outcome:
    catalog = Catalog.with_external(config.external_catalogs)
    rep = table1_report(table1_entries(catalog), budget_factory=config.new_budget, workers=config.workers)
    rows = rep.to_json()
    inconclusive = any(r.spp is None or r.snspp is None for r in rep.rows)
    code = EXIT_BUDGET if inconclusive else (EXIT_TRUE if rep.all_match else EXIT_FALSE)
    report = {"format": REPORT_FORMAT, "command": "table1", "rows": rows, "all_match": rep.all_match}
    return Outcome(code, report, rep.to_text().rstrip("\n"))


def cmd_catalog(args: argparse.Namespace, config: RunConfig) -> Outcome:
    try:
        catalog = Catalog.with_external(config.external_catalogs)
    except CatalogError as exc:
        raise InputError(str(exc)) from None
    if args.action == "list":
        entries = [
            {"name": e.name, "family": e.family, "provenance": e.provenance, "vertices": e.graph.vertex_count,
             "edges": e.graph.edge_count, "tags": list(e.tags)}
            for e in catalog.entries
        ]
        text = "\n".join(f"{x['name']:<28} V={x['vertices']:<3} E={x['edges']:<3} {x['provenance']}" for x in entries)
        return Outcome(EXIT_TRUE, {"format": REPORT_FORMAT, "command": "catalog list", "entries": entries}, text)
    if not args.name:
        raise InputError("catalog show needs a name")
    try:
        entry = catalog.get(args.name)
    except CatalogError as exc:
        raise InputError(str(exc)) from None
    body = entry.to_json()
    body.update(family=entry.family, provenance=entry.provenance)
    text = f"# {entry.name} ({entry.family}, {entry.provenance})\nV {entry.graph.vertex_count}\n" + "\n".join(
        f"E {u} {v}" for u, v in entry.graph.edges
    )
    return Outcome(EXIT_TRUE, {"format": REPORT_FORMAT, "command": "catalog show", "entry": body}, text)


# ----------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json", help="output format (default json)")
    common.add_argument("--witness", action="store_true", help="include witnesses in the report")
    common.add_argument("--max-schemes", type=int, default=DEFAULT_MAX_SCHEMES,
                        help="work budget: schemes plus arrangements examined per command")
    common.add_argument("--workers", type=int, default=1, help="processes used for scheme enumeration")
    common.add_argument("--external-catalog", action="append", default=[], metavar="FILE",
                        help="JSON catalog file adding named graphs (repeatable)")
    common.add_argument("--max-vertices", type=int, default=16, help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="rp2embed", description="Projective-plane embeddings of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide a property of a graph")
    p.add_argument("source", nargs="?", help="catalog:NAME or a graph file")
    p.add_argument("--property", help=f"one of: {', '.join(PROPERTY_IDS)}")
    p.add_argument("--replay", metavar="REPORT", help="re-validate the witness in a saved JSON report")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("embeddings", parents=[common], help="count, classify or list embeddings")
    p.add_argument("source")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true", help="number of embeddings")
    mode.add_argument("--classes", action="store_true", help="number of scheme classes (connected graphs)")
    mode.add_argument("--list", action="store_true", help="every embedding as JSON")
    p.add_argument("--surface", choices=[s.value for s in Surface], default=Surface.PROJECTIVE.value)
    p.set_defaults(handler=cmd_embeddings)

    p = sub.add_parser("links", parents=[common], help="nonsplit links in one embedding")
    p.add_argument("source")
    p.add_argument("--index", type=int, default=0, help="position of the embedding in the stream (default 0)")
    p.add_argument("--surface", choices=[s.value for s in Surface], default=Surface.PROJECTIVE.value)
    p.set_defaults(handler=cmd_links)

    p = sub.add_parser("minor-minimal", parents=[common], help="decide minor-minimality for a property")
    p.add_argument("source")
    p.add_argument("--property", required=True)
    p.set_defaults(handler=cmd_minor_minimal)

    p = sub.add_parser("table1", parents=[common], help="classification report for the tagged catalog graphs")
    p.set_defaults(handler=cmd_table1)

    p = sub.add_parser("catalog", parents=[common], help="list or show named graphs")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.set_defaults(handler=cmd_catalog)
    return parser


def _emit(outcome: Outcome, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(outcome.report, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(outcome.text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            max_vertices=args.max_vertices,
            max_schemes=args.max_schemes,
            workers=args.workers,
            output_format=args.format,
            external_catalogs=tuple(args.external_catalog),
            witness=args.witness,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        outcome = args.handler(args, config)
    except (InputError, PreconditionError, CatalogError, NotEmbeddableError, LinkError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        outcome = Outcome(EXIT_BUDGET, {"format": REPORT_FORMAT, "command": args.command, "status": INCONCLUSIVE,
                                        "note": str(exc)}, f"inconclusive: {exc}")
    _emit(outcome, config.output_format)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
