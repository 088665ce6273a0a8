"""Tabulated prime graphs for groups without a closed-form construction here.

Each entry carries a nonempty source citation; the loader rejects entries
without one, and reports schema problems with the entry index and name.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .graphs import PrimeGraph, make_graph


class TabulatedDataError(ValueError):
    """Malformed tabulated-graph data."""


@dataclass(frozen=True)
class TabulatedGraph:
    """A prime graph transcribed from published tables, with its source."""

    name: str
    graph: PrimeGraph
    source: str


def _parse_entry(idx: int, entry) -> TabulatedGraph:
    where = f"graphs[{idx}]"
    if not isinstance(entry, dict):
        raise TabulatedDataError(f"{where}: expected an object")
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise TabulatedDataError(f"{where}: missing group name")
    where = f"{where} ({name!r})"
    source = entry.get("source")
    if not isinstance(source, str) or not source.strip():
        raise TabulatedDataError(f"{where}: entries must cite a source")
    vertices = entry.get("vertices")
    edges = entry.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, int) for v in vertices):
        raise TabulatedDataError(f"{where}: vertices must be a list of integers")
    if not isinstance(edges, list):
        raise TabulatedDataError(f"{where}: edges must be a list of pairs")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise TabulatedDataError(f"{where}: bad edge {e!r}")
        pairs.append((e[0], e[1]))
    try:
        graph = make_graph(name, vertices, pairs)
    except ValueError as exc:
        raise TabulatedDataError(f"{where}: {exc}") from exc
    return TabulatedGraph(name, graph, source.strip())


def load_tabulated(path: str | Path) -> list[TabulatedGraph]:
    """Load a tabulated-graph JSON file: {"graphs": [{name, vertices, edges, source}]}."""
    text = Path(path).read_text()
    return parse_tabulated(text)


def parse_tabulated(text: str) -> list[TabulatedGraph]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TabulatedDataError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("graphs"), list):
        raise TabulatedDataError('top level must be {"graphs": [...]}')
    return [_parse_entry(i, entry) for i, entry in enumerate(doc["graphs"])]


@lru_cache(maxsize=1)
def shipped_tabulated() -> dict[str, TabulatedGraph]:
    """The data set shipped with the package, keyed by group token."""
    text = resources.files("gkgraph").joinpath("data/tabulated_graphs.json").read_text()
    return {t.name: t for t in parse_tabulated(text)}


def shipped_graph(name: str) -> PrimeGraph | None:
    got = shipped_tabulated().get(name)
    return got.graph if got else None
