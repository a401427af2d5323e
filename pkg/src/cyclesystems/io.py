"""Readers and writers for graphs, matroids and cycle systems."""

from __future__ import annotations

import json
import re
from pathlib import Path

import networkx as nx

from .cycle_system import CycleSystem
from .matroid import CircuitMatroid, GraphicMatroid, Matroid, MultiGraph, UniformMatroid, edge_name


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def parse_edge_list(text: str) -> MultiGraph:
    """Lines ``label u v``; ``#`` starts a comment.  Loops and parallels allowed."""
    triples = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'label u v', got {len(parts)} fields", lineno, 1)
        label, u, v = parts
        for tok in (u, v):
            if not re.fullmatch(r"\d+", tok):
                raise ParseError(f"vertex {tok!r} is not a non-negative integer", lineno, raw.find(tok) + 1)
        u, v = int(u), int(v)
        triples.append((u, v, label))
        n = max(n, u + 1, v + 1)
    if len({t[2] for t in triples}) != len(triples):
        raise ParseError("edge labels must be distinct")
    return MultiGraph(n, tuple(triples))


def format_edge_list(graph: MultiGraph) -> str:
    return "".join(f"{label} {u} {v}\n" for u, v, label in graph.edges)


def parse_graph6(line: str) -> MultiGraph:
    """One graph6 string; edges are labelled ``uv`` as in :func:`edge_name`."""
    token = line.strip()
    if token.startswith(">>graph6<<"):
        token = token[len(">>graph6<<") :]
    try:
        g = nx.from_graph6_bytes(token.encode("ascii"))
    except Exception as exc:  # networkx raises several types here
        raise ParseError(f"bad graph6 string {token!r}: {exc}") from exc
    pairs = sorted(tuple(sorted(e)) for e in g.edges())
    return MultiGraph.from_pairs(pairs, n_vertices=g.number_of_nodes())


def to_graph6(graph: MultiGraph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n_vertices))
    for u, v, _ in graph.edges:
        if u == v or g.has_edge(u, v):
            raise ValueError("graph6 cannot encode loops or parallel edges")
        g.add_edge(u, v)
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def load_matroid(spec: str) -> Matroid:
    """Load from ``uniform:M:N``, ``graph6:STRING``, a ``.json`` circuit file,
    a ``.g6`` file (first line) or an edge-list file."""
    if spec.startswith("uniform:"):
        try:
            _, m, n = spec.split(":")
            return UniformMatroid(int(m), int(n))
        except ValueError as exc:
            raise ParseError(f"bad uniform spec {spec!r}; expected uniform:M:N") from exc
    if spec.startswith("graph6:"):
        return GraphicMatroid(parse_graph6(spec[len("graph6:") :]))
    path = Path(spec)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        if "matroid" in data:
            data = data["matroid"]
        try:
            return CircuitMatroid.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad circuit JSON: {exc}") from exc
    if path.suffix == ".g6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return GraphicMatroid(parse_graph6(first))
    return GraphicMatroid(parse_edge_list(text))


def load_cycle_system(m: Matroid, path: str, check: bool = True) -> CycleSystem:
    """JSON ``{"cycles": [[labels], ...]}``; labels are matched as strings when needed."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    cycles = data["cycles"] if isinstance(data, dict) else data
    by_str = {str(lab): lab for lab in m.labels}
    sets = [[lab if lab in m.index else by_str.get(str(lab), lab) for lab in c] for c in cycles]
    return CycleSystem.from_sets(m, sets, check=check)


def read_graph6_file(path: str):
    """Yield ``(line_number, graph6 string, MultiGraph or ParseError)``."""
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        token = raw.strip()
        if not token or token.startswith("#"):
            continue
        try:
            yield lineno, token, parse_graph6(token)
        except ParseError as exc:
            yield lineno, token, exc


__all__ = [
    "ParseError",
    "edge_name",
    "format_edge_list",
    "load_cycle_system",
    "load_matroid",
    "parse_edge_list",
    "parse_graph6",
    "read_graph6_file",
    "to_graph6",
]
