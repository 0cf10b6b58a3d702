"""JSON formats for matroids, graphs, lattice-path specs and results."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import BadParams, MatroidError
from .families import LatticePathSpec, SimpleGraph
from .matroid import Matroid, bits, from_bases


class FormatError(ValueError):
    """Malformed input document; ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _label(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(where, f"labels must be strings or integers, got {x!r}")
    return x


def matroid_to_json(M: Matroid) -> dict:
    out = {}
    if M.name:
        out["name"] = M.name
    out["ground_set"] = list(M.labels)
    out["bases"] = [[M.labels[i] for i in bits(b)] for b in M.bases]
    return out


def matroid_from_json(doc) -> Matroid:
    if not isinstance(doc, dict):
        raise FormatError("$", "expected an object")
    for key in ("ground_set", "bases"):
        if key not in doc:
            raise FormatError(f"$.{key}", "missing")
    ground = doc["ground_set"]
    if not isinstance(ground, list):
        raise FormatError("$.ground_set", "expected a list")
    labels = [_label(x, f"$.ground_set[{i}]") for i, x in enumerate(ground)]
    bases = doc["bases"]
    if not isinstance(bases, list):
        raise FormatError("$.bases", "expected a list")
    for i, b in enumerate(bases):
        if not isinstance(b, list):
            raise FormatError(f"$.bases[{i}]", "expected a list")
        for j, x in enumerate(b):
            _label(x, f"$.bases[{i}][{j}]")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("$.name", "expected a string")
    try:
        return from_bases(labels, bases, name=name)
    except MatroidError as exc:
        raise FormatError("$.bases", str(exc)) from exc


def graph_to_json(G: SimpleGraph) -> dict:
    if G.vertex_labels is None:
        out = {"vertices": G.vertex_count, "edges": [list(e) for e in G.edges]}
    else:
        vl = G.vertex_labels
        out = {"vertices": list(vl), "edges": [[vl[u], vl[v]] for u, v in G.edges]}
    if G.edge_labels is not None:
        out["edge_labels"] = list(G.edge_labels)
    return out


def graph_from_json(doc) -> SimpleGraph:
    if not isinstance(doc, dict):
        raise FormatError("$", "expected an object")
    if "vertices" not in doc:
        raise FormatError("$.vertices", "missing")
    if "edges" not in doc:
        raise FormatError("$.edges", "missing")
    verts = doc["vertices"]
    labels = None
    if isinstance(verts, int) and not isinstance(verts, bool):
        count = verts
        if count < 0:
            raise FormatError("$.vertices", "must be nonnegative")
    elif isinstance(verts, list):
        labels = [_label(x, f"$.vertices[{i}]") for i, x in enumerate(verts)]
        count = len(labels)
    else:
        raise FormatError("$.vertices", "expected a count or a list of labels")
    pos = {x: i for i, x in enumerate(labels)} if labels is not None else None
    edges = []
    if not isinstance(doc["edges"], list):
        raise FormatError("$.edges", "expected a list")
    for i, e in enumerate(doc["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"$.edges[{i}]", "expected a pair")
        if pos is not None:
            try:
                edges.append((pos[e[0]], pos[e[1]]))
            except (KeyError, TypeError):
                raise FormatError(f"$.edges[{i}]", f"unknown vertex in {e!r}") from None
        else:
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                raise FormatError(f"$.edges[{i}]", "expected vertex indices")
            edges.append((e[0], e[1]))
    try:
        return SimpleGraph(count, tuple(edges), doc.get("edge_labels"), tuple(labels) if labels else None)
    except BadParams as exc:
        raise FormatError("$.edges", str(exc)) from exc


def path_spec_from_json(doc) -> LatticePathSpec:
    if not isinstance(doc, dict) or "upper" not in doc or "lower" not in doc:
        raise FormatError("$", "expected {\"upper\": ..., \"lower\": ...}")
    try:
        return LatticePathSpec(str(doc["upper"]), str(doc["lower"]))
    except BadParams as exc:
        raise FormatError("$", str(exc)) from exc


def is_matroid_doc(doc) -> bool:
    return isinstance(doc, dict) and "bases" in doc


def dumps(doc) -> str:
    """Stable JSON text with a trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def read_json(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def write_text(path, text: str):
    Path(path).write_text(text, encoding="utf-8")
