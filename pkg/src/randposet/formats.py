"""Text serializations of DAGs and posets.

Edge list: first line ``n``, then one ``i j`` pair per line, 0-based.
JSON: ``{"n": int, "relation": [[i, j], ...], "covers": [[i, j], ...]}``
with the full strict order in ``relation``. DOT: the Hasse diagram.
"""
from __future__ import annotations

import json

from .graph import Dag, PosetKey, hasse_edges, poset_key

FORMATS = ("edge-list", "json", "dot-hasse")


def dag_to_edge_list(g: Dag) -> str:
    return "\n".join([str(g.n)] + [f"{i} {j}" for i, j in g.edges()]) + "\n"


def parse_edge_list(text: str) -> Dag:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Dag.from_edges(n, edges)


def poset_to_edge_list(p: PosetKey) -> str:
    return dag_to_edge_list(p.as_dag())


def poset_to_json(p: PosetKey, covers: bool = True) -> str:
    obj = {"n": p.n, "relation": [list(e) for e in p.pairs()]}
    if covers:
        obj["covers"] = [list(e) for e in hasse_edges(p)]
    return json.dumps(obj, separators=(",", ":"))


def parse_json(text: str) -> PosetKey:
    obj = json.loads(text)
    g = Dag.from_edges(obj["n"], [tuple(e) for e in obj["relation"]])
    key = poset_key(g)
    if key.rows != g.rows:
        raise ValueError("relation is not transitively closed")
    return key


def poset_to_dot(p: PosetKey, name: str = "poset") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(p.n)]
    lines += [f"  {a} -> {b};" for a, b in hasse_edges(p)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> PosetKey:
    """Read back the output of :func:`poset_to_dot`; the poset is the closure of the covers."""
    vertices, edges = set(), []
    for ln in text.splitlines():
        ln = ln.strip().rstrip(";")
        if "->" in ln:
            a, b = (int(s) for s in ln.split("->"))
            edges.append((a, b))
        elif ln.isdigit():
            vertices.add(int(ln))
    n = max(vertices) + 1 if vertices else 0
    return poset_key(Dag.from_edges(n, edges))


def format_poset(p: PosetKey, fmt: str) -> str:
    if fmt == "edge-list":
        return poset_to_edge_list(p)
    if fmt == "json":
        return poset_to_json(p) + "\n"
    if fmt == "dot-hasse":
        return poset_to_dot(p)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_stream(text: str, fmt: str) -> list[PosetKey]:
    """Split a multi-record CLI output stream back into posets."""
    if fmt == "json":
        return [parse_json(ln) for ln in text.splitlines() if ln.strip()]
    if fmt == "edge-list":
        blocks = [b for b in text.split("\n\n") if b.strip()]
        return [poset_key(parse_edge_list(b)) for b in blocks]
    if fmt == "dot-hasse":
        blocks = [b for b in text.split("}\n") if b.strip()]
        return [parse_dot(b) for b in blocks]
    raise ValueError(f"unknown format {fmt!r}")
