"""Graph file format, generators, and JSON result documents.

The ``.g`` format is a line-oriented edge list:

    c free-text comment
    p <n> <m>
    s <side spec>          optional; marks the X side of a bipartite graph
    l <id> <label>         optional; per-vertex string labels
    <u> <v>                exactly m edge lines

The side spec is either a list of ids (comma or space separated) or a single
0/1 string of length n whose i-th character puts vertex i on the X side.
Serialization writes sets sorted ascending and families in canonical order,
so equal inputs produce byte-identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .bipartite import BipartiteGraph
from .graph import Graph, VertexSet


@dataclass
class GraphDocument:
    """A parsed graph plus its side metadata."""

    graph: Graph
    labels: dict[int, str] = field(default_factory=dict)
    x_side: Optional[VertexSet] = None

    def bipartite(self) -> BipartiteGraph:
        if self.x_side is None:
            raise ValueError("document has no side line; not a bipartite input")
        return BipartiteGraph(self.graph, self.x_side)


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_side(tok: str, n: int, line_no: int) -> VertexSet:
    stripped = tok.replace(",", " ").split()
    if len(stripped) == 1 and len(stripped[0]) == n and set(stripped[0]) <= {"0", "1"} and n > 1:
        bits = 0
        for i, ch in enumerate(stripped[0]):
            if ch == "1":
                bits |= 1 << i
        return VertexSet(n, bits)
    try:
        ids = [int(t) for t in stripped]
    except ValueError as exc:
        raise ParseError(line_no, f"bad side spec: {exc}") from None
    for v in ids:
        if not 0 <= v < n:
            raise ParseError(line_no, f"side vertex {v} out of range 0..{n - 1}")
    return VertexSet.from_ids(n, ids)


def parse_graph(text: str) -> GraphDocument:
    n = m = None
    x_side: Optional[VertexSet] = None
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    seen_edges: dict[tuple[int, int], int] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        head, *rest = line.split()
        if head == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate header")
            if len(rest) != 2:
                raise ParseError(line_no, "header must be 'p <n> <m>'")
            try:
                n, m = int(rest[0]), int(rest[1])
            except ValueError:
                raise ParseError(line_no, "header must be 'p <n> <m>'") from None
            if n < 0 or m < 0:
                raise ParseError(line_no, "header counts must be non-negative")
            continue
        if n is None:
            raise ParseError(line_no, "content before 'p' header")
        if head == "s":
            if x_side is not None:
                raise ParseError(line_no, "duplicate side line")
            x_side = _parse_side(" ".join(rest), n, line_no)
            continue
        if head == "l":
            if len(rest) != 2:
                raise ParseError(line_no, "label line must be 'l <id> <label>'")
            try:
                v = int(rest[0])
            except ValueError:
                raise ParseError(line_no, "label line must be 'l <id> <label>'") from None
            if not 0 <= v < n:
                raise ParseError(line_no, f"label vertex {v} out of range")
            labels[v] = rest[1]
            continue
        if len(rest) != 1:
            raise ParseError(line_no, f"expected an edge line, got {line!r}")
        try:
            u, v = int(head), int(rest[0])
        except ValueError:
            raise ParseError(line_no, f"expected an edge line, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"edge ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise ParseError(line_no, f"loop edge at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            raise ParseError(
                line_no, f"duplicate edge ({u}, {v}), first seen on line {seen_edges[key]}"
            )
        if x_side is not None and ((u in x_side) == (v in x_side)):
            raise ParseError(line_no, f"edge ({u}, {v}) does not cross the bipartition")
        seen_edges[key] = line_no
        edges.append((u, v))

    if n is None:
        raise ParseError(1, "missing 'p <n> <m>' header")
    if m != len(edges):
        raise ParseError(1, f"header announces {m} edges, body has {len(edges)}")
    return GraphDocument(Graph(n, edges), labels, x_side)


def serialize_graph(doc: GraphDocument) -> str:
    g = doc.graph
    lines = [f"p {g.n} {g.m}"]
    if doc.x_side is not None:
        lines.append("s " + ",".join(map(str, doc.x_side)))
    for v in sorted(doc.labels):
        lines.append(f"l {v} {doc.labels[v]}")
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators


def gen_random(n: int, edge_probability: float, seed: int = 0) -> Graph:
    """Uniform random graph: each pair drawn independently, fixed pair order
    so a seed always reproduces the same edge set."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_probability
    ]
    return Graph(n, edges)


PMG4_SEEDS: dict[str, tuple[tuple[int, int], ...]] = {
    "p4": ((0, 1), (1, 2), (2, 3)),
    "c4": ((0, 1), (1, 2), (2, 3), (0, 3)),
    "k4": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
    "k13": ((0, 1), (0, 2), (0, 3)),
    "paw": ((0, 1), (0, 2), (1, 2), (2, 3)),
    "diamond": ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3)),
}
# The six connected graphs on four vertices; a custom list may be supplied
# when a different seed pool is wanted.


def gen_pmg4(
    depth: int, seed: int = 0, seed_graphs: Optional[list[str]] = None
) -> Graph:
    """Grow a graph by repeatedly joining equal halves with a perfect matching.

    Depth 0 picks one of the order-4 seed graphs; depth d joins two
    independently generated depth-(d-1) graphs by a uniformly random perfect
    matching, so the result has ``4 * 2**depth`` vertices.  Every matching
    step leaves the two halves mutually 1-non-connected.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    names = list(seed_graphs) if seed_graphs else sorted(PMG4_SEEDS)
    for name in names:
        if name not in PMG4_SEEDS:
            raise ValueError(f"unknown seed graph {name!r}; pick from {sorted(PMG4_SEEDS)}")
    rng = random.Random(seed)

    def build(d: int) -> Graph:
        if d == 0:
            return Graph(4, PMG4_SEEDS[names[rng.randrange(len(names))]])
        left = build(d - 1)
        right = build(d - 1)
        k = left.n
        edges = list(left.edges)
        edges += [(u + k, v + k) for u, v in right.edges]
        perm = list(range(k))
        rng.shuffle(perm)
        edges += [(i, k + perm[i]) for i in range(k)]
        return Graph(2 * k, edges)

    return build(depth)


# ---------------------------------------------------------------------------
# result documents

SCHEMA_VERSION = 1


def set_payload(s: VertexSet, labels: Optional[dict[int, str]] = None) -> list:
    name = (lambda v: labels[v]) if labels else (lambda v: v)
    return [name(v) for v in s]


def family_payload(members, labels: Optional[dict[int, str]] = None) -> list:
    return [set_payload(m, labels) for m in members]


def result_document(
    command: str,
    payload,
    *,
    alpha: Optional[int] = None,
    beta: Optional[int] = None,
    algorithm: Optional[str] = None,
    strategy: Optional[str] = None,
    seed: Optional[int] = None,
    wall_ms: Optional[float] = None,
) -> dict:
    """Assemble the versioned JSON result body.

    Wall time is only included when measured and requested, keeping default
    output byte-stable for equal inputs.
    """
    meta: dict = {"alpha": alpha, "beta": beta}
    if algorithm is not None:
        meta["algorithm"] = algorithm
    if strategy is not None:
        meta["strategy"] = strategy
    if seed is not None:
        meta["seed"] = seed
    if wall_ms is not None:
        meta["wall_ms"] = round(wall_ms, 3)
    return {"schema": SCHEMA_VERSION, "command": command, "meta": meta, "result": payload}
