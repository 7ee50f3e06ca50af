"""Small named graphs used across the test suite and handy from the CLI.

Lettered vertices map to ids alphabetically: a=0, b=1, and so on.
"""

from __future__ import annotations

from .graph import Graph, VertexSet, induced


def ids(letters: str) -> tuple[int, ...]:
    """'b,d' or 'bd' -> (1, 3)."""
    return tuple(ord(c) - ord("a") for c in letters.replace(",", "").replace(" ", ""))


def _edges(spec: str) -> list[tuple[int, int]]:
    return [tuple(ids(pair)) for pair in spec.split()]


def letter_labels(n: int) -> dict[int, str]:
    return {i: chr(ord("a") + i) for i in range(n)}


def nested_modules_graph() -> Graph:
    """8 vertices a..h; classical decomposition mixes prime, series, parallel.

    {b,d} and {f,g} are false-twin pairs, {b,c,d} is the larger module around
    the first pair.
    """
    return Graph(8, _edges("ab ac ad bc cd be ce de ef eg fh gh"))


def window_module_graph() -> Graph:
    """7 vertices a..g; {d,e,f} needs one tolerated error on each side:
    it is a module for budgets (1,1) but not (0,0), (1,0) or (0,1)."""
    return Graph(7, _edges("ab bc ad bd ae be ce eg af bf cf"))


def matched_quads_graph() -> Graph:
    """8 vertices a..h: two induced paths a-b-c-d and e-f-g-h joined by all
    but a perfect matching, so each vertex misses exactly one cross edge
    (a-h, b-g, c-f) except d and e which miss none."""
    return Graph(8, _edges("ab bc cd ef fg gh ae be ce de af bf df ag cg dg bh ch dh"))


def bull_graph() -> Graph:
    """Triangle a,b,c with pendants d-a and e-b."""
    return Graph(5, _edges("ab ac bc ad be"))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """Centre is vertex 0."""
    return Graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def induced_path_check(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Whether the vertices, in the given order, induce a chordless path."""
    sub, relabel = induced(g, VertexSet.from_ids(g.n, vertices))
    want = {
        tuple(sorted((relabel[u], relabel[v])))
        for u, v in zip(vertices, vertices[1:])
    }
    return set(sub.edges) == want
