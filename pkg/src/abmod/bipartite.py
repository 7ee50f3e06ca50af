"""One-sided modules of bipartite graphs.

For a bipartite graph with sides X and Y, the modules contained in X are
governed by the tuples of ``alpha + beta + 1`` X-vertices: each tuple splits Y
exactly into alpha-neighbours and beta-non-neighbours, tuples with identical
splits form twin classes, and no module can mix tuples from two classes.  A
subset of X of at least tuple size is a module precisely when, for every y,
the vertices of the set on y's minority side stay within the budget (misses
at most alpha for class-adjacent y, hits at most beta otherwise).  Maximal
members are enumerated per class from the class support downwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import kernels, limits
from .abmodule import is_ab_module
from .graph import AbParams, Graph, VertexSet


class BipartiteGraph:
    """A graph with a designated bipartition; every edge must cross it."""

    __slots__ = ("underlying", "x_side", "y_side")

    def __init__(self, underlying: Graph, x_side: VertexSet):
        if x_side.n != underlying.n:
            raise ValueError("side set does not match graph")
        y_side = x_side.complement()
        for u, v in underlying.edges:
            if (u in x_side) == (v in x_side):
                raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")
        self.underlying = underlying
        self.x_side = x_side
        self.y_side = y_side

    @classmethod
    def from_graph(cls, g: Graph) -> "BipartiteGraph":
        """Two-colour a connected graph, lowest id on the X side."""
        if g.n == 0:
            return cls(g, VertexSet(0))
        colour = [-1] * g.n
        colour[0] = 0
        stack = [0]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    raise ValueError("graph is not bipartite (odd cycle)")
        if any(c == -1 for c in colour):
            raise ValueError(
                "automatic bipartition needs a connected graph; pass sides explicitly"
            )
        x = VertexSet.from_ids(g.n, [v for v in range(g.n) if colour[v] == 0])
        return cls(g, x)

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(|X|={len(self.x_side)}, |Y|={len(self.y_side)}, "
            f"m={self.underlying.m})"
        )


@dataclass(frozen=True)
class TwinClassification:
    """Tuple rows, twin classes, and per-(y, tuple) error labels.

    ``tuples`` lists all X-subsets of size ``alpha + beta + 1`` in ascending
    lexicographic order.  ``rows[i]`` is the bitmask of Y-vertices that are
    alpha-adjacent to tuple ``i`` (the incidence relation of the auxiliary
    tuple-to-Y graph); classes group tuples with identical rows.  ``lam`` maps
    ``(y, i)`` to the members of tuple ``i`` on y's minority side: the at most
    alpha misses when y is adjacent in the row sense, else the at most beta
    hits.
    """

    tuples: tuple[VertexSet, ...]
    rows: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    lam: dict[tuple[int, int], tuple[int, ...]]


def twin_classify(bg: BipartiteGraph, p: AbParams) -> TwinClassification:
    g = bg.underlying
    x_ids = bg.x_side.ids()
    k = p.trivial_cap
    if len(x_ids) < k:
        raise ValueError(f"X side has {len(x_ids)} vertices, need at least {k}")
    tuples = []
    rows = []
    lam: dict[tuple[int, int], tuple[int, ...]] = {}
    for idx, combo in enumerate(combinations(x_ids, k)):
        t = VertexSet.from_ids(g.n, combo)
        cnt = kernels.counts_vs_set(g, t.bits)
        row = 0
        for y in bg.y_side:
            if cnt[y] >= k - p.alpha:
                row |= 1 << y
                lam[(y, idx)] = tuple(v for v in combo if not g.has_edge(y, v))
            else:
                lam[(y, idx)] = tuple(v for v in combo if g.has_edge(y, v))
        tuples.append(t)
        rows.append(row)
    groups: dict[int, list[int]] = {}
    for idx, row in enumerate(rows):
        groups.setdefault(row, []).append(idx)
    classes = tuple(
        tuple(members) for _, members in sorted(groups.items(), key=lambda kv: kv[1][0])
    )
    return TwinClassification(tuple(tuples), tuple(rows), classes, lam)


def is_false_ab_twin(g: Graph, a: VertexSet, b: VertexSet, p: AbParams) -> bool:
    """Twin test for two tuples of size ``alpha + beta + 1``.

    False twins: the union is a module and each vertex of either tuple is a
    beta-non-neighbour of the other tuple (so the tuples sit on the sparse
    side of each other, the way classical false twins are non-adjacent).
    """
    k = p.trivial_cap
    if len(a) != k or len(b) != k:
        raise ValueError(f"twin tuples must have size {k}")
    if a == b:
        raise ValueError("twin test needs two distinct tuples")
    if not is_ab_module(g, a | b, p):
        return False
    cnt_b = kernels.counts_vs_set(g, b.bits)
    cnt_a = kernels.counts_vs_set(g, a.bits)
    if any(v in b or cnt_b[v] > p.beta for v in a):
        return False
    if any(v in a or cnt_a[v] > p.beta for v in b):
        return False
    return True


def one_sided_module_check(bg: BipartiteGraph, m: VertexSet, p: AbParams) -> bool:
    """Module test for a subset of the X side."""
    if not m <= bg.x_side:
        raise ValueError("set is not contained in the X side")
    return is_ab_module(bg.underlying, m, p)


@dataclass(frozen=True)
class OneSidedFamily:
    maximal_members: tuple[VertexSet, ...]
    params: AbParams


def _row_feasible(g: Graph, bits: int, row: int, y_ids, alpha: int, beta: int) -> Optional[int]:
    """First Y-vertex whose budget is violated by the set, or None."""
    size = bits.bit_count()
    cnt = kernels.counts_vs_set(g, bits)
    for y in y_ids:
        if (row >> y) & 1:
            if size - cnt[y] > alpha:
                return y
        else:
            if cnt[y] > beta:
                return y
    return None


def _maximal_row_feasible(
    g: Graph, support: int, row: int, y_ids, p: AbParams
) -> list[int]:
    """All maximal subsets of the class support satisfying every y-budget.

    Top-down: starting from the support, a violated budget can only be fixed
    by dropping one of the vertices on the violating side, and every maximal
    feasible set survives along some branch.
    """
    alpha, beta = p.alpha, p.beta
    feasible: list[int] = []
    seen: set[int] = set()
    stack = [support]
    while stack:
        bits = stack.pop()
        if bits in seen:
            continue
        seen.add(bits)
        y = _row_feasible(g, bits, row, y_ids, alpha, beta)
        if y is None:
            feasible.append(bits)
            continue
        if (row >> y) & 1:
            offenders = bits & ~g.adj_bits[y]
        else:
            offenders = bits & g.adj_bits[y]
        while offenders:
            low = offenders & -offenders
            offenders ^= low
            stack.append(bits & ~low)
    out = []
    for bits in feasible:
        if not any(other != bits and bits & ~other == 0 for other in feasible):
            out.append(bits)
    return out


def maximal_one_sided_modules(
    bg: BipartiteGraph, p: AbParams, jobs: int = 1
) -> OneSidedFamily:
    """The inclusion-maximal modules contained in the X side.

    ``X`` itself is reported alone whenever it passes the module test (it does
    not always).  Otherwise every maximal member has at least tuple size, its
    tuples share one twin class, and it is a maximal subset of that class
    support meeting all the per-y budgets, so the classes are processed one by
    one (in a thread pool when ``jobs > 1``; output is independent of it).
    Members from different classes may overlap.
    """
    g = bg.underlying
    x = bg.x_side
    if not x:
        raise ValueError("X side is empty")
    if len(x) <= p.trivial_cap or is_ab_module(g, x, p):
        return OneSidedFamily((x,), p)
    tc = twin_classify(bg, p)
    y_ids = bg.y_side.ids()

    def handle_class(cls) -> list[int]:
        row = tc.rows[cls[0]]
        support = 0
        for idx in cls:
            support |= tc.tuples[idx].bits
        return [
            bits
            for bits in _maximal_row_feasible(g, support, row, y_ids, p)
            if bits.bit_count() >= p.trivial_cap
        ]

    found: set[int] = set()
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(handle_class, tc.classes):
                found.update(part)
    else:
        for cls in tc.classes:
            found.update(handle_class(cls))
    members = [VertexSet(g.n, b) for b in found]
    members = [
        m
        for m in members
        if not any(o.bits != m.bits and m.bits & ~o.bits == 0 for o in members)
    ]
    members.sort(key=lambda m: m.ids())
    return OneSidedFamily(tuple(members), p)


@dataclass(frozen=True)
class ClosurePropsReport:
    family_size: int
    pairs_checked: int
    violations: tuple[str, ...]


def one_sided_family_closure_props(
    bg: BipartiteGraph, p: AbParams, max_x: Optional[int] = None
) -> ClosurePropsReport:
    """Exhaustive check that the one-sided family is closed under intersection
    and both differences.  Oracle-scale only."""
    limits.check_cap(len(bg.x_side), max_x, 12, "the one-sided closure-property check")
    g = bg.underlying
    x_ids = bg.x_side.ids()
    family: set[int] = set()
    for r in range(len(x_ids) + 1):
        for combo in combinations(x_ids, r):
            s = VertexSet.from_ids(g.n, combo)
            if is_ab_module(g, s, p):
                family.add(s.bits)
    violations = []
    pairs = 0
    fam = sorted(family)
    for a in fam:
        for b in fam:
            if a >= b:
                continue
            pairs += 1
            for name, bits in (
                ("intersection", a & b),
                ("difference", a & ~b),
                ("reverse difference", b & ~a),
            ):
                if bits not in family:
                    violations.append(
                        f"{name} of {VertexSet(g.n, a).ids()} and "
                        f"{VertexSet(g.n, b).ids()} left the family"
                    )
    return ClosurePropsReport(len(family), pairs, tuple(violations))
