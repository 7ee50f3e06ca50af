"""Partition classification, decomposition trees, cographs, and matching cuts.

A modular partition is series-like when all parts are mutually alpha-connected
and parallel-like when all parts are mutually beta-non-connected; a partition
that is neither gets the prime label.  Every graph admits a decomposition tree
built by peeling maximal non-trivial modules; the tree nodes always carry sets
that are modules of their parent's induced subgraph, which is the invariant
the validator enforces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Optional

from . import kernels, limits
from .abmodule import closure_refined, is_ab_module, splitter_set
from .enumeration import minimal_nontrivial_modules
from .graph import AbParams, Graph, VertexSet, induced

ALPHA_SERIES = "alpha_series"
BETA_PARALLEL = "beta_parallel"
AB_PRIME = "ab_prime"
AB_DEGENERATE = "ab_degenerate"
UNCLASSIFIED = "unclassified"


# ---------------------------------------------------------------------------
# connectivity between disjoint sets


@dataclass(frozen=True)
class Connectivity:
    """Outcome of a set-to-set connectivity test.

    ``degenerate`` marks inputs below the size floor ``alpha + beta + 1``,
    where the subset conditions are applied literally but the notion is
    outside its intended range.  Truthiness follows ``holds``.
    """

    holds: bool
    degenerate: bool

    def __bool__(self) -> bool:
        return self.holds


def _pair_check(g: Graph, a: VertexSet, b: VertexSet, p: AbParams, high: bool) -> Connectivity:
    if not a or not b:
        raise ValueError("connectivity needs two non-empty sets")
    if not a.isdisjoint(b):
        raise ValueError("connectivity needs disjoint sets")
    degenerate = min(len(a), len(b)) < p.trivial_cap
    cnt_b = kernels.counts_vs_set(g, b.bits)
    cnt_a = kernels.counts_vs_set(g, a.bits)
    if high:
        ok = all(cnt_b[x] >= len(b) - p.alpha for x in a) and all(
            cnt_a[y] >= len(a) - p.alpha for y in b
        )
    else:
        ok = all(cnt_b[x] <= p.beta for x in a) and all(cnt_a[y] <= p.beta for y in b)
    return Connectivity(ok, degenerate)


def is_alpha_connected(g: Graph, a: VertexSet, b: VertexSet, p: AbParams) -> Connectivity:
    """Every vertex of each set is an alpha-neighbour of the other set."""
    return _pair_check(g, a, b, p, high=True)


def is_beta_non_connected(g: Graph, a: VertexSet, b: VertexSet, p: AbParams) -> Connectivity:
    """Every vertex of each set is a beta-non-neighbour of the other set."""
    return _pair_check(g, a, b, p, high=False)


# ---------------------------------------------------------------------------
# modular partitions


@dataclass(frozen=True)
class ModularPartition:
    parts: tuple[VertexSet, ...]
    params: AbParams
    label: str


def _check_partition(g: Graph, parts: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    parts = tuple(parts)
    seen = 0
    for part in parts:
        if part.n != g.n:
            raise ValueError("partition part does not match graph")
        if not part:
            raise ValueError("partition parts must be non-empty")
        if seen & part.bits:
            raise ValueError("partition parts overlap")
        seen |= part.bits
    if seen != (1 << g.n) - 1:
        raise ValueError("partition does not cover the vertex set")
    return parts


def _series_holds(g: Graph, parts, p: AbParams) -> bool:
    if not any(len(part) >= p.trivial_cap for part in parts):
        return False
    return all(
        is_alpha_connected(g, a, b, p).holds for a, b in combinations(parts, 2)
    )


def _parallel_holds(g: Graph, parts, p: AbParams) -> bool:
    if not any(len(part) >= p.trivial_cap for part in parts):
        return False
    return all(
        is_beta_non_connected(g, a, b, p).holds for a, b in combinations(parts, 2)
    )


def classify_partition(g: Graph, parts: Iterable[VertexSet], p: AbParams) -> ModularPartition:
    """Label a modular partition as series, parallel, or prime.

    Series and parallel require some part of size at least ``alpha + beta + 1``
    and the respective connectivity on every pair of parts; anything else is
    prime.  At most one of series/parallel can hold for a given partition.
    """
    parts = _check_partition(g, parts)
    if len(parts) < 2:
        raise ValueError("a modular partition needs at least two parts")
    if g.n < p.alpha + p.beta + 3:
        raise ValueError("graph too small to classify: order below alpha+beta+3")
    for part in parts:
        if not is_ab_module(g, part, p):
            raise ValueError(f"part {part.ids()} is not a module")
    if _series_holds(g, parts, p):
        label = ALPHA_SERIES
    elif _parallel_holds(g, parts, p):
        label = BETA_PARALLEL
    else:
        label = AB_PRIME
    return ModularPartition(parts, p, label)


# ---------------------------------------------------------------------------
# maximal non-trivial modules


def _module_in(g: Graph, m_bits: int, within_bits: int, p: AbParams) -> bool:
    # module of the induced subgraph on `within`, tested in global ids
    size = m_bits.bit_count()
    if size <= p.trivial_cap or m_bits == within_bits:
        return True
    cnt = kernels.counts_vs_set(g, m_bits)
    lo, hi = p.beta, size - p.alpha
    rest = within_bits & ~m_bits
    while rest:
        low = rest & -rest
        x = low.bit_length() - 1
        rest ^= low
        if lo < cnt[x] < hi:
            return False
    return True


def _exact_maximal_in(
    g: Graph, p: AbParams, allowed: VertexSet, max_n: Optional[int]
) -> Optional[VertexSet]:
    limits.check_cap(g.n, max_n, 14, "the exact maximal-module search")
    ids = allowed.ids()
    full = (1 << g.n) - 1
    top = min(len(ids), g.n - 1)  # the whole vertex set is trivial
    for size in range(top, p.degenerate_cap - 1, -1):
        for combo in combinations(ids, size):
            bits = 0
            for v in combo:
                bits |= 1 << v
            if _module_in(g, bits, full, p):
                return VertexSet(g.n, bits)
    return None


def _grow_maximal_in(
    g: Graph, p: AbParams, allowed: VertexSet
) -> Optional[VertexSet]:
    if g.n < p.alpha + p.beta + 3:
        return None
    seeds = [m for m in minimal_nontrivial_modules(g, p).members if m <= allowed]
    best: Optional[VertexSet] = None
    for seed in seeds:
        m = seed
        grown = True
        while grown:
            grown = False
            for v in allowed - m:
                cand = closure_refined(g, m.add(v), p).result
                if len(cand) < g.n and cand <= allowed:
                    m = cand
                    grown = True
                    break
        if (
            best is None
            or len(m) > len(best)
            or (len(m) == len(best) and m.ids() < best.ids())
        ):
            best = m
    return best


def maximal_nontrivial_module(
    g: Graph,
    p: AbParams,
    strategy: Literal["exact", "grow"] = "exact",
    max_n: Optional[int] = None,
) -> Optional[VertexSet]:
    """Some maximal non-trivial module, or ``None`` on prime graphs.

    ``exact`` scans subsets by descending size (then lexicographically) and
    returns a maximum-cardinality module, exponential and hence size-capped.
    ``grow`` climbs from each minimal non-trivial module via single-vertex
    closure extensions; the result is always inclusion-maximal (if a strictly
    larger module existed, the closure of the set plus one of its vertices
    would be a proper extension) but need not have maximum cardinality.
    """
    allowed = g.vertex_set()
    if g.n < p.alpha + p.beta + 3:
        return None
    if strategy == "exact":
        return _exact_maximal_in(g, p, allowed, max_n)
    if strategy == "grow":
        return _grow_maximal_in(g, p, allowed)
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# decomposition trees


@dataclass(frozen=True)
class TreeNode:
    """A decomposition-tree node; ``vertices`` is always in root-graph ids."""

    vertices: VertexSet
    kind: str
    children: tuple["TreeNode", ...] = ()

    def is_leaf(self) -> bool:
        return not self.children


def _to_root(root_n: int, orig: tuple[int, ...], local: Iterable[int]) -> VertexSet:
    bits = 0
    for v in local:
        bits |= 1 << orig[v]
    return VertexSet(root_n, bits)


def _chunks_ascending(ids: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    # full-size chunks in ascending id order; the remainder forms the last part
    out = [ids[i : i + size] for i in range(0, len(ids), size)]
    return out


def _find_maximal(g, p, allowed, strategy, max_n):
    if strategy == "exact":
        return _exact_maximal_in(g, p, allowed, max_n)
    return _grow_maximal_in(g, p, allowed)


def decomposition_tree(
    g: Graph,
    p: AbParams,
    strategy: Literal["exact", "grow"] = "exact",
    max_n: Optional[int] = None,
) -> TreeNode:
    """Build a decomposition tree by peeling maximal non-trivial modules.

    Prime graphs get a prime root over trivial blocks of ``alpha + beta + 1``
    vertices in ascending id order (remainder in its own final block).  When
    the first peel leaves at most ``alpha + beta`` vertices, the remainder is
    attached as a degenerate leaf and the root label follows whether the
    remainder is all alpha-adjacent, all beta-non-adjacent, or mixed towards
    the peeled module.  Otherwise peeling continues inside the residue,
    leftover vertices are chunked into trivial blocks, and the resulting
    partition is classified.  Nested same-label series/parallel nodes are
    merged when the flattened partition keeps a part of size at least
    ``alpha + beta + 1``.  Trees are not unique across strategies, but each
    strategy with its fixed tie-breaks is deterministic.
    """
    if strategy == "exact":
        limits.check_cap(g.n, max_n, 14, "exact-strategy tree construction")
    return _build_tree(g, tuple(range(g.n)), g.n, p, strategy, max_n)


def _leaf(root_n, orig, local_ids) -> TreeNode:
    return TreeNode(_to_root(root_n, orig, local_ids), AB_DEGENERATE)


def _build_tree(gl, orig, root_n, p, strategy, max_n) -> TreeNode:
    n = gl.n
    here = _to_root(root_n, orig, range(n))
    if n <= p.degenerate_cap:
        # classical pairs still split into series/parallel over singletons
        if n == 2 and p.alpha == 0 and p.beta == 0:
            kind = ALPHA_SERIES if gl.m == 1 else BETA_PARALLEL
            return TreeNode(
                here, kind, (_leaf(root_n, orig, [0]), _leaf(root_n, orig, [1]))
            )
        return TreeNode(here, AB_DEGENERATE)

    allowed = gl.vertex_set()
    first = _find_maximal(gl, p, allowed, strategy, max_n)
    if first is None:
        chunks = _chunks_ascending(tuple(range(n)), p.trivial_cap)
        children = tuple(_subtree(gl, orig, root_n, p, strategy, max_n, c) for c in chunks)
        return TreeNode(here, AB_PRIME, _sorted_children(children))

    rest = allowed - first
    if len(rest) <= p.alpha + p.beta:
        report = splitter_set(gl, first, p)
        main = _subtree(gl, orig, root_n, p, strategy, max_n, first.ids())
        if rest == report.n_alpha:
            node = TreeNode(here, ALPHA_SERIES, _sorted_children((main, _leaf(root_n, orig, rest.ids()))))
        elif rest == report.n_bar_beta:
            node = TreeNode(here, BETA_PARALLEL, _sorted_children((main, _leaf(root_n, orig, rest.ids()))))
        else:
            hot = rest & report.n_alpha
            cold = rest & report.n_bar_beta
            kids = [main]
            if hot:
                kids.append(_leaf(root_n, orig, hot.ids()))
            if cold:
                kids.append(_leaf(root_n, orig, cold.ids()))
            node = TreeNode(here, AB_PRIME, _sorted_children(tuple(kids)))
        return _flatten(node, p)

    parts = [first]
    remaining = rest
    while remaining:
        nxt = _find_maximal(gl, p, remaining, strategy, max_n) if len(remaining) > p.trivial_cap else None
        if nxt is None:
            for chunk in _chunks_ascending(remaining.ids(), p.trivial_cap):
                parts.append(VertexSet.from_ids(n, chunk))
            break
        parts.append(nxt)
        remaining = remaining - nxt

    if _series_holds(gl, parts, p):
        label = ALPHA_SERIES
    elif _parallel_holds(gl, parts, p):
        label = BETA_PARALLEL
    else:
        label = AB_PRIME
    children = tuple(
        _subtree(gl, orig, root_n, p, strategy, max_n, part.ids()) for part in parts
    )
    return _flatten(TreeNode(here, label, _sorted_children(children)), p)


def _subtree(gl, orig, root_n, p, strategy, max_n, local_ids) -> TreeNode:
    sub, fwd = induced(gl, VertexSet.from_ids(gl.n, local_ids))
    sub_orig = tuple(orig[v] for v in sorted(fwd))
    return _build_tree(sub, sub_orig, root_n, p, strategy, max_n)


def _sorted_children(children: tuple[TreeNode, ...]) -> tuple[TreeNode, ...]:
    return tuple(sorted(children, key=lambda c: min(c.vertices)))


def _flatten(node: TreeNode, p: AbParams) -> TreeNode:
    if node.kind not in (ALPHA_SERIES, BETA_PARALLEL):
        return node
    merged: list[TreeNode] = []
    changed = False
    for ch in node.children:
        if ch.kind == node.kind and ch.children:
            merged.extend(ch.children)
            changed = True
        else:
            merged.append(ch)
    if not changed:
        return node
    if not any(len(ch.vertices) >= p.trivial_cap for ch in merged):
        return node  # flattening would lose the required large part
    return _flatten(
        TreeNode(node.vertices, node.kind, _sorted_children(tuple(merged))), p
    )


def validate_tree(g: Graph, root: TreeNode, p: AbParams) -> list[str]:
    """All invariant violations of a decomposition tree (empty when valid)."""
    problems: list[str] = []
    if root.vertices != g.vertex_set():
        problems.append("root is not the whole vertex set")

    def walk(node: TreeNode) -> None:
        if node.is_leaf():
            if len(node.vertices) > p.degenerate_cap:
                problems.append(f"leaf {node.vertices.ids()} is not degenerate")
            if node.kind not in (AB_DEGENERATE,):
                problems.append(f"leaf {node.vertices.ids()} has kind {node.kind}")
            return
        if node.kind not in (ALPHA_SERIES, BETA_PARALLEL, AB_PRIME):
            problems.append(f"internal node {node.vertices.ids()} has kind {node.kind}")
        seen = 0
        for ch in node.children:
            if ch.vertices.bits & ~node.vertices.bits:
                problems.append(
                    f"child {ch.vertices.ids()} leaks outside {node.vertices.ids()}"
                )
            if seen & ch.vertices.bits:
                problems.append(f"children of {node.vertices.ids()} overlap")
            seen |= ch.vertices.bits
            if not _module_in(g, ch.vertices.bits, node.vertices.bits, p):
                problems.append(
                    f"child {ch.vertices.ids()} is not a module of its parent"
                )
            walk(ch)
        if seen != node.vertices.bits:
            problems.append(f"children of {node.vertices.ids()} do not cover it")

    walk(root)
    return problems


def tree_to_json_dict(node: TreeNode, labels: Optional[dict[int, str]] = None) -> dict:
    """Nested dict with the documented field order: kind, vertices, children."""
    name = (lambda v: labels[v]) if labels else (lambda v: v)
    return {
        "kind": node.kind,
        "vertices": [name(v) for v in node.vertices],
        "children": [tree_to_json_dict(ch, labels) for ch in node.children],
    }


def tree_to_dot(node: TreeNode, labels: Optional[dict[int, str]] = None) -> str:
    """DOT rendering; nodes are numbered in preorder for stable output."""
    name = (lambda v: str(labels[v])) if labels else (lambda v: str(v))
    lines = ["digraph decomposition {", '  node [shape=box];']
    counter = 0

    def emit(n: TreeNode) -> int:
        nonlocal counter
        me = counter
        counter += 1
        verts = ",".join(name(v) for v in n.vertices)
        lines.append(f'  n{me} [label="{n.kind}\\n{{{verts}}}"];')
        for ch in n.children:
            child = emit(ch)
            lines.append(f"  n{me} -> n{child};")
        return me

    emit(node)
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cographs


@dataclass(frozen=True)
class CographResult:
    is_cograph: bool
    cotree: Optional[TreeNode]

    def __bool__(self) -> bool:
        return self.is_cograph


def is_ab_cograph(g: Graph, p: AbParams, max_n: Optional[int] = None) -> CographResult:
    """Total decomposability through series/parallel partitions only.

    A graph of order at most ``alpha + beta + 2`` is degenerate and counts as
    decomposed.  Larger graphs need a modular partition into parts of size at
    least ``alpha + beta + 1`` that is series or parallel, every part again a
    cograph.  The search enumerates candidate parts per subgraph (largest
    first, so two-part splits surface early) and is exponential; the witness
    cotree has only series/parallel internal nodes and degenerate leaves.
    """
    limits.check_cap(g.n, max_n, 12, "the cograph search")
    memo: dict[tuple[int, int], Optional[TreeNode]] = {}
    root = _cograph_search(g, tuple(range(g.n)), g.n, p, memo)
    return CographResult(root is not None, root)


def _cograph_search(gl, orig, root_n, p, memo) -> Optional[TreeNode]:
    n = gl.n
    here = _to_root(root_n, orig, range(n))
    if n <= p.degenerate_cap:
        return TreeNode(here, AB_DEGENERATE)
    key = (here.bits, root_n)
    if key in memo:
        return memo[key]
    floor = p.trivial_cap
    candidates = [
        VertexSet.from_ids(n, ids)
        for size in range(n - floor, floor - 1, -1)
        for ids in combinations(range(n), size)
        if is_ab_module(gl, VertexSet.from_ids(n, ids), p)
    ]
    result: Optional[TreeNode] = None
    for mode_kind in (ALPHA_SERIES, BETA_PARALLEL):
        for parts in _cover_search(gl, p, candidates, mode_kind):
            kids = []
            for part in parts:
                sub, fwd = induced(gl, part)
                sub_orig = tuple(orig[v] for v in sorted(fwd))
                child = _cograph_search(sub, sub_orig, root_n, p, memo)
                if child is None:
                    kids = None
                    break
                kids.append(child)
            if kids is not None:
                result = TreeNode(here, mode_kind, _sorted_children(tuple(kids)))
                break
        if result is not None:
            break
    memo[key] = result
    return result


def _cover_search(gl, p, candidates, kind):
    """Yield every exact cover of the vertex set by candidate modules (at
    least two parts) whose pairs all satisfy the requested relation,
    branching on the lowest uncovered vertex."""
    n = gl.n
    full = (1 << n) - 1
    pair_ok = is_alpha_connected if kind == ALPHA_SERIES else is_beta_non_connected

    def rec(covered: int, chosen: list[VertexSet]):
        if covered == full:
            if len(chosen) >= 2:
                yield tuple(chosen)
            return
        low = (~covered & full) & -(~covered & full)
        v = low.bit_length() - 1
        for cand in candidates:
            if not (cand.bits >> v) & 1 or cand.bits & covered:
                continue
            if all(pair_ok(gl, prev, cand, p).holds for prev in chosen):
                yield from rec(covered | cand.bits, chosen + [cand])

    yield from rec(0, [])


# ---------------------------------------------------------------------------
# matching cuts and brittle decompositions


@dataclass(frozen=True)
class MatchingCut:
    side_a: VertexSet
    side_b: VertexSet
    cut_edges: tuple[tuple[int, int], ...]


def matching_cut(g: Graph, max_n: Optional[int] = None) -> Optional[MatchingCut]:
    """A bipartition whose crossing edges form a matching, or ``None``.

    Exhaustive branch-and-prune over side assignments (a vertex incident to
    two crossing edges prunes the branch), hence the size cap.  Disconnected
    graphs short-circuit to a component split with an empty cut.
    """
    limits.check_cap(g.n, max_n, 24, "the matching-cut search")
    n = g.n
    if n < 2:
        return None

    comp = _component_bits(g, 0) if n else 0
    if n and comp != (1 << n) - 1:
        side_a = VertexSet(n, comp)
        return MatchingCut(side_a, side_a.complement(), ())

    side = [-1] * n
    cross = [0] * n
    order = _bfs_order(g, 0)
    side[0] = 0

    def rec(i: int) -> Optional[list[int]]:
        if i == len(order):
            return list(side) if any(s == 1 for s in side) else None
        v = order[i]
        for choice in (0, 1):
            ok = True
            bumped = []
            side[v] = choice
            for w in g.adjacency[v]:
                if side[w] != -1 and side[w] != choice:
                    cross[v] += 1
                    cross[w] += 1
                    bumped.append(w)
                    if cross[v] > 1 or cross[w] > 1:
                        ok = False
                        break
            if ok:
                got = rec(i + 1)
                if got is not None:
                    return got
            for w in bumped:
                cross[w] -= 1
            cross[v] = 0
            side[v] = -1
        return None

    got = rec(1)
    if got is None:
        return None
    a_bits = sum(1 << v for v in range(n) if got[v] == 0)
    side_a = VertexSet(n, a_bits)
    side_b = side_a.complement()
    cut = tuple(
        (u, v) for u, v in g.edges if ((a_bits >> u) & 1) != ((a_bits >> v) & 1)
    )
    return MatchingCut(side_a, side_b, cut)


def _component_bits(g: Graph, start: int) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if not (seen >> w) & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


def _bfs_order(g: Graph, start: int) -> list[int]:
    from collections import deque

    seen = [False] * g.n
    seen[start] = True
    order = [start]
    q = deque([start])
    while q:
        v = q.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                q.append(w)
    return order


def brittle_decomposition_check(
    g: Graph, parts: Iterable[VertexSet], p: AbParams, max_k: int = 20
) -> bool:
    """True when every union of parts of a modular partition is a module."""
    parts = _check_partition(g, parts)
    if len(parts) > max_k:
        raise ValueError(f"too many parts for the exhaustive check: {len(parts)} > {max_k}")
    for mask in range(1, 1 << len(parts)):
        bits = 0
        for i, part in enumerate(parts):
            if (mask >> i) & 1:
                bits |= part.bits
        if not is_ab_module(g, VertexSet(g.n, bits), p):
            return False
    return True


def two_part_parallel_brittle_exists(g: Graph) -> bool:
    """Whether some bipartition makes both sides (0,1)-modules that are
    mutually 1-non-connected (the two-block brittle split; equivalent to a
    matching cut).  Subset conditions are applied at any block size."""
    n = g.n
    if n < 2:
        return False
    p = AbParams(0, 1)
    full = (1 << n) - 1
    for a_bits in range(1, 1 << (n - 1)):  # vertex n-1 stays on side b
        b_bits = full & ~a_bits
        a = VertexSet(n, a_bits)
        b = VertexSet(n, b_bits)
        if not is_ab_module(g, a, p) or not is_ab_module(g, b, p):
            continue
        if is_beta_non_connected(g, a, b, p).holds:
            return True
    return False
