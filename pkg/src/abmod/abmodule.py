"""Splitter sets, the module predicate, and modular closure.

A set ``A`` is an (alpha, beta)-module when no outside vertex sees strictly
more than ``beta`` but strictly fewer than ``|A| - alpha`` of its members.
Such in-between vertices are the splitters of ``A``.  Because the modules of
a graph are closed under intersection and contain the whole vertex set, every
seed set has a unique minimal module containing it; ``closure_naive`` grows it
by absorbing whole splitter sets, ``closure_refined`` by a vertex-at-a-time
search over a refined partition of the outside.  Both compute the same set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import kernels
from .graph import AbParams, Graph, VertexSet


@dataclass(frozen=True)
class SplitterReport:
    """Classification of the outside of a set ``a`` by neighbour counts.

    ``n_alpha`` holds the alpha-neighbours (count >= |a| - alpha), ``n_bar_beta``
    the beta-non-neighbours (count <= beta) and ``splitters`` everything caught
    strictly between the two thresholds.  The three sets always cover the
    outside; they are pairwise disjoint as soon as ``|a| >= alpha + beta + 1``.
    """

    a: VertexSet
    n_alpha: VertexSet
    n_bar_beta: VertexSet
    splitters: VertexSet
    counts: dict[int, int]


def _counts_outside(g: Graph, a: VertexSet) -> dict[int, int]:
    cnt = kernels.counts_vs_set(g, a.bits)
    return {x: int(cnt[x]) for x in a.complement()}


def splitter_set(g: Graph, a: VertexSet, p: AbParams) -> SplitterReport:
    """Classify every vertex outside ``a`` against the two thresholds."""
    if a.n != g.n:
        raise ValueError("vertex set does not match graph")
    counts = _counts_outside(g, a)
    size = len(a)
    hi, lo, mid = 0, 0, 0
    for x, c in counts.items():
        if c >= size - p.alpha:
            hi |= 1 << x
        if c <= p.beta:
            lo |= 1 << x
        if p.beta < c < size - p.alpha:
            mid |= 1 << x
    return SplitterReport(
        a=a,
        n_alpha=VertexSet(g.n, hi),
        n_bar_beta=VertexSet(g.n, lo),
        splitters=VertexSet(g.n, mid),
        counts=counts,
    )


def alpha_neighbourhood(g: Graph, a: VertexSet, p: AbParams) -> VertexSet:
    """Outside vertices adjacent to all but at most ``alpha`` members of ``a``."""
    if not a:
        raise ValueError("alpha-neighbourhood of the empty set is undefined")
    return splitter_set(g, a, p).n_alpha


def beta_non_neighbourhood(g: Graph, a: VertexSet, p: AbParams) -> VertexSet:
    """Outside vertices adjacent to at most ``beta`` members of ``a``."""
    if not a:
        raise ValueError("beta-non-neighbourhood of the empty set is undefined")
    return splitter_set(g, a, p).n_bar_beta


def is_ab_module(g: Graph, m: VertexSet, p: AbParams) -> bool:
    """True when ``m`` has no splitter."""
    if m.n != g.n:
        raise ValueError("vertex set does not match graph")
    size = len(m)
    if size <= p.trivial_cap or size == g.n:
        return True
    return kernels.first_splitter(g, m.bits, size, p.alpha, p.beta) < 0


def is_trivial_module(m: VertexSet, p: AbParams, n: int) -> bool:
    """Whole vertex set, or small enough to be a module for free."""
    if m.n != n:
        raise ValueError("vertex set does not match universe")
    return len(m) == n or len(m) <= p.trivial_cap


@dataclass(frozen=True)
class ClosureTrace:
    """Result of a modular closure run, with enough state to audit it.

    ``stages`` strictly grows and ends at ``result``.  ``visited_order`` is
    only filled by the search-based algorithm.  ``counters`` maps each outside
    vertex left unabsorbed at termination to its final (edge, non-edge)
    tallies against the result set; it is derived lazily when the run did not
    already track it, so result-only callers skip the cost.
    ``input_below_minimum`` flags seeds of size < alpha + beta + 2, which are
    returned unchanged since they are already trivial modules.
    """

    stages: tuple[VertexSet, ...]
    result: VertexSet
    visited_order: tuple[int, ...] = ()
    input_below_minimum: bool = False
    _counters: dict[int, tuple[int, int]] | None = field(
        default=None, repr=False, compare=False
    )
    _graph: Graph | None = field(default=None, repr=False, compare=False)

    @property
    def counters(self) -> dict[int, tuple[int, int]]:
        if self._counters is None:
            object.__setattr__(self, "_counters", _final_counters(self._graph, self.result))
        return self._counters


def _final_counters(g: Graph, result: VertexSet) -> dict[int, tuple[int, int]]:
    size = len(result)
    cnt = kernels.counts_vs_set(g, result.bits)
    return {x: (cnt[x], size - cnt[x]) for x in result.complement()}


def closure_naive(g: Graph, a: VertexSet, p: AbParams) -> ClosureTrace:
    """Grow ``a`` by repeatedly absorbing its entire splitter set.

    Returns the unique inclusion-minimal module containing ``a`` among the
    modules with more than ``alpha + beta + 1`` elements (uniqueness follows
    from closure of modules under intersection).  Seeds smaller than
    ``alpha + beta + 2`` are already trivial modules and come back unchanged,
    flagged via ``input_below_minimum``.
    """
    if a.n != g.n:
        raise ValueError("vertex set does not match graph")
    if len(a) < p.degenerate_cap:
        return ClosureTrace(
            stages=(a,), result=a, input_below_minimum=True, _graph=g
        )
    stages = [a]
    current = a
    while True:
        spl = kernels.splitter_bits(g, current.bits, len(current), p.alpha, p.beta)
        if not spl:
            break
        current = current | VertexSet(g.n, spl)
        stages.append(current)
    return ClosureTrace(stages=tuple(stages), result=current, _graph=g)


class _Part:
    """A block of outside vertices sharing the same (edge, non-edge) tallies.

    Only the edge tally is stored; since every visited vertex bumps exactly
    one of the two counters for each live outside vertex, the non-edge tally
    is always ``visited - edge``.
    """

    __slots__ = ("members", "edge", "alive")

    def __init__(self, members: set[int], edge: int):
        self.members = members
        self.edge = edge
        self.alive = True


def closure_refined(g: Graph, a: VertexSet, p: AbParams) -> ClosureTrace:
    """Modular closure as a graph search over a refined outside partition.

    Vertices of the growing module are consumed from a FIFO queue seeded with
    ``a`` in ascending id order.  Visiting ``z`` splits each outside block
    into its neighbours and non-neighbours of ``z`` in time proportional to
    ``|N(z)|``; a block whose tallies exceed both budgets (edge > beta and
    non-edge > alpha) is enqueued wholesale.  Blocks that cross the non-edge
    budget passively, by not being touched, are caught by a due-date bucket
    keyed on the visit counter, keeping the whole run linear in edges.
    The result set is always identical to :func:`closure_naive`.
    """
    if a.n != g.n:
        raise ValueError("vertex set does not match graph")
    if len(a) < p.degenerate_cap:
        return ClosureTrace(
            stages=(a,), result=a, input_below_minimum=True, _graph=g
        )

    n = g.n
    alpha, beta = p.alpha, p.beta
    queued = [False] * n
    open_queue: deque[int] = deque()
    for v in a:
        queued[v] = True
        open_queue.append(v)

    outside = set(a.complement())
    part_of: dict[int, _Part] = {}
    if outside:
        first = _Part(set(outside), 0)
        for x in outside:
            part_of[x] = first
        parts = [first]
    else:
        parts = []

    visited = 0
    visited_order: list[int] = []
    member_bits = 0
    # buckets[t] holds blocks whose non-edge tally reaches alpha + 1 once
    # `visited` hits t, provided their edge tally stays put until then.
    buckets: dict[int, list[_Part]] = {}

    def enqueue_part(part: _Part) -> None:
        part.alive = False
        for u in sorted(part.members):
            part_of.pop(u, None)
            queued[u] = True
            open_queue.append(u)
        part.members.clear()

    def schedule(part: _Part) -> None:
        # a block matters for OPEN only once edge > beta; its non-edge tally
        # crosses alpha exactly when visited reaches edge + alpha + 1
        if part.edge > beta:
            if visited - part.edge > alpha:
                enqueue_part(part)
            else:
                buckets.setdefault(part.edge + alpha + 1, []).append(part)

    while open_queue:
        z = open_queue.popleft()
        visited_order.append(z)
        member_bits |= 1 << z
        visited += 1

        touched: dict[int, tuple[_Part, list[int]]] = {}
        for u in g.adjacency[z]:
            part = part_of.get(u)
            if part is not None:
                entry = touched.get(id(part))
                if entry is None:
                    touched[id(part)] = (part, [u])
                else:
                    entry[1].append(u)

        for part, moved in touched.values():
            if len(moved) == len(part.members):
                part.edge += 1  # whole block adjacent to z, no split
                schedule(part)
                continue
            new_part = _Part(set(moved), part.edge + 1)
            for u in moved:
                part.members.discard(u)
                part_of[u] = new_part
            parts.append(new_part)
            schedule(new_part)
            schedule(part)

        for part in buckets.pop(visited, ()):
            if part.alive and part.members and visited - part.edge > alpha:
                enqueue_part(part)

    result = VertexSet(n, member_bits)
    stages = (a,) if result == a else (a, result)
    counters: dict[int, tuple[int, int]] = {}
    for part in parts:
        if part.alive:
            for u in sorted(part.members):
                counters[u] = (part.edge, visited - part.edge)
    return ClosureTrace(
        stages=stages,
        result=result,
        visited_order=tuple(visited_order),
        _counters=counters,
        _graph=g,
    )
