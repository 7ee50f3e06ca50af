"""Immutable simple graphs over dense integer vertex ids, plus bitset vertex sets.

All algebra in this package runs on :class:`VertexSet` bitsets; string labels,
when a graph has them, live in a side map at the I/O layer and never reach the
algorithms.  Graphs and vertex sets are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class VertexSet:
    """A set of vertex ids stored as a bitmask of fixed width ``n``.

    Sets built over different universe sizes are deliberately incomparable:
    any binary operation between them raises ``ValueError``.  This catches
    accidental mixing of sets from different graphs.
    """

    __slots__ = ("bits", "n")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise ValueError("universe size must be non-negative")
        if bits < 0 or bits >> n:
            raise ValueError("bitmask has members outside the universe")
        self.bits = bits
        self.n = n

    @classmethod
    def from_ids(cls, n: int, ids: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in ids:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and other.n == self.n
            and other.bits == self.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits ^ other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def add(self, v: int) -> "VertexSet":
        """Return a copy with ``v`` included (sets themselves never mutate)."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return VertexSet(self.n, self.bits | (1 << v))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def ids(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class AbParams:
    """The pair of per-vertex error budgets.

    ``alpha`` bounds missing edges towards a set, ``beta`` bounds extra edges.
    Both are non-negative.  When bound to a graph the pair should satisfy
    ``max(alpha, beta) < n - 1``; drivers that loop over whole graphs enforce
    this via :meth:`check_for`, the pointwise predicates stay total.
    """

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("error budgets must be non-negative")

    @property
    def trivial_cap(self) -> int:
        """Largest size at which every vertex set is automatically a module."""
        return self.alpha + self.beta + 1

    @property
    def degenerate_cap(self) -> int:
        """Largest graph order considered degenerate for this budget pair."""
        return self.alpha + self.beta + 2

    def swapped(self) -> "AbParams":
        """Budgets for the complement graph."""
        return AbParams(self.beta, self.alpha)

    def check_for(self, n: int) -> None:
        if max(self.alpha, self.beta) >= n - 1:
            raise ValueError(
                f"budgets ({self.alpha}, {self.beta}) too large for n={n}: "
                f"max(alpha, beta) must be < n - 1"
            )


class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored both as sorted neighbour tuples and as per-vertex
    bitsets; the two views always agree.  Self-loops and duplicate edges are
    rejected at construction.
    """

    __slots__ = ("n", "m", "edges", "adjacency", "adj_bits", "_words")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        bits = [0] * n
        canon = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (bits[u] >> v) & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        self.n = n
        self.m = len(canon)
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        self.adj_bits: tuple[int, ...] = tuple(bits)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(VertexSet(n, b)) for b in bits
        )
        self._words = None  # packed rows, built lazily by the compiled kernel

    def degree(self, u: int) -> int:
        return self.adj_bits[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_bits[u] >> v) & 1 == 1

    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def adj_set(self, u: int) -> VertexSet:
        return VertexSet(self.n, self.adj_bits[u])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(self.degree(u) for u in range(self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and other.n == self.n and other.edges == self.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    """The graph on the same vertices with exactly the missing edges."""
    edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def induced(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``s`` plus the relabelling map ``old id -> new id``.

    New ids are assigned in ascending order of the old ids, so the map is the
    unique order-preserving bijection ``s -> 0..|s|-1``.
    """
    if s.n != g.n:
        raise ValueError(f"vertex set universe {s.n} does not match graph n={g.n}")
    relabel = {v: i for i, v in enumerate(s)}
    edges = [
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    ]
    return Graph(len(relabel), edges), relabel


def neighbourhood_of_set(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with at least one neighbour inside it."""
    if s.n != g.n:
        raise ValueError("vertex set does not match graph")
    hit = 0
    for v in s:
        hit |= g.adj_bits[v]
    return VertexSet(g.n, hit & ~s.bits)


def non_neighbourhood_of_set(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with no neighbour inside it."""
    return (neighbourhood_of_set(g, s) | s).complement()


FALSE_TWIN = "false_twin"
TRUE_TWIN = "true_twin"
NEITHER = "neither"


def twins(g: Graph, u: int, v: int) -> str:
    """Classify a vertex pair as false twins, true twins, or neither.

    False twins share their open neighbourhood (and are never adjacent);
    true twins share their closed neighbourhood (and are always adjacent).
    """
    if u == v:
        raise ValueError("twin test needs two distinct vertices")
    if g.adj_bits[u] == g.adj_bits[v]:
        return FALSE_TWIN
    if g.adj_bits[u] | (1 << u) == g.adj_bits[v] | (1 << v):
        return TRUE_TWIN
    return NEITHER
