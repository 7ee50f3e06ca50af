"""Enumeration of minimal non-trivial modules, coverings, and the brute oracle.

Every minimal non-trivial module equals the closure of each of its seeds of
size ``alpha + beta + 2``, so running the closure from every such seed and
keeping the inclusion-minimal results enumerates them all.  The exhaustive
oracle re-checks the module definition over every subset with its own loop,
independent of the closure machinery, and anchors the equivalence tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Optional

from . import limits
from .abmodule import closure_refined, is_ab_module
from .graph import AbParams, Graph, VertexSet, induced

MINIMAL_NONTRIVIAL = "minimal_nontrivial"
COVERING = "covering"
ALL_MODULES_ORACLE = "all_modules_oracle"


@dataclass(frozen=True)
class ModuleFamily:
    """A deduplicated family of vertex sets in canonical order.

    Canonical order is lexicographic on the sorted id tuples, so equal
    families always serialize identically.
    """

    members: tuple[VertexSet, ...]
    params: AbParams
    kind: str


def _canonical(members, params: AbParams, kind: str) -> ModuleFamily:
    uniq = {m.bits: m for m in members}
    ordered = sorted(uniq.values(), key=lambda m: m.ids())
    return ModuleFamily(tuple(ordered), params, kind)


def _minimal_filter(members: list[VertexSet]) -> list[VertexSet]:
    out = []
    for m in members:
        if not any(other.bits != m.bits and other.bits & ~m.bits == 0 for other in members):
            out.append(m)
    return out


def _colex_tuples(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # colexicographic k-subsets of 0..n-1: largest element grows last
    from itertools import combinations

    if k == 0:
        yield ()
        return
    for last in range(k - 1, n):
        for rest in combinations(range(last), k - 1):
            yield rest + (last,)


class _ClosureCache:
    """Reuses found modules to shrink later closure runs.

    A seed lying inside a previously found proper module has its closure
    entirely inside that module, and on the induced subgraph of a module the
    closure is unchanged.  The cache therefore keeps each found module with
    its induced subgraph and replays seeds through the smallest host.
    """

    def __init__(self, g: Graph, p: AbParams):
        self.g = g
        self.p = p
        self.hosts: list[tuple[int, Graph, dict[int, int], tuple[int, ...]]] = []
        self._known: set[int] = set()

    def _remember(self, bits: int) -> None:
        if bits in self._known or bits.bit_count() >= self.g.n:
            return
        self._known.add(bits)
        sub, fwd = induced(self.g, VertexSet(self.g.n, bits))
        back = tuple(sorted(fwd))  # relabelling preserves id order
        self.hosts.append((bits, sub, fwd, back))

    def closure_bits(self, seed_ids: tuple[int, ...]) -> int:
        seed_bits = 0
        for v in seed_ids:
            seed_bits |= 1 << v
        best = None
        for host in self.hosts:
            if seed_bits & ~host[0] == 0 and (
                best is None or host[0].bit_count() < best[0].bit_count()
            ):
                best = host
        if best is None:
            result = closure_refined(
                self.g, VertexSet(self.g.n, seed_bits), self.p
            ).result
            self._remember(result.bits)
            return result.bits
        _, sub, fwd, back = best
        local_seed = VertexSet.from_ids(sub.n, [fwd[v] for v in seed_ids])
        local = closure_refined(sub, local_seed, self.p).result
        out = 0
        for v in local:
            out |= 1 << back[v]
        self._remember(out)
        return out


def _closure_worker(g: Graph, p: AbParams, driver: str, seeds) -> set[int]:
    full = (1 << g.n) - 1
    found: set[int] = set()
    if driver == "tuple":
        for seed in seeds:
            bits = closure_refined(g, VertexSet.from_ids(g.n, seed), p).result.bits
            if bits != full:
                found.add(bits)
    else:
        cache = _ClosureCache(g, p)
        for seed in seeds:
            bits = cache.closure_bits(seed)
            if bits != full:
                found.add(bits)
    return found


def minimal_nontrivial_modules(
    g: Graph,
    p: AbParams,
    driver: Literal["batched", "tuple"] = "batched",
    jobs: int = 1,
) -> ModuleFamily:
    """All inclusion-minimal non-trivial modules of ``g``.

    Runs the closure from every vertex subset of size ``alpha + beta + 2``
    (colexicographic order), drops results equal to the whole vertex set, and
    keeps the inclusion-minimal survivors.  The default driver replays seeds
    through previously found modules to share work; ``driver="tuple"`` is the
    plain one-closure-per-seed reference, and both produce the same family.
    With ``jobs > 1`` the seed tuples are striped across a thread pool against
    the shared immutable graph (each worker keeps its own replay cache), and
    the per-worker results are merged; output is independent of ``jobs``.
    """
    if driver not in ("batched", "tuple"):
        raise ValueError(f"unknown driver {driver!r}")
    k = p.degenerate_cap
    if g.n < k + 1:
        raise ValueError(
            f"graph of order {g.n} is degenerate for budgets "
            f"({p.alpha}, {p.beta}); no non-trivial modules exist"
        )
    seeds = list(_colex_tuples(g.n, k))
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        stripes = [seeds[i::jobs] for i in range(jobs)]
        found: set[int] = set()
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(lambda s: _closure_worker(g, p, driver, s), stripes):
                found |= part
    else:
        found = _closure_worker(g, p, driver, seeds)
    minimal = _minimal_filter([VertexSet(g.n, bits) for bits in found])
    return _canonical(minimal, p, MINIMAL_NONTRIVIAL)


def all_modules_oracle(
    g: Graph, p: AbParams, max_n: Optional[int] = None
) -> ModuleFamily:
    """Every module of ``g``, by checking the definition on all subsets.

    Deliberately self-contained: the membership test below recounts
    neighbours per subset instead of calling the splitter machinery, so the
    oracle stays an independent cross-check.
    """
    limits.check_cap(g.n, max_n, 14, "the all-modules oracle")
    n = g.n
    adj = g.adj_bits
    alpha, beta = p.alpha, p.beta
    members = []
    for bits in range(1 << n):
        size = bits.bit_count()
        ok = True
        rest = ((1 << n) - 1) & ~bits
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            rest ^= low
            c = (adj[x] & bits).bit_count()
            if c < size - alpha and c > beta:
                ok = False
                break
        if ok:
            members.append(VertexSet(n, bits))
    return _canonical(members, p, ALL_MODULES_ORACLE)


def covering(g: Graph, p: AbParams, driver: str = "batched") -> ModuleFamily:
    """Minimal non-trivial modules plus singletons for the uncovered vertices."""
    fam = minimal_nontrivial_modules(g, p, driver=driver)
    covered = 0
    for m in fam.members:
        covered |= m.bits
    extra = [
        VertexSet.from_ids(g.n, [v])
        for v in range(g.n)
        if not (covered >> v) & 1
    ]
    return _canonical(list(fam.members) + extra, p, COVERING)


@dataclass(frozen=True)
class PrimalityReport:
    """``prime`` plus a flag marking prime-by-degeneracy (order <= alpha+beta+2)."""

    prime: bool
    degenerate: bool


def primality(g: Graph, p: AbParams) -> PrimalityReport:
    if g.n <= p.degenerate_cap:
        return PrimalityReport(prime=True, degenerate=True)
    fam = minimal_nontrivial_modules(g, p)
    return PrimalityReport(prime=not fam.members, degenerate=False)


def is_prime(g: Graph, p: AbParams) -> bool:
    """True when the graph has only trivial modules."""
    return primality(g, p).prime


def is_brittle(
    g: Graph,
    p: AbParams,
    max_n: Optional[int] = None,
    mode: Literal["exact", "fast"] = "exact",
) -> Optional[bool]:
    """Whether every vertex subset of ``g`` is a module.

    Exact mode checks all subset sizes between ``alpha + beta + 2`` and
    ``n - 1`` (everything else is a module for free) and needs exponential
    time, hence the size cap.  Fast mode applies the sufficient degree test
    (minimum degree >= n - alpha, or maximum degree <= beta) and returns
    ``None`` when it cannot decide.
    """
    if mode == "fast":
        degs = g.degree_sequence() or (0,)
        if min(degs) >= g.n - p.alpha or max(degs) <= p.beta:
            return True
        return None
    limits.check_cap(g.n, max_n, 14, "the exact brittleness check")
    from itertools import combinations

    for size in range(p.degenerate_cap, g.n):
        for ids in combinations(range(g.n), size):
            if not is_ab_module(g, VertexSet.from_ids(g.n, ids), p):
                return False
    return True
