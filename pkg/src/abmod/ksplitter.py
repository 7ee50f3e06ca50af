"""Modules with a bounded number of classical splitters.

A classical splitter of ``M`` is an outside vertex adjacent to some but not
all of ``M``; a k-splitter module tolerates up to ``k`` of them.  The family
has union/intersection/difference bounds but no closure operator (minimal
k-splitter supersets of a set need not be unique), so this stays a predicate
and law-checker with no decomposition built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels, limits
from .graph import Graph, VertexSet, complement


@dataclass(frozen=True)
class KSplitterReport:
    classical_splitters: VertexSet
    k: int
    is_k_module: bool


def classical_splitters(g: Graph, m: VertexSet) -> VertexSet:
    """Outside vertices adjacent to some but not all members of ``m``."""
    if m.n != g.n:
        raise ValueError("vertex set does not match graph")
    size = len(m)
    cnt = kernels.counts_vs_set(g, m.bits)
    bits = 0
    for x in m.complement():
        if 0 < cnt[x] < size:
            bits |= 1 << x
    return VertexSet(g.n, bits)


def k_splitter_report(g: Graph, m: VertexSet, k: int) -> KSplitterReport:
    if k < 0:
        raise ValueError("splitter budget must be non-negative")
    spl = classical_splitters(g, m)
    return KSplitterReport(spl, k, len(spl) <= k)


def minimal_k_splitter_supersets(
    g: Graph, a: VertexSet, k: int, max_n: Optional[int] = None
) -> tuple[VertexSet, ...]:
    """Inclusion-minimal supersets of ``a`` that are k-splitter modules.

    Several can coexist, which is exactly why no closure operator exists for
    this relaxation.  Exhaustive over the outside, hence size-capped.
    """
    limits.check_cap(g.n, max_n, 16, "the minimal k-splitter superset search")
    outside = a.complement().ids()
    qualifying: list[int] = []
    for mask in range(1 << len(outside)):
        bits = a.bits
        for i, v in enumerate(outside):
            if (mask >> i) & 1:
                bits |= 1 << v
        if len(classical_splitters(g, VertexSet(g.n, bits))) <= k:
            qualifying.append(bits)
    minimal = [
        b
        for b in qualifying
        if not any(o != b and o & ~b == 0 for o in qualifying)
    ]
    return tuple(
        sorted((VertexSet(g.n, b) for b in minimal), key=lambda m: m.ids())
    )


@dataclass(frozen=True)
class KSplitterLawReport:
    """Counts of checked cases and any violations, per law."""

    checked: dict[str, int]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def k_splitter_laws_check(
    g: Graph, k: int, max_n: Optional[int] = None
) -> KSplitterLawReport:
    """Exhaustively verify the k-splitter closure laws on one graph.

    Checks, over all subsets and subset pairs: supersets of a set keep its
    splitters (minus absorbed ones); the splitter set is invariant under graph
    complement; sets of size <= 1 or >= n - k are k-splitter modules; the
    union and intersection of two overlapping k-splitter modules have at most
    2k splitters; the difference of two non-trivial k-splitter modules has at
    most ``k + |A ∩ B|`` splitters.
    """
    limits.check_cap(g.n, max_n, 8, "the exhaustive k-splitter law check")
    n = g.n
    gc = complement(g)
    counts: dict[int, int] = {}
    spl_bits: dict[int, int] = {}
    spl_bits_c: dict[int, int] = {}
    for bits in range(1 << n):
        s = VertexSet(n, bits)
        spl = classical_splitters(g, s)
        spl_bits[bits] = spl.bits
        counts[bits] = len(spl)
        spl_bits_c[bits] = classical_splitters(gc, s).bits

    checked = {
        "superset_monotonicity": 0,
        "complement_invariance": 0,
        "trivial_sets": 0,
        "union_2k": 0,
        "intersection_2k": 0,
        "difference_bound": 0,
    }
    violations: list[str] = []

    def note(law: str, detail: str) -> None:
        violations.append(f"{law}: {detail}")

    for bits in range(1 << n):
        checked["complement_invariance"] += 1
        if spl_bits[bits] != spl_bits_c[bits]:
            note("complement_invariance", f"set {VertexSet(n, bits).ids()}")
        size = bits.bit_count()
        if size <= 1 or size >= n - k:
            checked["trivial_sets"] += 1
            if counts[bits] > k:
                note("trivial_sets", f"set {VertexSet(n, bits).ids()}")

    for a_bits in range(1 << n):
        sa = spl_bits[a_bits]
        for b_bits in range(a_bits + 1, 1 << n):
            if a_bits & b_bits == 0:
                overlapping = False
            else:
                overlapping = True
            # splitters survive into supersets that exclude them
            if a_bits & ~b_bits == 0:  # a subset of b
                checked["superset_monotonicity"] += 1
                if sa & ~b_bits & ~spl_bits[b_bits]:
                    note(
                        "superset_monotonicity",
                        f"{VertexSet(n, a_bits).ids()} ⊆ {VertexSet(n, b_bits).ids()}",
                    )
            if counts[a_bits] <= k and counts[b_bits] <= k:
                if overlapping:
                    checked["union_2k"] += 1
                    if counts[a_bits | b_bits] > 2 * k:
                        note(
                            "union_2k",
                            f"{VertexSet(n, a_bits).ids()} ∪ {VertexSet(n, b_bits).ids()}",
                        )
                    checked["intersection_2k"] += 1
                    if counts[a_bits & b_bits] > 2 * k:
                        note(
                            "intersection_2k",
                            f"{VertexSet(n, a_bits).ids()} ∩ {VertexSet(n, b_bits).ids()}",
                        )
                a_trivial = bits_trivial(a_bits, n, k)
                b_trivial = bits_trivial(b_bits, n, k)
                if not a_trivial and not b_trivial:
                    checked["difference_bound"] += 1
                    cap = k + (a_bits & b_bits).bit_count()
                    if counts[a_bits & ~b_bits] > cap or counts[b_bits & ~a_bits] > cap:
                        note(
                            "difference_bound",
                            f"{VertexSet(n, a_bits).ids()} vs {VertexSet(n, b_bits).ids()}",
                        )
    return KSplitterLawReport(checked, tuple(violations))


def bits_trivial(bits: int, n: int, k: int) -> bool:
    size = bits.bit_count()
    return size <= 1 or size >= n - k
