"""Pure-Python counting kernel, the fallback when the extension is not built.

Python integers already do word-at-a-time AND and popcount, so this is a
tight list comprehension rather than a bit-by-bit loop.
"""

from __future__ import annotations

from typing import Sequence


def counts_vs_set(adj_bits: Sequence[int], query: int) -> list[int]:
    """``cnt[x] = |N(x) & query|`` for every vertex ``x``."""
    return [(bits & query).bit_count() for bits in adj_bits]


def splitter_bits(
    adj_bits: Sequence[int], query: int, size: int, alpha: int, beta: int
) -> int:
    """Bitmask of outside vertices with ``beta < count < size - alpha``."""
    hi = size - alpha
    if hi - beta < 2:
        return 0
    out = 0
    for x, bits in enumerate(adj_bits):
        if (query >> x) & 1:
            continue
        if beta < (bits & query).bit_count() < hi:
            out |= 1 << x
    return out


def first_splitter(
    adj_bits: Sequence[int], query: int, size: int, alpha: int, beta: int
) -> int:
    """Lowest-id splitter of the query set, or -1 when it is a module."""
    hi = size - alpha
    if hi - beta < 2:
        return -1
    for x, bits in enumerate(adj_bits):
        if (query >> x) & 1:
            continue
        if beta < (bits & query).bit_count() < hi:
            return x
    return -1
