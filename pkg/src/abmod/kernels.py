"""Backend selection for the hot neighbour-counting kernel.

Two interchangeable kernels compute per-vertex neighbour counts against a
query set: a compiled popcount loop over packed 64-bit rows and a pure-Python
one over int bitmasks.  Python ints already popcount a small graph faster
than the compiled path amortizes its call overhead, so auto mode switches to
the extension only past a size threshold (about where the benchmark shows the
crossover).  ``ABMOD_KERNEL=python`` or ``ABMOD_KERNEL=c`` forces one backend
outright (forcing ``c`` without the extension built is an error), and both
entry points stay importable for the benchmark in ``benchmarks/``.
"""

from __future__ import annotations

import os

from . import _kernel_py
from .graph import Graph

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

_choice = os.environ.get("ABMOD_KERNEL", "auto").lower()
if _choice not in ("auto", "c", "python"):
    raise RuntimeError(f"ABMOD_KERNEL must be auto, c or python, not {_choice!r}")
if _choice == "c" and _compiled is None:
    raise RuntimeError("ABMOD_KERNEL=c but the compiled kernel is not built")

_USE_COMPILED = _compiled is not None and _choice != "python"
_FORCE_COMPILED = _compiled is not None and _choice == "c"

# Measured crossovers (benchmarks/bench_kernels.py): below these orders the
# int kernel wins on call and packing overhead alone.
COMPILED_MIN_N_COUNTS = 64
COMPILED_MIN_N_MASKS = 24


def backend_name() -> str:
    return "c" if _USE_COMPILED else "python"


def available_backends() -> tuple[str, ...]:
    return ("c", "python") if _compiled is not None else ("python",)


def _packed_rows(g: Graph):
    import numpy as np

    if g._words is None:
        nwords = max(1, (g.n + 63) // 64)
        rows = np.zeros((g.n, nwords), dtype=np.uint64)
        for u, bits in enumerate(g.adj_bits):
            rows[u, :] = np.frombuffer(
                bits.to_bytes(nwords * 8, "little"), dtype=np.uint64
            )
        # cache slot; graph data stays immutable.  Concurrent first calls can
        # both build the identical array, the last assignment wins harmlessly.
        g._words = rows
    return g._words


def _pack_query(bits: int, n: int):
    import numpy as np

    nwords = max(1, (n + 63) // 64)
    return np.frombuffer(bits.to_bytes(nwords * 8, "little"), dtype=np.uint64)


def counts_vs_set(g: Graph, query_bits: int) -> list[int]:
    """Per-vertex count of neighbours inside the query set.

    Always a plain list of ints, so downstream classification loops index at
    Python-int speed regardless of the backend that produced the counts.
    """
    if _use_compiled(g, COMPILED_MIN_N_COUNTS):
        return counts_vs_set_c(g, query_bits)
    return counts_vs_set_py(g, query_bits)


def counts_vs_set_py(g: Graph, query_bits: int) -> list[int]:
    """Pure-Python path, kept callable directly for benchmarks and tests."""
    return _kernel_py.counts_vs_set(g.adj_bits, query_bits)


def counts_vs_set_c(g: Graph, query_bits: int) -> list[int]:
    """Compiled path, kept callable directly for benchmarks and tests."""
    if _compiled is None:
        raise RuntimeError("compiled kernel is not built")
    out = _compiled.counts_vs_set(_packed_rows(g), _pack_query(query_bits, g.n))
    return out.tolist()


def _use_compiled(g: Graph, threshold: int) -> bool:
    return _USE_COMPILED and g.n > 0 and (g.n >= threshold or _FORCE_COMPILED)


def splitter_bits(g: Graph, query_bits: int, size: int, alpha: int, beta: int) -> int:
    """Bitmask of the splitters of the query set (threshold window strict)."""
    if _use_compiled(g, COMPILED_MIN_N_MASKS):
        words = _compiled.splitter_bits(
            _packed_rows(g), _pack_query(query_bits, g.n), size, alpha, beta
        )
        return int.from_bytes(words.tobytes(), "little")
    return _kernel_py.splitter_bits(g.adj_bits, query_bits, size, alpha, beta)


def first_splitter(g: Graph, query_bits: int, size: int, alpha: int, beta: int) -> int:
    """Lowest-id splitter of the query set, or -1 when there is none."""
    if _use_compiled(g, COMPILED_MIN_N_MASKS):
        return int(
            _compiled.first_splitter(
                _packed_rows(g), _pack_query(query_bits, g.n), size, alpha, beta
            )
        )
    return _kernel_py.first_splitter(g.adj_bits, query_bits, size, alpha, beta)
