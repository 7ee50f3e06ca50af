#!/usr/bin/env python3
"""Compare the compiled and pure-Python counting kernels.

Runs the raw neighbour-count primitive at several graph sizes, then one
end-to-end minimal-module enumeration per backend.  Invoke from the repo
root after building the extension:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import os
import random
import statistics
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from abmod import kernels  # noqa: E402
from abmod.io import gen_random  # noqa: E402


def time_call(fn, repeats=7):
    best = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best.append(time.perf_counter() - start)
    return statistics.median(best)


def bench_primitives():
    from abmod import _kernel_py

    have_c = "c" in kernels.available_backends()
    print("kernel primitives, median of 7 runs (us per call)")
    print(f"{'n':>6} {'p':>5} {'counts py':>10} {'counts c':>10} {'mask py':>10} {'mask c':>10}")
    rng = random.Random(1)
    for n, p in [(100, 0.3), (500, 0.1), (1000, 0.05), (4000, 0.01), (10000, 0.004)]:
        g = gen_random(n, p, 17)
        query = rng.getrandbits(n) | 1
        size = query.bit_count()
        loops = max(1, 200_000 // n)

        def timed(fn):
            def run():
                for _ in range(loops):
                    fn()

            return time_call(run) / loops * 1e6

        t_counts_py = timed(lambda: kernels.counts_vs_set_py(g, query))
        t_mask_py = timed(
            lambda: _kernel_py.splitter_bits(g.adj_bits, query, size, 1, 1)
        )
        if have_c:
            kernels.counts_vs_set_c(g, query)  # warm row packing
            from abmod import _kernel

            rows = kernels._packed_rows(g)
            t_counts_c = timed(lambda: kernels.counts_vs_set_c(g, query))
            t_mask_c = timed(
                lambda: int.from_bytes(
                    _kernel.splitter_bits(
                        rows, kernels._pack_query(query, n), size, 1, 1
                    ).tobytes(),
                    "little",
                )
            )
            print(
                f"{n:>6} {p:>5} {t_counts_py:>10.1f} {t_counts_c:>10.1f} "
                f"{t_mask_py:>10.1f} {t_mask_c:>10.1f}"
            )
        else:
            print(f"{n:>6} {p:>5} {t_counts_py:>10.1f} {'n/a':>10} {t_mask_py:>10.1f} {'n/a':>10}")


END_TO_END = {
    "minimal-module enumeration (alpha=1, beta=0, n=36, deg~8; refinement-bound)": (
        "from abmod.io import gen_random;"
        "from abmod.enumeration import minimal_nontrivial_modules;"
        "from abmod.graph import AbParams;"
        "g = gen_random(36, 8/35, 5);"
        "t = time.perf_counter();"
        "minimal_nontrivial_modules(g, AbParams(1, 0));"
        "print(f'{time.perf_counter() - t:.3f}s')"
    ),
    "growing closures at target scale (alpha=0, beta=0, n=2000, p=0.05; mask-kernel-bound)": (
        "from abmod.io import gen_random;"
        "from abmod.abmodule import closure_naive;"
        "from abmod.graph import AbParams, VertexSet;"
        "g = gen_random(2000, 0.05, 5);"
        "seeds = [VertexSet.from_ids(2000, (k, k + 1)) for k in range(0, 120, 2)];"
        "t = time.perf_counter();"
        "res = [closure_naive(g, s, AbParams(0, 0)).result for s in seeds];"
        "assert all(len(r) == 2000 for r in res);"
        "print(f'{time.perf_counter() - t:.3f}s')"
    ),
}


def bench_end_to_end():
    for title, body in END_TO_END.items():
        print(f"\n{title}")
        script = "import sys, time; sys.path.insert(0, 'src');" + body
        for backend in kernels.available_backends():
            env = dict(os.environ, ABMOD_KERNEL=backend)
            out = subprocess.run(
                [sys.executable, "-c", script],
                env=env,
                capture_output=True,
                text=True,
                cwd=os.path.join(os.path.dirname(__file__), ".."),
            )
            print(f"  backend {backend:>6}: {out.stdout.strip() or out.stderr.strip()}")


if __name__ == "__main__":
    print(f"active backend: {kernels.backend_name()}")
    bench_primitives()
    bench_end_to_end()
