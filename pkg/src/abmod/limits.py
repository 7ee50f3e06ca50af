"""Size caps for the exponential-time verification paths.

Every brute-force routine takes an optional ``max_n``; when the caller leaves
it unset, the cap comes from the ``ABMOD_MAX_ORACLE_N`` environment variable,
falling back to the routine's built-in default.
"""

from __future__ import annotations

import os

ENV_VAR = "ABMOD_MAX_ORACLE_N"


def oracle_cap(requested: int | None, default: int) -> int:
    if requested is not None:
        return requested
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return default


def check_cap(n: int, requested: int | None, default: int, what: str) -> None:
    cap = oracle_cap(requested, default)
    if n > cap:
        raise ValueError(
            f"{what} is exponential and capped at n <= {cap} (got n={n}); "
            f"raise the cap via max_n or {ENV_VAR}"
        )
