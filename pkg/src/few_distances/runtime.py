"""Worker-pool configuration for the jitted kernels.

Kept numba-import-free at module level on purpose: when called before the
first numba import it can still size the thread pool via the environment,
which is the only moment the pool size is adjustable upward.
"""

from __future__ import annotations

import os
import sys


def configure_workers(requested: int) -> int:
    """Request a kernel worker count; returns the effective count.

    The effective count is clamped to the numba thread pool size. Results
    of every scan in this package are independent of the worker count by
    construction (idempotent table marking, minimum-rank witness
    reduction), so clamping changes speed only, never output.
    """
    if not isinstance(requested, int) or isinstance(requested, bool) or requested < 1:
        raise ValueError(f"workers must be a positive int, got {requested!r}")
    if "numba" not in sys.modules:
        # Pool size is fixed at first import; raise it preemptively.
        env = os.environ.get("NUMBA_NUM_THREADS")
        if env is None or int(env) < requested:
            os.environ["NUMBA_NUM_THREADS"] = str(requested)
    import numba

    effective = min(requested, numba.config.NUMBA_NUM_THREADS)
    numba.set_num_threads(effective)
    return effective
