"""Test session setup.

The numba thread pool is sized before numba's first import so the
worker-count determinism tests can genuinely run 1, 4, and 16 workers
even on a single-core machine (oversubscription is fine: outputs are
scheduling-independent by design, which is exactly what those tests
check). The threading layer is pinned to the portable workqueue backend.
"""

import os

os.environ.setdefault("NUMBA_NUM_THREADS", "16")
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

import pytest


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile every jitted kernel once so timed assertions start warm."""
    from few_distances import _kernels

    _kernels.warm_all()
    import oracles

    oracles.warm_all()
    return True
