"""Subset-lattice kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly, unless the environment
variable ``HYPERCHOQUET_NO_JIT`` is set to a non-empty value other than
``0``.  Both implementations stay importable as :data:`numpy_backend` and
:func:`numba_backend` so tests and the benchmark can compare them.
"""

import os

from . import _numpy as numpy_backend

_NAMES = (
    "nmu_table",
    "subset_min_table",
    "subset_max_table",
    "subset_and_table",
    "subset_or_table",
    "moebius_inplace",
    "zeta_inplace",
    "formula_iii_sum",
    "moebius_sum",
    "find_nonadditive_pair",
    "find_modularity_violation",
)


def numba_backend():
    """Import and return the compiled backend module (raises ImportError)."""
    from . import _numba

    return _numba


def _select():
    if os.environ.get("HYPERCHOQUET_NO_JIT", "") not in ("", "0"):
        return numpy_backend, "numpy"
    try:
        return numba_backend(), "numba"
    except ImportError:
        return numpy_backend, "numpy"


_backend, BACKEND = _select()

nmu_table = _backend.nmu_table
subset_min_table = _backend.subset_min_table
subset_max_table = _backend.subset_max_table
subset_and_table = _backend.subset_and_table
subset_or_table = _backend.subset_or_table
moebius_inplace = _backend.moebius_inplace
zeta_inplace = _backend.zeta_inplace
formula_iii_sum = _backend.formula_iii_sum
moebius_sum = _backend.moebius_sum
find_nonadditive_pair = _backend.find_nonadditive_pair
find_modularity_violation = _backend.find_modularity_violation

__all__ = ["BACKEND", "numpy_backend", "numba_backend", *_NAMES]
