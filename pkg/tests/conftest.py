import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hyperchoquet import kernels

settings.register_profile("default", deadline=None, max_examples=100, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile every kernel once so that timed sections measure computation only."""
    vals = np.array([0.0, 0.5, 1.0])
    tab = kernels.nmu_table(vals, 2)
    mins = kernels.subset_min_table(vals, 0.0)
    maxs = kernels.subset_max_table(vals, 0.0)
    kernels.subset_and_table(np.array([0, 1, 3], dtype=np.int64), 3)
    kernels.subset_or_table(np.array([0, 1, 3], dtype=np.int64))
    kernels.formula_iii_sum(tab, mins, maxs)
    m = kernels.moebius_inplace(tab.copy(), 3)
    kernels.moebius_sum(m, mins)
    kernels.zeta_inplace(m, 3)
    kernels.find_nonadditive_pair(tab, 3, 1e-9)
    kernels.find_modularity_violation(tab, 3, 1e-9, 1)
