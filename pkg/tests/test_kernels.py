import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import DYADIC
from hyperchoquet import kernels

nb = pytest.importorskip("numba") and kernels.numba_backend()
np_ = kernels.numpy_backend


def vectors(max_p=10, values=DYADIC):
    return st.integers(1, max_p).flatmap(
        lambda p: st.lists(st.sampled_from(values), min_size=p, max_size=p).map(np.array)
    )


@given(vectors())
def test_nmu_table_backends_agree(values):
    x = len(values) - 1
    a, b = np_.nmu_table(values, x), nb.nmu_table(values, x)
    assert np.array_equal(a, b)
    members = list(range(len(values)))
    want = oracles.n_mu_table(values.tolist(), members, x)
    assert a.tolist() == want


@given(vectors())
def test_subset_tables_agree(values):
    for name in ("subset_min_table", "subset_max_table"):
        a, b = getattr(np_, name)(values, 0.0), getattr(nb, name)(values, 0.0)
        assert np.array_equal(a, b)
    masks = (values * 8).astype(np.int64)
    assert np.array_equal(np_.subset_and_table(masks, 0), nb.subset_and_table(masks, 0))
    assert np.array_equal(np_.subset_or_table(masks), nb.subset_or_table(masks))


@given(vectors())
def test_lattice_transforms_agree(values):
    p = len(values)
    tab = np_.nmu_table(values, p - 1)
    m1, m2 = np_.moebius_inplace(tab.copy(), p), nb.moebius_inplace(tab.copy(), p)
    assert np.allclose(m1, m2, atol=1e-12)
    assert np.allclose(np_.zeta_inplace(m1.copy(), p), tab, atol=1e-12)
    assert np.allclose(nb.zeta_inplace(m2.copy(), p), tab, atol=1e-12)
    mins = np_.subset_min_table(values, 0.0)
    maxs = np_.subset_max_table(values, 0.0)
    assert abs(np_.formula_iii_sum(tab, mins, maxs) - nb.formula_iii_sum(tab, mins, maxs)) <= 1e-12
    assert abs(np_.moebius_sum(m1, mins) - nb.moebius_sum(m1, mins)) <= 1e-12


@given(vectors(max_p=8))
def test_search_kernels_agree(values):
    p = len(values)
    tab = np_.nmu_table(values, p - 1)
    assert tuple(np_.find_nonadditive_pair(tab, p, 1e-12)) == tuple(nb.find_nonadditive_pair(tab, p, 1e-12))
    for sign in (1, -1):
        a = tuple(np_.find_modularity_violation(tab, p, 1e-12, sign))
        b = tuple(nb.find_modularity_violation(tab, p, 1e-12, sign))
        assert (a[0] < 0) == (b[0] < 0)


def _backend_in_subprocess(flag):
    env = dict(os.environ)
    env.pop("HYPERCHOQUET_NO_JIT", None)
    if flag is not None:
        env["HYPERCHOQUET_NO_JIT"] = flag
    out = subprocess.run(
        [sys.executable, "-c", "from hyperchoquet import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _backend_in_subprocess("1") == "numpy"
    assert _backend_in_subprocess("0") == "numba"
    assert _backend_in_subprocess(None) == "numba"
