"""Pure-numpy subset-lattice kernels.

Tables are indexed by hypermask: entry ``H`` refers to the subfamily whose
family indices are the set bits of ``H``.  Every table is built one bit at a
time by doubling, which keeps the work at O(2^p) numpy operations.
"""

import numpy as np


def _double(values, start, op):
    tab = np.array([start], dtype=values.dtype)
    for v in values:
        tab = np.concatenate((tab, op(tab, v)))
    return tab


def nmu_table(values, x_index):
    """``min`` of ``values`` over indices *outside* each hypermask."""
    tab = np.array([np.inf])
    for v in values:
        # new bit clear -> index excluded from H -> participates in the min
        tab = np.concatenate((np.minimum(tab, v), tab))
    tab[-1] = values[x_index]
    return tab


def subset_min_table(values, empty_value):
    tab = _double(np.asarray(values, dtype=np.float64), np.inf, np.minimum)
    tab[0] = empty_value
    return tab


def subset_max_table(values, empty_value):
    tab = _double(np.asarray(values, dtype=np.float64), -np.inf, np.maximum)
    tab[0] = empty_value
    return tab


def subset_and_table(masks, empty_value):
    tab = _double(np.asarray(masks, dtype=np.int64), np.int64(-1), np.bitwise_and)
    tab[0] = empty_value
    return tab


def subset_or_table(masks):
    return _double(np.asarray(masks, dtype=np.int64), np.int64(0), np.bitwise_or)


def moebius_inplace(tab, p):
    for i in range(p):
        view = tab.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return tab


def zeta_inplace(tab, p):
    for i in range(p):
        view = tab.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return tab


def _guarded_dot(a, b):
    keep = (a != 0) & (b != 0)
    return float(np.sum(a[keep] * b[keep]))


def formula_iii_sum(ntab, mintab, maxtab):
    # maxtab[full ^ A] == maxtab[full - A] == maxtab[::-1][A]
    gaps = np.maximum(0.0, mintab - maxtab[::-1])
    return _guarded_dot(ntab, gaps)


def moebius_sum(mtab, mintab):
    return _guarded_dot(mtab[1:], mintab[1:])


def _flag(lhs, rhs, tol):
    with np.errstate(invalid="ignore"):
        return ~((lhs == rhs) | (np.abs(lhs - rhs) <= tol))


def find_nonadditive_pair(tab, p, tol):
    size = 1 << p
    hypers = np.arange(size, dtype=np.int64)
    for a in range(size):
        bs = hypers[(hypers & a) == 0]
        bad = _flag(tab[a | bs], tab[a] + tab[bs], tol)
        hit = np.flatnonzero(bad)
        if hit.size:
            return a, int(bs[hit[0]])
    return -1, -1


def find_modularity_violation(tab, p, tol, sign):
    size = 1 << p
    hypers = np.arange(size, dtype=np.int64)
    for a in range(size):
        bs = hypers[a + 1:]
        with np.errstate(invalid="ignore"):
            diff = (tab[a | bs] + tab[a & bs]) - (tab[a] + tab[bs])
            bad = sign * diff < -tol
        hit = np.flatnonzero(bad)
        if hit.size:
            return a, int(bs[hit[0]])
    return -1, -1
