"""numba-compiled twins of :mod:`hyperchoquet.kernels._numpy`.

Same signatures, same results (including which witness pair is reported
first); only the loop structure differs.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def nmu_table(values, x_index):
    p = values.shape[0]
    full = (1 << p) - 1
    tab = np.empty(full + 1)
    tab[full] = np.inf
    for h in range(full - 1, -1, -1):
        i = 0
        while (h >> i) & 1:
            i += 1
        tab[h] = min(values[i], tab[h | (1 << i)])
    tab[full] = values[x_index]
    return tab


@njit(cache=True)
def subset_min_table(values, empty_value):
    p = values.shape[0]
    tab = np.empty(1 << p)
    tab[0] = np.inf
    for h in range(1, 1 << p):
        low = h & -h
        i = 0
        while (low >> i) != 1:
            i += 1
        tab[h] = min(tab[h ^ low], values[i])
    tab[0] = empty_value
    return tab


@njit(cache=True)
def subset_max_table(values, empty_value):
    p = values.shape[0]
    tab = np.empty(1 << p)
    tab[0] = -np.inf
    for h in range(1, 1 << p):
        low = h & -h
        i = 0
        while (low >> i) != 1:
            i += 1
        tab[h] = max(tab[h ^ low], values[i])
    tab[0] = empty_value
    return tab


@njit(cache=True)
def subset_and_table(masks, empty_value):
    p = masks.shape[0]
    tab = np.empty(1 << p, dtype=np.int64)
    tab[0] = -1
    for h in range(1, 1 << p):
        low = h & -h
        i = 0
        while (low >> i) != 1:
            i += 1
        tab[h] = tab[h ^ low] & masks[i]
    tab[0] = empty_value
    return tab


@njit(cache=True)
def subset_or_table(masks):
    p = masks.shape[0]
    tab = np.zeros(1 << p, dtype=np.int64)
    for h in range(1, 1 << p):
        low = h & -h
        i = 0
        while (low >> i) != 1:
            i += 1
        tab[h] = tab[h ^ low] | masks[i]
    return tab


@njit(cache=True)
def moebius_inplace(tab, p):
    for i in range(p):
        bit = 1 << i
        for h in range(1 << p):
            if h & bit:
                tab[h] -= tab[h ^ bit]
    return tab


@njit(cache=True)
def zeta_inplace(tab, p):
    for i in range(p):
        bit = 1 << i
        for h in range(1 << p):
            if h & bit:
                tab[h] += tab[h ^ bit]
    return tab


@njit(cache=True)
def formula_iii_sum(ntab, mintab, maxtab):
    full = ntab.shape[0] - 1
    acc = 0.0
    for a in range(full + 1):
        gap = mintab[a] - maxtab[full ^ a]
        if gap > 0.0 and ntab[a] != 0.0:
            acc += ntab[a] * gap
    return acc


@njit(cache=True)
def moebius_sum(mtab, mintab):
    acc = 0.0
    for h in range(1, mtab.shape[0]):
        if mtab[h] != 0.0 and mintab[h] != 0.0:
            acc += mtab[h] * mintab[h]
    return acc


@njit(cache=True)
def _differs(lhs, rhs, tol):
    if lhs == rhs:
        return False
    return not (abs(lhs - rhs) <= tol)


@njit(cache=True)
def find_nonadditive_pair(tab, p, tol):
    full = (1 << p) - 1
    for a in range(full + 1):
        comp = full ^ a
        b = 0
        while True:
            if _differs(tab[a | b], tab[a] + tab[b], tol):
                return a, b
            b = (b - comp) & comp
            if b == 0:
                break
    return -1, -1


@njit(cache=True)
def find_modularity_violation(tab, p, tol, sign):
    size = 1 << p
    for a in range(size):
        for b in range(a + 1, size):
            diff = (tab[a | b] + tab[a & b]) - (tab[a] + tab[b])
            if sign * diff < -tol:
                return a, b
    return -1, -1
