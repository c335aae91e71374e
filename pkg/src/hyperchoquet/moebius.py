"""Möbius representation of ``N_mu`` and the Möbius route to the integral.

For a finite family the allocation sends a subfamily ``H`` to the set of
its nonempty subfamilies, so the transformed input on the atom ``{H}`` is
``min{T(E) : E in H}`` and the integral becomes
``sum_{H != {}} M({H}) * min_{E in H} T(E)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .aggregation import TTable
from .errors import EmptyAtom, FamilyTooLargeForEnumeration, ShapeMismatch
from .hypermeasure import n_mu_table
from .measures import MonotoneMeasure
from .setcore import HyperMask, SetFamily, iter_submasks

MOEBIUS_MAX_P = 20
CUT_CHECK_MAX_P = 16


@dataclass(frozen=True, eq=False)
class MoebiusTable:
    """Signed Möbius masses indexed by hypermask.

    Entry 0 equals ``N_mu`` of the empty hypermask, i.e. the smallest value
    of ``mu``; it is 0 whenever ``mu`` vanishes on the empty set.
    """

    family: SetFamily
    entries: np.ndarray

    def __getitem__(self, hyper: HyperMask) -> float:
        return float(self.entries[hyper])

    def nonzero(self, tol: float = 0.0) -> dict[HyperMask, float]:
        return {int(h): float(self.entries[h]) for h in np.flatnonzero(np.abs(self.entries) > tol)}


def _check_p(p: int, cap: int) -> None:
    if p > cap:
        raise FamilyTooLargeForEnumeration(f"2^{p} hypermasks exceed the cap p <= {cap}")


def moebius_transform(mu: MonotoneMeasure) -> MoebiusTable:
    """``M({H}) = sum_{G subset H} (-1)^{|H \\ G|} N_mu(G)`` via the fast lattice transform."""
    p = mu.family.p
    _check_p(p, MOEBIUS_MAX_P)
    tab = kernels.moebius_inplace(n_mu_table(mu), p)
    tab.flags.writeable = False
    return MoebiusTable(mu.family, tab)


def zeta(table: MoebiusTable, hyper: HyperMask) -> float:
    """Sum of Möbius masses over the subfamilies of ``hyper``."""
    hyper = table.family.check_hyper(hyper)
    return float(sum(table.entries[g] for g in iter_submasks(hyper)))


def zeta_table(table: MoebiusTable) -> np.ndarray:
    """All zeta sums at once; inverse of :func:`moebius_transform`."""
    return kernels.zeta_inplace(np.array(table.entries, dtype=np.float64), table.family.p)


def t_h_atom(T: TTable, hyper: HyperMask) -> float:
    """Transformed input on the atom ``{H}``: ``min{T(E) : E in H}``."""
    hyper = T.family.check_hyper(hyper)
    if hyper == 0:
        raise EmptyAtom("atoms are nonempty subfamilies")
    return float(T.values[T.family.hyper_bools(hyper)].min())


def integrate_moebius(T: TTable, mu: MonotoneMeasure) -> float:
    if T.family.members != mu.family.members:
        raise ShapeMismatch("T and mu must live on the same family")
    table = moebius_transform(mu)
    mins = kernels.subset_min_table(np.ascontiguousarray(T.values), 0.0)
    return float(kernels.moebius_sum(table.entries, mins))


def allocation_cut_check(T: TTable, alphas: Sequence[float] | None = None) -> bool:
    """Check ``{atoms with T^h >= a} = nonempty subfamilies of {T >= a}`` for each ``a``.

    The default grid is 0, every value of ``T``, the midpoints between them
    and one point above the maximum.
    """
    p = T.family.p
    _check_p(p, CUT_CHECK_MAX_P)
    if alphas is None:
        vals = np.unique(np.concatenate(([0.0], T.values)))
        alphas = np.concatenate((vals, (vals[:-1] + vals[1:]) / 2, [vals[-1] + 1.0]))
    mins = kernels.subset_min_table(np.ascontiguousarray(T.values), 0.0)
    hypers = np.arange(1 << p, dtype=np.int64)
    for a in alphas:
        lhs = mins >= a
        lhs[0] = False
        cut = int(sum(1 << i for i, t in enumerate(T.values) if t >= a))
        rhs = (hypers & ~cut) == 0
        rhs[0] = False
        if not np.array_equal(lhs, rhs):
            return False
    return True
