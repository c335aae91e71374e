"""The hyperspace measure ``N_mu`` and its dual.

``N_mu(H) = min{mu(E) : E in family, E not in H}``, with the minimum over an
empty selection (``H`` = the whole family) taken to be ``mu(X)``.  Values
are evaluated on demand; :func:`n_mu_table` materializes all ``2^p`` of them
for the exhaustive checks.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import FamilyTooLargeForEnumeration, InfiniteTotalMass, MissingEmptySet, MissingUniverseSet, NotComplementClosed, ShapeMismatch
from .measures import EPS, Check, MonotoneMeasure, constant_on_nonempty, dual_measure
from .setcore import HyperMask, is_closed_under_complements, popcount

TABLE_MAX_P = 20
ZERO_SET_MAX_P = 16
ADDITIVITY_MAX_P = 10


def n_mu(measure: MonotoneMeasure, hyper: HyperMask) -> float:
    fam = measure.family
    inside = fam.hyper_bools(hyper)
    if inside.all():
        return measure.total
    return float(measure.values[~inside].min())


def n_mu_table(measure: MonotoneMeasure) -> np.ndarray:
    """All values of ``N_mu`` indexed by hypermask."""
    p = measure.family.p
    if p > TABLE_MAX_P:
        raise FamilyTooLargeForEnumeration(f"2^{p} hypermasks exceed the cap p <= {TABLE_MAX_P}")
    return kernels.nmu_table(np.ascontiguousarray(measure.values), measure.family.x_index)


def pi_mu_dual(measure: MonotoneMeasure, hyper: HyperMask) -> float:
    """Maxitive dual ``sup{mu^d(E^c) : E in H}``; 0 for the empty hypermask."""
    dual = dual_measure(measure)
    full = measure.family.universe.full
    return max((dual(full ^ e) for e in measure.family.members_of(hyper)), default=0.0)


def strict_cut(measure: MonotoneMeasure, alpha: float) -> HyperMask:
    """Hypermask of ``{mu < alpha}``."""
    return sum(1 << i for i, v in enumerate(measure.values) if v < alpha)


def weak_cut(measure: MonotoneMeasure, alpha: float) -> HyperMask:
    """Hypermask of ``{mu <= alpha}``."""
    return sum(1 << i for i, v in enumerate(measure.values) if v <= alpha)


def n_mu_equals(measure: MonotoneMeasure, hyper: HyperMask, alpha: float) -> bool:
    """Check the cut characterization of ``N_mu(H)`` against direct evaluation.

    Verifies, for the given ``alpha`` (also used as the ``beta`` bound):

    * ``alpha <= N(H)``  iff  ``{mu < alpha}`` is inside ``H``;
    * ``N(H) < alpha``   iff  some ``E`` in ``{mu < alpha}`` lies outside ``H``;
    * ``N(H) == alpha``  iff  ``{mu < alpha}`` is inside ``H`` and the smallest
      value outside ``H`` is at most ``alpha``.

    For ``H`` equal to the whole family nothing lies outside it, and the
    convention ``N = mu(X)`` acts as if ``X`` were the only set outside.
    """
    fam = measure.family
    hyper = fam.check_hyper(hyper)
    value = n_mu(measure, hyper)
    outside = fam.full_hyper & ~hyper
    if outside == 0:
        outside = 1 << fam.x_index
    outside_vals = [measure.at(i) for i in range(fam.p) if outside >> i & 1]
    below = strict_cut(measure, alpha)
    below_inside = below & ~hyper == 0 and (hyper != fam.full_hyper or measure.total >= alpha)
    below_outside = any(v < alpha for v in outside_vals)
    ok_a = (alpha <= value) == below_inside
    ok_b = (value < alpha) == below_outside
    ok_c = (value == alpha) == (below_inside and min(outside_vals) <= alpha)
    return ok_a and ok_b and ok_c


# -- closed forms from the worked examples; used as independent oracles ----


def counting_oracle(measure: MonotoneMeasure, hyper: HyperMask) -> int:
    """Case analysis of ``N`` for the counting measure on the full powerset.

    ``0`` if the empty set is not selected, otherwise the smallest ``k`` such
    that a ``k``-element set is missing from ``H`` while every smaller set is
    in ``H``; ``n`` when only ``X`` (or nothing) is missing.
    """
    fam = measure.family
    n = fam.universe.n
    if fam.p != 1 << n:
        raise ShapeMismatch("counting oracle needs the full powerset family")
    if 0 not in fam.members_of(hyper):
        return 0
    missing = [m for m in fam.members if not hyper >> fam.index_of(m) & 1]
    if all(m == fam.universe.full for m in missing):
        return n
    for k in range(1, n):
        if any(popcount(m) == k for m in missing) and all(popcount(m) >= k for m in missing):
            return k
    raise AssertionError("unreachable: cases are exhaustive")


def weakest_oracle(measure: MonotoneMeasure, hyper: HyperMask) -> int:
    """1 if ``H`` is the whole family or the whole family minus ``X``, else 0."""
    fam = measure.family
    if not fam.has_empty:
        raise ShapeMismatch("weakest capacity needs the empty set in the family")
    full = fam.full_hyper
    return int(hyper in (full, full ^ (1 << fam.x_index)))


def strongest_oracle(measure: MonotoneMeasure, hyper: HyperMask) -> int:
    """1 iff the empty set is selected by ``H``."""
    fam = measure.family
    if not fam.has_empty:
        raise ShapeMismatch("strongest capacity needs the empty set in the family")
    return hyper & 1


# -- finite characterizations ------------------------------------------------


def zero_set_check(measure: MonotoneMeasure) -> bool:
    """Exhaustively verify the description of ``N_mu`` null sets and range.

    (a) ``N(H) = 0`` iff some ``E`` outside ``H`` has ``mu(E) = 0``;
    (b) ``N({empty}) = 0`` iff at least two members are ``mu``-null;
    (c) the set of values of ``N`` equals the set of values of ``mu``.
    """
    fam = measure.family
    if not fam.has_empty:
        raise MissingEmptySet("zero-set characterization needs the empty set in the family")
    if fam.p > ZERO_SET_MAX_P:
        raise FamilyTooLargeForEnumeration(f"p={fam.p} exceeds {ZERO_SET_MAX_P}")
    table = n_mu_table(measure)
    zero_members = 0
    for i, v in enumerate(measure.values):
        if v == 0:
            zero_members |= 1 << i
    full = fam.full_hyper
    for hyper in range(1 << fam.p):
        if (table[hyper] == 0) != bool(zero_members & (full ^ hyper)):
            return False
    if (table[1] == 0) != (popcount(zero_members) > 1):
        return False
    return set(np.unique(table).tolist()) == set(np.unique(measure.values).tolist())


class AdditivityVerdict(NamedTuple):
    constant_on_nonempty: bool
    n_mu_additive: bool
    witness: tuple[HyperMask, HyperMask] | None

    @property
    def agree(self) -> bool:
        return self.constant_on_nonempty == self.n_mu_additive


def find_nonadditive_pair(measure: MonotoneMeasure, tol: float = EPS) -> tuple[HyperMask, HyperMask] | None:
    """First disjoint pair of hypermasks on which ``N_mu`` is not additive."""
    p = measure.family.p
    if p > ADDITIVITY_MAX_P:
        raise FamilyTooLargeForEnumeration(f"3^{p} disjoint pairs exceed the cap p <= {ADDITIVITY_MAX_P}")
    a, b = kernels.find_nonadditive_pair(n_mu_table(measure), p, tol)
    return None if a < 0 else (int(a), int(b))


def additivity_characterization(measure: MonotoneMeasure, tol: float = EPS) -> AdditivityVerdict:
    """Compare "mu is constant on nonempty sets" with exhaustive additivity of ``N_mu``."""
    fam = measure.family
    if not fam.has_empty:
        raise MissingEmptySet("additivity characterization needs the empty set in the family")
    if fam.universe.full not in fam:
        raise MissingUniverseSet("additivity characterization needs X in the family")
    if math.isinf(measure.total):
        raise InfiniteTotalMass("additivity characterization needs a finite mu(X)")
    witness = find_nonadditive_pair(measure, tol)
    return AdditivityVerdict(constant_on_nonempty(measure, tol), witness is None, witness)


# -- predicates on the materialized table (exhaustive over hypermask pairs) ----


def _pair_table(measure: MonotoneMeasure) -> tuple[np.ndarray, int]:
    p = measure.family.p
    if p > ADDITIVITY_MAX_P:
        raise FamilyTooLargeForEnumeration(f"pairwise hypermask checks are capped at p <= {ADDITIVITY_MAX_P}")
    return n_mu_table(measure), p


def _first(bad: np.ndarray, a: int, bs: np.ndarray) -> Check | None:
    hit = np.flatnonzero(bad)
    return Check(False, (a, int(bs[hit[0]]))) if hit.size else None


def n_mu_is_minitive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    """``N(A & B) == min(N(A), N(B))`` for all hypermask pairs."""
    table, p = _pair_table(measure)
    hypers = np.arange(1 << p)
    for a in range(1 << p):
        with np.errstate(invalid="ignore"):
            got, want = table[a & hypers], np.minimum(table[a], table)
            failed = _first(~((got == want) | (np.abs(got - want) <= tol)), a, hypers)
        if failed:
            return failed
    return Check(True)


def n_mu_is_monotone(measure: MonotoneMeasure) -> Check:
    table, p = _pair_table(measure)
    for h in range(1 << p):
        for i in range(p):
            if not h >> i & 1 and table[h] > table[h | 1 << i]:
                return Check(False, (h, h | 1 << i))
    return Check(True)


def n_mu_is_superadditive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    table, p = _pair_table(measure)
    hypers = np.arange(1 << p)
    for a in range(1 << p):
        bs = hypers[(hypers & a) == 0]
        with np.errstate(invalid="ignore"):
            failed = _first(table[a | bs] < table[a] + table[bs] - tol, a, bs)
        if failed:
            return failed
    return Check(True)


def n_mu_is_additive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    witness = find_nonadditive_pair(measure, tol)
    return Check(witness is None, witness)


def n_mu_is_supermodular(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    table, p = _pair_table(measure)
    a, b = kernels.find_modularity_violation(table, p, tol, 1)
    return Check(True) if a < 0 else Check(False, (int(a), int(b)))


def n_mu_is_submodular(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    table, p = _pair_table(measure)
    a, b = kernels.find_modularity_violation(table, p, tol, -1)
    return Check(True) if a < 0 else Check(False, (int(a), int(b)))


def dual_pair_check(measure: MonotoneMeasure, tol: float = EPS) -> bool:
    """``N_mu(H) == N_mu(all) - Pi_{mu^d}(all \\ H)`` for every hypermask ``H``."""
    fam = measure.family
    if not is_closed_under_complements(fam):
        raise NotComplementClosed("dual measure needs a complement-closed family")
    if fam.p > ZERO_SET_MAX_P:
        raise FamilyTooLargeForEnumeration(f"p={fam.p} exceeds {ZERO_SET_MAX_P}")
    dual = dual_measure(measure)
    full = fam.universe.full
    dual_of_comp = np.array([dual(full ^ m) for m in fam.members])
    pi_table = kernels.subset_max_table(dual_of_comp, 0.0)
    table = n_mu_table(measure)
    top = table[fam.full_hyper]
    comp = pi_table[::-1]
    return bool(np.all(np.abs(table - (top - comp)) <= tol))
