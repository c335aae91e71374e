"""Monotone set functions on a set family.

Values live in ``[0, inf]``; the infinite value is ``math.inf`` and plain
floats stand in for finite ones.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import (
    EmptyNotZero,
    InfiniteTotalMass,
    MissingEmptySet,
    MissingUniverseSet,
    NotComplementClosed,
    NotMonotone,
    PreconditionError,
    ShapeMismatch,
    TotalMassZero,
)
from .setcore import SetFamily, SubsetMask, Universe, is_closed_under_complements, powerset_family

INF = math.inf
EPS = 1e-9
FULL_SWEEP_MAX_P = 16


@dataclass(frozen=True, eq=False)
class MonotoneMeasure:
    """A validated monotone set function; build it with :func:`validate_monotone`."""

    family: SetFamily
    values: np.ndarray

    def __call__(self, mask: SubsetMask) -> float:
        return float(self.values[self.family.index_of(mask)])

    def at(self, i: int) -> float:
        return float(self.values[i])

    @property
    def total(self) -> float:
        """The value on ``X``."""
        return float(self.values[self.family.x_index])

    @property
    def universe(self) -> Universe:
        return self.family.universe

    def is_capacity(self, tol: float = EPS) -> bool:
        return abs(self.total - 1.0) <= tol

    def as_dict(self) -> dict[SubsetMask, float]:
        return {m: float(v) for m, v in zip(self.family.members, self.values)}


class Check(NamedTuple):
    """Outcome of a structural predicate; falsy on failure, with a witness."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def validate_monotone(family: SetFamily, values: Sequence[float], *, strict_empty: bool = True) -> MonotoneMeasure:
    """Check monotonicity and return the measure.

    With ``strict_empty=False`` a nonzero value on the empty set is accepted,
    which turns the result into a monotone set function rather than a
    monotone measure (minitive functions generated by a distribution without
    zeros are of this kind).
    """
    vals = np.array(values, dtype=np.float64)
    if vals.shape != (family.p,):
        raise ShapeMismatch(f"expected {family.p} values, got shape {vals.shape}")
    if np.isnan(vals).any() or (vals < 0).any():
        raise PreconditionError("measure values must be nonnegative numbers")
    if strict_empty and family.has_empty and vals[0] != 0:
        raise EmptyNotZero(f"mu(empty set) must be 0, got {vals[0]}")
    if not vals[family.x_index] > 0:
        raise TotalMassZero("mu(X) must be positive")
    masks = family.mask_array
    # subset[i, j]: member i is a subset of member j
    subset = (masks[:, None] & masks[None, :]) == masks[:, None]
    bad = subset & (vals[:, None] > vals[None, :])
    if bad.any():
        i, j = (int(k) for k in np.argwhere(bad)[0])
        u = family.universe
        raise NotMonotone(
            family.members[i],
            family.members[j],
            f"mu({u.label(family.members[i])})={vals[i]} exceeds "
            f"mu({u.label(family.members[j])})={vals[j]}",
        )
    vals.flags.writeable = False
    return MonotoneMeasure(family, vals)


def _require(family: SetFamily, *, empty: bool = False) -> None:
    if empty and not family.has_empty:
        raise MissingEmptySet("family must contain the empty set")
    if family.universe.full not in family:
        raise MissingUniverseSet("family must contain X")


def counting_measure(family: SetFamily) -> MonotoneMeasure:
    return validate_monotone(family, [bin(m).count("1") for m in family.members])


def weakest_capacity(family: SetFamily) -> MonotoneMeasure:
    _require(family, empty=True)
    full = family.universe.full
    return validate_monotone(family, [1.0 if m == full else 0.0 for m in family.members])


def strongest_capacity(family: SetFamily) -> MonotoneMeasure:
    _require(family, empty=True)
    return validate_monotone(family, [0.0 if m == 0 else 1.0 for m in family.members])


def _distribution(pi: Sequence[float], n: int | None = None) -> np.ndarray:
    arr = np.array(pi, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ShapeMismatch("distribution must be a nonempty vector")
    if n is not None and arr.size != n:
        raise ShapeMismatch(f"distribution has length {arr.size}, universe has {n} elements")
    if np.isnan(arr).any() or (arr < 0).any():
        raise PreconditionError("distribution values must be nonnegative")
    return arr


def _sup_over(pi: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """``max{pi[i] : i in E}`` for each mask, 0 on the empty set."""
    bits = (masks[:, None] >> np.arange(pi.size)) & 1
    return np.where(bits.astype(bool), pi[None, :], 0.0).max(axis=1)


def _require_powerset(family: SetFamily) -> None:
    if family.p != 1 << family.universe.n:
        raise ShapeMismatch("possibility and necessity measures need the full powerset family")


def possibility_from(pi: Sequence[float], family: SetFamily) -> MonotoneMeasure:
    _require_powerset(family)
    arr = _distribution(pi, family.universe.n)
    if arr.max() != 1.0:
        warnings.warn(f"max of possibility distribution is {arr.max()}, not 1; result is not a capacity")
    return validate_monotone(family, _sup_over(arr, family.mask_array))


def necessity_from(pi: Sequence[float], family: SetFamily) -> MonotoneMeasure:
    """``N(E) = Pi(X) - Pi(E^c)``; equals ``1 - Pi(E^c)`` for a normalized ``pi``."""
    _require_powerset(family)
    arr = _distribution(pi, family.universe.n)
    if arr.max() != 1.0:
        warnings.warn(f"max of possibility distribution is {arr.max()}, not 1; result is not a capacity")
    comp = family.universe.full ^ family.mask_array
    return validate_monotone(family, arr.max() - _sup_over(arr, comp))


def minitive_from_distribution(pi_prime: Sequence[float]) -> MonotoneMeasure:
    """Minitive function ``m(E) = inf{pi'(x) : x not in E}`` on the powerset.

    The infimum over the empty set (``E = X``) is ``max(pi')``.  ``m`` of the
    empty set is ``min(pi')``, so the result is a monotone measure only when
    ``pi'`` has a zero; otherwise it is a monotone set function.
    """
    arr = _distribution(pi_prime)
    family = powerset_family(Universe(arr.size))
    masks = family.mask_array
    outside = ((family.universe.full ^ masks)[:, None] >> np.arange(arr.size)) & 1
    vals = np.where(outside.astype(bool), arr[None, :], INF).min(axis=1)
    vals[family.x_index] = arr.max()
    return validate_monotone(family, vals, strict_empty=False)


def maxitive_from_distribution(pi: Sequence[float]) -> MonotoneMeasure:
    arr = _distribution(pi)
    family = powerset_family(Universe(arr.size))
    return validate_monotone(family, _sup_over(arr, family.mask_array))


# -- structural predicates ------------------------------------------------


def _close(a: float, b: float, tol: float) -> bool:
    return a == b or abs(a - b) <= tol


def _pairs(family: SetFamily):
    p = family.p
    for i in range(p):
        for j in range(i + 1, p):
            yield family.members[i], family.members[j]


def _lattice_check(measure: MonotoneMeasure, op: str, tol: float) -> Check:
    """Shared body of :func:`is_minitive` and :func:`is_maxitive`."""
    fam = measure.family
    vals = measure.values
    combine = (lambda a, b: a & b) if op == "min" else (lambda a, b: a | b)
    reduce_ = min if op == "min" else max
    for e, f in _pairs(fam):
        g = combine(e, f)
        if g in fam and not _close(measure(g), reduce_(measure(e), measure(f)), tol):
            return Check(False, (e, f))
    if fam.p > FULL_SWEEP_MAX_P:
        return Check(True)
    # Arbitrary subfamilies: reduce masks and values over every hypermask.
    if op == "min":
        combined = kernels.subset_and_table(fam.mask_array, fam.universe.full)
        extreme = kernels.subset_min_table(vals, INF)
    else:
        combined = kernels.subset_or_table(fam.mask_array)
        extreme = kernels.subset_max_table(vals, 0.0)
    lookup = np.full(1 << fam.universe.n, -1, dtype=np.int64)
    lookup[fam.mask_array] = np.arange(fam.p)
    idx = lookup[combined[1:]]
    got = np.where(idx >= 0, vals[idx], 0.0)
    want = np.where(idx >= 0, extreme[1:], 0.0)
    with np.errstate(invalid="ignore"):
        bad = ~((got == want) | (np.abs(got - want) <= tol))
    if bad.any():
        hyper = int(np.flatnonzero(bad)[0]) + 1
        return Check(False, tuple(fam.members_of(hyper)))
    return Check(True)


def is_minitive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    return _lattice_check(measure, "min", tol)


def is_maxitive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    return _lattice_check(measure, "max", tol)


def is_additive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    fam = measure.family
    for e, f in _pairs(fam):
        if e & f == 0 and (e | f) in fam:
            if not _close(measure(e | f), measure(e) + measure(f), tol):
                return Check(False, (e, f))
    return Check(True)


def is_superadditive(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    fam = measure.family
    for e, f in _pairs(fam):
        if e & f == 0 and (e | f) in fam:
            if measure(e | f) < measure(e) + measure(f) - tol:
                return Check(False, (e, f))
    return Check(True)


def _modularity(measure: MonotoneMeasure, sign: int, tol: float) -> Check:
    fam = measure.family
    for e, f in _pairs(fam):
        if (e | f) in fam and (e & f) in fam:
            lhs = measure(e | f) + measure(e & f)
            rhs = measure(e) + measure(f)
            if lhs == rhs:
                continue
            if sign * (lhs - rhs) < -tol:
                return Check(False, (e, f))
    return Check(True)


def is_supermodular(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    return _modularity(measure, +1, tol)


def is_submodular(measure: MonotoneMeasure, tol: float = EPS) -> Check:
    return _modularity(measure, -1, tol)


def dual_measure(measure: MonotoneMeasure) -> MonotoneMeasure:
    """``m^d(E) = m(X) - m(E^c)`` on a complement-closed family."""
    fam = measure.family
    total = measure.total
    if math.isinf(total):
        raise InfiniteTotalMass("dual measure needs a finite mu(X)")
    if not is_closed_under_complements(fam):
        raise NotComplementClosed("dual measure needs a family closed under complements")
    full = fam.universe.full
    vals = [total - measure(full ^ m) for m in fam.members]
    return validate_monotone(fam, vals, strict_empty=False)


def range_of(measure: MonotoneMeasure) -> tuple[float, ...]:
    """Strictly increasing enumeration of the values taken by the measure."""
    return tuple(float(v) for v in np.unique(measure.values))


def constant_on_nonempty(measure: MonotoneMeasure, tol: float = EPS) -> bool:
    """True iff ``mu(empty) = 0`` and ``mu(E) = mu(X)`` for every other member."""
    c = measure.total
    for m, v in zip(measure.family.members, measure.values):
        target = 0.0 if m == 0 else c
        if not _close(float(v), target, tol):
            return False
    return True
