"""Conditional aggregation operators and the transformed table ``T``.

An operator is any callable ``op(f, E, universe) -> float`` that aggregates
the vector ``f`` over the nonempty conditional set ``E`` (a bitmask).  The
built-ins are :data:`SUP`, :data:`INF`, :data:`SUM` and the integral-based
:class:`ChoquetOp`, :class:`SugenoOp`, :class:`ShilkretOp`.  A family of
operators (:class:`FCASpec`) assigns one operator to every family member
``F``; it is applied on the conditional set ``F^c``.  The empty conditional
set always aggregates to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import (
    FnExceedsYbar,
    IllegalConditionalSet,
    NonzeroAtX,
    NotComplementClosed,
    NotIdempotent,
    PreconditionError,
    ShapeMismatch,
)
from .measures import EPS, MonotoneMeasure
from .setcore import SetFamily, SubsetMask, Universe, is_closed_under_complements

Operator = Callable[[np.ndarray, SubsetMask, Universe], float]


def as_vector(f: Sequence[float], n: int | None = None) -> np.ndarray:
    arr = np.array(f, dtype=np.float64)
    if arr.ndim != 1:
        raise ShapeMismatch("input function must be a vector")
    if n is not None and arr.size != n:
        raise ShapeMismatch(f"input vector has length {arr.size}, universe has {n} elements")
    if not np.isfinite(arr).all() or (arr < 0).any():
        raise PreconditionError("input vector must be finite and nonnegative")
    return arr


def _in(mask: SubsetMask, n: int) -> np.ndarray:
    return ((mask >> np.arange(n)) & 1).astype(bool)


# -- standard integrals on the universe --------------------------------------


def _levels(f: np.ndarray):
    """Distinct positive values of ``f`` with the masks ``{f >= v}``."""
    for v in np.unique(f[f > 0]):
        yield float(v), int(np.sum(1 << np.flatnonzero(f >= v)))


def choquet_std(f: Sequence[float], m: MonotoneMeasure) -> float:
    """Discrete Choquet integral ``sum (v_k - v_{k-1}) m({f >= v_k})``."""
    f = as_vector(f, m.universe.n)
    total, prev = 0.0, 0.0
    for v, mask in _levels(f):
        total += (v - prev) * m(mask)
        prev = v
    return total


def sugeno_std(f: Sequence[float], m: MonotoneMeasure) -> float:
    f = as_vector(f, m.universe.n)
    return max((min(v, m(mask)) for v, mask in _levels(f)), default=0.0)


def shilkret_std(f: Sequence[float], m: MonotoneMeasure) -> float:
    f = as_vector(f, m.universe.n)
    return max((v * m(mask) for v, mask in _levels(f)), default=0.0)


# -- operators -----------------------------------------------------------------


def _sup(f, e, universe):
    return float(f[_in(e, universe.n)].max())


def _inf(f, e, universe):
    return float(f[_in(e, universe.n)].min())


def _sum(f, e, universe):
    return float(f[_in(e, universe.n)].sum())


_sup.__name__, _inf.__name__, _sum.__name__ = "sup", "inf", "sum"
SUP: Operator = _sup
INF: Operator = _inf
SUM: Operator = _sum


@dataclass(frozen=True, eq=False)
class _IntegralOp:
    inner: MonotoneMeasure

    def __post_init__(self):
        if self.inner.family.p != 1 << self.inner.universe.n:
            raise ShapeMismatch("inner measure of an integral operator must live on the powerset")

    def __call__(self, f, e, universe):
        return self.integral(np.where(_in(e, universe.n), f, 0.0), self.inner)


class ChoquetOp(_IntegralOp):
    integral = staticmethod(choquet_std)
    __name__ = "choquet"


class SugenoOp(_IntegralOp):
    integral = staticmethod(sugeno_std)
    __name__ = "sugeno"


class ShilkretOp(_IntegralOp):
    integral = staticmethod(shilkret_std)
    __name__ = "shilkret"


@dataclass(frozen=True)
class FCASpec:
    """One operator per family member; member ``F`` aggregates over ``F^c``."""

    family: SetFamily
    ops: tuple

    def __post_init__(self):
        if len(self.ops) != self.family.p:
            raise ShapeMismatch(f"need {self.family.p} operators, got {len(self.ops)}")

    @classmethod
    def uniform(cls, family: SetFamily, op: Operator) -> "FCASpec":
        return cls(family, (op,) * family.p)

    @classmethod
    def mixed(cls, family: SetFamily, by_member: Mapping[SubsetMask, Operator], default: Operator | None = None) -> "FCASpec":
        ops = []
        for m in family.members:
            op = by_member.get(m, default)
            if op is None:
                raise ShapeMismatch(f"no operator assigned to member {family.universe.label(m)}")
            ops.append(op)
        return cls(family, tuple(ops))

    def operator_for(self, conditional: SubsetMask) -> Operator:
        comp = self.family.universe.full ^ conditional
        if comp not in self.family:
            raise IllegalConditionalSet(
                f"{self.family.universe.label(conditional)} is not a conditional set: "
                "its complement is not a family member"
            )
        return self.ops[self.family.index_of(comp)]


def cond_agg(spec: FCASpec, f: Sequence[float], conditional: SubsetMask) -> float:
    universe = spec.family.universe
    op = spec.operator_for(universe.check(conditional))
    if conditional == 0:
        return 0.0
    return float(op(as_vector(f, universe.n), conditional, universe))


@dataclass(frozen=True, eq=False)
class TTable:
    """Finite nonnegative values on the family with ``T(X) = 0``."""

    family: SetFamily
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.float64)
        if vals.shape != (self.family.p,):
            raise ShapeMismatch(f"expected {self.family.p} table values, got shape {vals.shape}")
        if not np.isfinite(vals).all() or (vals < 0).any():
            raise PreconditionError("T values must be finite and nonnegative")
        if vals[self.family.x_index] != 0:
            raise NonzeroAtX(f"T(X) must be 0, got {vals[self.family.x_index]}")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __call__(self, mask: SubsetMask) -> float:
        return float(self.values[self.family.index_of(mask)])

    def __add__(self, other: "TTable") -> "TTable":
        if other.family.members != self.family.members:
            raise ShapeMismatch("tables live on different families")
        return TTable(self.family, self.values + other.values)


def build_T(spec: FCASpec, f: Sequence[float]) -> TTable:
    """``T(E) = A(f | E^c)`` for every member ``E``."""
    fam = spec.family
    f = as_vector(f, fam.universe.n)
    full = fam.universe.full
    return TTable(fam, [cond_agg(spec, f, full ^ m) for m in fam.members])


def axiom_check(spec: FCASpec, samples: Sequence[Sequence[float]], tol: float = EPS) -> bool:
    """Spot-check monotonicity on conditional sets and vanishing on complements.

    Every sample ``f`` is paired with every other sample ``g`` through their
    pointwise maximum ``h``; both ``A(f|E) <= A(h|E)`` and ``A(g|E) <= A(h|E)``
    must hold.  Also ``A(1_{E^c} | E) = 0`` for each nonempty conditional set.
    """
    fam = spec.family
    universe = fam.universe
    vecs = [as_vector(s, universe.n) for s in samples]
    conditionals = [universe.full ^ m for m in fam.members if m != universe.full]
    for e in conditionals:
        if cond_agg(spec, _in(universe.full ^ e, universe.n).astype(float), e) != 0:
            return False
        values = [cond_agg(spec, v, e) for v in vecs]
        for i, f in enumerate(vecs):
            for j in range(i + 1, len(vecs)):
                top = cond_agg(spec, np.maximum(f, vecs[j]), e)
                if values[i] > top + tol or values[j] > top + tol:
                    return False
    return True


def is_ybar_idempotent(spec: FCASpec, ybar: float, tol: float = EPS) -> bool:
    """True iff aggregating the constant ``ybar`` returns ``ybar`` on every nonempty conditional set."""
    if not ybar > 0:
        raise PreconditionError("ybar must be positive")
    universe = spec.family.universe
    const = np.full(universe.n, float(ybar))
    for m in spec.family.members:
        if m != universe.full and abs(cond_agg(spec, const, universe.full ^ m) - ybar) > tol:
            return False
    return True


@dataclass(frozen=True, eq=False)
class BarTTable:
    """Values of the reflected operators; infinite on the empty set."""

    family: SetFamily
    values: np.ndarray
    ybar: float

    def __call__(self, mask: SubsetMask) -> float:
        return float(self.values[self.family.index_of(mask)])


def build_bar_T(spec: FCASpec, f: Sequence[float], ybar: float, tol: float = EPS) -> BarTTable:
    """``Tbar(E) = A(ybar | E) - A(ybar - f | E)`` for nonempty ``E``, ``inf`` on the empty set."""
    fam = spec.family
    if not is_closed_under_complements(fam):
        raise NotComplementClosed("reflected operators need a complement-closed family")
    f = as_vector(f, fam.universe.n)
    if f.max() > ybar + tol:
        raise FnExceedsYbar(f"max f = {f.max()} exceeds ybar = {ybar}")
    if not is_ybar_idempotent(spec, ybar, tol):
        raise NotIdempotent(f"operator family is not {ybar}-idempotent")
    const = np.full(f.size, float(ybar))
    reflected = np.clip(const - f, 0.0, None)
    vals = np.empty(fam.p)
    for i, m in enumerate(fam.members):
        if m == 0:
            vals[i] = math.inf
        else:
            vals[i] = cond_agg(spec, const, m) - cond_agg(spec, reflected, m)
    vals.flags.writeable = False
    return BarTTable(fam, vals, float(ybar))
