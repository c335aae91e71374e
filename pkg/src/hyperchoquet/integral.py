"""Generalized survival functions and the conditional-aggregation Choquet integral.

The integral of ``f`` is computed from its table ``T`` (see
:func:`hyperchoquet.aggregation.build_T`) and the measure ``mu`` by several
independent routes that must agree:

* ``riemann``: exact integral of the survival step function;
* ``formula_i`` / ``formula_ii``: sorted-differences sums;
* ``formula_iii``: sum over all subfamilies;
* ``moebius``: Möbius transform of ``N_mu`` (see :mod:`hyperchoquet.moebius`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .aggregation import BarTTable, FCASpec, TTable, as_vector, build_bar_T, build_T
from .errors import (
    DominanceViolated,
    FamilyTooLargeForEnumeration,
    InfiniteTotalMass,
    MissingEmptySet,
    NotCapacity,
    NotComplementClosed,
    PreconditionError,
    ShapeMismatch,
)
from .hypermeasure import ADDITIVITY_MAX_P, n_mu, n_mu_table
from .measures import EPS, INF, MonotoneMeasure, constant_on_nonempty, dual_measure
from .setcore import is_closed_under_complements

FORMULA_III_MAX_P = 20


def _same_family(T, mu: MonotoneMeasure) -> None:
    if T.family.members != mu.family.members:
        raise ShapeMismatch("T and mu must live on the same family")


# -- survival functions ---------------------------------------------------------


def survival(T: TTable, mu: MonotoneMeasure, alpha: float) -> float:
    """``min{mu(E) : T(E) <= alpha}``; never empty since ``T(X) = 0``."""
    _same_family(T, mu)
    if alpha < 0:
        raise PreconditionError("alpha must be nonnegative")
    return float(mu.values[T.values <= alpha].min())


def survival_via_hyper(T: TTable, mu: MonotoneMeasure, alpha: float) -> float:
    """``N_mu({E : T(E) > alpha})``."""
    _same_family(T, mu)
    if alpha < 0:
        raise PreconditionError("alpha must be nonnegative")
    above = 0
    for i, t in enumerate(T.values):
        if t > alpha:
            above |= 1 << i
    return n_mu(mu, above)


@dataclass(frozen=True)
class StepFunction:
    """Right-continuous step function on ``[0, inf)``.

    ``values[k]`` holds on ``[alphas[k], alphas[k+1])``; the last value holds
    on ``[alphas[-1], inf)``.  Adjacent pieces always differ in value.
    """

    alphas: tuple[float, ...]
    values: tuple[float, ...]

    def __call__(self, alpha: float) -> float:
        k = int(np.searchsorted(self.alphas, alpha, side="right")) - 1
        return self.values[max(k, 0)]

    @property
    def tail(self) -> float:
        return self.values[-1]

    def pieces(self) -> list[tuple[float, float, float]]:
        """``(start, end, value)`` triples; ``end`` is ``inf`` for the last piece."""
        ends = self.alphas[1:] + (INF,)
        return list(zip(self.alphas, ends, self.values))


def _step(breaks: Sequence[float], evaluate: Callable[[float], float]) -> StepFunction:
    alphas: list[float] = []
    values: list[float] = []
    for a in breaks:
        v = evaluate(a)
        if values and v == values[-1]:
            continue
        alphas.append(float(a))
        values.append(float(v))
    return StepFunction(tuple(alphas), tuple(values))


def survival_function(T: TTable, mu: MonotoneMeasure) -> StepFunction:
    """Exact survival step function, with breakpoints at 0 and the values of ``T``."""
    _same_family(T, mu)
    breaks = np.unique(np.concatenate(([0.0], T.values)))
    return _step(breaks, lambda a: survival(T, mu, a))


def integrate_weak_cuts(T: TTable, mu: MonotoneMeasure) -> float:
    """``integral of N_mu({T >= a}) da``, evaluated at the midpoint of each gap between ``T`` values."""
    _same_family(T, mu)
    breaks = np.unique(np.concatenate(([0.0], T.values)))
    if n_mu(mu, 0) > 0:
        return INF
    total = 0.0
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        mid = (lo + hi) / 2
        hyper = sum(1 << i for i, t in enumerate(T.values) if t >= mid)
        value = n_mu(mu, hyper)
        if value:
            total += (hi - lo) * value
    return total


def integrate_riemann(step: StepFunction) -> float:
    if step.tail > 0:
        return INF
    total = 0.0
    for start, end, value in step.pieces()[:-1]:
        if value:
            total += (end - start) * value
    return total


# -- closed-form routes -----------------------------------------------------------


def _ordered(T: TTable, mu: MonotoneMeasure):
    _same_family(T, mu)
    if mu.values.min() > 0:
        if not T.family.has_empty:
            raise MissingEmptySet("discrete formulas need a mu-null member such as the empty set (otherwise the integral is infinite)")
        raise PreconditionError("discrete formulas need mu(empty set) = 0 (otherwise the integral is infinite)")
    order = np.lexsort((np.arange(T.family.p), T.values))
    t = T.values[order]
    prefix_min = np.minimum.accumulate(mu.values[order])
    return t, prefix_min


def integrate_formula_i(T: TTable, mu: MonotoneMeasure) -> float:
    """``sum_{i>=1} (T(E_i) - T(E_{i-1})) * min_{j<i} mu(E_j)`` over ``T``-sorted members."""
    t, prefix_min = _ordered(T, mu)
    total = 0.0
    for i in range(1, t.size):
        step = t[i] - t[i - 1]
        if step:
            total += step * prefix_min[i - 1]
    return float(total)


def integrate_formula_ii(T: TTable, mu: MonotoneMeasure) -> float:
    """``sum_{i>=1} (min_{j<i} mu(E_j) - min_{j<=i} mu(E_j)) * T(E_i)``."""
    t, prefix_min = _ordered(T, mu)
    total = 0.0
    for i in range(1, t.size):
        drop = prefix_min[i - 1] - prefix_min[i]
        if drop and t[i]:
            total += drop * t[i]
    return float(total)


def integrate_formula_iii(T: TTable, mu: MonotoneMeasure) -> float:
    """Sum over every subfamily ``A`` of ``N_mu(A) * max(0, min_A T - max_{not A} T)``."""
    _ordered(T, mu)
    p = T.family.p
    if p > FORMULA_III_MAX_P:
        raise FamilyTooLargeForEnumeration(f"2^{p} subfamilies exceed the cap p <= {FORMULA_III_MAX_P}")
    t = np.ascontiguousarray(T.values)
    mins = kernels.subset_min_table(t, 0.0)
    maxs = kernels.subset_max_table(t, 0.0)
    return float(kernels.formula_iii_sum(n_mu_table(mu), mins, maxs))


@dataclass(frozen=True)
class IntegralReport:
    value: float
    routes: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)

    @property
    def deviation(self) -> float:
        vals = [v for v in self.routes.values() if v is not None]
        if any(math.isinf(v) for v in vals):
            return 0.0 if all(math.isinf(v) for v in vals) else INF
        return max(vals) - min(vals) if vals else 0.0


def integrate_all(T: TTable, mu: MonotoneMeasure) -> IntegralReport:
    """Run every applicable route and collect the values."""
    from .moebius import MOEBIUS_MAX_P, integrate_moebius

    step = survival_function(T, mu)
    value = integrate_riemann(step)
    routes = {"riemann": value}
    skipped = {}
    if step.tail > 0:
        note = "integral is infinite: the smallest measure value is positive"
        if not T.family.has_empty:
            note = "integral is infinite: the family does not contain the empty set"
        for name in ("formula_i", "formula_ii", "formula_iii", "moebius"):
            skipped[name] = note
        return IntegralReport(value, routes, skipped)
    routes["formula_i"] = integrate_formula_i(T, mu)
    routes["formula_ii"] = integrate_formula_ii(T, mu)
    if T.family.p <= FORMULA_III_MAX_P:
        routes["formula_iii"] = integrate_formula_iii(T, mu)
    else:
        skipped["formula_iii"] = f"p={T.family.p} exceeds {FORMULA_III_MAX_P}"
    if T.family.p <= MOEBIUS_MAX_P:
        routes["moebius"] = integrate_moebius(T, mu)
    else:
        skipped["moebius"] = f"p={T.family.p} exceeds {MOEBIUS_MAX_P}"
    return IntegralReport(value, routes, skipped)


def cond_choquet(spec: FCASpec, f: Sequence[float], mu: MonotoneMeasure) -> float:
    """The conditional-aggregation Choquet integral of ``f``."""
    return integrate_riemann(survival_function(build_T(spec, f), mu))


def choquet_on_hyperspace(T: TTable, mu: MonotoneMeasure) -> float:
    return integrate_riemann(survival_function(T, mu))


# -- fusion-function variant ---------------------------------------------------------

FUSIONS: dict[str, Callable[[float, float], float]] = {
    "product": lambda x, y: x * y,
    "min": lambda x, y: min(x, y),
    "x_y2": lambda x, y: x * y * y,
    "zero": lambda x, y: 0.0,
}


def _dominates(h1, h2, xmax: float, grid: int = 41) -> bool:
    xs = np.linspace(0.0, max(xmax, 1.0), grid)
    ys = np.linspace(0.0, 1.0, grid)
    return all(h1(x, y) >= h2(x, y) - EPS for x in xs for y in ys)


def fusion_integral(T: TTable, mu: MonotoneMeasure, h1: str, h2: str) -> float:
    """``min{1, sum_i H1(T(E_i), N_i) - H2(T(E_{i-1}), N_i)}``, ``N_i = min_{j<i} mu(E_j)``.

    ``h1`` and ``h2`` name entries of :data:`FUSIONS`; ``h1`` must dominate
    ``h2`` on the grid ``[0, max T] x [0, 1]``.  Symmetry of ``N_mu`` is not
    checked.
    """
    if not mu.is_capacity():
        raise NotCapacity(f"fusion integral needs a capacity, mu(X) = {mu.total}")
    try:
        f1, f2 = FUSIONS[h1], FUSIONS[h2]
    except KeyError as exc:
        raise PreconditionError(f"unknown fusion function {exc.args[0]!r}; choose from {sorted(FUSIONS)}") from None
    if not _dominates(f1, f2, float(T.values.max())):
        raise DominanceViolated(f"{h1} does not dominate {h2}")
    t, prefix_min = _ordered(T, mu)
    total = sum(f1(t[i], prefix_min[i - 1]) - f2(t[i - 1], prefix_min[i - 1]) for i in range(1, t.size))
    return float(min(1.0, total))


# -- reflected side --------------------------------------------------------------------


def level_measure_plus(bar_t: BarTTable, nu: MonotoneMeasure, alpha: float) -> float:
    """``max{nu(E) : Tbar(E) >= alpha}``; the empty set is always eligible."""
    if bar_t.family.members != nu.family.members:
        raise ShapeMismatch("Tbar and nu must live on the same family")
    if not is_closed_under_complements(bar_t.family):
        raise NotComplementClosed("level measure needs a complement-closed family")
    return float(nu.values[bar_t.values >= alpha].max())


def duality_grid(T: TTable, ybar: float) -> list[float]:
    """Breakpoints of both sides of the duality identity, their midpoints, 0 and ``ybar``."""
    pts = {0.0, float(ybar)}
    for t in T.values:
        if 0 <= t <= ybar:
            pts.add(float(t))
    ordered = sorted(pts)
    mids = [(a + b) / 2 for a, b in zip(ordered, ordered[1:])]
    return sorted(set(ordered) | set(mids))


def duality_identity_check(
    spec: FCASpec,
    f: Sequence[float],
    mu: MonotoneMeasure,
    ybar: float,
    alphas: Sequence[float] | None = None,
    tol: float = EPS,
) -> bool:
    """Check ``survival(f, alpha) + level^+_{mu^d}(ybar - f, ybar - alpha) = mu(X)``."""
    if math.isinf(mu.total):
        raise InfiniteTotalMass("duality needs a finite mu(X)")
    f = as_vector(f, spec.family.universe.n)
    T = build_T(spec, f)
    bar = build_bar_T(spec, np.clip(ybar - f, 0.0, None), ybar, tol)
    dual = dual_measure(mu)
    if alphas is None:
        alphas = duality_grid(T, ybar)
    for a in alphas:
        if not 0 <= a <= ybar:
            raise PreconditionError(f"alpha={a} outside [0, ybar]")
        lhs = survival(T, mu, a) + level_measure_plus(bar, dual, ybar - a)
        if abs(lhs - mu.total) > tol:
            return False
    return True


# -- properties of the integral -----------------------------------------------------------


def _agree(a: float, b: float, tol: float) -> bool:
    return a == b or abs(a - b) <= tol


def comonotone(T1: TTable, T2: TTable) -> bool:
    d1 = T1.values[:, None] - T1.values[None, :]
    d2 = T2.values[:, None] - T2.values[None, :]
    return bool((d1 * d2 >= 0).all())


@dataclass(frozen=True)
class PropertyReport:
    null_iff_zero: bool
    comonotone_pair: bool
    comonotone_additive: bool | None
    strict_equals_weak: bool
    n_mu_supermodular: bool | None
    n_mu_submodular: bool | None
    superadditive_ok: bool | None
    subadditive_ok: bool | None

    @property
    def ok(self) -> bool:
        checks = (
            self.null_iff_zero,
            self.comonotone_additive,
            self.strict_equals_weak,
            self.superadditive_ok,
            self.subadditive_ok,
        )
        return all(c is not False for c in checks)


def choquet_properties_check(T1: TTable, T2: TTable, mu: MonotoneMeasure, tol: float = EPS) -> PropertyReport:
    """Evaluate the standard Choquet-integral properties on a pair of tables.

    * an integral vanishes iff ``N_mu({T > 0}) = 0``;
    * comonotone tables integrate additively;
    * integrating ``N_mu({T > a})`` and ``N_mu({T >= a})`` gives the same value;
    * supermodular ``N_mu`` gives superadditivity and submodular ``N_mu``
      subadditivity on this pair (table checks only up to ``p = 10``).
    """
    _same_family(T1, mu)
    _same_family(T2, mu)
    c1, c2 = choquet_on_hyperspace(T1, mu), choquet_on_hyperspace(T2, mu)
    c12 = choquet_on_hyperspace(T1 + T2, mu)

    def null(T):
        return survival_via_hyper(T, mu, 0.0) == 0

    null_ok = (null(T1) == (c1 == 0)) and (null(T2) == (c2 == 0))
    como = comonotone(T1, T2)
    como_ok = abs(c12 - (c1 + c2)) <= tol if como else None
    weak_ok = all(
        _agree(integrate_weak_cuts(T, mu), c, tol) for T, c in ((T1, c1), (T2, c2))
    )
    sup_mod = sub_mod = super_ok = sub_ok = None
    p = mu.family.p
    if p <= ADDITIVITY_MAX_P and not math.isinf(mu.total):
        table = n_mu_table(mu)
        sup_mod = kernels.find_modularity_violation(table, p, tol, 1)[0] < 0
        sub_mod = kernels.find_modularity_violation(table, p, tol, -1)[0] < 0
        if sup_mod:
            super_ok = c12 >= c1 + c2 - tol
        if sub_mod:
            sub_ok = c12 <= c1 + c2 + tol
    return PropertyReport(null_ok, como, como_ok, weak_ok, sup_mod, sub_mod, super_ok, sub_ok)


def linearity_witness(mu: MonotoneMeasure, tol: float = EPS) -> tuple[TTable, TTable] | None:
    """A pair of tables on which the integral is not additive, or ``None``.

    ``None`` is returned exactly when ``mu`` vanishes on the empty set and is
    constant on all other members, the case in which ``N_mu`` is additive.
    Otherwise the pair ``(1 on {empty}, 1 on every member except the empty
    set and X)`` is returned: its sum integrates to ``mu(X)`` while the parts
    integrate to ``min_{E != empty} mu(E) < mu(X)`` and ``0``.
    """
    fam = mu.family
    if not fam.has_empty:
        raise MissingEmptySet("linearity needs the empty set in the family")
    if constant_on_nonempty(mu, tol):
        return None
    one = np.zeros(fam.p)
    one[0] = 1.0
    rest = np.ones(fam.p)
    rest[0] = 0.0
    rest[fam.x_index] = 0.0
    return TTable(fam, one), TTable(fam, rest)
