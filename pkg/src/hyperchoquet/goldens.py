"""Worked numeric examples reproduced as golden checks.

Each :class:`Golden` pairs a computation with its frozen expected value.
:func:`run_examples` evaluates a corpus and reports a diff for every
mismatch; the ``examples`` command of the CLI runs :data:`GOLDENS`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from .aggregation import SUM, FCASpec, build_T
from .hypermeasure import counting_oracle, n_mu, n_mu_table, strongest_oracle, weakest_oracle
from .integral import integrate_all, survival, survival_function
from .measures import (
    counting_measure,
    is_maxitive,
    minitive_from_distribution,
    possibility_from,
    range_of,
    strongest_capacity,
    validate_monotone,
    weakest_capacity,
)
from .moebius import moebius_transform
from .setcore import Universe, hypermasks_by_size, make_family, popcount, powerset_family


@dataclass(frozen=True)
class Golden:
    name: str
    compute: Callable[[], Any]
    expected: Any
    tol: float = 1e-12


@dataclass(frozen=True)
class GoldenResult:
    name: str
    passed: bool
    got: Any
    expected: Any
    diff: str | None


def _diff(got: Any, expected: Any, tol: float, path: str = "") -> str | None:
    """First difference between two nested values, or ``None``."""
    where = path or "value"
    if isinstance(expected, dict):
        if not isinstance(got, dict) or set(got) != set(expected):
            return f"{where}: keys {sorted(got) if isinstance(got, dict) else got!r} != {sorted(expected)}"
        for key in expected:
            d = _diff(got[key], expected[key], tol, f"{path}[{key!r}]")
            if d:
                return d
        return None
    if isinstance(expected, (list, tuple)):
        if not isinstance(got, (list, tuple)) or len(got) != len(expected):
            return f"{where}: {got!r} != {expected!r}"
        for k, (g, e) in enumerate(zip(got, expected)):
            d = _diff(g, e, tol, f"{path}[{k}]")
            if d:
                return d
        return None
    if isinstance(expected, bool) or not isinstance(expected, (int, float)):
        return None if got == expected else f"{where}: {got!r} != {expected!r}"
    if got == expected or (not math.isinf(expected) and abs(got - expected) <= tol):
        return None
    return f"{where}: got {got!r}, expected {expected!r} (tolerance {tol:g})"


def run_examples(corpus: Sequence[Golden] | None = None) -> list[GoldenResult]:
    results = []
    for g in GOLDENS if corpus is None else corpus:
        got = g.compute()
        d = _diff(got, g.expected, g.tol)
        results.append(GoldenResult(g.name, d is None, got, g.expected, d))
    return results


# -- the examples -----------------------------------------------------------------


def _three_set():
    u = Universe(3)
    fam = make_family(u, [0, u.mask([0]), u.full])
    mu = validate_monotone(fam, [0.0, 0.2, 1.0])
    T = build_T(FCASpec.uniform(fam, SUM), [1, 2, 1])
    return fam, mu, T


def _four_set():
    u = Universe(3)
    fam = make_family(u, [0, u.mask([0]), u.mask([1]), u.full])
    T = build_T(FCASpec.uniform(fam, SUM), [2, 3, 4])
    return fam, counting_measure(fam), T


def _rows(values: np.ndarray, p: int) -> list[float]:
    return [float(values[h]) for h in hypermasks_by_size(p)]


def _agreements(measure, oracle) -> int:
    return sum(n_mu(measure, h) == oracle(measure, h) for h in range(1 << measure.family.p))


def _level_jumps(pi: Sequence[float]) -> list[int]:
    """Positions ``i`` (1-based) in the ascending order of ``pi`` where the value strictly increases."""
    ordered = [0.0] + sorted(pi)
    return [i for i in range(1, len(ordered)) if ordered[i - 1] < ordered[i]]


def _three_set_T():
    return _three_set()[2].values.tolist()


def _three_set_steps():
    fam, mu, T = _three_set()
    return survival_function(T, mu).pieces()


def _three_set_routes():
    fam, mu, T = _three_set()
    return integrate_all(T, mu).routes


def _three_set_n_mu():
    fam, mu, T = _three_set()
    return _rows(n_mu_table(mu), fam.p)


def _three_set_moebius():
    fam, mu, T = _three_set()
    return _rows(moebius_transform(mu).entries, fam.p)


def _three_set_ranges():
    fam, mu, T = _three_set()
    return [list(range_of(mu)), np.unique(n_mu_table(mu)).tolist()]


def _four_set_T():
    return _four_set()[2].values.tolist()


def _four_set_survival():
    fam, mu, T = _four_set()
    return survival(T, mu, 7.5)


def _counting_small_sets():
    fam = powerset_family(3)
    mu = counting_measure(fam)
    return n_mu(mu, fam.hyper(m for m in fam.members if popcount(m) <= 1))


def _counting_range():
    return list(range_of(counting_measure(powerset_family(3))))


def _minitive_values():
    m = minitive_from_distribution([1, 2, 3])
    u = m.universe
    return [m(u.full), m(u.mask([1, 2]))]


def _possibility_values():
    fam = powerset_family(4)
    pi = [0.7, 0.4, 1.0, 0.4]
    poss = possibility_from(pi, fam)
    return [poss(fam.universe.mask([1, 3])), _level_jumps(pi), bool(is_maxitive(poss))]


GOLDENS: tuple[Golden, ...] = (
    Golden("three-set family, sum operator: T table", _three_set_T, [4.0, 3.0, 0.0]),
    Golden(
        "three-set family: survival step function",
        _three_set_steps,
        [(0.0, 3.0, 1.0), (3.0, 4.0, 0.2), (4.0, math.inf, 0.0)],
    ),
    Golden(
        "three-set family: integral by every route",
        _three_set_routes,
        {"riemann": 3.2, "formula_i": 3.2, "formula_ii": 3.2, "formula_iii": 3.2, "moebius": 3.2},
    ),
    Golden("three-set family: N_mu table by subfamily size", _three_set_n_mu, [0.2, 0, 0, 1, 0.2, 0, 1]),
    Golden("three-set family: Moebius table by subfamily size", _three_set_moebius, [0.2, 0, 0, 0.8, 0, 0, 0]),
    Golden("three-set family: ranges of mu and N_mu", _three_set_ranges, [[0, 0.2, 1], [0, 0.2, 1]]),
    Golden("four-set family, sum operator: T table", _four_set_T, [9.0, 7.0, 6.0, 0.0]),
    Golden("four-set family, counting measure: survival at 7.5", _four_set_survival, 1.0),
    Golden(
        "counting measure on 2^[3]: case analysis on all 256 subfamilies",
        lambda: _agreements(counting_measure(powerset_family(3)), counting_oracle),
        256,
    ),
    Golden("counting measure on 2^[3]: all sets of size <= 1 selected", _counting_small_sets, 2.0),
    Golden("counting measure on 2^[3]: range", _counting_range, [0, 1, 2, 3]),
    Golden(
        "weakest capacity on 2^[3]: closed form on all subfamilies",
        lambda: _agreements(weakest_capacity(powerset_family(3)), weakest_oracle),
        256,
    ),
    Golden(
        "strongest capacity on 2^[3]: closed form on all subfamilies",
        lambda: _agreements(strongest_capacity(powerset_family(3)), strongest_oracle),
        256,
    ),
    Golden("minitive from (1,2,3): m(X) and m({2,3})", _minitive_values, [3.0, 1.0]),
    Golden(
        "possibility (0.7,0.4,1,0.4): Pi({2,4}), jump positions, maxitivity",
        _possibility_values,
        [0.4, [1, 3, 4], True],
    ),
)
