"""Random instances shared by the property tests and the acceptance suite."""

import numpy as np
from hypothesis import strategies as st

from hyperchoquet.aggregation import TTable
from hyperchoquet.measures import validate_monotone
from hyperchoquet.setcore import Universe, make_family

DYADIC = tuple(k / 8 for k in range(17))
TIES = (0.0, 1.0, 2.0, 3.0)


def upward_close(members, raw, has_empty):
    """Smallest monotone table above ``raw``: each set gets the max over its subsets."""
    raw = list(raw)
    if has_empty:
        raw[0] = 0.0
    vals = [max(raw[j] for j, s in enumerate(members) if s & m == s) for m in members]
    if vals[-1] == 0:
        vals[-1] = 1.0
    return vals


def measure_on(family, raw):
    return validate_monotone(family, upward_close(family.members, raw, family.has_empty))


def t_table_on(family, raw):
    vals = list(raw)
    vals[family.x_index] = 0.0
    return TTable(family, vals)


# -- numpy RNG versions, for fixed-seed loops -------------------------------------


def random_family(rng, max_n=4, max_p=10, with_empty=True):
    n = int(rng.integers(1, max_n + 1))
    full = (1 << n) - 1
    pool = [m for m in range(1, full)]
    room = max_p - 1 - int(with_empty)
    k = int(rng.integers(0, min(room, len(pool)) + 1))
    chosen = [int(m) for m in rng.choice(pool, size=k, replace=False)] if k else []
    members = chosen + [full] + ([0] if with_empty else [])
    return make_family(Universe(n), members)


def random_measure(rng, family, values=DYADIC):
    return measure_on(family, rng.choice(values, size=family.p))


def random_T(rng, family, values=DYADIC):
    return t_table_on(family, rng.choice(values, size=family.p))


def random_capacity(rng, family):
    mu = random_measure(rng, family, DYADIC[1:])
    vals = np.array(mu.values) / mu.total
    return validate_monotone(family, vals)


# -- hypothesis strategies ---------------------------------------------------------


@st.composite
def families(draw, max_n=4, max_p=10, with_empty=None):
    n = draw(st.integers(1, max_n))
    full = (1 << n) - 1
    empty = draw(st.booleans()) if with_empty is None else with_empty
    room = max_p - 1 - int(empty)
    pool = list(range(1, full))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(room, len(pool)))) if pool else []
    members = chosen + [full] + ([0] if empty else [])
    return make_family(Universe(n), members)


@st.composite
def measures(draw, family, values=DYADIC):
    raw = draw(st.lists(st.sampled_from(values), min_size=family.p, max_size=family.p))
    return measure_on(family, raw)


@st.composite
def t_tables(draw, family, values=DYADIC):
    raw = draw(st.lists(st.sampled_from(values), min_size=family.p, max_size=family.p))
    return t_table_on(family, raw)


@st.composite
def instances(draw, max_n=4, max_p=10, with_empty=None, values=DYADIC, t_values=DYADIC):
    family = draw(families(max_n, max_p, with_empty))
    return family, draw(measures(family, values)), draw(t_tables(family, t_values))
