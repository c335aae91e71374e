import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import families, instances, measures, t_tables
from hyperchoquet.aggregation import SUM, FCASpec, build_T
from hyperchoquet.errors import EmptyAtom, FamilyTooLargeForEnumeration
from hyperchoquet.hypermeasure import n_mu_table
from hyperchoquet.integral import integrate_riemann, survival_function
from hyperchoquet.measures import counting_measure, strongest_capacity, validate_monotone, weakest_capacity
from hyperchoquet.moebius import allocation_cut_check, integrate_moebius, moebius_transform, t_h_atom, zeta, zeta_table
from hyperchoquet.setcore import Universe, make_family, powerset_family

U3 = Universe(3)
THREE_SET = make_family(U3, [0, 0b001, U3.full])
MU6 = validate_monotone(THREE_SET, [0, 0.2, 1])
T6 = build_T(FCASpec.uniform(THREE_SET, SUM), [1, 2, 1])


def test_three_set_example():
    table = moebius_transform(MU6)
    # hypermask bits: 0 = empty set, 1 = {1}, 2 = X
    assert table.nonzero() == {0b001: 0.2, 0b011: pytest.approx(0.8)}
    assert [t_h_atom(T6, h) for h in (0b001, 0b010, 0b100)] == [4.0, 3.0, 0.0]
    assert t_h_atom(T6, 0b011) == 3.0
    assert integrate_moebius(T6, MU6) == pytest.approx(3.2, abs=1e-12)
    assert zeta(table, 0b011) == pytest.approx(1.0)
    assert zeta(table, 0b101) == pytest.approx(0.2)
    assert zeta(table, 0b111) == pytest.approx(MU6.total)
    assert allocation_cut_check(T6, [3.0])
    assert allocation_cut_check(T6)


def test_empty_atom():
    with pytest.raises(EmptyAtom):
        t_h_atom(T6, 0)


def test_large_family_refused():
    u = Universe(5)
    fam = make_family(u, list(range(20)) + [u.full])
    assert fam.p == 21
    with pytest.raises(FamilyTooLargeForEnumeration):
        moebius_transform(counting_measure(fam))


def test_named_capacities():
    fam = powerset_family(2)
    # strongest capacity: N is the indicator of the empty set being selected
    strong = moebius_transform(strongest_capacity(fam))
    assert strong.nonzero() == {0b0001: 1.0}
    weak = moebius_transform(weakest_capacity(fam))
    assert np.allclose(zeta_table(weak), n_mu_table(weakest_capacity(fam)))


@given(st.data())
def test_against_naive_transform(data):
    fam = data.draw(families(max_p=8))
    mu = data.draw(measures(fam))
    table = n_mu_table(mu).tolist()
    naive = oracles.moebius_naive(table, fam.p)
    assert np.allclose(moebius_transform(mu).entries, naive, atol=1e-9)


@given(st.data())
def test_round_trip_and_total_mass(data):
    fam = data.draw(families(max_p=10))
    mu = data.draw(measures(fam))
    table = moebius_transform(mu)
    assert np.max(np.abs(zeta_table(table) - n_mu_table(mu))) <= 1e-9
    assert abs(table.entries.sum() - mu.total) <= 1e-9


@given(instances(max_p=8, with_empty=True))
def test_integral_matches_riemann(inst):
    fam, mu, T = inst
    assert abs(integrate_moebius(T, mu) - integrate_riemann(survival_function(T, mu))) <= 1e-9


@given(st.data())
def test_allocation_cuts(data):
    fam = data.draw(families(max_p=8))
    T = data.draw(t_tables(fam))
    assert allocation_cut_check(T)


@given(st.data())
def test_atom_values_against_oracle(data):
    fam = data.draw(families(max_p=6))
    T = data.draw(t_tables(fam))
    values = T.values.tolist()
    for h in range(1, 1 << fam.p):
        chosen = [i for i in range(fam.p) if h >> i & 1]
        assert t_h_atom(T, h) == oracles.t_h(values, chosen)

