from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, ideals, parse
from monocycles.boundary_ideal import (
    boundary_ideal,
    boundary_ideal_formula,
    in_boundary_ideal,
    in_lower_bound,
    in_sector,
    is_boundary_monomial_cycle,
    lower_bound_ideal,
    sector_ideal,
)
from monocycles.errors import NotACycle
from monocycles.koszul import KoszulChain, is_boundary_oracle, is_monomial_cycle
from monocycles.monomials import maximal_ideal_power, monomials_of_degree_at_most


@settings(max_examples=40)
@given(ideals(n_min=3, n_max=5, max_gens=4), st.sampled_from(FIELDS))
def test_methods_agree(I, field):
    for p in range(1, I.n):
        for sigma in combinations(range(1, I.n + 1), p):
            want = boundary_ideal(I, sigma, field, method="brute").ideal
            assert boundary_ideal(I, sigma, field, method="circuits").ideal == want
            assert boundary_ideal(I, sigma, field).ideal == want


@settings(max_examples=60)
@given(ideals(n_min=2, n_max=5, max_gens=4))
def test_closed_formula_is_lower_bound(I):
    for sigma in [(1,), tuple(range(1, I.n))]:
        assert boundary_ideal_formula(I, sigma) == lower_bound_ideal(I, sigma)
        assert boundary_ideal(I, sigma, method="brute").ideal == lower_bound_ideal(I, sigma)


@settings(max_examples=60)
@given(ideals(n_min=2, n_max=4, max_gens=4), st.data())
def test_membership_matches_oracle(I, data):
    sigma = tuple(sorted(data.draw(st.permutations(range(1, I.n + 1)))[:data.draw(st.integers(1, I.n))]))
    field = data.draw(st.sampled_from(FIELDS))
    for u in monomials_of_degree_at_most(I.n, 4):
        if u in I or not is_monomial_cycle(I, u, sigma):
            continue
        want = bool(is_boundary_oracle(I, KoszulChain.monomial(u, sigma, field)))
        assert is_boundary_monomial_cycle(I, u, sigma, field) == want
        assert in_boundary_ideal(I, u, sigma, field) == want


@settings(max_examples=60)
@given(ideals(n_min=2, n_max=4, max_gens=4), st.data())
def test_pointwise_predicates(I, data):
    sigma = tuple(sorted(data.draw(st.permutations(range(1, I.n + 1)))[:data.draw(st.integers(1, I.n))]))
    L = lower_bound_ideal(I, sigma)
    others = [s for s in combinations(range(1, I.n + 1), len(sigma)) if s != sigma]
    for u in monomials_of_degree_at_most(I.n, 3):
        assert in_lower_bound(I, u, sigma) == (u in L)
        for s in others:
            assert in_sector(I, u, sigma, s) == (u in sector_ideal(I, sigma, s))


def test_examples(J, I3):
    assert sector_ideal(J, (1, 2), (3, 4)) == parse(4, "x3^2*x4", "x3*x4^2")
    assert boundary_ideal(J, (1, 2)).ideal == J + parse(4, "x3^2", "x3*x4", "x4^2")
    assert boundary_ideal(I3, (1, 2, 3)).ideal == I3
    assert boundary_ideal(maximal_ideal_power(3, 2), (1,)).ideal == maximal_ideal_power(3, 2)


def test_not_a_cycle(I3):
    with pytest.raises(NotACycle):
        is_boundary_monomial_cycle(I3, (0, 0, 0), (1,))
    with pytest.raises(ValueError):
        boundary_ideal(I3, (4,))
