from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import ideals, parse
from monocycles.boundary_ideal import boundary_ideal
from monocycles.cli import load_fixture
from monocycles.errors import DegreeOneGenerator
from monocycles.golod import (
    disjoint_pairs,
    four_variable_boundary_formula,
    golod4,
    h1h3_product_trivial,
    monomial_products_vanish,
    pairing_rank,
)
from monocycles.koszul import KoszulChain, is_boundary_oracle
from monocycles.monomials import colon_varset, ideal_product

deg2 = ideals(n_min=2, n_max=4, max_gens=4, min_degree=2)
four = ideals(n_min=4, n_max=4, max_gens=4, min_degree=2)


@pytest.mark.parametrize("n", range(1, 7))
def test_disjoint_pair_count(n):
    pairs = disjoint_pairs(n)
    assert len(pairs) == len(set(pairs)) == (3 ** n - 2 ** (n + 1) + 1) // 2
    assert all(A and B and not set(A) & set(B) for A, B in pairs)


def test_degree_one_rejected():
    with pytest.raises(DegreeOneGenerator):
        monomial_products_vanish(parse(3, "x1", "x2*x3"))
    with pytest.raises(ValueError):
        golod4(parse(3, "x1*x2"))


@settings(max_examples=60)
@given(deg2)
def test_symmetry_reduction_is_lossless(I):
    plain = monomial_products_vanish(I)
    assert monomial_products_vanish(I, use_symmetry=True).failures == plain.failures
    first = monomial_products_vanish(I, stop_at_first=True)
    assert first.holds == plain.holds


@settings(max_examples=60)
@given(deg2)
def test_failures_are_non_boundaries(I):
    rep = monomial_products_vanish(I)
    for f in rep.failures:
        z = KoszulChain.monomial(f.witness, tuple(sorted(f.A + f.B)))
        assert not is_boundary_oracle(I, z)


@settings(max_examples=40)
@given(deg2)
def test_vanishing_checked_by_oracle(I):
    if not monomial_products_vanish(I).holds:
        return
    for A, B in disjoint_pairs(I.n):
        U = tuple(sorted(A + B))
        for w in ideal_product([colon_varset(I, A), colon_varset(I, B)]).gens:
            if w not in I:
                assert is_boundary_oracle(I, KoszulChain.monomial(w, U))


def test_parallel_matches_serial():
    I = parse(4, "x1^2*x2", "x2^2*x3", "x3^2*x4", "x4^2*x1", "x1*x3")
    assert monomial_products_vanish(I, jobs=2) == monomial_products_vanish(I)


@settings(max_examples=40)
@given(four)
def test_four_variable_formula(I):
    for pair in combinations(range(1, 5), 2):
        assert four_variable_boundary_formula(I, pair) == boundary_ideal(I, pair).ideal


@settings(max_examples=25)
@given(four)
def test_golod4_implies_trivial_products(I):
    if not golod4(I).holds:
        return
    assert monomial_products_vanish(I).holds
    assert h1h3_product_trivial(I)
    for p, q in [(1, 1), (1, 2), (1, 3), (2, 2)]:
        assert pairing_rank(I, p, q) == 0


def test_J(J):
    assert golod4(J).holds
    assert h1h3_product_trivial(J)
    assert pairing_rank(J, 1, 3) == 0


@pytest.mark.parametrize("name", ["nonvanishing", "sym_table_2", "sym_table_5", "five_var"])
def test_known_failures_are_non_boundaries(name):
    I = load_fixture(name)
    rep = monomial_products_vanish(I)
    assert rep.failures
    for f in rep.failures:
        assert not is_boundary_oracle(I, KoszulChain.monomial(f.witness, tuple(sorted(f.A + f.B))))
