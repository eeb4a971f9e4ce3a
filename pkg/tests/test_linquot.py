from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideals, parse
from monocycles.cli import load_fixture
from monocycles.errors import HypothesisFailure
from monocycles.golod import monomial_products_vanish
from monocycles.koszul import is_cycle, total_betti
from monocycles.linquot import (
    MonomialBasisCycle,
    basis_hypotheses,
    check_linear_quotients,
    check_resolution,
    compose_is_zero,
    decomposition,
    decomposition_by_sets,
    find_linear_quotients_order,
    is_lift_index,
    is_matroidal,
    is_regular,
    is_squarefree_stable,
    is_stable,
    mapping_cone_betti,
    monomial_basis,
    nice_lift_indices,
    recognize,
    resolution_differential,
    revlex_order,
    shifted_order,
    shifted_set,
    squarefree_stable_set,
    stable_set,
    verify_basis,
)
from monocycles.monomials import MonomialIdeal, monomials_in_box
from monocycles.symmetric import SymmetricIdealSpec, ideal_from_partitions, is_symmetric_shifted


def _max(u):
    return max(i + 1 for i, e in enumerate(u) if e)


def _moves(u):
    m = _max(u)
    for i in range(1, m):
        w = list(u)
        w[m - 1] -= 1
        w[i - 1] += 1
        yield tuple(w)


def closure(gens, step):
    seen, todo = set(gens), list(gens)
    while todo:
        for w in step(todo.pop()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@st.composite
def stable_ideals(draw):
    n = draw(st.integers(2, 4))
    d = draw(st.integers(2, 3))
    mono = st.lists(st.integers(0, d), min_size=n, max_size=n).filter(lambda u: sum(u) == d).map(tuple)
    seeds = draw(st.lists(mono, min_size=1, max_size=2))
    return MonomialIdeal(n, closure(seeds, _moves))


@st.composite
def squarefree_stable_ideals(draw):
    n = draw(st.integers(3, 5))
    d = draw(st.integers(2, n - 1))
    seeds = draw(st.lists(st.sampled_from(list(combinations(range(1, n + 1), d))), min_size=1, max_size=2))

    def step(u):
        return [w for w in _moves(u) if max(w) <= 1]

    return MonomialIdeal(n, closure([tuple(int(i + 1 in s) for i in range(n)) for s in seeds], step))


def shifted_specs(n_max=5, top=3):
    from test_symmetric import antichains
    return [SymmetricIdealSpec(n, lams) for n in range(2, n_max + 1) for lams in antichains(n, top)
            if is_symmetric_shifted(SymmetricIdealSpec(n, lams))]


SHIFTED = shifted_specs()


def test_J_order(J):
    lq = check_linear_quotients(J, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    assert lq.sets == ((), (3,), (1,), (1, 3))
    assert is_regular(J, lq) and nice_lift_indices(J, lq) is None
    assert mapping_cone_betti(lq) == (4, 4, 1)
    assert is_matroidal(J)


def test_J_matroidal_without_basis(J):
    with pytest.raises(HypothesisFailure) as e:
        monomial_basis(J)
    assert e.value.reason == "nice-lifts"
    for order in permutations(J.gens):
        lq = check_linear_quotients(J, order)
        if lq is not None and is_regular(J, lq):
            assert nice_lift_indices(J, lq) is None


@pytest.mark.parametrize("name,reason", [("no_linear_quotients", "linear-quotients"),
                                         ("weakly_polymatroidal", "regular"), ("J", "nice-lifts")])
def test_hypothesis_failures(name, reason):
    with pytest.raises(HypothesisFailure) as e:
        basis_hypotheses(load_fixture(name))
    assert e.value.reason == reason


def test_order_must_be_permutation(J):
    with pytest.raises(ValueError):
        check_linear_quotients(J, J.gens[:3])


@settings(max_examples=50)
@given(ideals(n_min=2, n_max=4, max_gens=5))
def test_decomposition_unique(I):
    lq = find_linear_quotients_order(I)
    if lq is None:
        return
    assert check_linear_quotients(I, lq.order) == lq
    top = [max(g[i] for g in I.gens) + 1 for i in range(I.n)]
    for u in monomials_in_box(top):
        if u in I:
            assert decomposition(lq, u) == decomposition_by_sets(lq, u)


@settings(max_examples=50)
@given(ideals(n_min=2, n_max=4, max_gens=5))
def test_mapping_cone_is_minimal(I):
    lq = find_linear_quotients_order(I)
    if lq is None or not lq.degree_increasing:
        return
    cone = mapping_cone_betti(lq)
    assert tuple(cone) + (0,) * (I.n - len(cone)) == total_betti(I)


@settings(max_examples=40)
@given(stable_ideals())
def test_stable(I):
    assert is_stable(I)
    lq = check_linear_quotients(I, revlex_order(I))
    assert lq is not None
    assert lq.sets == tuple(stable_set(u) for u in lq.order)
    assert all(is_lift_index(lq, u, _max(u)) for u in lq.order)
    cycles = monomial_basis(I)
    assert verify_basis(I, cycles, basis_hypotheses(I)[0]).ok
    assert monomial_products_vanish(I).holds


@settings(max_examples=40)
@given(squarefree_stable_ideals())
def test_squarefree_stable(I):
    assert is_squarefree_stable(I)
    lq = check_linear_quotients(I, revlex_order(I))
    assert lq is not None
    assert lq.sets == tuple(squarefree_stable_set(u) for u in lq.order)
    assert all(is_lift_index(lq, u, _max(u)) for u in lq.order)
    assert verify_basis(I, monomial_basis(I), basis_hypotheses(I)[0]).ok


def test_shifted_sets_formula():
    assert len(SHIFTED) > 50
    for spec in SHIFTED:
        I = ideal_from_partitions(spec)
        lq = check_linear_quotients(I, shifted_order(I))
        assert lq is not None, spec
        assert lq.sets == tuple(shifted_set(u) for u in lq.order), spec


def test_shifted_bases_and_vanishing():
    checked = 0
    for spec in SHIFTED:
        if spec.n > 4 or any(sum(l) < 2 for l in spec.lambdas):
            continue
        I = ideal_from_partitions(spec)
        if len(I) > 12:
            continue
        checked += 1
        assert recognize(I).symmetric_shifted
        assert monomial_basis(I)
        assert monomial_products_vanish(I, use_symmetry=True).holds
    assert checked >= 10


@pytest.mark.parametrize("name", ["max_ideal_square", "matroidal", "shifted", "J", "preimage",
                                  "weakly_polymatroidal"])
def test_resolution(name):
    I = load_fixture(name)
    lq = find_linear_quotients_order(I)
    assert lq is not None
    if not is_regular(I, lq):
        return
    res = resolution_differential(I, lq)
    assert all(compose_is_zero(res, i) for i in range(1, len(res.ranks)))
    assert check_resolution(I, res)


def test_basis_cycle():
    c = MonomialBasisCycle((1, 1, 0), 2, (1,))
    assert c.homological_degree == 2
    assert c.multidegree == (2, 1, 0)
    I = load_fixture("matroidal")
    for z in monomial_basis(I):
        assert is_cycle(I, z.chain())
    assert str(c)


def test_recognizers():
    assert recognize(parse(3, "x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2")).stable
    r = recognize(load_fixture("matroidal"))
    assert r.matroidal and r.squarefree_stable and not r.stable
    assert not is_matroidal(parse(3, "x1*x2", "x3"))
