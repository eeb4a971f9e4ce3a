from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monocycles.exactalg import GF2, GF3, QQ
from monocycles.simplicial_matroid import (
    SignMatrixSpec,
    build_sign_matrix,
    circuits_through,
    closed_form_tag,
    format_circuit,
    sgn,
    subsets,
    working_prime,
)

FIELDS = [QQ, GF2, GF3]
CLOSED = [(n, p) for n in range(3, 7) for p in range(1, n) if closed_form_tag(n, p)]


def test_sgn():
    assert sgn((1, 2, 3, 4), 4) == -1
    assert sgn((1, 2, 3, 4), 3) == 1
    assert sgn((2, 5), 2) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_consecutive_sign_matrices_compose_to_zero(n):
    for p in range(1, n - 1):
        a = build_sign_matrix(SignMatrixSpec(n, p))
        b = build_sign_matrix(SignMatrixSpec(n, p + 1))
        assert not any(any(r) for r in (a @ b).entries)


def test_invalid_spec():
    with pytest.raises(ValueError):
        SignMatrixSpec(3, 3)
    with pytest.raises(ValueError):
        circuits_through(SignMatrixSpec(4, 2), (1, 2, 3))


@pytest.mark.parametrize("n,p", CLOSED)
@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_closed_forms_match_search(n, p, field):
    spec = SignMatrixSpec(n, p, field)
    for sigma in [tuple(range(1, p + 1)), tuple(range(n - p + 1, n + 1))]:
        assert set(circuits_through(spec, sigma, "auto")) == set(circuits_through(spec, sigma, "brute"))


@pytest.mark.parametrize("n,p", [(4, 2), (5, 2), (5, 3)])
def test_brute_routes_agree(n, p):
    for sigma in combinations(range(1, n + 1), p):
        spec = SignMatrixSpec(n, p)
        assert set(circuits_through(spec, sigma, "brute")) == set(circuits_through(spec, sigma, "brute-direct"))


def test_p1_single_circuit():
    assert [format_circuit(c, 4) for c in circuits_through(SignMatrixSpec(4, 1), (1,))] == ["1,2,3,4"]


@given(st.integers(4, 6), st.data())
def test_circuits_contain_sigma(n, data):
    p = data.draw(st.integers(1, n - 1))
    sigma = data.draw(st.sampled_from(subsets(n, p)))
    for c in circuits_through(SignMatrixSpec(n, p), sigma):
        assert sigma in c and all(len(s) == p for s in c)


def test_working_prime():
    assert working_prime(4, 2, GF2) == 2
    assert working_prime(4, 2, QQ) > 2
