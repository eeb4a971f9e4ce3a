"""Boundary ideals of monomial cycles.

For a p-subset sigma, the boundary ideal B^sigma_I is the intersection, over
the circuits C of M(n, p) containing sigma, of the sums

    sum_{sigma' in C} x_(sigma' - sigma) [I : x_(sigma - sigma')]

and u e_sigma (a cycle) is a boundary exactly when u lies in it. For
sigma = [n] there are no boundaries to speak of and B is I itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotACycle
from .exactalg import QQ, FieldSpec
from .koszul import is_monomial_cycle
from .monomials import (
    MonomialIdeal,
    colon_monomial,
    colon_varset,
    divides,
    ideal_sum,
    intersection,
    mul,
    quo,
    times_monomial,
    var,
    x_set,
)
from .simplicial_matroid import SignMatrixSpec, circuits_through, closed_form_tag


@dataclass(frozen=True)
class BoundaryIdealResult:
    ideal: MonomialIdeal
    circuits_used: tuple
    closed_form: str


def _check_sigma(I: MonomialIdeal, sigma) -> tuple:
    sigma = tuple(sorted(set(sigma)))
    if not sigma:
        raise ValueError("sigma must be nonempty")
    if not set(sigma) <= set(range(1, I.n + 1)):
        raise ValueError(f"{sigma} is not a subset of [{I.n}]")
    return sigma


def sector_ideal(I: MonomialIdeal, sigma, sigma_prime) -> MonomialIdeal:
    """x_(sigma' - sigma) [I : x_(sigma - sigma')]."""
    sigma, sigma_prime = set(sigma), set(sigma_prime)
    if len(sigma) != len(sigma_prime):
        raise ValueError("sigma and sigma' must have the same size")
    n = I.n
    return times_monomial(colon_monomial(I, x_set(sigma - sigma_prime, n)), x_set(sigma_prime - sigma, n))


def lower_bound_ideal(I: MonomialIdeal, sigma) -> MonomialIdeal:
    """I + (x_j : j not in sigma)[I : (x_i : i in sigma)], always inside B^sigma_I."""
    sigma = _check_sigma(I, sigma)
    rest = [j for j in range(1, I.n + 1) if j not in sigma]
    if not rest:
        return I
    c = colon_varset(I, sigma)
    return ideal_sum([I] + [times_monomial(c, var(j, I.n)) for j in rest])


def boundary_ideal_formula(I: MonomialIdeal, sigma) -> MonomialIdeal:
    """Closed formulas for |sigma| = 1 and |sigma| = n - 1.

    Both reduce to the lower bound: (x_j : j != i)[I : x_i] for sigma = {i},
    and x_l [I : x_sigma-variables] for sigma = [n] - {l}.
    """
    sigma = _check_sigma(I, sigma)
    if len(sigma) == I.n:
        return I
    if len(sigma) not in (1, I.n - 1):
        raise ValueError(f"no closed formula for |sigma| = {len(sigma)} in {I.n} variables")
    return lower_bound_ideal(I, sigma)


def _circuit_sum(I, sigma, circuit) -> MonomialIdeal:
    return ideal_sum([sector_ideal(I, sigma, s) for s in sorted(circuit)])


def boundary_ideal(I: MonomialIdeal, sigma, field: FieldSpec = QQ, method: str = "auto") -> BoundaryIdealResult:
    """B^sigma_I over ``field``.

    ``method``: ``"auto"`` uses the closed formulas for |sigma| in {1, n-1}
    and the circuit intersection otherwise; ``"circuits"`` always intersects
    over circuits (themselves from closed forms where known); ``"brute"``
    intersects over circuits found by exhaustive search.
    """
    sigma = _check_sigma(I, sigma)
    n, p = I.n, len(sigma)
    if p == n:
        return BoundaryIdealResult(I, (), "top")
    tag = closed_form_tag(n, p) or "brute"
    if method == "auto" and p in (1, n - 1):
        return BoundaryIdealResult(boundary_ideal_formula(I, sigma), (), tag)
    if method not in ("auto", "circuits", "brute"):
        raise ValueError(f"unknown method {method!r}")
    spec = SignMatrixSpec(n, p, field)
    circuits = circuits_through(spec, sigma, "brute" if method == "brute" else "auto")
    if method == "brute":
        tag = "brute"
    sums = [_circuit_sum(I, sigma, c) for c in circuits]
    return BoundaryIdealResult(intersection(sums), circuits, tag)


def in_sector(I: MonomialIdeal, u, sigma, sigma_prime) -> bool:
    """u in x_(sigma' - sigma)[I : x_(sigma - sigma')], without building the ideal."""
    n = I.n
    up = x_set(set(sigma_prime) - set(sigma), n)
    if not divides(up, u):
        return False
    return mul(quo(u, up), x_set(set(sigma) - set(sigma_prime), n)) in I


def in_lower_bound(I: MonomialIdeal, u, sigma) -> bool:
    if u in I:
        return True
    for j in range(1, I.n + 1):
        if j in sigma or not u[j - 1]:
            continue
        v = list(u)
        v[j - 1] -= 1
        if all(mul(v, var(i, I.n)) in I for i in sigma):
            return True
    return False


def in_boundary_ideal(I: MonomialIdeal, u, sigma, field: FieldSpec = QQ) -> bool:
    """Membership u in B^sigma_I, checked circuit by circuit."""
    sigma = _check_sigma(I, sigma)
    u = tuple(u)
    if len(sigma) == I.n:
        return u in I
    if in_lower_bound(I, u, sigma):
        return True
    spec = SignMatrixSpec(I.n, len(sigma), field)
    return all(any(in_sector(I, u, sigma, s) for s in c) for c in circuits_through(spec, sigma))


def is_boundary_monomial_cycle(I: MonomialIdeal, u, sigma, field: FieldSpec = QQ) -> bool:
    """Whether the cycle u e_sigma is a boundary in the Koszul complex of S/I."""
    sigma = _check_sigma(I, sigma)
    if not is_monomial_cycle(I, u, sigma):
        raise NotACycle(f"u e_{sigma} is not a cycle: u is not in I : (x_i : i in sigma)")
    return in_boundary_ideal(I, u, sigma, field)
