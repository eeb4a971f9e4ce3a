"""Products of Koszul homology classes: monomial-cycle vanishing, the
four-variable Golod criterion, and a direct homology pairing.

The product of the cycles f e_A and g e_B (f in I:A, g in I:B, A and B
disjoint) is the monomial cycle fg e_(A u B), so all such products vanish
exactly when [I:A][I:B] lies in the boundary ideal of A u B. Colon and
boundary ideals only depend on the sets, hence unordered pairs {A, B} cover
every relabelling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .boundary_ideal import in_boundary_ideal
from .errors import DegreeOneGenerator, InstanceTooLarge
from .exactalg import QQ, FieldSpec
from .koszul import class_rank, homology_basis, lcm_lattice, strand_homology_dim, wedge
from .monomials import (
    MonomialIdeal,
    automorphisms,
    colon_monomial,
    colon_varset,
    ideal_product,
    ideal_sum,
    intersection,
    times_monomial,
    var,
    x_set,
)

PAIRING_CAP = 4000


@dataclass(frozen=True)
class Failure:
    p: int
    A: tuple
    B: tuple
    witness: tuple


@dataclass(frozen=True)
class InclusionReport:
    holds: bool
    failures: tuple = dc_field(default=())
    checked: int = 0

    def __bool__(self):
        return self.holds


def require_degree_two(I: MonomialIdeal):
    if any(sum(g) < 2 for g in I.gens):
        raise DegreeOneGenerator("every generator must have degree at least 2")


def disjoint_pairs(n: int):
    """Unordered pairs {A, B} of disjoint nonempty subsets of [n], canonically ordered."""
    out = []
    for size in range(2, n + 1):
        for U in combinations(range(1, n + 1), size):
            for k in range(1, size // 2 + 1):
                for A in combinations(U, k):
                    B = tuple(i for i in U if i not in A)
                    if k == size - k and A > B:
                        continue
                    out.append((A, B))
    return out


def _first_failure(I, A, B, field):
    U = tuple(sorted(A + B))
    prod = ideal_product([colon_varset(I, A), colon_varset(I, B)])
    for w in sorted(prod.gens, key=lambda u: (sum(u), tuple(-e for e in u))):
        if not in_boundary_ideal(I, w, U, field):
            return Failure(len(U), A, B, w)
    return None


def canonical_pair(A, B):
    A, B = tuple(sorted(A)), tuple(sorted(B))
    if (len(A), A) > (len(B), B):
        A, B = B, A
    return A, B


def pair_orbits(n: int, group) -> list[list]:
    """Partition the unordered disjoint pairs into orbits under ``group``."""
    seen = set()
    orbits = []
    for A, B in disjoint_pairs(n):
        if (A, B) in seen:
            continue
        orb = sorted({canonical_pair([pi[a - 1] for a in A], [pi[b - 1] for b in B]) for pi in group},
                     key=lambda ab: (len(ab[0]) + len(ab[1]), len(ab[0]), ab))
        seen.update(orb)
        orbits.append(orb)
    return orbits


def _chunk(args):
    I, pairs, field = args
    return [_first_failure(I, A, B, field) for A, B in pairs]


def monomial_products_vanish(I: MonomialIdeal, field: FieldSpec = QQ, jobs: int = 1,
                             stop_at_first: bool = False, use_symmetry: bool = False) -> InclusionReport:
    """Check [I:A][I:B] in B^(A u B) for every unordered disjoint pair {A, B}.

    With ``use_symmetry`` one pair per orbit of the automorphism group of I is
    checked; orbits whose representative fails are checked member by member,
    so the report is the same as without it.
    """
    require_degree_two(I)
    if use_symmetry:
        return _vanish_by_orbits(I, field, stop_at_first)
    pairs = disjoint_pairs(I.n)
    if jobs > 1 and not stop_at_first:
        chunks = [pairs[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_chunk, [(I, c, field) for c in chunks]))
        by_pair = {}
        for c, res in zip(chunks, parts):
            by_pair.update(zip(c, res))
        results = [by_pair[pq] for pq in pairs]
    else:
        results = []
        for A, B in pairs:
            r = _first_failure(I, A, B, field)
            results.append(r)
            if r and stop_at_first:
                break
    failures = tuple(r for r in results if r)
    return InclusionReport(not failures, failures, len(results))


def _vanish_by_orbits(I, field, stop_at_first):
    by_pair = {}
    checked = 0
    for orb in pair_orbits(I.n, automorphisms(I)):
        rep = orb[0]
        r = _first_failure(I, *rep, field)
        checked += 1
        if r is None:
            continue
        if stop_at_first:
            return InclusionReport(False, (r,), checked)
        by_pair[rep] = r
        for A, B in orb[1:]:
            by_pair[(A, B)] = _first_failure(I, A, B, field)
            checked += 1
    failures = tuple(by_pair[pq] for pq in disjoint_pairs(I.n) if by_pair.get(pq))
    return InclusionReport(not failures, failures, checked)


# --- four variables -------------------------------------------------------

def four_variable_boundary_formula(I: MonomialIdeal, pair=(1, 2)) -> MonomialIdeal:
    """B^{i,j} in four variables, written with colons only.

    I + (x_k, x_l)[I:(x_i,x_j)] + x_k x_l [I:x_i x_j] meet
    (x_k[I:x_i] meet x_l[I:x_j] + x_k[I:x_j] meet x_l[I:x_i]).
    """
    if I.n != 4:
        raise ValueError("the formula is for four variables")
    i, j = sorted(pair)
    k, l = (t for t in range(1, 5) if t not in (i, j))
    n = 4
    cij = colon_varset(I, (i, j))
    ci, cj = colon_monomial(I, var(i, n)), colon_monomial(I, var(j, n))
    xk, xl = var(k, n), var(l, n)
    top = times_monomial(colon_monomial(I, x_set((i, j), n)), x_set((k, l), n))
    cross = ideal_sum([
        intersection([times_monomial(ci, xk), times_monomial(cj, xl)]),
        intersection([times_monomial(cj, xk), times_monomial(ci, xl)]),
    ])
    return ideal_sum([I, times_monomial(cij, xk), times_monomial(cij, xl), intersection([top, cross])])


def _inclusion_failure(lhs: MonomialIdeal, rhs: MonomialIdeal):
    for w in sorted(lhs.gens, key=lambda u: (sum(u), tuple(-e for e in u))):
        if w not in rhs:
            return w
    return None


def _four_variable_checks(I: MonomialIdeal):
    n = 4
    full = tuple(range(1, 5))
    for i in full:
        rest = tuple(t for t in full if t != i)
        yield (i,), rest, I
    for A in [(1, 2), (1, 3), (1, 4)]:
        B = tuple(t for t in full if t not in A)
        yield A, B, I
    for l in full:
        trio = tuple(t for t in full if t != l)
        rhs = ideal_sum([I, times_monomial(colon_varset(I, trio), var(l, n))])
        for i in trio:
            yield (i,), tuple(t for t in trio if t != i), rhs
    for i, j in combinations(full, 2):
        yield (i,), (j,), four_variable_boundary_formula(I, (i, j))


def golod4(I: MonomialIdeal, field: FieldSpec = QQ) -> InclusionReport:
    """The four families of colon inclusions that characterise Golod ideals in four variables.

    The inclusions are characteristic free; ``field`` is accepted for a
    uniform interface.
    """
    if I.n != 4:
        raise ValueError(f"golod4 needs n = 4, got n = {I.n}")
    require_degree_two(I)
    failures = []
    count = 0
    for A, B, rhs in _four_variable_checks(I):
        count += 1
        w = _inclusion_failure(ideal_product([colon_varset(I, A), colon_varset(I, B)]), rhs)
        if w is not None:
            failures.append(Failure(len(A) + len(B), A, B, w))
    return InclusionReport(not failures, tuple(failures), count)


def h1h3_product_trivial(I: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """[I:x_i][I:(the other three)] in I for every i (four variables)."""
    if I.n != 4:
        raise ValueError(f"needs n = 4, got n = {I.n}")
    full = tuple(range(1, 5))
    for i in full:
        rest = tuple(t for t in full if t != i)
        if _inclusion_failure(ideal_product([colon_monomial(I, var(i, 4)), colon_varset(I, rest)]), I) is not None:
            return False
    return True


# --- the homology pairing --------------------------------------------------

def homology_product_pairing(I: MonomialIdeal, p: int, q: int, field: FieldSpec = QQ) -> dict:
    """Rank of H_p(a) x H_q(b) -> H_(p+q)(a+b) for every pair of multidegrees.

    Homology bases come from the strand computation; the rank is the
    dimension of the span of all products of basis classes, modulo
    boundaries in the target strand. Only pairs where both sides are nonzero
    are listed.
    """
    if p < 1 or q < 1:
        raise ValueError("homological degrees must be positive")
    lattice = lcm_lattice(I)
    left = [a for a in lattice if strand_homology_dim(I, p, a, field)]
    right = [b for b in lattice if strand_homology_dim(I, q, b, field)]
    if len(left) * len(right) > PAIRING_CAP:
        raise InstanceTooLarge(f"{len(left) * len(right)} multidegree pairs exceed the cap {PAIRING_CAP}")
    out = {}
    for a in left:
        ha = homology_basis(I, p, a, field)
        for b in right:
            if p + q > I.n:
                out[(a, b)] = 0
                continue
            hb = homology_basis(I, q, b, field)
            target = tuple(x + y for x, y in zip(a, b))
            prods = [wedge(c1, c2, I) for c1 in ha for c2 in hb]
            out[(a, b)] = class_rank(I, p + q, target, prods, field)
    return out


def pairing_rank(I: MonomialIdeal, p: int, q: int, field: FieldSpec = QQ) -> int:
    """Total rank over all multidegree pairs."""
    return sum(homology_product_pairing(I, p, q, field).values())
