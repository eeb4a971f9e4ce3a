"""Ideals with linear quotients and their monomial bases in Koszul homology.

An order u_1..u_m of G(I) has linear quotients when every colon
(u_1..u_(j-1)) : u_j is generated by variables; set(u_j) lists them. Under a
degree-increasing order with a regular decomposition function the iterated
mapping cone gives the minimal resolution explicitly, and with nice Koszul
lifts the cycles (u/x_l) e_l ^ e_sigma, sigma in set(u), form a basis of
Koszul homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import HypothesisFailure, InstanceTooLarge, PathDisagreement
from .exactalg import QQ, ExactMatrix, FieldSpec, rank
from .koszul import KoszulChain, class_rank, is_cycle, shuffle_sign, strand_homology_dim, total_betti
from .monomials import (
    MonomialIdeal,
    degree,
    divides,
    format_monomial,
    gcd,
    lcm,
    minimalize,
    monomials_in_box,
    mul,
    quo,
    support,
    var,
    x_set,
)
from .symmetric import is_symmetric_shifted, normalize, partitions_from_ideal

ORDER_SEARCH_CAP = 16


@dataclass(frozen=True)
class LinearQuotientOrder:
    order: tuple
    sets: tuple  # sets[j] is set(order[j]) as a sorted tuple

    def set_of(self, u) -> tuple:
        return self.sets[self.order.index(tuple(u))]

    @property
    def degree_increasing(self) -> bool:
        degs = [degree(u) for u in self.order]
        return degs == sorted(degs)


@dataclass(frozen=True)
class MonomialBasisCycle:
    u: tuple
    ell: int
    sigma: tuple

    @property
    def homological_degree(self) -> int:
        return len(self.sigma) + 1

    @property
    def multidegree(self) -> tuple:
        return mul(self.u, x_set(self.sigma, len(self.u)))

    def chain(self, field: FieldSpec = QQ) -> KoszulChain:
        """(u/x_l) e_l ^ e_sigma as a signed basis chain."""
        n = len(self.u)
        s = shuffle_sign((self.ell,), self.sigma)
        return KoszulChain(n, len(self.sigma) + 1, {(((self.ell,) + self.sigma), quo(self.u, var(self.ell, n))): s},
                           field)

    def __str__(self):
        u = format_monomial(self.u)
        sig = "".join(map(str, self.sigma)) if len(self.u) < 10 else "_".join(map(str, self.sigma))
        return f"({u}/x{self.ell}) e{self.ell}" + (f"^e{sig}" if self.sigma else "")


# --- orders ----------------------------------------------------------------

def _colon_gens(prefix, u) -> tuple:
    return minimalize(quo(v, gcd(v, u)) for v in prefix)


def _linear_set(prefix, u):
    """set(u) when (prefix) : u is generated by variables, else None."""
    gens = _colon_gens(prefix, u)
    if any(degree(g) != 1 for g in gens):
        return None
    return tuple(sorted(support(g)[0] for g in gens))


def check_linear_quotients(I: MonomialIdeal, order) -> LinearQuotientOrder | None:
    order = tuple(tuple(u) for u in order)
    if sorted(order) != sorted(I.gens):
        raise ValueError("order must be a permutation of the minimal generators")
    sets = []
    for j, u in enumerate(order):
        s = _linear_set(order[:j], u)
        if s is None:
            return None
        sets.append(s)
    return LinearQuotientOrder(order, tuple(sets))


def _revlex_key(u):
    return (degree(u), tuple(reversed(u)))


def revlex_order(I: MonomialIdeal) -> list:
    """Degree first, then decreasing in reverse lexicographic order (x1 > ... > xn)."""
    return sorted(I.gens, key=_revlex_key)


def shifted_order(I: MonomialIdeal) -> list:
    """Partitions increasing in graded lex, then each orbit from the x1-heavy end."""
    def key(u):
        lam = normalize(u)
        return (sum(lam), lam, tuple(-e for e in u))
    return sorted(I.gens, key=key)


def find_linear_quotients_order(I: MonomialIdeal) -> LinearQuotientOrder | None:
    """A degree-increasing order with linear quotients, by backtracking.

    The colon at each step only depends on the set of generators placed so
    far, so dead sets are remembered.
    """
    gens = list(I.gens)
    if len(gens) > ORDER_SEARCH_CAP:
        raise InstanceTooLarge(f"{len(gens)} generators; order search is capped at {ORDER_SEARCH_CAP}")
    gens.sort(key=_revlex_key)
    dead = set()
    chosen: list = []
    sets: list = []

    def extend(placed: frozenset) -> bool:
        if len(placed) == len(gens):
            return True
        if placed in dead:
            return False
        rest = [g for g in gens if g not in placed]
        d = min(degree(g) for g in rest)
        for g in rest:
            if degree(g) != d:
                continue
            s = _linear_set(chosen, g)
            if s is None:
                continue
            chosen.append(g)
            sets.append(s)
            if extend(placed | {g}):
                return True
            chosen.pop()
            sets.pop()
        dead.add(placed)
        return False

    if not extend(frozenset()):
        return None
    return LinearQuotientOrder(tuple(chosen), tuple(sets))


# --- decomposition function ------------------------------------------------

def decomposition(lq: LinearQuotientOrder, u) -> tuple:
    """g(u): the earliest generator in the order dividing u."""
    u = tuple(u)
    for v in lq.order:
        if divides(v, u):
            return v
    raise ValueError(f"{format_monomial(u)} is not in the ideal")


def decomposition_by_sets(lq: LinearQuotientOrder, u) -> tuple:
    """g(u) as the unique generator v | u with supp(u/v) disjoint from set(v)."""
    u = tuple(u)
    hits = [v for v, s in zip(lq.order, lq.sets)
            if divides(v, u) and not set(support(quo(u, v))) & set(s)]
    if len(hits) != 1:
        raise PathDisagreement(f"{len(hits)} generators qualify as g({format_monomial(u)})")
    return hits[0]


def _times_var(u, t):
    return mul(u, var(t, len(u)))


def is_regular(I: MonomialIdeal, lq: LinearQuotientOrder) -> bool:
    for u, s in zip(lq.order, lq.sets):
        for t in s:
            if not set(lq.set_of(decomposition(lq, _times_var(u, t)))) <= set(s):
                return False
    return True


def is_lift_index(lq: LinearQuotientOrder, u, ell: int) -> bool:
    """x_l divides u and every x_t u / g(x_t u), t in set(u)."""
    u = tuple(u)
    if not u[ell - 1]:
        return False
    return all(quo(_times_var(u, t), decomposition(lq, _times_var(u, t)))[ell - 1] for t in lq.set_of(u))


def nice_lift_indices(I: MonomialIdeal, lq: LinearQuotientOrder) -> dict | None:
    """u -> the smallest l in supp(u) with x_l | x_t u / g(x_t u) for all t in set(u)."""
    out = {}
    for u, s in zip(lq.order, lq.sets):
        quots = [quo(_times_var(u, t), decomposition(lq, _times_var(u, t))) for t in s]
        ell = next((l for l in support(u) if all(q[l - 1] for q in quots)), None)
        if ell is None:
            return None
        out[u] = ell
    return out


def mapping_cone_betti(lq: LinearQuotientOrder) -> tuple:
    """beta_i = #{(u, sigma) : sigma in set(u), |sigma| = i - 1}."""
    if not lq.degree_increasing:
        raise ValueError("the mapping cone count needs a degree-increasing order")
    top = max(len(s) for s in lq.sets) + 1
    return tuple(sum(comb(len(s), i - 1) for s in lq.sets) for i in range(1, top + 1))


# --- the resolution ----------------------------------------------------------

def _sgn(sigma, t) -> int:
    return -1 if sum(1 for s in sigma if s < t) % 2 else 1


@dataclass(frozen=True)
class Resolution:
    """Minimal free resolution F of S/I from iterated mapping cones.

    ``bases[i]`` lists the symbols (u, sigma) of F_i (``bases[0]`` is the
    single generator of F_0 = S, written ((0..0), ())). ``maps[i]`` is delta_i:
    F_i -> F_(i-1) as a dict (row, col) -> {monomial: integer coefficient}.
    """

    n: int
    bases: tuple
    maps: tuple

    def symbol_degree(self, i: int, k: int) -> tuple:
        u, sigma = self.bases[i][k]
        return mul(u, x_set(sigma, self.n))

    @property
    def ranks(self) -> tuple:
        return tuple(len(b) for b in self.bases[1:])


def resolution_differential(I: MonomialIdeal, lq: LinearQuotientOrder) -> Resolution:
    """delta(gamma^u_sigma) = -sum sgn(sigma,t) x_t gamma^u_(sigma-t)
    + sum sgn(sigma,t) (x_t u / g(x_t u)) gamma^(g(x_t u))_(sigma-t), and delta(gamma^u_()) = u.

    Symbols gamma^v_tau with tau not inside set(v) are zero.
    """
    if not lq.degree_increasing:
        raise ValueError("the resolution needs a degree-increasing order")
    if not is_regular(I, lq):
        raise HypothesisFailure("regular", "the decomposition function is not regular")
    n = I.n
    top = max(len(s) for s in lq.sets) + 1
    bases = [(((0,) * n, ()),)]
    for i in range(1, top + 1):
        bases.append(tuple((u, sig) for u, s in zip(lq.order, lq.sets) for sig in combinations(s, i - 1)))
    maps = [None]
    for i in range(1, top + 1):
        index = {b: k for k, b in enumerate(bases[i - 1])}
        entries: dict = {}

        def add(row_sym, col, mono, c):
            r = index.get(row_sym)
            if r is None:
                return
            poly = entries.setdefault((r, col), {})
            poly[mono] = poly.get(mono, 0) + c
            if not poly[mono]:
                del poly[mono]
                if not poly:
                    del entries[(r, col)]

        for col, (u, sigma) in enumerate(bases[i]):
            if i == 1:
                add(bases[0][0], col, u, 1)
                continue
            for t in sigma:
                rest = tuple(s for s in sigma if s != t)
                sg = _sgn(sigma, t)
                add((u, rest), col, var(t, n), -sg)
                w = _times_var(u, t)
                v = decomposition(lq, w)
                add((v, rest), col, quo(w, v), sg)
        maps.append(entries)
    return Resolution(n, tuple(bases), tuple(maps))


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def compose_is_zero(res: Resolution, i: int, field: FieldSpec = QQ) -> bool:
    """delta_(i-1) o delta_i = 0, computed symbolically over ``field``."""
    if i < 2 or i >= len(res.bases):
        return True
    acc: dict = {}
    for (r, k), p in res.maps[i - 1].items():
        for (k2, c), q in res.maps[i].items():
            if k2 != k:
                continue
            for m, v in _poly_mul(p, q).items():
                acc[(r, c, m)] = field.norm(acc.get((r, c, m), field.zero) + field(v))
    return not any(v != 0 for v in acc.values())


def _graded_matrix(res: Resolution, i: int, a, field: FieldSpec) -> ExactMatrix:
    """delta_i restricted to multidegree a, on the bases {x^(a - deg gamma) gamma}."""
    src = [k for k in range(len(res.bases[i])) if divides(res.symbol_degree(i, k), a)]
    dst = [k for k in range(len(res.bases[i - 1])) if divides(res.symbol_degree(i - 1, k), a)]
    rpos = {k: r for r, k in enumerate(dst)}
    rows = [[0] * len(src) for _ in dst]
    for c, k in enumerate(src):
        for (r, k2), poly in res.maps[i].items():
            if k2 == k and r in rpos:
                rows[rpos[r]][c] += sum(poly.values())
    return ExactMatrix(rows, field, len(src))


def is_homogeneous(res: Resolution) -> bool:
    """Every entry of delta_i carries deg gamma_row to deg gamma_col."""
    return all(mul(m, res.symbol_degree(i - 1, r)) == res.symbol_degree(i, c)
               for i in range(1, len(res.bases)) for (r, c), poly in res.maps[i].items() for m in poly)


def _rank(m: ExactMatrix) -> int:
    return rank(m) if m.rows and m.cols else 0


def is_exact_in_degree(I: MonomialIdeal, res: Resolution, a, field: FieldSpec = QQ) -> bool:
    """F is acyclic with H_0 = S/I in multidegree a."""
    a = tuple(a)
    top = len(res.bases) - 1
    ranks = [_rank(_graded_matrix(res, i, a, field)) for i in range(1, top + 1)] + [0]
    if 1 - ranks[0] != (0 if a in I else 1):
        return False
    for i in range(1, top + 1):
        dim = sum(1 for k in range(len(res.bases[i])) if divides(res.symbol_degree(i, k), a))
        if dim != ranks[i - 1] + ranks[i]:
            return False
    return True


def check_resolution(I: MonomialIdeal, res: Resolution, field: FieldSpec = QQ) -> bool:
    """Homogeneity, delta^2 = 0 and exactness in every multidegree of the box below lcm(G(I))."""
    if not is_homogeneous(res):
        return False
    if not all(compose_is_zero(res, i, field) for i in range(2, len(res.bases))):
        return False
    box = (0,) * I.n
    for g in I.gens:
        box = lcm(box, g)
    return all(is_exact_in_degree(I, res, a, field) for a in monomials_in_box(box))


# --- the monomial basis ------------------------------------------------------

def _candidate_orders(I: MonomialIdeal):
    yield "revlex", check_linear_quotients(I, revlex_order(I))
    if partitions_from_ideal(I) is not None:
        yield "shifted", check_linear_quotients(I, shifted_order(I))
    yield "search", find_linear_quotients_order(I)


_STAGES = ("linear-quotients", "regular", "nice-lifts")


def basis_hypotheses(I: MonomialIdeal):
    """(lq, lifts) for the first candidate order meeting all three conditions.

    Raises HypothesisFailure naming the furthest condition any order reached.
    """
    furthest = 0
    for _name, lq in _candidate_orders(I):
        if lq is None or not lq.degree_increasing:
            continue
        if not is_regular(I, lq):
            furthest = max(furthest, 1)
            continue
        lifts = nice_lift_indices(I, lq)
        if lifts is None:
            furthest = max(furthest, 2)
            continue
        return lq, lifts
    reason = _STAGES[furthest]
    raise HypothesisFailure(reason, {
        "linear-quotients": "no degree-increasing order with linear quotients",
        "regular": "no order found with a regular decomposition function",
        "nice-lifts": "the ideal does not have nice Koszul lifts",
    }[reason])


@dataclass(frozen=True)
class BasisCheck:
    counts: tuple  # cycles per homological degree
    cone_betti: tuple
    betti: tuple  # from the strand oracle
    independent: bool
    all_cycles: bool

    @property
    def ok(self) -> bool:
        width = len(self.betti)
        pad = lambda v: tuple(v) + (0,) * (width - len(v))
        return self.all_cycles and self.independent and pad(self.counts) == pad(self.cone_betti) == self.betti


def verify_basis(I: MonomialIdeal, cycles, lq: LinearQuotientOrder, field: FieldSpec = QQ) -> BasisCheck:
    """Cycle test, per-degree counts, and independence of the classes strand by strand."""
    counts = [0] * I.n
    by_strand: dict = {}
    all_cycles = True
    for c in cycles:
        ch = c.chain(field)
        all_cycles &= is_cycle(I, ch)
        counts[c.homological_degree - 1] += 1
        by_strand.setdefault((c.homological_degree, c.multidegree), []).append(ch)
    independent = all(
        class_rank(I, p, a, chs, field) == len(chs) == strand_homology_dim(I, p, a, field)
        for (p, a), chs in by_strand.items()
    )
    while counts and not counts[-1]:
        counts.pop()
    return BasisCheck(tuple(counts), mapping_cone_betti(lq), total_betti(I, field), independent, all_cycles)


def monomial_basis(I: MonomialIdeal, field: FieldSpec = QQ, verify: bool = True) -> list:
    """The cycles (u/x_l) e_l ^ e_sigma over u in G(I) and sigma in set(u).

    With ``verify`` the output is checked against the strand oracle and a
    mismatch raises PathDisagreement.
    """
    lq, lifts = basis_hypotheses(I)
    cycles = [MonomialBasisCycle(u, lifts[u], sig)
              for u, s in zip(lq.order, lq.sets) for k in range(len(s) + 1) for sig in combinations(s, k)]
    cycles.sort(key=lambda c: (c.homological_degree, lq.order.index(c.u), c.sigma))
    if verify:
        chk = verify_basis(I, cycles, lq, field)
        if not chk.ok:
            raise PathDisagreement(f"monomial basis failed verification: {chk}")
    return cycles


# --- recognizers -------------------------------------------------------------

def _max(u) -> int:
    return support(u)[-1]


def _exchange(u, i, m):
    w = list(u)
    w[m - 1] -= 1
    w[i - 1] += 1
    return tuple(w)


def is_stable(I: MonomialIdeal) -> bool:
    return all(_exchange(u, i, _max(u)) in I for u in I.gens for i in range(1, _max(u)))


def is_squarefree_stable(I: MonomialIdeal) -> bool:
    if not I.is_squarefree():
        return False
    for u in I.gens:
        m = _max(u)
        for i in range(1, m):
            if not u[i - 1] and _exchange(u, i, m) not in I:
                return False
    return True


def is_matroidal(I: MonomialIdeal) -> bool:
    """Squarefree, and the supports satisfy the basis exchange axiom."""
    if not I.gens or not I.is_squarefree():
        return False
    bases = {frozenset(support(u)) for u in I.gens}
    for B1 in bases:
        for B2 in bases:
            for b1 in B1 - B2:
                if not any((B1 - {b1}) | {b2} in bases for b2 in B2 - B1):
                    return False
    return True


@dataclass(frozen=True)
class Recognition:
    stable: bool
    squarefree_stable: bool
    matroidal: bool
    symmetric_shifted: bool


def recognize(I: MonomialIdeal) -> Recognition:
    spec = partitions_from_ideal(I)
    return Recognition(
        is_stable(I),
        is_squarefree_stable(I),
        is_matroidal(I),
        spec is not None and is_symmetric_shifted(spec),
    )


# --- closed forms for set(u) -------------------------------------------------

def stable_set(u) -> tuple:
    return tuple(range(1, _max(u)))


def squarefree_stable_set(u) -> tuple:
    return tuple(i for i in range(1, _max(u)) if not u[i - 1])


def shifted_set(u) -> tuple:
    """{i : nu_i < lambda_1 - 1} together with {j < m(u) : nu_j = lambda_1 - 1}."""
    top = max(u)
    m = max(i + 1 for i, e in enumerate(u) if e == top)
    return tuple(i + 1 for i, e in enumerate(u) if e < top - 1 or (e == top - 1 and i + 1 < m))
