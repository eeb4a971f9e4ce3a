"""The documented worked examples as named checks, run by ``monocycles selftest``."""

from __future__ import annotations

from .boundary_ideal import boundary_ideal, in_boundary_ideal, is_boundary_monomial_cycle, sector_ideal
from .errors import HypothesisFailure
from .exactalg import GF2, GF3, QQ, ExactMatrix, rank, solve
from .golod import golod4, h1h3_product_trivial, monomial_products_vanish, pairing_rank
from .koszul import (
    KoszulChain,
    chain_to_vector,
    differential,
    is_boundary_oracle,
    monomial_span_deficit,
    strand_basis,
    strand_homology_dim,
    strand_matrix,
    total_betti,
    wedge,
)
from .linquot import (
    check_linear_quotients,
    find_linear_quotients_order,
    is_lift_index,
    is_regular,
    mapping_cone_betti,
    monomial_basis,
    nice_lift_indices,
    recognize,
    revlex_order,
)
from .monomials import (
    MonomialIdeal,
    colon_monomial,
    colon_varset,
    ideal_product,
    ideal_sum,
    inclusion,
    maximal_ideal_power,
    times_monomial,
    var,
)
from .simplicial_matroid import SignMatrixSpec, build_sign_matrix, circuits_through, format_circuit, sgn
from .symmetric import (
    SymmetricIdealSpec,
    critical_exponent,
    ideal_from_partitions,
    is_symmetric_shifted,
    partitions_from_ideal,
    principal_golod,
    symmetric_monprod_vanish,
    vp_profile,
)


def _I(n, *gens):
    return MonomialIdeal.parse(n, gens)


J = _I(4, "x1*x3", "x1*x4", "x2*x3", "x2*x4")
I3 = _I(3, "x1*x3", "x2*x3")
PRE = _I(4, "x1*x2", "x1*x4", "x2*x3")
RP2 = _I(6, "x1*x2*x3", "x1*x2*x4", "x1*x3*x5", "x1*x4*x6", "x1*x5*x6",
         "x2*x3*x6", "x2*x4*x5", "x2*x5*x6", "x3*x4*x5", "x3*x4*x6")
FIVE = _I(5, "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x5^2")
NONVAN = ideal_from_partitions(SymmetricIdealSpec(4, ((3, 0, 0, 0), (2, 1, 0, 0))))
TABLE = [
    (((3, 1, 0, 0), (2, 2, 0, 0)), [2, 3, 4]),
    (((3, 0, 0, 0), (2, 1, 0, 0)), [2, 3]),
    (((3, 0, 0, 0), (2, 1, 1, 0)), [3, 4]),
    (((2, 0, 0, 0), (1, 1, 1, 1)), [4]),
    (((2, 0, 0, 0),), []),
]


def _mono(u, sigma, field=QQ):
    return KoszulChain.monomial(u, sigma, field)


def _chain(terms, field=QQ):
    n = len(terms[0][1])
    return KoszulChain(n, len(terms[0][0]), {(s, m): c for s, m, c in terms}, field)


def _augmented_no_preimage():
    z = _mono((0, 0, 1), (1, 2))
    a = z.multidegree()
    return solve(strand_matrix(I3, 3, a), chain_to_vector(z, strand_basis(I3, 2, a))) is None


def _witness_is(I, z, expected):
    v = is_boundary_oracle(I, z, witness=True)
    return v.is_boundary and differential(I, v.witness).reduce(I) == z and v.witness == expected


def _deficit_2110():
    I = ideal_from_partitions(SymmetricIdealSpec(4, ((2, 1, 1, 0),)))
    # x1x2x3 e124 - x1x2x4 e123, multidegree (2,2,1,1)
    z = _chain([((1, 2, 4), (1, 1, 1, 0), 1), ((1, 2, 3), (1, 1, 0, 1), -1)])
    ok_cycle = not differential(I, z.reduce(I))
    return ok_cycle and not is_boundary_oracle(I, z) and any(d > 0 for _, d in monomial_span_deficit(I, 3))


def _nice_lifts_at(I, rule):
    lq = check_linear_quotients(I, revlex_order(I))
    lifts = nice_lift_indices(I, lq)
    return lifts is not None and all(lifts[u] == rule(u) for u in lq.order)


def _no_lq_any_order():
    from itertools import permutations
    I = _I(2, "x1^5", "x1^4*x2", "x1*x2^4", "x2^5")
    return all(check_linear_quotients(I, o) is None for o in permutations(I.gens)) and \
        find_linear_quotients_order(I) is None


def _j_order():
    lq = check_linear_quotients(J, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    return lq


def _basis_fails_nice_lifts(I):
    try:
        monomial_basis(I)
    except HypothesisFailure as e:
        return e.reason == "nice-lifts"
    return False


def _shifted_lifts():
    from .linquot import shifted_order

    spec = SymmetricIdealSpec(3, ((2, 1, 0), (1, 1, 1)))
    I = ideal_from_partitions(spec)
    lq = check_linear_quotients(I, shifted_order(I))
    lifts = nice_lift_indices(I, lq)

    def m(u):
        return max(i + 1 for i, e in enumerate(u) if e == max(u))

    from .monomials import mul, quo
    from .linquot import decomposition
    for u, s in zip(lq.order, lq.sets):
        for t in s:
            w = mul(u, var(t, 3))
            if not quo(w, decomposition(lq, w))[m(u) - 1]:
                return False
    return lifts is not None


def _matroidal_lifts():
    I = _I(3, "x1*x2", "x1*x3", "x2*x3")
    lq = check_linear_quotients(I, revlex_order(I))
    return recognize(I).matroidal and len(monomial_basis(I)) == 5 and \
        all(is_lift_index(lq, u, max(i + 1 for i, e in enumerate(u) if e)) for u in lq.order)


CHECKS = [
    # exact linear algebra
    ("rank of M(4,3) is 1", lambda: rank(build_sign_matrix(SignMatrixSpec(4, 3))) == 1),
    ("x3 e12 over (x1x3,x2x3): augmented system has no solution", _augmented_no_preimage),
    # monomial ideals
    ("x3x4 in J + (x3,x4)^2", lambda: (0, 0, 1, 1) in J + maximal_ideal_power_in(4, (3, 4), 2)),
    ("J : x1 = (x3,x4)", lambda: colon_monomial(J, var(1, 4)) == _I(4, "x3", "x4")),
    ("J : x1x2 = (x3,x4) (the ideal J itself is not the colon)",
     lambda: colon_monomial(J, (1, 1, 0, 0)) == _I(4, "x3", "x4")),
    ("J : (x1,x2) = (x3,x4)", lambda: colon_varset(J, (1, 2)) == _I(4, "x3", "x4")),
    ("(x1x3,x2x3) : (x1,x2) = (x3)", lambda: colon_varset(I3, (1, 2)) == _I(3, "x3")),
    ("J : (x1,x2,x3) = J", lambda: colon_varset(J, (1, 2, 3)) == J),
    ("(x1x3,x2x3) + x3[(x1x3,x2x3):(x1,x2)] = (x1x3,x2x3,x3^2)",
     lambda: ideal_sum([I3, times_monomial(colon_varset(I3, (1, 2)), var(3, 3))]) == _I(3, "x1*x3", "x2*x3", "x3^2")),
    ("[J:x1][J:x2] = (x3,x4)^2 inside J + (x3,x4)^2",
     lambda: ideal_product([colon_monomial(J, var(1, 4)), colon_monomial(J, var(2, 4))])
     == maximal_ideal_power_in(4, (3, 4), 2)
     and inclusion(maximal_ideal_power_in(4, (3, 4), 2), J + maximal_ideal_power_in(4, (3, 4), 2))),
    ("(x3) not inside (x1x3,x2x3,x3^2)", lambda: not inclusion(_I(3, "x3"), _I(3, "x1*x3", "x2*x3", "x3^2"))),
    # simplicial matroid
    ("sgn({1,2,3,4},4) = -1 and sgn({1,2,3,4},3) = +1",
     lambda: sgn((1, 2, 3, 4), 4) == -1 and sgn((1, 2, 3, 4), 3) == 1),
    ("M(4,3) column is (-1,1,-1,1)",
     lambda: [r[0] for r in build_sign_matrix(SignMatrixSpec(4, 3)).entries] == [-1, 1, -1, 1]),
    ("M(4,2) row 12 is (1,1,0,0)", lambda: list(build_sign_matrix(SignMatrixSpec(4, 2)).entries[0]) == [1, 1, 0, 0]),
    ("M(4,1) row 1 is (-1,-1,-1,0,0,0)",
     lambda: list(build_sign_matrix(SignMatrixSpec(4, 1)).entries[0]) == [-1, -1, -1, 0, 0, 0]),
    ("circuits of M(4,2) through 12, over QQ and GF(2)",
     lambda: all(sorted(format_circuit(c, 4) for c in circuits_through(SignMatrixSpec(4, 2, f), (1, 2), "brute"))
                 == ["12,13,14", "12,13,24,34", "12,14,23,34", "12,23,24"] for f in (QQ, GF2))),
    ("circuits of M(4,1) through 1", lambda: [format_circuit(c, 4) for c in
                                             circuits_through(SignMatrixSpec(4, 1), (1,), "brute")] == ["1,2,3,4"]),
    ("the ten RP2 rows of M(6,3) are dependent over GF(2) only",
     lambda: _rp2_dependent(GF2) and not _rp2_dependent(GF3) and not _rp2_dependent(QQ)),
    # Koszul complex
    ("d(x4 e123) over J = x3x4 e12",
     lambda: differential(J, _mono((0, 0, 0, 1), (1, 2, 3))) == _mono((0, 0, 1, 1), (1, 2))),
    ("d(x3 e123) over (x1x3,x2x3) = x3^2 e12 (the other two terms land in I)",
     lambda: differential(I3, _mono((0, 0, 1), (1, 2, 3))) == _mono((0, 0, 2), (1, 2))),
    ("J: dim H3 at (1,1,1,1) is 1", lambda: strand_homology_dim(J, 3, (1, 1, 1, 1)) == 1),
    ("RP2: dim H3 at (1,..,1) is 1 over GF(2), 0 over QQ",
     lambda: strand_homology_dim(RP2, 3, (1,) * 6, GF2) == 1 and strand_homology_dim(RP2, 3, (1,) * 6, QQ) == 0),
    ("J: Betti numbers (4,4,1,0)", lambda: total_betti(J) == (4, 4, 1, 0)),
    ("(x1x3,x1x4,x2x3,x2x4,x5^2): beta4 = 1", lambda: total_betti(FIVE)[3] == 1),
    ("x3^2 e12 is a boundary with preimage x3 e123",
     lambda: _witness_is(I3, _mono((0, 0, 2), (1, 2)), _mono((0, 0, 1), (1, 2, 3)))),
    ("x3 e12 is not a boundary", lambda: not is_boundary_oracle(I3, _mono((0, 0, 1), (1, 2)))),
    ("x3x4 e12 over (x1x2,x1x4,x2x3) has preimage x4 e123 + x2 e134",
     lambda: _witness_is(PRE, _mono((0, 0, 1, 1), (1, 2)),
                         _chain([((1, 2, 3), (0, 0, 0, 1), 1), ((1, 3, 4), (0, 1, 0, 0), 1)]))),
    ("(x3 e1) ^ (x4 e2) = x3x4 e12",
     lambda: wedge(_mono((0, 0, 1, 0), (1,)), _mono((0, 0, 0, 1), (2,))) == _mono((0, 0, 1, 1), (1, 2))),
    ("(x1x2 e12) ^ (x3x4 e34) = x1x2x3x4 e1234",
     lambda: wedge(_mono((1, 1, 0, 0), (1, 2)), _mono((0, 0, 1, 1), (3, 4))) == _mono((1, 1, 1, 1), (1, 2, 3, 4))),
    ("J: monomial-span deficit 1 at (1,1,1,1) in H3, none in H2",
     lambda: monomial_span_deficit(J, 3) == [((1, 1, 1, 1), 1)] and monomial_span_deficit(J, 2) == []),
    ("orbit of (2,1,1,0): H3 class x1x2x3 e124 - x1x2x4 e123 not monomial", _deficit_2110),
    # boundary ideals
    ("sector x3x4[J:x1x2] for sigma 12, sigma' 34 is (x3^2x4, x3x4^2)",
     lambda: sector_ideal(J, (1, 2), (3, 4)) == _I(4, "x3^2*x4", "x3*x4^2")),
    ("B^12 of (x1x3,x2x3) = (x1x3,x2x3,x3^2)",
     lambda: boundary_ideal(I3, (1, 2)).ideal == _I(3, "x1*x3", "x2*x3", "x3^2")),
    ("B^12 of J = J + (x3,x4)^2",
     lambda: boundary_ideal(J, (1, 2)).ideal == J + maximal_ideal_power_in(4, (3, 4), 2)),
    ("B^123 in four variables = I + x4[I:(x1,x2,x3)]",
     lambda: boundary_ideal(PRE, (1, 2, 3), method="circuits").ideal
     == PRE + times_monomial(colon_varset(PRE, (1, 2, 3)), var(4, 4))),
    ("x3 e12 over (x1x3,x2x3): not a boundary; x3^2 e12: boundary",
     lambda: not is_boundary_monomial_cycle(I3, (0, 0, 1), (1, 2))
     and is_boundary_monomial_cycle(I3, (0, 0, 2), (1, 2))),
    ("RP2: x4x5x6 e123 is a boundary over QQ, not over GF(2)",
     lambda: in_boundary_ideal(RP2, (0, 0, 0, 1, 1, 1), (1, 2, 3), QQ)
     and not in_boundary_ideal(RP2, (0, 0, 0, 1, 1, 1), (1, 2, 3), GF2)),
    # Golod
    ("J: monomial cycle products vanish", lambda: monomial_products_vanish(J).holds),
    ("partitions (3,0,0,0),(2,1,0,0): products fail exactly at p=4, witness x1x2x3x4",
     lambda: _nonvanishing_failure()),
    ("five-variable ideal: monomial products vanish in degree 4",
     lambda: not [f for f in monomial_products_vanish(FIVE).failures if f.p == 4]),
    ("J is Golod in four variables", lambda: golod4(J).holds),
    ("the 16-generator ideal is (x1,..,x4)(x1^2,..,x4^2) and is not Golod",
     lambda: NONVAN == ideal_product([maximal_ideal_power_in(4, (1, 2, 3, 4), 1),
                                       _I(4, "x1^2", "x2^2", "x3^2", "x4^2")]) and not golod4(NONVAN).holds),
    ("J: H1 x H3 products vanish", lambda: h1h3_product_trivial(J)),
    ("five-variable ideal: H1 x H3 -> H4 has rank >= 1", lambda: pairing_rank(FIVE, 1, 3) >= 1),
    # symmetric ideals
    ("partitions (2,1,0),(1,1,1) give 7 generators",
     lambda: len(ideal_from_partitions(SymmetricIdealSpec(3, ((2, 1, 0), (1, 1, 1))))) == 7),
    ("partitions (3,0,0,0),(2,1,0,0) give 16 generators and are recovered",
     lambda: len(NONVAN) == 16 and partitions_from_ideal(NONVAN).lambdas == ((3, 0, 0, 0), (2, 1, 0, 0))),
    ("critical exponent for (3,0,0,0),(2,1,0,0), p=4, q=2 is 1",
     lambda: critical_exponent(((3, 0, 0, 0), (2, 1, 0, 0)), 4, 2) == 1),
    ("V_p profiles of the five four-variable examples",
     lambda: all(vp_profile(lams, 4) == want for lams, want in TABLE)),
    ("first example Golod, second and fifth not",
     lambda: golod4(_sym(TABLE[0][0])).holds and not golod4(_sym(TABLE[1][0])).holds
     and not golod4(_sym(TABLE[4][0])).holds),
    ("symmetric vanishing: (3,0,0,0),(2,1,0,0) fails; (3,1,0,0),(2,2,0,0) holds",
     lambda: not symmetric_monprod_vanish(SymmetricIdealSpec(4, TABLE[1][0])).holds
     and symmetric_monprod_vanish(SymmetricIdealSpec(4, TABLE[0][0])).holds),
    ("principal (2,0,0,0) in four variables is not Golod", lambda: not principal_golod((2, 0, 0, 0), 4)),
    ("(3,1,0,0),(2,2,0,0) is not symmetric shifted",
     lambda: not is_symmetric_shifted(SymmetricIdealSpec(4, TABLE[0][0]))
     and not recognize(_sym(TABLE[0][0])).symmetric_shifted),
    # linear quotients
    ("J: sets {}, {3}, {1}, {1,3}", lambda: _j_order().sets == ((), (3,), (1,), (1, 3))),
    ("(x1^5,x1^4x2,x1x2^4,x2^5) has no linear quotients", _no_lq_any_order),
    ("J has a linear quotient order", lambda: find_linear_quotients_order(J) is not None),
    ("(x1x2x4,x1x2x5,x1x3x5) has linear quotients, not regular",
     lambda: (lambda I: (lambda lq: lq is not None and not is_regular(I, lq))(find_linear_quotients_order(I)))(
         _I(5, "x1*x2*x4", "x1*x2*x5", "x1*x3*x5"))),
    ("J: decomposition function regular", lambda: is_regular(J, _j_order())),
    ("J: no nice Koszul lifts", lambda: nice_lift_indices(J, _j_order()) is None),
    ("stable (x1,x2,x3)^2: lifts at max(u)",
     lambda: _nice_lifts_at(maximal_ideal_power(3, 2), lambda u: max(i + 1 for i, e in enumerate(u) if e))),
    ("shifted ideal: x_m(u) divides every x_t u / g(x_t u)", _shifted_lifts),
    ("J: mapping cone Betti numbers (4,4,1)", lambda: mapping_cone_betti(_j_order()) == (4, 4, 1)),
    ("J: monomial basis fails on nice Koszul lifts", lambda: _basis_fails_nice_lifts(J)),
    ("matroidal (x1x2,x1x3,x2x3): basis exists and x_max(u) is a valid lift", _matroidal_lifts),
]


def maximal_ideal_power_in(n, variables, d):
    """(x_i : i in variables)^d."""
    base = MonomialIdeal(n, [var(i, n) for i in variables])
    out = base
    for _ in range(d - 1):
        out = ideal_product([out, base])
    return out


def _sym(lams):
    return ideal_from_partitions(SymmetricIdealSpec(4, lams))


def _rp2_dependent(field):
    from .simplicial_matroid import subsets
    rows = subsets(6, 3)
    mat = build_sign_matrix(SignMatrixSpec(6, 3, field))
    tri = [(1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6), (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6)]
    pick = [list(mat.entries[rows.index(t)]) for t in tri]
    return rank(ExactMatrix(pick, field, mat.cols)) < len(pick)


def _nonvanishing_failure():
    rep = monomial_products_vanish(NONVAN)
    ps = {f.p for f in rep.failures}
    return ps == {4} and any(f.witness == (1, 1, 1, 1) and {f.A, f.B} == {(1, 2), (3, 4)} for f in rep.failures)


def run_selftest() -> list[tuple[str, bool]]:
    out = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception:  # a crash counts as a failed check
            ok = False
        out.append((name, ok))
    return out
