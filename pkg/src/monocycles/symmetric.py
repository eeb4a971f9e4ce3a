"""Symmetric monomial ideals and their generating partitions.

A symmetric ideal is determined by the partitions Lambda whose S_n-orbits
generate it. Vanishing of monomial-cycle products then reduces to one
inclusion per homological degree p, and further to the conditions V_p read
off Lambda directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import PathDisagreement
from .monomials import MonomialIdeal, colon_varset, first_product_outside, ideal_sum, times_monomial, var

Partition = tuple  # weakly decreasing, padded to length n


def normalize(lam, n: int | None = None) -> Partition:
    """Sort descending and pad with zeros to length n."""
    lam = sorted((int(x) for x in lam), reverse=True)
    if any(x < 0 for x in lam):
        raise ValueError("partition parts must be nonnegative")
    if n is None:
        n = len(lam)
    if any(lam[n:]):
        raise ValueError(f"{tuple(lam)} has more than {n} nonzero parts")
    return tuple(lam[:n]) + (0,) * (n - len(lam))


def length(lam: Partition) -> int:
    return max((i + 1 for i, x in enumerate(lam) if x), default=0)


def orbit(lam: Partition) -> set:
    return set(permutations(lam))


def dominated(mu: Partition, lam: Partition) -> bool:
    """Some permutation of x^mu divides x^lam (both sorted descending)."""
    return all(a <= b for a, b in zip(mu, lam))


@dataclass(frozen=True)
class SymmetricIdealSpec:
    n: int
    lambdas: tuple

    def __post_init__(self):
        lams = tuple(sorted({normalize(l, self.n) for l in self.lambdas}, reverse=True))
        if not lams:
            raise ValueError("need at least one partition")
        if any(not any(l) for l in lams):
            raise ValueError("the zero partition generates the unit ideal")
        for a in lams:
            for b in lams:
                if a != b and dominated(a, b):
                    raise ValueError(f"{b} is redundant: its orbit lies in the ideal generated by {a}")
        object.__setattr__(self, "lambdas", lams)

    @classmethod
    def minimal(cls, n: int, lambdas) -> SymmetricIdealSpec:
        """Build a spec after discarding redundant partitions."""
        lams = {normalize(l, n) for l in lambdas}
        keep = [l for l in lams if not any(m != l and dominated(m, l) for m in lams)]
        return cls(n, tuple(keep))


def parse_lambdas(text: str, n: int | None = None) -> list[Partition]:
    """``"3,0,0,0;2,1,0,0"`` -> [(3,0,0,0), (2,1,0,0)]."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(normalize([int(t) for t in chunk.split(",")], n))
    width = {len(l) for l in out}
    if n is None and len(width) > 1:
        raise ValueError("partitions of different lengths; give n explicitly")
    return out


def ideal_from_partitions(spec: SymmetricIdealSpec) -> MonomialIdeal:
    return MonomialIdeal(spec.n, (m for lam in spec.lambdas for m in orbit(lam)))


def partitions_from_ideal(I: MonomialIdeal) -> SymmetricIdealSpec | None:
    gens = set(I.gens)
    if not gens:
        return None
    for g in gens:
        if not orbit(g) <= gens:
            return None
    return SymmetricIdealSpec(I.n, tuple({normalize(g) for g in gens}))


def _lambdas(spec_or_lambdas):
    if isinstance(spec_or_lambdas, SymmetricIdealSpec):
        return spec_or_lambdas.lambdas
    return tuple(tuple(l) for l in spec_or_lambdas)


def critical_exponent(lambdas, p: int, q: int) -> int | None:
    """min{lambda_1 : l(lambda) <= p - q} - 1, or None when no partition is that short."""
    if not 1 <= q <= p // 2:
        raise ValueError(f"need 1 <= q <= floor(p/2), got p={p}, q={q}")
    firsts = [l[0] for l in _lambdas(lambdas) if length(l) <= p - q]
    return min(firsts) - 1 if firsts else None


@dataclass(frozen=True)
class VpResult:
    p: int
    holds: bool
    via: str  # "V1", "V2" or "none"


def vp_check(lambdas, n: int, p: int) -> VpResult:
    """The partition conditions V_p.

    With m the least first part among partitions of length <= ceil(p/2):
    V1 says every partition of length <= floor(p/2) with first part m has
    lambda_1 = lambda_2; V2 asks for a mu of length in (ceil(p/2), p] with
    mu_1 < m.
    """
    if not 2 <= p <= n:
        raise ValueError(f"need 2 <= p <= n, got p={p}, n={n}")
    lams = _lambdas(lambdas)
    lo, hi = p // 2, (p + 1) // 2
    short = [l[0] for l in lams if length(l) <= hi]
    m = min(short) if short else None
    v1 = all(l[0] == l[1] for l in lams if length(l) <= lo and m is not None and l[0] == m)
    v2 = m is not None and any(hi < length(mu) <= p and mu[0] < m for mu in lams)
    if v1:
        return VpResult(p, True, "V1")
    if v2:
        return VpResult(p, True, "V2")
    return VpResult(p, False, "none")


def vp_profile(lambdas, n: int) -> list[int]:
    """The p in [2, n] for which V_p holds."""
    return [p for p in range(2, n + 1) if vp_check(lambdas, n, p).holds]


def reduced_inclusion(I: MonomialIdeal, p: int):
    """[I:(x_1..x_h)][I:(x_(h+1)..x_p)] in I + (x_(p+1)..x_n)[I:(x_1..x_p)], h = floor(p/2).

    Returns the first failing generator of the left side, or None.
    """
    n = I.n
    h = p // 2
    cp = colon_varset(I, range(1, p + 1))
    rhs = ideal_sum([I] + [times_monomial(cp, var(j, n)) for j in range(p + 1, n + 1)])
    return first_product_outside(colon_varset(I, range(1, h + 1)), colon_varset(I, range(h + 1, p + 1)), rhs)


@dataclass(frozen=True)
class SymmetricVanishing:
    holds: bool
    failing: tuple  # the p where products into degree p survive
    witnesses: tuple  # (p, monomial) from the inclusion path

    def __bool__(self):
        return self.holds


def symmetric_monprod_vanish(spec: SymmetricIdealSpec) -> SymmetricVanishing:
    """Decide vanishing of monomial-cycle products twice: once by the reduced
    ideal inclusions, once by V_p. Any disagreement raises PathDisagreement."""
    I = ideal_from_partitions(spec)
    failing, witnesses = [], []
    for p in range(2, spec.n + 1):
        w = reduced_inclusion(I, p)
        a = w is None
        b = vp_check(spec.lambdas, spec.n, p).holds
        if a != b:
            raise PathDisagreement(f"p={p}: inclusion says {a}, V_p says {b} for {spec.lambdas}")
        if not a:
            failing.append(p)
            witnesses.append((p, w))
    return SymmetricVanishing(not failing, tuple(failing), tuple(witnesses))


def principal_golod(lam, n: int) -> bool:
    """l(lambda) > floor(n/2), or lambda_1 = lambda_2."""
    lam = normalize(lam, n)
    if not any(lam):
        raise ValueError("the zero partition does not give a proper ideal")
    return length(lam) > n // 2 or lam[0] == lam[1]


def is_symmetric_shifted(spec: SymmetricIdealSpec) -> bool:
    """x^lambda x_k / x_1 lies in I whenever lambda_k < lambda_1."""
    I = ideal_from_partitions(spec)
    for lam in spec.lambdas:
        for k in range(2, spec.n + 1):
            if lam[k - 1] < lam[0]:
                u = list(lam)
                u[0] -= 1
                u[k - 1] += 1
                if tuple(u) not in I:
                    return False
    return True
