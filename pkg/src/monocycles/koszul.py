"""The Koszul complex of R = S/I, one multidegree at a time.

A basis element f e_sigma of K^R_p with f a monomial not in I has multidegree
deg(f) + eps_sigma, and the differential preserves it. So everything below
works strand by strand: the strand of K_p at a has basis the p-subsets sigma
with a - eps_sigma >= 0 and x^(a - eps_sigma) not in I.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .errors import InstanceTooLarge, NotACycle, NotHomogeneous
from .exactalg import QQ, ExactMatrix, FieldSpec, nullity, nullspace, rank, row_echelon, solve
from .monomials import MonomialIdeal, format_monomial, lcm, mul, x_set

LCM_LATTICE_CAP = 20


def eps(sigma, n: int):
    return x_set(sigma, n)


def shuffle_sign(sigma, tau) -> int:
    """Sign of e_sigma ^ e_tau = sign * e_(sigma u tau) for disjoint sigma, tau."""
    inv = sum(1 for s in sigma for t in tau if s > t)
    return -1 if inv % 2 else 1


def _sgn(sigma, j) -> int:
    return -1 if sum(1 for s in sigma if s < j) % 2 else 1


class KoszulChain:
    """A finite sum of terms c * m e_sigma in K_p, all |sigma| = p.

    ``terms`` maps (sigma, m) to a nonzero field scalar; sigma is a sorted
    tuple of 1-based indices and m an exponent tuple. Zero coefficients are
    dropped on construction. Reduction modulo an ideal is explicit, via
    :meth:`reduce`.
    """

    __slots__ = ("n", "p", "field", "terms")

    def __init__(self, n: int, p: int, terms: Mapping | Iterable = (), field: FieldSpec = QQ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for (sigma, m), c in items:
            sigma = tuple(sorted(sigma))
            m = tuple(m)
            if len(sigma) != p:
                raise NotHomogeneous(f"e_{sigma} does not have homological degree {p}")
            if len(set(sigma)) != p or len(m) != n:
                raise ValueError(f"bad term {sigma}, {m}")
            key = (sigma, m)
            acc[key] = field.norm(acc.get(key, field.zero) + field(c))
        self.n = n
        self.p = p
        self.field = field
        self.terms = {k: v for k, v in sorted(acc.items()) if v != 0}

    @classmethod
    def monomial(cls, u, sigma, field: FieldSpec = QQ, coeff=1) -> KoszulChain:
        sigma = tuple(sorted(sigma))
        return cls(len(u), len(sigma), {(sigma, tuple(u)): coeff}, field)

    @classmethod
    def zero(cls, n, p, field: FieldSpec = QQ) -> KoszulChain:
        return cls(n, p, {}, field)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, KoszulChain)
            and (self.n, self.p, self.field) == (other.n, other.p, other.field)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.p, self.field, tuple(self.terms.items())))

    def __add__(self, other: KoszulChain) -> KoszulChain:
        self._compatible(other)
        return KoszulChain(self.n, self.p, list(self.terms.items()) + list(other.terms.items()), self.field)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> KoszulChain:
        c = self.field(c)
        return KoszulChain(self.n, self.p, {k: v * c for k, v in self.terms.items()}, self.field)

    def _compatible(self, other):
        if (self.n, self.p, self.field) != (other.n, other.p, other.field):
            raise ValueError("chains live in different groups")

    def reduce(self, I: MonomialIdeal) -> KoszulChain:
        """Drop the terms whose monomial lies in I."""
        return KoszulChain(self.n, self.p, {k: v for k, v in self.terms.items() if k[1] not in I}, self.field)

    def multidegrees(self) -> set:
        return {mul(m, eps(s, self.n)) for s, m in self.terms}

    def multidegree(self):
        """The common multidegree, or None for the zero chain."""
        degs = self.multidegrees()
        if len(degs) > 1:
            raise NotHomogeneous(f"chain mixes multidegrees {sorted(degs)}")
        return next(iter(degs), None)

    def __repr__(self):
        return f"KoszulChain(p={self.p}, {format_chain(self)})"


def format_sigma(sigma, n=None) -> str:
    if not sigma:
        return "e()"
    if n is not None and n >= 10:
        return "e" + "_".join(map(str, sigma))
    return "e" + "".join(map(str, sigma))


def format_chain(c: KoszulChain) -> str:
    if not c.terms:
        return "0"
    out = []
    for (sigma, m), v in c.terms.items():
        if c.field.characteristic == 0 and v < 0:
            sign, mag = "-", -v
        else:
            sign, mag = "+", v
        mono = format_monomial(m)
        body = f"{mono} {format_sigma(sigma, c.n)}" if mono != "1" else format_sigma(sigma, c.n)
        if mag != 1:
            body = f"{mag}*{body}"
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def differential(I: MonomialIdeal, c: KoszulChain, field: FieldSpec | None = None) -> KoszulChain:
    """d(f e_sigma) = sum_j sgn(sigma, j) x_j f e_(sigma - j), reduced mod I."""
    field = field or c.field
    if c.p == 0:
        return KoszulChain.zero(c.n, -1, field)
    out = []
    n = c.n
    for (sigma, m), v in c.terms.items():
        for j in sigma:
            m2 = list(m)
            m2[j - 1] += 1
            m2 = tuple(m2)
            if m2 in I:
                continue
            rest = tuple(s for s in sigma if s != j)
            out.append(((rest, m2), v * _sgn(sigma, j)))
    return KoszulChain(n, c.p - 1, out, field)


def wedge(c1: KoszulChain, c2: KoszulChain, I: MonomialIdeal | None = None) -> KoszulChain:
    """The exterior product, reduced mod I when I is given."""
    if c1.field != c2.field or c1.n != c2.n:
        raise ValueError("chains live in different complexes")
    out = []
    for (s1, m1), v1 in c1.terms.items():
        for (s2, m2), v2 in c2.terms.items():
            if set(s1) & set(s2):
                continue
            m = mul(m1, m2)
            if I is not None and m in I:
                continue
            out.append(((s1 + s2, m), v1 * v2 * shuffle_sign(s1, s2)))
    return KoszulChain(c1.n, c1.p + c2.p, out, c1.field)


# --- strands ---------------------------------------------------------------

def strand_basis(I: MonomialIdeal, p: int, a) -> tuple:
    """The sigma spanning the strand of K_p at multidegree a, in lex order."""
    return _strand_basis(I, p, tuple(a))


@lru_cache(maxsize=200_000)
def _strand_basis(I, p, a):
    n = I.n
    if p < 0 or p > n:
        return ()
    supp = [i + 1 for i, e in enumerate(a) if e > 0]
    out = []
    for sigma in combinations(supp, p):
        m = list(a)
        for s in sigma:
            m[s - 1] -= 1
        if tuple(m) not in I:
            out.append(sigma)
    return tuple(out)


def _quotient_monomial(a, sigma):
    m = list(a)
    for s in sigma:
        m[s - 1] -= 1
    return tuple(m)


def strand_matrix(I: MonomialIdeal, p: int, a, field: FieldSpec = QQ) -> ExactMatrix:
    """Matrix of d_p from the strand of K_p at a to that of K_(p-1) at a."""
    a = tuple(a)
    src = strand_basis(I, p, a)
    dst = strand_basis(I, p - 1, a)
    index = {s: i for i, s in enumerate(dst)}
    rows = [[0] * len(src) for _ in dst]
    for col, sigma in enumerate(src):
        for j in sigma:
            rest = tuple(s for s in sigma if s != j)
            r = index.get(rest)
            if r is not None:
                rows[r][col] = _sgn(sigma, j)
    return ExactMatrix(rows, field, len(src))


@lru_cache(maxsize=200_000)
def _strand_rank(I, p, a, field) -> int:
    if p <= 0 or p > I.n:
        return 0
    m = strand_matrix(I, p, a, field)
    if m.rows == 0 or m.cols == 0:
        return 0
    return rank(m)


def strand_homology_dim(I: MonomialIdeal, p: int, a, field: FieldSpec = QQ) -> int:
    """dim H_p of the strand at a: nullity of d_p minus rank of d_(p+1)."""
    return _strand_homology_dim(I, p, tuple(a), field)


@lru_cache(maxsize=200_000)
def _strand_homology_dim(I, p, a, field) -> int:
    dim = len(strand_basis(I, p, a))
    return dim - _strand_rank(I, p, a, field) - _strand_rank(I, p + 1, a, field)


def lcm_lattice(I: MonomialIdeal) -> list[tuple]:
    """lcms of all nonempty subsets of G(I), deduplicated and sorted."""
    if len(I.gens) > LCM_LATTICE_CAP:
        raise InstanceTooLarge(f"{len(I.gens)} generators; the lcm lattice is capped at {LCM_LATTICE_CAP}")
    seen: set = set()
    for g in I.gens:
        seen |= {lcm(g, s) for s in seen}
        seen.add(g)
    return sorted(seen, key=lambda a: (sum(a), a))


def multigraded_betti(I: MonomialIdeal, p: int, field: FieldSpec = QQ) -> dict:
    """{a: dim H_p at a} over the lcm lattice, nonzero entries only."""
    out = {}
    for a in lcm_lattice(I):
        d = strand_homology_dim(I, p, a, field)
        if d:
            out[a] = d
    return out


def total_betti(I: MonomialIdeal, field: FieldSpec = QQ) -> tuple[int, ...]:
    """(dim H_1, ..., dim H_n) of K^(S/I)."""
    lattice = lcm_lattice(I)
    return tuple(sum(strand_homology_dim(I, p, a, field) for a in lattice) for p in range(1, I.n + 1))


def chain_to_vector(c: KoszulChain, basis) -> list:
    index = {s: i for i, s in enumerate(basis)}
    v = [c.field.zero] * len(basis)
    for (sigma, _m), coeff in c.terms.items():
        if sigma not in index:
            raise ValueError(f"e_{sigma} is not in the strand")
        v[index[sigma]] = coeff
    return v


def vector_to_chain(I: MonomialIdeal, p: int, a, v, field: FieldSpec) -> KoszulChain:
    basis = strand_basis(I, p, tuple(a))
    return KoszulChain(I.n, p, {(s, _quotient_monomial(a, s)): x for s, x in zip(basis, v) if x != 0}, field)


@dataclass(frozen=True)
class BoundaryVerdict:
    """Outcome of the linear-algebra boundary test; truthy when z is a boundary."""

    is_boundary: bool
    witness: KoszulChain | None = dc_field(default=None, compare=False)

    def __bool__(self):
        return self.is_boundary


@lru_cache(maxsize=200_000)
def _image_echelon(I, p, a, field):
    """Row echelon form of the image of d_(p+1) in the strand of K_p at a."""
    m = strand_matrix(I, p + 1, a, field)
    if m.cols == 0 or m.rows == 0:
        return [], []
    return row_echelon(m.transpose().entries, field)


def _in_echelon_span(rref, pivots, v, field) -> bool:
    v = list(v)
    for row, pc in zip(rref, pivots):
        if v[pc] != 0:
            f = v[pc]
            v = [field.norm(x - f * y) for x, y in zip(v, row)]
    return not any(x != 0 for x in v)


def is_boundary_oracle(I: MonomialIdeal, z: KoszulChain, field: FieldSpec | None = None,
                       witness: bool = False) -> BoundaryVerdict:
    """Decide whether the cycle z is a boundary by solving d_(p+1) x = z in z's strand."""
    field = field or z.field
    if z.field != field:
        z = KoszulChain(z.n, z.p, z.terms, field)
    z = z.reduce(I)
    a = z.multidegree()
    if differential(I, z, field):
        raise NotACycle(f"{format_chain(z)} is not a cycle")
    if a is None:
        return BoundaryVerdict(True, KoszulChain.zero(I.n, z.p + 1, field) if witness else None)
    basis = strand_basis(I, z.p, a)
    v = chain_to_vector(z, basis)
    if not witness:
        rref, pivots = _image_echelon(I, z.p, a, field)
        return BoundaryVerdict(_in_echelon_span(rref, pivots, v, field))
    m = strand_matrix(I, z.p + 1, a, field)
    if m.cols == 0:
        return BoundaryVerdict(False)
    x = solve(m, v)
    if x is None:
        return BoundaryVerdict(False)
    return BoundaryVerdict(True, vector_to_chain(I, z.p + 1, a, x, field))


def is_cycle(I: MonomialIdeal, c: KoszulChain) -> bool:
    return not differential(I, c.reduce(I))


def is_monomial_cycle(I: MonomialIdeal, u, sigma) -> bool:
    """Whether u e_sigma is a cycle: x_j u in I for every j in sigma."""
    for j in sigma:
        m = list(u)
        m[j - 1] += 1
        if tuple(m) not in I:
            return False
    return True


def homology_basis(I: MonomialIdeal, p: int, a, field: FieldSpec = QQ) -> list[KoszulChain]:
    """Cycles whose classes form a basis of H_p at a.

    Nullspace vectors of d_p are added one at a time and kept when they are
    independent of the boundaries and of the cycles kept so far.
    """
    a = tuple(a)
    basis = strand_basis(I, p, a)
    if not basis:
        return []
    if p == 0:
        cycles = [[field(int(i == j)) for i in range(len(basis))] for j in range(len(basis))]
    else:
        cycles = nullspace(strand_matrix(I, p, a, field))
    bd = strand_matrix(I, p + 1, a, field)
    span = [list(r) for r in bd.transpose().entries] if bd.cols else []
    current = len(row_echelon(span, field)[1]) if span else 0
    out = []
    for v in cycles:
        trial = span + [v]
        r = len(row_echelon(trial, field)[1])
        if r > current:
            span, current = trial, r
            out.append(vector_to_chain(I, p, a, v, field))
    return out


def class_rank(I: MonomialIdeal, p: int, a, chains: Iterable[KoszulChain], field: FieldSpec = QQ) -> int:
    """Dimension of the span of the classes of the given cycles in H_p at a."""
    a = tuple(a)
    basis = strand_basis(I, p, a)
    bd = strand_matrix(I, p + 1, a, field)
    span = [list(r) for r in bd.transpose().entries] if bd.cols else []
    base = len(row_echelon(span, field)[1]) if span else 0
    vecs = [chain_to_vector(c.reduce(I), basis) for c in chains if c.reduce(I)]
    if not vecs:
        return 0
    return len(row_echelon(span + vecs, field)[1]) - base


def monomial_cycles_in_strand(I: MonomialIdeal, p: int, a) -> list[tuple]:
    a = tuple(a)
    return [s for s in strand_basis(I, p, a) if is_monomial_cycle(I, _quotient_monomial(a, s), s)]


def monomial_span_deficit(I: MonomialIdeal, p: int, field: FieldSpec = QQ) -> list[tuple]:
    """[(a, dim H_p(a) - dim span of monomial-cycle classes)] where positive."""
    out = []
    for a in lcm_lattice(I):
        h = strand_homology_dim(I, p, a, field)
        if not h:
            continue
        chains = [KoszulChain.monomial(_quotient_monomial(a, s), s, field) for s in monomial_cycles_in_strand(I, p, a)]
        d = h - class_rank(I, p, a, chains, field)
        if d > 0:
            out.append((a, d))
    return out


def nullity_of_strand(I: MonomialIdeal, p: int, a, field: FieldSpec = QQ) -> int:
    return nullity(strand_matrix(I, p, tuple(a), field))
