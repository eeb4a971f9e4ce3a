"""Sign matrices M(n, p) and circuits of their row matroids through a fixed row.

Rows of M(n, p) are the p-subsets of [n], columns the (p+1)-subsets, both in
lexicographic order, with entry sgn(tau, tau minus sigma) when sigma is
contained in tau. A circuit is a minimal linearly dependent set of rows.

Subsets are sorted tuples of 1-based indices throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, isqrt

import numpy as np

from .errors import InstanceTooLarge
from .exactalg import QQ, ExactMatrix, FieldSpec, is_prime

BRUTE_FORCE_CAP = 22

Subset = tuple  # tuple[int, ...]
Circuit = frozenset  # frozenset[Subset]


def sgn(sigma: Subset, j: int) -> int:
    """(-1) to the number of elements of sigma smaller than j."""
    if j not in sigma:
        raise ValueError(f"{j} is not an element of {sigma}")
    return -1 if sum(1 for s in sigma if s < j) % 2 else 1


@dataclass(frozen=True)
class SignMatrixSpec:
    n: int
    p: int
    field: FieldSpec = QQ

    def __post_init__(self):
        if not 1 <= self.p < self.n:
            raise ValueError(f"need 1 <= p < n, got n={self.n}, p={self.p}")

    @property
    def rows(self) -> list[Subset]:
        return subsets(self.n, self.p)

    @property
    def cols(self) -> list[Subset]:
        return subsets(self.n, self.p + 1)


def subsets(n: int, k: int) -> list[Subset]:
    return list(combinations(range(1, n + 1), k))


def _sign_rows(n: int, p: int) -> list[list[int]]:
    cols = subsets(n, p + 1)
    out = []
    for sigma in subsets(n, p):
        s = set(sigma)
        row = []
        for tau in cols:
            if s <= set(tau):
                (j,) = set(tau) - s
                row.append(sgn(tau, j))
            else:
                row.append(0)
        out.append(row)
    return out


def build_sign_matrix(spec: SignMatrixSpec) -> ExactMatrix:
    return ExactMatrix(_sign_rows(spec.n, spec.p), spec.field, comb(spec.n, spec.p + 1))


def circuit_key(c: Circuit):
    return (len(c), sorted(c))


def canonical(circuits) -> tuple[Circuit, ...]:
    return tuple(sorted(set(circuits), key=circuit_key))


def closed_form_tag(n: int, p: int) -> str | None:
    if p == n:
        return "top"
    if p == 1:
        return "p1"
    if p == n - 1:
        return "p-n1"
    if p == 2:
        return "p2-bonds"
    if p == n - 2:
        return "pn2-cycles"
    return None


def _edge(a, b):
    return (a, b) if a < b else (b, a)


def bonds_through(n: int, sigma: Subset) -> tuple[Circuit, ...]:
    """Edge cuts E(A, B) of K_n separating the two ends of the edge sigma."""
    i, j = sigma
    others = [v for v in range(1, n + 1) if v not in sigma]
    out = []
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            A = {i, *extra}
            B = set(range(1, n + 1)) - A
            out.append(frozenset(_edge(a, b) for a in A for b in B))
    return canonical(out)


def graph_cycles_through(n: int, edge: Subset) -> list[frozenset]:
    """Edge sets of the cycles of K_n that use ``edge``."""
    a, b = edge
    others = [v for v in range(1, n + 1) if v not in edge]
    cycles = set()
    for r in range(1, len(others) + 1):
        for path in permutations(others, r):
            walk = (a, *path, b)
            cycles.add(frozenset([_edge(a, b)] + [_edge(x, y) for x, y in zip(walk, walk[1:])]))
    return sorted(cycles, key=lambda c: (len(c), sorted(c)))


def cycle_complements_through(n: int, sigma: Subset) -> tuple[Circuit, ...]:
    full = set(range(1, n + 1))
    edge = tuple(sorted(full - set(sigma)))
    return canonical(
        frozenset(tuple(sorted(full - set(e))) for e in cyc) for cyc in graph_cycles_through(n, edge)
    )


def _closed_form(n: int, p: int, sigma: Subset, tag: str) -> tuple[Circuit, ...]:
    if tag == "p1":
        return (frozenset((i,) for i in range(1, n + 1)),)
    if tag == "p-n1":
        return canonical(frozenset([sigma, other]) for other in subsets(n, p) if other != sigma)
    if tag == "p2-bonds":
        return bonds_through(n, sigma)
    if tag == "pn2-cycles":
        return cycle_complements_through(n, sigma)
    raise ValueError(tag)


# --- brute force -----------------------------------------------------------

def _next_prime(m: int) -> int:
    m += 1
    while not is_prime(m):
        m += 1
    return m


def working_prime(n: int, p: int, field: FieldSpec) -> int:
    """Prime used for the search over ``field``.

    For characteristic 0 this is a prime above the Hadamard bound of every
    square submatrix of M(n, p): rows carry n - p entries of absolute value 1
    and columns p + 1, so |minor| <= min(n - p, p + 1) ** (k / 2). Each minor
    then vanishes over Q exactly when it vanishes mod the prime, and the two
    row matroids coincide.
    """
    if field.characteristic:
        return field.characteristic
    k = min(comb(n, p), comb(n, p + 1))
    width = min(n - p, p + 1)
    bound = isqrt(width ** k) + 1
    return _next_prime(max(bound, 3))


def _circuits_through_row(rows: np.ndarray, target: int, q: int) -> list[tuple[int, ...]]:
    """Index sets T with rows[T] independent and rows[target] spanned by T with
    every coefficient nonzero; each gives the circuit T + {target}.

    Depth-first over T in increasing index order. Every candidate row carries
    its residual modulo the current span of T together with the combination
    of original rows producing it, so one elimination step per node suffices.
    """
    N, C = rows.shape
    aug = np.zeros((N, C + N), dtype=np.int64)
    aug[:, :C] = rows % q
    aug[np.arange(N), C + np.arange(N)] = 1
    found = []
    cand_idx = [i for i in range(N) if i != target]

    def search(chosen, cands, R, r_t):
        for k, e in enumerate(cands):
            row = R[k]
            nz = np.flatnonzero(row[:C])
            if nz.size == 0:
                continue
            pc = nz[0]
            b = row * pow(int(row[pc]), -1, q) % q
            rest = R[k + 1:]
            rest = (rest - np.outer(rest[:, pc], b)) % q
            t = (r_t - r_t[pc] * b) % q
            new = chosen + (e,)
            if not t[:C].any():
                # t = rows[target] - sum(coef * rows[i]); the combination lives in t[C:]
                if all(t[C + i] for i in new):
                    found.append(new)
                continue
            if rest.shape[0]:
                search(new, cands[k + 1:], rest, t)

    search((), cand_idx, aug[cand_idx], aug[target].copy())
    return found


@lru_cache(maxsize=None)
def _brute(n: int, p: int, sigma: Subset, characteristic: int) -> tuple[Circuit, ...]:
    rows_idx = subsets(n, p)
    q = working_prime(n, p, FieldSpec(characteristic))
    rows = np.array(_sign_rows(n, p), dtype=np.int64)
    target = rows_idx.index(sigma)
    out = []
    for T in _circuits_through_row(rows, target, q):
        out.append(frozenset([sigma, *(rows_idx[i] for i in T)]))
    return canonical(out)


def _permutation_to(n: int, sigma: Subset) -> tuple[int, ...]:
    """pi with pi(1..p) = sigma in order and the complement following in order."""
    rest = [i for i in range(1, n + 1) if i not in sigma]
    return tuple(sigma) + tuple(rest)


def permute_subset(s: Subset, pi) -> Subset:
    return tuple(sorted(pi[i - 1] for i in s))


def brute_force_circuits(spec: SignMatrixSpec, sigma: Subset, direct: bool = False) -> tuple[Circuit, ...]:
    """Circuits through sigma by exhaustive search.

    The search runs once per (n, p, field) for sigma = {1..p}; other sigma are
    obtained by relabelling, unless ``direct`` asks for a search at sigma itself.
    """
    n, p = spec.n, spec.p
    if comb(n, p) > BRUTE_FORCE_CAP:
        raise InstanceTooLarge(f"M({n},{p}) has {comb(n, p)} rows; brute force is capped at {BRUTE_FORCE_CAP}")
    sigma = tuple(sorted(sigma))
    c = spec.field.characteristic
    if direct:
        return _brute(n, p, sigma, c)
    base = tuple(range(1, p + 1))
    pi = _permutation_to(n, sigma)
    return canonical(frozenset(permute_subset(m, pi) for m in circ) for circ in _brute(n, p, base, c))


def circuits_through(spec: SignMatrixSpec, sigma: Subset, method: str = "auto") -> tuple[Circuit, ...]:
    """All circuits of the row matroid of M(n, p) over ``spec.field`` containing sigma.

    ``method`` is ``"auto"`` (closed form when one exists), ``"brute"`` or
    ``"brute-direct"``.
    """
    sigma = tuple(sorted(sigma))
    if len(sigma) != spec.p or not set(sigma) <= set(range(1, spec.n + 1)):
        raise ValueError(f"{sigma} is not a {spec.p}-subset of [{spec.n}]")
    if method == "auto":
        tag = closed_form_tag(spec.n, spec.p)
        if tag is not None:
            return _closed_form(spec.n, spec.p, sigma, tag)
        return brute_force_circuits(spec, sigma)
    if method == "brute":
        return brute_force_circuits(spec, sigma)
    if method == "brute-direct":
        return brute_force_circuits(spec, sigma, direct=True)
    raise ValueError(f"unknown method {method!r}")


def format_subset(s: Subset, n: int) -> str:
    return "".join(map(str, s)) if n < 10 else "-".join(map(str, s))


def format_circuit(c: Circuit, n: int) -> str:
    return ",".join(format_subset(s, n) for s in sorted(c))
