"""Monomials as exponent tuples and monomial ideals by minimal generators.

Variables are 1-indexed in every user-facing place (``x1..xn``, variable sets
such as ``(1, 2)``); exponent tuples are ordinary 0-indexed Python tuples, so
``u[i - 1]`` is the exponent of ``x_i``.
"""

from __future__ import annotations

import re
from operator import le
from functools import lru_cache, reduce

import numpy as np
from itertools import permutations as _perms
from itertools import product as _cartesian
from typing import Iterable, Sequence

Monomial = tuple  # tuple[int, ...]


def one(n: int) -> Monomial:
    return (0,) * n


def var(i: int, n: int) -> Monomial:
    """The monomial x_i (1-indexed)."""
    return tuple(int(j == i - 1) for j in range(n))


def x_set(A: Iterable[int], n: int) -> Monomial:
    """x_A, the product of the variables indexed by A."""
    s = set(A)
    return tuple(int(j + 1 in s) for j in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple[int, ...]:
    return tuple(i + 1 for i, e in enumerate(u) if e)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(map(le, a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quo(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees b | a."""
    return tuple(x - y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def colon_quotient(g: Monomial, m: Monomial) -> Monomial:
    """g / gcd(g, m)."""
    return tuple(x - y if x > y else 0 for x, y in zip(g, m))


_NUMPY_THRESHOLD = 48


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators of the ideal generated by ``gens``, in descending lex order."""
    gens = set(gens)
    if len(gens) > _NUMPY_THRESHOLD:
        return _minimalize_np(np.array(sorted(gens), dtype=np.int64))
    kept: list[Monomial] = []
    for g in sorted(gens, key=lambda u: (sum(u), u)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, reverse=True))


def _unique_rows(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[1]
    bits = 62 // max(n, 1)
    if n and arr.max(initial=0) < (1 << bits):
        shifts = np.arange(n - 1, -1, -1, dtype=np.int64) * bits
        keys = np.unique((arr << shifts).sum(axis=1))
        return (keys[:, None] >> shifts) & ((1 << bits) - 1)
    return np.unique(arr, axis=0)


def _minimalize_np(arr: np.ndarray) -> tuple[Monomial, ...]:
    """Same as :func:`minimalize` on a 2-d array of exponent rows.

    Rows are processed one total degree at a time; a row can only be divided
    by a kept row of strictly smaller degree once duplicates are gone.
    """
    arr = _unique_rows(arr)
    deg = arr.sum(axis=1)
    kept = np.empty((0, arr.shape[1]), dtype=np.int64)
    for d in np.unique(deg):
        layer = arr[deg == d]
        if kept.shape[0]:
            alive = np.ones(layer.shape[0], dtype=bool)
            step = max(1, 4_000_000 // (kept.shape[0] * arr.shape[1] + 1))
            for s in range(0, layer.shape[0], step):
                blk = layer[s:s + step]
                hit = (kept[None, :, :] <= blk[:, None, :]).all(axis=2).any(axis=1)
                alive[s:s + step] = ~hit
            layer = layer[alive]
        kept = np.vstack([kept, layer])
    return tuple(sorted((tuple(int(e) for e in r) for r in kept), reverse=True))


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, e in enumerate(u):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")
_FACTORS = re.compile(r"(?:x\d+(?:\^\d+)?)+")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x1^2*x3``, ``x1^2x3`` style products, ``1`` or ``[2,0,1]``."""
    s = text.strip().replace(" ", "")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"malformed exponent vector {text!r}")
        body = s[1:-1]
        exps = tuple(int(t) for t in body.split(",")) if body else ()
        if len(exps) != n or any(e < 0 for e in exps):
            raise ValueError(f"exponent vector {text!r} does not have {n} nonnegative entries")
        return exps
    if s == "1":
        return one(n)
    exps = [0] * n
    for piece in s.split("*"):
        if not _FACTORS.fullmatch(piece):
            raise ValueError(f"cannot parse monomial {text!r}")
        for i, e in _FACTOR.findall(piece):
            i = int(i)
            if not 1 <= i <= n:
                raise ValueError(f"variable x{i} out of range for n={n}")
            exps[i - 1] += int(e or 1)
    return tuple(exps)


class MonomialIdeal:
    """A monomial ideal of k[x1..xn] stored by its minimal generators.

    ``gens`` is always minimal and sorted descending lexicographically, so equality of
    ideals is equality of generator tuples. The zero ideal has no generators.
    """

    __slots__ = ("n", "gens", "_hash", "_memo")

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != n or any(e < 0 for e in g):
                raise ValueError(f"generator {g} does not live in {n} variables")
        self.n = n
        self.gens = minimalize(gens)
        self._hash = hash((n, self.gens))
        self._memo = {}

    @classmethod
    def _trusted(cls, n: int, gens: tuple) -> MonomialIdeal:
        """Wrap generators already known to be minimal and sorted."""
        obj = cls.__new__(cls)
        obj.n = n
        obj.gens = gens
        obj._hash = hash((n, gens))
        obj._memo = {}
        return obj

    @classmethod
    def parse(cls, n: int, texts: Iterable[str]) -> MonomialIdeal:
        return cls(n, [parse_monomial(t, n) for t in texts])

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        hit = self._memo.get(u)
        if hit is None:
            hit = self._memo[u] = any(divides(g, u) for g in self.gens)
        return hit

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, ({', '.join(map(format_monomial, self.gens))}))"

    def __str__(self):
        return "(" + ", ".join(map(format_monomial, self.gens)) + ")"

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum([self, other])

    def __mul__(self, other):
        if isinstance(other, MonomialIdeal):
            return ideal_product([self, other])
        return times_monomial(self, other)

    __rmul__ = __mul__

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersection([self, other])

    def __le__(self, other: MonomialIdeal) -> bool:
        return inclusion(self, other)

    @property
    def min_degree(self) -> int:
        return min((sum(g) for g in self.gens), default=0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)


def _check_n(ideals: Sequence[MonomialIdeal]) -> int:
    if not ideals:
        raise ValueError("need at least one ideal")
    n = ideals[0].n
    if any(I.n != n for I in ideals):
        raise ValueError("ideals live in different polynomial rings")
    return n


def membership(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != I.n:
        raise ValueError("monomial and ideal have different numbers of variables")
    return u in I


def member_mask(I: MonomialIdeal, arr: np.ndarray) -> np.ndarray:
    """Row-wise membership of the exponent rows of ``arr`` in I."""
    arr = np.asarray(arr, dtype=np.int64).reshape(-1, I.n)
    if not I.gens:
        return np.zeros(arr.shape[0], dtype=bool)
    G = np.array(I.gens, dtype=np.int64)
    if arr.size and max(arr.max(), G.max()) < 256:
        arr, G = arr.astype(np.uint8), G.astype(np.uint8)
    out = np.empty(arr.shape[0], dtype=bool)
    step = max(1, 4_000_000 // (G.shape[0] * I.n + 1))
    for s in range(0, arr.shape[0], step):
        blk = arr[s:s + step]
        out[s:s + step] = (G[None, :, :] <= blk[:, None, :]).all(axis=2).any(axis=1)
    return out


def first_product_outside(A: MonomialIdeal, B: MonomialIdeal, target: MonomialIdeal):
    """The first minimal generator of A*B (by degree, then x1-heavy first) outside target, or None."""
    if not A.gens or not B.gens:
        return None
    a, b = np.array(A.gens, dtype=np.int64), np.array(B.gens, dtype=np.int64)
    prods = _unique_rows((a[:, None, :] + b[None, :, :]).reshape(-1, A.n))
    bad = prods[~member_mask(target, prods)]
    if not bad.shape[0]:
        return None
    # a generator of A*B dividing a failing product fails too, so the minimal
    # failing products are exactly the failing minimal generators
    return min(_minimalize_np(bad) if bad.shape[0] > 1 else (tuple(int(e) for e in bad[0]),),
               key=lambda u: (sum(u), tuple(-e for e in u)))


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """I : m, generated by g / gcd(g, m)."""
    if len(m) != I.n:
        raise ValueError("monomial and ideal have different numbers of variables")
    return _colon_monomial(I, tuple(m))


@lru_cache(maxsize=65536)
def _colon_monomial(I, m):
    return MonomialIdeal(I.n, (colon_quotient(g, m) for g in I.gens))


def colon_varset(I: MonomialIdeal, A: Iterable[int]) -> MonomialIdeal:
    """I : (x_i : i in A), the intersection of the colons I : x_i."""
    A = tuple(sorted(set(A)))
    if not A:
        raise ValueError("colon by an empty set of variables")
    return _colon_varset(I, A)


@lru_cache(maxsize=65536)
def _colon_varset(I, A):
    return intersection([colon_monomial(I, var(i, I.n)) for i in A])


def times_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(I.n, (mul(g, m) for g in I.gens))


def ideal_sum(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    n = _check_n(ideals)
    return MonomialIdeal(n, (g for I in ideals for g in I.gens))


def ideal_product(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    n = _check_n(ideals)

    def mult(A, B):
        if len(A.gens) * len(B.gens) > _NUMPY_THRESHOLD:
            a, b = np.array(A.gens, dtype=np.int64), np.array(B.gens, dtype=np.int64)
            return MonomialIdeal._trusted(n, _minimalize_np((a[:, None, :] + b[None, :, :]).reshape(-1, n)))
        return MonomialIdeal(n, (mul(a, b) for a, b in _cartesian(A.gens, B.gens)))

    return reduce(mult, ideals)


def intersection(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Iterated pairwise-lcm intersection."""
    n = _check_n(ideals)

    def meet(A, B):
        if A == B:
            return A
        if len(A.gens) * len(B.gens) > _NUMPY_THRESHOLD:
            a, b = np.array(A.gens, dtype=np.int64), np.array(B.gens, dtype=np.int64)
            return MonomialIdeal._trusted(n, _minimalize_np(np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, n)))
        return MonomialIdeal(n, (lcm(a, b) for a, b in _cartesian(A.gens, B.gens)))

    return reduce(meet, ideals)


def inclusion(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_n([I, J])
    return all(g in J for g in I.gens)


def permute_monomial(u: Monomial, pi: Sequence[int]) -> Monomial:
    """Apply the variable substitution x_i -> x_{pi(i)}.

    ``pi`` is given 1-indexed as the tuple (pi(1), ..., pi(n)).
    """
    out = [0] * len(u)
    for i, e in enumerate(u):
        out[pi[i] - 1] = e
    return tuple(out)


def permute(I: MonomialIdeal, pi: Sequence[int]) -> MonomialIdeal:
    if sorted(pi) != list(range(1, I.n + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{I.n}")
    return MonomialIdeal(I.n, (permute_monomial(g, pi) for g in I.gens))


def automorphisms(I: MonomialIdeal, cap: int = 8) -> list[tuple[int, ...]]:
    """Variable permutations fixing I, as 1-indexed tuples; identity only when n > cap."""
    n = I.n
    ident = tuple(range(1, n + 1))
    if n > cap:
        return [ident]
    gens = set(I.gens)
    # a permutation fixing I must preserve each generator's exponent multiset
    # and the per-variable exponent profile, so filter variables by that first
    profile = [tuple(sorted(g[i] for g in I.gens)) for i in range(n)]
    out = []
    for pi in _perms(range(1, n + 1)):
        if any(profile[i] != profile[pi[i] - 1] for i in range(n)):
            continue
        if all(permute_monomial(g, pi) in gens for g in I.gens):
            out.append(pi)
    return out


def maximal_ideal_power(n: int, d: int) -> MonomialIdeal:
    """(x1, ..., xn)^d."""
    return ideal_product([MonomialIdeal(n, [var(i, n) for i in range(1, n + 1)])] * d) if d else MonomialIdeal(n, [one(n)])


def monomials_of_degree_at_most(n: int, d: int):
    """All exponent tuples of total degree <= d, in graded lex order."""
    def rec(k, left):
        if k == n:
            yield ()
            return
        for e in range(left, -1, -1):
            for rest in rec(k + 1, left - e):
                yield (e,) + rest

    for total in range(d + 1):
        for u in rec(0, total):
            if sum(u) == total:
                yield u


def monomials_in_box(bound: Sequence[int]):
    """All exponent tuples componentwise <= ``bound``."""
    return _cartesian(*(range(b + 1) for b in bound))
