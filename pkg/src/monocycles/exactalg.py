"""Exact scalars (Q and GF(p)) and dense linear algebra over them.

Elimination is plain Gaussian elimination with the first nonzero entry of a
column taken as pivot, so every result (including solution witnesses) is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: rationals when ``characteristic`` is 0, else GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or c < 0 or (c != 0 and not is_prime(c)):
            raise ValueError(f"characteristic must be 0 or a prime, got {c!r}")

    def __call__(self, x):
        """Coerce an int or Fraction into a canonical field element."""
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def norm(self, x):
        p = self.characteristic
        return x % p if p else x

    def inv(self, x):
        p = self.characteristic
        if p == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


class ExactMatrix:
    """Immutable dense matrix with entries in a :class:`FieldSpec`."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, entries: Sequence[Sequence], field: FieldSpec = QQ, cols: int | None = None):
        data = tuple(tuple(field(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.entries = data
        self.field = field

    @classmethod
    def zeros(cls, rows, cols, field=QQ):
        return cls([[0] * cols for _ in range(rows)], field, cols)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.field,
            self.rows,
        )

    def apply(self, x: Sequence) -> list:
        """Matrix-vector product ``self @ x``."""
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        f = self.field
        xs = [f(v) for v in x]
        return [f.norm(sum((a * b for a, b in zip(row, xs)), f.zero)) for row in self.entries]

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows or self.field != other.field:
                raise ValueError("dimension mismatch")
            t = other.transpose()
            return ExactMatrix([[ExactMatrix._dot(r, c, self.field) for c in t.entries] for r in self.entries],
                               self.field, other.cols)
        return self.apply(other)

    @staticmethod
    def _dot(r, c, f):
        return f.norm(sum((a * b for a, b in zip(r, c)), f.zero))


def row_echelon(rows: list[list], field: FieldSpec) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of ``rows`` (copied). Returns (rref, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    norm = field.norm
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        pr = m[r] = [norm(v * inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [norm(a - f * b) for a, b in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(m: ExactMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(row_echelon(m.entries, m.field)[1])


def nullity(m: ExactMatrix) -> int:
    return m.cols - rank(m)


def nullspace(m: ExactMatrix) -> list[list]:
    """A basis of ``{x : m x = 0}``, one vector per free column."""
    f = m.field
    if m.rows == 0:
        return [[f(int(i == j)) for i in range(m.cols)] for j in range(m.cols)]
    rref, pivots = row_echelon(m.entries, f)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for row, pc in zip(rref, pivots):
            v[pc] = f.norm(-row[fc])
        basis.append(v)
    return basis


def solve(m: ExactMatrix, b: Sequence) -> list | None:
    """Some ``x`` with ``m x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    f = m.field
    if m.rows == 0:
        return [f.zero] * m.cols
    aug = [list(row) + [f(v)] for row, v in zip(m.entries, b)]
    rref, pivots = row_echelon(aug, f)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [f.zero] * m.cols
    for row, pc in zip(rref, pivots):
        x[pc] = row[m.cols]
    return x


def in_row_span(vectors: Sequence[Sequence], target: Sequence, field: FieldSpec) -> bool:
    """Whether ``target`` is a linear combination of ``vectors``."""
    if not any(field(v) != 0 for v in target):
        return True
    if not vectors:
        return False
    base = len(row_echelon([list(map(field, v)) for v in vectors], field)[1])
    ext = len(row_echelon([list(map(field, v)) for v in vectors] + [list(map(field, target))], field)[1])
    return base == ext
