"""Exact linear algebra over a small field GF(q).

Elements of GF(q) are encoded as integers in ``range(q)``.  For prime ``q``
the encoding is the residue itself; for ``q = p**e`` the integer
``sum(b_j * p**j)`` stands for ``sum(b_j * w**j)`` where ``w`` generates
GF(q) over GF(p).  Arithmetic goes through ``q x q`` lookup tables that are
built once.

Vectors are tuples of codes.  An :class:`FqMatrix` is an immutable stack of
such rows; :func:`rref` brings it to the canonical reduced row echelon form
(pivot = first nonzero column, pivot entries scaled to 1, zero rows dropped).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AmbientMismatch, DivisionByZero

Vector = tuple[int, ...]


class GFq:
    """Lookup-table arithmetic for GF(p**e).

    ``mul_table`` is required when ``e > 1`` because the product depends on
    the chosen generator ``w``; the field tower supplies it.
    """

    def __init__(self, p: int, e: int = 1, mul_table: Sequence[Sequence[int]] | None = None):
        self.p = p
        self.e = e
        self.q = q = p**e
        digits = [[(c // p**j) % p for j in range(e)] for c in range(q)]
        weights = [p**j for j in range(e)]

        def encode(ds):
            return sum((d % p) * w for d, w in zip(ds, weights))

        self.add = [[encode([x + y for x, y in zip(digits[a], digits[b])]) for b in range(q)] for a in range(q)]
        self.neg = [encode([-x for x in digits[a]]) for a in range(q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        if mul_table is None:
            if e != 1:
                raise ValueError("a multiplication table is required for non-prime q")
            mul_table = [[(a * b) % p for b in range(q)] for a in range(q)]
        self.mul = [list(row) for row in mul_table]
        self.inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul[a][b] == 1:
                    self.inv[a] = b
                    break
            else:
                raise ValueError(f"element {a} has no inverse; bad multiplication table")

    def __repr__(self) -> str:
        return f"GFq(p={self.p}, e={self.e})"

    def __eq__(self, other):
        return isinstance(other, GFq) and (self.p, self.e, self.mul) == (other.p, other.e, other.mul)

    def __hash__(self):
        return hash((self.p, self.e))

    def invert(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse in GF(q)")
        return self.inv[a]

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(add, sub, mul, inv) as uint8 arrays for compiled kernels."""
        inv = np.array(self.inv, dtype=np.uint8)
        return (
            np.array(self.add, dtype=np.uint8),
            np.array(self.sub, dtype=np.uint8),
            np.array(self.mul, dtype=np.uint8),
            inv,
        )

    # vector helpers

    def vadd(self, u: Vector, v: Vector) -> Vector:
        add = self.add
        return tuple(add[a][b] for a, b in zip(u, v))

    def vscale(self, c: int, v: Vector) -> Vector:
        row = self.mul[c]
        return tuple(row[a] for a in v)

    def axpy(self, c: int, u: Vector, v: Vector) -> Vector:
        """Return ``v + c*u``."""
        row = self.mul[c]
        add = self.add
        return tuple(add[b][row[a]] for a, b in zip(u, v))


@dataclass(frozen=True)
class FqMatrix:
    rows: tuple[Vector, ...]
    n: int
    field: GFq

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.n:
                raise AmbientMismatch(f"row of length {len(r)} in a matrix with ambient dimension {self.n}")

    @classmethod
    def from_rows(cls, rows, n: int, field: GFq) -> FqMatrix:
        q = field.q
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        for r in rows:
            if any(x < 0 or x >= q for x in r):
                raise ValueError(f"entries must lie in [0, {q})")
        return cls(rows, n, field)

    @classmethod
    def zeros(cls, n: int, field: GFq) -> FqMatrix:
        return cls((), n, field)

    def __len__(self) -> int:
        return len(self.rows)

    def stack(self, other: FqMatrix) -> FqMatrix:
        _check_ambient(self, other)
        return FqMatrix(self.rows + other.rows, self.n, self.field)


def _check_ambient(a: FqMatrix, b: FqMatrix) -> None:
    if a.n != b.n:
        raise AmbientMismatch(f"ambient dimensions differ: {a.n} vs {b.n}")
    if a.field.q != b.field.q:
        raise AmbientMismatch(f"fields differ: GF({a.field.q}) vs GF({b.field.q})")


def _rref_rows(rows: Sequence[Vector], n: int, f: GFq) -> list[list[int]]:
    work = [list(r) for r in rows if any(r)]
    mul, sub, inv = f.mul, f.sub, f.inv
    rank = 0
    for col in range(n):
        if rank == len(work):
            break
        piv = None
        for r in range(rank, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        c = prow[col]
        if c != 1:
            m = mul[inv[c]]
            prow = work[rank] = [m[x] for x in prow]
        for r in range(len(work)):
            if r != rank:
                c = work[r][col]
                if c:
                    m = mul[c]
                    work[r] = [sub[x][m[y]] for x, y in zip(work[r], prow)]
        rank += 1
    return work[:rank]


def rref(m: FqMatrix) -> tuple[FqMatrix, int]:
    rows = _rref_rows(m.rows, m.n, m.field)
    return FqMatrix(tuple(tuple(r) for r in rows), m.n, m.field), len(rows)


def rank(m: FqMatrix) -> int:
    return len(_rref_rows(m.rows, m.n, m.field))


def intersection_dim(a: FqMatrix, b: FqMatrix) -> int:
    """dim(A ∩ B) = rank A + rank B - rank [A; B]."""
    _check_ambient(a, b)
    return rank(a) + rank(b) - rank(a.stack(b))


def solve_membership(m: FqMatrix, v: Sequence[int]) -> bool:
    if len(v) != m.n:
        raise AmbientMismatch(f"vector of length {len(v)} against ambient dimension {m.n}")
    v = tuple(v)
    if not any(v):
        return True
    basis, r = rref(m)
    return rank(FqMatrix(basis.rows + (v,), m.n, m.field)) == r


def nullspace(m: FqMatrix) -> FqMatrix:
    """Basis (in RREF) of the right kernel {x : M x = 0}."""
    f = m.field
    rows = _rref_rows(m.rows, m.n, f)
    pivots = [next(i for i, x in enumerate(r) if x) for r in rows]
    free = [c for c in range(m.n) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * m.n
        x[fc] = 1
        for r, pc in zip(rows, pivots):
            x[pc] = f.neg[r[fc]]
        basis.append(tuple(x))
    return rref(FqMatrix(tuple(basis), m.n, f))[0]


def intersection(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    """RREF basis of row(A) ∩ row(B), as the annihilator of ann(A) + ann(B)."""
    _check_ambient(a, b)
    return nullspace(nullspace(a).stack(nullspace(b)))


def span_vectors(m: FqMatrix) -> set[Vector]:
    """Every vector of the row space; exponential, for small oracles only."""
    f = m.field
    out = {tuple([0] * m.n)}
    for r in rref(m)[0].rows:
        out = {f.axpy(c, r, v) for v in out for c in range(f.q)}
    return out
