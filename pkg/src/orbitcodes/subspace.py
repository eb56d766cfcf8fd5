"""GF(q)-subspaces of GF(q^n), their cyclic shifts and stabilizers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import fqlinalg as la
from .errors import InvalidSubfield, TowerMismatch, ZeroGenerator, ZeroShift
from .gf import FFElem, FieldTower, divisors


class Subspace:
    """An F_q-subspace of GF(q^n) held by its canonical (RREF) basis.

    Rows of ``basis`` are GF(q)-coordinates of basis elements with respect
    to 1, z, ..., z^(n-1).  Equality and hashing compare canonical bases,
    so two subspaces are equal exactly when they are equal as sets.
    """

    __slots__ = ("tower", "basis", "_hash")

    def __init__(self, tower: FieldTower, rows: Iterable[Sequence[int]] = ()):
        self.tower = tower
        m, _ = la.rref(la.FqMatrix(tuple(tuple(r) for r in rows), tower.n, tower.fq))
        self.basis = m
        self._hash = None

    @classmethod
    def _canonical(cls, tower: FieldTower, basis: la.FqMatrix) -> Subspace:
        obj = cls.__new__(cls)
        obj.tower = tower
        obj.basis = basis
        obj._hash = None
        return obj

    @property
    def k(self) -> int:
        return len(self.basis.rows)

    @property
    def n(self) -> int:
        return self.tower.n

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.basis.rows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis.rows == other.basis.rows and self.tower == other.tower

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.basis.rows)
        return self._hash

    def __repr__(self):
        from .dsl import format_subspace

        return f"Subspace(k={self.k}, {format_subspace(self)})"

    def __add__(self, other: Subspace) -> Subspace:
        _same_tower(self.tower, other.tower)
        return Subspace(self.tower, self.rows + other.rows)

    def __and__(self, other: Subspace) -> Subspace:
        _same_tower(self.tower, other.tower)
        return Subspace._canonical(self.tower, la.intersection(self.basis, other.basis))

    def __contains__(self, a: FFElem) -> bool:
        return la.solve_membership(self.basis, self.tower.to_fq_coords(a))

    def __le__(self, other: Subspace) -> bool:
        return all(la.solve_membership(other.basis, r) for r in self.rows)

    def basis_elements(self) -> list[FFElem]:
        return [self.tower.from_fq_coords(r) for r in self.rows]

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All q^k coordinate vectors of the subspace (small cases only)."""
        return iter(la.span_vectors(self.basis))

    def elements(self) -> list[FFElem]:
        return [self.tower.from_fq_coords(v) for v in self.vectors()]

    def intersection_dim(self, other: Subspace) -> int:
        return la.intersection_dim(self.basis, other.basis)

    def shift(self, a: FFElem) -> Subspace:
        return shift(a, self)


def _same_tower(a: FieldTower, b: FieldTower) -> None:
    if a is not b and a != b:
        raise TowerMismatch("subspaces live in different field towers")


def span(elements: Sequence[FFElem], tower: FieldTower | None = None) -> Subspace:
    """The F_q-span of ``elements``; ``tower`` is needed only for an empty list."""
    elements = list(elements)
    if tower is None:
        if not elements:
            raise ValueError("span of an empty list needs an explicit tower")
        tower = elements[0].tower
    for a in elements:
        _same_tower(a.tower, tower)
    return Subspace(tower, [tower.to_fq_coords(a) for a in elements])


def line_sum(
    terms: Sequence[tuple[FFElem, int]], tower: FieldTower | None = None, *, return_direct: bool = False
):
    """Σ e_i · GF(q^{s_i}) as an F_q-subspace.

    With ``return_direct=True`` returns ``(subspace, is_direct)`` where the
    flag says whether the dimensions of the summands add up.
    """
    terms = list(terms)
    if tower is None:
        if not terms:
            raise ValueError("empty line sum needs an explicit tower")
        tower = terms[0][0].tower
    gens = []
    total = 0
    for e, s in terms:
        _same_tower(e.tower, tower)
        if tower.n % s:
            raise InvalidSubfield(f"GF(q^{s}) is not a subfield of GF(q^{tower.n})")
        if e.is_zero():
            raise ZeroGenerator("line sum generator must be nonzero")
        g = tower.subfield_generator(s)
        x = e
        for _ in range(s):
            gens.append(x)
            x = tower.mul(x, g)
        total += s
    u = span(gens, tower)
    if return_direct:
        return u, u.k == total
    return u


def subfield(tower: FieldTower, s: int) -> Subspace:
    """GF(q^s) as an s-dimensional subspace of GF(q^n)."""
    return line_sum([(tower.one, s)], tower)


def shift(a: FFElem, u: Subspace) -> Subspace:
    """The cyclic shift aU = {a*x : x in U}."""
    _same_tower(a.tower, u.tower)
    if a.is_zero():
        raise ZeroShift("cannot shift by zero")
    t = u.tower
    mul, to, frm = t.mul, t.to_fq_coords, t.from_fq_coords
    return Subspace(t, [to(mul(a, frm(r))) for r in u.rows])


@dataclass(frozen=True)
class StabilizerResult:
    t: int
    orbit_size: int

    @property
    def full_length(self) -> bool:
        return self.t == 1


def stabilizer(u: Subspace, verify: bool = False) -> StabilizerResult:
    """Stab(U) ∪ {0} = GF(q^t); returns t and the orbit size.

    Divisors d of gcd(k, n) are tried from the largest down.  With
    ``verify`` every divisor is tested and the stabilizing ones must be
    exactly the divisors of t.
    """
    if u.k == 0:
        raise ValueError("the zero subspace is fixed by every shift")
    tower = u.tower
    cands = sorted(divisors(gcd(u.k, tower.n)), reverse=True)
    fixed = []
    for d in cands:
        if shift(tower.subfield_generator(d), u) == u:
            fixed.append(d)
            if not verify:
                break
    t = max(fixed)
    if verify and sorted(fixed) != [d for d in divisors(t)]:
        raise AssertionError(f"stabilizing subfields {sorted(fixed)} are not the subfields of GF(q^{t})")
    return StabilizerResult(t, (tower.order - 1) // (tower.q**t - 1))
