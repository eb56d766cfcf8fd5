"""Intersection and distance distributions of the orbit code Orb(U).

Orbit members are exactly z^j U for 0 <= j < (q^n - 1)/(q^t - 1) once the
stabilizer GF(q^t)^* is known, so :func:`intersection_distribution` never
deduplicates subspaces; it sweeps j with the compiled kernels in
:mod:`orbitcodes.sweep`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import fqlinalg as la
from .errors import AlphaInBaseField, BudgetExceeded, InvalidSubfield, NotFullLength, OracleScaleExceeded
from .gf import FFElem, FieldTower
from .subspace import StabilizerResult, Subspace, shift, stabilizer
from .sweep import sweep_intersections

DEFAULT_BUDGET = 2**26
SIDON_ORACLE_LIMIT = 2**10


@dataclass(frozen=True)
class IntersectionDistribution:
    """λ_i = #{αU in Orb(U) : dim(U ∩ αU) = i} for 0 <= i < k."""

    lambdas: tuple[int, ...]
    t: int
    orbit_size: int
    k: int

    @property
    def max_dim(self) -> int | None:
        nz = [i for i, c in enumerate(self.lambdas) if c]
        return max(nz) if nz else None

    def violations(self) -> list[str]:
        out = []
        if sum(self.lambdas) != self.orbit_size - 1:
            out.append(f"sum of lambda is {sum(self.lambdas)}, expected orbit_size - 1 = {self.orbit_size - 1}")
        for i, c in enumerate(self.lambdas):
            if c and i % self.t:
                out.append(f"lambda_{i} = {c} but {self.t} does not divide {i}")
        return out


@dataclass(frozen=True)
class DistanceDistribution:
    """δ_d = #{αU in Orb(U) : d_s(U, αU) = d}; δ_0 = 1 counts U itself."""

    delta: dict[int, int]
    k: int

    @property
    def min_distance(self) -> int | None:
        pos = [d for d, c in self.delta.items() if d > 0 and c]
        return min(pos) if pos else None

    def nontrivial(self) -> dict[int, int]:
        return {d: c for d, c in sorted(self.delta.items()) if d > 0 and c}


@dataclass(frozen=True)
class SClass:
    representative: FFElem
    members: frozenset = field(repr=False)
    base_degree: int = 1

    def __len__(self) -> int:
        return len(self.members)


def _check_budget(st: StabilizerResult, budget: int | None) -> None:
    if budget is not None and st.orbit_size > budget:
        raise BudgetExceeded(st.orbit_size, budget)


def intersection_distribution(
    u: Subspace,
    *,
    threads: int | None = None,
    budget: int | None = DEFAULT_BUDGET,
    progress: Callable[[int, int], None] | None = None,
    kernel: str | None = None,
    stab: StabilizerResult | None = None,
) -> IntersectionDistribution:
    if u.k < 1:
        raise ValueError("intersection distribution needs k >= 1")
    st = stab or stabilizer(u)
    _check_budget(st, budget)
    hist, _ = sweep_intersections(u, st.orbit_size, threads=threads, kernel=kernel, progress=progress)
    if hist[u.k]:
        raise AssertionError("a shift inside the orbit range coincides with U; stabilizer is wrong")
    dist = IntersectionDistribution(tuple(int(c) for c in hist[: u.k]), st.t, st.orbit_size, u.k)
    bad = dist.violations()
    if bad:
        raise AssertionError("; ".join(bad))
    return dist


def intersection_dims(u: Subspace, *, budget: int | None = DEFAULT_BUDGET, threads: int | None = None) -> np.ndarray:
    """dim(U ∩ z^j U) for every orbit index j (entry 0 is k)."""
    st = stabilizer(u)
    _check_budget(st, budget)
    _, dims = sweep_intersections(u, st.orbit_size, threads=threads, collect_dims=True)
    return dims


def distance_distribution(d: IntersectionDistribution) -> DistanceDistribution:
    delta = {0: 1}
    for i, c in enumerate(d.lambdas):
        delta[2 * d.k - 2 * i] = c
    return DistanceDistribution(dict(sorted(delta.items())), d.k)


def pair_counts(d: IntersectionDistribution) -> dict[int, int]:
    """Ordered codeword pairs at each distance: orbit_size * δ_d."""
    return {dist: d.orbit_size * c for dist, c in distance_distribution(d).delta.items()}


# -- S-classes ------------------------------------------------------------------


def _subfield_elements(tower: FieldTower, t: int) -> list[FFElem]:
    if t == 1:
        return [tower.fq_element(c) for c in range(tower.q)]
    g = tower.subfield_generator(t)
    out = [tower.zero]
    x = tower.one
    for _ in range(tower.q**t - 1):
        out.append(x)
        x = tower.mul(x, g)
    return out


def s_class(alpha: FFElem, u: Subspace, *, rebase: bool = False, stab: StabilizerResult | None = None) -> SClass:
    """S_{α,U} = U_α ∪ ⋃_λ U_{(α+λ)^-1} with U_β = {(β+δ)U : δ in F}.

    F is GF(q).  With ``rebase=True`` a degenerate orbit with stabilizer
    GF(q^t)^* is handled by taking F = GF(q^t) instead.
    """
    tower = u.tower
    st = stab or stabilizer(u)
    if st.t != 1 and not rebase:
        raise NotFullLength(f"U has stabilizer GF(q^{st.t})^*, not GF(q)^*")
    t = st.t
    if tower.in_subfield(alpha, t):
        raise AlphaInBaseField("alpha must lie outside the base field")
    base = _subfield_elements(tower, t)
    members = set()
    for d in base:
        members.add(shift(tower.add(alpha, d), u))
    for lam in base:
        inv = tower.inv(tower.add(alpha, lam))
        for d in base:
            members.add(shift(tower.add(inv, d), u))
    return SClass(alpha, frozenset(members), t)


def s_partition(u: Subspace, i: int, *, budget: int | None = DEFAULT_BUDGET, rebase: bool = False) -> list[SClass]:
    """Split O_i(U) into S-classes, one per still-uncovered member."""
    st = stabilizer(u)
    if st.t != 1 and not rebase:
        raise NotFullLength(f"U has stabilizer GF(q^{st.t})^*, not GF(q)^*")
    if not 0 <= i < u.k:
        raise ValueError(f"dimension index {i} outside [0, {u.k})")
    dims = intersection_dims(u, budget=budget)
    tower = u.tower
    js = [int(j) for j in np.nonzero(dims == i)[0] if j > 0]
    uncovered = {}
    for j in js:
        uncovered[shift(tower.power_of_z(j), u)] = j
    classes = []
    while uncovered:
        j = min(uncovered.values())
        cls = s_class(tower.power_of_z(j), u, rebase=rebase, stab=st)
        classes.append(cls)
        for m in cls.members:
            uncovered.pop(m, None)
    return classes


# -- subfield shifts, duals, Sidon spaces ---------------------------------------------


def count_subfield_line_shifts(u: Subspace, t: int | None = None) -> tuple[int, int]:
    """Number of distinct shifts x·GF(q^{2t}) inside U.

    U must be a GF(q^t)-space (t defaults to the stabilizer exponent).  With
    β generating GF(q^{2t}), W = U ∩ β^-1 U is the union of those shifts,
    dim W = 2tm and the count is (q^{2tm} - 1)/(q^{2t} - 1).  Returns (m, count).
    """
    tower = u.tower
    if t is None:
        t = stabilizer(u).t
    if tower.n % (2 * t):
        raise InvalidSubfield(f"GF(q^{2 * t}) is not a subfield of GF(q^{tower.n})")
    if shift(tower.subfield_generator(t), u) != u:
        raise ValueError(f"U is not closed under multiplication by GF(q^{t})")
    beta = tower.subfield_generator(2 * t)
    w = u & shift(tower.inv(beta), u)
    assert w.k % (2 * t) == 0, "subfield-shift span has the wrong dimension"
    m = w.k // (2 * t)
    qq = tower.q ** (2 * t)
    return m, (qq**m - 1) // (qq - 1)


@lru_cache(maxsize=32)
def _trace_gram(tower: FieldTower) -> tuple[tuple[int, ...], ...]:
    n = tower.n
    traces = []
    x = tower.one
    for _ in range(2 * n - 1):
        traces.append(tower.trace(x))
        x = tower.mul(x, tower.z)
    return tuple(tuple(traces[i + j] for j in range(n)) for i in range(n))


def trace_dual(u: Subspace) -> Subspace:
    """U^⊥ under the form <x, y> = Tr_{GF(q^n)/GF(q)}(xy)."""
    tower = u.tower
    f = tower.fq
    gram = _trace_gram(tower)
    rows = []
    for r in u.rows:
        acc = (0,) * tower.n
        for i, c in enumerate(r):
            if c:
                acc = f.axpy(c, gram[i], acc)
        rows.append(acc)
    ker = la.nullspace(la.FqMatrix(tuple(rows), tower.n, f))
    return Subspace._canonical(tower, ker)


def is_sidon(u: Subspace, *, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Full-length orbit with maximum intersection dimension at most 1."""
    if u.k < 1:
        raise ValueError("Sidon check needs k >= 1")
    st = stabilizer(u)
    if st.t != 1:
        return False
    d = intersection_distribution(u, budget=budget, stab=st)
    return d.max_dim is None or d.max_dim <= 1


def _projective_key(tower: FieldTower, a: FFElem) -> tuple[int, ...]:
    c = tower.to_fq_coords(a)
    lead = next(x for x in c if x)
    return tower.fq.vscale(tower.fq.inv[lead], c)


def is_sidon_by_definition(u: Subspace) -> bool:
    """ab = cd for nonzero a, b, c, d in U forces {aF_q, bF_q} = {cF_q, dF_q}.

    Enumerates projective points of U, so it runs only for q^k <= 2^10.
    """
    tower = u.tower
    if tower.q**u.k > SIDON_ORACLE_LIMIT:
        raise OracleScaleExceeded(f"definitional Sidon check needs q^k <= {SIDON_ORACLE_LIMIT}")
    points = {}
    for a in u.elements():
        if not a.is_zero():
            points.setdefault(_projective_key(tower, a), a)
    pts = list(points.values())
    seen = {}
    for i in range(len(pts)):
        for j in range(i, len(pts)):
            key = _projective_key(tower, tower.mul(pts[i], pts[j]))
            if key in seen and seen[key] != (i, j):
                return False
            seen[key] = (i, j)
    return True
