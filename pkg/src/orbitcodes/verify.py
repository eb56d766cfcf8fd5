"""Executable checks of the structural results on orbit-code distributions.

Each check samples subspaces that satisfy its hypotheses, evaluates the
claimed property and returns a :class:`CheckReport`.  The results are
theorems, so any witness is a bug in this package.

Sampling is seeded (numpy ``default_rng``); subspaces are spans of random
nonzero field elements, rejected until the hypothesis filter (full-length
orbit, prescribed stabilizer, ...) passes.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .errors import OracleScaleExceeded, UnknownCheck
from .gf import FFElem, FieldTower, tower_for
from .orbit import (
    IntersectionDistribution,
    count_subfield_line_shifts,
    distance_distribution,
    intersection_distribution,
    is_sidon,
    is_sidon_by_definition,
    s_class,
    s_partition,
    trace_dual,
)
from .subspace import Subspace, line_sum, shift, span, stabilizer

ORACLE_LIMIT = 2**12
MAX_TRIES = 10_000


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return num // den


@dataclass
class SampleConfig:
    q: int
    n: int
    k: int = 2
    t: int | None = None
    samples: int = 20
    seed: int = 0
    alphas: int | None = None


@dataclass
class CheckReport:
    check_name: str
    config: dict
    passed: bool = True
    witnesses: list[str] = field(default_factory=list)
    observed_multipliers: list[int] = field(default_factory=list)
    hypotheses: list[str] = field(default_factory=list)
    tested: int = 0

    def fail(self, msg: str) -> None:
        self.passed = False
        self.witnesses.append(msg)

    def to_dict(self) -> dict:
        d = asdict(self)
        return {"check": d.pop("check_name"), **d}


# -- sampling -------------------------------------------------------------------


def random_nonzero(tower: FieldTower, rng: np.random.Generator) -> FFElem:
    return tower.power_of_z(int(rng.integers(0, tower.group_order)))


def random_outside(tower: FieldTower, rng: np.random.Generator, s: int = 1) -> FFElem:
    """Random nonzero element outside GF(q^s)."""
    step = tower.subfield_exponent(s)
    while True:
        j = int(rng.integers(0, tower.group_order))
        if j % step:
            return tower.power_of_z(j)


def random_degree2(tower: FieldTower, rng: np.random.Generator, t: int = 1) -> FFElem:
    """Random element of GF(q^{2t}) \\ GF(q^t)."""
    g = tower.subfield_generator(2 * t)
    qt = tower.q**t
    while True:
        j = int(rng.integers(0, qt * qt - 1))
        if j % (qt + 1):
            return tower.pow(g, j)


def random_subspace(
    tower: FieldTower,
    k: int,
    rng: np.random.Generator,
    *,
    t: int | None = None,
    plant: bool = False,
) -> Subspace:
    """Random k-dimensional subspace.

    ``t`` demands stabilizer exactly GF(q^t)^*: t = 1 filters for full-length
    orbits, t > 1 builds the space as a sum of random GF(q^t)-lines.
    ``plant`` puts one shift of GF(q^{2t}) inside (t defaults to 1 there).
    """
    tt = t or 1
    if k % tt:
        raise ValueError(f"k = {k} is not a multiple of t = {tt}")
    for _ in range(MAX_TRIES):
        terms = []
        dim = 0
        if plant:
            terms.append((random_nonzero(tower, rng), 2 * tt))
            dim = 2 * tt
        while dim < k:
            terms.append((random_nonzero(tower, rng), tt))
            dim += tt
        u, direct = line_sum(terms, tower, return_direct=True)
        if not direct or u.k != k:
            continue
        if t is not None and stabilizer(u).t != t:
            continue
        return u
    raise RuntimeError(f"no subspace found for q={tower.q}, n={tower.n}, k={k}, t={t} after {MAX_TRIES} tries")


def all_subspaces(tower: FieldTower, k: int) -> list[Subspace]:
    """Every k-dimensional subspace, by growing spans; small towers only."""
    elems = [e for e in tower.elements() if not e.is_zero()]
    layer = {Subspace(tower)}
    for _ in range(k):
        nxt = set()
        for u in layer:
            for e in elems:
                if e not in u:
                    nxt.add(u + span([e]))
        layer = nxt
    return sorted(layer, key=lambda u: u.rows)


# -- oracle ---------------------------------------------------------------------------


def oracle_intersection_distribution(u: Subspace) -> IntersectionDistribution:
    """Literal count over every nonzero α, deduplicating αU by canonical form."""
    tower = u.tower
    if tower.order > ORACLE_LIMIT:
        raise OracleScaleExceeded(f"oracle runs only for q^n <= {ORACLE_LIMIT}, got {tower.order}")
    seen = {}
    stab_size = 0
    for a in tower.elements():
        if a.is_zero():
            continue
        v = shift(a, u)
        if v == u:
            stab_size += 1
        if v not in seen:
            seen[v] = u.intersection_dim(v)
    counts = [0] * u.k
    for v, d in seen.items():
        if v != u:
            counts[d] += 1
    t = 0
    while tower.q**t - 1 != stab_size:
        t += 1
    return IntersectionDistribution(tuple(counts), t, len(seen), u.k)


# -- divisibility -------------------------------------------------------------------


def divisibility_violations(dist: IntersectionDistribution, u: Subspace) -> tuple[list[str], list[int]]:
    """Test λ against the general divisibility statement for stabilizer GF(q^t)^*.

    n/t odd: every λ_i is a multiple of Q(Q+1) with Q = q^t.  n/t even and U
    holding (Q^{2m} - 1)/(Q^2 - 1) shifts of GF(q^{2t}): λ_{2tm} = Q + r Q(Q+1)
    and the other λ_i are multiples of Q(Q+1).  Returns (violations,
    multipliers); multipliers are r followed by the s_i.
    """
    tower = u.tower
    t = dist.t
    Q = tower.q**t
    M = Q * (Q + 1)
    bad, mult = [], []
    for i, c in enumerate(dist.lambdas):
        if c and i % t:
            bad.append(f"lambda_{i} = {c} is nonzero but {t} does not divide {i}")
    special = None
    if (tower.n // t) % 2 == 0:
        m, _ = count_subfield_line_shifts(u, t)
        special = 2 * t * m
        if special >= dist.k:
            bad.append(f"special index 2tm = {special} is not below k = {dist.k}")
        else:
            c = dist.lambdas[special]
            if c < Q or (c - Q) % M:
                bad.append(f"lambda_{special} = {c} is not {Q} + r*{M}")
            else:
                mult.append((c - Q) // M)
    for i, c in enumerate(dist.lambdas):
        if i == special:
            continue
        if c % M:
            bad.append(f"lambda_{i} = {c} is not a multiple of {M}")
        elif i % t == 0:
            mult.append(c // M)
    return bad, mult


# -- the checks -----------------------------------------------------------------------


class _Ctx:
    def __init__(self, cfg: SampleConfig, rep: CheckReport, default_alphas: int):
        self.cfg = cfg
        self.rep = rep
        self.tower = tower_for(cfg.q, cfg.n)
        self.rng = np.random.default_rng(cfg.seed)
        self.alphas = cfg.alphas if cfg.alphas is not None else default_alphas

    @property
    def q(self):
        return self.cfg.q

    @property
    def n(self):
        return self.cfg.n

    def subspaces(self, *, t=None, plant_alternate=False):
        for s in range(self.cfg.samples):
            tt = t or 1
            plant = plant_alternate and s % 2 == 1 and self.cfg.k >= 3 * tt and self.n % (2 * tt) == 0
            yield random_subspace(self.tower, self.cfg.k, self.rng, t=t, plant=plant)

    def hypothesis(self, text: str) -> None:
        if text not in self.rep.hypotheses:
            self.rep.hypotheses.append(text)

    def vacuous(self, why: str) -> None:
        self.hypothesis(f"hypothesis not met ({why}); nothing to test")


def _full(ctx):
    ctx.hypothesis("U generates a full-length orbit")
    return ctx.subspaces(t=1)


def _check_lemma_2_1(ctx: _Ctx):
    tw = ctx.tower
    for u in ctx.subspaces():
        for _ in range(ctx.alphas):
            a = random_nonzero(tw, ctx.rng)
            d1 = u.intersection_dim(shift(a, u))
            d2 = u.intersection_dim(shift(tw.inv(a), u))
            ctx.rep.tested += 1
            if d1 != d2:
                ctx.rep.fail(f"U={u!r}, alpha={a!r}: dim {d1} vs {d2} for the inverse")


def _check_lemma_3_1(ctx: _Ctx):
    tw = ctx.tower
    scalars = [tw.fq_element(c) for c in range(ctx.q)]
    for u in _full(ctx):
        for _ in range(ctx.alphas):
            a = random_outside(tw, ctx.rng)
            d0 = u.intersection_dim(shift(a, u))
            for s in scalars:
                d = u.intersection_dim(shift(a + s, u))
                ctx.rep.tested += 1
                if d != d0:
                    ctx.rep.fail(f"U={u!r}, alpha={a!r}, s={s!r}: dim {d} != {d0}")


def _check_prop_3_1(ctx: _Ctx):
    tw = ctx.tower
    scalars = [tw.fq_element(c) for c in range(ctx.q)]
    for u in _full(ctx):
        for _ in range(ctx.alphas):
            a = random_outside(tw, ctx.rng)
            distinct = {shift(a + s, u) for s in scalars}
            ctx.rep.tested += 1
            if len(distinct) != ctx.q:
                ctx.rep.fail(f"U={u!r}, alpha={a!r}: {len(distinct)} distinct shifts, expected {ctx.q}")


def _lambda_multiple(ctx: _Ctx, modulus: int, *, odd_only: bool = False):
    for u in _full(ctx):
        d = intersection_distribution(u)
        ctx.rep.tested += 1
        for i, c in enumerate(d.lambdas):
            if odd_only and i % 2 == 0:
                continue
            if c % modulus:
                ctx.rep.fail(f"U={u!r}: lambda={d.lambdas}, lambda_{i} not a multiple of {modulus}")
            else:
                ctx.rep.observed_multipliers.append(c // modulus)


def _check_thm_3_2(ctx: _Ctx):
    _lambda_multiple(ctx, ctx.q)


def _check_thm_3_3(ctx: _Ctx):
    if ctx.n % 2 == 0 and ctx.q % 2 == 1:
        return ctx.vacuous("n odd or q even")
    ctx.hypothesis("n odd or q a power of 2")
    tw = ctx.tower
    for u in _full(ctx):
        for _ in range(ctx.alphas):
            b = random_outside(tw, ctx.rng)
            ctx.rep.tested += 1
            if shift(b, u) == shift(tw.inv(b), u):
                ctx.rep.fail(f"U={u!r}, beta={b!r}: beta U equals beta^-1 U")


def _check_cor_2q(ctx: _Ctx):
    if ctx.n % 2 == 0 or ctx.q % 2 == 0:
        return ctx.vacuous("n odd and q odd")
    ctx.hypothesis("n odd and q odd")
    _lambda_multiple(ctx, 2 * ctx.q)


def _check_lemma_3_4(ctx: _Ctx):
    tw = ctx.tower
    for u in _full(ctx):
        st = stabilizer(u)
        for _ in range(ctx.alphas):
            a = s_class(random_outside(tw, ctx.rng), u, stab=st).members
            b = s_class(random_outside(tw, ctx.rng), u, stab=st).members
            ctx.rep.tested += 1
            if a != b and a & b:
                ctx.rep.fail(f"U={u!r}: two S-classes overlap in {len(a & b)} members without being equal")
        # partition of the smallest nonempty O_i with i >= 1
        d = intersection_distribution(u, stab=st)
        nz = [i for i, c in enumerate(d.lambdas) if c and i >= 1]
        if nz:
            i = min(nz, key=lambda j: d.lambdas[j])
            classes = s_partition(u, i)
            union = set().union(*(c.members for c in classes))
            ctx.rep.tested += 1
            if sum(len(c) for c in classes) != len(union) or len(union) != d.lambdas[i]:
                ctx.rep.fail(f"U={u!r}: S-classes of O_{i} are not a partition of {d.lambdas[i]} members")


def _check_lemma_3_5(ctx: _Ctx):
    tw = ctx.tower
    if ctx.n == 2:
        return ctx.vacuous("an element of degree other than 1, 2")
    for u in _full(ctx):
        st = stabilizer(u)
        for _ in range(ctx.alphas):
            a = random_outside(tw, ctx.rng)
            if tw.degree_over(a) == 2:
                continue
            size = len(s_class(a, u, stab=st))
            ctx.rep.tested += 1
            if size != ctx.q * (ctx.q + 1):
                ctx.rep.fail(f"U={u!r}, alpha={a!r}: |S| = {size}, expected {ctx.q * (ctx.q + 1)}")


def _check_lemma_3_7(ctx: _Ctx):
    if ctx.n % 2:
        return ctx.vacuous("n even, so that degree-2 elements exist")
    tw = ctx.tower
    for u in _full(ctx):
        st = stabilizer(u)
        for _ in range(ctx.alphas):
            a = random_degree2(tw, ctx.rng)
            size = len(s_class(a, u, stab=st))
            ctx.rep.tested += 1
            if size != ctx.q:
                ctx.rep.fail(f"U={u!r}, alpha={a!r}: |S| = {size}, expected {ctx.q}")


def _check_lemma_3_8(ctx: _Ctx):
    tw = ctx.tower
    if tw.order > 2**16:
        raise OracleScaleExceeded("exhaustive degree scan needs q^n <= 2^16")
    deg2 = {a for a in tw.elements() if not a.is_zero() and tw.degree_over(a) == 2}
    expected = set()
    if ctx.n % 2 == 0:
        g = tw.subfield_generator(2)
        fq = {tw.fq_element(c) for c in range(ctx.q)}
        x = tw.one
        for _ in range(ctx.q**2 - 1):
            if x not in fq:
                expected.add(x)
            x = tw.mul(x, g)
    ctx.rep.tested = tw.order
    ctx.hypothesis("exhaustive over all field elements")
    if deg2 != expected:
        ctx.rep.fail(f"{len(deg2)} degree-2 elements found, expected {len(expected)}")


def _check_thm_3_7(ctx: _Ctx):
    if ctx.n % 2 == 0:
        return ctx.vacuous("n odd")
    ctx.hypothesis("n odd")
    _lambda_multiple(ctx, ctx.q * (ctx.q + 1))


def _check_thm_3_9(ctx: _Ctx):
    if ctx.n % 2:
        return ctx.vacuous("n even")
    tw = ctx.tower
    g2 = tw.subfield_generator(2)
    ctx.hypothesis("alpha of degree 2 outside Stab(U); V = U ∩ alpha U nonzero")
    for u in ctx.subspaces(plant_alternate=True):
        for _ in range(ctx.alphas):
            a = random_degree2(tw, ctx.rng)
            au = shift(a, u)
            if au == u:
                continue
            v = u & au
            if v.k == 0:
                continue
            ctx.rep.tested += 1
            if shift(g2, v) != v:
                ctx.rep.fail(f"U={u!r}, alpha={a!r}: GF(q^2) does not stabilize U ∩ alpha U")


def _check_cor_even_dim(ctx: _Ctx):
    if ctx.n % 2:
        return ctx.vacuous("n even")
    tw = ctx.tower
    ctx.hypothesis("n even, full-length orbit")
    for u in ctx.subspaces(t=1, plant_alternate=True):
        for _ in range(ctx.alphas):
            b = random_degree2(tw, ctx.rng)
            d = u.intersection_dim(shift(b, u))
            ctx.rep.tested += 1
            if d % 2:
                ctx.rep.fail(f"U={u!r}, beta={b!r}: odd intersection dimension {d}")


def _check_thm_3_11(ctx: _Ctx):
    if ctx.n % 2:
        return ctx.vacuous("n even")
    ctx.hypothesis("n even; odd indices only")
    _lambda_multiple(ctx, ctx.q * (ctx.q + 1), odd_only=True)


def _brute_subfield_shifts(u: Subspace, t: int) -> int:
    tw = u.tower
    sub = line_sum([(tw.one, 2 * t)], tw)
    found = set()
    for x in u.elements():
        if x.is_zero():
            continue
        line = shift(x, sub)
        if line <= u:
            found.add(line)
    return len(found)


def _check_lemma_7(ctx: _Ctx):
    t = ctx.cfg.t or 1
    if ctx.n % (2 * t):
        return ctx.vacuous(f"2t = {2 * t} divides n")
    ctx.hypothesis(f"U is a GF(q^{t})-space; counting shifts of GF(q^{2 * t})")
    for u in ctx.subspaces(t=t, plant_alternate=True):
        m, count = count_subfield_line_shifts(u, t)
        brute = _brute_subfield_shifts(u, t)
        ctx.rep.tested += 1
        ctx.rep.observed_multipliers.append(m)
        if brute != count:
            ctx.rep.fail(f"U={u!r}: formula gives {count} shifts (m={m}), enumeration finds {brute}")


def _check_thm_3_12(ctx: _Ctx):
    if ctx.n % 2:
        return ctx.vacuous("n even")
    tw = ctx.tower
    ctx.hypothesis("n even, full-length orbit")
    for u in ctx.subspaces(t=1, plant_alternate=True):
        m, _ = count_subfield_line_shifts(u, 1)
        ctx.rep.observed_multipliers.append(m)
        for _ in range(ctx.alphas):
            a = random_degree2(tw, ctx.rng)
            d = u.intersection_dim(shift(a, u))
            ctx.rep.tested += 1
            if d != 2 * m:
                ctx.rep.fail(f"U={u!r}, alpha={a!r}: dim {d}, expected 2m = {2 * m}")


def _check_divisibility(ctx: _Ctx, t: int):
    for u in ctx.subspaces(t=t, plant_alternate=True):
        d = intersection_distribution(u)
        bad, mult = divisibility_violations(d, u)
        ctx.rep.tested += 1
        ctx.rep.observed_multipliers.extend(mult)
        for b in bad:
            ctx.rep.fail(f"U={u!r}, lambda={d.lambdas}: {b}")


def _check_thm_3_13(ctx: _Ctx):
    if ctx.n % 2:
        return ctx.vacuous("n even")
    ctx.hypothesis("n even, full-length orbit")
    _check_divisibility(ctx, 1)


def _check_thm_3_14(ctx: _Ctx):
    t = ctx.cfg.t or 2
    if ctx.n % t or t == ctx.n or ctx.cfg.k % t:
        return ctx.vacuous(f"t = {t} divides n and k, and t < n")
    ctx.hypothesis(f"stabilizer exactly GF(q^{t})^*; n/t = {ctx.n // t} {'odd' if (ctx.n // t) % 2 else 'even'}")
    _check_divisibility(ctx, t)


def _check_sum_rule(ctx: _Ctx):
    for u in ctx.subspaces(t=ctx.cfg.t):
        d = intersection_distribution(u)
        ctx.rep.tested += 1
        if sum(d.lambdas) != d.orbit_size - 1:
            ctx.rep.fail(f"U={u!r}: sum {sum(d.lambdas)} != {d.orbit_size - 1}")


def _check_oracle_equivalence(ctx: _Ctx):
    for u in ctx.subspaces(t=ctx.cfg.t):
        fast = intersection_distribution(u)
        slow = oracle_intersection_distribution(u)
        ctx.rep.tested += 1
        if fast != slow:
            ctx.rep.fail(f"U={u!r}: streaming {fast} vs oracle {slow}")


def _check_dual_distance(ctx: _Ctx):
    ctx.hypothesis("(alpha U)^perp = alpha^-1 U^perp under the trace form")
    for u in ctx.subspaces():
        ud = trace_dual(u)
        a = intersection_distribution(u)
        b = intersection_distribution(ud)
        da, db = distance_distribution(a).nontrivial(), distance_distribution(b).nontrivial()
        ctx.rep.tested += 1
        if da != db or a.orbit_size != b.orbit_size:
            ctx.rep.fail(f"U={u!r}: distances {da} vs dual {db}")


def _check_sidon_equivalence(ctx: _Ctx):
    tw = ctx.tower
    k = ctx.cfg.k
    if gaussian_binomial(ctx.n, k, ctx.q) <= 1000:
        ctx.hypothesis(f"all {gaussian_binomial(ctx.n, k, ctx.q)} subspaces of dimension {k}")
        spaces = all_subspaces(tw, k)
    else:
        ctx.hypothesis("random subspaces")
        spaces = list(ctx.subspaces())
    for u in spaces:
        a = is_sidon(u)
        b = is_sidon_by_definition(u)
        ctx.rep.tested += 1
        ctx.rep.observed_multipliers.append(int(a))
        if a != b:
            ctx.rep.fail(f"U={u!r}: distance characterization {a}, definition {b}")


# name -> (function, default number of alphas per sample)
CHECKS: dict[str, tuple[Callable[[_Ctx], None], int]] = {
    "lemma_2_1": (_check_lemma_2_1, 200),
    "lemma_3_1": (_check_lemma_3_1, 20),
    "prop_3_1": (_check_prop_3_1, 20),
    "thm_3_2": (_check_thm_3_2, 0),
    "thm_3_3": (_check_thm_3_3, 30),
    "cor_2q": (_check_cor_2q, 0),
    "lemma_3_4": (_check_lemma_3_4, 3),
    "lemma_3_5": (_check_lemma_3_5, 3),
    "lemma_3_7": (_check_lemma_3_7, 3),
    "thm_3_7": (_check_thm_3_7, 0),
    "lemma_3_8": (_check_lemma_3_8, 0),
    "thm_3_9": (_check_thm_3_9, 20),
    "cor_even_dim": (_check_cor_even_dim, 20),
    "thm_3_11": (_check_thm_3_11, 0),
    "lemma_7": (_check_lemma_7, 0),
    "thm_3_12": (_check_thm_3_12, 10),
    "thm_3_13": (_check_thm_3_13, 0),
    "thm_3_14": (_check_thm_3_14, 0),
    "sum_rule": (_check_sum_rule, 0),
    "oracle_equivalence": (_check_oracle_equivalence, 0),
    "dual_distance": (_check_dual_distance, 0),
    "sidon_equivalence": (_check_sidon_equivalence, 0),
}


def check(name: str, config: SampleConfig) -> CheckReport:
    if name not in CHECKS:
        raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    fn, alphas = CHECKS[name]
    rep = CheckReport(name, asdict(config))
    fn(_Ctx(config, rep, alphas))
    return rep


# -- default grids ---------------------------------------------------------------------

ODD_GRID = [(2, 5), (2, 7), (3, 5), (3, 7), (4, 5), (5, 5)]
EVEN_GRID = [(2, 6), (2, 8), (3, 6), (3, 8), (4, 6)]
DEGENERATE_GRID = [(2, 8, 2), (2, 12, 2), (3, 8, 2), (2, 12, 3)]


def default_configs(name: str, seed: int = 1, samples: int = 20) -> list[SampleConfig]:
    """The configurations ``verify --all`` runs for one check."""
    if name not in CHECKS:
        raise UnknownCheck(f"unknown check {name!r}")

    def grid(pairs, ks=(2, 3), **kw):
        kw.setdefault("samples", samples)
        return [SampleConfig(q, n, k, seed=seed, **kw) for (q, n), k in itertools.product(pairs, ks)]

    if name in ("thm_3_2", "cor_2q", "thm_3_7"):
        return grid(ODD_GRID)
    if name in ("thm_3_11", "thm_3_13", "thm_3_12", "thm_3_9", "cor_even_dim"):
        return grid(EVEN_GRID)
    if name == "thm_3_14":
        out = []
        for q, n, t in DEGENERATE_GRID:
            for k in (t, 2 * t, 3 * t):
                if k <= n // 2 and 3 * t < n:
                    out.append(SampleConfig(q, n, k, t=t, samples=samples, seed=seed))
        return out
    if name == "lemma_3_8":
        return [SampleConfig(q, n, 1, samples=1, seed=seed) for q, n in ODD_GRID + EVEN_GRID]
    if name == "lemma_7":
        return grid(EVEN_GRID, ks=(3,)) + [
            SampleConfig(q, n, 3 * t, t=t, samples=samples, seed=seed) for q, n, t in DEGENERATE_GRID if (n // t) % 2 == 0
        ]
    if name == "sum_rule":
        return grid(ODD_GRID + EVEN_GRID) + [
            SampleConfig(q, n, 2 * t, t=t, samples=samples, seed=seed) for q, n, t in DEGENERATE_GRID
        ]
    if name == "oracle_equivalence":
        small = [(2, 5), (2, 6), (2, 8), (3, 4), (3, 5), (4, 4), (5, 3), (2, 10)]
        return grid(small)
    if name == "dual_distance":
        return grid([(2, 6)], ks=(2, 3), samples=max(samples, 25))
    if name == "sidon_equivalence":
        return [SampleConfig(2, 4, 2, seed=seed), SampleConfig(2, 6, 2, seed=seed), SampleConfig(3, 4, 2, seed=seed)]
    return grid(ODD_GRID + EVEN_GRID)
