"""Recorded worked examples and their reproduction.

The records live in ``data/examples.json``: field parameters, the subspace
in the DSL and the expected intersection distribution.  Exact λ values
depend on the modulus (the records assume Conway polynomials); the sum rule
and the divisibility statements do not, so they are reported separately.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Sequence

from .dsl import parse_element, parse_subspace
from .errors import MissingConwayPolynomial
from .gf import FieldTower, conway_polynomial, format_polynomial, tower_for
from .orbit import DEFAULT_BUDGET, IntersectionDistribution, count_subfield_line_shifts, intersection_distribution
from .verify import divisibility_violations


@dataclass(frozen=True)
class Example:
    name: str
    q: int
    n: int
    subspace: str
    t: int
    lambdas: tuple[int, ...]
    large: bool = False
    shifts: dict | None = None
    printed_generator: str | None = None
    generator_degree: int | None = None
    note: str | None = None


@dataclass
class ExampleResult:
    example: Example
    modulus: tuple[int, ...]
    conway: bool
    computed: IntersectionDistribution
    seconds: float
    shift_count: tuple[int, int] | None = None
    divisibility: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    @property
    def sum_rule_ok(self) -> bool:
        return sum(self.computed.lambdas) == self.computed.orbit_size - 1

    @property
    def divisibility_ok(self) -> bool:
        return not self.divisibility

    @property
    def matches(self) -> bool:
        ex = self.example
        if self.computed.lambdas != ex.lambdas or self.computed.t != ex.t:
            return False
        if ex.shifts and self.shift_count != (ex.shifts["m"], ex.shifts["count"]):
            return False
        return True


@lru_cache(maxsize=1)
def load_examples() -> tuple[Example, ...]:
    text = resources.files("orbitcodes").joinpath("data/examples.json").read_text()
    out = []
    for rec in json.loads(text)["examples"]:
        rec = dict(rec)
        rec["lambdas"] = tuple(rec.pop("lambda"))
        out.append(Example(**rec))
    return tuple(out)


def get_example(name: str) -> Example:
    for ex in load_examples():
        if ex.name == name:
            return ex
    raise KeyError(f"no recorded example named {name!r}")


def _tower(ex: Example, modulus: Sequence[int] | None, conway_path: str | None) -> tuple[FieldTower, bool]:
    tower = tower_for(ex.q, ex.n, tuple(modulus) if modulus else None, conway_path)
    try:
        conway = tower.modulus == conway_polynomial(tower.p, tower.m, conway_path)
    except MissingConwayPolynomial:
        conway = False
    return tower, conway


def reproduce_example(
    ex: Example,
    *,
    modulus: Sequence[int] | None = None,
    conway_path: str | None = None,
    threads: int | None = None,
    budget: int | None = DEFAULT_BUDGET,
    progress: Callable[[int, int], None] | None = None,
) -> ExampleResult:
    tower, conway = _tower(ex, modulus, conway_path)
    u = parse_subspace(ex.subspace, tower)
    start = time.perf_counter()
    dist = intersection_distribution(u, threads=threads, budget=budget, progress=progress)
    elapsed = time.perf_counter() - start
    res = ExampleResult(ex, tower.modulus, conway, dist, elapsed)
    if ex.shifts:
        res.shift_count = count_subfield_line_shifts(u, ex.shifts["t"])
    res.divisibility, _ = divisibility_violations(dist, u)
    if ex.printed_generator:
        deg = tower.degree_over(parse_element(ex.printed_generator, tower))
        if deg != ex.generator_degree:
            res.diagnostics.append(
                f"printed generator {ex.printed_generator} has degree {deg} over GF({ex.q}) "
                f"under this modulus, not {ex.generator_degree}"
            )
    if not res.matches:
        res.diagnostics.append(
            f"computed lambda {list(dist.lambdas)} differs from the recorded {list(ex.lambdas)} "
            f"under modulus {format_polynomial(tower.modulus)}"
            + ("" if conway else " (not the Conway polynomial; the recorded values assume Conway)")
        )
    return res
