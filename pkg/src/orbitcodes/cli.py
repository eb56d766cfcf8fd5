"""Command-line interface: ``orbitcodes {dist,verify,reproduce,field-info}``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import __version__
from .dsl import parse_subspace
from .errors import (
    BudgetExceeded,
    DSLSyntaxError,
    FieldConstructionError,
    InvalidSubfield,
    OracleScaleExceeded,
    TowerMismatch,
    UnknownCheck,
    ZeroGenerator,
)
from .gf import FieldTower, build_tower, conway_polynomial, divisors, format_polynomial, prime_power
from .golden import load_examples, reproduce_example
from .subspace import stabilizer
from .orbit import DEFAULT_BUDGET, count_subfield_line_shifts, distance_distribution, intersection_distribution
from .verify import CHECKS, SampleConfig, check, default_configs, gaussian_binomial

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_FIELD = 1, 2, 3, 4
PROGRESS_THRESHOLD = 2**22


class _FieldError(Exception):
    pass


def _modulus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"modulus must be comma-separated integers, got {text!r}") from None


def _add_tower_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--q", type=int, help="field size (a prime power)")
    p.add_argument("--p", type=int, help="characteristic, with --e instead of --q")
    p.add_argument("--e", type=int, default=1, help="q = p^e")
    p.add_argument("--n", type=int, required=required, help="extension degree over GF(q)")
    p.add_argument("--modulus", type=_modulus, help="ascending coefficients c0,c1,...,1 of a primitive polynomial")
    p.add_argument("--conway", metavar="PATH", help="Conway table file (default: bundled)")


def _resolve_q(args) -> tuple[int, int]:
    if args.q is not None and args.p is not None:
        raise _FieldError("give either --q or --p/--e, not both")
    if args.q is not None:
        try:
            return prime_power(args.q)
        except ValueError as exc:
            raise _FieldError(str(exc)) from None
    if args.p is not None:
        return args.p, args.e
    raise _FieldError("one of --q or --p is required")


def _tower(args) -> FieldTower:
    p, e = _resolve_q(args)
    try:
        return build_tower(p, e, args.n, args.modulus, args.conway)
    except (FieldConstructionError, ValueError, OSError) as exc:
        raise _FieldError(str(exc)) from None


def _progress_printer(label: str):
    last = [-1]

    def report(done: int, total: int) -> None:
        pct = 100 * done // max(total, 1)
        if pct != last[0]:
            last[0] = pct
            print(f"\r{label}: {pct:3d}% of {total} shifts", end="" if done < total else "\n", file=sys.stderr)
            sys.stderr.flush()

    return report


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)


# -- dist ----------------------------------------------------------------------------


def cmd_dist(args) -> int:
    tower = _tower(args)
    try:
        u = parse_subspace(args.subspace, tower)
    except DSLSyntaxError as exc:
        print(f"error: {exc.pretty()}", file=sys.stderr)
        return EXIT_USAGE
    except (TowerMismatch, InvalidSubfield, ZeroGenerator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if u.k == 0:
        print("error: the subspace is zero", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    st = stabilizer(u)
    progress = _progress_printer("dist") if st.orbit_size > PROGRESS_THRESHOLD and not args.quiet else None
    try:
        dist = intersection_distribution(u, threads=args.threads, budget=args.budget, progress=progress, stab=st)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    shifts = None
    if tower.n % (2 * st.t) == 0:
        m, count = count_subfield_line_shifts(u, st.t)
        shifts = {"subfield_degree": 2 * st.t, "m": m, "count": count}
    delta = distance_distribution(dist)
    pairs = {d: dist.orbit_size * c for d, c in delta.delta.items()}
    report = {
        "q": tower.q,
        "n": tower.n,
        "p": tower.p,
        "e": tower.e,
        "k": u.k,
        "t": dist.t,
        "orbit_size": dist.orbit_size,
        "lambda": list(dist.lambdas),
        "delta": {str(d): c for d, c in delta.delta.items()},
        "pair_counts": {str(d): c for d, c in pairs.items()},
        "shifts": shifts,
        "min_distance": delta.min_distance,
        "modulus": list(tower.modulus),
        "subspace": args.subspace,
        "seed": None,
        "version": __version__,
        "wall_time": round(time.perf_counter() - start, 6),
    }
    print(_dumps(report))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["i", "lambda_i", "distance", "delta", "pair_count"])
            for i, c in enumerate(dist.lambdas):
                d = 2 * u.k - 2 * i
                w.writerow([i, c, d, c, dist.orbit_size * c])
    return 0


# -- verify --------------------------------------------------------------------------


def cmd_verify(args) -> int:
    if not args.all and not args.check:
        print("error: give --check NAME or --all", file=sys.stderr)
        return EXIT_USAGE
    names = list(CHECKS) if args.all else args.check
    for name in names:
        if name not in CHECKS:
            print(f"error: unknown check {name!r}; known: {', '.join(CHECKS)}", file=sys.stderr)
            return EXIT_USAGE
    explicit = args.q is not None or args.p is not None
    if explicit and args.n is None:
        print("error: --n is required with --q/--p", file=sys.stderr)
        return EXIT_USAGE
    if explicit:
        p, e = _resolve_q(args)
        q = p**e
    ok = True
    for name in names:
        if explicit:
            cfgs = [
                SampleConfig(q, args.n, args.dim or 2, t=args.t, samples=args.samples or 20, seed=args.seed, alphas=args.alphas)
            ]
        else:
            cfgs = default_configs(name, seed=args.seed, samples=args.samples or 20)
        for cfg in cfgs:
            try:
                rep = check(name, cfg)
            except (OracleScaleExceeded, RuntimeError, ValueError) as exc:
                print(f"error: {name} at q={cfg.q}, n={cfg.n}, k={cfg.k}: {exc}", file=sys.stderr)
                return EXIT_USAGE
            except BudgetExceeded as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_BUDGET
            d = rep.to_dict()
            d["version"] = __version__
            print(_dumps(d))
            ok &= rep.passed
    return 0 if ok else EXIT_FAIL


# -- reproduce -----------------------------------------------------------------------


def cmd_reproduce(args) -> int:
    examples = [ex for ex in load_examples() if not (args.skip_large and ex.large)]
    if args.only:
        known = {ex.name for ex in load_examples()}
        for name in args.only:
            if name not in known:
                print(f"error: unknown example {name!r}; known: {', '.join(sorted(known))}", file=sys.stderr)
                return EXIT_USAGE
        examples = [ex for ex in examples if ex.name in args.only]
    if args.q is not None:
        examples = [ex for ex in examples if ex.q == args.q]
    if args.n is not None:
        examples = [ex for ex in examples if ex.n == args.n]
    rows = []
    ok = True
    for ex in examples:
        p, e = prime_power(ex.q)
        override = args.modulus if args.modulus and len(args.modulus) - 1 == e * ex.n else None
        progress = _progress_printer(ex.name) if ex.large and not args.quiet else None
        try:
            res = reproduce_example(
                ex, modulus=override, conway_path=args.conway, threads=args.threads, budget=args.budget, progress=progress
            )
        except (FieldConstructionError, ValueError) as exc:
            print(f"error: {ex.name}: {exc}", file=sys.stderr)
            return EXIT_FIELD
        except BudgetExceeded as exc:
            print(f"error: {ex.name}: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        ok &= res.matches
        rows.append(res)
    if args.json:
        out = []
        for r in rows:
            out.append(
                {
                    "name": r.example.name,
                    "q": r.example.q,
                    "n": r.example.n,
                    "t": r.computed.t,
                    "expected": list(r.example.lambdas),
                    "lambda": list(r.computed.lambdas),
                    "match": r.matches,
                    "sum_rule": r.sum_rule_ok,
                    "divisibility": r.divisibility_ok,
                    "modulus": list(r.modulus),
                    "conway": r.conway,
                    "diagnostics": r.diagnostics,
                    "version": __version__,
                    "wall_time": round(r.seconds, 6),
                }
            )
        print(_dumps(out))
    else:
        for r in rows:
            status = "PASS" if r.matches else "FAIL"
            print(f"{status}  {r.example.name:7s} q={r.example.q} n={r.example.n} t={r.computed.t}")
            print(f"      expected {list(r.example.lambdas)}")
            print(f"      computed {list(r.computed.lambdas)}  ({r.seconds:.2f} s)")
            print(
                f"      sum rule {'PASS' if r.sum_rule_ok else 'FAIL'}, "
                f"divisibility {'PASS' if r.divisibility_ok else 'FAIL'}, "
                f"modulus {format_polynomial(r.modulus)}{'' if r.conway else ' (override)'}"
            )
            for d in r.diagnostics + r.divisibility:
                print(f"      note: {d}")
    return 0 if ok else EXIT_FAIL


# -- field-info ----------------------------------------------------------------------


def cmd_field_info(args) -> int:
    tower = _tower(args)
    try:
        conway = tower.modulus == conway_polynomial(tower.p, tower.m, args.conway)
    except FieldConstructionError:
        conway = False
    subfields = [
        {"degree": s, "size": tower.q**s, "generator_exponent": tower.subfield_exponent(s)} for s in divisors(tower.n)
    ]
    ks = [args.dim] if args.dim is not None else list(range(tower.n + 1))
    info = {
        "p": tower.p,
        "e": tower.e,
        "q": tower.q,
        "n": tower.n,
        "degree": tower.m,
        "modulus": list(tower.modulus),
        "modulus_text": format_polynomial(tower.modulus),
        "conway": conway,
        "subfields": subfields,
        "full_length_orbit_size": (tower.order - 1) // (tower.q - 1),
        "gaussian_binomial": {str(k): gaussian_binomial(tower.n, k, tower.q) for k in ks},
        "version": __version__,
    }
    if args.json:
        print(_dumps(info))
        return 0
    print(f"tower     GF({tower.p}) < GF({tower.q}) < GF({tower.q}^{tower.n}),  p={tower.p}, e={tower.e}, en={tower.m}")
    print(f"modulus   {info['modulus_text']}{'  (Conway)' if conway else ''}")
    print(f"orbit     full-length size {info['full_length_orbit_size']}")
    print("subfields")
    for s in subfields:
        print(f"  GF({tower.q}^{s['degree']})  generated by z^{s['generator_exponent']}")
    print("subspaces")
    for k, c in info["gaussian_binomial"].items():
        print(f"  k={k}: {c}")
    return 0


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orbitcodes", description=__doc__)
    ap.add_argument("--version", action="version", version=f"orbitcodes {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=os.cpu_count(), help="sweep workers (default: all CPUs)")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest orbit to enumerate")
        p.add_argument("--quiet", action="store_true", help="no progress output on standard error")

    p = sub.add_parser("dist", help="intersection and distance distribution of Orb(U)")
    _add_tower_args(p)
    p.add_argument("--subspace", required=True, help="subspace in the DSL, e.g. 'span(z^13, z^17)'")
    p.add_argument("--json", action="store_true", help="JSON output (the default for this command)")
    p.add_argument("--csv", metavar="PATH", help="also write the distribution table as CSV")
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="run theorem checks on random subspaces")
    _add_tower_args(p, required=False)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--check", action="append", metavar="NAME", help=f"one of: {', '.join(CHECKS)}")
    g.add_argument("--all", action="store_true", help="every check at its default configurations")
    p.add_argument("--dim", type=int, help="subspace dimension k")
    p.add_argument("--t", type=int, help="stabilizer exponent for degenerate-orbit checks")
    p.add_argument("--samples", type=int, help="subspaces per configuration (default 20)")
    p.add_argument("--alphas", type=int, help="shifts per subspace for element-wise checks")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", action="store_true", help="JSON lines output (the default for this command)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="recompute the recorded worked examples")
    _add_tower_args(p, required=False)
    p.add_argument("--skip-large", action="store_true", help="omit the examples marked large")
    p.add_argument("--only", action="append", metavar="NAME", help="run only this example (repeatable)")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("field-info", help="modulus, subfields and subspace counts of a tower")
    _add_tower_args(p)
    p.add_argument("--dim", type=int, help="only this k in the subspace-count row")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=cmd_field_info)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except UnknownCheck as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
