"""Running the theorem checks on random subspaces."""

from orbitcodes.verify import SampleConfig, check

runs = [
    ("thm_3_7", SampleConfig(3, 7, 3, samples=10, seed=7)),
    ("thm_3_13", SampleConfig(3, 6, 3, samples=10, seed=2)),
    ("thm_3_14", SampleConfig(2, 12, 6, t=2, samples=6, seed=3)),
    ("lemma_3_8", SampleConfig(3, 4)),
    ("oracle_equivalence", SampleConfig(2, 6, 3, samples=10, seed=1)),
]

for name, cfg in runs:
    rep = check(name, cfg)
    status = "passed" if rep.passed else "FAILED"
    print(f"{name:20s} q={cfg.q} n={cfg.n} k={cfg.k}: {status}, {rep.tested} cases")
    for h in rep.hypotheses:
        print("    assuming", h)
    if rep.observed_multipliers:
        print("    multipliers seen:", sorted(set(rep.observed_multipliers)))
