import csv
import json
import subprocess
import sys

import pytest

from orbitcodes.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_volatile(text):
    def clean(obj):
        if isinstance(obj, dict):
            return {k: clean(v) for k, v in obj.items() if k not in ("wall_time", "version")}
        if isinstance(obj, list):
            return [clean(x) for x in obj]
        return obj

    return [json.dumps(clean(json.loads(line))) for line in text.splitlines() if line.strip()]


def test_dist_examples(capsys):
    code, out, _ = run(["dist", "--q", "3", "--n", "11", "--subspace", "span(z^13,z^17,z^21,z^23)"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["lambda"] == [87048, 1512, 12, 0]
    for key in ("q", "n", "k", "t", "orbit_size", "lambda", "delta", "pair_counts", "shifts", "modulus", "seed", "version"):
        assert key in rep
    code, out, _ = run(["dist", "--q", "2", "--n", "14", "--subspace", "z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)"], capsys)
    rep = json.loads(out)
    assert rep["lambda"] == [5040, 0, 420, 0, 0, 0] and rep["t"] == 2
    code, out, _ = run(["dist", "--p", "2", "--e", "1", "--n", "4", "--subspace", "F(2,2)"], capsys)
    assert json.loads(out)["lambda"] == [4, 0]


def test_dist_csv(tmp_path, capsys):
    path = tmp_path / "d.csv"
    code, _, _ = run(["dist", "--q", "2", "--n", "4", "--subspace", "F(2,2)", "--csv", str(path)], capsys)
    rows = list(csv.reader(path.open()))
    assert code == 0
    assert rows[0] == ["i", "lambda_i", "distance", "delta", "pair_count"]
    assert rows[1] == ["0", "4", "4", "4", "20"]


def test_dist_exit_codes(capsys):
    assert run(["dist", "--q", "2", "--n", "4", "--subspace", "span(z"], capsys)[0] == 2
    assert run(["dist", "--q", "2", "--n", "4", "--subspace", "z*F(3)"], capsys)[0] == 2
    code, _, err = run(["dist", "--q", "3", "--n", "11", "--subspace", "span(z)", "--budget", "10"], capsys)
    assert code == 3 and "88573" in err
    assert run(["dist", "--q", "6", "--n", "4", "--subspace", "span(z)"], capsys)[0] == 4
    assert run(["dist", "--q", "2", "--n", "4", "--modulus", "1,0,1,0,1", "--subspace", "span(z)"], capsys)[0] == 4
    assert run(["dist", "--q", "97", "--n", "9", "--subspace", "span(z)"], capsys)[0] == 4
    with pytest.raises(SystemExit) as exc:
        main(["dist", "--q", "2"])
    assert exc.value.code == 2


def test_verify_examples(capsys):
    code, out, _ = run(["verify", "--check", "thm_3_7", "--q", "3", "--n", "7", "--dim", "3", "--samples", "20", "--seed", "7"], capsys)
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(["verify", "--check", "oracle_equivalence", "--q", "2", "--n", "6", "--dim", "3", "--samples", "30", "--seed", "1"], capsys)
    assert code == 0 and json.loads(out)["tested"] == 30
    code, out, _ = run(["verify", "--check", "lemma_3_8", "--q", "3", "--n", "4"], capsys)
    assert code == 0 and json.loads(out)["passed"]


def test_verify_exit_codes(capsys, monkeypatch):
    assert run(["verify", "--check", "nope"], capsys)[0] == 2
    assert run(["verify"], capsys)[0] == 2
    assert run(["verify", "--check", "oracle_equivalence", "--q", "3", "--n", "9"], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--check", "sum_rule", "--all"])
    assert exc.value.code == 2
    from orbitcodes import verify

    real = verify.intersection_distribution

    def corrupted(u, **kw):
        d = real(u, **kw)
        return type(d)((d.lambdas[0] + 1,) + d.lambdas[1:], d.t, d.orbit_size, d.k)

    monkeypatch.setattr(verify, "intersection_distribution", corrupted)
    assert run(["verify", "--check", "sum_rule", "--q", "2", "--n", "5", "--samples", "2"], capsys)[0] == 1


def test_reproduce(capsys):
    code, out, _ = run(["reproduce", "--skip-large"], capsys)
    assert code == 0 and out.count("PASS  ") == 4
    code, out, _ = run(["reproduce", "--only", "q3n10", "--modulus", "2,2,2,2,2,0,0,0,1,2,1"], capsys)
    assert code == 1
    assert "FAIL" in out and "x^10 + 2*x^9 + x^8 + 2*x^4 + 2*x^3 + 2*x^2 + 2*x + 2" in out
    assert "sum rule PASS, divisibility PASS" in out
    code, out, _ = run(["reproduce", "--only", "q2n14", "--json"], capsys)
    rec = json.loads(out)[0]
    assert code == 0 and rec["match"] and rec["lambda"] == [5040, 0, 420, 0, 0, 0]
    assert run(["reproduce", "--only", "nope"], capsys)[0] == 2


def test_field_info(capsys):
    code, out, _ = run(["field-info", "--q", "3", "--n", "10", "--json"], capsys)
    info = json.loads(out)
    assert code == 0 and info["conway"]
    assert [s["degree"] for s in info["subfields"]] == [1, 2, 5, 10]
    code, out, _ = run(["field-info", "--q", "2", "--n", "14", "--json"], capsys)
    assert {s["degree"]: s["generator_exponent"] for s in json.loads(out)["subfields"]}[2] == 5461
    code, out, _ = run(["field-info", "--q", "4", "--n", "3", "--json"], capsys)
    info = json.loads(out)
    assert (info["p"], info["e"], info["degree"]) == (2, 2, 6)
    code, out, _ = run(["field-info", "--q", "2", "--n", "4", "--dim", "2"], capsys)
    assert code == 0 and "k=2: 35" in out
    assert run(["field-info", "--q", "10", "--n", "3"], capsys)[0] == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["dist", "--q", "3", "--n", "10", "--subspace", "z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3)"],
        ["dist", "--q", "2", "--n", "14", "--subspace", "z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)"],
        ["verify", "--check", "thm_3_13", "--q", "3", "--n", "6", "--dim", "3", "--samples", "5", "--seed", "3"],
        ["reproduce", "--skip-large", "--json"],
    ],
)
def test_threads_do_not_change_output(argv, capsys):
    outs = [strip_volatile(run(argv + ["--threads", str(n)], capsys)[1]) for n in (1, 2, 8)]
    assert outs[0] == outs[1] == outs[2]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orbitcodes", "field-info", "--q", "2", "--n", "4", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["modulus"] == [1, 1, 0, 0, 1]
