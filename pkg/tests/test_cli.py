from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import pytest
from conftest import descriptor_dict

from hecke_params.cli import main
from hecke_params.langlands import Case

DATA = resources.files("hecke_params.data")


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def bundled(name):
    return str(DATA.joinpath(name))


# -- classify ------------------------------------------------------------------------------


def test_classify_case_iii(capsys):
    code, out, _ = run(capsys, "classify", bundled("case_III.json"))
    assert code == 0
    assert "case III" in out and "a=3" in out and "reducibility point 2" in out
    assert out.startswith("jord: gap-free")


def test_classify_always_irreducible(tmp_path, capsys):
    desc = {
        "group": "SO_even_split",
        "blocks": [{"label": "rho", "k": 3, "d": 1, "t": 1, "self_dual": "orthogonal"}],
        "h": {"trivial": True, "jord": []},
    }
    code, out, _ = run(capsys, "classify", "--json", write(tmp_path, "d.json", desc))
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["blocks"][0]["reducibility_point"] == "AlwaysIrreducible"


def test_gap_error_exits_1(tmp_path, capsys):
    desc = descriptor_dict(Case.III, 1, 1)
    desc["h"]["jord"] = [["rho", 3]]
    code, _, err = run(capsys, "classify", write(tmp_path, "d.json", desc))
    assert code == 1 and "GapError" in err


def test_schema_error_exits_2(tmp_path, capsys):
    desc = descriptor_dict(Case.I, 2, 1)
    desc["blocks"][0]["colour"] = "red"
    code, _, err = run(capsys, "classify", write(tmp_path, "d.json", desc))
    assert code == 2 and "blocks/0" in err
    code, _, err = run(capsys, "classify", write(tmp_path, "bad.json", "{oops"))
    assert code == 2 and "line 1" in err
    code, _, _ = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert code == 2


# -- rootdatum ------------------------------------------------------------------------------


def test_rootdatum_text(tmp_path, capsys):
    code, out, _ = run(capsys, "rootdatum", bundled("case_III.json"))
    assert code == 0
    assert "B2" in out and "quadratic params [q, q^3]" in out and "root system: ok" in out
    code, out, _ = run(capsys, "rootdatum", write(tmp_path, "a.json", descriptor_dict(Case.I, 3, 1)))
    assert code == 0 and "A2" in out and "[q, q]" in out
    code, out, _ = run(capsys, "rootdatum", bundled("case_II.json"))
    assert code == 0 and "D2 = A1xA1" in out and "R_psi nontrivial" in out


def test_rootdatum_json(capsys):
    code, out, _ = run(capsys, "rootdatum", "--json", bundled("case_III.json"))
    report = json.loads(out)
    assert code == 0 and report["schema"] == 1 and report["violations"] == []
    for key in ("delta", "sigma_plus", "coroots", "params"):
        assert key in report


# -- verify ---------------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["case_I.json", "case_II.json", "case_IIb.json", "case_III.json", "mixture.json"])
def test_verify_bundled(name, capsys):
    code, out, _ = run(capsys, "verify", bundled(name), "--samples", "20")
    assert code == 0 and "result: PASS" in out and "seed: 0" in out


def test_verify_zero_samples(capsys):
    code, out, _ = run(capsys, "verify", bundled("case_III.json"), "--samples", "0")
    assert code == 0 and "result: PASS" in out


def test_verify_parity_override_rejected(tmp_path, capsys):
    desc = descriptor_dict(Case.III, 2, 1)
    desc["blocks"][0].update(a=3, a_minus=0)
    code, out, err = run(capsys, "verify", write(tmp_path, "d.json", desc))
    assert code == 1 and "ParityError" in err and out == ""


def test_verify_j_square(capsys):
    code, out, _ = run(capsys, "verify", bundled("case_II.json"), "--samples", "5", "--j-square", "-2")
    assert code == 0 and "[SKIP] smash_model" in out
    code, _, err = run(capsys, "verify", bundled("case_II.json"), "--j-square", "T[1,1]")
    assert code == 2 and "--j-square" in err


def test_negative_samples_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", bundled("case_II.json"), "--samples", "-1"])
    assert info.value.code == 2


# -- eval -----------------------------------------------------------------------------------


def test_eval_examples(tmp_path, capsys):
    exprs = write(tmp_path, "e.txt", "(T[1,1]+1)*(T[1,1]-q)\n")
    code, out, _ = run(capsys, "eval", write(tmp_path, "i.json", descriptor_dict(Case.I, 2, 1)), exprs)
    assert code == 0 and out.splitlines()[1] == "0"
    exprs = write(tmp_path, "e2.txt", "# comment\nphi[1]*b[1]\n")
    code, out, _ = run(capsys, "eval", write(tmp_path, "t2.json", descriptor_dict(Case.I, 1, 2)), exprs)
    assert out.splitlines() == [">>> phi[1]*b[1]", "-1 · b[1]*phi[1]", "mode: StrictB"]
    exprs = write(tmp_path, "e3.txt", "J[1]*J[1]\n")
    code, out, _ = run(capsys, "eval", bundled("case_II.json"), exprs)
    assert out.splitlines()[1] == "1"


def test_eval_rational_note(tmp_path, capsys):
    exprs = write(tmp_path, "e.txt", "T[1,1]*b[1,0]\n")
    code, out, _ = run(capsys, "eval", write(tmp_path, "d.json", descriptor_dict(Case.I, 2, 2)), exprs)
    assert code == 0 and "mode: Rational (NotClosed" in out


def test_eval_errors(tmp_path, capsys):
    desc = bundled("case_III.json")
    code, _, err = run(capsys, "eval", desc, write(tmp_path, "e.txt", "T[1,1] +\n"))
    assert code == 2 and ":1:" in err and "column 9" in err
    code, _, err = run(capsys, "eval", desc, write(tmp_path, "f.txt", "1\nT[2,1]\n"))
    assert code == 2 and ":2:" in err


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--json", bundled("case_III.json"), bundled("case_III.expr"))
    report = json.loads(out)
    assert code == 0 and report["schema"] == 1
    assert [r["mode"] for r in report["results"]] == ["StrictBpsi"] * 4
    assert report["results"][0]["terms"] == []


# -- selftest and determinism ---------------------------------------------------------------


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--samples", "10")
    assert code == 0
    assert out.splitlines()[-1] == "result: PASS"
    assert sum(line.startswith("PASS ") for line in out.splitlines()) == 5


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "hecke_params", "verify", bundled("mixture.json"), "--samples", "15", "--seed", "7", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["seed"] == 7
