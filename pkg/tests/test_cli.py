import json

import pytest

from koornwinder.cli import main, CACHE_ENV_VAR


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_e_trivial(capsys):
    code, out, _ = run_cli(capsys, "compute-e", "--n", "1", "--alpha", "0")
    assert code == 0
    report = json.loads(out)
    assert report["label"] == [0]
    assert report["terms"] == [{"exp": [0], "coeff": 1}]
    assert report["verified"] is True


def test_compute_e_symbolic_monic(capsys):
    code, out, _ = run_cli(capsys, "compute-e", "--n", "1", "--alpha", "-1",
                           "--mode", "symbolic")
    assert code == 0
    report = json.loads(out)
    lead = [t for t in report["terms"] if t["exp"] == [-1]]
    assert lead and lead[0]["coeff"] == 1


def test_compute_p(capsys):
    code, out, _ = run_cli(capsys, "compute-p", "--n", "2", "--lambda", "1,0")
    assert code == 0
    report = json.loads(out)
    assert report["label"] == [1, 0]
    assert len(report["terms"]) == 5


def test_check_relations_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "check-relations", "--n", "2",
                           "--degree", "1")
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"] is True


def test_check_duality_symbolic(capsys):
    code, out, _ = run_cli(capsys, "check-duality", "--n", "1",
                           "--max-weight", "1", "--symbolic")
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"] is True
    kinds = {c["kind"] for c in report["checks"]}
    assert kinds == {"E", "P", "ratio"}


def test_basis_check(capsys):
    code, out, _ = run_cli(capsys, "basis-check", "--n", "2", "--degree", "1")
    assert code == 0
    assert json.loads(out)["invertible"] is True


def test_determinism(capsys):
    args = ("compute-e", "--n", "2", "--alpha", "1,-1", "--seed", "5")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    args = ("check-relations", "--n", "1", "--degree", "1", "--seed", "9")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_text_and_json_agree(capsys):
    _, as_json, _ = run_cli(capsys, "compute-e", "--n", "1", "--alpha", "1")
    _, as_text, _ = run_cli(capsys, "compute-e", "--n", "1", "--alpha", "1",
                            "--text")
    report = json.loads(as_json)
    assert "label: 1" in as_text
    assert "verified: True" in as_text
    for term in report["terms"]:
        if term["exp"] == [1]:
            assert str(term["coeff"]) in as_text or "x1" in as_text


def test_explicit_degenerate_assignment_fails(capsys):
    code, _, err = run_cli(capsys, "compute-e", "--n", "1", "--alpha", "-1",
                           "--assignment", "1,1,1,1,1,1")
    assert code == 1
    assert "error" in json.loads(err)


def test_specialize_with_redraw(capsys, tmp_path):
    # 1/(q - 4) vanishes at the default assignment (q = 4) and triggers
    # the deterministic re-draw
    from koornwinder.paramfield import FieldElement, ONE
    q = FieldElement.monomial((2, 0, 0, 0, 0, 0))
    element = ONE / (q - 4)
    path = tmp_path / "element.json"
    path.write_text(json.dumps(element.to_json_obj()))
    code, out, _ = run_cli(capsys, "specialize", "--input", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["assignment"] != ["2", "3", "5", "7", "11", "13"]
    # and twice gives the same redraw
    code2, out2, _ = run_cli(capsys, "specialize", "--input", str(path))
    assert out == out2


def test_specialize_stdin_value(capsys, tmp_path, monkeypatch):
    from koornwinder.paramfield import SQRT_TN, SQRT_UN
    element = SQRT_TN * SQRT_UN
    path = tmp_path / "a.json"
    path.write_text(json.dumps(element.to_json_obj()))
    code, out, _ = run_cli(capsys, "specialize", "--input", str(path),
                           "--assignment", "1,1,1,7,1,13")
    assert code == 0
    assert json.loads(out)["value"] == "91"


def test_cache_dir_and_env(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    args = ("compute-e", "--n", "2", "--alpha", "2,0",
            "--cache-dir", str(cache))
    _, first, _ = run_cli(capsys, *args)
    assert list(cache.glob("*.json"))
    _, second, _ = run_cli(capsys, *args)  # warm start
    assert first == second
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path / "envcache"))
    _, third, _ = run_cli(capsys, "compute-e", "--n", "2", "--alpha", "2,0")
    assert first == third
    assert list((tmp_path / "envcache").glob("*.json"))


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["compute-e", "--n", "1"])  # missing --alpha
    assert info.value.code == 2
