import json

import pytest

from satkit.cli import main, run_certification


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_geom(capsys):
    code, out, err = run(capsys, "geom", "--type", "GL", "--rank", "2",
                         "--mu", "2,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "satkit/1"
    assert payload["dim"] == 2
    assert payload["closure_cells"] == [[1, 1], [2, 0]]
    assert payload["mv_table"][0] == {"lambda": [2, 0], "dim": 2, "count": 1}
    assert "dimension 2" in err


def test_geom_zero(capsys):
    code, out, _ = run(capsys, "geom", "--type", "GL", "--rank", "2",
                       "--mu", "0,0")
    assert code == 0
    assert json.loads(out)["dim"] == 0


def test_geom_non_dominant_exits_2(capsys):
    code, _, err = run(capsys, "geom", "--type", "GL", "--rank", "2",
                       "--mu", "0,1")
    assert code == 2
    assert "not dominant" in err


def test_geom_simple_type(capsys):
    code, out, _ = run(capsys, "geom", "--type", "A", "--rank", "1",
                       "--mu", "2")
    assert code == 0
    assert json.loads(out)["dim"] == 2


def test_parse_error_exits_2(capsys):
    code, _, _ = run(capsys, "geom", "--type", "GL", "--rank", "2",
                     "--mu", "2;0")
    assert code == 2
    code, _, _ = run(capsys, "geom", "--type", "E", "--rank", "8",
                     "--mu", "1,0")
    assert code == 2


def test_qanalog(capsys):
    code, out, _ = run(capsys, "qanalog", "--type", "GL", "--rank", "2",
                       "--mu", "2,0", "--lam", "1,1", "--bk-oracle")
    assert code == 0
    payload = json.loads(out)
    assert payload["m_poly"] == [0, 1]
    assert payload["a_poly"] == [1]
    assert payload["bk_poly"] == [0, 1]
    assert payload["agree"] is True


def test_qanalog_equal_weights(capsys):
    code, out, _ = run(capsys, "qanalog", "--type", "GL", "--rank", "2",
                       "--mu", "2,0", "--lam", "2,0")
    payload = json.loads(out)
    assert code == 0 and payload["m_poly"] == [1] and payload["a_poly"] == [1]


def test_qanalog_component_mismatch(capsys):
    code, out, _ = run(capsys, "qanalog", "--type", "GL", "--rank", "2",
                       "--mu", "2,0", "--lam", "1,0")
    payload = json.loads(out)
    assert code == 0
    assert payload["m_poly"] == [] and payload["note"] == "component mismatch"


def test_convolve(capsys):
    code, out, _ = run(capsys, "convolve", "--type", "GL", "--rank", "2",
                       "--lam", "1,0", "--mu", "1,0")
    assert code == 0
    payload = json.loads(out)
    assert {"coweight": [2, 0], "v_low": 0, "coeffs_v": [1]} in payload["terms"]
    assert {"coweight": [1, 1], "v_low": 0, "coeffs_v": [1, 0, 1]} in \
        payload["terms"]


def test_convolve_central(capsys):
    code, out, _ = run(capsys, "convolve", "--type", "GL", "--rank", "2",
                       "--lam", "1,0", "--mu", "1,1")
    payload = json.loads(out)
    assert payload["terms"] == [
        {"coweight": [2, 1], "v_low": 0, "coeffs_v": [1]}]


def test_satake(capsys):
    code, out, _ = run(capsys, "satake", "--type", "GL", "--rank", "2",
                       "--mu", "2,0")
    payload = json.loads(out)
    assert code == 0
    assert {"coweight": [2, 0], "v_low": 2, "coeffs_v": [1]} in payload["terms"]
    assert {"coweight": [1, 1], "v_low": 0, "coeffs_v": [-1]} in \
        payload["terms"]


def test_oracle(capsys, tmp_path):
    prefix = str(tmp_path / "rep")
    code, out, _ = run(capsys, "oracle", "--n", "2", "--q", "2",
                       "--window", "1", "--selftest", "--csv", prefix)
    assert code == 0
    payload = json.loads(out)
    assert sum(r["count"] for r in payload["cells"]) == 15
    assert payload["selftest"] == {"divisor_invariance": True,
                                   "duality": True}
    assert (tmp_path / "rep_cells.csv").exists()


def test_oracle_budget_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("SATKIT_BUDGET", "5")
    code, _, err = run(capsys, "oracle", "--n", "2", "--q", "2",
                       "--window", "1")
    assert code == 3
    assert "budget" in err


def test_certify_cli(capsys):
    code, out, _ = run(capsys, "certify", "--n", "2", "--q", "2,3",
                       "--bound", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_match"] is True
    assert len(payload["rows"]) > 0
    assert all(r["match"] for r in payload["rows"])


def test_certify_gl1(capsys):
    code, out, _ = run(capsys, "certify", "--n", "1", "--q", "2",
                       "--bound", "2")
    assert code == 0
    assert json.loads(out)["all_match"] is True


def test_certify_mismatch_exits_1(capsys, monkeypatch):
    import satkit.cli as cli_mod

    real = cli_mod.lo.brute_convolution

    def corrupted(lam, mu, nu, q, budget=None):
        return real(lam, mu, nu, q, budget=budget) + 1

    monkeypatch.setattr(cli_mod.lo, "brute_convolution", corrupted)
    code, out, _ = run(capsys, "certify", "--n", "2", "--q", "2",
                       "--bound", "0")
    assert code == 1
    assert json.loads(out)["all_match"] is False


def test_oracle_workers_flag(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2", "--q", "2",
                       "--window", "1", "--workers", "2")
    assert code == 0
    assert sum(r["count"] for r in json.loads(out)["cells"]) == 15


def test_certify_includes_quasi_minuscule_row():
    report = run_certification(2, [2], -2, 2)
    row = next(r for r in report["rows"]
               if r["lambda"] == [1, -1] and r["mu"] == [1, -1]
               and r["nu"] == [0, 0])
    assert row["symbolic"] == row["brute"] == 6
    assert report["all_match"]


def test_verlinde_cli(capsys):
    code, out, _ = run(capsys, "verlinde", "--n", "2", "--g", "1", "--m", "3")
    payload = json.loads(out)
    assert code == 0 and payload["dimension"] == 4
    assert payload["residual"] < 1e-6


def test_verlinde_ade(capsys):
    code, out, _ = run(capsys, "verlinde", "--ade", "E8", "--g", "5")
    assert code == 0 and json.loads(out)["dimension"] == 1
    code, out, _ = run(capsys, "verlinde", "--n", "3", "--g", "2", "--m", "1")
    assert code == 0 and json.loads(out)["dimension"] == 9


def test_verlinde_batch(capsys, tmp_path):
    batch = tmp_path / "queries.jsonl"
    batch.write_text('{"n": 2, "g": 1, "m": 1}\n{"n": 3, "g": 2, "m": 2}\n')
    code, out, _ = run(capsys, "verlinde", "--batch", str(batch))
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert [l["dimension"] for l in lines] == [2, 45]


def test_verlinde_missing_args(capsys):
    code, _, err = run(capsys, "verlinde", "--n", "2")
    assert code == 2


def test_json_deterministic(capsys):
    _, out1, _ = run(capsys, "convolve", "--type", "GL", "--rank", "2",
                     "--lam", "1,-1", "--mu", "1,-1")
    _, out2, _ = run(capsys, "convolve", "--type", "GL", "--rank", "2",
                     "--lam", "1,-1", "--mu", "1,-1")
    assert out1 == out2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
