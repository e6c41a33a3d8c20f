import json

import pytest
from click.testing import CliRunner

from mdspace.cli import main


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, [str(a) for a in args])

    return go


@pytest.fixture
def files(tmp_path):
    sier = tmp_path / "sier.dsl"
    sier.write_text("poset 2\nle 0 1\n")
    vee = tmp_path / "vee.dsl"
    vee.write_text("# 2 below 0 and 1\nposet 3\nle 2 0\nle 2 1\n")
    bad = tmp_path / "bad.dsl"
    bad.write_text("space 2\nopen\nopen 0 1\n")
    idx = tmp_path / "idx.dsl"
    idx.write_text("poset 2\nle 0 1\n")
    return {"sier": sier, "vee": vee, "bad": bad, "idx": idx}


def test_classify(run, files):
    res = run("classify", files["sier"], "--json")
    assert res.exit_code == 0
    assert json.loads(res.output)["status"] == "pass"


def test_input_errors_exit_2(run, files, tmp_path):
    assert run("classify", files["bad"]).exit_code == 2
    assert run("classify", tmp_path / "missing").exit_code == 2
    assert run("check", "nope").exit_code == 2
    assert run("check", "maps", "--random", 3).exit_code == 2
    assert run("closures", files["sier"], "--set", "0,9").exit_code == 2
    assert run("witness", "nowhere", "facts").exit_code == 2
    assert run("convergence", files["sier"], "--net", "0:0,1:1", "--ideal", "gen:[5]", "--point", 0).exit_code == 2


def test_closures(run, files):
    res = run("closures", files["sier"], "--set", "1", "--json")
    out = json.loads(res.output)
    assert out["sets"]["closure"] == out["sets"]["tilde"] == out["sets"]["hat"] == [0, 1]


def test_rudin(run, files):
    res = run("rudin", files["vee"], "--family", "[0,1];[2]", "--json")
    assert res.exit_code == 0
    assert json.loads(res.output)["sets"]["transversal"] == [0, 2]
    assert run("rudin", files["vee"], "--family", "[0];[1]").exit_code == 2


def test_convergence_modes(run, files):
    res = run("convergence", files["sier"], "--index", "chain:2", "--net", "0:0,1:1",
              "--ideal", "i0", "--mode", "IS", "--point", 0, "--json")
    assert res.exit_code == 0
    res = run("convergence", files["sier"], "--index", "chain:2", "--net", "0:0,1:1",
              "--ideal", "trivial", "--mode", "I", "--wrt", "lawson", "--point", 0)
    assert res.exit_code == 1


def test_convergence_index_file(run, files):
    res = run("convergence", files["vee"], "--index", files["idx"], "--net", "0:2,1:2", "--point", 2)
    assert res.exit_code == 0


def test_suite_counterexample_replays(run, files):
    # payload of the failing Thm5.16 flag, fed back through the single-shot command
    from mdspace.suites import SuiteSpec, run_suite

    report, code = run_suite(SuiteSpec("section5", max_n=2, max_index=2))
    assert code == 1
    cex = report.counterexample["Thm5.16"]
    path = files["sier"].parent / "cex.dsl"
    path.write_text(cex["space"])
    res = run("convergence", path, "--index", cex["index"], "--net", cex["net"], "--ideal", cex["ideal"],
              "--mode", "ISL", "--point", cex["point"], "--json")
    modes = json.loads(res.output)["sets"]["modes"]
    assert modes["ISL"] == cex["left"] and modes["I@lawson"] == cex["right"]


def test_witness_commands(run):
    res = run("witness", "example63", "query", "--mode", "IGS", "--net", "alt:a", "--ideal", "i0",
              "--point", "a")
    assert res.exit_code == 0
    assert run("witness", "example63", "query", "--mode", "IS", "--net", "alt:a", "--point", "a").exit_code == 1
    assert run("witness", "example63", "query", "--order", "a", "inf").exit_code == 0
    assert run("witness", "example63", "query", "--order", "a", "5").exit_code == 1
    assert run("witness", "example63", "query").exit_code == 2
    res = run("witness", "example63", "truncate", 3, "--emit-dsl")
    assert "poset 5" in res.output
    assert run("witness", "omegachain", "facts").exit_code == 0


def test_enumerate(run):
    assert run("enumerate", "--n", 3).output.strip() == "19"
    res = run("enumerate", "--n", 2, "--emit-dsl")
    assert res.output.count("poset 2") == 3
    assert run("enumerate", "--n", 9).exit_code == 2


def test_check_suite(run):
    res = run("check", "collapse", "--max-n", 3, "--json")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["status"] == "pass" and out["stats"]["spaces"] == 23
    res = run("check", "section4", "--random", 5, "--seed", 3, "--json")
    assert json.loads(res.output)["stats"]["mode"] == "sampled"


def test_check_failure_exit(run):
    res = run("check", "section5", "--max-n", 2, "--max-index", 2, "--json")
    assert res.exit_code == 1
    out = json.loads(res.output)
    assert out["status"] == "fail" and out["counterexample"]
