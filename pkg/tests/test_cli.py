"""CLI surface: subcommands, formats, exit codes, determinism."""

import json

import pytest
from click.testing import CliRunner

from e6inv.cli import main


@pytest.fixture()
def run():
    runner = CliRunner()

    def _run(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)

    return _run


def test_group_order(run):
    res = run("--format", "json", "group", "order", "--generators", "1,2,3,4,5,6")
    assert res.exit_code == 0
    assert json.loads(res.output)["order"] == 51840


def test_group_order_subgroup(run):
    res = run("group", "order", "--generators", "2,3,4,5,6")
    assert "1920" in res.output


def test_set_s(run):
    res = run("--format", "json", "group", "set-s", "--check")
    doc = json.loads(res.output)
    assert doc == {"size": 27, "closed": True, "distinct_mod_p": True}


def test_verify_minpoly_json(run):
    res = run("--format", "json", "verify", "minpoly")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["schema"] == "e6inv-report/1"
    assert doc["ok"] is True
    assert doc["summary"]["pass"] == 3
    assert all("elapsed_ms" not in c for c in doc["checks"])


def test_reports_byte_identical(run):
    a = run("--format", "json", "verify", "normalform").output
    b = run("--format", "json", "verify", "normalform").output
    assert a == b


def test_seed_changes_samples_not_verdict(run):
    a = run("--format", "json", "--seed", "7", "verify", "normalform")
    assert json.loads(a.output)["ok"] is True


def test_compute_poincare(run):
    res = run("--format", "json", "compute", "poincare", "--max-degree", "20")
    doc = json.loads(res.output)
    assert doc["coefficients"][0] == 1
    assert doc["coefficients"][20] == 5


def test_compute_poincare_degree_zero(run):
    res = run("--format", "json", "compute", "poincare", "--max-degree", "0")
    assert json.loads(res.output)["coefficients"] == [1]


def test_compute_sigma(run):
    res = run("--format", "json", "compute", "sigma", "--j", "10")
    doc = json.loads(res.output)
    assert doc["expression"] == "0" and doc["residual"] == "0"


def test_oracle_dim(run):
    res = run("--format", "json", "oracle", "dim", "--degree", "8")
    assert json.loads(res.output)["dimension"] == 2
    res = run("--format", "json", "oracle", "dim", "--degree", "7")
    assert json.loads(res.output)["dimension"] == 0


def test_oracle_sweep_compare(run):
    res = run("oracle", "sweep", "--max-degree", "16", "--compare-poincare")
    assert res.exit_code == 0
    assert "MISMATCH" not in res.output


def test_element_show(run):
    res = run("element", "show", "--name", "x20", "--basis", "generators")
    assert res.output.strip() == "x4*h16 + x8*h12"
    res = run("element", "show", "--name", "x4")
    assert "t1^2" in res.output


def test_element_show_unknown(run):
    res = run("element", "show", "--name", "bogus")
    assert res.exit_code == 2


def test_prime_guard(run):
    res = run("--prime", "5", "verify", "minpoly")
    assert res.exit_code == 2


def test_unknown_subcommand_exit_2(run):
    res = run("verify", "everything")
    assert res.exit_code == 2


def test_nf_command(tmp_path, run):
    f = tmp_path / "in.txt"
    f.write_text("t^3*h12^2 + x4")
    res = run("nf", "--input", str(f))
    assert res.exit_code == 0
    assert "t^3 h12^2: 1" in res.output
    assert "t^0 h12^0: x4" in res.output


def test_nf_strict_failure(tmp_path, run):
    f = tmp_path / "in.txt"
    f.write_text("t^9")
    res = run("nf", "--input", str(f), "--strict")
    assert res.exit_code == 1


def test_verify_all_is_union_of_suites(run):
    # identity of check ids, not a rerun of the heavy suites: use the
    # fast relation mode for both sides
    from e6inv.invariants import registry
    from e6inv.tables import Errata
    from e6inv import verify

    reg = registry()
    errata = Errata.load()
    union_ids = []
    for name in ["action-tables", "definitions", "invariance", "sigma",
                 "minpoly", "relations", "presentations", "normalform"]:
        kw = {"mode": "h", "seed": 0}
        union_ids += [c.check_id for c in verify.SUITES[name](reg, errata, **kw)]
    assert len(union_ids) == len(set(union_ids))


def test_jobs_merge_is_order_stable():
    from e6inv.cli import Ctx, _run_suites

    seq = _run_suites(Ctx("text", None, 3, 0, 1, False), ["minpoly", "presentations"], "h")
    par = _run_suites(Ctx("text", None, 3, 0, 2, False), ["minpoly", "presentations"], "h")
    assert seq.ok() and par.ok()
    assert [c.check_id for c in seq.checks] == [c.check_id for c in par.checks]
    assert seq.checks[0].check_id.startswith("minpoly:")


def test_errata_file_override(tmp_path, run):
    # an empty override file turns the patched relations into failures
    empty = tmp_path / "none.txt"
    empty.write_text("# no entries\n")
    res = run("--errata", str(empty), "--format", "json",
              "verify", "relations", "--mode", "h")
    doc = json.loads(res.output)
    assert res.exit_code == 1
    assert doc["summary"]["fail"] == 7
