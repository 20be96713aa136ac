import json
from pathlib import Path

import pytest

from cuspworks import __version__
from cuspworks.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def golden(name):
    return json.loads((GOLDEN / name).read_text())


@pytest.mark.parametrize(
    "argv, name",
    [
        (["tjurina", "x^2-y^3-z^2+w^3", "--json"], "tjurina_cusp.json"),
        (["tjurina", "x^2 - y^3", "--json"], "tjurina_a2.json"),
        (["tjurina", "x", "--json"], "tjurina_smooth.json"),
        (["singular", "-l", "1", "-s", "3", "--json"], "singular_three_nodes.json"),
        (["singular", "--json"], "singular_central.json"),
        (["fiber", "t^6 - 1", "--json"], "fiber_sextic.json"),
    ],
)
def test_json_output_matches_golden(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert json.loads(out) == golden(name)


def test_tjurina_text_output(capsys):
    code, out, _ = run(capsys, "tjurina", "x^2 - y^3 - z^2 + w^3")
    assert code == EXIT_OK
    assert out.splitlines() == ["basis: 1, y, w, y*w", "tjurina: 4"]


def test_tjurina_with_explicit_variables(capsys):
    code, out, _ = run(capsys, "tjurina", "x^2 - y^3", "--vars", "x, y", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["tjurina"] == 2


def test_smooth_fiber_is_empty(capsys):
    code, out, _ = run(capsys, "singular", "--lambda", "1", "--json")
    assert code == EXIT_OK
    assert json.loads(out) == []


def test_singular_text_output(capsys):
    code, out, _ = run(capsys, "singular", "-l", "1", "-s", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "fiber over (1, 0, 0, 3): 3 singular point(s)"
    assert all("node" in line for line in lines[1:])


def test_parse_errors_report_a_position(capsys):
    code, out, _ = run(capsys, "tjurina", "x +", "--json")
    assert code == EXIT_USAGE
    payload = json.loads(out)
    assert payload["error"] == "ParseError"
    assert payload["position"] == 3


def test_bad_coordinate_names_the_flag(capsys):
    code, _, err = run(capsys, "singular", "--lambda", "1/")
    assert code == EXIT_USAGE
    assert "--lambda" in err
    assert "at position" in err


def test_exact_failure_suggests_numeric_mode(capsys):
    code, _, err = run(capsys, "singular", "-m", "6", "-n", "6")
    assert code == EXIT_FAILED
    assert "ExactFactorizationFailed" in err
    assert "retry with --mode numeric" in err

    code, out, _ = run(capsys, "singular", "-m", "6", "-n", "6", "--json")
    assert code == EXIT_FAILED
    assert json.loads(out)["fallback"] == "--mode numeric"


def test_numeric_mode(capsys):
    code, out, _ = run(capsys, "singular", "-m", "6", "-n", "6", "--mode", "numeric", "--json")
    assert code == EXIT_OK
    records = json.loads(out)
    assert len(records) == 2
    for record in records:
        _, (y_re, y_im), _, (w_re, w_im) = record["coords"]
        assert y_re == pytest.approx(w_re) and y_im == pytest.approx(w_im)
        assert y_re**2 == pytest.approx(2.0)
        assert record["class"] == "node"


def test_fiber_degree_limit(capsys):
    code, _, err = run(capsys, "fiber", "t^7 - 1")
    assert code == EXIT_USAGE
    assert "degree" in err


def test_verify_local_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "local", "--profile", "quick", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert payload["passed"] == len(payload["checks"]) == 4
    assert {c["status"] for c in payload["checks"]} == {"pass"}


def statuses(payload):
    return {
        "checks": [{"id": c["id"], "status": c["status"]} for c in payload["checks"]],
        "passed": payload["passed"],
        "failed": payload["failed"],
        "errors": payload["errors"],
    }


def test_verify_friedman_matches_golden(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "friedman", "--json")
    assert code == EXIT_OK
    assert json.loads(out) == golden("verify_friedman.json")


@pytest.mark.parametrize(
    "argv, name",
    [
        (["verify", "--suite", "C", "--json"], "verify_c_statuses.json"),
        (["verify", "--suite", "all", "--json"], "verify_all_statuses.json"),
    ],
)
def test_verify_statuses_match_golden(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert statuses(json.loads(out)) == golden(name)


def test_verify_blowup_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "blowup", "--profile", "quick", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert (payload["passed"], payload["failed"], payload["errors"]) == (8, 0, 0)
    node = next(c for c in payload["checks"] if c["id"] == "blowup/intermediate-node")
    assert "Hessian rank 4" in node["details"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "D"],
        ["verify", "--suite", "local", "--profile", "fast"],
        ["verify", "--suite", "local", "--jobs", "0"],
    ],
)
def test_bad_verify_options(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.startswith("cuspworks: ")


def test_suites_listing(capsys):
    code, out, _ = run(capsys, "suites", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [s["id"] for s in payload["suites"]] == [
        "local", "S", "C", "fa", "blowup", "friedman", "all"
    ]
    assert [p["id"] for p in payload["profiles"]] == ["default", "quick", "thorough"]


@pytest.mark.parametrize("argv", [[], ["singular", "--mode", "fast"], ["tjurina"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "usage: cuspworks" in err


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out
