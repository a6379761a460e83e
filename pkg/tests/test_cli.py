"""Command-line surface: exit codes, output texts, JSON round-trips."""

import json

import pytest

from rotbent.cli import main


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse-level usage failures
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_bent_check_affirmative(capsys):
    code, out, _ = run(["bent-check", "-n", "2", "x1x2"], capsys)
    assert code == 0
    assert out == "x1x2 on n=2: bent [walsh, valuation]\n"


def test_bent_check_negative(capsys):
    code, out, _ = run(["bent-check", "-n", "6", "x1x2x3+x1x2x4"], capsys)
    assert code == 1
    assert out == "x1x2x3+x1x2x4 on n=6: not bent [walsh, valuation]\n"


def test_bent_check_odd_n(capsys):
    code, out, _ = run(["bent-check", "-n", "7", "x1x2x3"], capsys)
    assert code == 1
    assert "not bent" in out


def test_bent_check_single_method(capsys):
    code, out, _ = run(["bent-check", "-n", "2", "x1x2", "--method", "walsh"], capsys)
    assert code == 0
    assert out.endswith("[walsh]\n")
    code, out, _ = run(
        ["bent-check", "-n", "2", "x1x2", "--method", "valuation"], capsys
    )
    assert code == 0
    assert out.endswith("[valuation]\n")


def test_bent_check_json(capsys):
    code, out, _ = run(
        ["bent-check", "-n", "6", "x1x2x3+x1x2x4", "--format", "json"], capsys
    )
    assert code == 1
    record = json.loads(out)
    assert record == {
        "n": 6,
        "sanf": "x1x2x3+x1x2x4",
        "bent": False,
        "methods": ["walsh", "valuation"],
    }


def test_parse_error_is_usage_error(capsys):
    code, _, err = run(["bent-check", "-n", "6", "garbage"], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_capacity_error_is_usage_error(capsys):
    # No feasible route at n=24: the Walsh cap and the coefficient caps
    # both refuse, and the command reports that instead of grinding.
    code, _, err = run(["bent-check", "-n", "24", "x1x2"], capsys)
    assert code == 2
    assert "error:" in err


def test_classify_text(capsys):
    code, out, _ = run(["classify-deg2", "-n", "8"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[0] == "x1x5"
    assert lines[-1] == "8 bent degree-2 functions on n=8"


def test_classify_odd_n(capsys):
    code, _, err = run(["classify-deg2", "-n", "7"], capsys)
    assert code == 2
    assert "even" in err


def test_spectrum(capsys):
    code, out, _ = run(["spectrum", "-n", "2", "x1x2"], capsys)
    assert code == 0
    assert out == "2 2 2 -2\n"


def test_hcoeff_single(capsys):
    code, out, _ = run(["hcoeff", "-n", "2", "x1x2", "--u", "11"], capsys)
    assert code == 0
    assert out == "value=-2 v2=1\n"
    code, out, _ = run(["hcoeff", "-n", "2", "x1x2", "--u", "00"], capsys)
    assert code == 0
    assert out == "value=1 v2=0\n"


def test_hcoeff_all_json(capsys):
    code, out, _ = run(
        ["hcoeff", "-n", "2", "x1x2", "--all-u", "--format", "json"], capsys
    )
    assert code == 0
    record = json.loads(out)
    assert len(record["values"]) == 4
    by_u = {row["u"]: row for row in record["values"]}
    assert by_u["11"] == {"u": "11", "value": -2, "v2": 1}
    assert by_u["10"] == {"u": "10", "value": 0, "v2": "inf"}
    assert by_u["00"]["value"] == 1


def test_nonexist_proved(capsys):
    code, out, _ = run(["nonexist", "-n", "8", "x1x2x3"], capsys)
    assert code == 0
    assert out.startswith("NOT_BENT rule=shift-chain")


def test_nonexist_unproved_prints_table(capsys):
    code, out, _ = run(["nonexist", "-n", "10", "x1x2x4"], capsys)
    assert code == 1
    lines = out.splitlines()
    assert len(lines) == 5
    assert all("INCONCLUSIVE" in line for line in lines)


def test_nonexist_compare_table(capsys):
    code, out, _ = run(["nonexist", "-n", "10", "x1x2x3+x1x2x4", "--compare"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    by_rule = {line.split()[0]: line for line in lines}
    assert "NOT_BENT" in by_rule["block-pair"]
    assert "INCONCLUSIVE" in by_rule["gap-bounds"]
    assert "evaluates 2 > 3, false" in by_rule["gap-bounds"]


def test_nonexist_single_rule(capsys):
    code, out, _ = run(
        ["nonexist", "-n", "8", "x1x2x3", "--rule", "gap-bounds"], capsys
    )
    assert code == 0
    assert out.startswith("NOT_BENT rule=gap-bounds(i)")


def test_nonexist_json(capsys):
    code, out, _ = run(["nonexist", "-n", "8", "x1x2x3", "--format", "json"], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["not_bent"] is True
    assert set(record["reports"]) == {
        "shift-chain",
        "leading-block",
        "block-pair",
        "sparse-triple",
        "gap-bounds",
    }
    assert record["reports"]["shift-chain"]["witness_u0"] == "11111100"


def test_search_text(capsys):
    code, out, _ = run(["search", "-n", "8", "-d", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "8 bent / 15 tested"
    assert "x1x5" in lines


def test_search_shard(capsys):
    # 127 candidates over 4 shards: the first range is [1, 32), so 31.
    code, out, _ = run(["search", "-n", "8", "-d", "3", "--shard", "0/4"], capsys)
    assert code == 0
    assert out.splitlines()[-1].endswith("/ 31 tested")


def test_search_out_file(tmp_path, capsys):
    path = tmp_path / "result.json"
    code, _, _ = run(["search", "-n", "8", "-d", "2", "--out", str(path)], capsys)
    assert code == 0
    record = json.loads(path.read_text())
    assert record["candidates_tested"] == 15
    assert len(record["bent"]) == 8


def test_search_budget_guidance(capsys):
    code, _, err = run(["search", "-n", "10", "-d", "4", "--budget", "1000"], capsys)
    assert code == 2
    assert "shards" in err


def test_search_threads_env(monkeypatch, capsys):
    plain = run(["search", "-n", "8", "-d", "2", "--format", "json"], capsys)
    monkeypatch.setenv("ROTBENT_THREADS", "2")
    threaded = run(["search", "-n", "8", "-d", "2", "--format", "json"], capsys)
    assert plain[0] == threaded[0] == 0
    a, b = json.loads(plain[1]), json.loads(threaded[1])
    assert a["bent"] == b["bent"]
    assert a["candidates_tested"] == b["candidates_tested"]


def test_unknown_command_is_usage_error(capsys):
    code, _, _ = run(["frobnicate"], capsys)
    assert code == 2
