import io
import json

import pytest

from yesno_mastermind.bench import (CSV_FIELDS, BenchRow, bench_row, eval_k_rule, parse_n_range,
                                    rows_to_csv, rows_to_json_lines, run_bench,
                                    transcript_from_text, transcript_to_text)
from yesno_mastermind.cli import main
from yesno_mastermind.core import GameParams, HonestCodemaker, accounting_bound
from yesno_mastermind.solver_perm import solve

SECRET10 = "9,10,6,8,4,2,7,5,1,3"


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_parse_n_range_and_k_rule():
    assert parse_n_range("8") == [8]
    assert parse_n_range("4-7") == [4, 5, 6, 7]
    assert parse_n_range("8,16,32") == [8, 16, 32]
    with pytest.raises(ValueError):
        parse_n_range("x")
    assert [eval_k_rule(r, 8) for r in ("n", "2n", "n+8", "2*n+1", "30")] == [8, 16, 16, 17, 30]
    with pytest.raises(ValueError):
        eval_k_rule("n-1", 8)


def test_csv_header_and_exhaustive_row():
    rows = run_bench([5], "n", trials=0, seed=0, exhaustive=True)
    text = rows_to_csv(rows)
    header, line = text.splitlines()
    assert header == "n,k,trials,min_q,mean_q,max_q,bound_theorem,bound_accounting,lower_bound"
    assert header.split(",") == CSV_FIELDS
    row = rows[0]
    assert row.trials == 120
    assert row.lower_bound <= row.max_q <= row.bound_accounting == accounting_bound(GameParams(5, 5))


def test_small_n_has_no_theorem_value():
    row = bench_row(GameParams(3, 3), exhaustive=True)
    assert row.csv_values()[6] == ""


def test_json_lines():
    rows = run_bench([4, 6], "2n", trials=5, seed=1)
    lines = rows_to_json_lines(rows).splitlines()
    assert [json.loads(s)["k"] for s in lines] == [8, 12]


def test_bench_is_deterministic():
    a = rows_to_csv(run_bench([8, 16], "n", trials=30, seed=11))
    b = rows_to_csv(run_bench([8, 16], "n", trials=30, seed=11))
    assert a == b


def test_warnings_flag_excess():
    row = BenchRow(8, 8, 1, 40, 40.0, 40, 34.0, 48, 15.3)
    assert any("theorem" in w for w in row.warnings())
    assert not any("accounting" in w for w in row.warnings())


def test_transcript_roundtrip():
    p = GameParams(10, 10)
    y = tuple(int(c) for c in SECRET10.split(","))
    out, transcript = solve(HonestCodemaker(y), p)
    text = transcript_to_text(transcript, p, out)
    p2, t2, secret = transcript_from_text(text)
    assert p2 == p and secret == y
    assert [(r.code, r.answer, r.purpose) for r in t2] == [(r.code, r.answer, r.purpose)
                                                           for r in transcript]
    assert len(text.splitlines()) == len(transcript) + 6


def test_cli_solve(tmp_path):
    path = tmp_path / "t.json"
    code, out = run(["solve", "--n", "10", "--k", "10", "--secret", SECRET10, "--out", str(path)])
    assert code == 0
    assert f"found:  {SECRET10}" in out
    assert json.loads(path.read_text())["result"]["secret"] == SECRET10
    code, out = run(["solve", "--n", "4", "--secret", "1,2,3,4"])
    assert code == 0 and "found:  1,2,3,4" in out


def test_cli_solve_seed_deterministic(tmp_path):
    texts = []
    for name in ("a", "b"):
        path = tmp_path / name
        assert run(["solve", "--n", "3", "--k", "5", "--seed", "7", "--out", str(path)])[0] == 0
        texts.append(path.read_bytes())
    assert texts[0] == texts[1]


def test_cli_bench(tmp_path):
    path = tmp_path / "b.csv"
    code, _ = run(["bench", "--n", "4-5", "--k", "n", "--exhaustive", "--out", str(path)])
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0].split(",") == CSV_FIELDS and len(lines) == 3
    code, out = run(["bench", "--n", "8", "--k", "2n", "--trials", "3", "--format", "json-lines"])
    assert code == 0 and json.loads(out)["k"] == 16


def test_cli_adversary():
    code, out = run(["adversary", "--n", "4"])
    assert code == 0
    assert "forced minimum ceil(log2 |M0|): 5" in out
    assert "halving invariant: ok" in out
    assert "replay consistent set size: 1" in out
    assert run(["adversary", "--n", "2", "--solver", "greedy"])[0] == 0


@pytest.mark.parametrize("argv", [
    ["solve", "--n", "4", "--secret", "1,1,2,3"],
    ["solve", "--n", "4", "--k", "3", "--secret", "1,2,3"],
    ["solve", "--n", "4"],
    ["solve", "--n", "4", "--k", "5", "--solver", "perm", "--seed", "1"],
    ["solve", "--n", "4", "--k", "4", "--solver", "general", "--seed", "1"],
    ["solve", "--n", "4", "--k", "x", "--seed", "1"],
    ["bench", "--n", "a-b"],
    ["bench", "--n", "8", "--k", "n-2"],
])
def test_cli_usage_errors(argv):
    assert run(argv)[0] == 2


def test_cli_argparse_error_is_usage():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_budget_exceeded():
    assert run(["adversary", "--n", "12"])[0] == 3


def honest_answers(secret):
    p = GameParams(len(secret), len(secret))
    _, transcript = solve(HonestCodemaker(secret), p)
    return "".join("y\n" if r.answer else "n\n" for r in transcript)


def test_cli_play_honest(monkeypatch):
    secret = (3, 1, 4, 2, 5)
    code, out = run(["play", "--n", "5"], stdin=honest_answers(secret), monkeypatch=monkeypatch)
    assert code == 0
    assert "your secret is 3,1,4,2,5" in out


def test_cli_play_reprompts_on_garbage(monkeypatch):
    secret = (2, 1, 3)
    answers = "maybe\n" + honest_answers(secret)
    code, out = run(["play", "--n", "3"], stdin=answers, monkeypatch=monkeypatch)
    assert code == 0 and "please answer y or n" in out


def test_cli_play_cheat(monkeypatch):
    code, out = run(["play", "--n", "4"], stdin="n\n" * 40, monkeypatch=monkeypatch)
    assert code == 1 and "cheated" in out


def test_cli_play_eof(monkeypatch):
    code, out = run(["play", "--n", "6"], stdin="y\n", monkeypatch=monkeypatch)
    assert code == 1 and "aborted" in out


def test_cli_verify():
    code, out = run(["verify"])
    assert code == 0 and "all checks passed" in out
    assert "FAIL" not in out
