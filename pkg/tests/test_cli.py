import json

import pytest

from stacksort.cli import main
from stacksort.machine import replay_trace, stack_pass_traced
from stacksort.perms import parse_perm


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_trace_plain(capsys):
    code, out, _ = run(capsys, "trace", "231", "2413")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "map[2 3 1](2 4 1 3) = 1 4 3 2"
    assert "push 2" in lines[1]
    assert len(lines) == 1 + 8 + 1  # header, eight events, result


def test_trace_single_element(capsys):
    code, out, _ = run(capsys, "trace", "21", "1")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("= 1")


def test_trace_json_round_trip(capsys):
    code, out, _ = run(capsys, "trace", "231", "2413", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["output"] == "1 4 3 2"
    perm = parse_perm(payload["input"])
    expected_out, trace = stack_pass_traced(parse_perm(payload["forbidden"]), perm)
    assert [{"op": e.op, "value": e.value} for e in trace] == payload["events"]
    assert parse_perm(payload["output"]) == expected_out == replay_trace(perm, trace)


def test_trace_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "trace", "231", "24a3")
    assert code == 2
    assert "error" in err


def test_count_sortable_plain(capsys):
    code, out, _ = run(capsys, "count", "sortable", "--sigma", "231", "--max-n", "6")
    assert code == 0
    assert out.strip() == "1 2 6 23 102 496"


def test_count_requires_sigma(capsys):
    code, _, err = run(capsys, "count", "sortable", "--max-n", "4")
    assert code == 2
    assert "--sigma" in err


def test_count_formats_round_trip(capsys):
    _, plain, _ = run(capsys, "count", "sorted", "--sigma", "312", "--max-n", "5")
    values = [int(tok) for tok in plain.split()]
    assert values == [1, 2, 4, 8, 17]

    _, csv_out, _ = run(
        capsys, "count", "sorted", "--sigma", "312", "--max-n", "5", "--format", "csv"
    )
    rows = [line.split(",") for line in csv_out.strip().splitlines()]
    assert [int(c) for _, c in rows] == values
    assert [int(n) for n, _ in rows] == list(range(1, 6))

    _, bfile, _ = run(
        capsys, "count", "sorted", "--sigma", "312", "--max-n", "5", "--format", "bfile"
    )
    brows = [line.split() for line in bfile.strip().splitlines()]
    assert [int(c) for _, c in brows] == values

    _, js, _ = run(
        capsys, "count", "sorted", "--sigma", "312", "--max-n", "5", "--format", "json"
    )
    payload = json.loads(js)
    assert [d["count"] for d in payload] == values
    assert [d["n"] for d in payload] == list(range(1, 6))


def test_count_anchored132_formula_and_brute(capsys):
    code, out, _ = run(capsys, "count", "anchored132", "--max-n", "6")
    assert code == 0
    assert out.strip() == "1 2 5 17 75 407"
    code, brute, _ = run(
        capsys, "count", "anchored132", "--max-n", "6", "--method", "brute"
    )
    assert code == 0
    assert brute == out


def test_guard_rail(capsys):
    code, _, err = run(capsys, "count", "sortable", "--sigma", "231", "--max-n", "12")
    assert code == 2
    assert "refusing" in err
    # formula path is exempt from the guard
    code, out, _ = run(capsys, "count", "anchored132", "--max-n", "14")
    assert code == 0
    assert len(out.split()) == 14


def test_threads_do_not_change_output(capsys):
    _, seq1, _ = run(capsys, "count", "sortable", "--sigma", "213", "--max-n", "5")
    _, seq2, _ = run(
        capsys, "--threads", "2", "count", "sortable", "--sigma", "213", "--max-n", "5"
    )
    assert seq1 == seq2


def test_classify_plain_non_tty_uses_letters(capsys):
    code, out, _ = run(capsys, "classify", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 6
    row_231 = next(line for line in lines if line.startswith("2 3 1"))
    assert row_231.split()[3:6] == ["N", "Y", "N"]
    assert "✓" not in out  # captured stream is not a terminal


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 24
    by_pattern = {r["pattern"]: r for r in rows}
    assert by_pattern["3 4 1 2"]["sortables_avoid_anchored_132"] is False
    assert by_pattern["3 2 1 4"]["is_class"] is True
    assert by_pattern["3 2 1 4"]["class_basis"] == ["1 3 2", "4 1 2 3"]


def test_classify_rejects_out_of_range_length(capsys):
    code, _, err = run(capsys, "classify", "2")
    assert code == 2
    assert "length" in err


def test_verify_small_run_exits_zero(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "theorems", "--max-sigma-len", "3", "--max-n", "6"
    )
    assert code == 0
    assert "summary:" in out
    assert " FAIL" not in out


def test_verify_inconclusive_witness_search_is_info_not_fail(capsys):
    # the 231 downset violation first appears at n = 6, so a shallower run
    # must report the search as inconclusive rather than failed
    code, out, _ = run(
        capsys, "verify", "--suite", "theorems", "--max-sigma-len", "3", "--max-n", "5"
    )
    assert code == 0
    assert "THM 2.2 | 2 3 1 | 5 | INFO" in out


def test_verify_conjectures_reports_findings(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "conjectures", "--max-n", "5")
    assert code == 0
    assert "FINDING" in out


def test_fertility_value_and_profile(capsys):
    code, out, _ = run(capsys, "fertility", "--sigma", "123", "--gamma", "213")
    assert code == 0
    assert out.strip() == "2"
    code, out, _ = run(capsys, "fertility", "--sigma", "123", "--n", "3", "--format", "json")
    assert code == 0
    profile = json.loads(out)
    assert profile == {"1 3 2": 1, "2 1 3": 2, "3 1 2": 1, "3 2 1": 1}


def test_fertility_argument_conflicts(capsys):
    code, _, err = run(capsys, "fertility", "--sigma", "123", "--gamma", "213", "--n", "3")
    assert code == 2
    assert "exactly one" in err
    code, _, _ = run(capsys, "fertility", "--sigma", "123")
    assert code == 2


def test_explore_prints_blocks(capsys):
    code, out, _ = run(capsys, "explore", "--max-n", "3")
    assert code == 0
    assert "convention: strict" in out
    assert "EQUIDISTRIBUTED: yes" in out


def test_explore_weak_convention_disagrees(capsys):
    code, out, _ = run(capsys, "explore", "--max-n", "3", "--minima-convention", "weak")
    assert code == 0
    assert "EQUIDISTRIBUTED: no" in out
    assert "first mismatch" in out


def test_plain_and_csv_agree_on_numbers(capsys):
    _, plain, _ = run(capsys, "count", "sortable", "--sigma", "321", "--max-n", "5")
    _, csv_out, _ = run(
        capsys, "count", "sortable", "--sigma", "321", "--max-n", "5", "--format", "csv"
    )
    plain_numbers = plain.split()
    csv_numbers = [line.split(",")[1] for line in csv_out.strip().splitlines()]
    assert plain_numbers == csv_numbers


def test_bad_usage_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["count", "sortable", "--sigma", "231"])  # missing --max-n
    assert exc.value.code == 2
