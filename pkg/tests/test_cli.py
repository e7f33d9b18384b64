"""End-to-end CLI behavior through main(argv): payloads, CSV, exit codes."""

import csv
import io
import json
from fractions import Fraction

import pytest

from burnkit.cli import fmt_ratio, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_fmt_ratio():
    assert fmt_ratio(Fraction(7, 6)) == "1.1667"
    assert fmt_ratio(Fraction(3, 2)) == "1.5"
    assert fmt_ratio(Fraction(5, 4)) == "1.25"
    assert fmt_ratio(Fraction(6, 5)) == "1.2"
    assert fmt_ratio(Fraction(1)) == "1.0"
    assert fmt_ratio(Fraction(2)) == "2.0"
    assert fmt_ratio(Fraction(1, 3)) == "0.3333"
    assert fmt_ratio(Fraction(2, 3)) == "0.6667"
    assert fmt_ratio(Fraction(1, 20000)) == "0.0001"


def test_burn_pf_payload(capsys):
    payload = run_json(capsys, "burn", "pf", "13", "11", "11")
    assert payload["kind"] == "pf"
    assert payload["orders"] == [13, 11, 11]
    assert payload["n"] == 35
    assert payload["budget"] == 7
    assert payload["rounds"] == 7
    assert payload["completion"] == 7
    assert payload["cover"][0] == ["0:7", 5]
    assert payload["schedule"][0] == "0:7"
    assert len(payload["schedule"]) == 7


def test_burn_path_payload(capsys):
    payload = run_json(capsys, "burn", "path", "16")
    assert payload["order"] == 16
    assert payload["budget"] == 4
    assert payload["schedule"] == ["0:3", "0:9", "0:13", "0:15"]
    assert payload["completion"] == 4


def test_burn_spider_payload(capsys):
    payload = run_json(capsys, "burn", "spider", "5", "5", "5")
    assert payload["arms"] == [5, 5, 5]
    assert payload["n"] == 16
    assert payload["budget"] == 4
    assert payload["rounds"] == 4


def test_exact_pf_payload(capsys):
    payload = run_json(capsys, "exact", "pf", "13", "11", "11")
    assert payload["burning_number"] == 6
    assert sorted((r for _, r in payload["cover"]), reverse=True) == [5, 4, 3, 2, 1, 0]
    assert payload["rounds"] <= 6


def test_exact_spider_payload(capsys):
    payload = run_json(capsys, "exact", "spider", "8", "8", "8")
    assert payload["burning_number"] == 5
    assert payload["rounds"] == 5


def test_exact_graph_from_file(capsys, tmp_path):
    target = tmp_path / "g.txt"
    target.write_text("# a four-path and a loner\na b\nb c\nc d  # chain\ne\n")
    payload = run_json(capsys, "exact", "graph", str(target))
    assert payload["n"] == 5
    assert payload["burning_number"] == 3


def test_graph_file_dedups_edges(capsys, tmp_path):
    target = tmp_path / "dup.txt"
    target.write_text("a b\nb a\na b\n")
    payload = run_json(capsys, "exact", "graph", str(target))
    assert payload["n"] == 2
    assert payload["burning_number"] == 2


def test_graph_file_errors(capsys, tmp_path):
    loop = tmp_path / "loop.txt"
    loop.write_text("x x\n")
    code, _, err = run(capsys, "exact", "graph", str(loop))
    assert code == 2 and "self loop" in err

    wide = tmp_path / "wide.txt"
    wide.write_text("a b c\n")
    code, _, err = run(capsys, "exact", "graph", str(wide))
    assert code == 2 and "2 tokens" not in err  # message counts the tokens seen
    assert "3 tokens" in err

    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    code, _, err = run(capsys, "exact", "graph", str(empty))
    assert code == 2 and "no vertices" in err

    code, _, err = run(capsys, "exact", "graph", str(tmp_path / "absent.txt"))
    assert code == 2 and "cannot read" in err


def test_verify_accepts_a_good_schedule(capsys):
    payload = run_json(capsys, "verify", "pf", "4", "--schedule", "0:1,0:3")
    assert payload["verified"] is True
    assert payload["completion"] == 2
    assert payload["rounds"] == 2


def test_verify_rejects_a_bad_schedule(capsys):
    code, out, _ = run(capsys, "verify", "pf", "4", "--schedule", "0:0")
    assert code == 1
    payload = json.loads(out)
    assert payload["verified"] is False
    assert payload["completion"] == 4


def test_verify_reports_unburned_as_null(capsys):
    code, out, _ = run(capsys, "verify", "pf", "3", "2", "--schedule", "0:1")
    assert code == 1
    assert json.loads(out)["completion"] is None


def test_verify_with_explicit_rounds(capsys):
    payload = run_json(
        capsys, "verify", "pf", "4", "--schedule", "0:0", "--rounds", "4"
    )
    assert payload["verified"] is True


def test_verify_graph_kind(capsys, tmp_path):
    target = tmp_path / "p4.txt"
    target.write_text("a b\nb c\nc d\n")
    payload = run_json(capsys, "verify", "graph", str(target), "--schedule", "b,d")
    assert payload["verified"] is True


def test_verify_duplicate_sources_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "pf", "4", "--schedule", "0:1,0:1")
    assert code == 2 and "distinct" in err


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,lower,ub_floor,ub_sqrt,ratio"
    assert lines[1] == "1,4,7,4,1.0"
    assert lines[3] == "3,4,5,5,1.25"
    assert lines[5] == "5,5,6,,1.2"
    assert len(lines) == 13


def test_bounds_rejects_nonpositive(capsys):
    code, _, err = run(capsys, "bounds", "0")
    assert code == 2 and "at least 1" in err


def test_bench_output_shape(capsys):
    code, out, _ = run(capsys, "bench", "--random", "25", "7", "--max-n", "40")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["instance", "n", "t", "lower", "exact", "greedy_T", "ratio", "micros"]
    assert len(rows) == 26
    last_key = None
    for instance, n, t, lower, exact, greedy_t, ratio, micros in rows[1:]:
        orders = [int(x) for x in instance.split(",")]
        assert sum(orders) == int(n) <= 40
        assert len(orders) == int(t)
        assert int(lower) <= int(exact) <= int(greedy_t)
        assert 2 * int(greedy_t) <= 3 * int(exact)
        assert 1.0 <= float(ratio) <= 1.5
        assert micros == ""
        key = (int(n), int(t), orders)
        assert last_key is None or last_key <= key
        last_key = key


def test_bench_is_byte_stable(capsys):
    _, first, _ = run(capsys, "bench", "--random", "40", "11")
    _, second, _ = run(capsys, "bench", "--random", "40", "11")
    assert first == second


def test_bench_time_flag_fills_micros(capsys):
    _, out, _ = run(capsys, "bench", "--random", "5", "3", "--time")
    rows = list(csv.reader(io.StringIO(out)))
    assert all(r[-1].isdigit() for r in rows[1:])


def test_gen_pf_round_trip(capsys):
    code, out, _ = run(capsys, "gen", "pf", "30", "--seed", "5")
    assert code == 0
    toks = out.split()
    assert toks[0] == "pf"
    orders = [int(x) for x in toks[1:]]
    assert sum(orders) == 30
    payload = run_json(capsys, "burn", *toks)
    assert payload["n"] == 30

    _, again, _ = run(capsys, "gen", "pf", "30", "--seed", "5")
    assert again == out


def test_gen_pf_respects_parts(capsys):
    _, out, _ = run(capsys, "gen", "pf", "10", "--seed", "1", "--parts", "3")
    assert len(out.split()) == 4


def test_gen_spider_round_trip(capsys):
    code, out, _ = run(capsys, "gen", "spider", "20", "--seed", "9")
    assert code == 0
    toks = out.split()
    assert toks[0] == "spider"
    arms = [int(x) for x in toks[1:]]
    assert len(arms) >= 3
    assert sum(arms) == 19
    payload = run_json(capsys, "burn", *toks)
    assert payload["n"] == 20


def test_size_guard_exit_code(capsys):
    code, _, err = run(capsys, "exact", "pf", "401")
    assert code == 3
    assert err.startswith("burnkit:")
    code, _, _ = run(capsys, "exact", "spider", "14", "14", "13")
    assert code == 3


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "burn", "pf", "x")[0] == 2
    assert run(capsys, "burn", "pf", "0")[0] == 2
    assert run(capsys, "burn", "spider", "2", "2")[0] == 2
    assert run(capsys, "burn", "graph", "whatever")[0] == 2
    assert run(capsys, "burn", "path", "4", "5")[0] == 2
    assert run(capsys, "bench", "--random", "0", "1")[0] == 2
