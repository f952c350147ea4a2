import io
import json
from importlib import resources

import pytest

from ducci.cli import main
from ducci.report import (
    TableRow,
    compute_table,
    load_golden,
    read_rows_csv,
    rows_from_json,
    rows_to_csv,
    rows_to_json,
)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_period_text():
    code, text = run("period", "11")
    assert code == 0
    assert "period=341" in text and "t=10" in text


def test_period_json():
    code, text = run("period", "8", "--format", "json")
    assert code == 0
    assert json.loads(text)["period"] == 1


def test_period_invalid_exits_2():
    with pytest.raises(SystemExit) as exc:
        run("period", "0")
    assert exc.value.code == 2


def test_partitions_best():
    code, text = run("partitions", "109", "--best", "--format", "json")
    assert code == 0
    assert json.loads(text) == {"n": 109, "a": 3, "partition_count": 178}


def test_partitions_not_coprime_exits_2():
    code, _ = run("partitions", "9", "--a", "3")
    assert code == 2


def test_simulate():
    code, text = run("simulate", "0", "0", "1", "--format", "json")
    assert json.loads(text) == {"preperiod": 1, "period": 3}
    code, text = run("simulate", "--start-n", "5", "--format", "json")
    assert json.loads(text)["period"] == 15


def test_simulate_budget_exits_1():
    code, _ = run("simulate", "--start-n", "29", "--max-steps", "100")
    assert code == 1


def test_bounds():
    code, text = run("bounds", "9", "--format", "json")
    assert json.loads(text) == {"n": 9, "b1": 63, "b2": 63, "with_minus_one": True}
    code, text = run("bounds", "19", "--corollary", "--format", "json")
    assert json.loads(text)["explicit_bound_holds"] is True


def test_table_blocks():
    code, text = run("table", "--max", "101", "--format", "csv")
    rows = read_rows_csv(text)
    n31 = [r.partition_count for r in rows if r.n == 31]
    assert n31 == [5, 2, 1, 1, 1, 1]
    (r83,) = [r for r in rows if r.n == 83]
    assert (r83.period, r83.t, r83.partition_count) == (182518930210733, 82, 911361)
    assert [r.partition_count for r in rows if r.n == 89 and r.a == 5] == [3]


def test_csv_layout():
    text = rows_to_csv(compute_table(9))
    assert text.splitlines()[0] == "n,period,t,a,partition_count"
    assert "\r" not in text
    assert text.endswith("\n")


def test_json_round_trip():
    rows = compute_table(101)
    assert rows_from_json(rows_to_json(rows)) == rows
    assert read_rows_csv(rows_to_csv(rows)) == rows


def test_golden_corpus_shape():
    rows = load_golden()
    assert len(rows) == 122
    assert rows[-1] == TableRow(101, 37905296863701641, 100, 1, 4827382)


def test_verify_small():
    code, text = run("verify", "--max", "7")
    assert code == 0
    assert text.count("[PASS]") == 9
    assert "9/9 checks passed" in text


def test_verify_corrupted_golden(tmp_path):
    text = resources.files("ducci").joinpath("data", "table1.csv").read_text()
    bad = tmp_path / "bad.csv"
    bad.write_text(text.replace("5,15,4,1,5", "5,15,4,1,6"))
    code, report = run("verify", "--max", "7", "--golden", str(bad))
    assert code == 1
    assert "[FAIL] golden_table" in report
    assert "n=5 a=1 partition_count: golden 6 != computed 5" in report


def test_verify_oeis_bfile(tmp_path):
    # P(1..12), from the published odd values and P(2^k m) = 2^k P(m)
    bfile = tmp_path / "b038553.txt"
    bfile.write_text("# A038553\n" + "".join(f"{i} {v}\n" for i, v in enumerate(
        [1, 1, 3, 1, 15, 6, 7, 1, 63, 30, 341, 12], start=1)))
    code, report = run("verify", "--max", "11", "--oeis", str(bfile))
    assert code == 0
    assert "[PASS] oeis_bfile (11 cases)" in report

    bfile.write_text("10 31\n")
    code, report = run("verify", "--max", "11", "--oeis", str(bfile))
    assert code == 1
    assert "n=10: computed 30 != b-file 31" in report


def test_threads_do_not_change_output():
    _, one = run("table", "--max", "41", "--format", "csv")
    _, many = run("table", "--max", "41", "--format", "csv", "--threads", "3", "--seed", "17")
    assert one == many
