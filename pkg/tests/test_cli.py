import csv
import io
import json
import subprocess
import sys

import pytest

from taxicab5.cli import QUAD_COLUMNS, main
from taxicab5.gaussint import GaussInt
from taxicab5.quadruple import Quadruple
from taxicab5.search import make_class


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pell_family_pretty(capsys):
    code, out, _ = run(capsys, "pell-family", "--count", "1")
    assert code == 0
    assert out == "3^5 + 1^5 = (2+3i)^5 + (2-3i)^5  OK\n"


def test_pell_family_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "pell-family", "--count", "5")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["k"] for r in recs] == [1, 2, 3, 4, 5]
    assert all(r["verified"] for r in recs)
    assert recs[4]["y"] == {"re": "2378", "im": "3363"}


def test_pell_family_csv(capsys):
    code, out, _ = run(capsys, "pell-family", "--count", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == QUAD_COLUMNS
    assert rows[1] == ["3", "0", "1", "0", "2", "3", "2", "-3", "244", "0", "true"]
    assert len(rows) == 2


def test_triple_family(capsys):
    code, out, _ = run(capsys, "triple-family", "--max-c", "5")
    assert code == 0
    assert out == "(4,3,5): (7+5i)^5 + (1-5i)^5 = (7-5i)^5 + (1+5i)^5  OK\n"
    code, out, _ = run(capsys, "triple-family", "--max-c", "4")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "--format", "json", "triple-family", "--max-c", "17")
    assert [json.loads(line)["triple"] for line in out.splitlines()] == \
        [[4, 3, 5], [12, 5, 13], [15, 8, 17]]


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--w", "3", "--x", "1", "--y", "2+3i", "--z", "2-3i")[0] == 0
    code, out, _ = run(capsys, "verify", "--w", "3", "--x", "1", "--y", "2+3i", "--z", "2-3i",
                       "--exponent", "4")
    assert code == 1
    assert "lhs = 82" in out
    code, _, err = run(capsys, "verify", "--w", "3", "--x", "1", "--y", "2+3j", "--z", "2-3i")
    assert code == 2
    assert "2+3j" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--w", "7+5i", "--x", "1-5i",
                       "--y", "7-5i", "--z", "1+5i")
    assert code == 0
    assert json.loads(out) == {"lhs": {"re": "-44192", "im": "0"},
                               "rhs": {"re": "-44192", "im": "0"}, "equal": True}


@pytest.mark.parametrize("abc,value", [
    ((4, 3, 5), "0"),
    ((1, 1, 1), "80i"),
    ((0, 0, 0), "0"),
    ((-3, 1, 2), "-2880i"),
])
def test_lemma(capsys, abc, value):
    code, out, _ = run(capsys, "lemma", "--a", str(abc[0]), "--b", str(abc[1]), "--c", str(abc[2]))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"lhs = {value}"
    assert lines[1].startswith(f"rhs = {value} ")
    assert lines[2] == "match"


def test_search_stream_and_summary(capsys):
    code, out, err = run(capsys, "search", "--bound", "3")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 86
    assert "classes=86" in err and "pairs=" in err and "seconds=" in err
    eq22 = make_class(Quadruple.of(3, 1, GaussInt(2, 3), GaussInt(2, -3)))
    assert eq22.to_record() in recs
    assert eq22.sum == GaussInt(0, -244)


def test_search_out_file(tmp_path, capsys):
    target = tmp_path / "res.jsonl"
    code, out, _ = run(capsys, "search", "--bound", "2", "--out", str(target))
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "search", "--bound", "2")
    assert target.read_text() == out


def test_search_io_failure(tmp_path, capsys):
    code, _, err = run(capsys, "search", "--bound", "1", "--out", str(tmp_path / "no" / "x.jsonl"))
    assert code == 3
    assert "cannot write" in err


def test_search_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "search", "--bound", "1")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == QUAD_COLUMNS + ["orbit_size"]
    assert len(rows) == 4


def test_usage_errors(capsys):
    for argv in (["pell-family"], ["pell-family", "--count", "0"], ["bogus"],
                 ["search", "--bound", "x"], ["--format", "xml", "lemma", "--a", "1", "--b", "1", "--c", "1"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_printed_values_round_trip(capsys):
    _, out, _ = run(capsys, "--format", "json", "search", "--bound", "2")
    _, out2, _ = run(capsys, "--format", "csv", "search", "--bound", "2")
    for line in out.splitlines():
        for k, v in json.loads(line).items():
            if k != "orbit_size":
                g = GaussInt.from_json(v)
                assert GaussInt.parse(str(g)) == g
    for row in list(csv.reader(io.StringIO(out2)))[1:]:
        for re_, im in zip(row[0:10:2], row[1:10:2]):
            g = GaussInt(int(re_), int(im))
            assert GaussInt.parse(str(g)) == g


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "taxicab5", "verify", "--w", "3", "--x", "1",
                          "--y", "2+3i", "--z", "2-3i"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.endswith("equal\n")
