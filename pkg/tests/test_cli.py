import csv
import io
import json

import pytest

from cherednik.cli import EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv", [
    ["build", "--p", "4", "--t", "1", "--c", "0", "--tau", "triv"],
    ["build", "--p", "5", "--t", "1", "--c", "7", "--tau", "triv"],
    ["build", "--p", "5", "--t", "1", "--c", "zero", "--tau", "nope"],
    ["build", "--p", "3", "--t", "1", "--c", "0", "--tau", "stand"],
    ["build", "--p", "5", "--t", "2", "--c", "0", "--tau", "triv"],
    ["build", "--p", "5", "--t", "1", "--c", "0", "--tau", "triv", "--bound", "0"],
    ["verify-tables", "--which", "generic"],
    ["verify-tables", "--which", "special", "--p", "9"],
    ["verify-tables", "--which", "p2", "--jobs", "0"],
    ["check-assumption"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as e:
        code = main(argv)
        raise SystemExit(code)
    assert e.value.code == EXIT_USAGE


def test_build_json(capsys):
    code, out, err = run(["build", "--p", "2", "--t", "1", "--c", "0", "--tau", "triv"], capsys)
    assert code == EXIT_OK
    (rec,) = json.loads(out)
    assert rec["status"] == "terminated" and rec["expected"]["match"]
    assert rec["field"] and "match" in err


def test_build_generic_stand(capsys):
    code, out, _ = run(["build", "--p", "5", "--t", "1", "--c", "generic", "--tau", "stand"], capsys)
    (rec,) = json.loads(out)
    assert code == EXIT_OK and rec["expected"]["match"]
    assert rec["dimension"] == 6 * 25
    assert [g["degree"] for g in rec["generators"]] == [5, 15]


def test_build_conjectural_tag(capsys):
    code, out, err = run(["build", "--p", "13", "--t", "1", "--c", "5", "--tau", "stand"], capsys)
    (rec,) = json.loads(out)
    assert rec["expected"]["conjectural"] and "conjectural" in err
    assert code == EXIT_OK


def test_unterminated_exit(capsys):
    code, out, _ = run(["build", "--p", "5", "--t", "1", "--c", "generic", "--tau", "triv",
                        "--bound", "3"], capsys)
    assert code == 2 and json.loads(out)[0]["status"] == "unterminated"


def test_p3_csv(capsys):
    code, out, _ = run(["verify-tables", "--which", "p3", "--format", "csv"], capsys)
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 16
    row = [r for r in rows if (r["t"], r["c"], r["tau"]) == ("1", "1", "Triv")][0]
    assert row["hilbert"] == "1,2,3,2,1"


def test_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-tables", "--which", "p2", "--out", str(a)]) == EXIT_OK
    assert main(["verify-tables", "--which", "p2", "--out", str(b), "--jobs", "2"]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert len(json.loads(a.read_text())) == 10


def test_assumption(capsys):
    code, out, _ = run(["check-assumption", "--p-max", "8"], capsys)
    recs = json.loads(out)
    assert code == EXIT_OK
    assert [(r["p"], r["c"], r["branch"]) for r in recs] == [(5, 1, 3), (7, 1, 1), (7, 2, 2)]
    code, out, _ = run(["check-assumption", "--p-max", "4", "--format", "csv"], capsys)
    assert code == EXIT_OK and out.strip() == "p,c,branch,value,holds,note"
    code, out, _ = run(["check-assumption", "--p-max", "4"], capsys)
    assert json.loads(out) == []


def test_check_conjecture(capsys):
    code, out, err = run(["check-conjecture", "--p", "7"], capsys)
    recs = json.loads(out)
    assert recs and all(r["expected"]["conjectural"] and r["expected"]["match"] for r in recs)
    assert code == EXIT_OK
