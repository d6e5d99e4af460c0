import json
from pathlib import Path

import pytest

from torustwist.cli import (main, parse_scan_csv, render_scan_csv,
                            render_scan_json, scan_rows)

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sigma_all_agrees(capsys):
    code, out, _ = run(capsys, "sigma", "-p", "5", "-q", "8", "--all")
    assert code == 0
    assert out.splitlines() == ["oracle: -20", "closed: -20", "seifert: -20"]


def test_sigma_trivial(capsys):
    code, out, _ = run(capsys, "sigma", "-p", "1", "-q", "5")
    assert code == 0 and out.strip() == "0"


def test_sigma_mirror(capsys):
    code, out, _ = run(capsys, "sigma", "-p", "5", "-q", "-2", "--all")
    assert code == 0
    assert all(line.endswith(" 4") for line in out.splitlines())


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "sigma", "-p", "4", "-q", "6")
    assert code == 2 and "coprime" in err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "-p", "5", "-q", "8")
    assert code == 0
    assert "verdict: NotInT" in out


def test_classify_golden_text(capsys):
    code, out, _ = run(capsys, "classify", "-p", "5", "-q", "7")
    assert code == 0
    assert out == (DATA / "t57_certificate.txt").read_text()


def test_classify_with_sequence(capsys):
    code, out, _ = run(capsys, "classify", "-p", "5", "-q", "8",
                       "--sequence", str(DATA / "t58_untwist.seq"))
    assert code == 0
    assert "sequence-ledger:" in out
    assert "sigma(M)=1" in out and "-w^2+42" in out


def test_classify_bad_sequence_exit(tmp_path, capsys):
    bad = tmp_path / "bad.seq"
    bad.write_text("start T(5,8)\ntwist n=-1 w=5 -> T(5,4)\nend unknot\n")
    code, _, err = run(capsys, "classify", "-p", "5", "-q", "8",
                       "--sequence", str(bad))
    assert code == 2 and "line 2" in err


def test_tables_thm13(capsys):
    code, out, _ = run(capsys, "tables", "--which", "thm1.3", "--n-max", "4",
                       "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    ps = sorted(int(r.split(",")[1]) for r in rows)
    assert ps == [9, 11, 17, 19, 25, 27, 33, 35]
    assert all(r.endswith("NotInT") for r in rows)


def test_tables_thm15_row(capsys):
    code, out, _ = run(capsys, "tables", "--which", "thm1.5", "--n-max", "1",
                       "--format", "csv")
    assert code == 0
    assert "r=4 n=1 p=2nr+1,9,13,NotInT" in out


def test_scan_json_roundtrip(capsys):
    code, out, _ = run(capsys, "scan", "--p-min", "2", "--p-max", "6",
                       "--q-min", "3", "--q-max", "9", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "torustwist-scan/1"
    again = render_scan_json(payload["rows"], payload["config"])
    assert again == out
    t58 = [r for r in payload["rows"] if (r["p"], r["q"]) == (5, 8)]
    assert t58 and t58[0]["verdict"] == "NotInT" and t58[0]["sigma"] == -20


def test_scan_csv_roundtrip():
    rows = scan_rows((2, 6), (3, 9))
    text = render_scan_csv(rows)
    assert render_scan_csv(parse_scan_csv(text)) == text


def test_scan_exceptional_only(capsys):
    code, out, _ = run(capsys, "scan", "--p-min", "2", "--p-max", "2",
                       "--q-min", "3", "--q-max", "15", "--format", "csv")
    assert code == 0
    body = out.strip().splitlines()[2:]
    assert body and all(",TrivialOrExceptional," in line for line in body)


def test_scan_empty_box(capsys):
    code, out, _ = run(capsys, "scan", "--p-min", "9", "--p-max", "9",
                       "--q-min", "3", "--q-max", "6", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[2:] == []


def test_scan_parallel_matches_serial():
    a = scan_rows((2, 9), (3, 12), jobs=1)
    b = scan_rows((2, 9), (3, 12), jobs=4)
    assert a == b
    assert render_scan_csv(a) == render_scan_csv(b)


def test_scan_golden_csv():
    rows = scan_rows((2, 6), (3, 9))
    assert render_scan_csv(rows) == (DATA / "scan_small.csv").read_text()
