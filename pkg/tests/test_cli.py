import json
import subprocess
import sys

import pytest

from permstat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "13287546")
    assert code == 0
    assert json.loads(out) == {"des": 4, "asc": 3, "inv": 9, "maj": 17, "stat": 19, "adj": 3, "F": 1}


def test_label(capsys):
    code, out, _ = run(capsys, "label", "--scheme", "maj", "13287546")
    assert out.strip() == "[5]1[6]3[4]2[7]8[3]7[2]5[1]4[8]6[0]"


def test_code_and_decode(capsys):
    assert run(capsys, "code", "--scheme", "stat", "52718346")[1].strip() == "01112216"
    assert run(capsys, "decode", "--scheme", "stat", "01112216")[1].strip() == "52718346"
    assert run(capsys, "code", "--scheme", "inv", "1,3,2,8,7,5,4,6,10,9")[1].strip() == "0010103401"


def test_apply_with_trace(capsys):
    code, out, _ = run(capsys, "apply", "--map", "rho", "--trace", "52718346")
    lines = out.splitlines()
    assert lines[0] == "56128473"
    assert lines[1].split("\t") == ["i", "s_i", "sigma^(i)"]
    assert lines[2].split("\t") == ["5", "2", "[3]5[2]1[4]2[5]4[1]3[0]"]
    assert lines[-1].split("\t")[:2] == ["8", "6"]
    assert run(capsys, "apply", "--map", "burstein", "543617982")[1].strip() == "537684921"
    code, out, _ = run(capsys, "apply", "--map", "carlitz", "--trace", "13287546")
    assert out.splitlines()[-1].split("\t")[:2] == ["8", "4"]


def test_count(capsys):
    assert run(capsys, "count", "b-ca", "4753162")[1].strip() == "4"
    assert run(capsys, "count", "^c-b-a$", "978452613")[1].strip() == "5"


def test_dist(capsys, tmp_path):
    assert run(capsys, "dist", "--stats", "des", "--n", "2", "--format", "csv")[1] == "des,count\n0,1\n1,1\n"
    target = tmp_path / "t.json"
    code, out, _ = run(capsys, "dist", "--stats", "des,stat", "--n", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert sum(r["count"] for r in json.loads(target.read_text())["rows"]) == 24


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--property", "involution", "--n", "5", "--jobs", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["cases_checked"] == 120 and doc["failures"] == []


def test_verify_failure_exit_code(capsys, monkeypatch):
    from permstat import harness

    broken = harness._Property("sn", lambda n, a, b: harness._Chunk(b - a, [{"perm": "21"}]), "always fails")
    monkeypatch.setitem(harness.PROPERTIES, "involution", broken)
    code, out, _ = run(capsys, "verify", "--property", "involution", "--n", "2")
    assert code == 1
    assert json.loads(out)["failures"] == [{"perm": "21"}]


@pytest.mark.parametrize(
    "argv",
    [
        ["stats", "1224"],
        ["count", "ba-b", "123"],
        ["decode", "--scheme", "maj", "0030"],
        ["dist", "--stats", "foo", "--n", "3"],
        ["dist", "--stats", "des", "--n", "10"],
        ["verify", "--property", "involution", "--n", "11"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["label", "--scheme", "xyz", "123"])
    assert exc.value.code == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "permstat", "apply", "--map", "rho", "543617982"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "539784621"
