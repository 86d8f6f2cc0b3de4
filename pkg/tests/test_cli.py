import csv
import io
import json
import subprocess
import sys

import pytest

from ydscreen.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_sl2_f4(capsys):
    code, out, _ = call(capsys, "classify", "--group", "sl2", "--q", "4")
    d = json.loads(out)
    assert code == 0
    assert all(c["survivors"] == [] for c in d["classes"])
    assert d["field"]["modulus"] == [1, 1, 1]


def test_not_a_prime_power(capsys):
    code, _, err = call(capsys, "classify", "--group", "sl2", "--q", "33")
    assert code == 2 and "--q" in err


@pytest.mark.parametrize("mod", ["1,0,1", "1,x", "1,1,1,1"])
def test_bad_modulus(capsys, mod):
    code, _, err = call(capsys, "classify", "--group", "sl2", "--q", "25", "--modulus", mod)
    assert code == 2 and "--modulus" in err


def test_usage_error(capsys):
    assert call(capsys, "classify", "--group", "psl2", "--q", "5")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2


def test_too_large(capsys):
    code, _, err = call(capsys, "tables", "--group", "gl2", "--q", "1024")
    assert code == 2


def test_tables_gl2_f3(capsys):
    code, out, _ = call(capsys, "tables", "--group", "gl2", "--q", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8
    assert {"tag", "representative", "size", "centralizer_order", "centralizer"} <= set(rows[0])


def test_classify_modulus_embedded(capsys):
    code, out, _ = call(capsys, "classify", "--group", "sl2", "--q", "25", "--modulus", "3,0,1")
    assert code == 0 and json.loads(out)["field"]["modulus"] == [3, 0, 1]


def test_classify_csv_and_text(capsys):
    code, out, _ = call(capsys, "classify", "--group", "gl2", "--q", "3", "--format", "csv")
    assert code == 0 and out.startswith("group,q,class")
    code, out, _ = call(capsys, "classify", "--group", "sl2", "--q", "3", "--format", "text")
    assert code == 0 and "tetrahedron-rack" in out and "resolved-by-citation" in out


def test_out_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["classify", "--group", "sl2", "--q", "7", "--out", str(a)]) == 0
    assert run(["classify", "--group", "sl2", "--q", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


def test_braiding(capsys):
    code, out, _ = call(capsys, "braiding", "--group", "sl2", "--q", "7", "--class", "C5", "--character", "1")
    d = json.loads(out)
    assert code == 0
    assert set(d["diagram"]) == {"vertices", "edges"}
    assert len(d["matrix"]) == len(d["clique"]) == len(d["diagram"]["vertices"])
    assert d["verdict"]["outcome"] in ("RULED_OUT", "CANDIDATE", "UNRESOLVED")


def test_braiding_bad_class(capsys):
    assert call(capsys, "braiding", "--group", "sl2", "--q", "5", "--class", "C9")[0] == 2
    assert call(capsys, "braiding", "--group", "sl2", "--q", "5", "--class", "C1")[0] == 2
    assert call(capsys, "braiding", "--group", "sl2", "--q", "5", "--class", "C5", "--character", "99")[0] == 2


def test_racks(capsys):
    code, out, _ = call(capsys, "racks", "--group", "sl2", "--q", "5")
    d = json.loads(out)
    matches = {c["class"]: c["named_matches"] for c in d["classes"]}
    assert code == 0
    assert matches["C3"] == ["dodecahedron_faces"]
    assert d["psl_projection"]["minus_one_is_square"] is True


def test_racks_gl2_rejected(capsys):
    assert call(capsys, "racks", "--group", "gl2", "--q", "5")[0] == 2


def test_check_lemmas(capsys):
    code, out, _ = call(capsys, "check-lemmas", "--max-n", "2000", "--max-p", "13")
    d = json.loads(out)
    assert code == 0 and d["passed"] and len(d["snl"]) == 5


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "ydscreen", "tables", "--group", "sl2", "--q", "2", "--format", "text"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and len(p.stdout.splitlines()) == 3
