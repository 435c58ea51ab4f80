import json

import pytest

from tribraid.main import EXIT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED, main
from tribraid.tables.golden import load_known_tables

CLI = ["--workers", "1"]


@pytest.mark.parametrize(
    "word, expected",
    [
        ("s1 s2 s1", "(1; ; )"),
        ("A", "(-1; 1,1; first=1)"),
        ("", "(0; ; )"),
    ],
)
def test_nf(capsys, word, expected):
    assert main([*CLI, "nf", word]) == EXIT_OK
    assert capsys.readouterr().out == expected + "\n"


def test_classify(capsys):
    assert main([*CLI, "classify", "aabbaabb"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "family: C4b" in out
    assert "summit_infimum: 0" in out


def test_classify_a_conjugate_of_delta(capsys):
    assert main([*CLI, "classify", "a b b"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "family: N(D)" in out
    assert "representative: (1; ; )" in out


def test_classify_rejects_non_positive_braids(capsys):
    """Errors go to stderr with exit status 2."""
    assert main([*CLI, "classify", "A"]) == EXIT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err


def test_bad_word_is_an_error(capsys):
    assert main([*CLI, "nf", "s4"]) == EXIT_ERROR
    assert "error:" in capsys.readouterr().err


def test_summit(capsys):
    assert main([*CLI, "summit", "abb"]) == EXIT_OK
    assert capsys.readouterr().out == "1\n"


def test_json_output(capsys):
    assert main([*CLI, "--format", "json", "nf", "D a"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["schema_version"]
    assert report["command"] == "nf"
    assert report["outputs"]["normal_form"] == "(1; 1; first=1)"


def test_shape(capsys):
    assert main([*CLI, "shape", "aaabb"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "X" in out
    assert "determined: columns <= 3 or rows 2..6" in out


def test_homology_of_the_trefoil(capsys):
    assert main([*CLI, "homology", "D a"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Z/2" in out
    assert "positive 3-braid check: compatible(C4, j_low=1)" in out


def test_homology_exports_pd(capsys, tmp_path):
    pd_file = tmp_path / "trefoil.pd"
    assert main([*CLI, "homology", "D a", "--export-pd", str(pd_file)]) == EXIT_OK
    first = capsys.readouterr().out
    assert main([*CLI, "homology", "--pd", str(pd_file)]) == EXIT_OK
    assert capsys.readouterr().out == first


def test_crossing_guard(capsys):
    assert main([*CLI, "--max-crossings", "3", "homology", "D a"]) == EXIT_ERROR
    assert "crossings" in capsys.readouterr().err


@pytest.mark.parametrize("word", ["D a", "aaabb"])
def test_verify(capsys, word):
    assert main([*CLI, "verify", word]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS shape-vs-oracle" in out
    assert "FAIL" not in out


def test_verify_fails_on_a_corrupted_known_table(capsys, tmp_path):
    entry = load_known_tables()["D s1"].model_dump(mode="json")
    for cell in entry["cells"]:
        if (cell["i"], cell["j"]) == (3, 7):
            cell["group"] = "Z/4"
    golden = tmp_path / "golden.json"
    golden.write_text(json.dumps({"schema_version": "1", "strands": 3, "tables": [entry]}))

    assert main([*CLI, "verify", "D a", "--golden", str(golden)]) == EXIT_VERIFICATION_FAILED
    assert "FAIL oracle-vs-known[D s1]: (3,7) expected Z/4 found Z/2" in capsys.readouterr().out


def test_rational_alt(capsys):
    assert main([*CLI, "rational", "alt", "3,2,2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("code: 2,-2,1\n")


def test_rational_check(capsys):
    assert main([*CLI, "rational", "check", "2,2", "--homology"]) == EXIT_OK
    out = capsys.readouterr().out
    for name in ("alternating", "a-adequate", "bookkeeping", "homology"):
        assert f"PASS {name}" in out


def test_rational_t_needs_an_index(capsys):
    assert main([*CLI, "rational", "t", "2,-1,1,1,3"]) == EXIT_ERROR
    assert main([*CLI, "rational", "t", "2,-1,1,1,3", "--index", "2"]) == EXIT_OK
    assert "code: 3,1,2" in capsys.readouterr().out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    assert main([*CLI, "--output", str(target), "summit", "D D a"]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text() == "2\n"


def test_bench(capsys):
    args = ["--seed", "1", "bench", "--lengths", "500", "1000", "--trials", "2"]
    assert main([*CLI, *args]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("|")[0].strip() == "length"
    assert len(lines) == 4
    assert "scaling exponent" in lines[-1]
