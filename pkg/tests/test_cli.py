from __future__ import annotations

import json
import subprocess
import sys

import pytest

from primecomplex.cli import main
from primecomplex.fileio import PACKAGE_FIXTURES, load_spectrum, save_complex
from primecomplex.groups import psl2_complex
from primecomplex.oracle import matrix_group_spectrum, sn_spectrum


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_documented_examples(capsys):
    assert run(capsys, "purity", "Sym(9)") == (0, "pure (all maximal simplices size 2)\n", "")
    assert run(capsys, "compare", "fixture:Fi22", "fixture:Suz.2")[:2] == (0, "equal\n")
    code, out, _ = run(capsys, "complex", "PSL2(4)", "--format", "text")
    assert code == 0 and out == "vertices {2,3,5}\nmaximal {2},{3},{5}\n"


def test_complex_formats(capsys):
    _, out, _ = run(capsys, "complex", "PSL2(173)", "--format", "json")
    assert json.loads(out) == {"vertices": [2, 3, 29, 43, 173], "maximal": [[2, 43], [3, 29], [173]]}
    _, out, _ = run(capsys, "complex", "PSL2(173)", "--format", "dot")
    assert "  2 -- 43;\n  3 -- 29;\n}" in out
    _, out, _ = run(capsys, "complex", "PSL2(173)*PSL2(283)", "--format", "json")
    assert len(json.loads(out)["maximal"]) == 9


def test_impure_and_ree_reports(capsys):
    _, out, _ = run(capsys, "purity", "PSL3(169)")
    assert out == "impure (maximal simplex sizes 2..4; witness {2,3,7} vs {2,5,7,17})\n"
    code, out, _ = run(capsys, "purity", "2G2(1)")
    assert code == 0 and out.startswith("impure (witness {")


def test_compare_reports_differences(capsys, tmp_path):
    code, out, _ = run(capsys, "compare", "fixture:HN", "fixture:HN.2")
    assert code == 0 and out.splitlines()[0] == "different"
    assert "only in fixture:HN.2: {2,3,7}" in out
    p = tmp_path / "c.json"
    save_complex(p, psl2_complex(173))
    assert run(capsys, "compare", str(p), "PSL2(173)")[1] == "equal\n"
    spectrum = PACKAGE_FIXTURES / "J2.json"
    assert run(capsys, "compare", str(spectrum), "fixture:Sp6(2)")[1] == "equal\n"


@pytest.mark.parametrize("fmt", ["text", "markdown", "csv", "json"])
def test_scan_formats(capsys, fmt):
    code, out, _ = run(capsys, "scan", "Sym", "1..12", "--format", fmt)
    assert code == 0
    if fmt == "json":
        rows = json.loads(out)
        assert [r["param"] for r in rows if r["pure"]] == [1, 2, 3, 4, 9]
    elif fmt == "csv":
        lines = out.splitlines()
        assert lines[0] == "param,pure,max_size,min_maximal_size,witness" and len(lines) == 13
    elif fmt == "markdown":
        assert out.startswith("| param | pure |")
    else:
        assert out.splitlines()[0].split() == ["param", "pure", "max_size", "min_maximal_size", "witness"]


def test_screen_and_tables(capsys):
    code, out, _ = run(capsys, "screen", "--allowed", "2,3,29,43,47,71,173,283", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 29
    assert "2,29,28,True" in lines and "173,43,1,False" in lines
    code, out, _ = run(capsys, "tables", "sporadic", "--format", "csv", "--fixtures", str(PACKAGE_FIXTURES))
    assert code == 0 and "Co3,3,1" in out.splitlines()


def test_oracle_subcommands(capsys, tmp_path):
    code, out, _ = run(capsys, "oracle", "sn", "9")
    assert code == 0 and json.loads(out)["orders"] == sorted(sn_spectrum(9))
    target = tmp_path / "l32.json"
    assert run(capsys, "oracle", "matrix", "--n", "3", "--q", "2", "--variant", "psl", "--output", str(target))[:2] == (0, "")
    s = load_spectrum(target)
    assert s.name == "PSL(3,2)" and set(s.orders) == matrix_group_spectrum(3, 2, "psl")


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["nt", "factor", "360"], "2^3 * 3^2 * 5\n"),
        (["nt", "isprime", "2147483647"], "true\n"),
        (["nt", "order", "2", "7"], "3\n"),
        (["nt", "ppd", "2", "6"], "{} exception=A2_N1_OR_6\n"),
        (["nt", "ppd", "3", "4"], "{5} exception=NONE\n"),
        (["nt", "cyclotomic", "6", "2"], "3\n"),
    ],
)
def test_nt(capsys, argv, expected):
    assert run(capsys, *argv)[:2] == (0, expected)


@pytest.mark.parametrize(
    "argv,code",
    [
        (["purity", "PSL2(6)"], 1),  # not a prime power
        (["complex", "fixture:Nope"], 1),
        (["complex", "2G2(1)"], 1),
        (["oracle", "sn", "40"], 1),
        (["oracle", "matrix", "--n", "2", "--q", "17"], 1),
        (["purity", "Foo(3)"], 2),
        (["purity", "Sym(3"], 2),
        (["scan", "Sym", "a..b"], 2),
        (["screen", "--allowed", "2,x"], 2),
        (["nt", "order", "2"], 2),
        (["nt", "factor", "abc"], 2),
        (["frobnicate"], 2),
        ([], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and err


def test_bad_json_file_is_usage_error(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ nope")
    code, _, err = run(capsys, "compare", str(p), "PSL2(4)")
    assert code == 2 and "bad.json:1:" in err


def test_console_output_is_byte_identical():
    argv = [sys.executable, "-m", "primecomplex.cli", "scan", "PSL2", "4..60", "--format", "csv"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"param,pure")
