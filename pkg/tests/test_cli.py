from __future__ import annotations

import io
import subprocess
import sys
from importlib import resources

import pytest

from termlogic.cli import main
from termlogic.corpus import catalog


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def golden(name):
    return resources.files("termlogic").joinpath("golden", name).read_text()


def script_path(group, stem):
    return str(resources.files("termlogic").joinpath("scripts", group, f"{stem}.proof"))


@pytest.mark.parametrize("system, name", [("LC", "matrix-lc.txt"), ("ML", "matrix-ml.txt")])
def test_matrix_matches_golden(system, name):
    code, out, _ = run("matrix", "--system", system)
    assert code == 0 and out == golden(name)


def test_corpus_matches_golden():
    code, out, _ = run("corpus")
    assert code == 0 and out == golden("corpus.txt")


def test_check_reports_usage_and_oracle():
    code, out, _ = run("check", script_path("lc", "barbara-1"))
    assert code == 0
    assert "usage: {LC2}" in out and "oracle: valid" in out


def test_check_failure_is_exit_one(tmp_path):
    text = (resources.files("termlogic").joinpath("scripts", "lc", "barbara-1.proof").read_text()
            .replace("at 0.0", "at 0.1"))
    f = tmp_path / "bad.proof"
    f.write_text(text)
    code, out, _ = run("check", str(f))
    assert code == 1 and "fail" in out and "oracle: not run" in out


def test_check_against_another_system_fails():
    code, out, _ = run("check", script_path("lc", "barbara-1"), "--system", "ML")
    assert code == 1 and "unknown schema" in out


def test_unknown_axiom_is_a_parse_stage_error(tmp_path):
    f = tmp_path / "x.proof"
    f.write_text("system LC\natoms b\nP1: b = b\nS2: b = b by axiom LC7 {b:=b}\n")
    code, out, err = run("check", str(f))
    assert code == 2 and out == "" and "line 4" in err and "unknown axiom" in err


@pytest.mark.parametrize("system", ["LC", "ML"])
def test_prove_output_checks(system, monkeypatch):
    for name in ("Barbari-1", "Fresison-4"):
        code, script, _ = run("prove", "--system", system, "--syllogism", name)
        assert code == 0
        code, out, _ = run("check", "-", stdin=script, monkeypatch=monkeypatch)
        assert code == 0, out


def test_prove_from_statements_and_not_found():
    code, out, _ = run("prove", "--system", "ML", "s <= m", "m <= p", "s <= p")
    assert code == 0 and "axiom ML4" in out
    code, out, _ = run("prove", "--system", "ML", "b # c", "c # c", "--depth", "6")
    assert code == 1 and "status: saturated" in out


def test_validate_darapti_without_existential_premise():
    code, out, _ = run("validate", "--system", "ML", "--syllogism", "Darapti-3", "--without-existential")
    assert code == 1
    assert "countermodel: all minterms empty" in out
    code, out, _ = run("validate", "--system", "LC", "--syllogism", "Darapti-3")
    assert code == 0 and "valid over all 256 models" in out


def test_validate_free_statements():
    code, out, _ = run("validate", "b <= c", "c <= d", "b <= d")
    assert code == 0
    code, out, _ = run("validate", "b <= c", "c <= b", "--atoms", "b c")
    assert code == 1 and "inhabited" in out


def test_translate_e_table2_row():
    code, out, _ = run("translate", "E", "table2")
    assert code == 0
    row = out.splitlines()[-1]
    assert "b <= c'" in row and "c <= b'" in row and "c' @ b'" in row
    assert out.isascii()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("translate", "A", "LC", "--atoms", "s p"), "s&p = s\n"),
        (("translate", "E", "LC"), "b&c' = b\n"),
        (("translate", "star", "ML"), "b # b\n"),
    ],
)
def test_translate_surface(argv, expected):
    assert run(*argv)[:2] == (0, expected)


def test_translate_tables():
    code, out, _ = run("translate", "Eum", "table1")
    assert code == 0 and "b|c = 1" in out
    code, out, _ = run("translate", "O", "nocomp", "--atoms", "s p")
    assert out == "s&p < s\ns|p > p\n"


def test_models_dump():
    code, out, _ = run("models", "--atoms", "b c")
    assert code == 0 and out.endswith("16 model(s)\n")
    code, out, _ = run("models", "b # b")
    assert out.endswith("2 model(s)\n")


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("bogus",),
        ("matrix",),
        ("matrix", "--system", "BL"),
        ("prove", "--system", "LC", "b &"),
        ("prove", "--system", "LC", "b = b", "--depth", "0"),
        ("prove", "--system", "BL", "--syllogism", "Barbara-1"),
        ("prove", "--system", "LC", "--syllogism", "Nope-1"),
        ("validate", "--syllogism", "Barbara-1", "b = b"),
        ("translate", "Q", "LC"),
        ("translate", "A", "XX"),
        ("translate", "Aum", "LC"),
        ("models",),
        ("models", "--atoms", "b b"),
        ("check", "/nonexistent/file.proof"),
    ],
)
def test_usage_errors_exit_two(argv):
    assert run(*argv)[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "termlogic", "translate", "I", "ML"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "b # c\n"


def test_every_catalog_name_is_accepted():
    for d in catalog():
        assert run("validate", "--system", "ML", "--syllogism", d.name.upper())[0] == 0
