from __future__ import annotations

import io
import json
from pathlib import Path

import jsonschema
import pytest

from propcat.cli.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, write_atomic
from propcat.instances.freeprop import DEFAULT_SIGNATURE, format_signature
from propcat.laws import LAW_REPORT_SCHEMA

INTRO = Path(__file__).resolve().parents[1] / "samples" / "intro.term"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def write(tmp_path, text, name="t.term"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_laws_zmod_pass():
    code, text = run("laws", "zmod", "--seed", "1", "--trials", "500")
    assert code == EXIT_OK
    assert text.strip() and "FAIL" not in text


def test_laws_json_schema_and_stability():
    code, first = run("laws", "zmod", "--seed", "3", "--trials", "50", "--json")
    assert code == EXIT_OK
    reports = json.loads(first)
    assert reports
    for r in reports:
        jsonschema.validate(r, LAW_REPORT_SCHEMA)
    assert run("laws", "zmod", "--seed", "3", "--trials", "50", "--json")[1] == first


def test_hom_finite():
    code, text = run("hom", "zmod", "4", "6")
    assert code == EXIT_OK
    assert text.splitlines() == ["hom(4, 6) in zmod: 2 arrows", "  z(0: 4 -> 6)", "  z(3: 4 -> 6)"]


def test_hom_objlist_means_content():
    assert run("hom", "zmod", "[4, 6]", "2")[1].startswith("hom(2, 2) in zmod: 2 arrows")


def test_hom_infinite_window():
    code, text = run("hom", "zmod", "0", "0")
    assert code == EXIT_OK and "infinite" in text
    assert len(text.splitlines()) == 1 + 11


def test_adapt_intro():
    code, text = run("adapt", str(INTRO))
    assert code == EXIT_OK
    assert text.strip() == "z(1: [] -> [2]) ; bur([2] -> [4, 6]) ; z(0: [4, 6] -> [])"


def test_eval_reports_adaptable_seam():
    code, text = run("eval", str(INTRO))
    assert code == EXIT_FAIL
    assert "adaptable: true" in text and "hint" in text


def test_eval_success(tmp_path):
    code, text = run("eval", write(tmp_path, "gath(4, 6) ; z(1: 2 -> 2)"))
    assert code == EXIT_OK
    assert text.splitlines()[0] == "[4, 6] -> [2]"


def test_parse_error_exits_2(tmp_path, capsys):
    assert run("eval", write(tmp_path, "id("))[0] == EXIT_USAGE
    assert "line 1, column 4" in capsys.readouterr().err


def test_type_error_exits_1(tmp_path):
    code, text = run("adapt", write(tmp_path, "z(0: [4] -> [4]) ; z(0: [6] -> [6])"))
    assert code == EXIT_FAIL and "adaptable: false" in text


def test_unknown_box_exits_1(tmp_path):
    assert run("eval", write(tmp_path, "CNOT"))[0] == EXIT_FAIL


def test_missing_file_exits_2(tmp_path):
    assert run("eval", str(tmp_path / "nope.term"))[0] == EXIT_USAGE


def test_bad_usage_exits_2(capsys):
    assert run("laws", "nosuch")[0] == EXIT_USAGE
    assert run()[0] == EXIT_USAGE
    assert run("render", str(INTRO))[0] == EXIT_USAGE  # -o is required
    capsys.readouterr()


def test_render_writes_file(tmp_path):
    target = tmp_path / "out.dot"
    code, text = run("render", str(INTRO), "-o", str(target), "--format", "dot")
    assert code == EXIT_OK and text == ""
    assert target.read_text().startswith("digraph term {")
    assert [p.name for p in tmp_path.iterdir()] == ["out.dot"]


def test_render_stdout():
    code, text = run("render", str(INTRO), "-o", "-", "--format", "svg")
    assert code == EXIT_OK and text.startswith("<svg")


def test_write_atomic_cleans_up_on_failure(tmp_path):
    target = tmp_path / "x.txt"
    target.write_text("old")
    with pytest.raises(TypeError):
        write_atomic(target, None)
    assert target.read_text() == "old"
    assert [p.name for p in tmp_path.iterdir()] == ["x.txt"]


def test_free_instance_with_signature(tmp_path):
    sig = write(tmp_path, format_signature(DEFAULT_SIGNATURE), "sig.txt")
    term = write(tmp_path, "h ; sym([B], [A]) ; g")
    code, text = run("eval", term, "--instance", "free", "--signature", sig)
    assert code == EXIT_OK
    assert text.splitlines()[0] == "[] -> [A]"


def test_bad_signature_exits_2(tmp_path):
    sig = write(tmp_path, "gen f : [A] -> \n", "sig.txt")
    term = write(tmp_path, "f")
    assert run("eval", term, "--instance", "free", "--signature", sig)[0] == EXIT_USAGE
