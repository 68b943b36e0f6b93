"""Command-line surface: exit codes, JSON emission, and file round trips."""

import json

import pytest

from designforge.cli import (
    EXIT_INVALID,
    EXIT_OK,
    EXIT_UNOBTAINED,
    EXIT_USAGE,
    main,
)
from designforge.core import Design


def test_plan_exit_codes(capsys):
    assert main(["plan", "4", "2", "6"]) == EXIT_OK
    assert "exists" in capsys.readouterr().out
    assert main(["plan", "5", "1", "4"]) == EXIT_UNOBTAINED
    assert "not-exists" in capsys.readouterr().out
    assert main(["plan", "8", "2", "7"]) == EXIT_UNOBTAINED
    assert "open" in capsys.readouterr().out


def test_bound_prints_value(capsys):
    assert main(["bound", "2", "4", "3", "1"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"


def test_build_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["build", "schgdd", "4", "2", "6", "--out", str(out)]) == EXIT_OK
    assert main(["verify", str(out)]) == EXIT_OK

    data = json.loads(out.read_text())
    data["base_blocks"] = data["base_blocks"][:-1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert main(["verify", str(bad)]) == EXIT_INVALID


def test_build_refuses_unobtainable(capsys):
    assert main(["build", "schgdd", "5", "1", "4"]) == EXIT_UNOBTAINED


def test_search_json_output(capsys):
    assert main(["search", "bsec1", "9", "--json"]) == EXIT_OK
    design = Design.from_json(capsys.readouterr().out)
    assert design.params.n == 9


def test_search_usage_errors(capsys):
    assert main(["search", "frob", "9"]) == EXIT_USAGE
    assert "unknown search kind" in capsys.readouterr().err
    assert main(["search", "schgdd", "4", "2"]) == EXIT_USAGE
    assert "needs 3 parameters" in capsys.readouterr().err


def test_search_not_found(capsys):
    assert main(["search", "schgdd", "5", "1", "4"]) == EXIT_UNOBTAINED
    assert "space exhausted" in capsys.readouterr().err


def test_starter_exit_codes(capsys):
    assert main(["starter", "9"]) == EXIT_OK
    assert main(["starter", "8"]) == EXIT_USAGE
    assert main(["starter", "41"]) == EXIT_INVALID
    assert "starter table defect" in capsys.readouterr().err


def test_bsec_bad_params(capsys):
    assert main(["bsec", "7", "9"]) == EXIT_USAGE


def test_nonexistence_certificate(capsys):
    assert main(["nonexist-5-1-4"]) == EXIT_OK
    assert "solutions: 0" in capsys.readouterr().out


def test_ooc_and_fold_round_trip(tmp_path, capsys):
    code = tmp_path / "code.json"
    assert main(["ooc", "2", "4", "--out", str(code)]) == EXIT_OK
    folded = tmp_path / "folded.json"
    assert main(["ooc-fold", str(code), "2", "--out", str(folded)]) == EXIT_OK
    design = Design.from_json(folded.read_text())
    assert design.params.n == 4 and design.params.m == 2
    assert len(design.base_blocks) == 4
    assert main(["verify", str(folded)]) == EXIT_OK


def test_direct_family(capsys):
    assert main(["direct", "5xm4", "5", "5", "4", "--json"]) == EXIT_OK
    design = Design.from_json(capsys.readouterr().out)
    assert len(design.base_blocks) == 50


def test_unknown_verb_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE
