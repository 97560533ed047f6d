"""
Test module for the webvac command line
"""

import io
import json
from unittest.mock import patch

import pytest

from webvac import __version__
from webvac.__main__ import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, main
from webvac.core.errors import InternalCheckError
from webvac.core.formats import format_ncm, format_tableau
from webvac.core.matching import ncm_from_tableau
from webvac.core.tableau import evacuate
from webvac.models.tableau import Shape
from webvac.models.verification import CheckOutcome, CheckStatus, VerificationReport

INTRO = "tableau 5 2\n1 2\n3 4\n5 7\n6 8\n9 10\n"
TWO_BY_TWO_WEB = "web 2 4\nedge b1 b4 1 u\nedge b2 b3 1 u\n"


@pytest.fixture
def intro_file(tmp_path):
    path = tmp_path / "intro.txt"
    path.write_text(INTRO)
    return str(path)


@pytest.fixture
def web_file(tmp_path):
    path = tmp_path / "web.txt"
    path.write_text(TWO_BY_TWO_WEB)
    return str(path)


def test_count(capsys):
    """Test the count subcommand."""

    code = main(["count", "--shape", "3", "3"])

    # Assertions
    assert code == EXIT_OK
    assert capsys.readouterr().out == "42\n"


@pytest.mark.parametrize("flags", [[], ["--fast"]])
def test_evacuate(intro_file, flags, capsys):
    """Test evacuation from a file with either algorithm."""

    code = main(["evacuate", intro_file, *flags])

    # Assertions
    assert code == EXIT_OK
    assert capsys.readouterr().out == "tableau 5 2\n1 2\n3 5\n4 6\n7 8\n9 10\n"


def test_evacuate_from_stdin(monkeypatch, capsys):
    """Test that '-' reads standard input."""

    monkeypatch.setattr("sys.stdin", io.StringIO("tableau 2 2\n1 3\n2 4\n"))

    code = main(["promote", "-", "--steps", "1"])

    # Assertions
    assert code == EXIT_OK
    assert capsys.readouterr().out == "tableau 2 2\n1 2\n3 4\n"


def test_ncm_and_reflect(intro_file, intro_tableau, tmp_path, capsys):
    """Test the matching of a tableau and its reflection."""

    assert main(["ncm", intro_file]) == EXIT_OK
    ncm_text = capsys.readouterr().out
    ncm_path = tmp_path / "intro.ncm"
    ncm_path.write_text(ncm_text)

    code = main(["reflect", str(ncm_path), "--kind", "ncm"])

    # Assertions
    assert ncm_text == format_ncm(ncm_from_tableau(intro_tableau))
    assert code == EXIT_OK
    assert capsys.readouterr().out == format_ncm(ncm_from_tableau(evacuate(intro_tableau)))


def test_web_output(intro_file, capsys):
    """Test that the web subcommand prints a standardized web."""

    code = main(["web", intro_file])
    out = capsys.readouterr().out

    # Assertions
    assert code == EXIT_OK
    assert out.startswith("web 5 10\nivertex 1 6 1\n")
    assert "edge b10 i9 1 -\n" in out


def test_flip(web_file, capsys):
    """Test that flipping an undirected weight-1 edge of a 2-row web keeps it."""

    code = main(["flip", web_file, "--edges", "b1-b4,b2-b3"])

    # Assertions
    assert code == EXIT_OK
    assert capsys.readouterr().out == TWO_BY_TWO_WEB


def test_flip_unknown_edge(web_file, capsys):
    """Test that an unknown edge id is an input error."""

    code = main(["flip", web_file, "--edges", "i1-i2"])

    # Assertions
    assert code == EXIT_INPUT_ERROR
    assert "webvac flip: error: web has no edge i1-i2" in capsys.readouterr().err


def test_bad_tableau(tmp_path, capsys):
    """Test that a non-standard tableau exits with status 2."""

    path = tmp_path / "bad.txt"
    path.write_text("tableau 2 2\n1 3\n4 2\n")

    code = main(["evacuate", str(path)])

    # Assertions
    assert code == EXIT_INPUT_ERROR
    assert "webvac evacuate: error: row 2 decreases at column 2" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    """Test that an unreadable file is an input error."""

    code = main(["evacuate", str(tmp_path / "missing.txt")])

    # Assertions
    assert code == EXIT_INPUT_ERROR
    assert "webvac evacuate: error:" in capsys.readouterr().err


def test_bad_shape(capsys):
    """Test that a non-positive shape is rejected."""

    # Assertions
    assert main(["count", "--shape", "0", "2"]) == EXIT_INPUT_ERROR


def test_enumerate(capsys):
    """Test that tableaux are listed in reading-word order."""

    code = main(["enumerate", "--shape", "2", "2"])

    # Assertions
    assert code == EXIT_OK
    assert capsys.readouterr().out == "tableau 2 2\n1 2\n3 4\ntableau 2 2\n1 3\n2 4\n"


def test_enumerate_over_budget(capsys):
    """Test that enumeration refuses shapes over the budget."""

    code = main(["enumerate", "--shape", "3", "3", "--budget", "10"])

    # Assertions
    assert code == EXIT_INPUT_ERROR
    assert "shape has 42 tableaux, budget is 10" in capsys.readouterr().err


def test_verify_passes(capsys):
    """Test the text report of a passing shape."""

    code = main(["verify", "--shape", "2", "2"])
    lines = capsys.readouterr().out.splitlines()

    # Assertions
    assert code == EXIT_OK
    assert len(lines) == 16
    assert "2x2 conventions_34 skip -" in lines
    assert "2x2 left_square pass -" in lines
    assert lines == sorted(lines)


def test_verify_json(capsys):
    """Test one JSON report per line."""

    code = main(["verify", "--shape", "2", "3", "--shape", "2", "2", "--json"])
    reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]

    # Assertions
    assert code == EXIT_OK
    assert [(r["shape"]["n"], r["shape"]["k"]) for r in reports] == [(2, 2), (2, 3)]
    assert reports[1]["tableau_count"] == 5


def test_verify_budget_error(capsys):
    """Test that an over-budget shape makes verify exit with status 2."""

    code = main(["verify", "--shape", "3", "3", "--budget", "10"])

    # Assertions
    assert code == EXIT_INPUT_ERROR
    assert capsys.readouterr().out == "3x3 enumerate error shape has 42 tableaux, budget is 10\n"


@patch("webvac.__main__.run_suite")
def test_verify_failure_exits_one(mock_run_suite, capsys):
    """Test that a failed check makes verify exit with status 1."""

    # Setup mock
    mock_run_suite.return_value = [
        VerificationReport(
            shape=Shape(n=2, k=2),
            tableau_count=2,
            checks={
                "left_square": CheckOutcome(
                    check="left_square", status=CheckStatus.FAIL, witness="word=1,2,3,4"
                )
            },
        )
    ]

    code = main(["verify", "--shape", "2", "2", "--budget", "5"])

    # Assertions
    assert code == EXIT_CHECK_FAILED
    assert capsys.readouterr().out == "2x2 left_square fail word=1,2,3,4\n"
    mock_run_suite.assert_called_once_with([Shape(n=2, k=2)], budget=5, workers=1)


@patch("webvac.__main__.evacuate", side_effect=InternalCheckError("slide left a hole"))
def test_internal_error_exits_one(mock_evacuate, intro_file, capsys):
    """Test that internal check errors exit with status 1."""

    code = main(["evacuate", intro_file])

    # Assertions
    assert code == EXIT_CHECK_FAILED
    assert "webvac evacuate: check failed: slide left a hole" in capsys.readouterr().err


def test_render_to_file(intro_file, tmp_path):
    """Test that -o writes the document to a file."""

    out = tmp_path / "intro.svg"

    code = main(["render", intro_file, "--kind", "ncm", "-o", str(out), "--palette", "black,red"])

    # Assertions
    assert code == EXIT_OK
    assert out.read_text().startswith("<svg")
    assert 'stroke="black"' in out.read_text()


def test_render_tikz_web(web_file, capsys):
    """Test TikZ output of a web file."""

    code = main(["render", web_file, "--kind", "web", "--format", "tikz"])

    # Assertions
    assert code == EXIT_OK
    assert capsys.readouterr().out.startswith("\\begin{tikzpicture}")


@pytest.mark.parametrize(
    "extra", [["--kind", "ncm"], ["--kind", "web", "--scale", "0"], ["--kind", "web", "--palette", ","]]
)
def test_render_errors(web_file, extra, capsys):
    """Test wrong kinds, bad scales and empty palettes."""

    # Assertions
    assert main(["render", web_file, *extra]) == EXIT_INPUT_ERROR


def test_convention(tmp_path, sl3_tableau, capsys):
    """Test the convention subcommand on an sl3 web."""

    path = tmp_path / "sl3.txt"
    path.write_text(format_tableau(sl3_tableau))
    assert main(["web", str(path)]) == EXIT_OK
    web_path = tmp_path / "sl3.web"
    web_path.write_text(capsys.readouterr().out)

    code = main(["convention", str(web_path)])
    edge_lines = [line for line in capsys.readouterr().out.splitlines() if line.startswith("edge")]

    # Assertions
    assert code == EXIT_OK
    assert len(edge_lines) == 12
    assert all(line.endswith(" 1 -") for line in edge_lines)


def test_version(capsys):
    """Test the --version flag."""

    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])

    # Assertions
    assert exc_info.value.code == 0
    assert capsys.readouterr().out.strip() == f"webvac {__version__}"
