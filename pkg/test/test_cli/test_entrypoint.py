"""
Test program call from command line.
"""

import json
from pathlib import Path

import pytest
from qgcontract.cli import cli_parser, console_entry_point, find_config_file  # type: ignore


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    # no qgcontract.toml is picked up from the working or home directory
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("QGC_MAX_DEGREE", raising=False)
    return tmp_path


def run(argv):
    with pytest.raises(SystemExit) as excinfo:
        console_entry_point(argv)
    return excinfo.value.code


def test_cli_parser_routes_out_to_command():
    args = cli_parser(["verify", "--suite", "ybe", "--out", "report.json", "--n", "3"])
    assert args["general"]["command"] == "verify"
    assert args["verify"]["suite"] == "ybe"
    assert args["verify"]["out"] == "report.json"
    assert args["emit"]["out"] is None
    assert args["model"]["n"] == 3
    assert args["verify"]["negative_controls"] is None


def test_cli_parser_flags():
    args = cli_parser(
        ["-P", "2", "--max-degree", "9", "verify", "--no-negative-controls"]
    )
    assert args["general"]["parallel"] == 2
    assert args["rewrite"]["max_degree"] == 9
    assert args["verify"]["negative_controls"] is False


def test_cli_parser_table_alias():
    args = cli_parser(["emit", "--table", "cgc-h", "--format", "latex"])
    assert args["emit"]["matrix"] == "cgc-h"
    assert args["emit"]["format"] == "latex"


def test_cli_parser_needs_command():
    with pytest.raises(SystemExit):
        cli_parser([])
    with pytest.raises(SystemExit):
        cli_parser(["emit", "--matrix", "r_x"])


def test_emit_json(capsys):
    with pytest.warns(UserWarning, match="No configuration file found"):
        code = run(["--verbosity", "0", "emit", "--matrix", "r_q", "--n", "1"])
    assert code == 0
    out, _ = capsys.readouterr()
    assert json.loads(out) == {"dim": 1, "factors": [1, 1], "entries": [["s^2"]]}


def test_emit_to_file(isolated_cwd, capsys):
    target = isolated_cwd / "out" / "c.tex"
    code = run(
        [
            "--verbosity",
            "0",
            "emit",
            "--matrix",
            "c_h",
            "--n",
            "2",
            "--format",
            "latex",
            "--out",
            str(target),
        ]
    )
    assert code == 0
    assert target.read_text(encoding="utf8") == (
        "\\begin{pmatrix}\n0 & -1 \\\\\n1 & h\n\\end{pmatrix}\n"
    )
    out, _ = capsys.readouterr()
    assert out == ""


def test_emit_without_contraction_limit(capsys):
    code = run(["--verbosity", "0", "emit", "--matrix", "c_h", "--n", "3"])
    assert code == 2
    out, _ = capsys.readouterr()
    assert "no contraction limit: n must be even" in out


def test_verify_passes(isolated_cwd, capsys):
    target = isolated_cwd / "report.json"
    code = run(["--verbosity", "0", "verify", "--suite", "ybe", "--out", str(target)])
    assert code == 0
    report = json.loads(target.read_text(encoding="utf8"))
    assert report["suite"] == "ybe"
    assert report["overall"] is True
    assert [r["identity"] for r in report["results"]] == [
        "ybe:r_h(n=2)",
        "ybe:r_q(n=2)",
        "negative-control:ybe",
    ]


def test_verify_perturbed_fails(capsys):
    code = run(["--verbosity", "-1", "verify", "--suite", "ybe", "--perturb", "1,2"])
    assert code == 1
    out, _ = capsys.readouterr()
    report = json.loads(out)
    assert report["overall"] is False
    assert report["parameters"]["perturb"] == [1, 2]
    assert report["results"][0]["pass"] is False


def test_verify_invalid_perturbation(capsys):
    code = run(["--verbosity", "0", "verify", "--suite", "ybe", "--perturb", "1,x"])
    assert code == 2
    out, _ = capsys.readouterr()
    assert out.startswith("Invalid configuration")


def test_print_config(capsys):
    code = run(["--print-config"])
    assert code == 0
    out, _ = capsys.readouterr()
    assert "Rewrite configuration:" in out


def test_config_file_is_used(isolated_cwd, capsys):
    (isolated_cwd / "qgcontract.toml").write_text(
        '[general]\nverbosity = 0\n\n[emit]\nmatrix = "r_h"\nformat = "json"\n',
        encoding="utf8",
    )
    assert find_config_file() == isolated_cwd / "qgcontract.toml"
    code = run(["emit"])
    assert code == 0
    out, _ = capsys.readouterr()
    assert json.loads(out)["dim"] == 4


def test_missing_config_file():
    with pytest.raises(FileNotFoundError):
        find_config_file(Path("does-not-exist.toml"))


def test_missing_config_file_is_a_usage_error(capsys):
    code = run(["-c", "does-not-exist.toml", "verify", "--suite", "ybe"])
    assert code == 2
    out, _ = capsys.readouterr()
    assert "Configuration file not found" in out
