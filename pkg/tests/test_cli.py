import json
import re
from pathlib import Path

import pytest

from hyperkin import cli
from hyperkin.scenarios import S1_DOC, S2_DOC

SCENARIO_DIR = Path(__file__).resolve().parents[1] / "scenarios"


def write_doc(tmp_path, doc, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def s1_path(tmp_path):
    return write_doc(tmp_path, S1_DOC, "s1.json")


def rows(text):
    lines = text.strip().split("\n")
    return lines[0], [line.split(",") for line in lines[1:]]


def test_bundled_documents_match_builtin_fixtures():
    assert json.loads((SCENARIO_DIR / "s1.json").read_text()) == S1_DOC
    assert json.loads((SCENARIO_DIR / "s2.json").read_text()) == S2_DOC


def test_simulate_s1(s1_path, tmp_path):
    out = tmp_path / "s1.csv"
    assert cli.main(["simulate", "--spec", s1_path, "--out", str(out), "--range", "0:1", "--samples", "11"]) == 0
    header, body = rows(out.read_text())
    assert header == cli.CSV_HEADER
    assert len(body) == 11
    first = dict(zip(header.split(","), body[0]))
    assert (first["pole_H_re"], first["pole_H_uni"]) == ("0", "-1")
    assert float(first["r"]) == pytest.approx(1.8, abs=1e-11)
    assert float(first["r_prime"]) == pytest.approx(1.125, abs=1e-11)
    assert float(first["nu_ds"]) == pytest.approx(1 / 3, abs=1e-11)
    assert "\r" not in out.read_text()


def test_simulate_row_with_isotropic_tangent(s1_path, capsys):
    assert cli.main(["simulate", "--spec", s1_path, "--range", "1:2", "--samples", "3"]) == 0
    _, body = rows(capsys.readouterr().out)
    mid = body[1]
    assert mid[0] == "1.5"
    assert mid[7:] == ["isotropic_tangent"] * 4
    assert all(cell not in ("isotropic_tangent", "") for cell in body[0])


def test_simulate_numbers_use_twelve_significant_digits(s1_path, capsys):
    cli.main(["simulate", "--spec", s1_path, "--samples", "13"])
    _, body = rows(capsys.readouterr().out)
    for row in body:
        for cell in row:
            if re.fullmatch(r"-?[0-9.e+-]+", cell):
                mantissa = cell.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
                assert len(mantissa) <= 12


def test_simulate_outputs_are_byte_identical(s1_path, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    cli.main(["simulate", "--spec", s1_path, "--out", str(a)])
    cli.main(["simulate", "--spec", s1_path, "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_simulate_all_degenerate_exits_3(tmp_path, capsys):
    path = write_doc(tmp_path, {"phi": "t", "psi": "t", "b_prime": {"re": "t", "uni": "0"}})
    assert cli.main(["simulate", "--spec", path]) == 3
    _, body = rows(capsys.readouterr().out)
    assert all(row[1] == "no_pole" for row in body)


@pytest.mark.parametrize(
    "doc, needle",
    [
        ({"phi": "t+*2", "psi": "2*t"}, "phi: parse error at offset 2"),
        ({"phi": "t"}, "psi"),
        ({"phi": "t", "psi": "2*t", "samples": 1}, "samples"),
        ({"phi": "t", "psi": "2*t", "t_range": [1, 0]}, "t_range"),
        ({"phi": "t", "psi": "2*t", "colour": "red"}, "unknown keys"),
    ],
)
def test_bad_documents_exit_2(tmp_path, capsys, doc, needle):
    path = write_doc(tmp_path, doc)
    assert cli.main(["simulate", "--spec", path]) == 2
    assert needle in capsys.readouterr().err


def test_io_errors_exit_2(s1_path, tmp_path, capsys):
    assert cli.main(["simulate", "--spec", str(tmp_path / "missing.json")]) == 2
    (tmp_path / "bad.json").write_text("{not json")
    assert cli.main(["verify", "--spec", str(tmp_path / "bad.json")]) == 2
    assert cli.main(["plot", "--spec", s1_path, "--out", str(tmp_path / "no" / "such" / "dir.svg")]) == 2
    assert cli.main(["simulate", "--spec", s1_path, "--out", str(tmp_path)]) == 2


def test_argument_errors_exit_2(s1_path):
    assert cli.main(["frobnicate", "--spec", s1_path]) == 2
    assert cli.main(["simulate"]) == 2
    assert cli.main(["simulate", "--spec", s1_path, "--range", "1:0"]) == 2
    assert cli.main(["simulate", "--spec", s1_path, "--samples", "1"]) == 2
    assert cli.main(["euler-savary", "--spec", s1_path, "--point", "0,1"]) == 2
    assert cli.main(["euler-savary", "--spec", s1_path, "--t", "0", "--point", "zero"]) == 2


@pytest.mark.parametrize(
    "point, expected",
    [
        ("0,1", [1.0, 0.0, 0.75, 0.0, 0.75]),
        ("-0.5,0", [0.5, 0.0, 0.0, 0.0, 0.0]),
        ("0.625,0.375", [0.5, None, 9 / 14, 45 / 56, 27 / 56]),
    ],
)
def test_euler_savary_command(s1_path, capsys, point, expected):
    assert cli.main(["euler-savary", "--spec", s1_path, "--t", "0", f"--point={point}"]) == 0
    values = [float(v) for v in capsys.readouterr().out.strip().split(",")]
    for got, want in zip(values, expected):
        if want is not None:
            assert got == pytest.approx(want, abs=1e-11)


def test_euler_savary_geometric_errors_exit_4(s1_path, tmp_path, capsys):
    assert cli.main(["euler-savary", "--spec", s1_path, "--t", "0", "--point", "1,1"]) == 4
    assert "isotropic_direction" in capsys.readouterr().err
    path = write_doc(tmp_path, {"phi": "t", "psi": "t"})
    assert cli.main(["euler-savary", "--spec", path, "--t", "0", "--point", "0,1"]) == 4
    assert "no_pole" in capsys.readouterr().err


@pytest.mark.parametrize("doc", [S1_DOC, S2_DOC])
def test_verify_fixtures_pass(tmp_path, capsys, doc):
    assert cli.main(["verify", "--spec", write_doc(tmp_path, doc)]) == 0
    report = capsys.readouterr().out
    assert "FAIL" not in report and "SKIP" not in report
    for suite in ("algebra", "composition", "rolling", "frame-identity", "euler-savary"):
        assert re.search(rf"^{suite}\s+PASS", report, re.M)


def test_verify_without_pole(tmp_path, capsys):
    path = write_doc(tmp_path, {"phi": "t", "psi": "t", "b_prime": {"re": "t^2", "uni": "sinh(t)"}})
    assert cli.main(["verify", "--spec", path]) == 1
    report = capsys.readouterr().out
    assert re.search(r"^composition\s+PASS", report, re.M)
    assert re.search(r"^pole\s+SKIP", report, re.M)
    assert "no_pole" in report


def _polylines(svg, cls):
    return re.findall(rf'<polyline points="([^"]+)"[^>]*class="{cls}"', svg)


def test_plot_s1(s1_path, tmp_path):
    out = tmp_path / "s1.svg"
    assert cli.main(["plot", "--spec", s1_path, "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    centrodes = _polylines(svg, "centrode")
    assert len(centrodes) == 2
    starts = [c.split(" ")[0] for c in centrodes]
    assert starts[0] == starts[1]  # both begin at the pole (0, -1)
    assert len(_polylines(svg, "isotropic")) == 2
    assert _polylines(svg, "hyperbola")
    assert not _polylines(svg, "trajectory")


def test_plot_points_and_determinism(s1_path, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    args = ["plot", "--spec", s1_path, "--point=0.5,-1", "--point", "1,0"]
    assert cli.main(args + ["--out", str(a)]) == 0
    assert cli.main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(_polylines(a.read_text(), "trajectory")) == 2


def test_plot_to_stdout(s1_path, capsys):
    assert cli.main(["plot", "--spec", s1_path]) == 0
    assert capsys.readouterr().out.startswith("<svg")


def test_fmt():
    assert cli.fmt(0.0) == "0"
    assert cli.fmt(-0.0) == "0"
    assert cli.fmt(1 / 3) == "0.333333333333"
    assert cli.fmt(1.8) == "1.8"
    assert cli.fmt(-1.0) == "-1"
