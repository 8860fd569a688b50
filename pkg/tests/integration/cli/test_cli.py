# ABOUTME: End-to-end tests of the graph-entropy command line through main().
# ABOUTME: Tables are written to files and parsed back; exit codes and stderr are checked directly.

import csv
import math
from pathlib import Path

import pytest

from autobots_graph_entropy.cli.main import main
from tests.helpers import smooth_limit_tilde

pytestmark = pytest.mark.integration


def _run(
    tmp_path: Path, argv: list[str]
) -> tuple[list[str], list[dict[str, str]], list[list[str]]]:
    """Run a command into a CSV file; return header, data rows and footer rows."""
    target = tmp_path / "out.csv"
    assert main([*argv, "--output", str(target)]) == 0
    with target.open(encoding="utf-8", newline="") as handle:
        lines = list(csv.reader(handle))
    header = lines[0]
    body = [line for line in lines[1:] if not line[0].startswith("#")]
    footer = [line for line in lines[1:] if line[0].startswith("#")]
    rows = [dict(zip(header, line, strict=True)) for line in body]
    return header, rows, footer


def test_zeta_table(tmp_path):
    """Test zeta(1) = 2/3 and zeta(2) = 26/1125 at l = 3."""
    header, rows, footer = _run(tmp_path, ["zeta", "--l", "3", "--s", "1,2,0.5+2j"])
    assert header == ["l", "s_re", "s_im", "zeta_re", "zeta_im"]
    assert footer == []
    assert [row["l"] for row in rows] == ["3", "3", "3"]
    assert rows[0]["s_re"] == "1"
    assert rows[0]["s_im"] == "0"
    assert float(rows[0]["zeta_re"]) == pytest.approx(2 / 3, rel=1e-11)
    assert float(rows[0]["zeta_im"]) == 0.0
    assert float(rows[1]["zeta_re"]) == pytest.approx(26 / 1125, rel=1e-11)
    assert rows[2]["s_im"] == "2"


def test_zeta_to_stdout(capsys):
    """Test CSV goes to stdout when --output is absent."""
    assert main(["zeta", "--l", "3", "--s", "1"]) == 0
    assert "l,s_re,s_im,zeta_re,zeta_im\n3,1,0,0.666666666667,0\n" in capsys.readouterr().out


def test_zeta_digits_from_environment(tmp_path, monkeypatch):
    """Test GRAPH_ENTROPY_CSV_SIGNIFICANT_DIGITS shortens float cells."""
    monkeypatch.setenv("GRAPH_ENTROPY_CSV_SIGNIFICANT_DIGITS", "6")
    _, rows, _ = _run(tmp_path, ["zeta", "--l", "3", "--s", "1"])
    assert rows[0]["zeta_re"] == "0.666667"


def test_zeta_on_pole_exits_one(capsys):
    """Test s = s_0 at l = 4 (d_s = 3/2) is a numeric failure."""
    assert main(["zeta", "--l", "4", "--s", "0.75"]) == 1
    assert "pole" in capsys.readouterr().err


def test_poles_table(tmp_path):
    """Test pole positions, Delta_0 = 2 and the footer rows."""
    header, rows, footer = _run(tmp_path, ["poles", "--l", "3", "--n-max", "3"])
    assert header == ["n", "s_re", "s_im", "delta_re", "delta_im"]
    assert [row["n"] for row in rows] == ["0", "1", "2", "3"]
    assert rows[0]["delta_re"] == "2"
    assert rows[0]["delta_im"] == "0"
    assert float(rows[1]["s_im"]) == pytest.approx(2.859600867, rel=1e-9)
    assert float(rows[2]["s_im"]) == pytest.approx(2 * 2.859600867, rel=1e-9)
    assert footer[0] == ["# zeta0", "-0.4"]
    assert footer[1][0] == "# spectral_area"
    assert float(footer[1][1]) == pytest.approx(0.176, rel=0.02)


def test_poles_requires_l(capsys):
    """Test a missing --l exits 2."""
    assert main(["poles"]) == 2
    assert "requires --l" in capsys.readouterr().err


def test_heat_table(tmp_path):
    """Test the asymptotic trace agrees with the direct sum across the grid."""
    header, rows, _ = _run(
        tmp_path, ["heat", "--l", "3", "--t-min", "1e-4", "--t-max", "1e-2", "--points", "5"]
    )
    assert header == ["t", "K_direct", "K_asymptotic", "rel_err", "tail_bound"]
    assert len(rows) == 5
    assert float(rows[0]["t"]) == pytest.approx(1e-4)
    assert float(rows[-1]["t"]) == pytest.approx(1e-2)
    for row in rows:
        assert float(row["rel_err"]) < 1e-10
        assert float(row["tail_bound"]) <= 1e-15


def test_heat_refuses_tiny_times(tmp_path):
    """Test rows below the direct-trace limit are marked refused and the run succeeds."""
    _, rows, _ = _run(
        tmp_path, ["heat", "--l", "3", "--t-min", "1e-9", "--t-max", "1e-5", "--points", "3"]
    )
    assert rows[0]["K_direct"] == "refused"
    assert rows[0]["rel_err"] == ""
    assert float(rows[0]["K_asymptotic"]) > 0.0
    assert rows[1]["K_direct"] != "refused"


def test_heat_refuses_underflowing_times(tmp_path):
    """Test a row whose direct trace underflows is refused while the run still succeeds."""
    _, rows, _ = _run(
        tmp_path,
        [
            "heat",
            "--l",
            "3",
            "--t-min",
            "1",
            "--t-max",
            "100",
            "--points",
            "3",
            "--check-decimation",
        ],
    )
    assert [row["K_direct"] == "refused" for row in rows] == [False, False, True]
    assert rows[-1]["decimation_residual"] == ""
    assert float(rows[1]["decimation_residual"]) < 1e-12


def test_entropy_infinite_cutoff_exits_two(capsys):
    """Test --epsilon inf is a usage error."""
    assert main(["entropy", "--l", "3", "--epsilon", "inf"]) == 2
    assert "finite" in capsys.readouterr().err


def test_heat_decimation_check(tmp_path):
    """Test --check-decimation adds a tiny residual column."""
    header, rows, _ = _run(
        tmp_path,
        [
            "heat",
            "--l",
            "3",
            "--t-min",
            "1e-3",
            "--t-max",
            "1e-1",
            "--points",
            "3",
            "--check-decimation",
        ],
    )
    assert header[-1] == "decimation_residual"
    assert all(float(row["decimation_residual"]) < 1e-12 for row in rows)


def test_heat_uses_presets(tmp_path):
    """Test heat without a time range falls back to the packaged presets."""
    _, rows, _ = _run(tmp_path, ["heat", "--l", "4"])
    assert len(rows) == 16


def test_entropy_table(tmp_path):
    """Test the entropy rows in both conventions."""
    header, rows, _ = _run(
        tmp_path, ["entropy", "--l", "3", "--epsilon", "0.1,0.05", "--n-max", "3"]
    )
    assert header == [
        "l",
        "epsilon",
        "d_s",
        "convention",
        "leading",
        "S_E_tilde",
        "corrections",
        "total",
    ]
    assert len(rows) == 2
    first = rows[0]
    assert first["convention"] == "paper"
    assert float(first["leading"]) == pytest.approx(4.62, rel=0.02)
    assert float(first["S_E_tilde"]) == pytest.approx(0.71, abs=0.02)
    assert float(first["total"]) == pytest.approx(
        float(first["leading"]) * (1.0 + float(first["corrections"])), rel=1e-10
    )
    assert float(rows[1]["leading"]) > float(first["leading"])

    _, replica, _ = _run(
        tmp_path, ["entropy", "--l", "3", "--epsilon", "0.1", "--convention", "replica"]
    )
    assert replica[0]["convention"] == "replica"
    assert float(replica[0]["leading"]) == pytest.approx(float(first["leading"]) / 6.0, rel=1e-10)


def test_scan_table(tmp_path):
    """Test a log-stepped scan is strictly increasing below the asymptote footer."""
    header, rows, footer = _run(
        tmp_path, ["scan", "--l-min", "3", "--l-max", "1000", "--log-steps", "40"]
    )
    assert header == ["l", "d_s", "S_E_tilde"]
    assert len(rows) == 40
    assert rows[0]["l"] == "3"
    assert rows[-1]["l"] == "1000"
    values = [float(row["S_E_tilde"]) for row in rows]
    assert all(a < b for a, b in zip(values, values[1:], strict=False))
    assert footer[0][0] == "# asymptote"
    assert float(footer[0][1]) == pytest.approx(smooth_limit_tilde(), rel=1e-11)
    assert values[-1] < float(footer[0][1])


def test_scan_rejects_small_l(capsys):
    """Test --l-min 2 exits 2 naming the bound."""
    assert main(["scan", "--l-min", "2", "--l-max", "10"]) == 2
    assert "l >= 3" in capsys.readouterr().err


def test_scan_output_is_byte_identical(tmp_path):
    """Test repeated runs write identical files."""
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    argv = ["scan", "--l-min", "3", "--l-max", "50"]
    assert main([*argv, "--output", str(first)]) == 0
    assert main([*argv, "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert b"\r\n" not in first.read_bytes()


def test_corrections_table(tmp_path):
    """Test one row per (l, n) with the prefactor shrinking in n."""
    header, rows, _ = _run(
        tmp_path,
        ["corrections", "--l-min", "3", "--l-max", "20", "--log-steps", "5", "--n", "1,2,3"],
    )
    assert header == ["l", "n", "Pi_c", "Pi_s"]
    assert len(rows) == 15
    assert [row["n"] for row in rows[:3]] == ["1", "2", "3"]

    def largest(order: str) -> float:
        return max(
            math.hypot(float(row["Pi_c"]), float(row["Pi_s"])) for row in rows if row["n"] == order
        )

    assert largest("1") > largest("2") > largest("3")


def test_corrections_verify(tmp_path):
    """Test --verify adds quadrature columns agreeing with the closed form."""
    header, rows, _ = _run(
        tmp_path,
        ["corrections", "--l-min", "3", "--l-max", "4", "--n", "1", "--verify", "--epsilon", "0.1"],
    )
    assert header == ["l", "n", "Pi_c", "Pi_s", "Pi_c_quad", "Pi_s_quad"]
    for row in rows:
        closed = complex(float(row["Pi_c"]), float(row["Pi_s"]))
        numeric = complex(float(row["Pi_c_quad"]), float(row["Pi_s_quad"]))
        assert abs(numeric - closed) <= 1e-6 * abs(closed)


def test_corrections_rejects_order_zero(capsys):
    """Test --n 0 exits 2."""
    assert main(["corrections", "--l-min", "3", "--l-max", "5", "--n", "0"]) == 2
    assert ">= 1" in capsys.readouterr().err


def test_svg_output(tmp_path):
    """Test --format svg writes a figure file."""
    target = tmp_path / "scan.svg"
    argv = ["scan", "--l-min", "3", "--l-max", "30", "--format", "svg", "--output", str(target)]
    assert main(argv) == 0
    text = target.read_text(encoding="utf-8")
    assert "<svg" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["corrections", "--l-min", "3", "--l-max", "10", "--log-steps", "3", "--n", "1,2"],
        ["heat", "--l", "3", "--t-min", "1e-9", "--t-max", "1e-3", "--points", "3"],
        ["entropy", "--l", "3", "--epsilon", "0.1,0.01"],
    ],
)
def test_svg_for_other_commands(tmp_path, argv: list[str]):
    """Test every figure path renders, refused cells included."""
    target = tmp_path / "figure.svg"
    assert main([*argv, "--format", "svg", "--output", str(target)]) == 0
    assert target.stat().st_size > 0


def test_svg_requires_output(capsys):
    """Test --format svg without --output exits 2."""
    assert main(["scan", "--l-min", "3", "--l-max", "5", "--format", "svg"]) == 2
    assert "requires --output" in capsys.readouterr().err


def test_unknown_command_exits_two():
    """Test argparse failures map to exit code 2."""
    assert main(["nonsense"]) == 2


def test_help_exits_zero(capsys):
    """Test --help prints usage and exits 0."""
    assert main(["--help"]) == 0
    assert "scan" in capsys.readouterr().out
