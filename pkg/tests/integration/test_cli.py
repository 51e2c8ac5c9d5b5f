"""Integration tests for the jlkdist command line interface."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

import numpy as np
import pytest

import jlkdist._cli
from jlkdist import MebConvergenceError, MebResult, PersistenceDiagram, __version__
from jlkdist._cli import (
    EXIT_BUDGET,
    EXIT_CONFIG,
    EXIT_CONVERGENCE,
    EXIT_OK,
    EXIT_PARSE,
    main,
)
from jlkdist._persistence import diagrams_to_json

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path


@pytest.fixture
def points_file(
    write_points: Callable[..., Path], rng: np.random.Generator
) -> Path:
    """Six Gaussian points in R^4."""
    return write_points(rng.standard_normal((6, 4)))


def _run_args(points: Path, out: Path, *extra: str) -> list[str]:
    return [
        "run",
        "--input",
        str(points),
        "--out",
        str(out),
        "--alpha-max",
        "3.0",
        "--probes",
        "20",
        "--radius-checks",
        "10",
        *extra,
    ]


def _error(capsys: pytest.CaptureFixture[str]) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


class TestRun:
    def test_identity(
        self,
        points_file: Path,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test that a run writes its report and prints the verdict."""
        out = tmp_path / "report" / "run.json"

        code = main(_run_args(points_file, out, "--identity", "--k", "3"))
        assert code == EXIT_OK
        assert capsys.readouterr().out.startswith("interleaving passes")

        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["schema_version"] == 1
        assert report["config"]["k"] == 3
        assert report["projector_kind"] == "identity"
        assert report["interleaving"]["log_bottleneck"] == 0.0
        assert report["implications"]["consistent"]

    def test_random_projection(self, points_file: Path, tmp_path: Path) -> None:
        """Test a run with an explicit dimension and diagram plots."""
        out, svg = tmp_path / "run.json", tmp_path / "svg"

        code = main(
            _run_args(
                points_file,
                out,
                *("--dim", "3", "--kind", "sparse", "--seed", "4"),
                *("--filtration", "rips", "--svg", str(svg)),
            )
        )
        assert code == EXIT_OK
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["dimension"]["target_dim"] == 3
        assert report["filtration"] == "rips"
        assert sorted(path.name for path in svg.iterdir()) == [
            "h0_after.svg",
            "h0_before.svg",
            "h1_after.svg",
            "h1_before.svg",
        ]

    def test_deterministic(self, points_file: Path, tmp_path: Path) -> None:
        """Test that two runs give the same report up to the timings."""
        reports = []
        for name in ("first.json", "second.json"):
            out = tmp_path / name
            assert main(_run_args(points_file, out, "--dim", "2")) == EXIT_OK
            report = json.loads(out.read_text(encoding="utf-8"))
            del report["timings"]
            reports.append(report)
        assert reports[0] == reports[1]

    def test_environment(
        self,
        points_file: Path,
        tmp_path: Path,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Test that flags override the environment."""
        monkeypatch.setenv("JLKDIST_SEED", "9")
        monkeypatch.setenv("JLKDIST_K", "4")
        out = tmp_path / "run.json"

        assert main(_run_args(points_file, out, "--identity", "--k", "1")) == EXIT_OK
        config = json.loads(out.read_text(encoding="utf-8"))["config"]
        assert config["seed"] == 9
        assert config["k"] == 1


class TestErrors:
    def test_parse_error(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that an unparsable input exits with code 2 and no report."""
        points = tmp_path / "points.csv"
        points.write_text("1,2\n3,x\n", encoding="utf-8")
        out = tmp_path / "run.json"

        assert main(_run_args(points, out)) == EXIT_PARSE
        error = _error(capsys)
        assert error["error"] == "parse_error"
        assert error["exit_code"] == EXIT_PARSE
        assert error["line"] == 2
        assert "non-numeric" in error["message"]
        assert not out.exists()

    def test_budget(
        self, points_file: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that a barycentric cloud above the budget exits with code 3."""
        out = tmp_path / "run.json"

        assert main(_run_args(points_file, out, "--budget", "5")) == EXIT_BUDGET
        error = _error(capsys)
        assert error["error"] == "budget_exceeded"
        assert (error["n"], error["k"], error["count"]) == (6, 2, 15)
        assert not out.exists()

    def test_convergence(
        self,
        points_file: Path,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Test that a solver failure exits with code 4 and names the simplex."""
        best = MebResult(np.zeros(4), 1.0, ((0, 1.0),), 10, 0.5)

        def fail(config: object) -> None:
            raise MebConvergenceError("did not converge", best, (1, 3, 4))

        monkeypatch.setattr(jlkdist._cli, "run", fail)
        assert main(_run_args(points_file, tmp_path / "run.json")) == EXIT_CONVERGENCE
        error = _error(capsys)
        assert error["error"] == "meb_convergence"
        assert error["simplex"] == [1, 3, 4]
        assert error["residual"] == 0.5

    @pytest.mark.parametrize(
        "extra",
        [
            ("--epsilon", "1.5"),
            ("--dim", "10"),
            ("--dim", "auto-gw", "--kind", "sparse"),
        ],
    )
    def test_config_error(
        self,
        points_file: Path,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
        extra: tuple[str, ...],
    ) -> None:
        """Test that an invalid configuration exits with code 5."""
        assert main(_run_args(points_file, tmp_path / "run.json", *extra)) == (
            EXIT_CONFIG
        )
        assert _error(capsys)["error"] == "config_error"


class TestCompare:
    def _write(self, path: Path, shift: float) -> Path:
        diagrams = [
            PersistenceDiagram.from_pairs(0, [(0.0, 1.0), (0.0, None)]),
            PersistenceDiagram.from_pairs(1, [(1.0, 2.0 * shift)]),
        ]
        path.write_text(diagrams_to_json(diagrams), encoding="utf-8")
        return path

    def test_compare(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test the certificate of two nearby diagram files."""
        before = self._write(tmp_path / "before.json", 1.0)
        after = self._write(tmp_path / "after.json", 1.03)

        assert main(["compare", str(before), str(after), "--epsilon", "0.25"]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["passes"]
        assert summary["log_bottleneck"] == pytest.approx(np.log(1.03))

    def test_compare_to_file(self, tmp_path: Path) -> None:
        """Test that the certificate is written to --out."""
        before = self._write(tmp_path / "before.json", 1.0)
        after = self._write(tmp_path / "after.json", 1.5)
        out = tmp_path / "certificate.json"

        args = ["compare", str(before), str(after), "--epsilon", "0.1", "--out"]
        assert main([*args, str(out)]) == EXIT_OK
        summary = json.loads(out.read_text(encoding="utf-8"))
        assert not summary["passes"]

    def test_invalid_diagram_file(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that an invalid diagram file exits with code 2."""
        before = self._write(tmp_path / "before.json", 1.0)
        after = tmp_path / "after.json"
        after.write_text("{not json", encoding="utf-8")

        assert main(["compare", str(before), str(after), "--epsilon", "0.25"]) == 2
        assert _error(capsys)["error"] == "parse_error"


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the version flag."""
    with pytest.raises(SystemExit) as exc:
        main(["--version"])

    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == __version__
