"""Tests for the paracyclic command line: outputs and exit codes."""

import json
from pathlib import Path

import pytest
import yaml
from typer.testing import CliRunner

from paracyclic.cli._common import EXIT_FAILED, EXIT_MALFORMED, EXIT_UNSUPPORTED, exit_code
from paracyclic.cli.main import app
from paracyclic.core.errors import (
    CompositeModulus,
    InvalidDuchain,
    MalformedInput,
    NotAComplex,
    TNotAvailable,
    UnsupportedRing,
)
from paracyclic.formats import dump_module
from paracyclic.modules import CheckStatus, IdentityCheck, IdentityReport

runner = CliRunner()


def run_structured(tmp_path: Path, *args: str) -> tuple[int, dict]:
    out = tmp_path / "report.json"
    result = runner.invoke(app, [*args, "--format", "structured", "--output", str(out)])
    data = json.loads(out.read_text(encoding="utf-8")) if out.exists() else {}
    return result.exit_code, data


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("RING", "MAX_DEGREE", "WORKERS", "TWIST", "FORMAT", "SEED", "LOG_LEVEL"):
        monkeypatch.delenv(f"PARACYCLIC_{name}", raising=False)


class TestExitCodes:
    @pytest.mark.parametrize(
        "exc, code",
        [
            (MalformedInput("x"), EXIT_MALFORMED),
            (InvalidDuchain("x"), EXIT_MALFORMED),
            (CompositeModulus(6, "rank"), EXIT_UNSUPPORTED),
            (UnsupportedRing("R"), EXIT_UNSUPPORTED),
            (TNotAvailable("x"), EXIT_UNSUPPORTED),
            (NotAComplex("x"), EXIT_FAILED),
        ],
    )
    def test_mapping(self, exc, code):
        assert exit_code(exc) == code


class TestBuild:
    def test_list(self):
        result = runner.invoke(app, ["build", "--list"])
        assert result.exit_code == 0
        assert "dual-numbers-twisted" in result.stdout

    def test_summary(self, tmp_path):
        code, data = run_structured(
            tmp_path, "build", "--builtin", "dual-numbers-twisted", "-n", "2"
        )
        assert code == 0
        assert data["kind"] == "paracyclic"
        assert data["ranks"] == [2, 4, 8]
        assert len(data["witnesses"]) == 3

    def test_simplicial_duchain_file(self, tmp_path):
        source = tmp_path / "v.yaml"
        source.write_text(
            yaml.safe_dump({"n_max": 2, "ranks": [1, 1, 0], "b": [[[0]], [[]]]}), encoding="utf-8"
        )
        code, data = run_structured(
            tmp_path, "build", "--builtin", "duchain-file", "--input", str(source)
        )
        assert code == 0
        assert data["module"] == "D(duchain)"
        assert data["normalized_ranks"] == [1, 1, 0]

    def test_save(self, tmp_path):
        target = tmp_path / "m.yaml"
        args = ["build", "-b", "ground-ring", "-n", "2", "--save", str(target)]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        assert yaml.safe_load(target.read_text(encoding="utf-8"))["ranks"] == [1, 1, 1]

    def test_needs_a_module(self):
        assert runner.invoke(app, ["build"]).exit_code == EXIT_MALFORMED

    def test_builtin_and_input_exclusive(self, tmp_path):
        path = tmp_path / "m.yaml"
        path.write_text("{}", encoding="utf-8")
        result = runner.invoke(app, ["build", "-b", "ground-ring", "-i", str(path)])
        assert result.exit_code == EXIT_MALFORMED

    def test_unknown_builtin(self):
        assert runner.invoke(app, ["build", "-b", "torus"]).exit_code == EXIT_MALFORMED

    @pytest.mark.parametrize("ring", ["R", "Z/0", "Z/1"])
    def test_unsupported_ring(self, ring):
        args = ["build", "-b", "ground-ring", "--ring", ring, "-n", "1"]
        assert runner.invoke(app, args).exit_code == EXIT_UNSUPPORTED

    def test_unparsable_modulus(self):
        args = ["build", "-b", "ground-ring", "--ring", "Z/x", "-n", "1"]
        assert runner.invoke(app, args).exit_code == EXIT_MALFORMED


class TestCheck:
    def test_ground_ring_passes(self, tmp_path):
        code, data = run_structured(tmp_path, "check", "-b", "ground-ring", "-n", "3")
        assert code == 0
        assert data["passed"] is True
        assert data["counts"]["fail"] == 0

    def test_table_output(self):
        result = runner.invoke(app, ["check", "-b", "simplex-1", "-n", "2", "-f", "table"])
        assert result.exit_code == 0
        assert "PASS" in result.stdout

    def test_advisory_failures_counted_apart(self, tmp_path, mocker):
        advisory = IdentityReport.of(
            [IdentityCheck("pi_inverse_printed", 0, CheckStatus.FAIL, advisory=True)]
        )
        mocker.patch("paracyclic.cli.check.check_identity_suite", return_value=advisory)
        out = tmp_path / "table.txt"
        args = ["check", "-b", "ground-ring", "-n", "2", "-f", "table", "-o", str(out)]
        assert runner.invoke(app, args).exit_code == 0
        assert "fail=0" in out.read_text(encoding="utf-8")
        assert "advisory=1" in out.read_text(encoding="utf-8")

        code, data = run_structured(tmp_path, "check", "-b", "ground-ring", "-n", "2")
        assert code == 0
        assert data["counts"]["fail"] == 0
        assert data["counts"]["advisory"] == 1

    def test_relations_only(self, tmp_path):
        code, data = run_structured(
            tmp_path, "check", "-b", "dual-numbers", "-n", "2", "--relations-only"
        )
        assert code == 0
        assert "karoubi_factorization" not in {e["identity"] for e in data["entries"]}

    def test_corrupted_module_file(self, tmp_path, ground, QQ):
        degen = [list(ds) for ds in ground.degen]
        degen[1][0] = degen[1][0].scale(QQ.from_int(2))
        broken = tmp_path / "broken.yaml"
        broken.write_text(yaml.safe_dump(dump_module(ground.with_maps(degen=degen))))
        code, data = run_structured(tmp_path, "check", "--input", str(broken))
        assert code == EXIT_FAILED
        assert data["passed"] is False

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text(yaml.safe_dump({"n_max": 1, "face": [[]]}), encoding="utf-8")
        assert runner.invoke(app, ["check", "--input", str(path)]).exit_code == EXIT_MALFORMED

    def test_environment_sets_defaults(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PARACYCLIC_MAX_DEGREE", "2")
        monkeypatch.setenv("PARACYCLIC_RING", "Z/7")
        code, data = run_structured(tmp_path, "check", "-b", "ground-ring", "--relations-only")
        assert code == 0
        assert data["ring"] == "Z/7"
        assert max(e["degree"] for e in data["entries"]) <= 2


class TestDump:
    def test_kappa(self, tmp_path):
        code, data = run_structured(
            tmp_path, "dump", "-b", "ground-ring", "--op", "kappa", "--degree", "1"
        )
        assert code == 0
        assert data["entries"] == [["0"]]

    def test_projection_index(self, tmp_path):
        code, data = run_structured(
            tmp_path, "dump", "-b", "ground-ring", "--op", "p", "--degree", "2", "--index", "2"
        )
        assert code == 0
        assert data["entries"] == [["1"]]

    def test_degree_beyond_truncation(self):
        args = ["dump", "-b", "ground-ring", "-n", "2", "--op", "d", "--degree", "2"]
        assert runner.invoke(app, args).exit_code == EXIT_UNSUPPORTED

    def test_unknown_operator(self):
        args = ["dump", "-b", "ground-ring", "--op", "zeta", "--degree", "1"]
        assert runner.invoke(app, args).exit_code == EXIT_MALFORMED

    def test_t_on_simplicial_input(self, tmp_path, simplicial1):
        path = tmp_path / "simplicial.yaml"
        path.write_text(yaml.safe_dump(dump_module(simplicial1)), encoding="utf-8")
        args = ["dump", "-i", str(path), "--op", "t", "--degree", "0"]
        assert runner.invoke(app, args).exit_code == EXIT_UNSUPPORTED


class TestDecompose:
    def test_ground_ring(self, tmp_path):
        code, data = run_structured(
            tmp_path, "decompose", "-b", "ground-ring", "--degree", "1", "--element", "1"
        )
        assert code == 0
        assert [(c["key"], c["coords"]) for c in data["components"]] == [
            ([], ["0"]),
            ([0], ["1"]),
        ]

    def test_wrong_length(self):
        args = ["decompose", "-b", "dual-numbers", "-d", "1", "-e", "1,0"]
        assert runner.invoke(app, args).exit_code == EXIT_MALFORMED

    def test_empty_coordinate(self):
        args = ["decompose", "-b", "ground-ring", "-d", "0", "-e", "1,"]
        assert runner.invoke(app, args).exit_code == EXIT_MALFORMED


class TestHomology:
    def test_simplex_over_integers(self, tmp_path):
        code, data = run_structured(tmp_path, "homology", "-b", "simplex-1", "-r", "Z", "-n", "3")
        assert code == 0
        assert [g["free_rank"] for g in data["groups"]] == [1, 0, 0]

    def test_compare(self, tmp_path):
        code, data = run_structured(
            tmp_path, "homology", "-b", "dual-numbers", "-n", "3", "--complex", "compare"
        )
        assert code == 0
        assert data["agrees"] is True

    def test_hochschild(self, tmp_path):
        code, data = run_structured(
            tmp_path, "homology", "-b", "dual-numbers", "-n", "2", "-c", "hochschild"
        )
        assert code == 0
        assert [g["free_rank"] for g in data["groups"]] == [2, 1]

    def test_mixed(self, tmp_path):
        code, data = run_structured(
            tmp_path, "homology", "-b", "ground-ring", "-n", "6", "-c", "bB", "-W", "2"
        )
        assert code == 0
        assert data["window"] == [-4, 1]
        assert [g["free_rank"] for g in data["groups"]] == [0, 1, 0, 1, 0, 1]

    def test_composite_modulus(self):
        args = ["homology", "-b", "ground-ring", "-r", "Z/6", "-n", "2"]
        assert runner.invoke(app, args).exit_code == EXIT_UNSUPPORTED

    def test_table_output(self, tmp_path):
        out = tmp_path / "table.txt"
        args = ["homology", "-b", "simplex-1", "-n", "2", "-f", "table", "-o", str(out)]
        assert runner.invoke(app, args).exit_code == 0
        assert "Q" in out.read_text(encoding="utf-8")
