import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from bundlegauge.cli import (
    EXIT_OK,
    EXIT_OUT_OF_SCOPE,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    run,
)

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "docs" / "result-schema.json").read_text()
)


def ok(argv):
    result = run(argv)
    assert result.exit_code == EXIT_OK, result.text
    jsonschema.validate(result.payload, SCHEMA)
    return result


class TestClassify:
    def test_torsion_base(self):
        result = ok(["classify", "--group", "Sp2", "--l", "3", "--m", "5"])
        assert result.payload["result"]["set"] == "Z_5"
        assert result.payload["result"]["size"] == 5

    def test_m0_is_infinite(self):
        result = ok(["classify", "--group", "SU4", "--l", "3", "--m", "0"])
        assert result.payload["result"]["set"] == "Z"
        assert result.payload["result"]["size"] is None

    def test_reduction(self):
        result = ok(["classify", "--group", "SU4", "--l", "0", "--m", "5", "--k", "12"])
        assert result.payload["result"]["k"] == 2

    def test_out_of_scope_exit_code(self):
        result = run(["classify", "--group", "SU2", "--l", "0", "--m", "0"])
        assert result.exit_code == EXIT_OUT_OF_SCOPE
        assert "pi_6(SU(2)) = Z_12" in result.text
        assert result.payload["status"] == "out-of-scope"


class TestManifoldCommands:
    def test_equiv(self):
        result = ok(["manifold", "equiv", "--a", "3,0", "--b", "15,0"])
        assert result.payload["result"]["equivalent"] is True
        assert "James-Whitehead" in result.payload["result"]["reason"]

    def test_homology(self):
        result = ok(["manifold", "homology", "--l", "3", "--m", "6"])
        assert result.payload["result"]["degrees"] == [
            "Z", "0", "0", "Z_6", "0", "0", "0", "Z",
        ]

    def test_suspend_integral(self):
        result = ok(["manifold", "suspend", "--l", "24", "--m", "0"])
        assert result.payload["result"]["expression"] == "S^4 v S^5 v S^8"

    def test_suspend_plocal(self):
        result = ok(["manifold", "suspend", "--l", "0", "--m", "50", "--p", "5"])
        assert result.payload["result"]["expression"] == "P^5(25) v S^8 @ (5)"

    def test_suspend_torsion_without_prime(self):
        result = run(["manifold", "suspend", "--l", "0", "--m", "6"])
        assert result.exit_code == EXIT_OUT_OF_SCOPE


class TestGaugeCommands:
    def test_decompose_pinned_string(self):
        result = ok(
            ["gauge", "decompose", "--group", "SU4", "--l", "12", "--m", "0", "--k", "1"]
        )
        assert (
            result.payload["result"]["expression"]
            == "G^1(S^4) x O^3[SU(4)] x O^7[SU(4)]"
        )
        assert result.payload["caveats"]

    def test_decompose_plocal_loops_field(self):
        result = ok(
            ["gauge", "decompose", "--group", "Sp2", "--l", "0", "--m", "25",
             "--k", "5", "--p", "5"]
        )
        assert result.payload["result"]["loops"] == 1
        assert "X_5" in result.payload["result"]["expression"]

    def test_pi_m0(self):
        result = ok(
            ["gauge", "pi", "--group", "Sp2", "--l", "0", "--m", "0",
             "--k", "1", "--n", "0"]
        )
        assert result.payload["result"]["group"] == "Z + Z + Z_2"

    def test_pi_plocal(self):
        result = ok(
            ["gauge", "pi", "--group", "Spin8", "--l", "0", "--m", "5",
             "--k", "0", "--n", "0", "--p", "5"]
        )
        assert result.payload["result"]["group"] == "Z_(5) + Z_(5) + Z_5"
        assert result.payload["citations"]

    def test_pi_unpointed_rows(self):
        result = ok(
            ["gauge", "pi", "--group", "Spin8", "--l", "0", "--m", "0", "--unpointed"]
        )
        assert result.payload["result"]["group"] == "Z + Z + Z"

    def test_pi_table_gap_exit_code(self):
        result = run(
            ["gauge", "pi", "--group", "SU4", "--l", "0", "--m", "0", "--n", "3"]
        )
        assert result.exit_code == EXIT_UNKNOWN
        assert result.payload["status"] == "unknown"

    def test_equiv_s7(self):
        result = ok(
            ["gauge", "equiv-s7", "--group", "SU2", "--k", "1", "--kp", "2"]
        )
        assert result.payload["result"]["verdict"] == "equivalent"

    def test_equiv_s7_out_of_scope(self):
        result = run(
            ["gauge", "equiv-s7", "--group", "SU3", "--k", "0", "--kp", "3",
             "--locality", "2"]
        )
        assert result.exit_code == EXIT_OUT_OF_SCOPE

    def test_equiv_su5(self):
        result = ok(["gauge", "equiv-su5", "--k", "1", "--kp", "121"])
        assert result.payload["result"]["verdict"] == "equivalent-locally"


class TestTablesAndOracle:
    def test_sphere_lookup(self):
        result = ok(["tables", "lookup", "--space", "S3", "--i", "6"])
        assert result.payload["result"]["group"] == "Z_12"
        assert "Toda" in result.payload["result"]["source"]

    def test_lie_lookup(self):
        result = ok(["tables", "lookup", "--group", "Sp2", "--i", "4"])
        assert result.payload["result"]["group"] == "Z_2"

    def test_moore_lookup(self):
        result = ok(["tables", "lookup", "--moore", "8"])
        assert result.payload["result"]["group"] == "Z_2 + Z_4 + Z_8"

    def test_lookup_gap_exit_code(self):
        result = run(["tables", "lookup", "--space", "S3", "--i", "25"])
        assert result.exit_code == EXIT_UNKNOWN

    def test_lookup_needs_exactly_one_target(self):
        result = run(["tables", "lookup", "--space", "S3", "--group", "Sp2"])
        assert result.exit_code == EXIT_USAGE

    def test_oracle_manifold(self):
        result = ok(["oracle", "homology", "--l", "3", "--m", "6"])
        assert result.payload["result"]["degrees"][3] == "Z_6"

    def test_oracle_custom_complex(self, tmp_path):
        path = tmp_path / "complex.txt"
        path.write_text(
            "cells: 1 1 1\nboundary 2:\n2\n",
            encoding="utf-8",
        )
        result = ok(["oracle", "homology", "--complex", str(path)])
        assert result.payload["result"]["degrees"] == ["Z", "Z_2", "0"]

    def test_oracle_missing_arguments(self):
        result = run(["oracle", "homology"])
        assert result.exit_code == EXIT_USAGE


class TestHarness:
    def test_unknown_subcommand_is_usage_error(self):
        result = run(["frobnicate"])
        assert result.exit_code == EXIT_USAGE

    def test_missing_subcommand(self):
        result = run([])
        assert result.exit_code == EXIT_USAGE

    def test_payload_schema_keys(self):
        result = run(["classify", "--group", "Sp2", "--l", "3", "--m", "5"])
        for key in ("command", "status", "result", "caveats", "theorem", "citations"):
            assert key in result.payload

    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "--group", "SU2", "--l", "0", "--m", "0"],
            ["tables", "lookup", "--space", "S3", "--i", "25"],
            ["frobnicate"],
            ["selftest"],
            ["gauge", "equiv-s7", "--group", "G2", "--k", "0", "--kp", "1"],
        ],
    )
    def test_every_payload_validates_against_the_schema(self, argv):
        result = run(argv)
        jsonschema.validate(result.payload, SCHEMA)

    def test_json_mode_via_subprocess(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bundlegauge", "--json", "classify",
             "--group", "Sp2", "--l", "3", "--m", "5"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["result"]["set"] == "Z_5"

    def test_exit_code_propagates_through_subprocess(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bundlegauge", "classify",
             "--group", "SU2", "--l", "0", "--m", "0"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
