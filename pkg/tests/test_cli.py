import json
import subprocess
import sys

from lgapery import cli


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip() else None
    err = json.loads(captured.err) if captured.err.strip() else None
    return code, out, err


class TestCatalogCommand:
    def test_catalog_lists_four_entries(self, capsys):
        code, out, _ = run_cli(capsys, ["catalog"])
        assert code == 0
        assert len(out["entries"]) == 4
        v18 = next(e for e in out["entries"] if e["name"] == "V18")
        assert v18["phi"] == "(x+y+z)*(x+y+z+x*y+x*z+y*z+x*y*z)/(x*y*z)"
        assert v18["expected_symbol"] == ["-27", "-18", "1"]
        assert v18["expected_M"] == "-27"
        assert v18["expected_basis"] == "pi3_over_sqrt3"


class TestRun:
    def test_v12_full_pipeline(self, capsys):
        code, out, _ = run_cli(capsys, ["run", "V12"])
        assert code == 0
        assert out["symbol"] == ["1", "-34", "1"]
        assert out["involution"] == {"exists": True, "M": "1"}
        assert out["tempered"]["tempered"] is True
        assert out["tempered"]["reflexive"] is True
        assert out["periods"]["a"][:5] == ["1", "5", "73", "1445", "33001"]
        rec = out["apery"]["recognized"]
        assert rec["coefficient"] == "1/6" and rec["basis"] == "zeta3"
        assert out["apery"]["limit"].startswith("0.2003428171932657142332896935852")

    def test_periods_only_on_polynomial_text(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["run", "x+y+z+1/(x*y*z)", "--periods-only", "--terms", "8"])
        assert code == 0
        assert out["periods"]["a"] == ["1", "0", "0", "0", "24", "0", "0", "0", "2520"]
        assert "operator" not in out

    def test_determinism_byte_identical(self, capsys):
        code1 = cli.main(["run", "V16"])
        first = capsys.readouterr().out
        code2 = cli.main(["run", "V16"])
        second = capsys.readouterr().out
        assert code1 == code2 == 0
        assert first == second

    def test_timings_flag_adds_field(self, capsys):
        code, out, _ = run_cli(capsys, ["run", "R1", "--timings"])
        assert code == 0
        assert "timings" in out and "periods" in out["timings"]

    def test_oracle_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, ["periods", "V12", "--discovery-terms", "6", "--oracle"])
        assert code == 0
        assert out["oracle_check"] == {"checked_terms": 6, "match": True}


class TestSubcommands:
    def test_periods_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, ["periods", "x+y+z+1/(x*y*z)", "--terms", "4"])
        assert code == 0
        assert set(out) == {"phi", "a"}
        assert out["a"] == ["1", "0", "0", "0", "24"]

    def test_pfop(self, capsys):
        code, out, _ = run_cli(capsys, ["pfop", "V12"])
        assert code == 0
        op = out["operator"]
        assert (op["order"], op["degree"]) == (3, 2)
        assert op["coeffs"] == [["0", "0", "0", "1"],
                                ["-5", "-27", "-51", "-34"],
                                ["1", "3", "3", "1"]]
        assert out["recurrence"][0] == "n^3"

    def test_singular(self, capsys):
        code, out, _ = run_cli(capsys, ["singular", "V16"])
        assert code == 0
        pts = out["singular_points"]["finite_points"]
        assert {(p["rational"], p["coefficient"], p["radicand"])
                for p in pts} == {("12", "8", 2), ("12", "-8", 2)}
        assert out["involution"]["M"] == "16"

    def test_tempered_negative_control(self, capsys):
        code, out, _ = run_cli(capsys, ["tempered", "x+y+z+1/(x*y*z)+3*x/y"])
        assert code == 0
        assert out["tempered"] is False
        assert out["reflexive"] is False
        assert out["failures"]

    def test_apery_subcommand(self, capsys):
        code, out, _ = run_cli(capsys, ["apery", "R1", "--digits", "40"])
        assert code == 0
        rec = out["apery"]["recognized"]
        assert (rec["coefficient"], rec["basis"]) == ("7/24", "zeta3")

    def test_check_v16(self, capsys):
        code, out, _ = run_cli(capsys, ["check-v16", "--digits", "20"])
        assert code == 0
        assert out["passed"] is True
        assert out["recognized"] == {"coefficient": "7", "basis": "zeta3"}

    def test_check_v16_corrupted_negative_control(self, capsys):
        code, out, _ = run_cli(
            capsys, ["check-v16", "--digits", "20", "--corrupt-integrand"])
        assert code == 6
        assert out["passed"] is False
        assert out["recognized"] is None
        assert float(out["residual_vs_7zeta3"]) > 1e-4


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        code, _out, err = run_cli(capsys, ["run", "x ++ y"])
        assert code == 2
        assert err["error"]["stage"] == "parse"

    def test_geometry_error_is_3(self, capsys):
        code, _out, err = run_cli(capsys, ["tempered", "x + 1/x"])
        assert code == 3
        assert err["error"]["stage"] == "geometry"

    def test_discovery_failure_is_4(self, capsys):
        # Too few terms for any candidate in the box.
        code, _out, err = run_cli(
            capsys, ["pfop", "V12", "--discovery-terms", "5"])
        assert code == 4
        assert err["error"]["stage"] == "discovery"

    def test_apery_refusal_is_5(self, capsys):
        code, _out, err = run_cli(
            capsys, ["apery", "x+y+z+1/(x*y*z)", "--discovery-terms", "41"])
        assert code == 5
        assert err["error"]["stage"] == "apery"
        assert "|t1| = |t2|" in err["error"]["message"]

    def test_recognition_absent_is_6(self, capsys):
        code, _out, err = run_cli(
            capsys,
            ["apery", "V12", "--max-denominator", "1", "--require-recognition"])
        assert code == 6
        assert err["error"]["stage"] == "recognition"


class TestConsoleScript:
    def test_installed_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "lgapery.cli", "catalog"],
            capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0
        data = json.loads(proc.stdout)
        assert len(data["entries"]) == 4
