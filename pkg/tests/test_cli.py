import json

import pytest

from boolnl import from_anf, nonlinearity_nlp, parse_anf
from boolnl.cli import main, report_from_record, report_to_record, run_scaling

F3_ANF = "x1*x2+x1*x3+x2+1"
F5_ANF = "x1*x3*x4*x5 + x1*x2*x4 + x1*x4*x5 + x2*x3*x4 + x2*x4*x5 + x3*x4*x5 + x4*x5"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestNl:
    def test_all_methods_agree(self, capsys):
        code, out, _ = run(capsys, "nl", "--anf", F3_ANF, "--method", "all")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert all("N(f) = 2" in line for line in lines)

    def test_affine_truth_table(self, capsys):
        code, out, _ = run(capsys, "nl", "--tt", "0x6")
        assert code == 0
        assert "N(f) = 0" in out

    def test_five_var_example(self, capsys):
        code, out, _ = run(capsys, "nl", "--anf", F5_ANF)
        assert code == 0
        assert "N(f) = 4" in out
        assert "nearest: 0" in out

    def test_records_round_trip(self, capsys):
        code, out, _ = run(capsys, "nl", "--anf", F3_ANF, "--method", "nlp",
                           "--format", "records")
        assert code == 0
        record = json.loads(out.strip())
        f = from_anf(parse_anf(F3_ANF, 3))
        report = nonlinearity_nlp(f)
        assert record == report_to_record(report, 3)
        assert report_from_record(record) == report

    def test_disagreement_exit_code(self, capsys, monkeypatch):
        import boolnl.cli as cli

        def broken(f):
            rep = nonlinearity_nlp(f)
            return type(rep)(rep.value + 1, "walsh", rep.nearest)

        monkeypatch.setitem(cli._FULL_ENGINES, "walsh", broken)
        code, _, err = run(capsys, "nl", "--anf", F3_ANF, "--method", "all")
        assert code == 2
        assert "disagree" in err

    def test_brute_cap_warning(self, capsys):
        bits = "0" * (1 << 17)
        code, out, _ = run(capsys, "nl", "--tt", bits, "--method", "brute")
        assert code == 0
        assert "warning: brute skipped" in out


class TestNlp:
    def test_polynomial_text(self, capsys):
        code, out, _ = run(capsys, "nlp", "--tt", "0xe")
        assert code == 0
        assert out.strip() == "4*a0*a1*a2 - 2*a0 - 2*a1*a2 + 3"

    def test_distances(self, capsys):
        code, out, _ = run(capsys, "nlp", "--tt", "0xe", "--distances")
        assert out.strip().splitlines()[1] == "3,1,3,1,3,1,1,3"

    def test_zero_function_one_var(self, capsys):
        code, out, _ = run(capsys, "nlp", "--tt", "00")
        assert code == 0
        assert out.strip() == "-2*a0*a1 + 2*a0 + a1 + 0"

    def test_records(self, capsys):
        code, out, _ = run(capsys, "nlp", "--tt", "0xe", "--distances",
                           "--format", "records")
        rec = json.loads(out)
        assert rec["coeffs"] == [3, 0, 0, -2, -2, 0, 0, 4]
        assert rec["distances"] == [3, 1, 3, 1, 3, 1, 1, 3]


class TestConvert:
    def test_anf_to_tt(self, capsys):
        code, out, _ = run(capsys, "convert", "--anf", F3_ANF, "--to", "tt")
        assert out.strip() == "0xca"

    def test_tt_to_anf_round_trip(self, capsys):
        code, out, _ = run(capsys, "convert", "--tt", "0xca", "--to", "anf")
        assert parse_anf(out.strip(), 3) == parse_anf(F3_ANF, 3)

    def test_tt_to_nnf(self, capsys):
        code, out, _ = run(capsys, "convert", "--tt", "0x6", "--to", "nnf")
        assert out.strip() == "x1 + x2 - 2*x1*x2"

    def test_one_var_tt_renders_bits(self, capsys):
        code, out, _ = run(capsys, "convert", "--anf", "x1 + 1", "--to", "tt")
        assert out.strip() == "10"


class TestExportIdeal:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "export-ideal", "--tt", "0xe", "--kind", "N",
                           "--t", "1")
        assert code == 0
        assert out.splitlines()[0].startswith("# ideal kind=N n=2 t=1")
        assert "4*a0*a1*a2 - 2*a0 - 2*a1*a2 + 2" in out

    def test_file_and_limit(self, capsys, tmp_path):
        target = tmp_path / "ideal.txt"
        code, out, _ = run(capsys, "export-ideal", "--anf", F3_ANF, "--kind", "J",
                           "--t", "2", "--limit", "3", "--out", str(target))
        assert code == 0 and out == ""
        lines = target.read_text().splitlines()
        assert lines[0] == "# ideal kind=J n=3 t=2 generators=32 emitted=3 truncated=1"
        assert len(lines) == 4

    def test_header_only(self, capsys):
        code, out, _ = run(capsys, "export-ideal", "--tt", "0xe", "--t", "1",
                           "--limit", "0")
        assert len(out.strip().splitlines()) == 1


class TestInputHandling:
    def test_missing_source(self, capsys):
        code, _, err = run(capsys, "nl")
        assert code == 1 and "exactly one" in err

    def test_two_sources(self, capsys):
        code, _, err = run(capsys, "nl", "--anf", "x1", "--tt", "01")
        assert code == 1

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "nl", "--anf", "y1")
        assert code == 1 and "error" in err

    def test_bad_flag(self, capsys):
        code, _, err = run(capsys, "nl", "--anf", "x1", "--method", "magic")
        assert code == 1

    def test_file_input_sniffing(self, capsys, tmp_path):
        anf_file = tmp_path / "f.anf"
        anf_file.write_text(F3_ANF + "\n")
        code, out, _ = run(capsys, "nl", "--file", str(anf_file), "--method", "brute")
        assert code == 0 and "N(f) = 2" in out
        tt_file = tmp_path / "f.tt"
        tt_file.write_text("0xca\n")
        code2, out2, _ = run(capsys, "nl", "--file", str(tt_file), "--method", "brute")
        assert out2 == out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "nl", "--file", "/nonexistent/f.anf")
        assert code == 1


class TestBench:
    def test_small_run_records(self, capsys):
        code, out, _ = run(capsys, "bench", "--n-from", "3", "--n-to", "5",
                           "--samples", "3", "--method", "nlp,walsh",
                           "--format", "records")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        pairs = {(r["method"], r["n_lo"], r["n_hi"]) for r in rows if "method" in r}
        assert ("nlp", 3, 4) in pairs and ("walsh", 4, 5) in pairs
        for r in rows:
            if "model" in r:
                assert r["model"] == pytest.approx(
                    1 + __import__("math").log2((r["n_lo"] + 1) / r["n_lo"])
                )

    def test_text_table(self, capsys):
        code, out, _ = run(capsys, "bench", "--n-from", "3", "--n-to", "4",
                           "--samples", "2")
        assert code == 0
        assert "log2_ratio" in out and "3-4" in out

    def test_brute_cap_warnings(self, capsys):
        code, out, _ = run(capsys, "bench", "--n-from", "17", "--n-to", "18",
                           "--samples", "1", "--method", "brute")
        assert code == 0
        assert "brute skipped" in out

    def test_both_backends(self, capsys):
        from boolnl import available_backends

        code, out, _ = run(capsys, "bench", "--n-from", "3", "--n-to", "4",
                           "--samples", "2", "--backend", "both",
                           "--format", "records")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        backends = {r["backend"] for r in rows if "backend" in r}
        assert backends == set(available_backends())

    def test_run_scaling_deterministic_sampling(self):
        rows1, _ = run_scaling(3, 4, 2, 42, ("nlp",), "auto")
        rows2, _ = run_scaling(3, 4, 2, 42, ("nlp",), "auto")
        assert [
            (r["method"], r["n_lo"], r["n_hi"]) for r in rows1
        ] == [(r["method"], r["n_lo"], r["n_hi"]) for r in rows2]

    def test_model_column_value(self):
        import math

        rows, _ = run_scaling(9, 10, 1, 0, ("walsh",), "auto")
        assert rows[0]["model"] == pytest.approx(math.log2(10 * 2**10 / (9 * 2**9)))
        assert rows[0]["model"] == pytest.approx(1.152, abs=5e-4)
