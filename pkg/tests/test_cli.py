import json
import os
import subprocess
import sys

import numpy as np
import pytest

from bwspinor.cli import main
from bwspinor.fileio import read_amplitude_file


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_core_suite_passes(self, capsys):
        code, out, _ = run_cli(["verify", "--suite", "core", "--trials", "500"],
                               capsys)
        assert code == 0
        assert "trace_reversal_massive" in out
        assert "FAIL" not in out

    def test_impossible_tolerance_fails(self, capsys):
        code, out, _ = run_cli(["verify", "--suite", "core", "--trials", "50",
                                "--tol", "1e-30"], capsys)
        assert code == 1
        assert "FAIL" in out

    def test_bogus_suite_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "--suite", "bogus"])
        assert err.value.code == 2


class TestFrame:
    def test_rest_frame_report(self, capsys):
        code, out, _ = run_cli(["frame", "--p", "0,0,0", "--mass", "1",
                                "--nu", "1,0"], capsys)
        assert code == 0
        assert "0.7071068" in out

    def test_massless_flag(self, capsys):
        code, out, _ = run_cli(["frame", "--p", "0,0,1", "--mass", "0",
                                "--json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert abs(data["pi"][0][0] - 2 ** 0.25) < 1e-9
        assert abs(data["pi"][0][1]) < 1e-12

    def test_missing_nu_massive(self, capsys):
        code, _, err = run_cli(["frame", "--p", "0,0,0", "--mass", "1"], capsys)
        assert code == 2
        assert "--nu" in err


class TestPipelines:
    def test_synth_extract_roundtrip(self, tmp_path, capsys):
        amp = tmp_path / "amp.json"
        field = tmp_path / "field.json"
        amp2 = tmp_path / "amp2.json"
        code, _, _ = run_cli(["packet", "--n", "3", "--mass", "1.0",
                              "--out", str(amp), "--points", "5",
                              "--half-width", "2.0",
                              "--coeffs", "1,0.5j,-0.25,0.125"], capsys)
        assert code == 0
        assert run_cli(["synth", "--in", str(amp), "--out", str(field)],
                       capsys)[0] == 0
        assert run_cli(["extract", "--in", str(field), "--out", str(amp2)],
                       capsys)[0] == 0
        before = read_amplitude_file(amp)
        after = read_amplitude_file(amp2)
        assert np.max(np.abs(before.amplitudes.f - after.amplitudes.f)) < 1e-12

    def test_norm_direction_agreement(self, tmp_path, capsys):
        amp = tmp_path / "amp.json"
        field = tmp_path / "field.json"
        run_cli(["packet", "--n", "1", "--mass", "1.0", "--out", str(amp),
                 "--points", "6", "--half-width", "2.5"], capsys)
        run_cli(["synth", "--in", str(amp), "--out", str(field)], capsys)
        code, out, _ = run_cli(["norm", "--in", str(field), "--t", "standard",
                                "--t", "null-omega", "--t", "random:3",
                                "--standard-bw"], capsys)
        assert code == 0
        spread = float(out.split("max relative spread = ")[1].split()[0])
        assert spread < 1e-10
        ratio = float(out.split("ratio generalized/standard = ")[1].split()[0])
        assert abs(ratio - 2 ** -0.5) < 1e-9

    def test_schema_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"header": {"version": 9}}))
        code, _, err = run_cli(["synth", "--in", str(bad), "--out",
                                str(tmp_path / "x.json")], capsys)
        assert code == 2
        assert "/header/version" in err

    def test_unknown_direction_spec_usage_error(self, tmp_path, capsys):
        amp = tmp_path / "amp.json"
        field = tmp_path / "field.json"
        run_cli(["packet", "--n", "1", "--mass", "1.0", "--out", str(amp),
                 "--points", "4", "--half-width", "2.0"], capsys)
        run_cli(["synth", "--in", str(amp), "--out", str(field)], capsys)
        code, _, err = run_cli(["norm", "--in", str(field), "--t", "bogus"],
                               capsys)
        assert code == 2
        assert "bogus" in err

    def test_orthogonal_direction_names_sample(self, tmp_path, capsys):
        import bwspinor as bs
        field = tmp_path / "field.json"
        p = np.array([[np.sqrt(2.0), 0.0, 1.0, 0.0]])
        fr = bs.frame_massive(p, np.array([1.0, 0.0]))
        psi = bs.synth_massive(fr, bs.Amplitudes(1, 1.0, +1,
                                                 np.ones((1, 2)) + 0j))
        from bwspinor.fileio import write_field_file
        write_field_file(field, psi, np.array([1.0]))
        code, _, err = run_cli(["norm", "--in", str(field),
                                "--t", "fixed:0,1,0,0"], capsys)
        assert code == 1
        assert "sample" in err

    def test_norm_requires_weights(self, tmp_path, capsys):
        amp = tmp_path / "amp.json"
        field = tmp_path / "field.json"
        run_cli(["packet", "--n", "1", "--mass", "1.0", "--out", str(amp),
                 "--points", "4", "--half-width", "2.0"], capsys)
        run_cli(["synth", "--in", str(amp), "--out", str(field)], capsys)
        doc = json.loads(field.read_text())
        for sample in doc["samples"]:
            sample.pop("weight")
        field.write_text(json.dumps(doc))
        code, _, err = run_cli(["norm", "--in", str(field)], capsys)
        assert code == 2
        assert "weights" in err


class TestDeterminism:
    def test_norm_bit_identical_across_threads(self, tmp_path):
        amp = tmp_path / "amp.json"
        field = tmp_path / "field.json"
        env = dict(os.environ)
        subprocess.run([sys.executable, "-m", "bwspinor.cli", "packet", "--n", "2",
                        "--mass", "1.0", "--out", str(amp), "--points", "8",
                        "--half-width", "2.5"], check=True, env=env,
                       capture_output=True)
        subprocess.run([sys.executable, "-m", "bwspinor.cli", "synth", "--in",
                        str(amp), "--out", str(field)], check=True, env=env,
                       capture_output=True)
        outputs = []
        for workers in ("1", "2", "8"):
            env["BWSPINOR_THREADS"] = workers
            result = subprocess.run(
                [sys.executable, "-m", "bwspinor.cli", "norm", "--in", str(field),
                 "--t", "null-omega"], check=True, env=env, capture_output=True)
            outputs.append(result.stdout)
        assert outputs[0] == outputs[1] == outputs[2]
