"""Command-line interface: output formats, exit codes, file handling, and the
self-check battery."""

import subprocess
import sys

import pytest

from dkpscatter import Particle, Potential, scattering_coefficients, wavefunction
from dkpscatter.cli import _emit, main

POINT_ARGS = ["point", "--a", "5", "--b", "3", "--m", "1", "--E", "7"]
SWEEP_ARGS = ["sweep", "--a", "5", "--b", "3", "--m", "1"]


def _parse_point(out: str) -> dict:
    pairs = {}
    for line in out.strip().splitlines():
        key, _, val = line.partition(" = ")
        pairs[key] = val
    return pairs


class TestPoint:
    def test_output_fields(self, capsys):
        assert main(POINT_ARGS) == 0
        pairs = _parse_point(capsys.readouterr().out)
        assert pairs["E"] == "7"
        assert pairs["region"] == "I"
        res = scattering_coefficients(Potential(5.0, 3.0), Particle(1.0), 7.0)
        assert abs(float(pairs["R"]) - res.R) <= 1e-11
        assert abs(float(pairs["T"]) - res.T) <= 1e-11
        assert abs(float(pairs["nu"]) - 1.993043457183566) <= 1e-11
        assert abs(float(pairs["mu"]) - 0.2886751345948129) <= 1e-12
        assert abs(float(pairs["R+T-1"])) <= 1e-11

    def test_evanescent_momentum_rendered_complex(self, capsys):
        assert main(["point", "--a", "5", "--b", "3", "--m", "1", "--E", "5"]) == 0
        pairs = _parse_point(capsys.readouterr().out)
        assert pairs["mu"].endswith("j")
        assert pairs["R"] == "1" and pairs["T"] == "0"

    def test_boundary_energy_fails(self, capsys):
        assert main(["point", "--a", "5", "--b", "3", "--m", "1", "--E", "6"]) == 1
        err = capsys.readouterr().err
        assert err.startswith("error:")

    def test_bad_mass_fails(self, capsys):
        assert main(["point", "--a", "5", "--b", "3", "--m", "-1", "--E", "7"]) == 1
        assert "error:" in capsys.readouterr().err


class TestSweep:
    def test_header_and_roundtrip(self, capsys):
        args = SWEEP_ARGS + ["--emin", "6.5", "--emax", "9.5", "--steps", "4"]
        assert main(args) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "E,R,T,unitarity_defect,region"
        assert len(lines) == 5
        pot, par = Potential(5.0, 3.0), Particle(1.0)
        for line in lines[1:]:
            fields = line.split(",")
            res = scattering_coefficients(pot, par, float(fields[0]))
            # repr round-trip: the parsed floats must be bitwise identical
            assert float(fields[1]) == res.R
            assert float(fields[2]) == res.T
            assert fields[4] == res.region.token

    def test_blocked_band_rows_exact(self, capsys):
        args = SWEEP_ARGS + ["--emin", "4.2", "--emax", "5.8", "--steps", "3"]
        assert main(args) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        for line in lines[1:]:
            fields = line.split(",")
            assert fields[1] == "1.0" and fields[2] == "0.0"
            assert fields[4] == "II"

    def test_guarded_energies_logged_and_skipped(self, capsys):
        args = SWEEP_ARGS + ["--emin", "3.9999999996",
                             "--emax", "4.0000000004", "--steps", "3"]
        assert main(args) == 0
        captured = capsys.readouterr()
        assert captured.out.strip().splitlines() == ["E,R,T,unitarity_defect,region"]
        skips = [l for l in captured.err.splitlines() if l.startswith("skipping E = ")]
        assert len(skips) == 3
        assert "within boundary guard" in skips[0]

    def test_output_file_byte_stable(self, tmp_path):
        first = tmp_path / "sweep1.csv"
        second = tmp_path / "sweep2.csv"
        args = SWEEP_ARGS + ["--emin", "1.1", "--emax", "3.9", "--steps", "7"]
        assert main(args + ["--out", str(first)]) == 0
        assert main(args + ["--out", str(second)]) == 0
        blob = first.read_bytes()
        assert blob == second.read_bytes()
        assert b"\r" not in blob and blob.endswith(b"\n")

    def test_unwritable_output_path(self, tmp_path, capsys):
        target = tmp_path / "missing_dir" / "sweep.csv"
        args = SWEEP_ARGS + ["--emin", "6.5", "--emax", "9.5", "--steps", "3",
                             "--out", str(target)]
        assert main(args) == 1
        assert "error:" in capsys.readouterr().err
        assert not target.exists()

    def test_degenerate_window_rejected(self, capsys):
        args = SWEEP_ARGS + ["--emin", "3.0", "--emax", "2.0", "--steps", "5"]
        assert main(args) == 1
        assert "error:" in capsys.readouterr().err


class TestRegions:
    def test_band_listing(self, capsys):
        assert main(["regions", "--a", "2", "--m", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == [
            "boundaries: -3 -1 1 3",
            "V: E < -3",
            "IV: -3 < E < -1",
            "III: -1 < E < 1",
            "II: 1 < E < 3",
            "I: E > 3",
        ]

    def test_coalesced_thresholds(self, capsys):
        # a = m: the superradiant band closes to a point
        assert main(["regions", "--a", "1", "--m", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "boundaries: -2 0 0 2"
        assert "(degenerate band at E = 0: empty)" in lines


class TestWavefunctionCommand:
    def test_rows_match_library(self, capsys):
        args = ["wavefunction", "--a", "5", "--b", "3", "--m", "1", "--E", "7",
                "--xmin", "-1", "--xmax", "1", "--samples", "5",
                "--kind", "transmitted"]
        assert main(args) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "x,re_psi,im_psi,re_phi,im_phi,re_theta,im_theta"
        assert len(lines) == 6
        pot, par = Potential(5.0, 3.0), Particle(1.0)
        for line in lines[1:]:
            f = [float(v) for v in line.split(",")]
            trip = wavefunction(f[0], "transmitted", pot, par, 7.0)
            assert complex(f[1], f[2]) == trip.psi
            assert complex(f[3], f[4]) == trip.phi
            assert complex(f[5], f[6]) == trip.theta

    def test_failure_mid_grid_leaves_no_file(self, tmp_path, capsys):
        # the last samples fall outside the overflow window
        target = tmp_path / "wave.csv"
        args = ["wavefunction", "--a", "5", "--b", "3", "--m", "1", "--E", "7",
                "--xmin", "0", "--xmax", "150", "--samples", "5",
                "--kind", "transmitted", "--out", str(target)]
        assert main(args) == 1
        assert "error:" in capsys.readouterr().err
        assert not target.exists()

    def test_unknown_kind_is_usage_error(self):
        args = ["wavefunction", "--a", "5", "--b", "3", "--m", "1", "--E", "7",
                "--xmin", "0", "--xmax", "1", "--samples", "3",
                "--kind", "sideways"]
        with pytest.raises(SystemExit) as exc:
            main(args)
        assert exc.value.code == 2


class TestEmit:
    def test_mid_write_failure_removes_file(self, tmp_path):
        target = tmp_path / "partial.csv"

        def rows():
            yield "header"
            raise RuntimeError("source died")

        with pytest.raises(RuntimeError):
            _emit(rows(), str(target))
        assert not target.exists()


class TestVerify:
    def test_quick_battery_passes(self, capsys):
        assert main(["verify", "--quick"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 6
        assert "FAIL" not in out
        assert "all 6 checks passed" in out

    def test_deliberate_sign_error_is_caught(self, capsys):
        assert main(["verify", "--quick", "--flip-mu-sign"]) == 1
        out = capsys.readouterr().out
        assert "FAIL oracle-equivalence" in out
        assert "of 6 checks failed" in out


class TestUsage:
    def test_missing_argument(self):
        with pytest.raises(SystemExit) as exc:
            main(["point", "--a", "5", "--b", "3", "--m", "1"])
        assert exc.value.code == 2

    def test_no_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "dkpscatter.cli"] + POINT_ARGS,
            capture_output=True, text=True, timeout=300)
        assert proc.returncode == 0
        assert "R = " in proc.stdout
        assert "region = I" in proc.stdout
