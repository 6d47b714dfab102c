import csv
import subprocess
import sys

import numpy as np
import pytest

from zerocircle.cli import run
from zerocircle.errors import ParseError
from zerocircle.functions import parse_complex, parse_function_spec


def read_report(path):
    out = {}
    for line in (path / "report.txt").read_text().splitlines():
        k, _, v = line.partition("=")
        out[k] = v
    return out


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_parse_complex():
    assert parse_complex("1.5-2i") == 1.5 - 2j
    assert parse_complex("2+i") == 2 + 1j
    assert parse_complex("−3") == -3
    with pytest.raises(ParseError) as exc:
        parse_complex("abc", 4)
    assert exc.value.position == 4


def test_function_specs():
    f = parse_function_spec("exp:2")
    np.testing.assert_allclose(f.series(3).coeffs, [1, 2, 2, 4 / 3])
    g = parse_function_spec("geometric:0.5")
    assert abs(g(0.4) - 1.25) < 1e-15
    h = parse_function_spec("rational:1,1/1,-0.5")
    assert abs(h(0.2) - 1.2 / 0.9) < 1e-15
    np.testing.assert_allclose(parse_function_spec("1,2,3").series(4).coeffs, [1, 2, 3, 0, 0])
    with pytest.raises(ParseError):
        parse_function_spec("0,1")


def test_approx_poly(tmp_path):
    assert run(["approx-poly", "--fn", "exp", "--r", "0.4", "--eps", "1e-6", "--out", str(tmp_path)]) == 0
    rep = read_report(tmp_path)
    assert rep["command"] == "approx-poly"
    zeros = read_csv(tmp_path / "zeros.csv")
    assert all(abs(float(z["modulus"]) - 1) < 1e-12 for z in zeros)
    errs = [float(r["abs_error"]) for r in read_csv(tmp_path / "error_grid.csv")]
    assert max(errs) < 1e-6


def test_approx_blaschke(tmp_path):
    assert run(["approx-blaschke", "--fn", "exp", "--r", "0.5", "--delta", "0.1", "--eps", "1e-2", "--out", str(tmp_path)]) == 0
    zeros = read_csv(tmp_path / "zeros.csv")
    assert all(abs(float(z["modulus"]) - 0.5) < 1e-9 for z in zeros)
    assert int(read_report(tmp_path)["J"]) <= 60


def test_transport_and_rubinstein(tmp_path):
    assert run(["transport", "--fn", "exp", "--center", "0.3+0.1i", "--radius", "0.2", "--kind", "poly", "--eps", "0.05", "--out", str(tmp_path / "t")]) == 0
    assert run(["rubinstein", "--poly=-2,1", "--k", "12", "--out", str(tmp_path / "r")]) == 0
    zeros = read_csv(tmp_path / "r" / "roots.csv")
    assert len(zeros) == 13
    assert all(abs(float(z["modulus"]) - 1) < 1e-9 for z in zeros)


def test_rmt_commands(tmp_path):
    assert run(["rmt-sample", "--N", "4", "--samples", "50", "--seed", "1", "--out", str(tmp_path / "s")]) == 0
    assert len(read_csv(tmp_path / "s" / "phases.csv")) == 200
    assert run(["rmt-prob", "--fn", "exp:0", "--r", "0.1", "--eps", "0.05,0.1,0.2", "--N", "4", "--trials", "500", "--out", str(tmp_path / "p")]) == 0
    probs = [float(r["probability"]) for r in read_csv(tmp_path / "p" / "probability.csv")]
    assert probs == sorted(probs)


def test_exit_codes(tmp_path):
    assert run(["approx-poly", "--fn", "exp", "--out", str(tmp_path)]) == 2
    assert run(["approx-poly", "--fn", "0,1", "--r", "0.4", "--out", str(tmp_path)]) == 2
    assert run(["approx-poly", "--fn", "exp", "--r", "0.9", "--eps", "1e-15", "--J-max", "8", "--out", str(tmp_path)]) == 3


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "zerocircle", "rubinstein", "--poly", "3,1", "--k", "5", "--out", str(tmp_path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "coefficients.csv").exists()


def test_rubinstein_unicode_minus(tmp_path):
    # a leading unicode minus is not mistaken for an option flag
    assert run(["rubinstein", "--poly", "−2,1", "--k", "12", "--out", str(tmp_path)]) == 0
    assert float(read_report(tmp_path)["root_modulus_max_dev"]) < 1e-9
