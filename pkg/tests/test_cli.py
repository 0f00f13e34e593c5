import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from pathway_entropy.cli import RunConfig, main
from pathway_entropy.entropy import gaussian_pdf


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


# -- entropy ------------------------------------------------------------------------


def test_entropy_distribution(tmp_path, capsys):
    f = tmp_path / "p.csv"
    f.write_text("0.5,0.5\n")
    code, out, _ = run(capsys, "entropy", str(f), "--kind", "shannon")
    assert code == 0
    table = rows(out)
    assert table[0] == ["kind", "alpha", "entropy"]
    assert float(table[1][2]) == pytest.approx(0.693147, abs=1e-6)


def test_entropy_alpha_sweep(tmp_path, capsys):
    f = tmp_path / "p.csv"
    f.write_text("p\n0.2\n0.3\n0.5\n")
    code, out, _ = run(capsys, "entropy", str(f), "--kind", "renyi", "--alpha", "0.5,2,3")
    assert code == 0
    assert [r[1] for r in rows(out)[1:]] == ["0.5", "2", "3"]


def test_entropy_gaussian_pdf_file(tmp_path, capsys):
    pdf = gaussian_pdf(1.0)
    f = tmp_path / "pdf.csv"
    f.write_text("x,f\n" + "".join(f"{x!r},{v!r}\n" for x, v in zip(pdf.x.tolist(), pdf.f.tolist())))
    code, out, _ = run(capsys, "entropy", str(f), "--pdf", "--kind", "mathai", "--alpha", "1.2")
    assert code == 0
    assert float(rows(out)[1][2]) == pytest.approx(1.268159, abs=1e-4)


def test_entropy_malformed(tmp_path, capsys):
    f = tmp_path / "bad.csv"
    f.write_text("0.5\n0.25\nabc\n")
    code, _, err = run(capsys, "entropy", str(f), "--kind", "shannon")
    assert code != 0
    assert ":3:" in err
    f.write_text("0.5,0.6\n")
    code, _, err = run(capsys, "entropy", str(f), "--kind", "shannon")
    assert code != 0 and "sum" in err


def test_parse_error_exit(capsys):
    code, _, _ = run(capsys, "entropy")
    assert code == 2
    code, _, _ = run(capsys, "pathway", "eval", "power", "--eta", "x", "--x", "1")
    assert code == 2


# -- generate / dea ---------------------------------------------------------------------


def test_generate_requires_seed(capsys):
    code, _, _ = run(capsys, "generate", "gaussian", "--n", "100")
    assert code == 2


def test_generate_then_dea(tmp_path, capsys):
    series = tmp_path / "xi.csv"
    assert main(["generate", "gaussian", "--n", "65536", "--seed", "7", "-o", str(series)]) == 0
    summary = tmp_path / "fit.json"
    curve = tmp_path / "curve.csv"
    code, _, _ = run(capsys, "dea", "--input", str(series), "-o", str(curve), "--summary", str(summary))
    assert code == 0
    fit = json.loads(summary.read_text())
    assert fit["scaling_fit"]["delta"] == pytest.approx(0.5, abs=0.05)
    assert "nonstationary_fit" in fit and "hurst" in fit
    table = rows(curve.read_text())
    assert table[0] == ["t", "S"] and len(table) > 9


def test_dea_generate_matches_file_input(tmp_path, capsys):
    series = tmp_path / "xi.csv"
    main(["generate", "stable", "--n", "4096", "--seed", "2", "-o", str(series)])
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "dea", "--input", str(series), "-o", str(a), "--summary", str(tmp_path / "s1.json"))
    run(capsys, "dea", "--generate", "stable", "--n", "4096", "--seed", "2", "-o", str(b),
        "--summary", str(tmp_path / "s2.json"))
    # CSV text round trip keeps 15 significant digits, so the curves agree closely but not bitwise
    ta, tb = rows(a.read_text())[1:], rows(b.read_text())[1:]
    assert [r[0] for r in ta] == [r[0] for r in tb]
    assert np.allclose([float(r[1]) for r in ta], [float(r[1]) for r in tb], atol=1e-9)


def test_dea_byte_identical(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"c{i}.csv"
        run(capsys, "dea", "--generate", "gaussian", "--n", "8192", "--seed", "1", "--indicator",
            "mathai_extensive", "--alpha", "0.8", "-o", str(path), "--summary", str(tmp_path / f"s{i}.json"))
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert (tmp_path / "s0.json").read_bytes() == (tmp_path / "s1.json").read_bytes()


def test_dea_generate_needs_seed(capsys):
    code, _, err = run(capsys, "dea", "--generate", "gaussian")
    assert code == 2 and "seed" in err


def test_dea_empty_input(tmp_path, capsys):
    f = tmp_path / "empty.csv"
    f.write_text("")
    code, _, _ = run(capsys, "dea", "--input", str(f))
    assert code != 0


def test_figure1(capsys):
    code, out, _ = run(capsys, "dea", "--figure1", "mathai", "--count", "20")
    assert code == 0
    table = rows(out)
    assert table[0] == ["t", "S_alpha_0.8", "S_alpha_1.0", "S_alpha_1.2"]
    data = np.array(table[1:], dtype=float)
    assert data.shape == (20, 4)
    assert np.all(np.diff(data[:, 1:], axis=0) > 0)
    assert data[0, 2] == pytest.approx(0.5 + 0.5 * math.log(math.pi), rel=1e-14)


# -- pathway ---------------------------------------------------------------------------------


def test_pathway_eval_examples(capsys):
    code, out, _ = run(capsys, "pathway", "eval", "power", "--eta", "1", "--alpha", "0", "--a", "1", "--rho", "1", "--x", "1")
    assert code == 0 and float(rows(out)[1][2]) == 0.5
    code, out, _ = run(capsys, "pathway", "eval", "rl-cos", "--eta", "1", "--x", "1")
    assert float(rows(out)[1][2]) == pytest.approx(0.841471, abs=1e-6)
    code, out, _ = run(capsys, "pathway", "eval", "bessel", "--eta", "2", "--alpha", "0.5", "--rho", "1.5",
                       "--p", "0.5", "--c", "1", "--x", "1")
    assert code == 0


def test_pathway_verify(capsys):
    code, out, err = run(capsys, "pathway", "verify", "trig")
    assert code == 0 and "PASS" in err
    table = rows(out)
    assert [r[0] for r in table[1:]] == ["cos", "cosh", "sin", "sinh"]
    assert all(float(r[2]) <= 1e-7 for r in table[1:])


def test_pathway_verify_fail_exit(capsys):
    code, _, err = run(capsys, "pathway", "verify", "cos", "--gate", "1e-30")
    assert code == 1 and "FAIL" in err


def test_pathway_invalid_params(capsys):
    code, _, err = run(capsys, "pathway", "eval", "power", "--eta", "-1", "--x", "1")
    assert code == 2 and "eta" in err


# -- kinetics ---------------------------------------------------------------------------------


def test_kinetics_ml_equals_exp(capsys):
    _, exp_out, _ = run(capsys, "kinetics", "exp", "--t-max", "10", "--count", "21")
    _, ml_out, _ = run(capsys, "kinetics", "ml", "--nu", "1", "--t-max", "10", "--count", "21")
    e = np.array(rows(exp_out)[1:], dtype=float)
    m = np.array(rows(ml_out)[1:], dtype=float)
    assert np.allclose(e, m, rtol=0, atol=1e-10)


def test_kinetics_pathway_example(capsys):
    code, out, _ = run(capsys, "kinetics", "pathway", "--mu", "1", "--nu", "1", "--b", "1", "--alpha", "2", "--t", "1")
    assert code == 0 and float(rows(out)[1][1]) == 0.5


def test_kinetics_mixture_check(capsys):
    code, out, err = run(capsys, "kinetics", "mixture-check")
    assert code == 0 and "PASS" in err
    assert len(rows(out)) == 1 + 4 * 2 * 2 * 2
    code, _, err = run(capsys, "kinetics", "mixture-check", "--literal")
    assert code == 1 and "FAIL" in err


# -- config round trip -----------------------------------------------------------------------


def test_run_config_round_trip():
    cfg = RunConfig("dea", None, {"seed": 7, "alpha": 0.1 + 0.2, "t": [1.5, 2.0], "flag": None}, "o.csv", None)
    assert RunConfig.from_json(cfg.to_json()) == cfg


def test_save_and_replay_config(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    code = main(["kinetics", "ml", "--nu", "0.5", "--log-grid", "--t-min", "0.01", "--t-max", "100",
                 "-o", str(first), "--save-config", str(cfg_path)])
    assert code == 0
    cfg = json.loads(cfg_path.read_text())
    cfg["output"] = str(second)
    cfg_path.write_text(json.dumps(cfg))
    assert main(["--config", str(cfg_path)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_bad_config(tmp_path, capsys):
    f = tmp_path / "cfg.json"
    f.write_text('{"command": "dea", "oops": 1}')
    code, _, err = run(capsys, "--config", str(f))
    assert code == 2 and "oops" in err


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "pathway_entropy.cli", "pathway", "eval", "power", "--eta", "1",
                           "--x", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "power,1,0.5"
