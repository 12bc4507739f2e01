import io

import numpy as np
import pytest

from symdiscord.cli import main
from symdiscord.states import bell_state


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def kv(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def test_analyze_bell_state():
    code, text = run(["analyze", "--c1", "1", "--c2", "-1", "--c3", "1"])
    assert code == 0
    d = kv(text)
    assert float(d["I"]) == pytest.approx(2.0, abs=1e-9)
    assert float(d["Q_S"]) == pytest.approx(1.0, abs=1e-9)


def test_analyze_zero_state():
    code, text = run(["analyze", "--mode", "numeric"])
    assert code == 0
    d = kv(text)
    assert all(float(d[q]) == 0 for q in ("I", "C_A", "C_B", "C_S", "Q_A", "Q_B", "Q_S", "D_AB"))


def test_analyze_both_mode_deltas():
    code, text = run(["analyze", "--c1", "0.6", "--a3", "0", "--b3", "0.3", "--mode", "both"])
    assert code == 0
    deltas = {k: float(v) for k, v in kv(text).items() if k.endswith("_delta")}
    assert set(deltas) == {"I_delta", "C_A_delta", "C_B_delta", "Q_A_delta", "Q_B_delta", "D_AB_delta"}
    assert max(abs(v) for v in deltas.values()) <= 1e-6


def test_analyze_analytic_mode_marks_missing():
    code, text = run(["analyze", "--c1", "0.6", "--b3", "0.3", "--mode", "analytic"])
    assert code == 0
    d = kv(text)
    assert d["C_S"] == "NA" and float(d["I"]) > 0


def test_analyze_invalid_state_exit_code(capsys):
    code, _ = run(["analyze", "--c1", "1", "--c2", "1", "--c3", "1"])
    assert code == 3
    assert "lambda_11" in capsys.readouterr().err


def test_analyze_matrix_file(tmp_path):
    path = tmp_path / "rho.csv"
    path.write_text("\n".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in bell_state().ravel()) + "\n")
    code, text = run(["analyze", "--matrix", str(path), "--mode", "numeric"])
    assert code == 0
    assert float(kv(text)["Q_A"]) == pytest.approx(1, abs=1e-9)


def test_analyze_matrix_errors(tmp_path):
    bad = tmp_path / "short.csv"
    bad.write_text("1,0\n0,0\n")
    assert run(["analyze", "--matrix", str(bad)])[0] == 2
    assert run(["analyze", "--matrix", str(tmp_path / "missing.csv")])[0] == 2
    neg = tmp_path / "neg.csv"
    m = np.diag([1.5, -0.5, 0, 0]).astype(complex)
    neg.write_text("\n".join(f"{z.real},{z.imag}" for z in m.ravel()))
    assert run(["analyze", "--matrix", str(neg)])[0] == 3


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run(["analyze", "--c1", "abc"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--samples", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["sweep", "--vary", "a3=oops"])
    assert exc.value.code == 2
    assert run(["sweep", "--vary", "a3=0:1:1"])[0] == 2


def test_sweep_to_file(tmp_path):
    out = tmp_path / "s.csv"
    code, _ = run(["sweep", "--family", "bell_diagonal", "--vary", "c1=0:1:6", "--quantity", "C_S", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "c1,value" and len(lines) == 7


def test_sweep_default_is_asymmetry_plane(tmp_path):
    out = tmp_path / "fig.csv"
    assert run(["sweep", "--out", str(out)])[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "a3,b3,value"
    assert len(lines) == 1 + 81 * 81


def test_sweep_unwritable_path(tmp_path):
    code, _ = run(["sweep", "--vary", "a3=-0.1:0.1:3", "--out", str(tmp_path / "no" / "such" / "dir.csv")])
    assert code == 4


def test_sweep_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--vary", "a3=-0.4:0.4:21", "--vary", "b3=-0.4:0.4:21", "--c1", "0.6"]
    run(args + ["--out", str(a)])
    run(args + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_small_run_is_deterministic():
    code1, text1 = run(["verify", "--seed", "7", "--samples", "3"])
    code2, text2 = run(["verify", "--seed", "7", "--samples", "3"])
    assert code1 == code2 == 0
    assert text1 == text2
    assert text1.strip().endswith("verify: PASS")
