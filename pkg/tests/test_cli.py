import json
import math

import pytest

from cstk import cli
from cstk.formats import format_complex, parse_complex


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def get_value(out, name):
    payload = json.loads(out)
    return parse_complex(dict(payload["rows"])[name])


class TestFormats:
    def test_roundtrip(self):
        for z in [1 + 0j, -0.25 + 0.125j, 3.7e-12 - 2.1e5j, 0.1j]:
            assert parse_complex(format_complex(z)) == z

    def test_plain_real(self):
        assert parse_complex("2.5") == 2.5 + 0j

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_complex("not-a-number")


class TestEval:
    def test_analytic_kernel_example(self, capsys):
        code, out = run(capsys, "eval", "kernel", "--analytic", "--beta", "0", "--z", "1+0i", "--x", "0")
        assert code == 0
        assert get_value(out, "B_beta(z,x)").real == pytest.approx(math.exp(-0.5), rel=1e-12)

    def test_poly_trivial(self, capsys):
        code, out = run(capsys, "eval", "poly", "--n", "0", "--m", "0", "--beta", "1", "--z", "2+1i")
        assert code == 0
        assert get_value(out, "H_{n,m}^(beta)") == pytest.approx(1.0)

    def test_overlap_diagonal(self, capsys):
        code, out = run(capsys, "eval", "overlap", "--m", "2", "--beta", "0.5", "--z", "0.3+0.1i", "--w", "0.3+0.1i")
        assert code == 0
        assert get_value(out, "overlap") == pytest.approx(1.0, abs=1e-10)

    def test_weight(self, capsys):
        code, out = run(capsys, "eval", "weight", "--beta", "0", "--x", "0")
        assert code == 0
        assert get_value(out, "omega_beta(x)").real == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-13)

    def test_numeric_failure_exit_code(self, capsys):
        code, _ = run(capsys, "--max-terms", "2", "eval", "norm", "--m", "0", "--beta", "0", "--z", "2+0i")
        assert code == 3

    def test_byte_identical_reruns(self, capsys):
        _, out1 = run(capsys, "eval", "overlap", "--m", "1", "--beta", "0.5", "--z", "0.4+0.2i", "--w", "0.1-0.3i")
        _, out2 = run(capsys, "eval", "overlap", "--m", "1", "--beta", "0.5", "--z", "0.4+0.2i", "--w", "0.1-0.3i")
        assert out1 == out2


class TestTable:
    def test_factorial_row(self, capsys):
        code, out = run(capsys, "--format", "csv", "table", "factorials", "--beta", "0", "--nmax", "3", "--mmax", "3")
        assert code == 0
        rows = {tuple(line.split(",")[:2]): line.split(",")[2] for line in out.splitlines()[1:]}
        assert float(rows[("3", "1")]) == pytest.approx(6.0)

    def test_eigenvalue_column(self, capsys):
        code, out = run(capsys, "--format", "csv", "table", "eigenvalues", "--beta", "2", "--nmax", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,x_n^beta"
        vals = [float(line.split(",")[1]) for line in lines[1:]]
        assert vals[0] == 0.0
        assert vals[1:] == [pytest.approx(n + 2.0) for n in range(1, 6)]

    def test_moments(self, capsys):
        code, out = run(capsys, "--format", "csv", "table", "moments", "--beta", "0", "--nmax", "4")
        assert code == 0
        vals = [float(line.split(",")[1]) for line in out.splitlines()[1:]]
        assert vals == [pytest.approx(v) for v in [1.0, 1.0, 2.0, 6.0, 24.0]]


class TestTransformCommand:
    def test_ground_state(self, capsys, tmp_path):
        fpath = tmp_path / "f.txt"
        fpath.write_text("# kind=coeffs beta=0\n1\n")
        tpath = tmp_path / "targets.txt"
        tpath.write_text("0+0i\n")
        code, out = run(capsys, "--format", "csv", "transform", "--input", str(fpath), "--m", "0", "--beta", "0", "--targets", str(tpath))
        assert code == 0
        value = parse_complex(out.splitlines()[1].split(",")[1])
        assert value == pytest.approx(1.0, rel=1e-9)

    def test_first_basis_is_linear(self, capsys, tmp_path):
        fpath = tmp_path / "f.txt"
        fpath.write_text("# kind=coeffs beta=0\n0\n1\n")
        tpath = tmp_path / "targets.txt"
        tpath.write_text("0.5+0i\n1+1i\n")
        code, out = run(capsys, "--format", "csv", "transform", "--input", str(fpath), "--m", "0", "--beta", "0", "--targets", str(tpath))
        assert code == 0
        rows = out.splitlines()[1:]
        for line in rows:
            z, v = (parse_complex(p) for p in line.split(","))
            assert v == pytest.approx(z, rel=1e-8)  # P~_{1,0}(z) = z

    def test_parse_error_exit(self, capsys, tmp_path):
        code, _ = run(capsys, "transform", "--input", str(tmp_path / "absent.txt"), "--targets", str(tmp_path / "t.txt"))
        assert code == 2


class TestVerifyCommand:
    def test_single_suite(self, capsys, tmp_path):
        out_dir = tmp_path / "reports"
        code, out = run(capsys, "--out", str(out_dir), "verify", "quadrature")
        assert code == 0
        assert "[PASS] quadrature" in out
        payload = json.loads((out_dir / "quadrature.json").read_text())
        assert payload["pass"] is True

    def test_unknown_suite(self, capsys):
        code, _ = run(capsys, "verify", "not-a-suite")
        assert code == 2

    def test_mmax_flag(self, capsys):
        code, out = run(capsys, "verify", "kernel-reduction", "--mmax", "2")
        assert code == 0
        assert "[PASS] kernel-reduction" in out


class TestConfig:
    def test_usage_error(self, capsys):
        code = cli.main(["eval", "poly", "--z", "zzz"])
        assert code == 2

    def test_config_file(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cstk.cfg"
        cfg.write_text("max_terms = 2\n")
        monkeypatch.setenv(cli.ENV_CONFIG, str(cfg))
        code, _ = run(capsys, "eval", "norm", "--m", "0", "--beta", "0", "--z", "2+0i")
        assert code == 3  # budget from config makes the series fail
        monkeypatch.delenv(cli.ENV_CONFIG)
        code, _ = run(capsys, "eval", "norm", "--m", "0", "--beta", "0", "--z", "2+0i")
        assert code == 0

    def test_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "cstk.cfg"
        cfg.write_text("max_terms = 2\n")
        code, _ = run(capsys, "--config", str(cfg), "--max-terms", "400", "eval", "norm", "--m", "0", "--beta", "0", "--z", "2+0i")
        assert code == 0

    def test_bad_config_key(self, capsys, tmp_path):
        cfg = tmp_path / "cstk.cfg"
        cfg.write_text("bogus = 1\n")
        code, _ = run(capsys, "--config", str(cfg), "eval", "poly")
        assert code == 2
