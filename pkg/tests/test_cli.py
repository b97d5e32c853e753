import json

import pytest

from balines.cli import main, parse_range


def run(args):
    return main(args)


def test_parse_range():
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("2,4,6") == [2, 4, 6]
    assert parse_range("3") == [3]
    assert parse_range("1..2,5") == [1, 2, 5]


def test_construct_am1n(tmp_path):
    out = tmp_path / "am22.json"
    assert run(["construct", "am1n", "--m", "2", "--n", "2",
                "--precision", "256", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["e"] == ["-4/3", "1"]
    assert data["kind"] == "am1n"
    assert (tmp_path / "am22.json.manifest.json").exists()


def test_construct_twomult_and_tq(tmp_path):
    out = tmp_path / "tm.json"
    assert run(["construct", "twomult", "--m", "3", "--mt", "2", "--n", "4",
                "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["e"] is not None and len(data["e"]) == 4
    out2 = tmp_path / "tq.json"
    assert run(["construct", "tq", "--input", str(out), "--q", "3",
                "-o", str(out2)]) == 0
    expanded = json.loads(out2.read_text())
    assert len(expanded["lines"]) == 3 * len(data["lines"])


def test_construct_locus_and_random(tmp_path):
    out = tmp_path / "locus.json"
    assert run(["construct", "locus", "--mults", "2,1,1", "-o", str(out)]) == 0
    assert len(json.loads(out.read_text())["lines"]) == 3
    out2 = tmp_path / "rand.json"
    assert run(["construct", "random", "--m", "2", "--n", "2", "--seed", "1",
                "-o", str(out2)]) == 0
    data = json.loads(out2.read_text())
    assert all(l["alpha"] not in (None, "inf") for l in data["lines"][1:])


def test_certify_exit_codes(tmp_path):
    out = tmp_path / "c.json"
    run(["construct", "am1n", "--m", "4", "--n", "5", "-o", str(out)])
    assert run(["certify", "--input", str(out)]) == 0
    cert_path = tmp_path / "cert.json"
    assert run(["certify", "--family", "random", "--m", "2", "--n", "2",
                "--seed", "3", "-o", str(cert_path)]) == 1
    cert = json.loads(cert_path.read_text())
    assert cert["verdict"] == "fail"
    assert cert["max_residual_log2"] > -64


def test_certify_perturbed_fails(tmp_path):
    from balines.config import build_am1n, perturb_line

    cfg = perturb_line(build_am1n(3, 3, 256), 2, 1e-2)
    path = tmp_path / "pert.json"
    cfg.save(str(path))
    assert run(["certify", "--input", str(path)]) == 1


def test_hilbert_outputs(tmp_path):
    out = tmp_path / "h.json"
    csvp = tmp_path / "h.csv"
    code = run(["hilbert", "--m", "2", "--n", "2", "--D", "10",
                "-o", str(out), "--csv", str(csvp), "--check-closed-form"])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["coefficients"] == [1, 0, 1, 1, 2, 2, 4, 4, 5, 6, 7]
    assert data["gorenstein"] is True and data["M"] == -6
    rows = csvp.read_text().strip().splitlines()
    assert rows[0] == "degree,b"
    assert rows[1] == "0,1" and rows[3] == "2,1"


def test_hilbert_random_not_gorenstein(tmp_path):
    out = tmp_path / "hr.json"
    code = run(["hilbert", "--random", "--m", "2", "--n", "2", "--seed", "1",
                "-o", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["gorenstein"] is False
    code2 = run(["hilbert", "--random", "--m", "2", "--n", "2", "--seed", "1",
                 "-o", str(out), "--check-closed-form"])
    assert code2 == 1


def test_scan_gorenstein(tmp_path):
    out = tmp_path / "scan.json"
    assert run(["scan", "gorenstein", "--m", "1..2", "--n", "2..3",
                "--samples", "2", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["all_pass"] is True
    assert len(data["items"]) == 4 * 3


def test_scan_certify_tq(tmp_path):
    out = tmp_path / "scan2.json"
    assert run(["scan", "certify", "--family", "tq", "--m", "1..2",
                "--n", "2", "--q", "1..3", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["all_pass"] is True


def test_scan_darboux(tmp_path):
    out = tmp_path / "scan3.json"
    assert run(["scan", "darboux", "--m", "1..2", "--n", "2",
                "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["all_pass"] is True
    assert all(i["factorization"] == "exact-pass" for i in data["items"])


def test_determinism_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(["construct", "am1n", "--m", "3", "--n", "4", "-o", str(p)])
    assert a.read_text() == b.read_text()
    ra, rb = tmp_path / "ra.json", tmp_path / "rb.json"
    for p in (ra, rb):
        run(["construct", "random", "--m", "2", "--n", "3", "--seed", "42",
             "-o", str(p)])
    assert ra.read_text() == rb.read_text()


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["construct", "nonsense"])
    assert err.value.code == 2


def test_computation_error_exit_three(tmp_path):
    assert run(["construct", "twomult", "--m", "2", "--mt", "1", "--n", "3",
                "-o", str(tmp_path / "x.json")]) == 3


def test_jobs_flag(tmp_path):
    out = tmp_path / "scanj.json"
    assert run(["scan", "gorenstein", "--m", "1", "--n", "2", "--samples", "2",
                "--jobs", "2", "-o", str(out)]) == 0
    assert json.loads(out.read_text())["all_pass"] is True


def test_env_precision(monkeypatch, tmp_path):
    monkeypatch.setenv("BA_PRECISION", "128")
    from balines.cli import default_precision

    assert default_precision() == 128
    out = tmp_path / "p.json"
    assert run(["construct", "am1n", "--m", "1", "--n", "1",
                "--precision", str(default_precision()), "-o", str(out)]) == 0
    assert json.loads(out.read_text())["precision_bits"] == 128
