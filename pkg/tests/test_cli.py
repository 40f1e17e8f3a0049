import csv
import io

import pytest

from partdens.cli import run


def out_of(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_count_examples(capsys):
    assert out_of(capsys, ["count", "--n", "10"])[:2] == (0, "42\n")
    assert out_of(capsys, ["count", "--n", "3", "--set", "2"])[:2] == (0, "0\n")
    assert out_of(capsys, ["count", "--n", "7", "--set", "1, 3"])[:2] == (0, "3\n")
    assert out_of(capsys, ["count", "--n", "4", "--k", "2"])[:2] == (0, "2\n")
    assert out_of(capsys, ["count", "--n", "7", "--set", "1-7", "--oracle"])[:2] == (0, "15\n")
    code, out, _ = out_of(capsys, ["count", "--n", "100", "--set", "1-2", "--log"])
    assert code == 0 and out.strip() == "3.93182563272"


def test_count_errors(capsys):
    assert run(["count", "--n", "3", "--set", "2-"]) == 2
    assert run(["count", "--n", "-1"]) == 2
    assert run(["count"]) == 2
    assert run(["count", "--n", "61", "--set", "1", "--oracle"]) == 2
    assert run(["bogus"]) == 2
    assert run([]) == 2


def test_audit_shift_identity_sweep(capsys):
    code, out, _ = out_of(capsys, ["audit", "--lemma", "shift-identity", "--nmax", "60", "--kmax", "12"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["lemma_id"] == "shift-identity" and rows[0]["pass"] == "true"


def test_audit_single_points(capsys):
    assert run(["audit", "--lemma", "szekeres", "--gamma", "0.9", "--n", "1000"]) == 0
    assert run(["audit", "--lemma", "pigeonhole", "--set", "1,2,7,8", "--m", "8"]) == 0
    assert run(["audit", "--lemma", "interval-upper", "--beta", "1/2", "--n", "4", "--m", "7"]) == 0
    assert run(["audit", "--lemma", "dixmier-nicolas-upper", "--lambda", "2", "--n", "400"]) == 0
    assert run(["audit", "--lemma", "liminf-lower-main", "--alpha", "0.01", "--n", "400", "--m", "25600"]) == 0
    assert run(["audit", "--lemma", "fbeta-peak", "--beta", "0.3"]) == 0
    assert run(["audit", "--lemma", "entropy-binomial", "--nmax", "40"]) == 0


def test_audit_unmet_preconditions_is_usage_error(capsys):
    code, _, err = out_of(capsys, ["audit", "--lemma", "szekeres", "--gamma", "0.9", "--n", "100"])
    assert code == 2 and "log(en)" in err
    assert run(["audit", "--lemma", "szekeres", "--n", "100"]) == 2
    assert run(["audit", "--lemma", "nope"]) == 2
    code, _, err = out_of(capsys, ["audit", "--lemma", "dixmier-nicolas-lower", "--lambda", "4", "--n", "2500"])
    assert code == 2 and "loglog(lambda)>=4" in err


def test_audit_failure_exit_code(capsys, monkeypatch):
    from partdens import audits as au

    real = au.audit_trivial_bound

    def broken(A, n):
        r = real(A, n)
        return au.BoundReport(r.lemma_id, r.params, r.lhs, r.rhs, -1.0, True, False)

    monkeypatch.setattr(au, "audit_trivial_bound", broken)
    assert run(["audit", "--lemma", "trivial-bound", "--set", "1-2", "--n", "4"]) == 1


def test_construct(capsys):
    code, out, _ = out_of(capsys, ["construct", "--family", "upper", "--beta", "1/2", "--cap", "20"])
    assert code == 0
    assert out == "n,prefix_count,density\n2,1,0.5\n4,3,0.75\n16,11,0.6875\n"
    code, out, _ = out_of(capsys, ["construct", "--family", "lower", "--alpha", "0.5", "--n0", "4",
                                   "--cap", "8", "--show-set"])
    assert (code, out) == (0, "1-2,4-8\n")
    assert run(["construct", "--family", "lower", "--alpha", "0.5", "--n0", "2", "--cap", "8"]) == 2
    assert run(["construct", "--beta", "0.5", "--cap", "8"]) == 2
    assert run(["construct", "--family", "upper", "--beta", "1/2", "--cap", "20", "--checkpoints", "21"]) == 2


def test_ratio(capsys, tmp_csv):
    code = run(["ratio", "--set", "1-50", "--alpha", "1", "--samples", "10,40", "--output", str(tmp_csv)])
    assert code == 0
    lines = tmp_csv.read_text().splitlines()
    assert lines[0] == "m,log_pA,log_p_alpha_m,ratio"
    assert lines[1].endswith(",1") and len(lines) == 3
    assert run(["ratio", "--set", "1", "--alpha", "1/32", "--samples", "32"]) == 2
    assert run(["ratio", "--alpha", "0.5", "--samples", "4"]) == 2


def test_hr(capsys):
    code, out, _ = out_of(capsys, ["hr", "--n", "6,100"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == ["6", "100"]
    assert float(rows[1]["hr_log"]) == pytest.approx(19.11, abs=0.01)


def test_bad_threads(capsys):
    assert run(["count", "--n", "3", "--threads", "0"]) == 2


@pytest.mark.slow
def test_verify_all_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["verify-all", "--skip-determinism", "--output", str(a)]) == 0
    assert run(["verify-all", "--skip-determinism", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 18 and "[FAIL]" not in out
