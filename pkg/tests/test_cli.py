import io

import pytest

from rmenum.cli import main
from rmenum.oracle import brute_force_distribution
from rmenum.wenum import distribution_text, read_distribution


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_brute_writes_expected_file(tmp_path, capsys):
    out = tmp_path / "r13.txt"
    code, stdout, _ = run(capsys, "brute", "--r", "1", "--m", "3", "--out", str(out))
    assert code == 0
    assert "total 16 = 2^4 ok" in stdout
    lines = out.read_text().splitlines()
    assert "0 1" in lines and "4 14" in lines and "8 1" in lines


def test_brute_stdout_round_trips(tmp_path, capsys):
    code, stdout, _ = run(capsys, "brute", "--r", "2", "--m", "5")
    assert code == 0
    assert "2^16" in stdout
    dist_lines = [ln for ln in stdout.splitlines() if not ln.startswith("total")]
    assert read_distribution(io.StringIO("\n".join(dist_lines))) == brute_force_distribution(2, 5)


def test_brute_cap_error(capsys):
    code, _, stderr = run(capsys, "brute", "--r", "3", "--m", "8")
    assert code == 2
    assert "exceeds the cap" in stderr


def test_coset_prints_polynomials(capsys):
    code, stdout, _ = run(capsys, "coset", "--anf", "0", "--r", "1", "--m", "3")
    assert code == 0
    assert stdout.strip() == "1 + 14z^4 + z^8"

    code, stdout, _ = run(capsys, "coset", "--anf", "12+34", "--r", "1", "--m", "4")
    assert code == 0
    assert stdout.strip() == "16z^6 + 16z^10"


def test_coset_rejects_malformed_anf(capsys):
    code, _, stderr = run(capsys, "coset", "--anf", "12+12", "--r", "1", "--m", "4")
    assert code == 2
    assert "12" in stderr  # names the offending token


def test_coset_out_file_round_trips(tmp_path, capsys):
    out = tmp_path / "coset.txt"
    code, _, _ = run(
        capsys, "coset", "--anf", "12+34", "--r", "1", "--m", "4", "--out", str(out)
    )
    assert code == 0
    got = read_distribution(str(out))
    assert got.nonzero_items() == [(6, 16), (10, 16)]


def test_classify_deterministic_output(tmp_path, capsys):
    a, b, c = (tmp_path / name for name in ("a.txt", "b.txt", "c.txt"))
    assert run(capsys, "classify", "--d", "2", "--m", "4", "--out", str(a))[0] == 0
    assert run(capsys, "classify", "--d", "2", "--m", "4", "--out", str(b))[0] == 0
    assert run(capsys, "classify", "--d", "2", "--m", "4", "--seed", "5", "--out", str(c))[0] == 0
    assert a.read_text() == b.read_text()
    assert "# seed 5" in c.read_text()


def test_pipeline_matches_brute_data(tmp_path, capsys):
    pipe = tmp_path / "pipe.txt"
    code, stdout, _ = run(
        capsys, "pipeline", "--r", "3", "--m", "5", "--out", str(pipe)
    )
    assert code == 0
    assert "multiplications" in stdout
    got = read_distribution(str(pipe))
    assert got == brute_force_distribution(3, 5)
    assert "# seed 0" in pipe.read_text()


def test_pipeline_strategies_byte_identical(tmp_path, capsys):
    a = tmp_path / "blocks.txt"
    b = tmp_path / "direct.txt"
    run(capsys, "pipeline", "--r", "2", "--m", "5", "--out", str(a))
    run(capsys, "pipeline", "--r", "2", "--m", "5", "--strategy", "direct", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_pipeline_with_classes_file(tmp_path, capsys):
    cls = tmp_path / "cls.txt"
    out = tmp_path / "dist.txt"
    assert run(capsys, "classify", "--d", "3", "--m", "4", "--out", str(cls))[0] == 0
    code, _, _ = run(
        capsys, "pipeline", "--r", "3", "--m", "5", "--classes", str(cls), "--out", str(out)
    )
    assert code == 0
    assert read_distribution(str(out)) == brute_force_distribution(3, 5)

    # wrong-parameter classes file is refused
    code, _, stderr = run(
        capsys, "pipeline", "--r", "2", "--m", "5", "--classes", str(cls), "--out", str(out)
    )
    assert code == 2
    assert "expected" in stderr


def test_verify_pass_and_fail(tmp_path, capsys):
    dist = tmp_path / "r25.txt"
    dist.write_text(distribution_text(brute_force_distribution(2, 5)))
    code, stdout, _ = run(capsys, "verify", "--dist", str(dist), "--r", "2", "--m", "5")
    assert code == 0
    assert all(line.startswith("PASS") for line in stdout.strip().splitlines())

    truncated = tmp_path / "bad.txt"
    lines = distribution_text(brute_force_distribution(2, 5)).splitlines()
    truncated.write_text("\n".join(lines[:-1]) + "\n")
    code, stdout, _ = run(capsys, "verify", "--dist", str(truncated), "--r", "2", "--m", "5")
    assert code == 1
    assert any(line.startswith("FAIL") for line in stdout.splitlines())


def test_equiv_prints_matrix_and_verifies(capsys):
    code, stdout, _ = run(
        capsys, "equiv", "--e1", "123", "--e2", "145", "--m", "5", "--budget", "200000"
    )
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == 6  # five bit rows plus the verdict
    assert all(set(row) <= {"0", "1"} for row in lines[:5])
    assert lines[-1].startswith("PASS")


def test_equiv_budget_failure(capsys):
    code, _, stderr = run(
        capsys, "equiv", "--e1", "123", "--e2", "123+145", "--m", "5", "--budget", "500"
    )
    assert code == 1
    assert "no substitution" in stderr


def test_dualcheck(capsys):
    code, stdout, _ = run(capsys, "dualcheck")
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == 12
    assert all(line.startswith("PASS") for line in lines)


def test_pipeline_jobs_byte_identical(tmp_path, capsys):
    files = []
    for jobs in ("1", "3"):
        path = tmp_path / f"j{jobs}.txt"
        run(capsys, "pipeline", "--r", "2", "--m", "5", "--jobs", jobs, "--out", str(path))
        files.append(path.read_bytes())
    assert files[0] == files[1]


def test_checkpoint_resume_via_cli(tmp_path, capsys):
    ckpt = tmp_path / "ckpt"
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "pipeline", "--r", "3", "--m", "5", "--checkpoint", str(ckpt), "--out", str(out1))
    code, stdout, _ = run(
        capsys, "pipeline", "--r", "3", "--m", "5", "--checkpoint", str(ckpt), "--out", str(out2)
    )
    assert code == 0
    assert "0 polynomial multiplications" in stdout
    assert out1.read_bytes() == out2.read_bytes()


def test_missing_subcommand_exits_with_usage(capsys):
    with pytest.raises(SystemExit):
        main([])
