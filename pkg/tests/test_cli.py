import json

import pytest

from cycloseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_tnum_distribution(capsys):
    env = run_json(capsys, "tnum", "--m", "3", "--n", "4")
    assert env["payload"] == {"2": "7", "4": "21", "6": "7"}
    assert env["provenance"] == "closed-form"
    assert env["format_version"] == "1"


def test_tnum_point(capsys):
    env = run_json(capsys, "tnum", "--m", "5", "--n", "5", "--tau", "6")
    assert env["payload"] == "120"


def test_dist_closed(capsys):
    env = run_json(capsys, "dist", "--m", "5", "--n", "3", "--pattern", "000")
    assert env["payload"] == {"0": "8", "1": "24", "2": "16", "3": "8"}


def test_dist_oracle_identical(capsys):
    for pattern in ("01", "000", "001", "101", "0001"):
        closed = run_json(capsys, "dist", "--m", "5", "--n", "3", "--pattern", pattern)
        brute = run_json(
            capsys, "dist", "--m", "5", "--n", "3", "--pattern", pattern, "--via", "oracle"
        )
        assert closed["payload"] == brute["payload"]
        assert brute["provenance"] == "oracle"


SOLVED = [
    "0", "1", "00", "01", "10", "11",
    "000", "001", "010", "011", "100", "101", "110", "111",
    "0000", "0001", "1000", "0111", "1110", "1111",
]


def test_dist_routes_agree_across_families(capsys):
    # both CLI routes emit byte-identical payloads for every solved pattern
    for N in range(2, 9):
        for m in range(1, N):
            for pattern in SOLVED:
                if len(pattern) >= N:
                    continue
                args = ["dist", "--m", str(m), "--n", str(N - m), "--pattern", pattern]
                closed = run_json(capsys, *args)
                brute = run_json(capsys, *args, "--via", "oracle")
                assert closed["payload"] == brute["payload"], (m, N - m, pattern)


def test_dist_unsupported_pattern_exit_3(capsys):
    code, out, err = run(capsys, "dist", "--m", "4", "--n", "4", "--pattern", "0110")
    assert code == 3
    assert "oracle" in err
    env = run_json(
        capsys, "dist", "--m", "4", "--n", "4", "--pattern", "0110", "--via", "oracle"
    )
    assert env["provenance"] == "oracle"
    assert env["payload"] == {"0": "34", "1": "24", "2": "12"}


def test_domain_error_exit_3(capsys):
    # a constant family still has a distribution, but no point query
    env = run_json(capsys, "tnum", "--m", "0", "--n", "5")
    assert env["payload"] == {"0": "1"}
    code, _, err = run(capsys, "tnum", "--m", "0", "--n", "5", "--tau", "2")
    assert code == 3 and "constant" in err
    code, _, err = run(capsys, "tnum", "--m", "3", "--n", "4", "--tau", "3")
    assert code == 3


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["tnum", "--m", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["ising", "fixed", "--N", "6", "--nu", "0.5"])  # missing --n
    assert exc.value.code == 2
    # out-of-range numerics are usage errors, not tracebacks
    code, _, err = run(capsys, "tnum", "--m", "0", "--n", "0")
    assert code == 2 and "usage error" in err
    code, _, err = run(capsys, "fib", "--N", "4", "--r", "1", "--h", "0")
    assert code == 2


def test_asym_distribution_mode(capsys):
    env = run_json(capsys, "asym", "--m", "5", "--n", "5")
    assert set(env["payload"]) == {"2", "4", "6", "8", "10", "12"}
    assert env["payload"]["2"] == pytest.approx(8.6206, abs=1e-3)


def test_fib_and_kaplansky(capsys):
    assert run_json(capsys, "fib", "--N", "5", "--r", "3", "--h", "0")["payload"] == "20"
    assert run_json(capsys, "kaplansky", "--N", "6", "--n", "2", "--p", "2")["payload"] == "9"


def test_coeff(capsys):
    env = run_json(capsys, "coeff", "--kind", "c", "--i", "6", "--j", "2", "--k", "1")
    assert env["payload"] == "2"
    env = run_json(
        capsys, "coeff", "--kind", "cweight", "--s", "1", "--m", "7", "--g", "3", "--j", "3"
    )
    assert env["payload"] == "3"
    env = run_json(capsys, "coeff", "--kind", "cs", "--s", "2", "--i", "9", "--j", "3", "--k", "1")
    assert env["payload"] == "24"


def test_coeff_grid_mode(capsys):
    env = run_json(capsys, "coeff", "--kind", "c", "--i", "4")
    grid = env["payload"]
    assert grid["row_labels"] == [0, 1, 2, 3, 4]
    assert grid["rows"][2] == ["0", "2", "1", "0", "0"]  # j = 2
    assert grid["rows"][4][0] == "4"  # matrix-convention diagonal
    code, _, err = run(capsys, "coeff", "--kind", "c", "--i", "4", "--j", "2")
    assert code == 3 and "together" in err


def test_oracle_rejects_overlong_pattern(capsys):
    code, _, err = run(
        capsys, "dist", "--m", "1", "--n", "1", "--pattern", "101", "--via", "oracle"
    )
    assert code == 3 and "exceeds" in err
    # length equal to the cycle is still a valid window set for the oracle
    env = run_json(capsys, "dist", "--m", "1", "--n", "1", "--pattern", "01", "--via", "oracle")
    assert env["payload"] == {"0": "0", "1": "2"}


def test_appendix_roundtrip(capsys):
    env = run_json(capsys, "appendix", "--which", "c_by_k", "--index", "2")
    block = env["payload"][0]
    assert block["kind"] == "c_by_k" and block["fixed_index"] == 2
    rows = [[int(v) for v in row] for row in block["rows"]]
    assert rows[11][1:10] == [9, 24, 42, 60, 75, 84, 84, 72, 45]
    # machine format round-trips through JSON untouched
    assert json.loads(json.dumps(env)) == env


def test_ising_and_walk(capsys):
    env = run_json(capsys, "ising", "total", "--N", "8", "--nu", "0.0")
    assert env["payload"] == pytest.approx(256.0)
    env = run_json(capsys, "ising", "fixed", "--N", "4", "--n", "2", "--nu", "0.0")
    assert env["payload"] == pytest.approx(6.0)
    env = run_json(capsys, "walk", "--N", "7", "--k", "1", "--alpha", "0.5")
    assert env["payload"]["coefficients"] == {"2": "7", "4": "21", "6": "7"}
    assert env["payload"]["scalar"] == pytest.approx(35 / 128)


def test_moments(capsys):
    env = run_json(capsys, "moments", "--m", "4", "--n", "2", "--r", "3")
    assert env["payload"] == "56"
    env = run_json(capsys, "moments", "--m", "4", "--n", "2", "--r", "3", "--approx")
    assert env["payload"]["exact"] == "56"
    assert env["payload"]["approx"] == pytest.approx(58.6667, abs=1e-3)


def test_asym(capsys):
    env = run_json(capsys, "asym", "--m", "5", "--n", "5", "--tau", "2")
    assert env["payload"] == pytest.approx(8.6206, abs=1e-3)
    env = run_json(capsys, "asym", "--m", "5", "--n", "5", "--sweep")
    pairs = env["payload"]
    assert pairs[0] == ["0.0", "0.000000"]
    assert len(pairs) == 121
    assert float(pairs[60][1]) == pytest.approx(128.095, abs=1e-2)


def test_deterministic_output(capsys):
    first = run(capsys, "tnum", "--m", "6", "--n", "4", "--format", "json")
    second = run(capsys, "tnum", "--m", "6", "--n", "4", "--format", "json")
    assert first == second
    first = run(capsys, "appendix", "--which", "cprime_weight", "--format", "pretty")
    second = run(capsys, "appendix", "--which", "cprime_weight", "--format", "pretty")
    assert first == second


def test_csv_format(capsys):
    code, out, _ = run(capsys, "tnum", "--m", "3", "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# tnum")
    assert lines[1] == "index,value"
    assert lines[2] == "2,7"


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-N", "6", "--format", "json")
    assert code == 0
    report = json.loads(out)["payload"]
    assert report["all_equivalent"] is True
    ids = {item["id"] for item in report["typo_ledger"]}
    assert "joint-001-marginal-extra-cell" in ids
    assert "triple-corner-binomial-sign" in ids
    assert "deletion-chain-direction" in ids
    assert "marginal-001-prefactor" in ids
    code, out, _ = run(capsys, "verify", "--max-N", "6")
    assert code == 0 and "typo ledger:" in out
