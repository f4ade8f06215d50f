import json

import pytest

from expcoprime.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# arith

def test_arith_tau_e(capsys):
    code, out, _ = run(capsys, "arith", "tau_e", "36")
    assert code == 0
    assert out == "4\n"


def test_arith_unary_functions(capsys):
    assert run(capsys, "arith", "sigma_e", "8")[1] == "10\n"
    assert run(capsys, "arith", "kernel", "12")[1] == "6\n"
    assert run(capsys, "arith", "theta", "30")[1] == "8\n"
    assert run(capsys, "arith", "phi", "10")[1] == "4\n"
    assert run(capsys, "arith", "expdivisors", "36")[1] == "6 12 18 36\n"
    assert run(capsys, "arith", "expdivisors", "1")[1] == "1\n"


def test_arith_gcde(capsys):
    code, out, _ = run(capsys, "arith", "gcde", "11664", str(2**6 * 3**9))
    assert code == 0
    assert out == "108\n"


def test_arith_gcde_different_kernels_is_guard_error(capsys):
    code, out, err = run(capsys, "arith", "gcde", "1", "6")
    assert code == 1
    assert out == ""
    assert "exponential divisor" in err


def test_arith_expcoprime(capsys):
    assert run(capsys, "arith", "expcoprime", "108", "72")[1] == "true\n"
    assert run(capsys, "arith", "expcoprime", "4", "16")[1] == "false\n"
    assert run(capsys, "arith", "expcoprime", "1", "1")[1] == "true\n"


def test_arith_wrong_arity_is_usage_error(capsys):
    code, _, err = run(capsys, "arith", "tau_e", "4", "5")
    assert code == 2
    assert "usage" in err.lower()
    code, _, _ = run(capsys, "arith", "gcde", "4")
    assert code == 2


def test_arith_unknown_function_is_usage_error(capsys):
    code, _, err = run(capsys, "arith", "nosuch", "4")
    assert code == 2


def test_arith_rejects_oversized_integer(capsys):
    code, _, err = run(capsys, "arith", "tau_e", str(2**63))
    assert code == 1
    assert "2**63" in err


def test_arith_rejects_zero(capsys):
    code, _, err = run(capsys, "arith", "tau_e", "0")
    assert code == 1


# ---------------------------------------------------------------------------
# count / main

def test_count_pairs_example(capsys):
    code, out, _ = run(capsys, "count", "P", "--primes", "2", "-x", "100")
    assert code == 0
    assert out == "23\n"


def test_count_fixed_kernel(capsys):
    assert run(capsys, "count", "N", "--primes", "2,3", "-x", "100")[1] == "9\n"


def test_count_legendre(capsys):
    assert run(capsys, "count", "L", "--n", "4", "-x", "100")[1] == "3\n"
    # --primes, when supplied, must match the kernel of n
    code, _, err = run(capsys, "count", "L", "--n", "4", "--primes", "3", "-x", "100")
    assert code == 1
    assert "kernel" in err


def test_count_simplex_selectors(capsys):
    assert run(capsys, "count", "simplex", "--weights", "1", "-z", "10",
               "--a", "2")[1] == "5\n"
    assert run(capsys, "count", "simplex", "--weights", "1,1", "-z", "4")[1] == "6\n"
    assert run(capsys, "count", "simplex-phi", "--weights", "1,1", "-z", "3")[1] == "2\n"
    assert run(capsys, "count", "simplex-phi", "--weights", "1", "-z", "10")[1] == "1307/210\n"
    assert run(capsys, "count", "simplex-pairs", "--weights", "1", "-z", "6")[1] == "23\n"


def test_count_power_sums(capsys):
    assert run(capsys, "count", "coprime-power-sum", "-z", "10", "-s", "0",
               "--a", "6")[1] == "3\n"
    assert run(capsys, "count", "coprime-power-sum", "-z", "10", "-s", "1",
               "--a", "6")[1] == "13\n"
    assert run(capsys, "count", "totient-sum", "-z", "10")[1] == "32\n"
    assert run(capsys, "count", "totient-sum", "-z", "10", "-s", "-1")[1] == "1307/210\n"


def test_count_missing_flag_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "N", "-x", "100")
    assert code == 2
    assert "--primes" in err


def test_count_invalid_primes_is_guard_error(capsys):
    code, _, err = run(capsys, "count", "N", "--primes", "4", "-x", "100")
    assert code == 1
    code, _, err = run(capsys, "count", "N", "--primes", "3,2", "-x", "100")
    assert code == 1


def test_count_output_is_deterministic(capsys):
    first = run(capsys, "count", "P", "--primes", "2,3", "-x", "10000")
    second = run(capsys, "count", "P", "--primes", "2,3", "-x", "10000")
    assert first == second


def test_main_selectors(capsys):
    code, out, _ = run(capsys, "main", "N", "--primes", "2", "-x", "100")
    assert code == 0
    assert out == "6.64385618977\n"
    code, out, _ = run(capsys, "main", "P", "--primes", "2", "-x", "100")
    assert out == "26.8344038585\n"
    code, out, _ = run(capsys, "main", "L", "--n", "4", "-x", "1000000")
    assert out == "9.96578428466\n"
    code, out, _ = run(capsys, "main", "density", "--r", "2")
    assert out == "0.369575361169\n"
    code, out, _ = run(capsys, "main", "coprime-power-sum", "-z", "10", "-s", "0",
                       "--a", "6")
    assert out == "3.33333333333\n"
    code, out, _ = run(capsys, "main", "totient-sum", "-z", "10")
    assert out == "30.3963550927\n"
    code, out, _ = run(capsys, "main", "simplex", "--weights", "1", "-z", "10")
    assert out == "10\n"


def test_main_x_below_three_is_guard_error(capsys):
    code, _, err = run(capsys, "main", "N", "--primes", "2", "-x", "2")
    assert code == 1


def test_main_density_is_not_a_count(capsys):
    code, _, _ = run(capsys, "count", "density", "--r", "2")
    assert code == 2


# ---------------------------------------------------------------------------
# converge / density-scan

def test_converge_csv_stdout(capsys):
    code, out, _ = run(capsys, "converge", "--primes", "2", "--grid", "100,1000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("x,exact_N,exact_P")
    assert len(lines) == 3
    assert lines[1].split(",")[1] == "6"


def test_converge_legendre_mode(capsys):
    code, out, _ = run(capsys, "converge", "--n", "4", "--grid", "1000,1000000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "exact,main_term,relative_error,error_scale"
    assert lines[1].split(",")[0] == "5"


def test_converge_writes_file_and_figure(tmp_path, capsys):
    out_path = tmp_path / "rows.csv"
    fig_path = tmp_path / "rows.png"
    code, out, _ = run(capsys, "converge", "--primes", "2", "--grid",
                       "100,1000,10000", "--out", str(out_path),
                       "--figure", str(fig_path))
    assert code == 0
    assert out == ""
    assert out_path.read_text().startswith("x,exact_N")
    assert fig_path.stat().st_size > 0


def test_converge_json(capsys):
    code, out, _ = run(capsys, "converge", "--primes", "2", "--grid", "100",
                       "--format", "json")
    data = json.loads(out)
    assert data[0]["exact_P"] == 23


def test_converge_bad_grid_is_guard_error(capsys):
    code, _, _ = run(capsys, "converge", "--primes", "2", "--grid", "100,50")
    assert code == 1


def test_density_scan_default_grid(capsys):
    code, out, _ = run(capsys, "density-scan", "--max", "1000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,same_kernel_pairs,exp_coprime_pairs,empirical_density"
    assert [line.split(",")[0] for line in lines[1:]] == ["10", "100", "1000"]
    assert lines[1].split(",")[1] == "18"


def test_density_scan_json_and_figure(tmp_path, capsys):
    fig_path = tmp_path / "scan.png"
    code, out, _ = run(capsys, "density-scan", "--grid", "10,100",
                       "--format", "json", "--figure", str(fig_path))
    assert code == 0
    data = json.loads(out)
    assert data[0]["exp_coprime_pairs"] == 15
    assert "density_all_pairs" in data[0]
    assert fig_path.stat().st_size > 0


def test_density_scan_guard(capsys):
    code, _, err = run(capsys, "density-scan", "--max", "1000000")
    assert code == 1
    assert "scan limited" in err


def test_density_scan_requires_bound(capsys):
    code, _, _ = run(capsys, "density-scan")
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys, "nosuch")
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "converge" in out
