"""Command-line front end.

Subcommands: arith (pointwise arithmetic), count (exact counters), main
(leading-order terms), converge and density-scan (table reports, optionally
with a rendered figure).  Exit codes: 0 success, 2 usage error, 1 domain or
guard violation.
"""

from __future__ import annotations

import argparse
import sys

from . import arith, asymptotics, counts, experiments

MAX_CLI_INT = 2**63 - 1

COUNT_SELECTORS = ("N", "L", "P", "simplex", "simplex-phi", "simplex-pairs",
                   "coprime-power-sum", "totient-sum")
MAIN_SELECTORS = COUNT_SELECTORS + ("density",)


class UsageError(Exception):
    """Bad flag combination for an otherwise valid command line."""


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")


def _check_word(value: int, name: str) -> int:
    if value > MAX_CLI_INT:
        raise ValueError(f"{name} exceeds 2**63 - 1")
    return value


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"missing required flag {flag}")
    return value


def _print_number(value) -> None:
    if isinstance(value, float):
        print(f"{value:.12g}")
    else:
        print(value)  # int or Fraction, both exact


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expcoprime",
        description="Exponential divisors, exponentially coprime integers, "
                    "and the asymptotics of their counting functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_arith = sub.add_parser("arith", help="pointwise arithmetic on one or two integers")
    p_arith.add_argument("fn", choices=["tau_e", "sigma_e", "kernel", "theta", "phi",
                                        "expdivisors", "gcde", "expcoprime"])
    p_arith.add_argument("values", metavar="n", type=_parse_int, nargs="+")

    def add_value_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--primes", type=_parse_int_list, metavar="P1,P2,...",
                       help="kernel primes, strictly increasing")
        p.add_argument("--n", type=_parse_int, help="integer argument for the L selector")
        p.add_argument("-x", type=_parse_int, help="upper bound of the count")
        p.add_argument("--weights", type=_parse_float_list, metavar="T1,T2,...",
                       help="positive simplex weights")
        p.add_argument("-z", type=float, help="simplex bound / sum cutoff")
        p.add_argument("-s", type=_parse_int, default=0, help="power in the weighted sums")
        p.add_argument("--a", type=_parse_int_list, metavar="A1,A2,...",
                       help="coprimality moduli (single value for coprime-power-sum)")

    p_count = sub.add_parser("count", help="exact counts and sums")
    p_count.add_argument("which", choices=list(COUNT_SELECTORS))
    add_value_flags(p_count)

    p_main = sub.add_parser("main", help="leading-order terms matching count")
    p_main.add_argument("which", choices=list(MAIN_SELECTORS))
    add_value_flags(p_main)
    p_main.add_argument("--r", type=_parse_int, help="number of primes, for density")

    def add_table_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
        p.add_argument("--figure", metavar="PATH",
                       help="also render a figure of the table to PATH")

    p_conv = sub.add_parser("converge", help="exact-versus-main tables along a grid")
    p_conv.add_argument("--primes", type=_parse_int_list, metavar="P1,P2,...")
    p_conv.add_argument("--grid", type=_parse_int_list, required=True,
                        metavar="X1,X2,...", help="strictly increasing bounds")
    p_conv.add_argument("--n", type=_parse_int,
                        help="track counts of integers exponentially coprime to n "
                             "instead of the fixed-kernel pair density")
    add_table_flags(p_conv)

    p_scan = sub.add_parser("density-scan",
                            help="empirical coprime density over all kernels")
    p_scan.add_argument("--max", type=_parse_int, help="largest bound; grid defaults "
                        "to the powers of 10 up to it")
    p_scan.add_argument("--grid", type=_parse_int_list, metavar="X1,X2,...")
    add_table_flags(p_scan)

    return parser


def _cmd_arith(args: argparse.Namespace) -> int:
    fn = args.fn
    values = [_check_word(v, "n") for v in args.values]
    binary = fn in ("gcde", "expcoprime")
    if len(values) != (2 if binary else 1):
        raise UsageError(f"arith {fn} takes {'two integers' if binary else 'one integer'}")
    if fn == "phi":
        _print_number(arith.euler_phi(values[0]))
    elif fn == "theta":
        _print_number(arith.theta(values[0]))
    elif fn == "kernel":
        _print_number(arith.kernel(arith.factorize(values[0])))
    elif fn == "tau_e":
        _print_number(arith.tau_e(arith.factorize(values[0])))
    elif fn == "sigma_e":
        _print_number(arith.sigma_e(arith.factorize(values[0])))
    elif fn == "expdivisors":
        divs = arith.exponential_divisors(arith.factorize(values[0]))
        print(" ".join(str(d.value()) for d in divs))
    elif fn == "gcde":
        g = arith.gcd_e(arith.factorize(values[0]), arith.factorize(values[1]))
        _print_number(g.value())
    else:
        flag = arith.is_exp_coprime(arith.factorize(values[0]),
                                    arith.factorize(values[1]))
        print("true" if flag else "false")
    return 0


def _kernel_from(args: argparse.Namespace) -> arith.KernelSpec:
    return arith.KernelSpec(tuple(_require(args.primes, "--primes")))


def _simplex_from(args: argparse.Namespace) -> counts.SimplexConstraint:
    weights = _require(args.weights, "--weights")
    bound = _require(args.z, "-z")
    return counts.SimplexConstraint(tuple(weights), bound)


def _legendre_factorization(args: argparse.Namespace) -> arith.Factorization:
    n = _check_word(_require(args.n, "--n"), "n")
    f = arith.factorize(n)
    if args.primes is not None and tuple(args.primes) != f.primes:
        raise ValueError(f"--primes does not match the kernel of {n}")
    return f


def _cmd_count(args: argparse.Namespace) -> int:
    which = args.which
    if which == "N":
        x = _check_word(_require(args.x, "-x"), "x")
        _print_number(counts.count_fixed_kernel(_kernel_from(args), x))
    elif which == "L":
        x = _check_word(_require(args.x, "-x"), "x")
        _print_number(counts.legendre_count(x, _legendre_factorization(args)))
    elif which == "P":
        x = _check_word(_require(args.x, "-x"), "x")
        _print_number(counts.count_exp_coprime_pairs(_kernel_from(args), x))
    elif which == "simplex":
        c = _simplex_from(args)
        a = tuple(args.a) if args.a is not None else (1,) * len(c.weights)
        _print_number(counts.simplex_coprime_count(c, a))
    elif which == "simplex-phi":
        _print_number(counts.simplex_totient_sum(_simplex_from(args)))
    elif which == "simplex-pairs":
        _print_number(counts.simplex_coprime_pair_count(_simplex_from(args)))
    elif which == "coprime-power-sum":
        a = _require(args.a, "--a")
        if len(a) != 1:
            raise UsageError("coprime-power-sum takes a single --a value")
        _print_number(counts.coprime_power_sum(_require(args.z, "-z"), args.s, a[0]))
    else:  # totient-sum
        _print_number(counts.totient_power_sum(_require(args.z, "-z"), args.s))
    return 0


def _cmd_main(args: argparse.Namespace) -> int:
    which = args.which
    if which == "N":
        x = _check_word(_require(args.x, "-x"), "x")
        _print_number(asymptotics.kernel_count_main(x, _kernel_from(args)))
    elif which == "L":
        x = _check_word(_require(args.x, "-x"), "x")
        _print_number(asymptotics.legendre_count_main(x, _legendre_factorization(args)))
    elif which == "P":
        x = _check_word(_require(args.x, "-x"), "x")
        _print_number(asymptotics.pair_count_main(x, _kernel_from(args)))
    elif which == "simplex":
        c = _simplex_from(args)
        a = tuple(args.a) if args.a is not None else (1,) * len(c.weights)
        _print_number(asymptotics.simplex_coprime_count_main(c, a))
    elif which == "simplex-phi":
        _print_number(asymptotics.simplex_totient_sum_main(_simplex_from(args)))
    elif which == "simplex-pairs":
        _print_number(asymptotics.simplex_coprime_pair_count_main(_simplex_from(args)))
    elif which == "coprime-power-sum":
        a = _require(args.a, "--a")
        if len(a) != 1:
            raise UsageError("coprime-power-sum takes a single --a value")
        _print_number(asymptotics.coprime_power_sum_main(_require(args.z, "-z"),
                                                         args.s, a[0]))
    elif which == "totient-sum":
        _print_number(asymptotics.totient_power_sum_main(_require(args.z, "-z"), args.s))
    else:  # density
        _print_number(asymptotics.density_limit(_require(args.r, "--r")))
    return 0


def _emit(rows, args: argparse.Namespace, row_type: type) -> None:
    experiments.emit_table(rows, fmt=args.format, destination=args.out,
                           row_type=row_type)


def _cmd_converge(args: argparse.Namespace) -> int:
    grid = [_check_word(x, "grid value") for x in _require(args.grid, "--grid")]
    if args.n is not None:
        f = _legendre_factorization(args)
        reports = experiments.legendre_convergence(f, grid)
        _emit(reports, args, asymptotics.AsymptoticReport)
        if args.figure:
            from . import figures
            figures.save_legendre_figure(grid, reports, args.figure)
    else:
        rows = experiments.density_convergence(_kernel_from(args), grid)
        _emit(rows, args, experiments.ConvergenceRow)
        if args.figure:
            from . import figures
            figures.save_convergence_figure(rows, args.figure)
    return 0


def _cmd_density_scan(args: argparse.Namespace) -> int:
    if args.grid is not None:
        grid = args.grid
    else:
        top = _require(args.max, "--max (or --grid)")
        if top < 1:
            raise ValueError("--max must be positive")
        grid = []
        x = 10
        while x <= top:
            grid.append(x)
            x *= 10
        if not grid or grid[-1] != top:
            grid.append(top)
    rows = experiments.density_scan(grid)
    _emit(rows, args, experiments.DensityScanRow)
    if args.figure:
        from . import figures
        figures.save_density_scan_figure(rows, args.figure)
    return 0


_HANDLERS = {
    "arith": _cmd_arith,
    "count": _cmd_count,
    "main": _cmd_main,
    "converge": _cmd_converge,
    "density-scan": _cmd_density_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
