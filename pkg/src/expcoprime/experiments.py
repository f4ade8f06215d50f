"""Deterministic convergence experiments and table emission.

Every driver walks a user-supplied grid in order and emits one row per grid
point; there is no sampling, so repeated runs are byte-identical.  Tables go
out as CSV (header row, reals at 12 significant digits, integers unquoted)
or as a JSON array of flat objects.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import IO, Sequence

from .arith import Factorization, KernelSpec
from .asymptotics import (
    AsymptoticReport,
    compare,
    density_limit,
    kernel_count_main,
    legendre_count_error_scale,
    legendre_count_main,
    pair_count_main,
)
from .counts import count_exp_coprime_pairs, count_fixed_kernel, legendre_count

# quadratic-cost guard for the free-kernel scan
DENSITY_SCAN_LIMIT = 10**5


@dataclass(frozen=True)
class ConvergenceRow:
    """One grid point of a fixed-kernel density experiment."""

    x: int
    exact_N: int
    exact_P: int
    main_N: float
    main_P: float
    ratio: float
    target: float
    rel_err_N: float
    rel_err_P: float


@dataclass(frozen=True)
class DensityScanRow:
    """One grid point of the free-kernel density scan."""

    x: int
    same_kernel_pairs: int
    exp_coprime_pairs: int
    empirical_density: float

    def json_extra(self) -> dict[str, float]:
        # second denominator variant: all ordered pairs <= x**2 (JSON only)
        return {"density_all_pairs": self.exp_coprime_pairs / self.x**2}


def density_convergence(spec: KernelSpec, x_grid: Sequence[int]) -> list[ConvergenceRow]:
    """Exact N, P and their main terms along x_grid for a fixed kernel.

    The grid must be strictly increasing and start at or above the kernel
    (and at >= 3, where the main terms are defined).
    """
    if not x_grid:
        raise ValueError("x_grid must be nonempty")
    if any(b <= a for a, b in zip(x_grid, x_grid[1:])):
        raise ValueError("x_grid must be strictly increasing")
    if x_grid[0] < spec.value():
        raise ValueError("grid starts below the smallest member of the kernel class")
    target = density_limit(len(spec.primes))
    rows = []
    for x in x_grid:
        exact_n = count_fixed_kernel(spec, x)
        exact_p = count_exp_coprime_pairs(spec, x)
        main_n = kernel_count_main(x, spec)
        main_p = pair_count_main(x, spec)
        rows.append(ConvergenceRow(
            x=x,
            exact_N=exact_n,
            exact_P=exact_p,
            main_N=main_n,
            main_P=main_p,
            ratio=exact_p / (exact_n * exact_n),
            target=target,
            rel_err_N=abs(exact_n - main_n) / main_n,
            rel_err_P=abs(exact_p - main_p) / main_p,
        ))
    return rows


def legendre_convergence(f: Factorization, x_grid: Sequence[int]) -> list[AsymptoticReport]:
    """Exact-versus-main reports for legendre_count along x_grid (f != 1)."""
    if not f.pairs:
        raise ValueError("the factorization must have at least one prime")
    if not x_grid:
        raise ValueError("x_grid must be nonempty")
    if any(b <= a for a, b in zip(x_grid, x_grid[1:])):
        raise ValueError("x_grid must be strictly increasing")
    return [
        compare(legendre_count(x, f), legendre_count_main(x, f),
                legendre_count_error_scale(x, f))
        for x in x_grid
    ]


def _factored_range(limit: int) -> list[tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """(primes, exponents) for every 2 <= n <= limit via a smallest-prime-factor
    sieve; entries 0, 1 are None."""
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for m in range(i * i, limit + 1, i):
                if spf[m] == m:
                    spf[m] = i
        i += 1
    out: list[tuple[tuple[int, ...], tuple[int, ...]] | None] = [None] * (limit + 1)
    for n in range(2, limit + 1):
        m = n
        primes = []
        exps = []
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            primes.append(p)
            exps.append(e)
        out[n] = (tuple(primes), tuple(exps))
    return out


def density_scan(x_grid: Sequence[int]) -> list[DensityScanRow]:
    """Empirical density of exponentially coprime pairs with no kernel fixed.

    For each x: group 2..x by kernel, count ordered same-kernel pairs and the
    exponentially coprime ones among them (plus <1, 1>, coprime by
    convention), and report their ratio.  Quadratic in the largest class, so
    x is capped at DENSITY_SCAN_LIMIT.
    """
    if not x_grid:
        raise ValueError("x_grid must be nonempty")
    if any(x < 1 for x in x_grid):
        raise ValueError("grid values must be positive")
    if max(x_grid) > DENSITY_SCAN_LIMIT:
        raise ValueError(f"scan limited to x <= {DENSITY_SCAN_LIMIT}")
    facs = _factored_range(max(x_grid))
    rows = []
    for x in x_grid:
        groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for n in range(2, x + 1):
            primes, exps = facs[n]
            groups.setdefault(primes, []).append(exps)
        same = 1  # <1, 1>
        coprime = 1
        for exps_list in groups.values():
            same += len(exps_list) ** 2
            for i, u in enumerate(exps_list):
                if all(e == 1 for e in u):
                    coprime += 1
                for v in exps_list[i + 1:]:
                    if all(math.gcd(a, b) == 1 for a, b in zip(u, v)):
                        coprime += 2
        rows.append(DensityScanRow(
            x=x,
            same_kernel_pairs=same,
            exp_coprime_pairs=coprime,
            empirical_density=coprime / same,
        ))
    return rows


# ---------------------------------------------------------------------------
# table emission

def _render(value) -> str:
    if isinstance(value, bool):
        raise TypeError("no boolean columns are defined")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(f"cannot render {type(value).__name__} in a table")


def _json_value(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


def emit_table(rows: Sequence, fmt: str = "csv",
               destination: str | Path | IO[str] | None = None,
               row_type: type | None = None) -> None:
    """Write dataclass rows as CSV or JSON to a path, file object, or stdout.

    The column set and order come from the row dataclass; pass row_type when
    rows may be empty so the header can still be written.  Rows that define
    json_extra() get those keys appended in JSON output only.
    """
    if row_type is None:
        if not rows:
            raise ValueError("row_type is required for an empty row list")
        row_type = type(rows[0])
    if not dataclasses.is_dataclass(row_type):
        raise ValueError("rows must be dataclass instances")
    names = [f.name for f in dataclasses.fields(row_type)]

    def write(out: IO[str]) -> None:
        if fmt == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(names)
            for row in rows:
                writer.writerow([_render(getattr(row, n)) for n in names])
        elif fmt == "json":
            objs = []
            for row in rows:
                obj = {n: _json_value(getattr(row, n)) for n in names}
                extra = getattr(row, "json_extra", None)
                if callable(extra):
                    obj.update(extra())
                objs.append(obj)
            json.dump(objs, out, indent=2)
            out.write("\n")
        else:
            raise ValueError(f"unknown format {fmt!r}")

    if destination is None:
        write(sys.stdout)
    elif isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="") as out:
            write(out)
    else:
        write(destination)
