"""Bound tables: one row per dimension comparing constructions with the
counting lower bounds."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .constructions import auto_construct, doubled_hamming_size
from .errors import ParameterError
from .hypercube import get_nmax

COLUMNS = (
    "n",
    "method",
    "N",
    "j",
    "k",
    "base_size",
    "ds_size",
    "cds_size",
    "bound",
    "leaf_count",
    "gamma_lower",
    "gamma_c_lower",
    "ratio_gamma",
    "ratio_gamma_n",
    "ratio_gamma_c",
)


@dataclass(frozen=True)
class TableRow:
    n: int
    method: str
    N: int
    j: int
    k: int | None
    base_size: int
    ds_size: int  # doubled-Hamming dominating set of Q_n
    cds_size: int | None  # None for formula-only rows
    bound: int
    leaf_count: int | None
    gamma_lower: int
    gamma_c_lower: int | None

    @property
    def ratio_gamma(self) -> Fraction:
        """ds_size / (2^n / (n + 1)); exactly 1 for a perfect code."""
        return Fraction(self.ds_size * (self.n + 1), 1 << self.n)

    @property
    def ratio_gamma_n(self) -> Fraction:
        """ds_size / (2^n / n)."""
        return Fraction(self.ds_size * self.n, 1 << self.n)

    @property
    def ratio_gamma_c(self) -> Fraction:
        size = self.cds_size if self.cds_size is not None else self.bound
        return Fraction(size * self.n, 1 << self.n)

    def values(self) -> list[str]:
        def opt(x):
            return "" if x is None else str(x)

        def num(x: Fraction) -> str:
            return f"{float(x):.6g}"

        return [
            str(self.n), self.method, str(self.N), str(self.j), opt(self.k),
            str(self.base_size), str(self.ds_size), opt(self.cds_size), str(self.bound),
            opt(self.leaf_count), str(self.gamma_lower), opt(self.gamma_c_lower),
            num(self.ratio_gamma), num(self.ratio_gamma_n), num(self.ratio_gamma_c),
        ]


def table_row(n: int, build: bool = True) -> TableRow:
    report = auto_construct(n, build=build)
    return TableRow(
        n=n,
        method=report.method,
        N=report.N,
        j=report.j,
        k=report.k,
        base_size=report.ds_size,
        ds_size=doubled_hamming_size(n),
        cds_size=report.cds_size,
        bound=report.bound_value,
        leaf_count=report.leaf_count,
        gamma_lower=report.gamma_lower,
        gamma_c_lower=report.gamma_c_lower,
    )


def build_table(min_n: int, max_n: int, formula_above_nmax: bool = False) -> list[TableRow]:
    nmax = get_nmax()
    if min_n < 2 or max_n < min_n:
        raise ParameterError(f"need 2 <= min_n <= max_n, got {min_n}..{max_n}")
    if max_n > nmax and not formula_above_nmax:
        raise ParameterError(
            f"max_n={max_n} exceeds n_max={nmax}; pass --formula-above-nmax for bound-only rows"
        )
    return [table_row(n, build=n <= nmax) for n in range(min_n, max_n + 1)]


def render(rows: list[TableRow], fmt: str = "csv") -> str:
    if fmt in ("csv", "tsv"):
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow(row.values())
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        lines.extend("| " + " | ".join(row.values()) + " |" for row in rows)
        return "\n".join(lines) + "\n"
    raise ParameterError(f"unknown table format {fmt!r}")
