"""Closed-form CNOT accounting, case taxonomy, and exhaustive scans.

Everything here is integer arithmetic on N; no circuit is built or
simulated except by ``resource_report``, which assembles one lowered
circuit to measure its depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

from .ir import depth as circuit_depth
from .lowering import lower
from .synthesis import plan, synthesize

SCAN_FIELDS = ("N", "n", "xi", "M", "g", "m", "cnot", "case")
SUMMARY_FIELDS = ("n", "max", "mean")

MIN_SCAN_N_MAX = 2
MAX_SCAN_N_MAX = 20


class Case(Enum):
    """Structural family of N, ordered by the CNOT bound it guarantees."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    @property
    def bound(self) -> str:
        """Symbolic CNOT bound for the family, in the register width n."""
        return _CASE_BOUNDS[self]


_CASE_BOUNDS = {
    Case.I: "0",
    Case.II: "n-1",
    Case.III: "2n-3",
    Case.IV: "<=2n-4",
    Case.V: "<=2n-5",
}


def cnot_count(N: int) -> int:
    """Entangling-gate count of the lowered circuit for N, in closed form.

    Equals g + m - 3 for g >= 2 and 0 otherwise, where g is the set-bit
    count of N and m the bit width of its odd cofactor.
    """
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    g = bin(N).count("1")
    if g < 2:
        return 0
    M = N >> ((N & -N).bit_length() - 1)
    return g + M.bit_length() - 3


def classify(N: int) -> Case:
    """Assign N to its structural family.

    Powers of two need no entanglers (I). Odd N with exactly two set bits
    sits one below the width (II). All-ones N hits the 2n-3 worst case
    (III). Remaining odd N stay at or under 2n-4 (IV), and every even
    non-power-of-two stays at or under 2n-5 (V).
    """
    if N < 2:
        raise ValueError(f"classification requires N >= 2, got {N}")
    g = bin(N).count("1")
    if g == 1:
        return Case.I
    if N % 2 == 0:
        return Case.V
    if g == 2:
        return Case.II
    if g == (N - 1).bit_length():
        return Case.III
    return Case.IV


@dataclass(frozen=True)
class ResourceReport:
    N: int
    n: int
    g: int
    m: int
    cnot_count: int
    case: Case
    depth: int


def resource_report(N: int) -> ResourceReport:
    """Per-N resource summary, including the lowered circuit depth."""
    pl = plan(N)
    lowered, _ = lower(synthesize(N))
    return ResourceReport(
        N=N,
        n=pl.n,
        g=pl.g,
        m=pl.m,
        cnot_count=cnot_count(N),
        case=classify(N),
        depth=circuit_depth(lowered),
    )


@dataclass(frozen=True)
class ScanRow:
    """One N in a scan: its decomposition, count, and family."""

    N: int
    n: int
    xi: int
    M: int
    g: int
    m: int
    cnot: int
    case: Case


@dataclass(frozen=True)
class NSummary:
    """Aggregate over all N with register width n."""

    n: int
    max_count: int
    mean_count: float
    histogram: dict[int, int]


@dataclass(frozen=True)
class ScanStats:
    per_n: tuple[NSummary, ...]

    def for_n(self, n: int) -> NSummary:
        for summary in self.per_n:
            if summary.n == n:
                return summary
        raise KeyError(f"no summary for n={n}")


def scan_rows(n_max: int) -> Iterator[ScanRow]:
    """Yield one row per N, grouped by register width n from 2 to n_max.

    Width n covers N in (2**(n-1), 2**n], the population whose circuits
    need exactly n qubits.
    """
    if not MIN_SCAN_N_MAX <= n_max <= MAX_SCAN_N_MAX:
        raise ValueError(f"n_max must be within {MIN_SCAN_N_MAX}..{MAX_SCAN_N_MAX}, got {n_max}")
    for n in range(2, n_max + 1):
        for N in range((1 << (n - 1)) + 1, (1 << n) + 1):
            xi = (N & -N).bit_length() - 1
            M = N >> xi
            g = bin(N).count("1")
            m = M.bit_length() if M > 1 else 0
            cnot = g + m - 3 if g >= 2 else 0
            yield ScanRow(N=N, n=n, xi=xi, M=M, g=g, m=m, cnot=cnot, case=classify(N))


def summarize(rows: Iterable[ScanRow]) -> ScanStats:
    """Fold scan rows into per-n max, mean, and count histogram."""
    totals: dict[int, int] = {}
    sizes: dict[int, int] = {}
    maxima: dict[int, int] = {}
    histograms: dict[int, dict[int, int]] = {}
    for row in rows:
        totals[row.n] = totals.get(row.n, 0) + row.cnot
        sizes[row.n] = sizes.get(row.n, 0) + 1
        maxima[row.n] = max(maxima.get(row.n, 0), row.cnot)
        hist = histograms.setdefault(row.n, {})
        hist[row.cnot] = hist.get(row.cnot, 0) + 1
    summaries = tuple(
        NSummary(
            n=n,
            max_count=maxima[n],
            mean_count=totals[n] / sizes[n],
            histogram=dict(sorted(histograms[n].items())),
        )
        for n in sorted(sizes)
    )
    return ScanStats(per_n=summaries)


def scan(n_max: int) -> ScanStats:
    """Exhaustive per-n statistics for widths 2..n_max."""
    return summarize(scan_rows(n_max))


def mean_fit(stats: ScanStats, n_min: int = 3) -> tuple[float, float]:
    """Least-squares line through (n, mean count) for n >= n_min.

    Returns (slope, intercept). The mean grows linearly in n, so two
    coefficients describe the whole trend.
    """
    points = [(s.n, s.mean_count) for s in stats.per_n if s.n >= n_min]
    if len(points) < 2:
        raise ValueError(f"need at least two widths >= {n_min} to fit a line")
    ns = np.array([p[0] for p in points], dtype=float)
    means = np.array([p[1] for p in points], dtype=float)
    slope, intercept = np.polyfit(ns, means, 1)
    return float(slope), float(intercept)
