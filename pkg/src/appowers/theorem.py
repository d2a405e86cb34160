"""Explicit upper bound for the t-count, divisor-splitting witnesses, and the
sweep that checks the bound cell by cell.

The bound is count_t <= (2k-1) * d(q)**(k-1) * ceil(N**(1/k)); the constant
2k-1 comes from making the inductive accounting explicit, see
docs/bound_constant.md.  Any sweep cell violating it is an implementation
bug, never a property of the input.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import Progression, count_powers_in_ap
from .errors import BoundViolationError, InternalInvariantError
from .intkernel import divisor_count, ikth_root_ceil
from .poly import Poly, difference_quotient

__all__ = [
    "Witness",
    "bound_constant",
    "theorem_bound",
    "extract_witness",
    "SweepReport",
    "verify_bound_sweep",
]


def bound_constant(k: int) -> int:
    """Explicit constant 2k - 1 (1 for linear, +2 per induction level)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return 2 * k - 1


def theorem_bound(k: int, q: int, N: int) -> int:
    """(2k-1) * d(q)**(k-1) * ceil(N**(1/k)), all exact."""
    if q < 1 or N < 1:
        raise ValueError("q and N must be >= 1")
    return bound_constant(k) * divisor_count(q) ** (k - 1) * ikth_root_ceil(N, k)


@dataclass(frozen=True)
class Witness:
    """Divisor-splitting certificate for a solution pair (t, t0).

    q1*q2 = q, |t - t0| = n1*q1, |Q(t)| = n2*q2 for the difference quotient
    Q, and n1*n2 = |i - i0| <= N - 1.
    """

    t: int
    t0: int
    q1: int
    q2: int
    n1: int
    n2: int
    i: int
    i0: int


def extract_witness(P: Poly, prog: Progression, t: int, t0: int) -> Witness:
    """Canonical witness with q1 = gcd(q, |t - t0|).

    That choice makes q2 = q/q1 coprime to (t - t0)/q1, so q2 | Q(t) follows
    from q | (t - t0) * Q(t); the divisibility is still verified exactly and
    a failure raises InternalInvariantError (it would falsify the
    implementation, not the input).
    """
    if t == t0:
        raise ValueError("witness extraction needs two distinct solutions")
    i = prog.index_of(P(t))
    i0 = prog.index_of(P(t0))
    if i is None or i0 is None:
        raise ValueError("both P(t) and P(t0) must lie in the progression")
    q = prog.q
    q1 = math.gcd(q, abs(t - t0))
    q2 = q // q1
    n1 = abs(t - t0) // q1
    Q = difference_quotient(P, t0)
    Qt = Q(t)
    if Qt % q2:
        raise InternalInvariantError(
            f"q2={q2} does not divide Q(t)={Qt} for t={t}, t0={t0}, {prog}")
    n2 = abs(Qt) // q2
    if n1 * n2 != abs(i - i0) or abs(i - i0) > prog.N - 1:
        raise InternalInvariantError(
            f"witness product check failed: n1={n1}, n2={n2}, "
            f"i={i}, i0={i0}, N={prog.N}")
    return Witness(t=t, t0=t0, q1=q1, q2=q2, n1=n1, n2=n2, i=i, i0=i0)


@dataclass
class SweepReport:
    """Result of a bound-verification sweep over a (k, q, a, N) grid."""

    k_set: tuple[int, ...]
    q_max: int
    a_mode: str
    N_set: tuple[int, ...]
    cells: int = 0
    violations: int = 0
    witness_pairs: int = 0
    # max of count_t / (d(q)**(k-1) * ceil(N**(1/k))), exact
    max_ratio: Fraction = Fraction(0)
    max_ratio_cell: tuple[int, int, int, int] | None = None
    max_ratio_float: float = 0.0
    # max of count_values / ceil(N**(1/k)) (conjectured-growth diagnostic)
    max_value_ratio: Fraction = Fraction(0)
    max_value_ratio_cell: tuple[int, int, int, int] | None = None
    max_value_ratio_float: float = 0.0
    rows: list[tuple] | None = None

    def to_jsonable(self) -> dict:
        return {
            "k_set": list(self.k_set),
            "q_max": self.q_max,
            "a_mode": self.a_mode,
            "N_set": list(self.N_set),
            "cells": self.cells,
            "violations": self.violations,
            "witness_pairs": self.witness_pairs,
            "max_ratio": [self.max_ratio.numerator, self.max_ratio.denominator],
            "max_ratio_cell": list(self.max_ratio_cell) if self.max_ratio_cell else None,
            "max_ratio_float": self.max_ratio_float,
            "max_value_ratio": [self.max_value_ratio.numerator,
                                self.max_value_ratio.denominator],
            "max_value_ratio_cell": (list(self.max_value_ratio_cell)
                                     if self.max_value_ratio_cell else None),
            "max_value_ratio_float": self.max_value_ratio_float,
        }


CSV_COLUMNS = ("k", "q", "a", "N", "count_t", "count_values", "bound",
               "ratio_num", "ratio_den")


def _a_values(q: int, a_mode: str) -> range:
    if a_mode == "window":
        return range(-q, q + 1)
    if a_mode == "residues":
        return range(q)
    raise ValueError(f"unknown a_mode {a_mode!r}")


@dataclass
class _TaskResult:
    cells: int = 0
    witness_pairs: int = 0
    max_ratio: Fraction = Fraction(0)
    max_ratio_cell: tuple | None = None
    max_value_ratio: Fraction = Fraction(0)
    max_value_ratio_cell: tuple | None = None
    max_ratio_float: float = 0.0
    max_value_ratio_float: float = 0.0
    rows: list = field(default_factory=list)


def _sweep_task(k: int, q: int, a_mode: str, N_set: tuple[int, ...],
                witness_pair_cap: int, collect_rows: bool) -> _TaskResult:
    res = _TaskResult()
    dk = divisor_count(q) ** (k - 1)
    P = Poly.monomial(k)
    for a in _a_values(q, a_mode):
        for N in N_set:
            prog = Progression(a, q, N)
            rep = count_powers_in_ap(k, prog)
            res.cells += 1
            root = ikth_root_ceil(N, k)
            bound = bound_constant(k) * dk * root
            if rep.count_t > bound:
                raise BoundViolationError(
                    f"count_t={rep.count_t} exceeds bound {bound} at "
                    f"cell k={k}, q={q}, a={a}, N={N}")
            cell = (k, q, a, N)
            ratio = Fraction(rep.count_t, dk * root)
            if ratio > res.max_ratio:
                res.max_ratio, res.max_ratio_cell = ratio, cell
            res.max_ratio_float = max(res.max_ratio_float,
                                      rep.count_t / (dk * N ** (1.0 / k)))
            vratio = Fraction(rep.count_values, root)
            if vratio > res.max_value_ratio:
                res.max_value_ratio, res.max_value_ratio_cell = vratio, cell
            res.max_value_ratio_float = max(res.max_value_ratio_float,
                                            rep.count_values / N ** (1.0 / k))
            if 2 <= rep.count_t <= witness_pair_cap:
                sols = count_powers_in_ap(k, prog, with_solutions=True).solutions
                for (t, _), (t0, _) in itertools.combinations(sols, 2):
                    extract_witness(P, prog, t, t0)
                    res.witness_pairs += 1
            if collect_rows:
                res.rows.append((k, q, a, N, rep.count_t, rep.count_values,
                                 bound, ratio.numerator, ratio.denominator))
    return res


def verify_bound_sweep(k_set, q_max: int, N_set, a_mode: str = "window",
                       threads: int = 1, witness_pair_cap: int = 64,
                       collect_rows: bool = False) -> SweepReport:
    """Check count_t <= theorem_bound on every cell of the grid.

    Cells are independent; tasks are one (k, q) pair each and the reduction
    is order-fixed, so the report is identical for any thread count.  A bound
    violation or witness failure raises immediately.
    """
    k_set = tuple(sorted(set(int(k) for k in k_set)))
    N_set = tuple(sorted(set(int(N) for N in N_set)))
    if not k_set or not N_set or q_max < 1:
        raise ValueError("empty sweep grid")
    report = SweepReport(k_set=k_set, q_max=q_max, a_mode=a_mode, N_set=N_set,
                         rows=[] if collect_rows else None)
    tasks = [(k, q) for k in k_set for q in range(1, q_max + 1)]

    def run(task):
        k, q = task
        return _sweep_task(k, q, a_mode, N_set, witness_pair_cap, collect_rows)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]

    for res in results:  # fixed task order keeps argmax ties lexicographic
        report.cells += res.cells
        report.witness_pairs += res.witness_pairs
        if res.max_ratio_cell and res.max_ratio > report.max_ratio:
            report.max_ratio = res.max_ratio
            report.max_ratio_cell = res.max_ratio_cell
        if res.max_value_ratio_cell and res.max_value_ratio > report.max_value_ratio:
            report.max_value_ratio = res.max_value_ratio
            report.max_value_ratio_cell = res.max_value_ratio_cell
        report.max_ratio_float = max(report.max_ratio_float, res.max_ratio_float)
        report.max_value_ratio_float = max(report.max_value_ratio_float,
                                           res.max_value_ratio_float)
        if collect_rows:
            report.rows.extend(res.rows)
    return report
