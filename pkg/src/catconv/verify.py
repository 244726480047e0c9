"""Grid checks of the convolution, dissection and Catalan identities.

Each identity is a pair of independently computed sides over a parameter
grid.  ``verify_identity`` evaluates every cell and keeps the first
failing cell in lexicographic parameter order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from catconv import core
from catconv.core import DomainError, binomial, catalan, f_closed


@dataclass(frozen=True)
class Counterexample:
    params: tuple
    lhs: object
    rhs: object


@dataclass
class IdentityReport:
    identity_id: str
    params_checked: list = field(default_factory=list)
    first_counterexample: Optional[Counterexample] = None
    names: tuple = ()
    bounds: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.first_counterexample is None

    def to_obj(self) -> dict:
        """JSON-ready form; every number is a decimal string."""
        ce = self.first_counterexample
        return {
            "identity": self.identity_id,
            "range": {k: str(v) for k, v in self.bounds.items()},
            "cells": str(len(self.params_checked)),
            "passed": self.passed,
            "counterexample": None if ce is None else {
                "params": dict(zip(self.names, map(str, ce.params))),
                "lhs": str(ce.lhs),
                "rhs": str(ce.rhs),
            },
        }

    def summary(self) -> str:
        head = f"{self.identity_id}: {'passed' if self.passed else 'FAILED'} ({len(self.params_checked)} cells)"
        ce = self.first_counterexample
        if ce is None:
            return head
        params = ", ".join(f"{k}={v}" for k, v in zip(self.names, ce.params))
        return f"{head}\n  counterexample {params}: lhs={ce.lhs} rhs={ce.rhs}"


@dataclass(frozen=True)
class Identity:
    names: tuple            # cell parameter names, outermost first
    lower: dict             # domain lower bound per bounded parameter
    cells: Callable         # bounds dict -> list of parameter tuples
    sides: Callable         # *params -> (lhs, rhs)
    description: str


def _kn_cells(strict: bool) -> Callable:
    def cells(b):
        return [
            (k, n)
            for k in range(b["k_min"], b["k_max"] + 1)
            for n in range(b["n_min"], b["n_max"] + 1)
            if (k < n if strict else k <= n)
        ]
    return cells


def _n_cells(b):
    return [(n,) for n in range(b["n_min"], b["n_max"] + 1)]


def _pq_cells(b):
    return [
        (q, p)
        for q in range(b["q_min"], b["q_max"] + 1)
        for p in range(q, 2 * q)
    ]


def _eq3(k, n):
    from catconv.enumeration import count_k_in_n_bruteforce
    return count_k_in_n_bruteforce(k, n), f_closed(k, n)


def _corollary(k, n):
    from catconv.enumeration import average_cycles_bruteforce
    return average_cycles_bruteforce(k, n), core.average_cycles_closed(k, n)


IDENTITIES = {
    "eq1": Identity(
        ("k", "n"), {"k": 1, "n": 1}, _kn_cells(False),
        lambda k, n: (core.convolution_lhs(k, n), core.convolution_rhs(k, n)),
        "sum over compositions of prod C_{i_r-1} = k/(2n-k) binom(2n-k, n)",
    ),
    "eq2": Identity(
        ("k", "n"), {"k": 3, "n": 3}, _kn_cells(False),
        core.diagonal_recurrence_sides,
        "(n-k) f_k(n) = n sum_{i=2}^{n-k+1} C_{i-1} f_k(n-i+1)",
    ),
    "eq3": Identity(
        ("k", "n"), {"k": 3, "n": 3}, _kn_cells(False), _eq3,
        "exhaustive k-in-n count = binom(2n-k-1, n-1)",
    ),
    "eq4": Identity(
        ("n",), {"n": 0}, _n_cells,
        lambda n: (core.segner_sum(n), catalan(n + 1)),
        "sum C_i C_{n-i} = C_{n+1}",
    ),
    "eq5": Identity(
        ("n",), {"n": 1}, _n_cells,
        lambda n: (core.weighted_catalan_sum(n), binomial(2 * n + 1, n - 1)),
        "sum i C_i C_{n-i} = binom(2n+1, n-1)",
    ),
    "eq6": Identity(
        ("q", "p"), {"q": 1}, _pq_cells,
        lambda q, p: (core.lemma_pq_sum(p, q), binomial(p, q)),
        "sum C_i binom(p-1-2i, q-1-i) = binom(p, q)",
    ),
    "eq7": Identity(
        ("k", "n"), {"k": 3, "n": 3}, _kn_cells(True),
        lambda k, n: (k * f_closed(k, n), n * core.convolution_lhs(k, n)),
        "k f_k(n) = n sum over compositions of prod C_{i_r-1}",
    ),
    "corollary": Identity(
        ("k", "n"), {"k": 3, "n": 3}, _kn_cells(True), _corollary,
        "mean k-cycle count over triangulations = f_k(n) C_{k-2} / C_{n-2}",
    ),
    "marked_triangle": Identity(
        ("n",), {"n": 3}, _n_cells,
        lambda n: (f_closed(3, n), (n - 2) * catalan(n - 2)),
        "f_3(n) = (n-2) C_{n-2}: one of n-2 triangles marked",
    ),
    # Deliberately false readings, kept so a failing check can be shown.
    "eq2_upper_n_minus_k_minus_1": Identity(
        ("k", "n"), {"k": 3, "n": 3}, _kn_cells(False),
        lambda k, n: core.diagonal_recurrence_sides(k, n, upper=n - k - 1),
        "recurrence with the sum stopped at n-k-1 (false)",
    ),
    "marked_triangle_n_minus_3": Identity(
        ("n",), {"n": 4}, _n_cells,
        lambda n: (f_closed(3, n), (n - 3) * catalan(n - 2)),
        "f_3(n) = (n-3) C_{n-2} (false)",
    ),
}


def _bounds(ident: Identity, given: dict) -> dict:
    b = {}
    for name, low in ident.lower.items():
        lo = given.get(f"{name}_min")
        hi = given.get(f"{name}_max")
        lo = low if lo is None else lo
        if hi is None and name == "k":
            hi = given.get("n_max")
        if hi is None:
            raise DomainError(f"an upper bound {name}_max is required")
        if lo < low:
            raise DomainError(f"{name} must be >= {low}, got {name}_min={lo}")
        if hi < lo:
            raise DomainError(f"empty range {name} in [{lo}, {hi}]")
        b[f"{name}_min"], b[f"{name}_max"] = lo, hi
    return b


def verify_identity(identity_id: str, *, workers: int = 1, **ranges) -> IdentityReport:
    """Check an identity on a grid.

    ``ranges`` holds ``<param>_min`` / ``<param>_max`` keywords; lower
    bounds default to the identity's domain and ``k_max`` defaults to
    ``n_max``.  Cells are evaluated in parallel when ``workers > 1``; the
    report is the same either way.
    """
    try:
        ident = IDENTITIES[identity_id]
    except KeyError:
        raise DomainError(f"unknown identity {identity_id!r}; choose from {sorted(IDENTITIES)}") from None
    unknown = set(ranges) - {f"{p}_{s}" for p in ("k", "n", "q") for s in ("min", "max")}
    if unknown:
        raise DomainError(f"unknown range keyword(s) {sorted(unknown)}")
    bounds = _bounds(ident, ranges)
    cells = ident.cells(bounds)

    def run(cell):
        return ident.sides(*cell)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(run, cells))
    else:
        results = map(run, cells)
    report = IdentityReport(identity_id, names=ident.names, bounds=bounds)
    for cell, (lhs, rhs) in zip(cells, results):
        report.params_checked.append(cell)
        if lhs != rhs and report.first_counterexample is None:
            report.first_counterexample = Counterexample(cell, lhs, rhs)
    return report
