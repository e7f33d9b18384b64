"""Closed-form bounds on the burning number of a path forest.

All arithmetic is exact integer arithmetic (isqrt plus squared
comparisons); floating point is never consulted.  For a path forest with
n vertices and t components:

    lower:    max(ceil(sqrt(n)), t)
    ub_floor: floor(n / (2t)) + t
    ub_sqrt:  ceil(sqrt(n) + (t-1)/2),  valid only when t <= ceil(sqrt(n))

The ceiling in ub_sqrt is computed as (ceil_sqrt(4n) + t) // 2, using
ceil((x + k)/2) = ceil((ceil(x) + k)/2) for integer k with x = 2*sqrt(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import PathForest, ceil_sqrt


def lower_bound(pf: PathForest) -> int:
    return max(ceil_sqrt(pf.n), pf.t)


def ub_floor(pf: PathForest) -> int:
    return pf.n // (2 * pf.t) + pf.t


def ub_sqrt(pf: PathForest) -> int | None:
    """None when the bound does not apply (t > ceil(sqrt(n)))."""
    n, t = pf.n, pf.t
    if t > ceil_sqrt(n):
        return None
    return (ceil_sqrt(4 * n) + t) // 2


@dataclass(frozen=True)
class BoundRow:
    t: int
    lower: int
    ub_floor: int
    ub_sqrt: int | None
    ratio: Fraction

    @property
    def best_upper(self) -> int:
        return self.ub_floor if self.ub_sqrt is None else min(self.ub_floor, self.ub_sqrt)


def bound_table(n: int) -> list[BoundRow]:
    """One row per component count t = 1..n (balanced path forests of order n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    root_ceil = ceil_sqrt(n)
    s4 = ceil_sqrt(4 * n)
    for t in range(1, n + 1):
        lower = max(root_ceil, t)
        ubf = n // (2 * t) + t
        ubs = (s4 + t) // 2 if t <= root_ceil else None
        best = ubf if ubs is None else min(ubf, ubs)
        rows.append(BoundRow(t, lower, ubf, ubs, Fraction(best, lower)))
    return rows
