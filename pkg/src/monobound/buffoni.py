"""Exact monotonicity thresholds: the quadratically convergent ratio
iteration, an independent bisection oracle over the monotonicity predicate,
and the rank-one shortcut for the inverse under uniform perturbations.

The threshold of interest is v* = sup { v >= 0 : A + v E is monotone } for a
monotone A and an entrywise-nonnegative E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bounds import InverseStats
from .classify import DEFAULT_MONOTONE_TOL, is_monotone
from .errors import (
    DimensionMismatch,
    NegativePerturbation,
    NotMonotone,
    SingularIterate,
    SingularMatrix,
    UpdateSingular,
)
from .linalg import as_square_matrix, inverse


class IterationStep(NamedTuple):
    """One step of the ratio iteration: the iterate it started from, the
    increment it chose, and the (0-based) entry attaining the minimum ratio."""

    v: float
    increment: float
    argmin: tuple[int, int]


@dataclass(frozen=True)
class BuffoniTrace:
    """Iteration history of the threshold search.

    ``vstar`` is the final iterate (math.inf when the sequence diverges);
    ``status`` is "converged", "diverged_infinite", or "max_iterations".
    """

    iterates: tuple[IterationStep, ...]
    status: str
    vstar: float

    @property
    def iteration_count(self) -> int:
        return len(self.iterates)


def _validated_pair(a, e, tol: float) -> tuple[np.ndarray, np.ndarray]:
    m = as_square_matrix(a)
    pert = as_square_matrix(e)
    if pert.shape != m.shape:
        raise DimensionMismatch(
            f"perturbation shape {pert.shape} does not match matrix shape {m.shape}"
        )
    if np.any(pert < 0.0):
        raise NegativePerturbation("perturbation must be entrywise nonnegative")
    if not is_monotone(m, tol):
        raise NotMonotone("base matrix is not monotone")
    return m, pert


def buffoni_vstar(
    a,
    e,
    *,
    rtol: float = 1e-12,
    max_iter: int = 100,
    v_cap: float = 1e12,
    w_floor: float = 1e-14,
    tol: float = DEFAULT_MONOTONE_TOL,
) -> BuffoniTrace:
    """Threshold v* by the ratio iteration
    v <- v + min { z_ij / w_ij : w_ij > 0 }, with Z = (A + v E)^-1 and
    W = Z E Z (minus the derivative of Z in v).

    Converges quadratically to a finite v* and diverges past ``v_cap`` when
    A + v E is monotone for every v.  ``w_floor`` (relative to the largest W
    entry) keeps roundoff-level denominators out of the minimum; convergence
    is declared when an increment drops below ``rtol * max(v, 1)``.
    """
    m, pert = _validated_pair(a, e, tol)
    n = m.shape[0]
    steps: list[IterationStep] = []
    v = 0.0
    for _ in range(max_iter):
        try:
            z = inverse(m + v * pert)
        except SingularMatrix as exc:
            raise SingularIterate(f"iterate at v={v!r} is singular: {exc}") from None
        w = z @ pert @ z
        w_max = float(w.max())
        # Z >= 0 and E >= 0 keep W nonnegative (up to roundoff) below v*.
        assert float(w.min()) >= -1e-10 * max(w_max, 1.0), "negative ratio denominator"
        if w_max <= 0.0:
            return BuffoniTrace(tuple(steps), "diverged_infinite", math.inf)
        usable = w > w_floor * w_max
        ratios = np.full_like(w, math.inf)
        np.divide(z, w, out=ratios, where=usable)
        flat = int(np.argmin(ratios))
        pick = (flat // n, flat % n)
        increment = max(float(ratios[pick]), 0.0)
        steps.append(IterationStep(v=v, increment=increment, argmin=pick))
        v += increment
        if increment < rtol * max(v, 1.0):
            return BuffoniTrace(tuple(steps), "converged", v)
        if v > v_cap:
            return BuffoniTrace(tuple(steps), "diverged_infinite", math.inf)
    return BuffoniTrace(tuple(steps), "max_iterations", v)


def bisection_vstar(
    a,
    e,
    *,
    abs_tol: float = 1e-9,
    v_hi_init: float = 1.0,
    v_cap: float = 1e12,
    tol: float = DEFAULT_MONOTONE_TOL,
) -> float:
    """Independent threshold oracle: double an upper candidate until
    monotonicity fails (returning math.inf once past ``v_cap``), then bisect
    the predicate boundary down to width ``abs_tol``."""
    m, pert = _validated_pair(a, e, tol)

    def monotone_at(v: float) -> bool:
        return bool(is_monotone(m + v * pert, tol))

    lo = 0.0
    hi = v_hi_init
    while monotone_at(hi):
        lo = hi
        hi *= 2.0
        if hi > v_cap:
            return math.inf
    while hi - lo > abs_tol:
        mid = 0.5 * (lo + hi)
        if monotone_at(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def perturb_uniform_inverse(stats: InverseStats, v: float) -> np.ndarray:
    """Inverse of A + v J (J all-ones) straight from the inverse statistics
    of A: inv - (v / (1 + v * total)) * outer(row_sums, col_sums).

    Raises :class:`UpdateSingular` when 1 + v * total is not safely positive.
    """
    denominator = 1.0 + v * stats.total
    if denominator <= 1e-14:
        raise UpdateSingular(
            f"uniform update denominator {denominator:.3e} is not safely positive"
        )
    return stats.inv - (v / denominator) * np.outer(stats.row_sums, stats.col_sums)
