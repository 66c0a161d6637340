"""Closed-form monotonicity-preservation bounds: the componentwise bound
built from inverse statistics, its doubly-stochastic specialization, the
graph-distance norm bound, and the sharp tridiagonal single-entry bound.

All bound routines report their hypotheses through
:class:`BoundResult.preconditions_ok` instead of refusing to evaluate, so the
formulas can be inspected on exploratory inputs; only structural
impossibilities (wrong shape, singular matrix, broken bandwidth) raise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import (
    DEFAULT_MONOTONE_TOL,
    DEFAULT_QDS_TOL,
    is_irreducibly_diag_dominant,
    is_m_matrix,
    is_quasi_doubly_stochastic,
    is_strictly_diag_dominant,
)
from .errors import (
    BandwidthViolation,
    DimensionMismatch,
    IndexOutOfRange,
    NotTridiagonal,
    SingularMatrix,
    SingularSubmatrix,
    ZeroDiagonal,
    ZeroMarginal,
)
from .graphdist import bouchon_M
from .linalg import as_square_matrix, determinant, determinant_from_factors, inverse, lu_factor

#: Row/column sums of the inverse with magnitude at or below this are
#: rejected as zero marginals (the Buffoni-number ratios would blow up).
MARGINAL_FLOOR = 1e-14

#: Formula denominators at or below this yield an infinite bound value.
DENOMINATOR_FLOOR = 1e-12


@dataclass(frozen=True)
class InverseStats:
    """Inverse of a matrix together with its marginal sums and the
    worst-case ratio entry / (row sum * column sum).

    ``buffoni_number`` is min_ij inv_ij / (row_sums_i * col_sums_j), attained
    at ``ratio_argmin`` (0-based, first in row-major order); ``total`` is the
    sum of all inverse entries.
    """

    inv: np.ndarray
    row_sums: np.ndarray
    col_sums: np.ndarray
    total: float
    buffoni_number: float
    ratio_argmin: tuple[int, int]


@dataclass(frozen=True)
class BoundResult:
    """A perturbation-size bound plus its hypothesis report.

    ``value`` is the bound itself, never negative, math.inf when the formula
    degenerates to an unlimited perturbation.  When ``preconditions_ok`` is
    False the value is still shown for inspection but carries no guarantee;
    ``precondition_detail`` says which hypothesis failed.
    """

    value: float
    method: str  # "main" | "corollary" | "bouchon" | "tridiagonal"
    bound_kind: str  # "componentwise" | "inf-norm" | "single-entry"
    preconditions_ok: bool
    precondition_detail: str


@dataclass(frozen=True)
class BouchonQuantities:
    """Ingredients of the graph-distance bound: the smallest diagonal
    magnitude, the row-wise diagonal-to-off-diagonal ratio eta, the largest
    relevant graph distance, and the resulting coefficient
    1 / (eta^distance_max * distance_max * e)."""

    min_diag: float
    eta: float
    distance_max: int
    coefficient: float


def inverse_stats(a) -> InverseStats:
    """Invert ``a`` and collect marginal sums, total, and Buffoni number.

    Raises :class:`SingularMatrix` for singular input and
    :class:`ZeroMarginal` when a row or column sum of the inverse is
    numerically zero.
    """
    inv = inverse(a)
    row_sums = inv.sum(axis=1)
    col_sums = inv.sum(axis=0)
    if np.any(np.abs(row_sums) <= MARGINAL_FLOOR) or np.any(np.abs(col_sums) <= MARGINAL_FLOOR):
        raise ZeroMarginal("a row or column sum of the inverse is numerically zero")
    ratios = inv / np.outer(row_sums, col_sums)
    flat = int(np.argmin(ratios))
    n = inv.shape[0]
    loc = (flat // n, flat % n)
    return InverseStats(
        inv=inv,
        row_sums=row_sums,
        col_sums=col_sums,
        total=float(inv.sum()),
        buffoni_number=float(ratios[loc]),
        ratio_argmin=loc,
    )


def sigma_via_determinant(a) -> float:
    """Total of the inverse entries from two determinants:
    (det(A + J) - det(A)) / det(A), with J the all-ones matrix.

    Raises :class:`SingularMatrix` when ``a`` is singular; A + J may be
    singular (the total is then exactly -1).
    """
    m = as_square_matrix(a)
    det_a = determinant_from_factors(lu_factor(m))
    det_shifted = determinant(m + 1.0)
    return (det_shifted - det_a) / det_a


def _formula_value(numerator: float, denominator: float) -> float:
    """num/den with the degenerate-denominator and nonnegativity conventions
    shared by the closed-form bounds."""
    if denominator <= DENOMINATOR_FLOOR:
        return math.inf
    return max(numerator / denominator, 0.0)


def _main_preconditions(a, tol: float) -> tuple[bool, str]:
    try:
        sdd = is_strictly_diag_dominant(a)
    except ZeroDiagonal:
        return False, "zero diagonal entry; dominance undefined"
    if not is_m_matrix(a, tol):
        return False, "not a (nonsingular) M-matrix"
    if not sdd:
        return False, "M-matrix but not strictly diagonally dominant"
    return True, "strictly diagonally dominant M-matrix"


def main_bound(a, tol: float = DEFAULT_MONOTONE_TOL) -> BoundResult:
    """Componentwise bound B / (1 - B * S), with B the Buffoni number and S
    the total of the inverse entries.

    Any perturbation with 0 <= e_ij below the value keeps A + E monotone
    when A is a strictly diagonally dominant M-matrix.  The bound is tight
    for the uniform perturbation: it equals the exact threshold for E
    all-ones.
    """
    stats = inverse_stats(a)
    value = _formula_value(
        stats.buffoni_number, 1.0 - stats.buffoni_number * stats.total
    )
    ok, detail = _main_preconditions(a, tol)
    return BoundResult(value, "main", "componentwise", ok, detail)


def corollary_bound(
    a, tol: float = DEFAULT_MONOTONE_TOL, qds_tol: float = DEFAULT_QDS_TOL
) -> BoundResult:
    """Specialized componentwise bound m / (1 - m * n) from the smallest
    inverse entry alone; for quasi-doubly-stochastic M-matrices it coincides
    with :func:`main_bound`."""
    inv = inverse(a)
    n = inv.shape[0]
    min_entry = float(inv.min())
    value = _formula_value(min_entry, 1.0 - min_entry * n)
    if not is_m_matrix(a, tol):
        ok, detail = False, "not a (nonsingular) M-matrix"
    elif not is_quasi_doubly_stochastic(a, qds_tol):
        ok, detail = False, "M-matrix but row/column sums differ from one"
    else:
        ok, detail = True, "quasi-doubly-stochastic M-matrix"
    return BoundResult(value, "corollary", "componentwise", ok, detail)


def _eta(m: np.ndarray, zero_tol: float) -> float:
    """Row-wise |diagonal| over largest off-diagonal magnitude, maximized
    over rows that have off-diagonal support."""
    best = 0.0
    for i in range(m.shape[0]):
        off = np.abs(np.delete(m[i], i))
        off = off[off > zero_tol]
        if off.size:
            best = max(best, abs(m[i, i]) / float(off.max()))
    return best


def bouchon_quantities(a, e_pattern, zero_tol: float = 0.0) -> BouchonQuantities:
    """Assemble the ingredients of the graph-distance bound.

    Propagates :class:`EmptyPerturbation` / :class:`UnreachablePair` from the
    distance computation.
    """
    m = as_square_matrix(a)
    e = as_square_matrix(e_pattern)
    if e.shape != m.shape:
        raise DimensionMismatch(
            f"pattern shape {e.shape} does not match matrix shape {m.shape}"
        )
    distance_max = bouchon_M(m, e, zero_tol)
    eta = float(_eta(m, zero_tol))
    return BouchonQuantities(
        min_diag=float(np.min(np.abs(np.diagonal(m)))),
        eta=eta,
        distance_max=distance_max,
        coefficient=1.0 / (eta**distance_max * distance_max * math.e),
    )


def _bouchon_preconditions(m, e, zero_tol: float, tol: float) -> tuple[bool, str]:
    try:
        idd = is_irreducibly_diag_dominant(m, zero_tol)
    except ZeroDiagonal:
        return False, "zero diagonal entry; dominance undefined"
    if not is_m_matrix(m, tol):
        return False, "not a (nonsingular) M-matrix"
    if not idd:
        return False, "M-matrix but not irreducibly diagonally dominant"
    if not np.all(e.sum(axis=1) >= 0.0):
        return False, "perturbation pattern has a negative row sum"
    return True, "irreducibly diagonally dominant M-matrix, pattern row sums nonnegative"


def bouchon_bound(
    a, e_pattern, zero_tol: float = 0.0, tol: float = DEFAULT_MONOTONE_TOL
) -> BoundResult:
    """Norm bound coefficient * min_i |a_ii| for perturbations supported on
    the given pattern.

    The guarantee is strict: A + E stays monotone whenever the inf-norm of E
    is strictly below the value, A is an irreducibly diagonally dominant
    M-matrix, and E has nonnegative row sums.
    """
    m = as_square_matrix(a)
    e = as_square_matrix(e_pattern)
    quantities = bouchon_quantities(m, e, zero_tol)
    value = quantities.coefficient * quantities.min_diag
    ok, detail = _bouchon_preconditions(m, e, zero_tol, tol)
    return BoundResult(value, "bouchon", "inf-norm", ok, detail)


def tridiagonal_bound(a, l: int, k: int, tol: float = DEFAULT_MONOTONE_TOL) -> BoundResult:
    """Sharp threshold for a single-entry perturbation h at position (l, k)
    of a tridiagonal M-matrix, with |l - k| >= 2 and 0-based indices:
    A + h E_lk stays monotone exactly for h up to the returned value.

    The value is the product of the off-diagonal magnitudes bridging l and k
    divided by the determinant of the principal block strictly between them.
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    if not (0 <= l < n and 0 <= k < n):
        raise IndexOutOfRange(f"entry ({l}, {k}) outside a {n}x{n} matrix")
    rows, cols = np.indices((n, n))
    if np.any(m[np.abs(rows - cols) >= 2] != 0.0):
        raise NotTridiagonal("entries beyond the first sub/superdiagonal must be zero")
    if abs(l - k) < 2:
        raise BandwidthViolation(
            f"perturbed entry must satisfy |l - k| >= 2, got ({l}, {k})"
        )
    if l < k:
        # Bridge along the superdiagonal, block strictly between l and k.
        chain = -m[np.arange(l, k), np.arange(l, k) + 1]
        lo, hi = l + 1, k - 1
    else:
        chain = -m[np.arange(k, l) + 1, np.arange(k, l)]
        lo, hi = k + 1, l - 1
    block = m[lo : hi + 1, lo : hi + 1]
    try:
        det = determinant_from_factors(lu_factor(block))
    except SingularMatrix:
        raise SingularSubmatrix(
            f"principal block {lo}..{hi} strictly between the perturbed entry "
            "is singular"
        ) from None
    value = max(float(np.prod(chain)) / det, 0.0)
    ok = is_m_matrix(m, tol)
    detail = "tridiagonal M-matrix" if ok else "tridiagonal but not a (nonsingular) M-matrix"
    return BoundResult(value, "tridiagonal", "single-entry", ok, detail)
