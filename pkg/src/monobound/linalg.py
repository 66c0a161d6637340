"""Dense LU-based linear algebra: factorization, inverse, determinant, and
the Sherman-Morrison rank-one inverse update.

Everything here is deterministic and pure.  Partial pivoting picks the
largest-magnitude candidate and breaks ties by the lowest row index, so
repeated calls on identical input give bit-identical results.  No iterative
refinement is attempted; the intended scale is dense matrices up to a few
hundred rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SingularMatrix, UpdateSingular

#: Pivots (and rank-one denominators) at or below this, relative to the
#: largest entry magnitude of the input, are treated as exactly singular.
SINGULARITY_RTOL = 1e-14


def as_square_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a float64 array and validate it is square and finite."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DimensionMismatch("matrix must have at least one row")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


@dataclass(frozen=True)
class LUFactors:
    """Partial-pivoting factorization P A = L U.

    ``perm`` maps factored positions to original rows: row ``perm[i]`` of A
    corresponds to row ``i`` of L U.  ``sign`` is the permutation parity, so
    det(A) = sign * prod(diag(upper)).
    """

    lower: np.ndarray
    upper: np.ndarray
    perm: np.ndarray
    sign: int

    @property
    def n(self) -> int:
        return len(self.perm)


def _eliminate(m: np.ndarray, raise_on_singular: bool) -> tuple[np.ndarray, np.ndarray, int]:
    """In-place elimination engine; returns (packed LU, perm, sign).

    With ``raise_on_singular`` off, an exactly-zero pivot means the whole
    subcolumn is zero (partial pivoting), so skipping the elimination step is
    exact and the diagonal product still lands on the determinant.
    """
    n = m.shape[0]
    threshold = SINGULARITY_RTOL * float(np.max(np.abs(m)))
    perm = np.arange(n)
    sign = 1
    for col in range(n):
        # np.argmax returns the first maximum: lowest row index wins ties.
        piv = col + int(np.argmax(np.abs(m[col:, col])))
        pivot = m[piv, col]
        if abs(pivot) <= threshold and raise_on_singular:
            raise SingularMatrix(
                f"pivot {abs(pivot):.3e} in column {col} is at or below the "
                f"singularity threshold {threshold:.3e}"
            )
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            perm[[col, piv]] = perm[[piv, col]]
            sign = -sign
        if pivot != 0.0:
            m[col + 1 :, col] /= m[col, col]
            m[col + 1 :, col + 1 :] -= np.outer(m[col + 1 :, col], m[col, col + 1 :])
    return m, perm, sign


def lu_factor(a) -> LUFactors:
    """Factor P A = L U with deterministic partial pivoting.

    Raises :class:`SingularMatrix` when a pivot falls to or below 1e-14 times
    the largest entry magnitude of ``a``.
    """
    m = as_square_matrix(a).copy()
    packed, perm, sign = _eliminate(m, raise_on_singular=True)
    lower = np.tril(packed, -1) + np.eye(len(perm))
    upper = np.triu(packed)
    return LUFactors(lower=lower, upper=upper, perm=perm, sign=sign)


def lu_solve(factors: LUFactors, rhs) -> np.ndarray:
    """Solve A x = rhs from the factorization of A.

    ``rhs`` may be a vector or a matrix of stacked right-hand-side columns;
    the result matches its shape.
    """
    b = np.asarray(rhs, dtype=float)
    single = b.ndim == 1
    if single:
        b = b[:, None]
    n = factors.n
    if b.shape[0] != n:
        raise DimensionMismatch(f"right-hand side has {b.shape[0]} rows, expected {n}")
    lower, upper = factors.lower, factors.upper
    y = b[factors.perm].astype(float)
    for i in range(1, n):
        y[i] -= lower[i, :i] @ y[:i]
    x = np.empty_like(y)
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - upper[i, i + 1 :] @ x[i + 1 :]) / upper[i, i]
    return x[:, 0] if single else x


def inverse(a) -> np.ndarray:
    """Inverse via LU; raises :class:`SingularMatrix` on singular input."""
    factors = lu_factor(a)
    return lu_solve(factors, np.eye(factors.n))


def determinant(a) -> float:
    """Determinant as sign times the product of U's diagonal.

    Never raises on singular input: the product simply lands near zero and
    callers apply their own thresholds.
    """
    m = as_square_matrix(a).copy()
    packed, _, sign = _eliminate(m, raise_on_singular=False)
    return float(sign * np.prod(np.diagonal(packed)))


def determinant_from_factors(factors: LUFactors) -> float:
    """Determinant of the already-factored matrix."""
    return float(factors.sign * np.prod(np.diagonal(factors.upper)))


def sherman_morrison(ainv, u, v, b: float) -> np.ndarray:
    """Inverse of A + b * outer(u, v), given ``ainv`` = inverse of A.

    Uses (A + b u v^T)^-1 = A^-1 - (b / (1 + b v^T A^-1 u)) (A^-1 u)(v^T A^-1)
    and raises :class:`UpdateSingular` when the denominator magnitude is at
    most 1e-14.  A zero coefficient returns ``ainv`` unchanged (as a copy).
    """
    inv = as_square_matrix(ainv)
    uvec = np.asarray(u, dtype=float)
    vvec = np.asarray(v, dtype=float)
    if uvec.shape != (inv.shape[0],) or vvec.shape != (inv.shape[0],):
        raise DimensionMismatch(
            f"u and v must be length-{inv.shape[0]} vectors, "
            f"got {uvec.shape} and {vvec.shape}"
        )
    denominator = 1.0 + float(b) * float(vvec @ inv @ uvec)
    if abs(denominator) <= 1e-14:
        raise UpdateSingular(
            f"rank-one update denominator {denominator:.3e} is numerically zero"
        )
    if b == 0.0:
        return inv.copy()
    return inv - (b / denominator) * np.outer(inv @ uvec, vvec @ inv)
