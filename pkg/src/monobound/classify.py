"""Structural matrix predicates: sign pattern, diagonal dominance,
irreducibility, monotonicity (nonnegative inverse), and two
sufficient-condition certificates for monotonicity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    DimensionMismatch,
    NotSymmetric,
    OrderOutOfRange,
    SingularMatrix,
    ZeroDiagonal,
)
from .graphdist import build_digraph, is_strongly_connected
from .linalg import as_square_matrix, determinant, inverse

#: Default slack for inverse nonnegativity: entries down to
#: -tol * max|inverse entry| still count as nonnegative.
DEFAULT_MONOTONE_TOL = 1e-10

#: Default absolute slack on row/column sums for the doubly-stochastic test.
DEFAULT_QDS_TOL = 1e-8


@dataclass(frozen=True)
class MonotoneCheck:
    """Outcome of the inverse-nonnegativity test.

    ``location`` and ``value`` witness the smallest inverse entry (0-based,
    first in row-major order); both are None when the matrix is singular.
    The object is truthy exactly when the matrix is monotone.
    """

    monotone: bool
    location: tuple[int, int] | None
    value: float | None
    singular: bool = False

    def __bool__(self) -> bool:
        return self.monotone


def is_monotone(a, tol: float = DEFAULT_MONOTONE_TOL) -> MonotoneCheck:
    """Check that the inverse exists and is entrywise nonnegative.

    Small negative entries down to ``-tol * max|inverse entry|`` are
    attributed to roundoff and accepted; a singular matrix is reported as
    non-monotone with ``singular=True``.
    """
    m = as_square_matrix(a)
    try:
        inv = inverse(m)
    except SingularMatrix:
        return MonotoneCheck(monotone=False, location=None, value=None, singular=True)
    flat = int(np.argmin(inv))
    location = (flat // m.shape[0], flat % m.shape[0])
    value = float(inv[location])
    slack = tol * float(np.max(np.abs(inv)))
    return MonotoneCheck(monotone=value >= -slack, location=location, value=value)


def sigma_vector(a) -> np.ndarray:
    """Dominance ratios: off-diagonal absolute row sums over |diagonal|.

    Raises :class:`ZeroDiagonal` when some diagonal entry is exactly zero.
    """
    m = as_square_matrix(a)
    diag = np.abs(np.diagonal(m))
    if np.any(diag == 0.0):
        row = int(np.flatnonzero(diag == 0.0)[0])
        raise ZeroDiagonal(f"diagonal entry {row} is zero; dominance ratios undefined")
    off = np.sum(np.abs(m), axis=1) - diag
    return off / diag


def strict_dominance_set(sigma) -> tuple[int, ...]:
    """Rows whose dominance ratio is strictly below one (0-based)."""
    return tuple(int(i) for i in np.flatnonzero(np.asarray(sigma, dtype=float) < 1.0))


def is_z_matrix(a) -> bool:
    """All off-diagonal entries nonpositive."""
    m = as_square_matrix(a)
    off = m - np.diag(np.diagonal(m))
    return bool(np.all(off <= 0.0))


def is_m_matrix(a, tol: float = DEFAULT_MONOTONE_TOL) -> bool:
    """Nonsingular M-matrix test: Z sign pattern plus a nonnegative inverse."""
    return is_z_matrix(a) and bool(is_monotone(a, tol))


def is_strictly_diag_dominant(a) -> bool:
    """Every dominance ratio strictly below one."""
    return bool(np.all(sigma_vector(a) < 1.0))


def is_irreducible(a, zero_tol: float = 0.0) -> bool:
    """True when the directed sparsity graph is strongly connected."""
    return is_strongly_connected(build_digraph(a, zero_tol))


def is_irreducibly_diag_dominant(a, zero_tol: float = 0.0) -> bool:
    """Irreducible, all ratios at most one, at least one strictly below."""
    sigma = sigma_vector(a)
    return (
        bool(np.all(sigma <= 1.0))
        and len(strict_dominance_set(sigma)) > 0
        and is_irreducible(a, zero_tol)
    )


def is_quasi_doubly_stochastic(a, tol: float = DEFAULT_QDS_TOL) -> bool:
    """All row sums and column sums within ``tol`` of one."""
    m = as_square_matrix(a)
    return bool(
        np.all(np.abs(m.sum(axis=1) - 1.0) <= tol)
        and np.all(np.abs(m.sum(axis=0) - 1.0) <= tol)
    )


def verify_kuttler(a, m_cert, w, tol: float = DEFAULT_MONOTONE_TOL, pos_tol: float = 0.0) -> bool:
    """Comparison certificate: a monotone M >= A together with w > 0 and
    A w entrywise strictly positive proves A monotone.

    Returns True only when every condition holds, so a True result is a
    proof; False proves nothing about A.
    """
    base = as_square_matrix(a)
    cert = as_square_matrix(m_cert)
    wvec = np.asarray(w, dtype=float)
    if cert.shape != base.shape:
        raise DimensionMismatch(
            f"certificate shape {cert.shape} does not match matrix shape {base.shape}"
        )
    if wvec.shape != (base.shape[0],):
        raise DimensionMismatch(f"w must be a length-{base.shape[0]} vector, got {wvec.shape}")
    if not np.all(wvec >= 0.0) or not np.any(wvec > 0.0):
        return False
    if not np.all(cert >= base):
        return False
    if not np.all(base @ wvec > pos_tol):
        return False
    return bool(is_monotone(cert, tol))


def gavrilov_check(a, order: int, tol: float = DEFAULT_MONOTONE_TOL) -> bool:
    """Symmetric certificate: positive definiteness plus monotonicity of
    every principal submatrix of the given order proves monotonicity.

    Enumerates all C(n, order) principal submatrices, which is fine for n up
    to roughly a dozen.  Raises :class:`NotSymmetric` when A deviates from
    symmetry by more than 1e-12 and :class:`OrderOutOfRange` unless
    2 <= order < n.
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    if float(np.max(np.abs(m - m.T))) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    if not 2 <= order < n:
        raise OrderOutOfRange(f"order must satisfy 2 <= order < {n}, got {order}")
    for k in range(1, n + 1):
        if determinant(m[:k, :k]) <= 0.0:
            return False
    for rows in combinations(range(n), order):
        idx = np.ix_(rows, rows)
        if not is_monotone(m[idx], tol):
            return False
    return True


@dataclass(frozen=True)
class ClassificationReport:
    """All structure flags at once, plus the data that witnesses them."""

    is_z_matrix: bool
    is_m_matrix: bool
    is_monotone: bool
    is_strictly_diag_dominant: bool
    is_irreducibly_diag_dominant: bool
    is_irreducible: bool
    is_quasi_doubly_stochastic: bool
    sigma: np.ndarray
    strict_set: tuple[int, ...]
    monotone_witness: MonotoneCheck


def classify_matrix(
    a,
    tol: float = DEFAULT_MONOTONE_TOL,
    zero_tol: float = 0.0,
    qds_tol: float = DEFAULT_QDS_TOL,
) -> ClassificationReport:
    """Evaluate every structure predicate on one matrix.

    Raises :class:`ZeroDiagonal` when dominance ratios are undefined.
    """
    m = as_square_matrix(a)
    sigma = sigma_vector(m)
    strict = strict_dominance_set(sigma)
    witness = is_monotone(m, tol)
    z = is_z_matrix(m)
    irreducible = is_irreducible(m, zero_tol)
    return ClassificationReport(
        is_z_matrix=z,
        is_m_matrix=z and witness.monotone,
        is_monotone=witness.monotone,
        is_strictly_diag_dominant=bool(np.all(sigma < 1.0)),
        is_irreducibly_diag_dominant=(
            bool(np.all(sigma <= 1.0)) and len(strict) > 0 and irreducible
        ),
        is_irreducible=irreducible,
        is_quasi_doubly_stochastic=is_quasi_doubly_stochastic(m, qds_tol),
        sigma=sigma,
        strict_set=strict,
        monotone_witness=witness,
    )
