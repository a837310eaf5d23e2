"""Dense complex matrix arithmetic and spectral quantities.

Everything downstream (hypothesis checks, witness families, extremal
search) works with plain square ``numpy`` arrays of ``complex128``.
Hermitian eigenvalues are computed by a cyclic Jacobi sweep; singular
values (operator and trace norms) go through LAPACK.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-10

_JACOBI_SWEEP_LIMIT = 100
_JACOBI_OFF_FACTOR = 1e-14


class NotHermitianError(ValueError):
    """Input matrix is not Hermitian within the requested tolerance."""


def as_complex_matrix(value, name: str = "matrix") -> np.ndarray:
    """Validate and freeze a square complex matrix.

    Returns a read-only ``complex128`` copy; raises ``ValueError`` for
    non-square, empty, or non-finite input.
    """
    arr = np.array(value, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be a square 2-d array, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise ValueError(f"{name} must have order >= 1")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError(f"{name} has non-finite entries")
    arr.setflags(write=False)
    return arr


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def re_part(a: np.ndarray) -> np.ndarray:
    """Hermitian real part (a + a*) / 2."""
    a = np.asarray(a, dtype=np.complex128)
    return (a + a.conj().T) / 2.0


def trace_pairing(a: np.ndarray, b: np.ndarray) -> complex:
    """Tr(a b*) as the Frobenius inner product sum_ij a_ij conj(b_ij)."""
    return complex(np.vdot(b, a))


def max_abs(a: np.ndarray) -> float:
    """Largest entry magnitude (0 for an empty selection)."""
    return float(np.max(np.abs(a))) if a.size else 0.0


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def _hermitian_deviation(a: np.ndarray) -> float:
    return max_abs(a - a.conj().T)


def _require_hermitian(a: np.ndarray, tol: float, name: str) -> None:
    dev = _hermitian_deviation(a)
    if dev > tol * max(1.0, max_abs(a)):
        raise NotHermitianError(f"{name} deviates from Hermitian by {dev:.3e}")


def _jacobi_eigh(h: np.ndarray, want_vectors: bool = False):
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Sweeps row pairs until the off-diagonal Frobenius norm drops below
    1e-14 * ||h||_F, capped at 100 sweeps.  Returns eigenvalues in
    nonincreasing order (and the matching unitary columns on request).
    """
    a = np.array((h + h.conj().T) / 2.0, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128) if want_vectors else None
    threshold = _JACOBI_OFF_FACTOR * float(np.linalg.norm(a))
    for _ in range(_JACOBI_SWEEP_LIMIT):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                absg = abs(g)
                if absg == 0.0:
                    continue
                phase = g / absg
                alpha = a[p, p].real
                beta = a[q, q].real
                tau = (beta - alpha) / (2.0 * absg)
                sign = 1.0 if tau >= 0.0 else -1.0
                t = sign / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # unitary block: U_pp = c*phase, U_pq = s*phase, U_qp = -s, U_qq = c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * phase * col_p - s * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * np.conj(phase) * row_p - s * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * phase * vp - s * vq
                    v[:, q] = s * phase * vp + c * vq
    else:
        raise RuntimeError("Jacobi sweep limit reached without convergence")
    values = np.diag(a).real
    order = np.argsort(values)[::-1]
    if v is not None:
        return values[order], v[:, order]
    return values[order], None


def hermitian_eigenvalues(h: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted nonincreasing.

    Raises NotHermitianError when ||h - h*||_max exceeds
    tol * max(1, ||h||_max).
    """
    h = np.asarray(h, dtype=np.complex128)
    _require_hermitian(h, tol, "h")
    values, _ = _jacobi_eigh(h)
    return values


def hermitian_eigensystem(h: np.ndarray, tol: float = DEFAULT_TOL):
    """Eigenvalues (nonincreasing) and matching orthonormal eigenvectors."""
    h = np.asarray(h, dtype=np.complex128)
    _require_hermitian(h, tol, "h")
    return _jacobi_eigh(h, want_vectors=True)


def singular_values(a: np.ndarray) -> np.ndarray:
    """Singular values in nonincreasing order."""
    return np.linalg.svd(np.asarray(a, dtype=np.complex128), compute_uv=False)


def operator_norm(a: np.ndarray) -> float:
    """Largest singular value."""
    return float(singular_values(a)[0])


def trace_norm(a: np.ndarray) -> float:
    """Sum of singular values."""
    return float(np.sum(singular_values(a)))


def loewner_leq(x: np.ndarray, y: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Order test x <= y: the gap y - x must be PSD up to a relative slack.

    Both arguments must be Hermitian within tol.  The slack is one-sided,
    min eigenvalue >= -tol * max(1, ||y - x||), so exact rank-deficient
    gap matrices pass despite rounding.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    _require_hermitian(x, tol, "x")
    _require_hermitian(y, tol, "y")
    gap = y - x
    values = hermitian_eigenvalues(gap, tol=max(tol, DEFAULT_TOL))
    scale = max(1.0, float(np.max(np.abs(values))) if values.size else 0.0)
    return bool(values[-1] >= -tol * scale)


def is_strictly_upper(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Entries on and below the diagonal vanish (relative to the largest entry)."""
    a = np.asarray(a, dtype=np.complex128)
    return max_abs(np.tril(a)) <= tol * max(1.0, max_abs(a))


def is_upper(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Entries strictly below the diagonal vanish (relative to the largest entry)."""
    a = np.asarray(a, dtype=np.complex128)
    return max_abs(np.tril(a, -1)) <= tol * max(1.0, max_abs(a))
