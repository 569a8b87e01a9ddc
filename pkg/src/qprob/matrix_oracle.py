"""Reference 2x2 complex linear algebra.

Everything here is computed straight from matrix entries (trace, determinant,
Pauli decomposition), with no knowledge of the probability parametrizations
built on top, so these routines serve as the trusted side of the dual-route
checks used throughout the package and its test suite.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-12

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def as_matrix2(matrix) -> np.ndarray:
    """Coerce to a complex 2x2 ndarray, rejecting anything of another shape."""
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    return m


def hermiticity_defect(matrix) -> float:
    m = as_matrix2(matrix)
    return float(np.max(np.abs(m - m.conj().T)))


def unitarity_defect(matrix) -> float:
    m = as_matrix2(matrix)
    return float(np.max(np.abs(m @ m.conj().T - IDENTITY)))


def require_hermitian(matrix, tol: float = HERMITIAN_TOL, name: str = "matrix") -> np.ndarray:
    m = as_matrix2(matrix)
    defect = float(np.max(np.abs(m - m.conj().T)))
    if defect > tol:
        raise DomainError(f"{name} is not Hermitian (defect {defect:.3e} exceeds {tol:.1e})")
    return m


def require_unitary(matrix, tol: float = UNITARY_TOL, name: str = "matrix") -> np.ndarray:
    m = as_matrix2(matrix)
    defect = float(np.max(np.abs(m @ m.conj().T - IDENTITY)))
    if defect > tol:
        raise DomainError(f"{name} is not unitary (defect {defect:.3e} exceeds {tol:.1e})")
    return m


def pauli_components(matrix) -> tuple[float, np.ndarray]:
    """Coefficients (h0, hvec) of H = h0*I + hvec . sigma for Hermitian H."""
    m = require_hermitian(matrix)
    h0 = 0.5 * float(m[0, 0].real + m[1, 1].real)
    hvec = np.array([m[1, 0].real, m[1, 0].imag, 0.5 * float(m[0, 0].real - m[1, 1].real)])
    return h0, hvec


def eigenvalues_hermitian(matrix, tol: float = HERMITIAN_TOL) -> tuple[float, float]:
    """Both eigenvalues of a Hermitian 2x2 matrix, ascending.

    Uses the quadratic formula with the numerically stable branch: the root of
    larger magnitude comes from the formula, the other from the determinant.
    """
    m = require_hermitian(matrix, tol)
    tr = float(m[0, 0].real + m[1, 1].real)
    det = float(m[0, 0].real * m[1, 1].real - (m[0, 1] * m[1, 0]).real)
    disc = tr * tr - 4.0 * det
    # disc >= 0 exactly for Hermitian input; clamp rounding dust
    root = np.sqrt(max(disc, 0.0))
    big = 0.5 * (tr + root) if tr >= 0.0 else 0.5 * (tr - root)
    small = det / big if big != 0.0 else 0.0
    return (small, big) if small <= big else (big, small)


def conjugate_by_unitary(rho, u, tol: float = UNITARY_TOL) -> np.ndarray:
    """u @ rho @ u^dagger, with a unitarity guard on u."""
    m = as_matrix2(rho)
    w = require_unitary(u, tol, name="conjugating matrix")
    return w @ m @ w.conj().T


def expm_hermitian_generator(h, t: float) -> np.ndarray:
    """exp(i*H*t) for Hermitian H, evaluated in closed form.

    With H = h0*I + hvec . sigma the exponential factors exactly into
    exp(i h0 t) (cos(|hvec| t) I + i sin(|hvec| t) (hvec/|hvec|) . sigma),
    so no series truncation or scaling-and-squaring is involved.
    """
    h0, hvec = pauli_components(h)
    norm = float(np.linalg.norm(hvec))
    phase = np.exp(1j * h0 * t)
    if norm == 0.0:
        return phase * IDENTITY
    angle = norm * t
    axis = hvec / norm
    sigma_axis = axis[0] * SIGMA_X + axis[1] * SIGMA_Y + axis[2] * SIGMA_Z
    return phase * (np.cos(angle) * IDENTITY + 1j * np.sin(angle) * sigma_axis)


def heisenberg_exact(a0, h, t: float) -> np.ndarray:
    """Exact solution A(t) = exp(iHt) A(0) exp(-iHt) of dA/dt = i[H, A]."""
    a = require_hermitian(a0, name="observable")
    u = expm_hermitian_generator(h, t)
    return u @ a @ u.conj().T
