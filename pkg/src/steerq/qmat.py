"""Two-qubit density matrices: construction, validation, Bloch analysis, fidelity.

Conventions: computational basis with H -> |0>, V -> |1>; Pauli matrices in the
standard representation (sigma_y has entries -i, +i).  All operations are pure
and return immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
BLOCH_TOL = 1e-9

JACOBI_OFF_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class MatrixValidationError(ValueError):
    """A matrix failed a structural requirement (shape, Hermiticity, trace, PSD)."""


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, copy=True)
    out.setflags(write=False)
    return out


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a finite complex 2-D array."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise MatrixValidationError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if arr.size == 0:
        raise MatrixValidationError("matrix must be non-empty")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise MatrixValidationError("matrix contains non-finite entries")
    return arr


def _as_square_hermitian(m) -> np.ndarray:
    arr = as_complex_matrix(m)
    rows, cols = arr.shape
    if rows != cols:
        raise MatrixValidationError(f"expected a square matrix, got {rows}x{cols}")
    dev = float(np.max(np.abs(arr - arr.conj().T)))
    if dev > HERMITICITY_TOL:
        raise MatrixValidationError(
            f"matrix is not Hermitian: max |M - M^H| = {dev:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )
    return (arr + arr.conj().T) / 2.0


def hermitian_eigendecompose(m, off_tol: float = JACOBI_OFF_TOL,
                             max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigenvalues (ascending) and orthonormal eigenvector columns of a Hermitian matrix.

    Cyclic Jacobi with complex Givens rotations; each pivot (p, q) is first
    phase-rotated so the off-diagonal entry is real, then annihilated by a
    plane rotation.  Converges when the off-diagonal Frobenius norm drops
    below ``off_tol``.
    """
    a = _as_square_hermitian(m)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    if n == 1:
        return np.array([a[0, 0].real]), v

    def _off_norm() -> float:
        return math.sqrt(float(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2)))

    converged = False
    for _ in range(max_sweeps):
        if _off_norm() <= off_tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(a[p, q])
                if r <= off_tol / (n * n):
                    continue
                phase = a[p, q] / r
                theta = 0.5 * math.atan2(2.0 * r, a[p, p].real - a[q, q].real)
                c, s = math.cos(theta), math.sin(theta)
                # column rotation A <- A J with J[p,p]=J[q,q]=c,
                # J[q,p] = s*conj(phase), J[p,q] = -s*phase
                col_p = a[:, p] * c + a[:, q] * (s * np.conj(phase))
                col_q = -a[:, p] * (s * phase) + a[:, q] * c
                a[:, p], a[:, q] = col_p, col_q
                # row rotation A <- J^H A
                row_p = a[p, :] * c + a[q, :] * (s * phase)
                row_q = -a[p, :] * (s * np.conj(phase)) + a[q, :] * c
                a[p, :], a[q, :] = row_p, row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = v[:, p] * c + v[:, q] * (s * np.conj(phase))
                vec_q = -v[:, p] * (s * phase) + v[:, q] * c
                v[:, p], v[:, q] = vec_p, vec_q
    if not converged and _off_norm() > off_tol:
        raise ArithmeticError(
            f"Jacobi eigendecomposition did not converge in {max_sweeps} sweeps"
        )

    eigenvalues = np.diag(a).real.copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


@dataclass(frozen=True)
class DensityMatrix:
    """A validated Hermitian, unit-trace, positive-semidefinite matrix."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def validate_density(m) -> DensityMatrix:
    """Validate Hermiticity, unit trace and positivity; report the failing check."""
    arr = as_complex_matrix(m)
    rows, cols = arr.shape
    if rows != cols:
        raise MatrixValidationError(f"density matrix must be square, got {rows}x{cols}")
    herm_dev = float(np.max(np.abs(arr - arr.conj().T)))
    if herm_dev > HERMITICITY_TOL:
        raise MatrixValidationError(
            f"not Hermitian: max |M - M^H| = {herm_dev:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )
    trace_dev = abs(complex(np.trace(arr)) - 1.0)
    if trace_dev > TRACE_TOL:
        raise MatrixValidationError(
            f"trace differs from 1 by {trace_dev:.3e} (tolerance {TRACE_TOL:.0e})"
        )
    eigenvalues, _ = hermitian_eigendecompose(arr)
    lambda_min = float(eigenvalues[0])
    if lambda_min < -PSD_TOL:
        raise MatrixValidationError(
            f"not positive semidefinite: min eigenvalue {lambda_min:.3e} "
            f"below -{PSD_TOL:.0e}"
        )
    return DensityMatrix(_freeze((arr + arr.conj().T) / 2.0))


def maximally_mixed(dim: int = 4) -> DensityMatrix:
    return DensityMatrix(_freeze(np.eye(dim, dtype=complex) / dim))


def _check_werner_params(theta: float, chi: float) -> None:
    if not 0.0 <= theta <= math.pi / 4 + 1e-12:
        raise ValueError(f"theta={theta!r} outside [0, pi/4]")
    if not 0.0 <= chi <= 1.0:
        raise ValueError(f"chi={chi!r} outside [0, 1]")


def make_werner_like(theta: float, chi: float) -> DensityMatrix:
    """chi * |phi><phi| + (1-chi) * I/4 with |phi> = cos(2 theta)|00> + sin(2 theta)|11>.

    theta in [0, pi/4]; theta = pi/8 gives the maximally entangled state.
    """
    _check_werner_params(theta, chi)
    phi = np.zeros(4, dtype=complex)
    phi[0] = math.cos(2.0 * theta)
    phi[3] = math.sin(2.0 * theta)
    rho = chi * np.outer(phi, phi.conj()) + (1.0 - chi) * np.eye(4) / 4.0
    return validate_density(rho)


def bell_phi_plus() -> DensityMatrix:
    """The projector onto (|00> + |11>)/sqrt(2)."""
    return make_werner_like(math.pi / 8, 1.0)


@dataclass(frozen=True)
class BlochDecomposition:
    """Local Bloch vectors and the 3x3 spin correlation matrix."""

    a: np.ndarray  # Alice Bloch vector, shape (3,)
    b: np.ndarray  # Bob Bloch vector, shape (3,)
    c: np.ndarray  # correlation matrix c[i, j], shape (3, 3)

    def __post_init__(self):
        for name, vec in (("a", self.a), ("b", self.b)):
            if float(np.linalg.norm(vec)) > 1.0 + BLOCH_TOL:
                raise MatrixValidationError(f"|{name}| exceeds 1: {np.linalg.norm(vec)}")
        if float(np.max(np.abs(self.c))) > 1.0 + BLOCH_TOL:
            raise MatrixValidationError("correlation matrix entry exceeds 1 in modulus")


def _real_trace(rho: np.ndarray, op: np.ndarray) -> float:
    val = complex(np.trace(rho @ op))
    if abs(val.imag) > HERMITICITY_TOL:
        raise MatrixValidationError(
            f"expectation value has imaginary residue {val.imag:.3e}"
        )
    return val.real


def bloch_decompose(rho: DensityMatrix) -> BlochDecomposition:
    """a_i = tr(rho sigma_i x I), b_j = tr(rho I x sigma_j), c_ij = tr(rho sigma_i x sigma_j)."""
    if rho.dim != 4:
        raise MatrixValidationError("Bloch decomposition requires a two-qubit state")
    m = rho.matrix
    a = np.array([_real_trace(m, np.kron(s, I2)) for s in PAULIS])
    b = np.array([_real_trace(m, np.kron(I2, s)) for s in PAULIS])
    c = np.array([[_real_trace(m, np.kron(si, sj)) for sj in PAULIS] for si in PAULIS])
    return BlochDecomposition(_freeze(a), _freeze(b), _freeze(c))


def bloch_reconstruct(bd: BlochDecomposition) -> DensityMatrix:
    """Rebuild the state from its Bloch data; inverse of bloch_decompose."""
    rho = np.eye(4, dtype=complex)
    for i, s in enumerate(PAULIS):
        rho += bd.a[i] * np.kron(s, I2) + bd.b[i] * np.kron(I2, s)
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            rho += bd.c[i, j] * np.kron(si, sj)
    return validate_density(rho / 4.0)


# unit-trace PSD matrices have entries of order 1, so the fidelity path can
# afford a tighter Jacobi tolerance than the general-purpose default
_FIDELITY_OFF_TOL = 1e-14
# eigenvalues this far (relatively) below the largest are rounding noise and
# must not survive the sqrt, which would amplify them to ~1e-9
_SQRT_CLAMP_RTOL = 1e-14


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    eigenvalues, vectors = hermitian_eigendecompose(m, off_tol=_FIDELITY_OFF_TOL)
    clamped = np.clip(eigenvalues, 0.0, None)
    clamped[clamped < _SQRT_CLAMP_RTOL * clamped.max()] = 0.0
    return (vectors * np.sqrt(clamped)) @ vectors.conj().T


def fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Uhlmann fidelity F = [tr sqrt(sqrt(rho) sigma sqrt(rho))]^2, in [0, 1].

    Evaluated as the squared trace norm of sqrt(rho) sqrt(sigma).  The
    singular values come from the Hermitian block embedding [[0, B], [B^H, 0]]
    (eigenvalues +-s_i), which avoids the sqrt-of-near-zero-eigenvalue noise
    of the direct formula.
    """
    if rho.dim != sigma.dim:
        raise MatrixValidationError(
            f"dimension mismatch: {rho.dim} vs {sigma.dim}"
        )
    b = _psd_sqrt(rho.matrix) @ _psd_sqrt(sigma.matrix)
    n = b.shape[0]
    block = np.zeros((2 * n, 2 * n), dtype=complex)
    block[:n, n:] = b
    block[n:, :n] = b.conj().T
    eigenvalues, _ = hermitian_eigendecompose(block, off_tol=_FIDELITY_OFF_TOL)
    value = float(np.sum(eigenvalues[eigenvalues > 0.0])) ** 2
    return min(max(value, 0.0), 1.0)
