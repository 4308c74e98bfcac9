"""Dense complex matrix kernel.

Everything here works on plain ``numpy`` arrays of complex doubles; matrices
are small (at most a few thousand entries), so dense routines from
``numpy.linalg`` are used throughout.  Quantum states are wrapped in
:class:`DensityMatrix`, which validates the usual contracts (Hermitian,
unit trace, positive semidefinite) at construction time and records how the
total space factors into subsystems.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, ValidationError

# Absolute tolerances for state validation.  All states handled here have
# exact rational/surd entries, so machine precision leaves ample headroom.
HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """A validated quantum state on a tensor product of subsystems.

    Parameters
    ----------
    matrix : ndarray
        D x D complex matrix with D = prod(dims).
    dims : tuple of int
        Ordered subsystem dimensions (d_1, ..., d_N).
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValidationError(f"density matrix must be square, got shape {mat.shape}")
        if any(d < 1 for d in dims):
            raise ValidationError(f"subsystem dimensions must be positive, got {dims}")
        if int(np.prod(dims)) != mat.shape[0]:
            raise ValidationError(
                f"dims {dims} imply dimension {int(np.prod(dims))}, matrix is {mat.shape[0]}x{mat.shape[0]}"
            )
        if not np.all(np.isfinite(mat.view(float))):
            raise ValidationError("density matrix contains non-finite entries")
        herm_dev = np.abs(mat - mat.conj().T).max()
        if herm_dev > HERMITICITY_TOL:
            raise ValidationError(f"not Hermitian: max |M - M^dag| = {herm_dev:.3e}")
        tr = mat.trace()
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValidationError(f"trace is {tr}, expected 1")
        min_eig = float(np.linalg.eigvalsh(mat)[0])
        if min_eig < -PSD_TOL:
            raise ValidationError(f"not positive semidefinite: min eigenvalue {min_eig:.3e}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        """Total Hilbert-space dimension."""
        return self.matrix.shape[0]

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, (rA*rB) x (cA*cB)."""
    return np.kron(a, b)


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values of ``m``."""
    try:
        return float(np.linalg.svd(np.asarray(m), compute_uv=False).sum())
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"singular value computation failed: {exc}") from exc


def eig_hermitian(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending.

    Raises
    ------
    ValidationError
        If ``m`` is not Hermitian within ``HERMITICITY_TOL``.
    """
    m = np.asarray(m, dtype=complex)
    dev = np.abs(m - m.conj().T).max()
    if dev > HERMITICITY_TOL:
        raise ValidationError(f"eig_hermitian requires a Hermitian matrix, deviation {dev:.3e}")
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc


def _require_bipartite(rho: DensityMatrix, index: int, name: str) -> tuple[int, int]:
    if rho.n_parties != 2:
        raise ValidationError(f"{name} requires a bipartite state, got dims {rho.dims}")
    if index not in (1, 2):
        raise ValidationError(f"subsystem index must be 1 or 2, got {index}")
    return rho.dims


def partial_transpose(rho: DensityMatrix, subsystem: int = 2) -> np.ndarray:
    """Transpose the chosen tensor factor of a bipartite state.

    ``subsystem`` is 1-based.  The result is Hermitian but in general not
    positive, so a bare matrix is returned.
    """
    d1, d2 = _require_bipartite(rho, subsystem, "partial_transpose")
    r4 = rho.matrix.reshape(d1, d2, d1, d2)
    axes = (2, 1, 0, 3) if subsystem == 1 else (0, 3, 2, 1)
    return r4.transpose(axes).reshape(d1 * d2, d1 * d2)


def partial_trace(rho: DensityMatrix, keep: int) -> DensityMatrix:
    """Reduced state of one factor of a bipartite state (``keep`` is 1-based)."""
    d1, d2 = _require_bipartite(rho, keep, "partial_trace")
    r4 = rho.matrix.reshape(d1, d2, d1, d2)
    if keep == 1:
        red = np.einsum("ijkj->ik", r4)
        d = d1
    else:
        red = np.einsum("ijil->jl", r4)
        d = d2
    return DensityMatrix(red, (d,))
