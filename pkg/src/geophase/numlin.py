"""Dense complex linear algebra and quantum-state substrate.

Everything here is sized for tiny Hilbert spaces (dim <= ~64: a three-level
atom, optionally tensored with a short Fock ladder), so plain dense
``numpy.ndarray`` storage in row-major layout is used throughout.  States are
thin immutable wrappers that validate their defining invariants once, at
construction; the wrapped arrays are marked read-only so values can be shared
freely between threads.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, NonHermitianError, StateInvariantError
from .tolerances import TOL

__all__ = [
    "DensityMatrix",
    "PureState",
    "as_cmatrix",
    "hermitian_eigenvalues",
    "trace_distance",
    "partial_trace_cavity",
]


def as_cmatrix(mat, *, copy: bool = True) -> np.ndarray:
    """Coerce to a square, finite complex128 array (the raw-matrix currency)."""
    m = np.array(mat, dtype=np.complex128, copy=copy)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise StateInvariantError("matrix contains NaN or Inf entries")
    return m


def _hermiticity_defect(m: np.ndarray) -> float:
    """max|M - M†| relative to max|M| (absolute if M is the zero matrix)."""
    scale = np.abs(m).max()
    defect = np.abs(m - m.conj().T).max()
    return defect / scale if scale > 0.0 else defect


class PureState:
    """Unit-norm complex state vector."""

    __slots__ = ("amplitudes",)

    def __init__(self, amplitudes, *, norm_atol: float = TOL.state_norm_atol):
        amp = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        if amp.size == 0:
            raise DimensionMismatchError("empty state vector")
        if not np.all(np.isfinite(amp.view(np.float64))):
            raise StateInvariantError("state vector contains NaN or Inf entries")
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > norm_atol:
            raise StateInvariantError(
                f"state vector norm {norm!r} differs from 1 by more than {norm_atol}")
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("PureState is immutable")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def overlap(self, other: "PureState") -> complex:
        """<self|other>."""
        if self.dim != other.dim:
            raise DimensionMismatchError("overlap of states with different dimensions")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def density_matrix(self) -> "DensityMatrix":
        """|psi><psi| as a DensityMatrix."""
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))


class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix.

    The default tolerances are the strict construction-time bounds; states
    coming out of an integrator are validated against the looser ``traj_*``
    drift allowances instead (see :meth:`from_evolution`).  No renormalisation
    is ever applied -- drift is a quality signal, not something to hide.
    """

    __slots__ = ("mat",)

    def __init__(self, mat, *,
                 herm_rel: float = TOL.state_herm_rel,
                 trace_atol: float = TOL.state_trace_atol,
                 eig_floor: float = TOL.state_eig_floor):
        m = as_cmatrix(mat)
        defect = _hermiticity_defect(m)
        if defect > herm_rel:
            raise StateInvariantError(
                f"density matrix not Hermitian: relative defect {defect:.3e} > {herm_rel}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > trace_atol:
            raise StateInvariantError(
                f"density matrix trace {tr!r} differs from 1 by more than {trace_atol}")
        min_eig = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T)).min())
        if min_eig < eig_floor:
            raise StateInvariantError(
                f"density matrix not positive semidefinite: min eigenvalue {min_eig:.3e}")
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("DensityMatrix is immutable")

    @classmethod
    def from_evolution(cls, mat) -> "DensityMatrix":
        """Wrap an integrator output, allowing trajectory-level drift."""
        return cls(mat, herm_rel=TOL.traj_herm_rel,
                   trace_atol=TOL.traj_trace_atol, eig_floor=TOL.traj_eig_floor)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def matrix_element(self, bra: PureState, ket: PureState) -> complex:
        """<bra| rho |ket>."""
        return complex(bra.amplitudes.conj() @ self.mat @ ket.amplitudes)

    def populations(self) -> np.ndarray:
        return self.mat.diagonal().real.copy()


def hermitian_eigenvalues(mat, *, with_vectors: bool = False,
                          herm_atol: float = TOL.herm_input_atol):
    """Eigenvalues (ascending) of a Hermitian matrix, optionally with eigenvectors.

    Rejects inputs whose Hermiticity defect exceeds ``herm_atol`` (the defect
    norm is included in the diagnostic).  When vectors are requested, each
    eigenpair is verified to reconstruct to ``||M v - w v|| <= eig_residual``.
    """
    m = as_cmatrix(mat)
    defect = float(np.abs(m - m.conj().T).max())
    if defect > herm_atol:
        raise NonHermitianError(
            f"matrix is not Hermitian: max|M - M†| = {defect:.3e} exceeds {herm_atol}")
    h = 0.5 * (m + m.conj().T)
    if not with_vectors:
        return np.linalg.eigvalsh(h)
    w, v = np.linalg.eigh(h)
    residuals = np.linalg.norm(h @ v - v * w, axis=0)
    worst = float(residuals.max())
    if worst > TOL.eig_residual:
        raise NonHermitianError(
            f"eigenpair residual {worst:.3e} exceeds {TOL.eig_residual}")
    return w, v


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """(1/2) sum |eigenvalues(a - b)|; a metric in [0, 1] for valid states."""
    if a.dim != b.dim:
        raise DimensionMismatchError(
            f"trace distance of states with dims {a.dim} and {b.dim}")
    diff = a.mat - b.mat
    td = 0.5 * float(np.abs(np.linalg.eigvalsh(0.5 * (diff + diff.conj().T))).sum())
    if td < -1e-12 or td > 1.0 + 1e-12:
        raise StateInvariantError(f"trace distance {td!r} outside [0, 1]")
    return min(max(td, 0.0), 1.0)


def partial_trace_cavity(state: DensityMatrix, atom_dim: int, fock_dim: int) -> DensityMatrix:
    """Trace out the cavity factor of a state on atom (x) Fock.

    The composite index convention is row-major: index = atom * fock_dim + n.
    """
    if atom_dim < 1 or fock_dim < 1:
        raise DimensionMismatchError("atom_dim and fock_dim must be positive")
    if state.dim != atom_dim * fock_dim:
        raise DimensionMismatchError(
            f"state dim {state.dim} does not factor as {atom_dim} x {fock_dim}")
    blocks = state.mat.reshape(atom_dim, fock_dim, atom_dim, fock_dim)
    reduced = np.einsum("anbn->ab", blocks)
    return DensityMatrix(reduced, herm_rel=TOL.traj_herm_rel,
                         trace_atol=TOL.traj_trace_atol, eig_floor=TOL.traj_eig_floor)
