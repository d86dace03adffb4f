"""Operator constructions for the engineered-reservoir model.

Physical picture: a four-level atom (three ground states |e>, |f>, |g> and an
excited state |r>) sits in a lossy single-mode cavity.  Two pairs of classical
drives plus the cavity-mediated Raman coupling turn cavity photon loss into an
effective collapse operator acting on the ground manifold alone,

    L = sqrt(Gamma) (sin(theta/2) |g><e| + e^{-i phi} cos(theta/2) |g><f|),

with Gamma = lambda^2 / kappa, lambda_j = Omega_j g / Delta, sin(theta/2) =
lambda_1 / lambda and phi = phi_1 - phi_2.  The master equation uses the
convention

    d rho / dt = 2 L rho L† - rho L†L - L†L rho,

under which the bright state decays at rate 2*Gamma.  That factor-2 convention
is kept verbatim everywhere in this package, including the cavity collapse
operator sqrt(kappa) a, so the derived and fitted decay rates agree.

Basis ordering is fixed: the ground triplet is {|e>, |f>, |g>} = indices
(0, 1, 2); composite spaces are atom (x) Fock with row-major index
``atom * (n_max + 1) + n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DimensionMismatchError, StateInvariantError
from .numlin import PureState, as_cmatrix
from .tolerances import TOL

__all__ = [
    "E", "F", "G", "ATOM_LABELS",
    "PhysicalParams", "ReservoirParams",
    "derive_reservoir", "lindblad_op", "dfs_basis",
    "frame_unitary", "frame_generator",
    "lindblad_rhs", "rotating_rhs",
    "fock_lowering", "hamiltonian_effective",
]

# Ground-manifold basis convention: {|e>, |f>, |g>} = (0, 1, 2).
E, F, G = 0, 1, 2
ATOM_LABELS = ("e", "f", "g")


@dataclass(frozen=True)
class PhysicalParams:
    """Lab-level rates, all in angular-frequency units.

    g      : atom-cavity coupling
    delta  : Raman detuning of the drives and the cavity
    omega1 : classical Rabi frequency on the |e> leg
    omega2 : classical Rabi frequency on the |f> leg
    phi1, phi2 : drive phases (radians)
    kappa  : cavity amplitude decay parameter (enters as L_c = sqrt(kappa) a)
    gamma  : atomic spontaneous-emission rate (used only perturbatively)
    """

    g: float
    delta: float
    omega1: float
    omega2: float
    phi1: float
    phi2: float
    kappa: float
    gamma: float

    def __post_init__(self):
        if not (self.g > 0.0 and self.delta > 0.0 and self.kappa > 0.0):
            raise StateInvariantError("g, delta and kappa must be positive")
        if self.omega1 < 0.0 or self.omega2 < 0.0:
            raise StateInvariantError("Rabi frequencies must be non-negative")
        if self.omega1 == 0.0 and self.omega2 == 0.0:
            raise StateInvariantError("at least one Rabi frequency must be nonzero")
        if self.gamma < 0.0:
            raise StateInvariantError("gamma must be non-negative")

    @classmethod
    def from_total_drive(cls, *, g: float, delta: float, omega: float, theta: float,
                         phi1: float = 0.0, phi2: float = 0.0,
                         kappa: float, gamma: float = 0.0) -> "PhysicalParams":
        """Split a total drive amplitude Omega into the two legs for a target theta.

        Omega_1 = Omega sin(theta/2) and Omega_2 = Omega cos(theta/2), the unique
        split for which lambda = Omega g / Delta and the mixing angle of the
        engineered collapse operator equals ``theta``.
        """
        return cls(g=g, delta=delta,
                   omega1=omega * math.sin(0.5 * theta),
                   omega2=omega * math.cos(0.5 * theta),
                   phi1=phi1, phi2=phi2, kappa=kappa, gamma=gamma)

    @property
    def omega_total(self) -> float:
        return math.hypot(self.omega1, self.omega2)

    def hierarchy_ratios(self) -> dict:
        """Separation-of-scales ratios behind the two adiabatic eliminations.

        The excited level drops out for delta >> omega_j, g; the cavity drops
        out for kappa >> g^2/delta, lambda_j.  All ratios are reported so a
        caller can warn when the model is pushed outside its regime.
        """
        lam1 = self.omega1 * self.g / self.delta
        lam2 = self.omega2 * self.g / self.delta
        lam = math.hypot(lam1, lam2)
        stark = self.g * self.g / self.delta
        return {
            "delta_over_g": self.delta / self.g,
            "delta_over_omega": self.delta / self.omega_total,
            "kappa_over_stark": self.kappa / stark,
            "kappa_over_lambda": self.kappa / lam,
        }


@dataclass(frozen=True)
class ReservoirParams:
    """Parameters (Gamma, theta, phi) of the engineered collapse operator.

    The Raman rates lambda_1, lambda_2 and their quadrature sum are carried
    along when the parameters were derived from lab rates; they stay ``None``
    for directly constructed reservoirs.  ``phi`` is intentionally NOT wrapped:
    the rotating-frame unitary depends on phi/2 and is 4*pi-periodic, so
    wrapping here would silently destroy half a turn of accumulated phase.
    """

    Gamma: float
    theta: float
    phi: float
    lambda1: Optional[float] = field(default=None)
    lambda2: Optional[float] = field(default=None)
    lam: Optional[float] = field(default=None)

    def __post_init__(self):
        if not self.Gamma > 0.0:
            raise StateInvariantError("Gamma must be positive")
        if not (-1e-12 <= self.theta <= math.pi + 1e-12):
            raise StateInvariantError(f"theta = {self.theta!r} outside [0, pi]")
        if self.lam is not None:
            lam = math.hypot(self.lambda1, self.lambda2)
            if abs(lam - self.lam) > 1e-12 * max(1.0, self.lam):
                raise StateInvariantError("lambda1, lambda2, lam are inconsistent")
            if abs(math.sin(0.5 * self.theta) - self.lambda1 / self.lam) > 1e-12:
                raise StateInvariantError("sin(theta/2) != lambda1/lambda")


def derive_reservoir(p: PhysicalParams) -> ReservoirParams:
    """Reduce lab rates to the engineered-reservoir parameters.

    lambda_j = Omega_j g / Delta, lambda = sqrt(lambda_1^2 + lambda_2^2),
    Gamma = lambda^2 / kappa, theta = 2 asin(lambda_1/lambda), phi = phi1 - phi2.
    """
    lam1 = p.omega1 * p.g / p.delta
    lam2 = p.omega2 * p.g / p.delta
    lam = math.hypot(lam1, lam2)
    if lam == 0.0:
        raise StateInvariantError("both Raman rates vanish: no engineered dissipation")
    return ReservoirParams(
        Gamma=lam * lam / p.kappa,
        theta=2.0 * math.asin(min(1.0, lam1 / lam)),
        phi=p.phi1 - p.phi2,
        lambda1=lam1, lambda2=lam2, lam=lam,
    )


def lindblad_op(r: ReservoirParams) -> np.ndarray:
    """The engineered collapse operator as a 3x3 matrix.

    Only the |g> row is populated: sqrt(Gamma) sin(theta/2) on <e| and
    sqrt(Gamma) e^{-i phi} cos(theta/2) on <f|.
    """
    s, c = math.sin(0.5 * r.theta), math.cos(0.5 * r.theta)
    sqrt_gamma = math.sqrt(r.Gamma)
    L = np.zeros((3, 3), dtype=np.complex128)
    L[G, E] = sqrt_gamma * s
    L[G, F] = sqrt_gamma * c * np.exp(-1j * r.phi)
    return L


def dfs_basis(theta: float, phi: float) -> tuple[PureState, PureState]:
    """Dark and bright states of the engineered collapse operator.

    dark   = cos(theta/2) |e> - e^{+i phi} sin(theta/2) |f>   (annihilated by L)
    bright = e^{-i phi} sin(theta/2) |e> + cos(theta/2) |f>   (decays at 2*Gamma)

    The pair is orthonormal and spans span{|e>, |f>}; together with |g> the
    dark state spans the decoherence-free subspace.  The theta -> 0, pi
    endpoints are the continuous limits of the same formulas (at theta = pi
    the dark state is -e^{i phi}|f>, global phase kept as is).
    """
    s, c = math.sin(0.5 * theta), math.cos(0.5 * theta)
    dark = PureState([c, -s * np.exp(1j * phi), 0.0])
    bright = PureState([s * np.exp(-1j * phi), c, 0.0])
    return dark, bright


def frame_unitary(theta: float, phi: float) -> np.ndarray:
    """Unitary mapping the instantaneous dark/bright pair onto fixed axes.

    U sends dark -> e^{i phi/2} (1,0,0)^T, bright -> e^{i phi/2} (0,1,0)^T and
    leaves |g> untouched.  ``phi`` must be passed unwrapped: U is 4*pi-periodic
    in phi, and the e^{i phi/2} factor at phi = 2*pi contributes a physical -pi
    to the accumulated cycle phase.
    """
    s, c = math.sin(0.5 * theta), math.cos(0.5 * theta)
    ep, em = np.exp(0.5j * phi), np.exp(-0.5j * phi)
    return np.array([
        [c * ep, -s * em, 0.0],
        [s * ep, c * em, 0.0],
        [0.0, 0.0, 1.0],
    ], dtype=np.complex128)


def frame_generator(theta: float, phi: float,
                    theta_dot: float, phi_dot: float) -> np.ndarray:
    """A = (dU/dt) U† in closed form; anti-Hermitian by construction.

    For the parametrisation above the result is independent of phi:

        A = (i phi_dot / 2) [[cos t, sin t, 0], [sin t, -cos t, 0], [0,0,0]]
          + (theta_dot / 2) [[0, -1, 0], [1, 0, 0], [0,0,0]]
    """
    del phi  # kept in the signature for contract symmetry; A does not depend on it
    ct, st = math.cos(theta), math.sin(theta)
    A = 0.5j * phi_dot * np.array([[ct, st, 0.0], [st, -ct, 0.0], [0.0, 0.0, 0.0]],
                                  dtype=np.complex128)
    A += 0.5 * theta_dot * np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
                                    dtype=np.complex128)
    return A


def _as_matrix(rho) -> np.ndarray:
    return rho.mat if hasattr(rho, "mat") else as_cmatrix(rho, copy=False)


def lindblad_rhs(rho, L) -> np.ndarray:
    """Dissipator 2 L rho L† - rho L†L - L†L rho (factor-2 convention).

    Output is exactly traceless and Hermitian for Hermitian input -- these are
    algebraic identities of the form, not numerical accidents.
    """
    m = _as_matrix(rho)
    Lm = as_cmatrix(L, copy=False)
    if m.shape != Lm.shape:
        raise DimensionMismatchError(
            f"state {m.shape} and collapse operator {Lm.shape} dimensions differ")
    LdL = Lm.conj().T @ Lm
    return 2.0 * (Lm @ m @ Lm.conj().T) - m @ LdL - LdL @ m


def rotating_rhs(rho_p, r: ReservoirParams, theta_dot: float, phi_dot: float) -> np.ndarray:
    """Master-equation right-hand side in the co-moving dark/bright frame.

    In this frame the collapse operator is sqrt(Gamma)|g'><f'| up to a global
    phase (which drops out of the dissipator), and the parameter motion enters
    through the anti-Hermitian generator A:

        d rho'/dt = 2 L' rho' L'† - {L'†L', rho'} + A rho' + rho' A†.

    The right-hand side does not depend on phi itself, only on the rates.
    """
    m = _as_matrix(rho_p)
    if m.shape != (3, 3):
        raise DimensionMismatchError("rotating-frame state must be 3x3")
    Lp = np.zeros((3, 3), dtype=np.complex128)
    Lp[G, F] = math.sqrt(r.Gamma)
    out = lindblad_rhs(m, Lp)
    A = frame_generator(r.theta, 0.0, theta_dot, phi_dot)
    out += A @ m + m @ A.conj().T
    return out


def fock_lowering(n_levels: int) -> np.ndarray:
    """Annihilation operator on a Fock ladder truncated to ``n_levels`` states."""
    if n_levels < 1:
        raise DimensionMismatchError("Fock ladder needs at least one level")
    a = np.zeros((n_levels, n_levels), dtype=np.complex128)
    for n in range(1, n_levels):
        a[n - 1, n] = math.sqrt(n)
    return a


def hamiltonian_effective(p: PhysicalParams, n_max: int) -> np.ndarray:
    """Raman Hamiltonian on the ground triplet (x) Fock ladder.

    H = (g^2/Delta) a†a |g><g|
        + [lambda_1 e^{-i phi_1} a |e><g| + lambda_2 e^{-i phi_2} a |f><g| + h.c.]

    The Stark term lives only on the |g> sector: the drive-induced shifts on
    |e> and |f> cancel between the two oppositely detuned drive components,
    while the cavity shift on |g> has no partner to cancel against.
    """
    if n_max < 1:
        raise DimensionMismatchError("n_max must be >= 1")
    nph = n_max + 1
    a = fock_lowering(nph)
    lam1 = p.omega1 * p.g / p.delta
    lam2 = p.omega2 * p.g / p.delta
    proj_g = np.zeros((3, 3), dtype=np.complex128)
    proj_g[G, G] = 1.0
    eg = np.zeros((3, 3), dtype=np.complex128)
    eg[E, G] = 1.0
    fg = np.zeros((3, 3), dtype=np.complex128)
    fg[F, G] = 1.0

    H = (p.g * p.g / p.delta) * np.kron(proj_g, a.conj().T @ a)
    coupling = (lam1 * np.exp(-1j * p.phi1) * np.kron(eg, a)
                + lam2 * np.exp(-1j * p.phi2) * np.kron(fg, a))
    H += coupling + coupling.conj().T
    return H
