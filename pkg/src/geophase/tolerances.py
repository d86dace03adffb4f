"""Single source of truth for numerical tolerances.

Production validation code and the test suite import the same constants, so a
bound can never silently diverge between the two.  Values are grouped by what
they guard:

* ``state_*``   -- construction-time invariants of quantum states,
* ``traj_*``    -- drift allowances along integrated trajectories (looser:
  they absorb integrator error and are treated as a quality signal),
* the rest     -- algebraic identities that hold to round-off.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # State construction invariants.
    state_herm_rel: float = 1e-12      # max|M - M†| <= rel * max|M|
    state_trace_atol: float = 1e-10    # |tr(rho) - 1|
    state_eig_floor: float = -1e-9     # min eigenvalue of a density matrix
    state_norm_atol: float = 1e-12     # | ||psi|| - 1 | for pure states

    # Trajectory drift allowances (no renormalisation is ever applied).
    traj_trace_atol: float = 1e-8
    traj_herm_rel: float = 1e-8
    traj_eig_floor: float = -1e-8

    # Inputs / outputs of linear-algebra operations.
    herm_input_atol: float = 1e-10     # hermitian_eigenvalues rejects above this
    eig_residual: float = 1e-9         # ||M v - w v|| per eigenpair

    # Algebraic identities (hold to round-off by construction).
    dark_state_atol: float = 1e-15     # ||L |dark>||
    unitarity_atol: float = 1e-14      # max|U†U - I|
    antihermitian_atol: float = 1e-14  # max|A + A†| for the frame generator
    rhs_trace_atol: float = 1e-14      # |tr(d rho/dt)|
    rotating_rhs_atol: float = 1e-12   # generic assembly vs componentwise form

    # Protocol-level checks.
    frame_equivalence_td: float = 1e-6   # lab vs rotating frame trace distance
    monotone_leak_atol: float = 1e-9     # ground population may not decrease
    damping_bound_atol: float = 1e-9     # coherence magnitude may not grow
    prob_sum_atol: float = 1e-9          # Ramsey probabilities sum to one
    coherence_floor: float = 1e-12       # |rho_dg(0)| below which the phase is undefined
    schedule_derivative_rtol: float = 1e-6  # finite-difference consistency check
    confluent_rel: float = 1e-12         # |l+ - l-| < rel * Gamma switches to the limit form


TOL = Tolerances()
