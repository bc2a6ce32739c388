"""Three-qutrit state space and Hamiltonian assembly.

Each atom is a three-level system {|0>, |1>, |r>} with the fixed ordering
0 < 1 < r.  The composite basis index of a product state (l1, l2, l3) is
9*l1 + 3*l2 + l3, i.e. atom 1 is the slowest index.  All other modules
import the ordering from here; nothing else is allowed to define it.

Natural units are used throughout: hbar = 1 and the peak Rabi frequency
omega0 = 1, so times are measured in 1/omega0 and energies in omega0.
"""

from dataclasses import dataclass
from enum import IntEnum
import math

import numpy as np

DIM_ATOM = 3
N_ATOMS = 3
DIM = DIM_ATOM**N_ATOMS


class Level(IntEnum):
    """Single-atom levels in the fixed global ordering."""

    Q0 = 0
    Q1 = 1
    RYD = 2


LEVEL_LABELS = {Level.Q0: "0", Level.Q1: "1", Level.RYD: "r"}

# Single-atom operators in the {|0>, |1>, |r>} ordering.
IDENTITY_3 = np.eye(3, dtype=complex)

#: |r><1|, drives the qubit state |1> up to the Rydberg state
SIGMA_PLUS = np.zeros((3, 3), dtype=complex)
SIGMA_PLUS[Level.RYD, Level.Q1] = 1.0

#: |1><r|
SIGMA_MINUS = SIGMA_PLUS.conj().T.copy()

#: |r><r|
N_RYD = np.zeros((3, 3), dtype=complex)
N_RYD[Level.RYD, Level.RYD] = 1.0


def basis_index(l1, l2, l3):
    """Composite index of the product state (l1, l2, l3)."""
    return 9 * int(l1) + 3 * int(l2) + int(l3)


def basis_levels(index):
    """Inverse of :func:`basis_index`."""
    if not 0 <= index < DIM:
        raise ValueError(f"basis index {index} outside [0, {DIM})")
    return index // 9, (index // 3) % 3, index % 3


def basis_label(index):
    """Human-readable label like '01r' for a composite basis index."""
    return "".join(LEVEL_LABELS[Level(l)] for l in basis_levels(index))


def basis_state(l1, l2, l3):
    """Unit vector |l1 l2 l3> in the 27-dimensional space."""
    psi = np.zeros(DIM, dtype=complex)
    psi[basis_index(l1, l2, l3)] = 1.0
    return psi


def embed_single_atom_op(op, atom):
    """Embed a 3x3 single-atom operator at the given slot (atom = 1, 2 or 3).

    Returns Id (x) ... (x) op (x) ... (x) Id under the fixed tensor ordering
    atom1 (x) atom2 (x) atom3.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (3, 3):
        raise ValueError(f"expected a 3x3 operator, got shape {op.shape}")
    if atom not in (1, 2, 3):
        raise ValueError(f"atom index must be 1, 2 or 3, got {atom}")
    factors = [IDENTITY_3, IDENTITY_3, IDENTITY_3]
    factors[atom - 1] = op
    return np.kron(np.kron(factors[0], factors[1]), factors[2])


@dataclass(frozen=True)
class SystemParams:
    """Physical constants of the three-atom system in natural units.

    Attributes
    ----------
    omega0 : float
        Peak Rabi frequency; 1.0 by convention.
    v12 : float
        Rydberg-Rydberg interaction between the two gate atoms (units omega0).
    v13, v23 : float
        Interactions between each gate atom and the spectator atom.
    epsilon : float
        Fraction of the addressing beam's intensity leaking to the spectator;
        the spectator Rabi coupling is sqrt(epsilon) * Omega(t).
    """

    omega0: float = 1.0
    v12: float = 21.1
    v13: float = 21.1
    v23: float = 21.1
    epsilon: float = 0.0

    def __post_init__(self):
        if not (self.omega0 > 0 and math.isfinite(self.omega0)):
            raise ValueError(f"omega0 must be positive and finite, got {self.omega0}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        for name in ("v12", "v13", "v23"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class HamiltonianParts:
    """Time-independent pieces of H(t) on one subsystem.

    The full matrix at drive values (omega, delta) is assembled as

        H = omega * drive_upper + conj(omega) * drive_upper^dag
            + diag(interaction_diag - delta * rydberg_counts)

    which every propagator and snapshot builder shares.  ``drive_upper``
    collects the sigma+ halves of all driven atoms (already including the
    1/2 prefactor and the sqrt(epsilon) spectator scaling), so the drive
    block is exactly linear in omega and, for the spectator, scales exactly
    as sqrt(epsilon).
    """

    drive_upper: np.ndarray
    rydberg_counts: np.ndarray
    interaction_diag: np.ndarray

    @property
    def dim(self):
        return self.rydberg_counts.shape[0]

    def matrix(self, omega, delta):
        """Dense Hermitian snapshot of H at drive values (omega, delta)."""
        h = omega * self.drive_upper + np.conj(omega) * self.drive_upper.conj().T
        np.fill_diagonal(h, h.diagonal() + self.interaction_diag - delta * self.rydberg_counts)
        return h


def hamiltonian_parts(params):
    """Static structure of the full 27-dimensional Hamiltonian."""
    sp1 = embed_single_atom_op(SIGMA_PLUS, 1)
    sp2 = embed_single_atom_op(SIGMA_PLUS, 2)
    sp3 = embed_single_atom_op(SIGMA_PLUS, 3)
    drive = 0.5 * params.omega0 * (sp1 + sp2 + math.sqrt(params.epsilon) * sp3)

    n1 = embed_single_atom_op(N_RYD, 1).real
    n2 = embed_single_atom_op(N_RYD, 2).real
    n3 = embed_single_atom_op(N_RYD, 3).real
    counts = np.diag(n1 + n2 + n3).copy()
    interaction = np.diag(
        params.v12 * n1 @ n2 + params.v13 * n1 @ n3 + params.v23 * n2 @ n3
    ).copy()
    return HamiltonianParts(np.ascontiguousarray(drive), counts, interaction)


def gate_pair_parts(params):
    """Static structure of H_cz alone on the 9-dimensional gate-pair space."""
    sp = SIGMA_PLUS
    drive = 0.5 * params.omega0 * (np.kron(sp, IDENTITY_3) + np.kron(IDENTITY_3, sp))
    n_a = np.kron(N_RYD, IDENTITY_3).real
    n_b = np.kron(IDENTITY_3, N_RYD).real
    counts = np.diag(n_a + n_b).copy()
    interaction = np.diag(params.v12 * n_a @ n_b).copy()
    return HamiltonianParts(np.ascontiguousarray(drive), counts, interaction)


def third_atom_parts(params):
    """Static structure of the spectator Hamiltonian alone (3-dimensional)."""
    drive = 0.5 * params.omega0 * math.sqrt(params.epsilon) * SIGMA_PLUS
    counts = np.diag(N_RYD).real.copy()
    interaction = np.zeros(3)
    return HamiltonianParts(np.ascontiguousarray(drive), counts, interaction)


def build_hamiltonian(params, omega_t, delta_t):
    """Full 27x27 Hamiltonian at one instant.

    Parameters
    ----------
    params : SystemParams
    omega_t : complex
        Rabi amplitude at time t; its phase carries any drive phase jump.
    delta_t : float
        Detuning at time t.
    """
    if not (math.isfinite(omega_t.real if isinstance(omega_t, complex) else omega_t)
            and math.isfinite(complex(omega_t).imag)):
        raise ValueError("omega_t must be finite")
    if not math.isfinite(delta_t):
        raise ValueError("delta_t must be finite")
    return hamiltonian_parts(params).matrix(complex(omega_t), float(delta_t))
