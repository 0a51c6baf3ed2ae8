"""Density matrices and the purity / fidelity diagnostics."""

from dataclasses import dataclass
from typing import Dict

import numpy as np

from dfs.errors import InvalidDensityMatrixError, QubitCountError

TRACE_TOL = 1e-10
HERMITIAN_TOL = 1e-10
POSITIVITY_FLOOR = -1e-8


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit trace; basis in lexicographic order."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise QubitCountError(f"density matrix must be square, got shape {m.shape}")
        dim = m.shape[0]
        if dim < 2 or dim & (dim - 1):
            raise QubitCountError(f"dimension {dim} is not 2**K")
        object.__setattr__(self, "matrix", m)
        v = self.violations()
        if v["hermiticity"] >= HERMITIAN_TOL:
            raise InvalidDensityMatrixError("rho = rho^dagger", v["hermiticity"])
        if v["trace"] >= TRACE_TOL:
            raise InvalidDensityMatrixError("tr(rho) = 1", v["trace"])
        if v["min_eigenvalue"] < POSITIVITY_FLOOR:
            raise InvalidDensityMatrixError("rho >= 0", -v["min_eigenvalue"])

    @classmethod
    def from_state(cls, state: np.ndarray) -> "DensityMatrix":
        psi = np.asarray(state, dtype=np.complex128)
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        dim = 1 << n_qubits
        return cls(np.eye(dim, dtype=np.complex128) / dim)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_qubits(self) -> int:
        return self.dim.bit_length() - 1

    def violations(self) -> Dict[str, float]:
        m = self.matrix
        return {
            "trace": float(abs(np.trace(m) - 1)),
            "hermiticity": float(np.abs(m - m.conj().T).max()),
            "min_eigenvalue": float(np.linalg.eigvalsh((m + m.conj().T) / 2).min()),
        }

    @property
    def is_valid(self) -> bool:
        v = self.violations()
        return (
            v["trace"] < TRACE_TOL
            and v["hermiticity"] < HERMITIAN_TOL
            and v["min_eigenvalue"] >= POSITIVITY_FLOOR
        )


def purity(rho: DensityMatrix) -> float:
    """tr(rho**2); equals 1 exactly for pure states."""
    return float(np.real(np.trace(rho.matrix @ rho.matrix)))


def fidelity(rho: DensityMatrix, state: np.ndarray) -> float:
    """<psi|rho|psi>, the Uhlmann fidelity against a pure reference."""
    psi = np.asarray(state, dtype=np.complex128)
    psi = psi / np.linalg.norm(psi)
    return float(np.real(np.vdot(psi, rho.matrix @ psi)))


def reduced_state(rho: DensityMatrix, qubit: int) -> DensityMatrix:
    """Partial trace onto one qubit (1-based from the left)."""
    k = rho.n_qubits
    if not 1 <= qubit <= k:
        raise QubitCountError(f"qubit {qubit} outside 1..{k}")
    left, right = 1 << (qubit - 1), 1 << (k - qubit)
    tensor = rho.matrix.reshape(left, 2, right, left, 2, right)
    return DensityMatrix(np.einsum("aibajb->ij", tensor))
