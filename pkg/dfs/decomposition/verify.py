"""Randomized check of the DFS condition A_d |psi_z> = c_d |psi_z> for
Kraus operators drawn from the group algebra."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from config import settings
from dfs.decomposition.basis import DfsBasis
from dfs.errors import CharacterMismatchError, QubitCountError
from dfs.pauli.element import group_algebra_matrix
from dfs.subgroup.closure import PauliSubgroup

logger = logging.getLogger("dfs.decomposition")


@dataclass(frozen=True, eq=False)
class TrialOutcome:
    index: int
    coefficients: np.ndarray
    eigenvalue: complex
    expected_eigenvalue: complex
    residual: float
    spread: float

    @property
    def worst(self) -> float:
        return max(self.residual, self.spread, abs(self.eigenvalue - self.expected_eigenvalue))


@dataclass
class VerificationReport:
    character_label: int
    n_states: int
    tolerance: float
    trials: List[TrialOutcome] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((t.worst for t in self.trials), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance

    @property
    def failure_count(self) -> int:
        return sum(t.worst >= self.tolerance for t in self.trials)


def complex_normal(rng: np.random.Generator, size) -> np.ndarray:
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def trial_generators(seed: int, trials: int) -> List[np.random.Generator]:
    """One independent stream per trial index."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


def _run_trials(
    group: PauliSubgroup,
    vectors: np.ndarray,
    gamma: Optional[np.ndarray],
    report: VerificationReport,
    trials: int,
    seed: int,
    dense_limit: Optional[int],
) -> None:
    for index, rng in enumerate(trial_generators(seed, trials)):
        coefficients = complex_normal(rng, group.order)
        expected = None if gamma is None else complex(coefficients @ gamma)
        if vectors.shape[0] == 0:
            expected = 0j if expected is None else expected
            report.trials.append(TrialOutcome(index, coefficients, expected, expected, 0.0, 0.0))
            continue
        a = group_algebra_matrix(group.elements, coefficients, dense_limit)
        images = vectors @ a.T  # row z holds A |psi_z>
        eigs = np.einsum("ij,ij->i", vectors.conj(), images)
        residual = float(np.linalg.norm(images - eigs[:, None] * vectors, axis=1).max())
        shared = complex(eigs.mean())
        spread = float(np.abs(eigs - shared).max())
        if expected is None:
            expected = shared
        report.trials.append(TrialOutcome(index, coefficients, shared, expected, residual, spread))


def verify_dfs(
    group: PauliSubgroup,
    basis: DfsBasis,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    tolerance: Optional[float] = None,
    dense_limit: Optional[int] = None,
) -> VerificationReport:
    """Draw A = sum_n a_n G_n and test every basis state against one shared c.

    c must also equal sum_n a_n Gamma(G_n). Failures are reported, never raised.
    """
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    tolerance = settings.RESIDUAL_TOL if tolerance is None else tolerance
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if basis.character.group != group:
        raise CharacterMismatchError("basis was built for a different subgroup")
    report = VerificationReport(basis.character.label, basis.multiplicity, tolerance)
    _run_trials(group, basis.vectors, basis.character.value_array, report, trials, seed, dense_limit)
    logger.info(
        f"[VERIFY] character {report.character_label}: {report.n_states} states, "
        f"max residual {report.max_residual:.2e}, passed={report.passed}"
    )
    return report


def verify_states(
    group: PauliSubgroup,
    states: np.ndarray,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    tolerance: Optional[float] = None,
    dense_limit: Optional[int] = None,
) -> VerificationReport:
    """The same test for arbitrary states (rows), with no character to compare c against.

    A superposition across two characters fails for almost every draw.
    """
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    tolerance = settings.RESIDUAL_TOL if tolerance is None else tolerance
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    vectors = np.atleast_2d(np.asarray(states, dtype=np.complex128))
    if vectors.shape[1] != 1 << group.n_qubits:
        raise QubitCountError(f"states of length {vectors.shape[1]} on {group.n_qubits} qubits")
    vectors = vectors / np.linalg.norm(vectors, axis=1, keepdims=True)
    report = VerificationReport(0, vectors.shape[0], tolerance)
    _run_trials(group, vectors, None, report, trials, seed, dense_limit)
    logger.info(f"[VERIFY] {report.n_states} free states: max residual {report.max_residual:.2e}")
    return report
