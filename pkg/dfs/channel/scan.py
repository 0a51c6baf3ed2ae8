"""Purity and fidelity of one state under many random group-algebra channels."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from config import settings
from dfs.channel.density import DensityMatrix, fidelity, purity
from dfs.channel.kraus import apply_channel, random_group_algebra_kraus
from dfs.errors import DegenerateDrawError, QubitCountError
from dfs.subgroup.closure import PauliSubgroup

logger = logging.getLogger("dfs.channel")

_RESEEDS = 8


@dataclass
class ScanTrial:
    index: int
    purity: float
    fidelity: float
    trace_error: float


@dataclass
class ScanReport:
    n_qubits: int
    seed: int
    n_ops: int
    trials: List[ScanTrial] = field(default_factory=list)

    @property
    def min_purity(self) -> float:
        return min(t.purity for t in self.trials)

    @property
    def mean_purity(self) -> float:
        return float(np.mean([t.purity for t in self.trials]))

    @property
    def min_fidelity(self) -> float:
        return min(t.fidelity for t in self.trials)

    @property
    def mean_fidelity(self) -> float:
        return float(np.mean([t.fidelity for t in self.trials]))

    @property
    def max_trace_error(self) -> float:
        return max(t.trace_error for t in self.trials)

    def stays_pure(self, tol: float = 1e-9) -> bool:
        return 1.0 - self.min_purity < tol


def decoherence_scan(
    group: PauliSubgroup,
    state: np.ndarray,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    n_ops: int = 4,
    dense_limit: Optional[int] = None,
) -> ScanReport:
    """Apply ``trials`` independent random channels to |psi><psi|.

    Trial d draws from its own spawned stream; a singular draw moves on to the
    next child of that stream.
    """
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    psi = np.asarray(state, dtype=np.complex128)
    if psi.shape != (1 << group.n_qubits,):
        raise QubitCountError(f"state of shape {psi.shape} on {group.n_qubits} qubits")
    rho = DensityMatrix.from_state(psi)
    report = ScanReport(group.n_qubits, seed, n_ops)
    for index, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        kraus = None
        for attempt in child.spawn(_RESEEDS):
            try:
                kraus = random_group_algebra_kraus(group, n_ops, attempt, dense_limit)
                break
            except DegenerateDrawError as e:
                logger.warning(f"[SCAN] trial {index}: {e}")
        if kraus is None:
            raise DegenerateDrawError(0.0)
        out = apply_channel(kraus, rho)
        report.trials.append(
            ScanTrial(
                index=index,
                purity=purity(out),
                fidelity=fidelity(out, psi),
                trace_error=float(abs(np.trace(out.matrix) - 1)),
            )
        )
    logger.info(
        f"[SCAN] {trials} channels on {group.n_qubits} qubits: "
        f"min purity {report.min_purity:.6f}, min fidelity {report.min_fidelity:.6f}"
    )
    return report
