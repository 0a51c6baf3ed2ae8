"""Closed-form DFS dimensions and the sweep that checks them against m_k."""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Union

import numpy as np

from dfs.decomposition.basis import basis_from_projector
from dfs.decomposition.projector import multiplicity, projector
from dfs.errors import DimensionFormulaError
from dfs.subgroup.characters import characters
from dfs.subgroup.closure import PauliSubgroup, PhaseClass
from dfs.subgroup.sampling import random_abelian_subgroup

logger = logging.getLogger("dfs.decomposition")

_SCALARS = {
    PhaseClass.NO_PHASE_FACTORS: 1,
    PhaseClass.MINUS_IDENTITY_ONLY: 2,
    PhaseClass.CONTAINS_MINUS_IDENTITY: 4,
}


def dimension_formula(
    n_qubits: int,
    order: int,
    phase_class: Union[PhaseClass, str],
    supported: bool = True,
) -> int:
    """m_k = |S| * 2**K / N for supported characters, 0 otherwise.

    |S| is the number of identity multiples: 1 (2**K/N), 2 (2**(K+1)/N) or
    4 (2**(K+2)/N). A character with Gamma(-I) = 1 is never supported.
    """
    try:
        phase_class = PhaseClass(phase_class)
    except ValueError:
        known = ", ".join(c.value for c in PhaseClass)
        raise DimensionFormulaError(
            f"unknown phase class {phase_class!r}; choose one of {known}"
        ) from None
    scalars = _SCALARS[phase_class]
    if n_qubits < 1 or order < 1:
        raise DimensionFormulaError(f"need K >= 1 and N >= 1, got K={n_qubits}, N={order}")
    numerator = scalars * 2 ** n_qubits
    if order % scalars or numerator % order:
        raise DimensionFormulaError(
            f"no {phase_class.value} subgroup of order {order} on {n_qubits} qubits"
        )
    if not supported:
        return 0
    return numerator // order


@dataclass
class SweepCase:
    n_qubits: int
    order: int
    phase_class: PhaseClass
    formula: int
    multiplicities: List[int]
    ranks: List[int]
    traces: List[int]
    agrees: bool


@dataclass
class SweepReport:
    seed: int
    cases: List[SweepCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.agrees for case in self.cases)

    @property
    def failures(self) -> List[SweepCase]:
        return [case for case in self.cases if not case.agrees]


def check_dimension_agreement(group: PauliSubgroup, dense_limit: Optional[int] = None) -> SweepCase:
    """Compare m_k, rank and trace of every supported projector with the closed form."""
    formula = dimension_formula(group.n_qubits, group.order, group.phase_class)
    mults, ranks, traces = [], [], []
    agrees = True
    for character in characters(group):
        m = multiplicity(group, character)
        if not character.is_supported:
            agrees &= m == 0
            continue
        proj = projector(group, character, dense_limit)
        trace = np.trace(proj.matrix).real
        rank = basis_from_projector(proj).multiplicity
        mults.append(m)
        ranks.append(rank)
        traces.append(proj.multiplicity)
        agrees &= m == formula == rank == proj.multiplicity and abs(trace - m) < 1e-8
    return SweepCase(group.n_qubits, group.order, group.phase_class, formula, mults, ranks, traces, agrees)


def sweep(
    qubit_counts: Iterable[int],
    count: int,
    seed: int,
    dense_limit: Optional[int] = None,
) -> SweepReport:
    """Random Abelian subgroups, alternating phase-free and full-phase ones."""
    rng = np.random.default_rng(seed)
    report = SweepReport(seed=seed)
    classes = (PhaseClass.NO_PHASE_FACTORS, PhaseClass.CONTAINS_MINUS_IDENTITY)
    for k in qubit_counts:
        for n in range(count):
            group = random_abelian_subgroup(k, rng, phase_class=classes[n % 2])
            report.cases.append(check_dimension_agreement(group, dense_limit))
        logger.info(f"[SWEEP] K={k}: {count} subgroups checked")
    return report
