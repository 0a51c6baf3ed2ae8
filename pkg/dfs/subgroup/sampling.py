"""Seeded random subgroups for property suites and sweeps."""

import logging
from typing import List, Optional, Union

import numpy as np

from dfs.pauli.element import Commutation, PauliElement, commutes, random_element
from dfs.subgroup.closure import PauliSubgroup, PhaseClass, reduce_symplectic, closure

logger = logging.getLogger("dfs.subgroup")

_MAX_ATTEMPTS = 200


def _random_hermitian(k: int, rng: np.random.Generator) -> PauliElement:
    p = random_element(k, rng, with_phase=False)
    return PauliElement(2 * int(rng.integers(0, 2)), p.x_mask, p.z_mask, k)


def random_abelian_subgroup(
    n_qubits: int,
    rng: np.random.Generator,
    phase_class: Union[PhaseClass, str] = PhaseClass.NO_PHASE_FACTORS,
    rank: Optional[int] = None,
) -> PauliSubgroup:
    """Draw up to ``rank`` commuting, GF(2)-independent Hermitian strings.

    Independence keeps identity multiples out of the closure; the requested
    phase class is then added as -I or iI.
    """
    phase_class = PhaseClass(phase_class)
    target = int(rng.integers(1, n_qubits + 1)) if rank is None else rank
    accepted: List[PauliElement] = []
    pivots = {}
    for _ in range(_MAX_ATTEMPTS):
        if len(accepted) >= target:
            break
        candidate = _random_hermitian(n_qubits, rng)
        if candidate.is_identity_multiple:
            continue
        if any(commutes(candidate, g) is Commutation.ANTICOMMUTE for g in accepted):
            continue
        vector, _ = reduce_symplectic(pivots, candidate.symplectic)
        if not vector:
            continue
        pivots[vector.bit_length() - 1] = (vector, 0)
        accepted.append(candidate)
    if phase_class is PhaseClass.MINUS_IDENTITY_ONLY:
        accepted.append(PauliElement.identity(n_qubits, 2))
    elif phase_class is PhaseClass.CONTAINS_MINUS_IDENTITY:
        accepted.append(PauliElement.identity(n_qubits, 1))
    logger.debug(f"[SAMPLE] abelian draw: {len(accepted)} generators, {phase_class.value}")
    return closure(accepted, n_qubits=n_qubits)


def random_nonabelian_subgroup(
    n_qubits: int,
    rng: np.random.Generator,
    max_generators: Optional[int] = None,
) -> PauliSubgroup:
    """Random elements with at least one anticommuting pair among them."""
    upper = n_qubits + 2 if max_generators is None else max_generators
    count = int(rng.integers(2, max(upper, 2) + 1))
    gens = [random_element(n_qubits, rng) for _ in range(count)]
    for _ in range(_MAX_ATTEMPTS):
        partner = random_element(n_qubits, rng)
        if commutes(gens[0], partner) is Commutation.ANTICOMMUTE:
            gens[-1] = partner
            break
        if gens[0].is_identity_multiple:
            gens[0] = random_element(n_qubits, rng)
    group = closure(gens, n_qubits=n_qubits)
    if group.is_abelian:
        raise RuntimeError("failed to draw an anticommuting pair")
    return group
