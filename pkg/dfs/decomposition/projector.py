"""Irrep projectors and multiplicities for Abelian Pauli subgroups."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from dfs.errors import CharacterMismatchError, NonAbelianError
from dfs.pauli.element import DenseOperator, apply_to_state, check_dense, phase_value, trace_symbolic
from dfs.subgroup.characters import Character
from dfs.subgroup.closure import PauliSubgroup

logger = logging.getLogger("dfs.decomposition")


@dataclass(frozen=True, eq=False)
class IrrepProjector:
    character: Character
    matrix: DenseOperator
    multiplicity: int


def _check_pair(group: PauliSubgroup, character: Character, what: str) -> None:
    if not group.is_abelian:
        raise NonAbelianError(what)
    if character.group != group:
        raise CharacterMismatchError(
            f"character {character.label} belongs to a different subgroup than the one given"
        )


def projector(
    group: PauliSubgroup,
    character: Character,
    dense_limit: Optional[int] = None,
) -> IrrepProjector:
    """P = (1/N) sum_n conj(Gamma(G_n)) G_n, normalized.

    Evaluated as prod_j (I + conj(Gamma(g_j)) g_j) / 2 over the independent
    generators, times the average over the identity multiples, which is 1 when
    Gamma(lambda*I) == lambda and 0 otherwise.
    """
    _check_pair(group, character, "projector construction")
    check_dense(group.n_qubits, dense_limit)
    dim = 1 << group.n_qubits
    if not character.is_supported:
        matrix = np.zeros((dim, dim), dtype=np.complex128)
    else:
        matrix = np.eye(dim, dtype=np.complex128)
        for g, exp in zip(group.independent_generators, character.generator_exps):
            moved = apply_to_state(g, matrix)
            matrix = (matrix + np.conj(phase_value(exp)) * moved) / 2
    trace = np.trace(matrix).real
    return IrrepProjector(character, matrix, int(round(trace)))


def multiplicity(group: PauliSubgroup, character: Character) -> int:
    """m_k = (1/N) sum_n conj(chi_k(G_n)) chi(G_n) with natural traces taken symbolically.

    Only the identity multiples have nonzero trace, so the sum runs over them.
    """
    _check_pair(group, character, "multiplicity")
    total = sum(np.conj(character.value(s)) * trace_symbolic(s) for s in group.scalar_elements)
    value = total.real / group.order
    rounded = int(round(value))
    if abs(value - rounded) > 1e-8 or abs(total.imag) > 1e-8:
        raise ArithmeticError(f"non-integer multiplicity {total / group.order}")
    return rounded


def check_projector(proj: IrrepProjector, tol: float = 1e-10) -> dict:
    """Idempotence, Hermiticity and integer-trace residuals."""
    m = proj.matrix
    return {
        "idempotence": float(np.abs(m @ m - m).max(initial=0.0)),
        "hermiticity": float(np.abs(m - m.conj().T).max(initial=0.0)),
        "trace_offset": float(abs(np.trace(m).real - proj.multiplicity)),
        "tolerance": tol,
    }
