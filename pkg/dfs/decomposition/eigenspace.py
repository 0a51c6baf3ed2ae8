"""Brute-force joint eigenspaces of all group elements.

Serves as the oracle for the character/projector decomposition and as the
one-dimensional-irrep search for non-Abelian subgroups.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from dfs.pauli.element import apply_to_state, check_dense
from dfs.subgroup.closure import PauliSubgroup

logger = logging.getLogger("dfs.decomposition")

_EIGENVALUES = np.array([1, 1j, -1, -1j], dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class JointEigenspace:
    """States v with G_n v = i**exponents[n] v for every element G_n."""

    exponents: Tuple[int, ...]
    basis: np.ndarray  # rows are orthonormal states

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]


@dataclass(frozen=True, eq=False)
class SearchResult:
    n_qubits: int
    is_abelian: bool
    spaces: List[JointEigenspace] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return not self.spaces

    @property
    def dimensions(self) -> Dict[Tuple[int, ...], int]:
        return {space.exponents: space.dimension for space in self.spaces}

    @property
    def total_dimension(self) -> int:
        return sum(space.dimension for space in self.spaces)


def _null_columns(matrix: np.ndarray, atol: float) -> np.ndarray:
    """Orthonormal basis of the null space, with an absolute singular-value cutoff."""
    _, singular, vh = np.linalg.svd(matrix, full_matrices=True)
    rank = int(np.sum(singular > atol))
    return vh[rank:].conj().T


def _label(group: PauliSubgroup, rows: np.ndarray, atol: float) -> Tuple[int, ...]:
    lead = rows[0]
    exps = []
    for element in group.elements:
        value = np.vdot(lead, apply_to_state(element, lead))
        exp = int(np.argmin(np.abs(_EIGENVALUES - value)))
        moved = apply_to_state(element, rows.T)
        if np.abs(moved - _EIGENVALUES[exp] * rows.T).max() > atol:
            raise ArithmeticError(f"joint eigenspace is not invariant under {element}")
        exps.append(exp)
    return tuple(exps)


def joint_eigenspaces(
    group: PauliSubgroup,
    dense_limit: Optional[int] = None,
    atol: float = 1e-9,
) -> List[JointEigenspace]:
    """Intersect eigenspaces generator by generator, splitting on each eigenvalue.

    Every element is a product of the independent generators and an identity
    multiple, so the surviving spaces are joint eigenspaces of the whole group;
    each is labelled with its eigenvalue on every element.
    """
    check_dense(group.n_qubits, dense_limit)
    dim = 1 << group.n_qubits
    spaces: List[np.ndarray] = [np.eye(dim, dtype=np.complex128)]
    for generator in group.independent_generators:
        refined = []
        for columns in spaces:
            moved = apply_to_state(generator, columns)
            for value in _EIGENVALUES:
                coeffs = _null_columns(moved - value * columns, atol)
                if coeffs.shape[1]:
                    refined.append(columns @ coeffs)
        spaces = refined
        if not spaces:
            break
    out = []
    for columns in spaces:
        rows = columns.T.copy()
        out.append(JointEigenspace(_label(group, rows, max(atol, 1e-8)), rows))
    out.sort(key=lambda space: space.exponents)
    logger.info(f"[JOINT] order {group.order}: {len(out)} joint eigenspaces")
    return out


def nonabelian_one_dim_search(
    group: PauliSubgroup,
    dense_limit: Optional[int] = None,
) -> SearchResult:
    """Joint eigenvectors of every element, i.e. carriers of 1-D irreps.

    Empty for every non-Abelian Pauli subgroup: two anticommuting elements
    cannot share an eigenvector.
    """
    spaces = joint_eigenspaces(group, dense_limit)
    return SearchResult(group.n_qubits, group.is_abelian, spaces)
