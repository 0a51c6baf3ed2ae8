"""DFS basis extraction by projecting computational basis states."""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

import numpy as np
from scipy.linalg import subspace_angles

from config import settings
from dfs.decomposition.projector import IrrepProjector, projector
from dfs.subgroup.characters import Character, characters
from dfs.subgroup.closure import PauliSubgroup

logger = logging.getLogger("dfs.decomposition")


@dataclass(frozen=True, eq=False)
class DfsBasis:
    """Orthonormal states spanning one character's invariant subspace.

    ``vectors`` has shape (multiplicity, 2**K); amplitudes follow the
    lexicographic computational-basis order.
    """

    character: Character
    vectors: np.ndarray

    @property
    def multiplicity(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def to_json(self) -> dict:
        return {
            "character_label": self.character.label,
            "multiplicity": self.multiplicity,
            "vectors": [[[float(a.real), float(a.imag)] for a in v] for v in self.vectors],
        }


@dataclass(frozen=True, eq=False)
class IrrepComponent:
    """One character with its basis; the dense projector is not retained."""

    character: Character
    projector_trace: int
    basis: DfsBasis


def orthonormal_columns(matrix: np.ndarray, null_tol: float) -> np.ndarray:
    """Gram-Schmidt over the columns in index order, dropping null residuals.

    Returns the accepted vectors as rows.
    """
    residual = np.array(matrix, dtype=np.complex128, copy=True)
    accepted = []
    col = 0
    n_cols = residual.shape[1]
    while col < n_cols:
        norms = np.linalg.norm(residual[:, col:], axis=0)
        hits = np.flatnonzero(norms > null_tol)
        if hits.size == 0:
            break
        col += int(hits[0])
        vector = residual[:, col] / norms[hits[0]]
        accepted.append(vector)
        residual -= np.outer(vector, vector.conj() @ residual)
        col += 1
    if not accepted:
        return np.zeros((0, matrix.shape[0]), dtype=np.complex128)
    return np.array(accepted)


def basis_from_projector(proj: IrrepProjector, null_tol: Optional[float] = None) -> DfsBasis:
    vectors = orthonormal_columns(proj.matrix, settings.NULL_TOL if null_tol is None else null_tol)
    return DfsBasis(proj.character, vectors)


def dfs_basis(
    group: PauliSubgroup,
    character: Character,
    dense_limit: Optional[int] = None,
    null_tol: Optional[float] = None,
) -> DfsBasis:
    """Orthonormal basis of the projector's range; empty when m_k = 0."""
    basis = basis_from_projector(projector(group, character, dense_limit), null_tol)
    logger.debug(f"[BASIS] character {character.label}: {basis.multiplicity} states")
    return basis


def iter_components(
    group: PauliSubgroup,
    dense_limit: Optional[int] = None,
    null_tol: Optional[float] = None,
) -> Iterator[IrrepComponent]:
    """One dense projector alive at a time."""
    for character in characters(group):
        proj = projector(group, character, dense_limit)
        basis = basis_from_projector(proj, null_tol)
        trace = proj.multiplicity
        del proj
        yield IrrepComponent(character, trace, basis)


def decompose(
    group: PauliSubgroup,
    dense_limit: Optional[int] = None,
    null_tol: Optional[float] = None,
) -> List[IrrepComponent]:
    return list(iter_components(group, dense_limit, null_tol))


def subspace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Sine of the largest principal angle between the row spans of a and b."""
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    if a.shape[0] != b.shape[0]:
        return 1.0
    if a.shape[0] == 0:
        return 0.0
    angles = subspace_angles(a.T, b.T)
    return float(np.sin(np.max(angles)))
