"""Kraus operator sets drawn from a subgroup's group algebra."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from dfs.channel.density import DensityMatrix
from dfs.decomposition.verify import complex_normal
from dfs.errors import (
    ConstraintViolationError,
    DegenerateDrawError,
    InvalidDensityMatrixError,
    QubitCountError,
)
from dfs.pauli.element import (
    DenseOperator,
    PauliElement,
    algebra_coefficients,
    check_dense,
    format_pauli,
    group_algebra_matrix,
)
from dfs.subgroup.closure import PauliSubgroup, closure

logger = logging.getLogger("dfs.channel")

NORMALIZATION_TOL = 1e-9
REPROJECTION_TOL = 1e-9
SINGULAR_FLOOR = 1e-12

Seed = Union[int, np.random.SeedSequence, np.random.Generator]


def normalization_residual(operators: Sequence[DenseOperator]) -> float:
    dim = operators[0].shape[0]
    total = sum(a.conj().T @ a for a in operators)
    return float(np.abs(total - np.eye(dim)).max())


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Operators A_d with sum_d A_d^dagger A_d = I.

    ``algebra_coefficients`` row d holds a_{d,n} over ``subgroup.elements``
    when the set lives in a group algebra.
    """

    n_qubits: int
    operators: Tuple[DenseOperator, ...]
    subgroup: Optional[PauliSubgroup] = None
    algebra_coefficients: Optional[np.ndarray] = None

    def __post_init__(self):
        if not self.operators:
            raise ValueError("a Kraus set needs at least one operator")
        dim = 1 << self.n_qubits
        for a in self.operators:
            if a.shape != (dim, dim):
                raise QubitCountError(f"Kraus operator of shape {a.shape} on {self.n_qubits} qubits")
        residual = normalization_residual(self.operators)
        if residual > NORMALIZATION_TOL:
            raise ConstraintViolationError("sum_d A_d^dagger A_d = I", residual)

    def __len__(self) -> int:
        return len(self.operators)

    def to_json(self) -> dict:
        coefficients = self.algebra_coefficients
        if coefficients is None:
            coefficients = [a.ravel() for a in self.operators]
        return {
            "n_qubits": self.n_qubits,
            "subgroup": [format_pauli(e) for e in self.subgroup.elements] if self.subgroup else [],
            "operators": [[[float(c.real), float(c.imag)] for c in row] for row in coefficients],
        }


def kraus_from_coefficients(
    group: PauliSubgroup,
    coefficients: np.ndarray,
    dense_limit: Optional[int] = None,
) -> KrausSet:
    coefficients = np.atleast_2d(np.asarray(coefficients, dtype=np.complex128))
    ops = tuple(group_algebra_matrix(group.elements, row, dense_limit) for row in coefficients)
    return KrausSet(group.n_qubits, ops, group, coefficients)


def random_group_algebra_kraus(
    group: PauliSubgroup,
    n_ops: int,
    seed: Seed,
    dense_limit: Optional[int] = None,
) -> KrausSet:
    """Random A_d = sum_n a_{d,n} G_n, right-multiplied by S**(-1/2).

    S = sum_d A_d^dagger A_d lies in the group algebra, so the corrected
    operators stay there; their coefficients are recovered by the trace inner
    product.
    """
    if n_ops < 1:
        raise ValueError(f"n_ops must be >= 1, got {n_ops}")
    check_dense(group.n_qubits, dense_limit)
    rng = np.random.default_rng(seed)
    raw = [
        group_algebra_matrix(group.elements, complex_normal(rng, group.order), dense_limit)
        for _ in range(n_ops)
    ]
    s = sum(a.conj().T @ a for a in raw)
    w, v = np.linalg.eigh(s)
    if w.min() < SINGULAR_FLOOR:
        raise DegenerateDrawError(float(w.min()))
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    ops = tuple(a @ inv_sqrt for a in raw)

    # each string appears once per identity multiple, hence the division
    coefficients = np.array(
        [algebra_coefficients(group.elements, a) / group.scalar_order for a in ops]
    )
    rebuilt = [group_algebra_matrix(group.elements, row, dense_limit) for row in coefficients]
    residual = max(float(np.abs(r - a).max()) for r, a in zip(rebuilt, ops))
    if residual > REPROJECTION_TOL:
        raise ArithmeticError(f"normalized Kraus operators left the group algebra ({residual:.2e})")
    logger.debug(f"[KRAUS] {n_ops} operators on order {group.order}, reprojection {residual:.1e}")
    return KrausSet(group.n_qubits, ops, group, coefficients)


def equal_weight_channel(group: PauliSubgroup, dense_limit: Optional[int] = None) -> KrausSet:
    """A_n = G_n / sqrt(N) for every element: the maximally mixing channel of the group."""
    coefficients = np.eye(group.order, dtype=np.complex128) / np.sqrt(group.order)
    return kraus_from_coefficients(group, coefficients, dense_limit)


def equal_weight_dephasing(n_qubits: int = 2) -> KrausSet:
    """The Q_Z-style preset: Z on every qubit, equal weights; for K=2 it is
    (1/2){II, ZI, IZ, ZZ}."""
    zs = [PauliElement.single("Z", q, n_qubits) for q in range(1, n_qubits + 1)]
    return equal_weight_channel(closure(zs, n_qubits=n_qubits))


def apply_channel(kraus: KrausSet, rho: DensityMatrix) -> DensityMatrix:
    """rho -> sum_d A_d rho A_d^dagger."""
    if rho.dim != 1 << kraus.n_qubits:
        raise QubitCountError(
            f"state on {rho.n_qubits} qubits, channel on {kraus.n_qubits} qubits"
        )
    out = sum(a @ rho.matrix @ a.conj().T for a in kraus.operators)
    try:
        return DensityMatrix(out)
    except InvalidDensityMatrixError as e:
        raise ArithmeticError(f"channel output left the state space: {e}") from e
