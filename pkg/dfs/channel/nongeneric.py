"""A DFS that exists only for specially related bath coefficients.

The 8-element non-Abelian group Q8 = {+-III, +-XXI, +-IZZ, +-iXYZ} acts on
three qubits as four copies of one two-dimensional irrep, carried by the pairs
of basis states in ``Q8_SUBSPACES``. Kraus operators that are upper triangular
on every pair keep the first state of each pair, the code ``CODE_STATES``,
decoherence free; generic group-algebra operators do not.

With Y = [[0, -i], [i, 0]], iXYZ acts on each pair as [[0, 1], [-1, 0]].
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from config import settings
from dfs.channel.kraus import KrausSet, kraus_from_coefficients, random_group_algebra_kraus
from dfs.decomposition.verify import complex_normal
from dfs.errors import ConstraintViolationError, DegenerateDrawError
from dfs.pauli.element import apply_to_state, format_pauli, parse_pauli
from dfs.subgroup.closure import PauliSubgroup, closure

logger = logging.getLogger("dfs.channel")

Q8_GENERATORS = ("XXI", "IZZ")

# (psi_0, psi_1) of each invariant pair, as basis-state indices
Q8_SUBSPACES: Tuple[Tuple[int, int], ...] = (
    (0b000, 0b110),
    (0b111, 0b001),
    (0b100, 0b010),
    (0b011, 0b101),
)
CODE_STATES: Tuple[int, ...] = tuple(pair[0] for pair in Q8_SUBSPACES)

CONSTRAINT_TOL = 1e-10
DFS_FAILURE = 1e-6


def q8_subgroup() -> PauliSubgroup:
    return closure([parse_pauli(text) for text in Q8_GENERATORS])


def _pair_vectors(pair: Tuple[int, int]) -> np.ndarray:
    """(8, 2) array whose columns are the pair's basis states."""
    columns = np.zeros((8, 2), dtype=np.complex128)
    columns[pair[0], 0] = 1
    columns[pair[1], 1] = 1
    return columns


@dataclass
class Q8Representation:
    """Each element's 2x2 matrix on every invariant pair.

    ``residuals[z]`` is the largest ||G V^z - V^z Gamma(G)|| over the group.
    """

    blocks: Dict[str, List[np.ndarray]] = field(default_factory=dict)
    residuals: List[float] = field(default_factory=list)

    def gamma(self, element: str) -> np.ndarray:
        return self.blocks[element][0]

    @property
    def copies_agree(self) -> bool:
        return all(
            np.allclose(block, matrices[0], atol=1e-12)
            for matrices in self.blocks.values()
            for block in matrices
        )


def q8_representation(group: Optional[PauliSubgroup] = None) -> Q8Representation:
    group = q8_subgroup() if group is None else group
    rep = Q8Representation()
    pairs = [_pair_vectors(pair) for pair in Q8_SUBSPACES]
    worst = [0.0] * len(pairs)
    for element in group.elements:
        key = format_pauli(element)
        rep.blocks[key] = []
        for z, columns in enumerate(pairs):
            moved = apply_to_state(element, columns)
            block = columns.conj().T @ moved
            rep.blocks[key].append(block)
            worst[z] = max(worst[z], float(np.abs(moved - columns @ block).max()))
    rep.residuals = worst
    return rep


def triangular_block(c: complex, d: complex, e: complex) -> np.ndarray:
    return np.array([[c, d], [0, e]], dtype=np.complex128)


def block_residual(operator: np.ndarray, block: np.ndarray) -> float:
    """Largest deviation of ``operator`` from acting as ``block`` on every pair."""
    worst = 0.0
    for pair in Q8_SUBSPACES:
        columns = _pair_vectors(pair)
        worst = max(worst, float(np.abs(operator @ columns - columns @ block).max()))
    return worst


def _check_constraints(c1, c2, d1, d2, e1, e2, tol: float) -> None:
    checks = (
        ("conj(c1)*d1 + conj(c2)*d2 = 0", abs(np.conj(c1) * d1 + np.conj(c2) * d2)),
        ("|c1|^2 + |c2|^2 = 1", abs(abs(c1) ** 2 + abs(c2) ** 2 - 1)),
        (
            "|d1|^2 + |d2|^2 + |e1|^2 + |e2|^2 = 1",
            abs(abs(d1) ** 2 + abs(d2) ** 2 + abs(e1) ** 2 + abs(e2) ** 2 - 1),
        ),
    )
    for name, deviation in checks:
        if deviation > tol:
            raise ConstraintViolationError(name, float(deviation))


def triangular_kraus(
    c1: complex,
    c2: complex,
    d1: complex,
    d2: complex,
    e1: complex,
    e2: complex,
    tol: float = CONSTRAINT_TOL,
) -> KrausSet:
    """A_d = (c_d+e_d)/2 III + d_d/2 XXI + (c_d-e_d)/2 IZZ + d_d/2 iXYZ, d = 1, 2."""
    _check_constraints(c1, c2, d1, d2, e1, e2, tol)
    group = q8_subgroup()
    slots = {text: group.index(parse_pauli(text)) for text in ("+III", "+XXI", "+IZZ", "+iXYZ")}
    coefficients = np.zeros((2, group.order), dtype=np.complex128)
    for row, (c, d, e) in enumerate(((c1, d1, e1), (c2, d2, e2))):
        coefficients[row, slots["+III"]] = (c + e) / 2
        coefficients[row, slots["+XXI"]] = d / 2
        coefficients[row, slots["+IZZ"]] = (c - e) / 2
        coefficients[row, slots["+iXYZ"]] = d / 2
    return kraus_from_coefficients(group, coefficients)


def random_triangular_parameters(rng: np.random.Generator) -> Tuple[complex, ...]:
    """(c1, c2, d1, d2, e1, e2) satisfying the three constraints.

    d is a multiple of (-conj(c2), conj(c1)), which is orthogonal to c.
    """
    c = complex_normal(rng, 2)
    c /= np.linalg.norm(c)
    alpha = complex(complex_normal(rng, 1)[0])
    alpha *= rng.uniform(0, 1) / abs(alpha)
    d = alpha * np.array([-np.conj(c[1]), np.conj(c[0])])
    e = complex_normal(rng, 2)
    e *= np.sqrt(1 - abs(alpha) ** 2) / np.linalg.norm(e)
    return complex(c[0]), complex(c[1]), complex(d[0]), complex(d[1]), complex(e[0]), complex(e[1])


def code_residual(kraus: KrausSet) -> float:
    """Largest ||A |c> - lambda_A |c>|| over operators and code states, with one
    lambda_A shared by the whole code."""
    worst = 0.0
    for a in kraus.operators:
        images = a[:, list(CODE_STATES)]
        eigs = np.array([images[state, col] for col, state in enumerate(CODE_STATES)])
        shared = eigs.mean()
        target = np.zeros_like(images)
        for col, state in enumerate(CODE_STATES):
            target[state, col] = shared
        worst = max(worst, float(np.linalg.norm(images - target, axis=0).max()))
    return worst


@dataclass
class ProbeReport:
    seed: int
    draws: int
    threshold: float
    unconstrained_residuals: List[float] = field(default_factory=list)
    constrained_residuals: List[float] = field(default_factory=list)

    @property
    def unconstrained_failures(self) -> int:
        return sum(r > self.threshold for r in self.unconstrained_residuals)

    @property
    def constrained_failures(self) -> int:
        return sum(r > self.threshold for r in self.constrained_residuals)

    @property
    def failure_fraction(self) -> float:
        return self.unconstrained_failures / max(len(self.unconstrained_residuals), 1)


def genericity_probe(
    seed: Optional[int] = None,
    draws: int = 64,
    n_ops: int = 2,
    threshold: float = DFS_FAILURE,
) -> ProbeReport:
    """Test the code under free group-algebra draws and under constrained ones."""
    seed = settings.DEFAULT_SEED if seed is None else seed
    group = q8_subgroup()
    report = ProbeReport(seed, draws, threshold)
    free_seeds, tied_seeds = np.random.SeedSequence(seed).spawn(2)
    for child in free_seeds.spawn(draws):
        try:
            kraus = random_group_algebra_kraus(group, n_ops, child)
        except DegenerateDrawError as e:
            logger.warning(f"[PROBE] skipped draw: {e}")
            continue
        report.unconstrained_residuals.append(code_residual(kraus))
    for child in tied_seeds.spawn(draws):
        params = random_triangular_parameters(np.random.default_rng(child))
        report.constrained_residuals.append(code_residual(triangular_kraus(*params)))
    logger.info(
        f"[PROBE] {report.unconstrained_failures}/{len(report.unconstrained_residuals)} free draws "
        f"break the code, {report.constrained_failures} constrained"
    )
    return report
