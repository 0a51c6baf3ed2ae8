"""Pauli-group elements in symplectic form.

An element is ``i**phase_exp`` times a tensor product of single-qubit letters.
Each letter is stored as an (x, z) bit pair: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
The letter Y is the Hermitian matrix [[0, -i], [i, 0]], i.e. ``Y = i*X*Z``; the
extra ``i`` is folded into the multiplication rule so that the canonical string
"Y" carries phase_exp 0.

Qubit ordering: the leftmost letter is qubit 1 and the most significant bit of
both masks and of computational-basis indices, so "ZI" has z_mask 0b10 and acts
on |10> as -|10>.
"""

import enum
import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from config import settings
from dfs.errors import DenseLimitError, PauliParseError, QubitCountError

logger = logging.getLogger("dfs.pauli")

DenseOperator = npt.NDArray[np.complex128]

_LETTERS = "IXZY"  # indexed by x + 2*z
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_SIGNS = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_SIGN_PREFIXES = (("+i", 1), ("-i", 3), ("i", 1), ("+", 0), ("-", 2))
_POWERS_OF_I = np.array([1, 1j, -1, -1j], dtype=np.complex128)

_MATRICES = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def _popcount(value: int) -> int:
    return bin(value).count("1")


class Commutation(str, enum.Enum):
    COMMUTE = "commute"
    ANTICOMMUTE = "anticommute"


@dataclass(frozen=True, order=True)
class PauliElement:
    """One member of the Pauli group P_K.

    Field order doubles as the canonical sort order: phase_exp, then x_mask,
    then z_mask.
    """

    phase_exp: int
    x_mask: int
    z_mask: int
    n_qubits: int

    def __post_init__(self):
        if self.n_qubits < 1:
            raise QubitCountError(f"n_qubits must be >= 1, got {self.n_qubits}")
        limit = 1 << self.n_qubits
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise QubitCountError(
                f"masks {self.x_mask:#x}/{self.z_mask:#x} do not fit {self.n_qubits} qubits"
            )
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @classmethod
    def identity(cls, n_qubits: int, phase_exp: int = 0) -> "PauliElement":
        return cls(phase_exp, 0, 0, n_qubits)

    @classmethod
    def single(cls, letter: str, qubit: int, n_qubits: int) -> "PauliElement":
        """Letter on one qubit (1-based, counted from the left), identity elsewhere."""
        if not 1 <= qubit <= n_qubits:
            raise QubitCountError(f"qubit {qubit} outside 1..{n_qubits}")
        x, z = _LETTER_BITS[letter]
        bit = 1 << (n_qubits - qubit)
        return cls(0, bit * x, bit * z, n_qubits)

    @property
    def letters(self) -> str:
        out = []
        for pos in range(self.n_qubits - 1, -1, -1):
            x = (self.x_mask >> pos) & 1
            z = (self.z_mask >> pos) & 1
            out.append(_LETTERS[x + 2 * z])
        return "".join(out)

    @property
    def symplectic(self) -> int:
        """(x | z) packed into one integer, used for GF(2) elimination."""
        return (self.x_mask << self.n_qubits) | self.z_mask

    @property
    def weight(self) -> int:
        return _popcount(self.x_mask | self.z_mask)

    @property
    def is_identity_multiple(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def __mul__(self, other: "PauliElement") -> "PauliElement":
        return mul(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


def format_pauli(p: PauliElement) -> str:
    return _SIGNS[p.phase_exp] + p.letters


def parse_pauli(text: str, n_qubits: Optional[int] = None) -> PauliElement:
    """Parse ``sign? body`` with sign in {+, -, +i, -i, i} and body in {I,X,Y,Z}+."""
    phase_exp = 0
    offset = 0
    for prefix, exp in _SIGN_PREFIXES:
        if text.startswith(prefix):
            phase_exp, offset = exp, len(prefix)
            break
    body = text[offset:]
    if not body:
        raise PauliParseError(text, len(text), "empty body")
    x_mask = z_mask = 0
    for index, letter in enumerate(body):
        bits = _LETTER_BITS.get(letter)
        if bits is None:
            raise PauliParseError(text, offset + index, f"unexpected character {letter!r}")
        x_mask = (x_mask << 1) | bits[0]
        z_mask = (z_mask << 1) | bits[1]
    if n_qubits is not None and len(body) != n_qubits:
        raise PauliParseError(
            text, offset + min(len(body), n_qubits), f"expected {n_qubits} letters, got {len(body)}"
        )
    return PauliElement(phase_exp, x_mask, z_mask, len(body))


def _check_same_size(p: PauliElement, q: PauliElement) -> None:
    if p.n_qubits != q.n_qubits:
        raise QubitCountError(f"qubit-count mismatch: {p} has {p.n_qubits}, {q} has {q.n_qubits}")


def mul(p: PauliElement, q: PauliElement) -> PauliElement:
    _check_same_size(p, q)
    x = p.x_mask ^ q.x_mask
    z = p.z_mask ^ q.z_mask
    phase = (
        p.phase_exp
        + q.phase_exp
        + _popcount(p.x_mask & p.z_mask)
        + _popcount(q.x_mask & q.z_mask)
        + 2 * _popcount(p.z_mask & q.x_mask)
        - _popcount(x & z)
    )
    return PauliElement(phase % 4, x, z, p.n_qubits)


def product(elements: Iterable[PauliElement], n_qubits: int) -> PauliElement:
    return reduce(mul, elements, PauliElement.identity(n_qubits))


def commutes(p: PauliElement, q: PauliElement) -> Commutation:
    _check_same_size(p, q)
    overlap = _popcount(p.x_mask & q.z_mask) + _popcount(p.z_mask & q.x_mask)
    return Commutation.COMMUTE if overlap % 2 == 0 else Commutation.ANTICOMMUTE


def adjoint(p: PauliElement) -> PauliElement:
    # letters are Hermitian, so only the global phase conjugates
    return PauliElement(-p.phase_exp, p.x_mask, p.z_mask, p.n_qubits)


inverse = adjoint


def pauli_group_order(n_qubits: int) -> int:
    """|P_K| = 4**(K+1): four global phases times 4**K strings."""
    return 4 ** (n_qubits + 1)


def pauli_string_count(n_qubits: int) -> int:
    return 4 ** n_qubits


def phase_value(phase_exp: int) -> complex:
    return complex(_POWERS_OF_I[phase_exp % 4])


def check_dense(n_qubits: int, dense_limit: Optional[int] = None) -> None:
    limit = settings.DENSE_LIMIT if dense_limit is None else dense_limit
    if n_qubits > limit:
        raise DenseLimitError(n_qubits, limit)


def to_matrix(p: PauliElement, dense_limit: Optional[int] = None) -> DenseOperator:
    check_dense(p.n_qubits, dense_limit)
    factors = [_MATRICES[letter] for letter in p.letters]
    return phase_value(p.phase_exp) * reduce(np.kron, factors)


def trace_symbolic(p: PauliElement) -> complex:
    """Only the four identity multiples have nonzero trace, i**e * 2**K."""
    if not p.is_identity_multiple:
        return 0j
    return phase_value(p.phase_exp) * float(2 ** p.n_qubits)


@lru_cache(maxsize=settings.ACTION_CACHE_SIZE)
def monomial_action(p: PauliElement) -> Tuple[np.ndarray, np.ndarray]:
    """Return (targets, phases) with p|b> = phases[b] |targets[b]>.

    A Pauli string maps each basis state to one basis state, so the dense
    matrix is a phased permutation.
    """
    dim = 1 << p.n_qubits
    basis = np.arange(dim, dtype=np.int64)
    targets = basis ^ p.x_mask
    parity = np.zeros(dim, dtype=np.int64)
    z = p.z_mask
    bit = 0
    while z:
        if z & 1:
            parity ^= (basis >> bit) & 1
        z >>= 1
        bit += 1
    exps = (p.phase_exp + _popcount(p.x_mask & p.z_mask) + 2 * parity) % 4
    phases = _POWERS_OF_I[exps]
    targets.setflags(write=False)
    phases.setflags(write=False)
    return targets, phases


def apply_to_state(p: PauliElement, state: np.ndarray) -> np.ndarray:
    """p applied to a state vector, or to every column of a (2**K, d) array."""
    targets, phases = monomial_action(p)
    if state.ndim == 2:
        phases = phases[:, None]
    out = np.empty(state.shape, dtype=np.complex128)
    out[targets] = phases * state
    return out


def group_algebra_matrix(
    elements: Sequence[PauliElement],
    coefficients: Sequence[complex],
    dense_limit: Optional[int] = None,
) -> DenseOperator:
    """Dense sum_n a_n * G_n, built by scatter-add over the phased permutations."""
    if len(elements) != len(coefficients):
        raise ValueError(f"{len(elements)} elements but {len(coefficients)} coefficients")
    if not elements:
        raise ValueError("group algebra sum needs at least one element")
    n_qubits = elements[0].n_qubits
    check_dense(n_qubits, dense_limit)
    dim = 1 << n_qubits
    columns = np.arange(dim)
    out = np.zeros((dim, dim), dtype=np.complex128)
    for element, coefficient in zip(elements, coefficients):
        if element.n_qubits != n_qubits:
            raise QubitCountError(f"{element} does not act on {n_qubits} qubits")
        if coefficient == 0:
            continue
        targets, phases = monomial_action(element)
        out[targets, columns] += coefficient * phases
    return out


def random_element(n_qubits: int, rng: np.random.Generator, with_phase: bool = True) -> PauliElement:
    x_bits = rng.integers(0, 2, size=n_qubits)
    z_bits = rng.integers(0, 2, size=n_qubits)
    x = int("".join(str(b) for b in x_bits), 2)
    z = int("".join(str(b) for b in z_bits), 2)
    phase = int(rng.integers(0, 4)) if with_phase else 0
    return PauliElement(phase, x, z, n_qubits)


def full_pauli_group_generators(n_qubits: int) -> List[PauliElement]:
    """iI together with X and Z on every qubit generate all of P_K."""
    gens = [PauliElement.identity(n_qubits, phase_exp=1)]
    for qubit in range(1, n_qubits + 1):
        gens.append(PauliElement.single("X", qubit, n_qubits))
        gens.append(PauliElement.single("Z", qubit, n_qubits))
    return gens


def algebra_coefficients(elements: Sequence[PauliElement], matrix: DenseOperator) -> np.ndarray:
    """tr(G_n^dagger M) / 2**K for each element (trace inner product)."""
    dim = matrix.shape[0]
    columns = np.arange(dim)
    out = np.empty(len(elements), dtype=np.complex128)
    for n, element in enumerate(elements):
        targets, phases = monomial_action(element)
        out[n] = np.sum(np.conj(phases) * matrix[targets, columns]) / dim
    return out
