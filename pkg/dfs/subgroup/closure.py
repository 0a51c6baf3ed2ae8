"""Subgroup closure from generators and structural classification."""

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import settings
from dfs.errors import ClosureCapError, QubitCountError
from dfs.pauli.element import (
    Commutation,
    PauliElement,
    commutes,
    format_pauli,
    mul,
    parse_pauli,
)

logger = logging.getLogger("dfs.subgroup")


class PhaseClass(str, enum.Enum):
    """Which identity multiples a subgroup contains.

    NO_PHASE_FACTORS: only +I. MINUS_IDENTITY_ONLY: +-I. CONTAINS_MINUS_IDENTITY:
    all four of +-I, +-iI (the case with m_k = 2**(K+2)/N).
    """

    NO_PHASE_FACTORS = "no_phase_factors"
    MINUS_IDENTITY_ONLY = "minus_identity_only"
    CONTAINS_MINUS_IDENTITY = "contains_minus_identity"


def reduce_symplectic(pivots: Dict[int, Tuple[int, int]], vector: int) -> Tuple[int, int]:
    combo = 0
    while vector:
        entry = pivots.get(vector.bit_length() - 1)
        if entry is None:
            break
        vector ^= entry[0]
        combo ^= entry[1]
    return vector, combo


@dataclass(frozen=True, eq=False)
class PauliSubgroup:
    """A closed subgroup of P_K.

    Every element is written uniquely as ``(i**scalar_step)**t * g_1**b_1 ... g_r**b_r``
    with the independent generators multiplied left to right.
    """

    n_qubits: int
    elements: Tuple[PauliElement, ...]
    generators: Tuple[PauliElement, ...]
    independent_generators: Tuple[PauliElement, ...]
    scalar_step: int
    is_abelian: bool
    _pivots: Dict[int, Tuple[int, int]] = field(repr=False)
    _products: Tuple[PauliElement, ...] = field(repr=False)
    _index: Dict[PauliElement, int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> PauliElement:
        return PauliElement.identity(self.n_qubits)

    @property
    def scalar_order(self) -> int:
        return 4 // self.scalar_step

    @property
    def scalar_elements(self) -> List[PauliElement]:
        return [
            PauliElement.identity(self.n_qubits, t * self.scalar_step)
            for t in range(self.scalar_order)
        ]

    @property
    def contains_minus_identity(self) -> bool:
        return self.scalar_step <= 2

    @property
    def contains_imaginary_identity(self) -> bool:
        return self.scalar_step == 1

    @property
    def phase_class(self) -> PhaseClass:
        if self.scalar_step == 1:
            return PhaseClass.CONTAINS_MINUS_IDENTITY
        if self.scalar_step == 2:
            return PhaseClass.MINUS_IDENTITY_ONLY
        return PhaseClass.NO_PHASE_FACTORS

    @property
    def rank(self) -> int:
        return len(self.independent_generators)

    def __contains__(self, element: PauliElement) -> bool:
        return element in self._index

    def index(self, element: PauliElement) -> int:
        return self._index[element]

    def decompose(self, element: PauliElement) -> Optional[Tuple[int, int]]:
        """Return (scalar power t, generator bitmask) for a member, None otherwise."""
        if element.n_qubits != self.n_qubits:
            return None
        residual, combo = reduce_symplectic(self._pivots, element.symplectic)
        if residual:
            return None
        delta = (element.phase_exp - self._products[combo].phase_exp) % 4
        if delta % self.scalar_step:
            return None
        return delta // self.scalar_step, combo

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliSubgroup):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "generators": [format_pauli(g) for g in self.generators],
            "elements": [format_pauli(e) for e in self.elements],
            "order": self.order,
            "is_abelian": self.is_abelian,
            "contains_minus_identity": self.contains_minus_identity,
        }


def closure(
    generators: Iterable[PauliElement],
    n_qubits: Optional[int] = None,
    cap: Optional[int] = None,
) -> PauliSubgroup:
    """Smallest subgroup of P_K containing ``generators``."""
    gens = tuple(generators)
    cap = settings.CLOSURE_CAP if cap is None else cap
    sizes = {g.n_qubits for g in gens}
    if n_qubits is not None:
        sizes.add(n_qubits)
    if len(sizes) > 1:
        raise QubitCountError(f"generators mix qubit counts {sorted(sizes)}")
    k = sizes.pop() if sizes else 1

    pivots: Dict[int, Tuple[int, int]] = {}
    independent: List[PauliElement] = []
    dependent: List[Tuple[PauliElement, int]] = []
    for g in gens:
        vector, combo = reduce_symplectic(pivots, g.symplectic)
        if vector:
            pivots[vector.bit_length() - 1] = (vector, combo ^ (1 << len(independent)))
            independent.append(g)
        else:
            dependent.append((g, combo))

    # ordered products of the independent generators, indexed by bitmask
    products = [PauliElement.identity(k)]
    for g in independent:
        products.extend([mul(p, g) for p in products])

    scalar_exps = [(g.phase_exp - products[combo].phase_exp) % 4 for g, combo in dependent]
    scalar_exps.extend(mul(g, g).phase_exp for g in independent)
    is_abelian = True
    for a, g in enumerate(independent):
        for h in independent[a + 1:]:
            if commutes(g, h) is Commutation.ANTICOMMUTE:
                is_abelian = False
                break
        if not is_abelian:
            break
    if not is_abelian:
        scalar_exps.append(2)
    scalar_step = math.gcd(4, *scalar_exps) if scalar_exps else 4

    order = (4 // scalar_step) * len(products)
    if order > cap:
        raise ClosureCapError(order, cap)

    elements = sorted(
        PauliElement(p.phase_exp + t * scalar_step, p.x_mask, p.z_mask, k)
        for t in range(4 // scalar_step)
        for p in products
    )
    logger.info(
        f"[CLOSURE] {len(gens)} generators on {k} qubits -> order {order} "
        f"(rank {len(independent)}, abelian={is_abelian})"
    )
    return PauliSubgroup(
        n_qubits=k,
        elements=tuple(elements),
        generators=gens,
        independent_generators=tuple(independent),
        scalar_step=scalar_step,
        is_abelian=is_abelian,
        _pivots=pivots,
        _products=tuple(products),
        _index={e: n for n, e in enumerate(elements)},
    )


def subgroup_from_error_generators(
    terms: Iterable[PauliElement],
    n_qubits: Optional[int] = None,
    cap: Optional[int] = None,
) -> PauliSubgroup:
    """Kraus support of a Hamiltonian whose system operators are ``terms``.

    The operator-sum expansion only ever multiplies the coupling operators, so
    the support is their multiplicative closure.
    """
    terms = tuple(terms)
    logger.info(f"[ERRGEN] closing {len(terms)} error generators")
    return closure(terms, n_qubits=n_qubits, cap=cap)


def subgroup_from_strings(texts: Sequence[str], cap: Optional[int] = None) -> PauliSubgroup:
    """Closure of generators given as Pauli strings; entries may be comma-separated."""
    words = [w for text in texts for w in text.replace(",", " ").split()]
    elements = [parse_pauli(w) for w in words]
    return closure(elements, cap=cap)


def subgroup_from_json(payload: dict, cap: Optional[int] = None) -> PauliSubgroup:
    k = int(payload["n_qubits"])
    gens = [parse_pauli(text, k) for text in payload["generators"]]
    return closure(gens, n_qubits=k, cap=cap)
