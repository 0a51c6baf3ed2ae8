"""One-dimensional irreducible characters of Abelian Pauli subgroups."""

import enum
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from dfs.errors import NonAbelianError
from dfs.pauli.element import PauliElement, check_dense, monomial_action, phase_value
from dfs.subgroup.closure import PauliSubgroup

logger = logging.getLogger("dfs.subgroup")


@dataclass(frozen=True)
class Character:
    """A 1-D irrep, stored by its values on the scalar generator and the
    independent generators as exponents of i."""

    label: int
    scalar_exp: int
    generator_exps: Tuple[int, ...]
    group: PauliSubgroup = field(repr=False)

    def exponent(self, element: PauliElement) -> int:
        parts = self.group.decompose(element)
        if parts is None:
            raise KeyError(f"{element} is not an element of the subgroup")
        power, combo = parts
        total = power * self.scalar_exp
        for j, exp in enumerate(self.generator_exps):
            if combo >> j & 1:
                total += exp
        return total % 4

    def value(self, element: PauliElement) -> complex:
        return phase_value(self.exponent(element))

    def __call__(self, element: PauliElement) -> complex:
        return self.value(element)

    @cached_property
    def values(self) -> Dict[PauliElement, complex]:
        return {e: self.value(e) for e in self.group.elements}

    @cached_property
    def value_array(self) -> np.ndarray:
        """Values in the group's canonical element order."""
        return np.array([self.value(e) for e in self.group.elements], dtype=np.complex128)

    @property
    def is_trivial(self) -> bool:
        return self.scalar_exp == 0 and not any(self.generator_exps)

    @property
    def is_supported(self) -> bool:
        """Gamma(lambda*I) == lambda for every identity multiple in the group.

        Characters failing this have multiplicity zero in the natural
        representation.
        """
        if self.group.scalar_step == 4:
            return True
        return self.scalar_exp == self.group.scalar_step


def characters(group: PauliSubgroup) -> List[Character]:
    """All N characters, trivial first.

    The scalar generator i**s takes every value allowed by its order; each
    independent generator g then takes both square roots of Gamma(g*g).
    """
    if not group.is_abelian:
        raise NonAbelianError("character enumeration")
    step = group.scalar_step
    scalar_choices = [0] if step == 4 else list(range(0, 4, step))
    squares = [(g * g).phase_exp for g in group.independent_generators]
    out = []
    label = 1
    for scalar_exp in scalar_choices:
        bases = [(sq // step * scalar_exp // 2) % 2 if sq else 0 for sq in squares]
        for flips in itertools.product((0, 1), repeat=len(bases)):
            exps = tuple((b + 2 * f) % 4 for b, f in zip(bases, flips))
            out.append(Character(label, scalar_exp, exps, group))
            label += 1
    logger.info(f"[CHARS] {len(out)} characters for order {group.order}")
    return out


class Verdict(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"


class Reducibility(NamedTuple):
    total: float
    verdict: Verdict


def natural_characters(group: PauliSubgroup, dense_limit: Optional[int] = None) -> List[complex]:
    """Traces of the natural 2**K-dimensional representation, element by element."""
    check_dense(group.n_qubits, dense_limit)
    traces = []
    for element in group.elements:
        targets, phases = monomial_action(element)
        fixed = targets == np.arange(targets.size)
        traces.append(complex(phases[fixed].sum()))
    return traces


def reducibility_sum(group: PauliSubgroup, dense_limit: Optional[int] = None) -> Reducibility:
    """sum_n |chi(G_n)|**2 against N; equality means irreducible."""
    total = float(sum(abs(t) ** 2 for t in natural_characters(group, dense_limit)))
    verdict = Verdict.IRREDUCIBLE if np.isclose(total, group.order) else Verdict.REDUCIBLE
    return Reducibility(total, verdict)
