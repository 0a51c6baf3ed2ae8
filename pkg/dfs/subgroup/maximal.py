"""Abelian subgroups of the largest possible order, 2**(K+2).

Both carry every identity multiple, so each of their supported characters has
multiplicity one.
"""

from typing import List

from dfs.errors import QubitCountError
from dfs.pauli.element import PauliElement
from dfs.subgroup.closure import PauliSubgroup, closure


def single_letter_group(n_qubits: int, letter: str = "Z") -> PauliSubgroup:
    """One letter on every qubit, with +-1, +-i."""
    if letter not in ("X", "Y", "Z"):
        raise ValueError(f"letter must be X, Y or Z, got {letter!r}")
    gens = [PauliElement.single(letter, q, n_qubits) for q in range(1, n_qubits + 1)]
    gens.append(PauliElement.identity(n_qubits, 1))
    return closure(gens, n_qubits=n_qubits)


def exchange_pair_group(n_qubits: int) -> PauliSubgroup:
    """XX, YY and ZZ on the disjoint pairs (1,2), (3,4), ..., with +-1, +-i."""
    if n_qubits < 2 or n_qubits % 2:
        raise QubitCountError(f"pairing needs an even qubit count, got {n_qubits}")
    gens: List[PauliElement] = [PauliElement.identity(n_qubits, 1)]
    for first in range(1, n_qubits, 2):
        for letter in "XYZ":
            a = PauliElement.single(letter, first, n_qubits)
            b = PauliElement.single(letter, first + 1, n_qubits)
            gens.append(a * b)
    return closure(gens, n_qubits=n_qubits)
