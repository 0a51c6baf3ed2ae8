"""Exception hierarchy shared by the library, the CLI and the HTTP routers."""

from typing import Optional


class DfsError(Exception):
    """Base class for every error raised by the toolkit."""


class ConfigError(DfsError):
    pass


class PauliParseError(DfsError, ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse Pauli string {text!r} at position {position}: {reason}")


class QubitCountError(DfsError, ValueError):
    pass


class DenseLimitError(DfsError):
    def __init__(self, n_qubits: int, limit: int):
        self.n_qubits = n_qubits
        self.limit = limit
        super().__init__(
            f"{n_qubits} qubits exceeds the dense limit of {limit} qubits (raise --dense-limit)"
        )


class ClosureCapError(DfsError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"subgroup order {order} exceeds the closure cap of {cap}")


class NonAbelianError(DfsError):
    def __init__(self, what: str):
        super().__init__(
            f"{what} needs an Abelian subgroup; a non-Abelian Pauli subgroup has no "
            "one-dimensional irreps (use nonabelian_one_dim_search)"
        )


class CharacterMismatchError(DfsError, ValueError):
    pass


class DimensionFormulaError(DfsError, ValueError):
    pass


class DegenerateDrawError(DfsError):
    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"Kraus normalization matrix is singular (min eigenvalue {min_eigenvalue:.3e}); reseed"
        )


class ConstraintViolationError(DfsError, ValueError):
    def __init__(self, constraint: str, deviation: float):
        self.constraint = constraint
        self.deviation = deviation
        super().__init__(f"constraint {constraint} violated by {deviation:.3e}")


class StateSpecError(DfsError, ValueError):
    def __init__(self, text: str, position: Optional[int], reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        where = "" if position is None else f" at position {position}"
        super().__init__(f"cannot parse state {text!r}{where}: {reason}")


class UnknownPresetError(DfsError, ValueError):
    def __init__(self, name: str, known):
        self.name = name
        super().__init__(f"unknown preset {name!r}; choose one of {', '.join(known)}")


class AnalysisRefusedError(DfsError):
    """A DFS was required but the subgroup admits no one-dimensional irrep."""


class InvalidDensityMatrixError(DfsError, ValueError):
    def __init__(self, invariant: str, deviation: float):
        self.invariant = invariant
        self.deviation = deviation
        super().__init__(f"not a density matrix: {invariant} violated by {deviation:.3e}")
