import numpy as np
import pytest

from dfs.pauli.element import parse_pauli
from dfs.subgroup.closure import closure


def group_of(*texts):
    return closure([parse_pauli(t) for t in texts])


def ket(bits: str) -> np.ndarray:
    v = np.zeros(1 << len(bits), dtype=np.complex128)
    v[int(bits, 2)] = 1
    return v


def superposition(*bits: str, signs=None) -> np.ndarray:
    signs = signs or [1] * len(bits)
    v = sum(s * ket(b) for s, b in zip(signs, bits))
    return v / np.linalg.norm(v)


@pytest.fixture
def qz():
    return group_of("ZI", "IZ")


@pytest.fixture
def qx():
    return group_of("XXII", "IIXX")


@pytest.fixture
def q4():
    return group_of("XXXX", "YYYY")


@pytest.fixture
def q2z():
    return group_of("ZZII", "ZIZI", "ZIIZ", "IZZI", "IZIZ", "IIZZ")


@pytest.fixture
def q8():
    return group_of("XXI", "IZZ")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
