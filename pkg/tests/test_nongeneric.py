import numpy as np
import pytest

from conftest import ket
from dfs.channel.kraus import normalization_residual
from dfs.channel.nongeneric import (
    CODE_STATES,
    block_residual,
    code_residual,
    genericity_probe,
    q8_representation,
    random_triangular_parameters,
    triangular_block,
    triangular_kraus,
)
from dfs.errors import ConstraintViolationError


@pytest.fixture
def params(rng):
    return random_triangular_parameters(rng)


def test_trivial_parameters():
    kraus = triangular_kraus(1, 0, 0, 0, 1, 0)
    assert np.allclose(kraus.operators[0], np.eye(8))
    assert np.allclose(kraus.operators[1], 0)


def test_random_parameters_satisfy_constraints(params):
    c1, c2, d1, d2, e1, e2 = params
    assert abs(np.conj(c1) * d1 + np.conj(c2) * d2) < 1e-12
    assert abs(c1) ** 2 + abs(c2) ** 2 == pytest.approx(1)
    assert abs(d1) ** 2 + abs(d2) ** 2 + abs(e1) ** 2 + abs(e2) ** 2 == pytest.approx(1)


def test_constrained_channel_preserves_code(params):
    kraus = triangular_kraus(*params)
    assert normalization_residual(kraus.operators) < 1e-9
    assert code_residual(kraus) < 1e-10


def test_code_states_share_eigenvalue(params):
    c1, _, d1, _, e1, _ = params
    a1 = triangular_kraus(*params).operators[0]
    for state in CODE_STATES:
        v = np.zeros(8)
        v[state] = 1
        assert np.allclose(a1 @ v, c1 * v)
    assert np.allclose(a1 @ ket("110"), d1 * ket("000") + e1 * ket("110"))


def test_operators_act_as_one_block_on_every_pair(params):
    c1, c2, d1, d2, e1, e2 = params
    a1, a2 = triangular_kraus(*params).operators
    assert block_residual(a1, triangular_block(c1, d1, e1)) < 1e-12
    assert block_residual(a2, triangular_block(c2, d2, e2)) < 1e-12


@pytest.mark.parametrize(
    "args, violated",
    [
        ((1, 0, 0.5, 0, 0.5, 0.5), "conj(c1)*d1 + conj(c2)*d2 = 0"),
        ((0.5, 0, 0, 0, 1, 0), "|c1|^2 + |c2|^2 = 1"),
        ((1, 0, 0, 0, 0.5, 0), "|d1|^2 + |d2|^2 + |e1|^2 + |e2|^2 = 1"),
    ],
)
def test_constraint_violation_is_named(args, violated):
    with pytest.raises(ConstraintViolationError) as info:
        triangular_kraus(*args)
    assert info.value.constraint == violated
    assert info.value.deviation > 1e-10


def test_q8_representation():
    rep = q8_representation()
    assert max(rep.residuals) < 1e-12
    assert rep.copies_agree
    assert len(rep.blocks) == 8
    assert np.allclose(rep.gamma("+III"), np.eye(2))
    assert np.allclose(rep.gamma("+XXI"), [[0, 1], [1, 0]])
    assert np.allclose(rep.gamma("+IZZ"), [[1, 0], [0, -1]])
    assert np.allclose(rep.gamma("+iXYZ"), [[0, 1], [-1, 0]])
    assert np.allclose(rep.gamma("-III"), -np.eye(2))


def test_genericity_probe():
    report = genericity_probe(seed=0, draws=64)
    assert report.constrained_failures == 0
    assert len(report.constrained_residuals) == 64
    assert len(report.unconstrained_residuals) >= 60
    assert report.unconstrained_failures >= len(report.unconstrained_residuals) - 1
    assert report.failure_fraction > 0.9
