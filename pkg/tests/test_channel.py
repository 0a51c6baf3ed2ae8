import numpy as np
import pytest
from scipy.linalg import sqrtm

from conftest import group_of, ket, superposition
from dfs.channel.density import DensityMatrix, fidelity, purity, reduced_state
from dfs.channel.kraus import (
    KrausSet,
    apply_channel,
    equal_weight_channel,
    equal_weight_dephasing,
    normalization_residual,
    random_group_algebra_kraus,
)
from dfs.channel.scan import decoherence_scan
from dfs.decomposition.basis import dfs_basis
from dfs.errors import ConstraintViolationError, InvalidDensityMatrixError, QubitCountError
from dfs.pauli.element import group_algebra_matrix
from dfs.subgroup.characters import characters


class TestDensity:
    def test_pure_state(self):
        rho = DensityMatrix.from_state(superposition("00", "11"))
        assert rho.is_valid
        assert rho.n_qubits == 2
        assert purity(rho) == pytest.approx(1.0)
        assert fidelity(rho, superposition("00", "11")) == pytest.approx(1.0)

    def test_maximally_mixed(self):
        rho = DensityMatrix.maximally_mixed(3)
        assert purity(rho) == pytest.approx(1 / 8)

    def test_reduced_state_of_bell_pair(self):
        rho = DensityMatrix.from_state(superposition("00", "11"))
        assert np.allclose(reduced_state(rho, 1).matrix, np.eye(2) / 2)
        assert np.allclose(reduced_state(rho, 2).matrix, np.eye(2) / 2)

    def test_reduced_state_picks_the_right_qubit(self):
        rho = DensityMatrix.from_state(ket("10"))
        assert np.allclose(reduced_state(rho, 1).matrix, np.diag([0, 1]))
        assert np.allclose(reduced_state(rho, 2).matrix, np.diag([1, 0]))

    def test_bad_shapes(self):
        with pytest.raises(QubitCountError):
            DensityMatrix(np.eye(3))
        with pytest.raises(QubitCountError):
            DensityMatrix(np.ones((2, 4)))
        with pytest.raises(QubitCountError):
            reduced_state(DensityMatrix.maximally_mixed(2), 3)

    @pytest.mark.parametrize(
        "matrix, invariant",
        [
            (np.eye(4), "tr(rho) = 1"),
            (np.diag([2.0, -1.0]), "rho >= 0"),
            (np.array([[0.5, 0.5], [0.0, 0.5]]), "rho = rho^dagger"),
        ],
    )
    def test_invariants_enforced(self, matrix, invariant):
        with pytest.raises(InvalidDensityMatrixError) as info:
            DensityMatrix(matrix)
        assert info.value.invariant == invariant
        assert info.value.deviation > 0

    def test_purity_in_unit_interval(self, rng):
        for _ in range(20):
            weights = rng.dirichlet(np.ones(4))
            states = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            states /= np.linalg.norm(states, axis=1, keepdims=True)
            mixed = sum(w * np.outer(s, s.conj()) for w, s in zip(weights, states))
            assert 0 < purity(DensityMatrix(mixed)) <= 1 + 1e-12


class TestKraus:
    def test_random_draw_is_normalized(self, qx):
        kraus = random_group_algebra_kraus(qx, 4, seed=0)
        assert len(kraus) == 4
        assert normalization_residual(kraus.operators) < 1e-9

    def test_coefficients_rebuild_operators(self, qx):
        kraus = random_group_algebra_kraus(qx, 3, seed=1)
        for row, a in zip(kraus.algebra_coefficients, kraus.operators):
            assert np.allclose(group_algebra_matrix(qx.elements, row), a)

    def test_coefficients_with_identity_multiples(self):
        group = group_of("ZZ", "iII")
        kraus = random_group_algebra_kraus(group, 2, seed=4)
        for row, a in zip(kraus.algebra_coefficients, kraus.operators):
            assert np.allclose(group_algebra_matrix(group.elements, row), a)

    def test_trivial_group_gives_identity_up_to_phase(self):
        group = group_of("II")
        kraus = random_group_algebra_kraus(group, 3, seed=2)
        for a in kraus.operators:
            assert np.allclose(a, a[0, 0] * np.eye(4))

    def test_seeded_draws_repeat(self, q2z):
        a = random_group_algebra_kraus(q2z, 2, seed=9)
        b = random_group_algebra_kraus(q2z, 2, seed=9)
        assert all(np.array_equal(x, y) for x, y in zip(a.operators, b.operators))

    def test_rejects_unnormalized_set(self):
        with pytest.raises(ConstraintViolationError):
            KrausSet(1, (np.eye(2) * 0.5,))

    def test_rejects_wrong_shape(self):
        with pytest.raises(QubitCountError):
            KrausSet(2, (np.eye(2),))

    def test_rejects_zero_operators(self, qz):
        with pytest.raises(ValueError):
            random_group_algebra_kraus(qz, 0, seed=0)

    def test_to_json(self, qz):
        payload = equal_weight_channel(qz).to_json()
        assert payload["n_qubits"] == 2
        assert len(payload["subgroup"]) == 4
        assert len(payload["operators"]) == 4


class TestApply:
    def test_dephasing_kills_coherence(self):
        rho = DensityMatrix.from_state(superposition("00", "10"))
        out = apply_channel(equal_weight_dephasing(2), rho)
        assert out.is_valid
        assert np.allclose(np.diag(out.matrix), np.diag(rho.matrix))
        assert abs(out.matrix[0b00, 0b10]) < 1e-12
        assert purity(reduced_state(out, 1)) == pytest.approx(0.5)

    def test_dfs_state_stays_pure(self, qz):
        rho = DensityMatrix.from_state(ket("01"))
        out = apply_channel(equal_weight_channel(qz), rho)
        assert purity(out) == pytest.approx(1.0)

    def test_dimension_mismatch(self, qz):
        with pytest.raises(QubitCountError):
            apply_channel(equal_weight_channel(qz), DensityMatrix.maximally_mixed(3))

    def test_output_outside_state_space(self):
        # entries of A^dagger A - I stay under tolerance while tr(A rho A^dagger) drifts by 4x
        a = sqrtm(np.eye(4) + 5e-10 * np.ones((4, 4)))
        kraus = KrausSet(2, (a,))
        rho = DensityMatrix.from_state(superposition("00", "01", "10", "11"))
        with pytest.raises(ArithmeticError):
            apply_channel(kraus, rho)


class TestScan:
    def test_same_irrep_superposition_stays_pure(self, qx):
        state = superposition("0000", "1100", "0011", "1111", "0100", "1000", "0111", "1011")
        report = decoherence_scan(qx, state, trials=16, seed=0)
        assert report.stays_pure()
        assert report.min_fidelity == pytest.approx(1.0)
        assert report.max_trace_error < 1e-9

    @pytest.mark.parametrize("fixture", ["qz", "qx", "q4", "q2z"])
    def test_every_dfs_is_stable(self, request, fixture, rng):
        group = request.getfixturevalue(fixture)
        for character in characters(group):
            vectors = dfs_basis(group, character).vectors
            if not len(vectors):
                continue
            weights = rng.standard_normal(len(vectors)) + 1j * rng.standard_normal(len(vectors))
            state = weights @ vectors
            report = decoherence_scan(group, state / np.linalg.norm(state), trials=32, seed=0)
            assert report.stays_pure(), character.label
            assert report.min_fidelity > 1 - 1e-9

    def test_cross_irrep_state_decoheres(self, qz):
        report = decoherence_scan(qz, superposition("00", "11"), trials=16, seed=0)
        assert report.min_purity < 1 - 1e-3
        assert not report.stays_pure()

    def test_trivial_group_keeps_every_state(self):
        report = decoherence_scan(group_of("II"), superposition("01", "10"), trials=8, seed=5)
        assert report.stays_pure()

    def test_trials_are_seeded(self, q2z):
        state = superposition("0000", "0011")
        a = decoherence_scan(q2z, state, trials=4, seed=3)
        b = decoherence_scan(q2z, state, trials=4, seed=3)
        assert [t.purity for t in a.trials] == [t.purity for t in b.trials]

    def test_state_length_checked(self, qz):
        with pytest.raises(QubitCountError):
            decoherence_scan(qz, ket("000"), trials=2)
