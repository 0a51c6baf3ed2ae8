import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from dfs.errors import DenseLimitError, PauliParseError, QubitCountError
from dfs.pauli.element import (
    Commutation,
    PauliElement,
    adjoint,
    algebra_coefficients,
    apply_to_state,
    commutes,
    format_pauli,
    full_pauli_group_generators,
    group_algebra_matrix,
    inverse,
    monomial_action,
    mul,
    parse_pauli,
    pauli_group_order,
    pauli_string_count,
    product,
    to_matrix,
    trace_symbolic,
)
from dfs.subgroup.closure import closure

N_QUBITS = 3


def elements(n_qubits=N_QUBITS):
    limit = (1 << n_qubits) - 1
    return st.builds(
        PauliElement,
        st.integers(0, 3),
        st.integers(0, limit),
        st.integers(0, limit),
        st.just(n_qubits),
    )


def same_size(max_qubits, count):
    """`count` elements sharing one qubit count drawn from 1..max_qubits."""
    return st.integers(1, max_qubits).flatmap(
        lambda k: st.tuples(*[elements(k) for _ in range(count)])
    )


def all_strings(n_qubits):
    dim = 1 << n_qubits
    return [PauliElement(0, x, z, n_qubits) for x in range(dim) for z in range(dim)]


class TestParse:
    def test_round_trip_examples(self):
        for text in ("+XYZ", "-IZI", "+iXXI", "-iYYY"):
            assert format_pauli(parse_pauli(text)) == text

    def test_sign_defaults_to_plus(self):
        p = parse_pauli("XZ")
        assert p.phase_exp == 0
        assert format_pauli(p) == "+XZ"

    def test_bare_i_prefix(self):
        assert parse_pauli("iZZ").phase_exp == 1

    def test_leftmost_letter_is_most_significant(self):
        p = parse_pauli("ZI")
        assert p.z_mask == 0b10
        assert p.x_mask == 0

    def test_bad_letter_reports_position(self):
        with pytest.raises(PauliParseError) as info:
            parse_pauli("XQZ")
        assert info.value.position == 1

    def test_empty_body(self):
        with pytest.raises(PauliParseError):
            parse_pauli("-")

    def test_length_mismatch(self):
        with pytest.raises(PauliParseError):
            parse_pauli("XX", n_qubits=3)


class TestMultiplication:
    def test_x_times_z_is_minus_i_y(self):
        assert mul(parse_pauli("X"), parse_pauli("Z")) == parse_pauli("-iY")

    def test_z_times_x_is_i_y(self):
        assert mul(parse_pauli("Z"), parse_pauli("X")) == parse_pauli("iY")

    def test_y_squares_to_identity(self):
        y = parse_pauli("Y")
        assert (y * y) == PauliElement.identity(1)

    def test_xxxx_times_yyyy_is_zzzz(self):
        assert parse_pauli("XXXX") * parse_pauli("YYYY") == parse_pauli("ZZZZ")

    def test_mixed_qubit_counts_rejected(self):
        with pytest.raises(QubitCountError):
            mul(parse_pauli("X"), parse_pauli("XX"))

    def test_x_times_y_is_i_z(self):
        assert mul(parse_pauli("X"), parse_pauli("Y")) == parse_pauli("+iZ")

    def test_ixyz_squares_to_minus_identity(self):
        p = parse_pauli("+iXYZ")
        assert format_pauli(p * p) == "-III"

    @seed(7)
    @settings(max_examples=1_000, deadline=None)
    @given(same_size(6, 2))
    def test_matches_dense_product(self, pair):
        p, q = pair
        assert np.abs(to_matrix(p * q) - to_matrix(p) @ to_matrix(q)).max() < 1e-12

    @seed(7)
    @settings(max_examples=10_000, deadline=None)
    @given(same_size(8, 3))
    def test_group_axioms(self, triple):
        p, q, r = triple
        one = PauliElement.identity(p.n_qubits)
        assert (p * q) * r == p * (q * r)
        assert p * one == p == one * p
        assert p * inverse(p) == one == inverse(p) * p

    @seed(7)
    @settings(max_examples=500, deadline=None)
    @given(same_size(6, 1))
    def test_adjoint_is_inverse(self, single):
        (p,) = single
        assert p * adjoint(p) == PauliElement.identity(p.n_qubits)
        assert np.allclose(to_matrix(adjoint(p)), to_matrix(p).conj().T)

    @seed(7)
    @settings(max_examples=500, deadline=None)
    @given(same_size(6, 1))
    def test_dense_matrix_is_unitary(self, single):
        (p,) = single
        m = to_matrix(p)
        assert np.abs(m @ m.conj().T - np.eye(m.shape[0])).max() < 1e-12


class TestCommutation:
    def test_single_qubit(self):
        assert commutes(parse_pauli("X"), parse_pauli("Z")) is Commutation.ANTICOMMUTE
        assert commutes(parse_pauli("X"), parse_pauli("X")) is Commutation.COMMUTE

    def test_two_overlaps_commute(self):
        assert commutes(parse_pauli("XX"), parse_pauli("ZZ")) is Commutation.COMMUTE

    def test_phases_ignored(self):
        assert commutes(parse_pauli("-iXI"), parse_pauli("ZZ")) is Commutation.ANTICOMMUTE

    def test_worked_pairs(self):
        assert commutes(parse_pauli("XXI"), parse_pauli("IZZ")) is Commutation.ANTICOMMUTE
        assert commutes(parse_pauli("ZZII"), parse_pauli("IIZZ")) is Commutation.COMMUTE

    @pytest.mark.parametrize("n_qubits", [1, 2, 3, 4])
    def test_matches_dense_commutator_on_all_pairs(self, n_qubits):
        strings = all_strings(n_qubits)
        mats = np.array([to_matrix(p) for p in strings])
        for p, a in zip(strings, mats):
            gap = np.abs(a @ mats - mats @ a).max(axis=(1, 2))
            for q, g in zip(strings, gap):
                expected = Commutation.COMMUTE if g < 1e-12 else Commutation.ANTICOMMUTE
                assert commutes(p, q) is expected


class TestCounting:
    def test_group_order(self):
        assert pauli_group_order(1) == 16
        assert pauli_group_order(3) == 256

    def test_string_count(self):
        assert pauli_string_count(2) == 16

    def test_full_group_closure_order(self):
        group = closure(full_pauli_group_generators(2))
        assert group.order == pauli_group_order(2)
        assert not group.is_abelian


class TestDense:
    def test_z_on_first_qubit_flips_sign_of_10(self):
        m = to_matrix(parse_pauli("ZI"))
        assert np.allclose(np.diag(m), [1, 1, -1, -1])

    def test_dense_limit_names_limit(self):
        with pytest.raises(DenseLimitError, match="dense limit of 2"):
            to_matrix(parse_pauli("XXX"), dense_limit=2)

    @seed(7)
    @settings(max_examples=100, deadline=None)
    @given(elements())
    def test_monomial_action_matches_matrix(self, p):
        targets, phases = monomial_action(p)
        dense = np.zeros((8, 8), dtype=np.complex128)
        dense[targets, np.arange(8)] = phases
        assert np.allclose(dense, to_matrix(p))

    @seed(7)
    @settings(max_examples=100, deadline=None)
    @given(elements())
    def test_trace_symbolic(self, p):
        assert np.isclose(trace_symbolic(p), np.trace(to_matrix(p)))

    def test_trace_of_minus_identity(self):
        assert trace_symbolic(parse_pauli("-II")) == -4
        assert trace_symbolic(parse_pauli("XI")) == 0

    def test_apply_to_state_columns(self):
        p = parse_pauli("iXYZ")
        states = np.eye(8, dtype=np.complex128)
        assert np.allclose(apply_to_state(p, states), to_matrix(p))
        assert np.allclose(apply_to_state(p, states[:, 3]), to_matrix(p)[:, 3])

    def test_group_algebra_matrix_and_coefficients(self, rng):
        group = closure([parse_pauli("XXI"), parse_pauli("IZZ")])
        # one representative per string: +III, +XXI, +IZZ, +iXYZ
        strings = [e for e in group.elements if e.phase_exp in (0, 1)]
        coefficients = rng.standard_normal(len(strings)) + 1j * rng.standard_normal(len(strings))
        matrix = group_algebra_matrix(strings, coefficients)
        dense = sum(c * to_matrix(e) for c, e in zip(coefficients, strings))
        assert np.allclose(matrix, dense)
        assert np.allclose(algebra_coefficients(strings, matrix), coefficients)

    def test_group_algebra_matrix_length_mismatch(self):
        with pytest.raises(ValueError):
            group_algebra_matrix([parse_pauli("X")], [1, 2])


class TestProperties:
    def test_weight_and_hermiticity(self):
        p = parse_pauli("-iXIZ")
        assert p.weight == 2
        assert not p.is_hermitian
        assert parse_pauli("-YIY").is_hermitian

    def test_identity_multiple(self):
        assert parse_pauli("iIII").is_identity_multiple
        assert not parse_pauli("IIX").is_identity_multiple

    def test_product_of_sequence(self):
        terms = [parse_pauli(t) for t in ("XXI", "IZZ", "XXI", "IZZ")]
        assert product(terms, 3) == parse_pauli("-III")
        assert product([], 2) == PauliElement.identity(2)

    def test_inverse_is_adjoint(self):
        p = parse_pauli("iXY")
        assert inverse(p) == parse_pauli("-iXY")
