import numpy as np
import pytest

from conftest import group_of
from dfs.errors import ClosureCapError, QubitCountError
from dfs.pauli.element import Commutation, PauliElement, commutes, format_pauli, parse_pauli
from dfs.subgroup.closure import (
    PhaseClass,
    closure,
    subgroup_from_error_generators,
    subgroup_from_json,
    subgroup_from_strings,
)
from dfs.subgroup.maximal import exchange_pair_group, single_letter_group
from dfs.subgroup.sampling import random_abelian_subgroup, random_nonabelian_subgroup


def test_qz_closure(qz):
    assert sorted(format_pauli(e) for e in qz) == ["+II", "+IZ", "+ZI", "+ZZ"]
    assert qz.is_abelian
    assert qz.phase_class is PhaseClass.NO_PHASE_FACTORS


def test_q4_contains_zzzz(q4):
    assert q4.order == 4
    assert parse_pauli("ZZZZ") in q4


def test_q2z_is_the_even_z_strings(q2z):
    expected = {
        "+IIII", "+ZZII", "+ZIZI", "+ZIIZ", "+IZZI", "+IZIZ", "+IIZZ", "+ZZZZ",
    }
    assert {format_pauli(e) for e in q2z} == expected
    assert q2z.rank == 3
    assert q2z.order == 8


def test_q8_is_non_abelian_with_minus_identity(q8):
    assert q8.order == 8
    assert not q8.is_abelian
    assert q8.contains_minus_identity
    assert not q8.contains_imaginary_identity
    assert parse_pauli("+iXYZ") in q8
    assert parse_pauli("-iXYZ") in q8


def test_closure_is_closed(q8):
    for a in q8:
        for b in q8:
            assert a * b in q8


def test_phase_classes():
    assert group_of("XX", "-II").phase_class is PhaseClass.MINUS_IDENTITY_ONLY
    assert group_of("XX", "iII").phase_class is PhaseClass.CONTAINS_MINUS_IDENTITY
    assert group_of("iXX").phase_class is PhaseClass.MINUS_IDENTITY_ONLY


def test_dependent_generator_with_sign_adds_minus_identity():
    group = group_of("XX", "ZZ", "YY")
    # XX * ZZ = -YY, so +YY forces -I into the group
    assert group.order == 8
    assert group.contains_minus_identity


def test_empty_generator_list():
    group = closure([], n_qubits=2)
    assert group.order == 1
    assert group.elements == (PauliElement.identity(2),)


def test_decompose_round_trip(q8):
    for element in q8:
        power, combo = q8.decompose(element)
        rebuilt = PauliElement.identity(3, power * q8.scalar_step)
        for j, g in enumerate(q8.independent_generators):
            if combo >> j & 1:
                rebuilt = rebuilt * g
        assert rebuilt == element


def test_decompose_rejects_non_members(qz):
    assert qz.decompose(parse_pauli("XI")) is None
    assert qz.decompose(parse_pauli("-ZI")) is None


def test_mixed_qubit_counts():
    with pytest.raises(QubitCountError):
        closure([parse_pauli("X"), parse_pauli("XX")])


def test_closure_cap():
    with pytest.raises(ClosureCapError):
        closure([parse_pauli("ZII"), parse_pauli("IZI"), parse_pauli("IIZ")], cap=4)


def test_strings_accept_commas():
    group = subgroup_from_strings(["ZZII,ZIIZ", "IIZZ"])
    assert group.order == 4


def test_json_round_trip(q2z):
    assert subgroup_from_json(q2z.to_json()) == q2z


def test_error_generators_close_to_support():
    group = subgroup_from_error_generators([parse_pauli("XI"), parse_pauli("IX")])
    assert group.order == 4


@pytest.mark.parametrize(
    "terms, expected",
    [
        (("ZI", "IZ"), {"+II", "+ZI", "+IZ", "+ZZ"}),
        (("ZZII", "IIZZ"), {"+IIII", "+ZZII", "+IIZZ", "+ZZZZ"}),
    ],
)
def test_error_generators_worked_examples(terms, expected):
    group = subgroup_from_error_generators([parse_pauli(t) for t in terms])
    assert {format_pauli(e) for e in group} == expected


def test_dipolar_couplings_give_even_z_group(q2z):
    pairs = ["ZZII", "ZIZI", "ZIIZ", "IZZI", "IZIZ", "IIZZ"]
    assert subgroup_from_error_generators([parse_pauli(t) for t in pairs]) == q2z


def test_closure_is_idempotent(q2z, q8):
    rng = np.random.default_rng(21)
    groups = [q2z, q8] + [random_abelian_subgroup(int(rng.integers(1, 6)), rng) for _ in range(10)]
    for group in groups:
        again = closure(group.elements, n_qubits=group.n_qubits)
        assert again == group
        assert again.elements == group.elements


@pytest.mark.parametrize("k", [2, 3, 4])
def test_single_letter_group_is_largest_abelian(k):
    group = single_letter_group(k)
    assert group.is_abelian
    assert group.order == 2 ** (k + 2)


@pytest.mark.parametrize("k", [2, 4])
def test_exchange_pair_group_is_largest_abelian(k):
    group = exchange_pair_group(k)
    assert group.is_abelian
    assert group.order == 2 ** (k + 2)


def test_exchange_pair_group_needs_even_count():
    with pytest.raises(QubitCountError):
        exchange_pair_group(3)


@pytest.mark.parametrize("phase_class", list(PhaseClass))
def test_random_abelian_subgroups(phase_class):
    rng = np.random.default_rng(11)
    for _ in range(20):
        k = int(rng.integers(1, 6))
        group = random_abelian_subgroup(k, rng, phase_class=phase_class)
        assert group.is_abelian
        assert group.phase_class is phase_class
        for a in group.independent_generators:
            for b in group.independent_generators:
                assert commutes(a, b) is Commutation.COMMUTE


def test_random_nonabelian_subgroups():
    rng = np.random.default_rng(5)
    for _ in range(20):
        group = random_nonabelian_subgroup(int(rng.integers(1, 5)), rng)
        assert not group.is_abelian
        assert group.contains_minus_identity
