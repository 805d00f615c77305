import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from module.fehler import GroupConstructionError, InvariantViolation, SubgroupError
from module.gruppen import (
    CosetPartition,
    FiniteGroup,
    build_group,
    check_group_axioms,
    coset_partition,
    count_admissible_sets,
    cross_section,
    default_cross_section,
    element_order,
    find_noncommuting_pair,
    is_abelian,
    is_coset_admissible,
    iter_admissible_sets,
    left_cosets,
    subgroup_group,
)


@pytest.mark.parametrize(
    "kind, param, order",
    [("cyclic", 1, 1), ("cyclic", 12, 12), ("dihedral", 3, 6), ("dihedral", 8, 16), ("affine", 5, 20), ("affine", 7, 42)],
)
def test_build_group_order_and_axioms(kind, param, order):
    G = build_group(kind, param)
    assert G.order == order
    assert G.identity == 0
    check_group_axioms(G)


@given(st.sampled_from(["cyclic", "dihedral"]), st.integers(min_value=1, max_value=32))
def test_axioms_hold_for_small_groups(kind, param):
    check_group_axioms(build_group(kind, param))


def test_cyclic_cayley_entry():
    G = build_group("cyclic", 4)
    assert G.cayley[2][3] == 1
    assert G.mul(2, 3) == 1
    assert G.inv(1) == 3


def test_affine_three_is_non_abelian():
    G = build_group("affine", 3)
    assert G.order == 6
    pair = find_noncommuting_pair(G)
    assert pair is not None
    a, b = pair
    assert G.mul(a, b) != G.mul(b, a)
    assert not is_abelian(G)


def test_affine_numbering_and_operation():
    G = build_group("affine", 5)
    # (k,l) ↦ (l−1)·p + k
    assert G.params[7] == (2, 2)
    # (2,2)·(3,4) = (2 + 2·3, 2·4) = (3, 3)
    b = (4 - 1) * 5 + 3
    assert G.params[G.mul(7, b)] == (3, 3)


def test_dihedral_numbering():
    G = build_group("dihedral", 5)
    assert G.labels[0] == "e"
    assert G.labels[5] == "s"
    assert G.params[7] == (2, 1)
    # s·r·s = r⁻¹
    assert G.mul(G.mul(5, 1), 5) == 4
    assert element_order(G, 1) == 5
    assert element_order(G, 5) == 2


def test_affine_rejects_composite():
    with pytest.raises(GroupConstructionError, match="Primzahl"):
        build_group("affine", 6)


@pytest.mark.parametrize("kind, param", [("quaternion", 2), ("cyclic", 0), ("cyclic", "x")])
def test_build_group_rejects_bad_input(kind, param):
    with pytest.raises(GroupConstructionError):
        build_group(kind, param)


def test_check_group_axioms_names_broken_associativity():
    G = build_group("cyclic", 3)
    # Latin square, identity 0 and inverses intact, but not associative
    table = np.array(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
    )
    broken = FiniteGroup(G.kind, 5, table, np.arange(5), 0, tuple("abcde"), tuple((i,) for i in range(5)))
    with pytest.raises(InvariantViolation) as info:
        check_group_axioms(broken)
    assert info.value.check == "associativity"


def test_check_group_axioms_names_identity():
    G = build_group("cyclic", 3)
    shifted = FiniteGroup(G.kind, 3, (G.cayley + 1) % 3, G.inverse, 0, G.labels, G.params)
    with pytest.raises(InvariantViolation) as info:
        check_group_axioms(shifted)
    assert info.value.check == "identity"


def test_coset_partition_cyclic_six():
    G = build_group("cyclic", 6)
    P = coset_partition(G, [0, 3])
    assert P.index == 3
    assert P.cosets == ((0, 3), (1, 4), (2, 5))
    assert P.is_normal
    assert all(len(c) == 2 for c in P.cosets)


def test_coset_partition_whole_group():
    G = build_group("dihedral", 3)
    P = coset_partition(G, range(G.order))
    assert P.cosets == (tuple(range(6)),)
    assert P.is_normal


def test_reflection_subgroup_is_not_normal():
    G = build_group("dihedral", 3)
    P = coset_partition(G, [0, 3])
    assert P.index == 3
    assert not P.is_normal
    assert set(left_cosets(P)) != set(P.cosets)


def test_normal_subgroup_left_equals_right_cosets():
    G = build_group("dihedral", 4)
    P = coset_partition(G, [0, 1, 2, 3])
    assert P.is_normal
    assert left_cosets(P) == P.cosets


def test_non_subgroup_names_axiom():
    G = build_group("cyclic", 6)
    with pytest.raises(SubgroupError) as info:
        coset_partition(G, [0, 1])
    assert info.value.axiom == "closure"
    with pytest.raises(SubgroupError) as info:
        coset_partition(G, [3])
    assert info.value.axiom == "identity"


def test_cross_sections():
    G = build_group("cyclic", 6)
    P = coset_partition(G, [0, 3])
    assert default_cross_section(P).representative == (0, 1, 2)
    gamma = cross_section(P, [3, 1, 5])
    assert gamma.representative == (3, 1, 5)
    with pytest.raises(SubgroupError):
        cross_section(P, [1, 0, 2])
    with pytest.raises(SubgroupError):
        cross_section(P, [0, 1])


def test_subgroup_group_embedding():
    G = build_group("dihedral", 4)
    H = subgroup_group(G, [0, 2, 4, 6])
    assert H.order == 4
    assert H.embedding == (0, 2, 4, 6)
    check_group_axioms(H)


@pytest.mark.parametrize(
    "omega, expected",
    [((), True), ((0, 3), False), ((0, 1, 2), True), ((5, 1), True), ((1, 4, 2), False)],
)
def test_is_coset_admissible(omega, expected):
    P = coset_partition(build_group("cyclic", 6), [0, 3])
    assert is_coset_admissible(omega, P) is expected


def _brute_force_count(P: CosetPartition) -> int:
    elements = range(P.parent.order)
    return sum(
        is_coset_admissible(subset, P)
        for k in range(P.parent.order + 1)
        for subset in itertools.combinations(elements, k)
    )


@pytest.mark.parametrize(
    "kind, param, H",
    [
        ("cyclic", 6, [0, 3]),
        ("cyclic", 6, [0]),
        ("cyclic", 6, range(6)),
        ("dihedral", 3, [0, 1, 2]),
        ("dihedral", 4, [0, 2]),
        ("cyclic", 12, [0, 4, 8]),
    ],
)
def test_count_admissible_sets_matches_enumeration(kind, param, H):
    P = coset_partition(build_group(kind, param), H)
    assert count_admissible_sets(P) == (1 + len(P.subgroup)) ** P.index
    assert count_admissible_sets(P) == _brute_force_count(P)
    assert sum(1 for _ in iter_admissible_sets(P, include_empty=True)) == count_admissible_sets(P)


def test_count_admissible_sets_extremes():
    G = build_group("cyclic", 6)
    assert count_admissible_sets(coset_partition(G, [0, 3])) == 27
    assert count_admissible_sets(coset_partition(G, [0])) == 2**6
    assert count_admissible_sets(coset_partition(G, range(6))) == 7
