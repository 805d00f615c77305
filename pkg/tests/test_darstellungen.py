import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from module.darstellungen import (
    BlockStructure,
    affine_rep,
    alpha_index,
    alpha_inverse,
    are_equivalent,
    beta_index,
    block_diagonal,
    characters,
    conjugate_rep,
    diagonal_character_rep,
    induce,
    irreducible_reps,
    is_unitary,
    left_regular,
    random_block_diagonal,
    realization_transform_U,
    representation_from_matrices,
    schur_orthogonality_defect,
    subgroup_characters,
    subrow_dichotomy_defect,
    trivial_rep,
    verify_representation,
)
from module.fehler import InvariantViolation, RepresentationError
from module.fourier import cyclic_fourier_matrix, dft_matrix
from module.gruppen import build_group, coset_partition, cross_section, subgroup_group
from module.sensing import SCHEME_STRUCTURED, sample_generating_vector
from module.zufall import make_rng


@pytest.mark.parametrize("kind, param", [("cyclic", 7), ("dihedral", 5), ("dihedral", 6), ("affine", 5)])
def test_left_regular_is_unitary_homomorphism(kind, param):
    G = build_group(kind, param)
    L = left_regular(G)
    assert L.degree == G.order
    verify_representation(L)
    # L(g)e_h = e_{gh}
    e = np.zeros(G.order)
    e[1] = 1.0
    assert_allclose(L.apply(2, e), L(2) @ e)
    assert np.argmax(np.abs(L.apply(2, e))) == G.mul(2, 1)


def test_trivial_rep():
    G = build_group("dihedral", 3)
    rep = trivial_rep(G, 4)
    verify_representation(rep)
    assert_allclose(rep.matrices, np.broadcast_to(np.eye(4), (6, 4, 4)))
    with pytest.raises(RepresentationError):
        trivial_rep(G, 0)


@pytest.mark.parametrize(
    "kind, param, labels",
    [
        ("cyclic", 4, ["chi_0", "chi_1", "chi_2", "chi_3"]),
        ("dihedral", 5, ["trivial", "sign", "rho_1", "rho_2"]),
        ("dihedral", 6, ["trivial", "sign", "chi_rot", "chi_rot_sign", "rho_1", "rho_2"]),
        ("affine", 5, ["psi_0", "psi_1", "psi_2", "psi_3", "affine"]),
    ],
)
def test_irreducible_catalog_is_complete(kind, param, labels):
    G = build_group(kind, param)
    catalog = irreducible_reps(G)
    assert [rep.label for rep in catalog] == labels
    assert sum(rep.degree**2 for rep in catalog) == G.order
    for rep in catalog:
        verify_representation(rep)
    assert schur_orthogonality_defect(catalog) < 1e-9


def test_catalog_members_are_pairwise_inequivalent():
    catalog = irreducible_reps(build_group("dihedral", 6))
    for i, pi in enumerate(catalog):
        for j, rho in enumerate(catalog):
            assert are_equivalent(pi, rho) is (i == j)


def test_affine_rep_matches_catalog_entry():
    G = build_group("affine", 7)
    rep = affine_rep(7, G)
    assert rep.degree == 6
    verify_representation(rep)
    assert are_equivalent(rep, irreducible_reps(G)[-1])
    # Spur auf (k,1): p−1 für k = 0, sonst −1
    chi = characters(rep)
    assert chi[0] == pytest.approx(6)
    assert chi[1] == pytest.approx(-1)


def test_affine_rep_rejects_other_group():
    with pytest.raises(RepresentationError):
        affine_rep(5, build_group("affine", 7))


def test_corrupted_matrix_names_unitarity():
    G = build_group("cyclic", 4)
    matrices = np.array(left_regular(G).matrices)
    matrices[2] *= 2.0
    rep = representation_from_matrices(G, matrices)
    with pytest.raises(InvariantViolation) as info:
        verify_representation(rep)
    assert info.value.check == "unitarity"


def test_swapped_matrices_name_homomorphism():
    G = build_group("cyclic", 4)
    matrices = np.array(left_regular(G).matrices)
    matrices[[1, 2]] = matrices[[2, 1]]
    with pytest.raises(InvariantViolation) as info:
        verify_representation(representation_from_matrices(G, matrices))
    assert info.value.check == "homomorphism"


def test_representation_from_matrices_checks_shape():
    G = build_group("cyclic", 3)
    with pytest.raises(RepresentationError):
        representation_from_matrices(G, np.zeros((2, 2, 2)))
    with pytest.raises(RepresentationError):
        representation_from_matrices(G, np.zeros((3, 2, 3)))


def test_index_maps_for_degree_three_multiplicity_two():
    B = BlockStructure.from_pairs([(3, 2)])
    assert [beta_index(B, 1, iota) for iota in (1, 2, 3)] == [1, 5, 6]
    assert alpha_index(B, 1, 2, 1) == 4
    with pytest.raises(RepresentationError):
        alpha_index(B, 1, 3, 1)
    with pytest.raises(RepresentationError):
        beta_index(B, 2, 1)


def test_alpha_is_a_bijection():
    B = BlockStructure.from_pairs([(2, 3), (3, 2), (1, 1)])
    assert B.n == 13
    seen = []
    for tau, entry in enumerate(B.blocks, start=1):
        for kappa in range(1, entry.multiplicity + 1):
            for iota in range(1, entry.degree + 1):
                j = alpha_index(B, tau, kappa, iota)
                assert alpha_inverse(B, j) == (tau, kappa, iota)
                seen.append(j)
    assert sorted(seen) == list(range(1, 14))


def test_block_diagonal_structure_and_layout():
    G = build_group("dihedral", 6)
    catalog = irreducible_reps(G)
    rep = block_diagonal([(catalog[0], 2), (catalog[4], 2), (catalog[5], 1)])
    assert rep.degree == 8
    assert rep.block is not None
    assert [(b.degree, b.multiplicity) for b in rep.block.blocks] == [(1, 2), (2, 2), (2, 1)]
    verify_representation(rep)
    assert_allclose(rep.matrices[:, 2:4, 2:4], catalog[4].matrices)
    assert_allclose(rep.matrices[:, 4:6, 4:6], catalog[4].matrices)
    assert_allclose(rep.matrices[:, 0:2, 2:8], 0)


def test_block_diagonal_rejects_equivalent_blocks():
    catalog = irreducible_reps(build_group("cyclic", 5))
    with pytest.raises(RepresentationError, match="äquivalent"):
        block_diagonal([(catalog[1], 1), (catalog[1], 2)])
    with pytest.raises(RepresentationError):
        block_diagonal([])


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=2**32))
def test_random_block_diagonal_has_requested_degree(n, seed):
    G = build_group("dihedral", 4)
    rep = random_block_diagonal(G, n, make_rng(seed))
    assert rep.degree == n
    assert rep.block.n == n
    verify_representation(rep)


def test_diagonal_character_rep_is_conjugated_left_regular():
    G = build_group("cyclic", 8)
    rho = diagonal_character_rep(G)
    assert rho.realization == "diagonal_character"
    assert rho.block.n == 8
    conj = conjugate_rep(left_regular(G), cyclic_fourier_matrix(G))
    assert_allclose(conj.matrices, rho.matrices, atol=1e-12)
    l = np.arange(1, 9)
    assert_allclose(np.diagonal(rho(3)), np.exp(2j * np.pi * 3 * l / 8))


def test_diagonal_character_rep_needs_cyclic_group():
    with pytest.raises(RepresentationError):
        diagonal_character_rep(build_group("dihedral", 4))


def test_conjugate_rep_rejects_non_unitary():
    G = build_group("cyclic", 3)
    with pytest.raises(RepresentationError, match="unitär"):
        conjugate_rep(left_regular(G), 2 * np.eye(3))
    with pytest.raises(RepresentationError):
        conjugate_rep(left_regular(G), np.eye(2))


def test_conjugation_preserves_characters():
    G = build_group("affine", 5)
    V = dft_matrix(G.order)
    pi = left_regular(G)
    rho = conjugate_rep(pi, V)
    verify_representation(rho)
    assert are_equivalent(pi, rho)


@pytest.mark.parametrize("pairs", [[(1, 1)], [(2, 2)], [(3, 2), (2, 3)], [(2, 3), (3, 2), (1, 1)], [(4, 1), (1, 4)]])
def test_realization_transform_u(pairs):
    B = BlockStructure.from_pairs(pairs)
    U = realization_transform_U(B)
    assert is_unitary(U)
    assert subrow_dichotomy_defect(B, U) < 1e-12


def test_plain_dft_breaks_subrow_dichotomy():
    B = BlockStructure.from_pairs([(2, 2)])
    assert subrow_dichotomy_defect(B, dft_matrix(4)) > 0.1


def test_induced_from_rotation_character_is_rho_one():
    G = build_group("dihedral", 4)
    H = [0, 1, 2, 3]
    P = coset_partition(G, H)
    sigma = subgroup_characters(subgroup_group(G, H))[1]
    pi = induce(P, sigma)
    assert pi.degree == 2
    verify_representation(pi)
    assert are_equivalent(pi, irreducible_reps(G)[4])


def test_induced_rep_with_custom_cross_section():
    G = build_group("cyclic", 6)
    P = coset_partition(G, [0, 3])
    sigma = subgroup_characters(subgroup_group(G, [0, 3]))[1]
    pi = induce(P, sigma, cross_section(P, [3, 4, 2]))
    assert pi.degree == 3
    verify_representation(pi)
    default = induce(P, sigma)
    assert are_equivalent(pi, default)


def test_induce_rejects_foreign_sigma():
    G = build_group("dihedral", 4)
    P = coset_partition(G, [0, 1, 2, 3])
    other = subgroup_characters(subgroup_group(G, [0, 2]))[0]
    with pytest.raises(RepresentationError):
        induce(P, other)


def test_subgroup_characters_need_cyclic_subgroup():
    G = build_group("dihedral", 4)
    with pytest.raises(RepresentationError, match="zyklisch"):
        subgroup_characters(subgroup_group(G, [0, 2, 4, 6]))


@pytest.mark.parametrize("kind, param", [("cyclic", 24), ("dihedral", 6), ("affine", 5)])
def test_regular_random_block_diagonal_admits_structured_xi(kind, param):
    G = build_group(kind, param)
    for seed in range(20):
        rep = random_block_diagonal(G, G.order, make_rng(seed), regular=True)
        assert rep.degree == G.order
        assert all(b.multiplicity <= b.degree for b in rep.block.blocks)
        xi = sample_generating_vector(rep.degree, SCHEME_STRUCTURED, seed, rep.block)
        assert xi.values.shape == (G.order,)


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2**32))
def test_regular_random_block_diagonal_below_group_order(n, seed):
    G = build_group("dihedral", 4)
    rep = random_block_diagonal(G, n, make_rng(seed), regular=True)
    assert rep.degree == n
    assert all(b.multiplicity <= b.degree for b in rep.block.blocks)


def test_regular_random_block_diagonal_rejects_degree_above_order():
    with pytest.raises(RepresentationError, match="Reguläre Blockstruktur"):
        random_block_diagonal(build_group("cyclic", 6), 7, make_rng(0), regular=True)
    assert random_block_diagonal(build_group("cyclic", 6), 7, make_rng(0)).degree == 7
