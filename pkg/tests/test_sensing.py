import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from module.darstellungen import (
    BlockStructure,
    block_diagonal,
    conjugate_rep,
    irreducible_reps,
    left_regular,
    trivial_rep,
)
from module.fehler import RepresentationError, SamplingError
from module.fourier import dft_matrix
from module.gruppen import build_group, coset_partition, is_coset_admissible
from module.sensing import (
    OMEGA_COSET,
    OMEGA_FIXED,
    OMEGA_IID,
    SCHEME_GAUSSIAN,
    SCHEME_RADEMACHER,
    SCHEME_STEINHAUS,
    SCHEME_STRUCTURED,
    SamplingSet,
    build_measurement,
    equivalent_generating_vector,
    orbit_matrix,
    plant_sparse_signal,
    resolve_basis,
    sample_generating_vector,
    sample_omega,
    structured_vector,
)


@pytest.mark.parametrize("scheme", [SCHEME_GAUSSIAN, SCHEME_RADEMACHER, SCHEME_STEINHAUS])
def test_generating_vector_is_deterministic(scheme):
    a = sample_generating_vector(16, scheme, 42)
    b = sample_generating_vector(16, scheme, 42)
    c = sample_generating_vector(16, scheme, 43)
    assert_array_equal(a.values, b.values)
    assert not np.array_equal(a.values, c.values)
    assert a.n == 16
    assert not a.values.flags.writeable


def test_rademacher_and_steinhaus_values():
    r = sample_generating_vector(200, SCHEME_RADEMACHER, 1).values
    assert set(np.unique(r.real)) == {-1.0, 1.0}
    assert_allclose(r.imag, 0)
    s = sample_generating_vector(200, SCHEME_STEINHAUS, 1).values
    assert_allclose(np.abs(s), 1.0)


def test_gaussian_has_unit_variance():
    g = sample_generating_vector(20_000, SCHEME_GAUSSIAN, 3).values
    assert np.mean(np.abs(g) ** 2) == pytest.approx(1.0, abs=0.05)


def test_unknown_scheme_is_rejected():
    with pytest.raises(SamplingError):
        sample_generating_vector(4, "poisson", 0)


@pytest.mark.parametrize("pairs", [[(3, 2)], [(2, 1), (3, 3), (1, 1)], [(4, 2), (2, 2)]])
def test_structured_vector_norms_and_support(pairs):
    B = BlockStructure.from_pairs(pairs)
    xi = sample_generating_vector(B.n, SCHEME_STRUCTURED, 5, block=B).values
    for offset, entry in zip(B.offsets, B.blocks):
        d, m = entry.degree, entry.multiplicity
        copies = xi[offset : offset + d * m].reshape(m, d)
        assert_allclose(np.linalg.norm(copies, axis=1) ** 2, d)
    # Träger ist genau das Bild der β-Abbildung
    expected = {
        offset + min(entry.multiplicity - 1, iota - 1) * entry.degree + iota - 1
        for offset, entry in zip(B.offsets, B.blocks)
        for iota in range(1, entry.degree + 1)
    }
    assert set(np.flatnonzero(np.abs(xi) > 0)) == expected


def test_structured_vector_for_degree_three_multiplicity_two():
    B = BlockStructure.from_pairs([(3, 2)])
    xi = structured_vector(B, np.ones(3, dtype=complex))
    assert_allclose(xi, [np.sqrt(3), 0, 0, 0, np.sqrt(1.5), np.sqrt(1.5)])


def test_structured_vector_needs_multiplicity_at_most_degree():
    B = BlockStructure.from_pairs([(1, 2)])
    with pytest.raises(SamplingError, match="m ≤ d"):
        sample_generating_vector(2, SCHEME_STRUCTURED, 0, block=B)
    with pytest.raises(SamplingError):
        sample_generating_vector(2, SCHEME_STRUCTURED, 0)


def test_fixed_set_without_seed_takes_first_elements():
    G = build_group("cyclic", 10)
    assert sample_omega(G, 4, OMEGA_FIXED).indices == (0, 1, 2, 3)


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=2**32))
def test_fixed_set_is_sorted_and_distinct(m, seed):
    G = build_group("dihedral", 6)
    omega = sample_omega(G, m, OMEGA_FIXED, seed)
    assert omega.m == m
    assert list(omega.indices) == sorted(set(omega.indices))
    assert all(0 <= g < 12 for g in omega.indices)


def test_iid_mode_allows_m_above_order():
    G = build_group("cyclic", 4)
    omega = sample_omega(G, 30, OMEGA_IID, 8)
    assert omega.m == 30
    assert len(set(omega.indices)) <= 4
    assert omega == sample_omega(G, 30, OMEGA_IID, 8)


def test_fixed_set_rejects_m_above_order():
    with pytest.raises(SamplingError):
        sample_omega(build_group("cyclic", 4), 5, OMEGA_FIXED, 0)
    with pytest.raises(SamplingError):
        sample_omega(build_group("cyclic", 4), 0, OMEGA_FIXED)


def test_coset_mode_picks_one_element_per_coset():
    G = build_group("cyclic", 12)
    P = coset_partition(G, [0, 4, 8])
    for seed in range(20):
        omega = sample_omega(G, 3, OMEGA_COSET, seed, partition=P)
        assert is_coset_admissible(omega.indices, P)
        assert omega.m == 3
    with pytest.raises(SamplingError):
        sample_omega(G, 5, OMEGA_COSET, 0, partition=P)
    with pytest.raises(SamplingError):
        sample_omega(G, 2, OMEGA_COSET, 0)


def test_resolve_basis():
    B, name = resolve_basis("identity", 3)
    assert name == "identity"
    assert_allclose(B, np.eye(3))
    B, name = resolve_basis("dft", 4)
    assert name == "dft"
    assert_allclose(B, dft_matrix(4))
    with pytest.raises(RepresentationError):
        resolve_basis("haar", 4)
    with pytest.raises(RepresentationError):
        resolve_basis(2 * np.eye(4), 4)


def test_measurement_rows_follow_orbit(rng):
    G = build_group("dihedral", 4)
    rep = left_regular(G)
    xi = sample_generating_vector(8, SCHEME_GAUSSIAN, 11)
    omega = SamplingSet((1, 5, 6), OMEGA_FIXED)
    ens = build_measurement(rep, xi, omega)
    assert ens.shape == (3, 8)
    for row, g in zip(ens.phi, omega.indices):
        assert_allclose(row, np.conj(rep(g) @ xi.values) / np.sqrt(3))
    x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    # y_g = ⟨x, π(g)ξ⟩/√m
    y = ens.phi @ x
    assert y[0] == pytest.approx(np.vdot(rep(1) @ xi.values, x) / np.sqrt(3))


def test_measurement_without_normalization_and_with_basis():
    G = build_group("cyclic", 6)
    rep = left_regular(G)
    xi = sample_generating_vector(6, SCHEME_STEINHAUS, 2)
    omega = sample_omega(G, 6, OMEGA_FIXED)
    ens = build_measurement(rep, xi, omega, "dft", normalize=False)
    assert ens.basis_name == "dft"
    assert_allclose(ens.phi, orbit_matrix(rep, xi.values).conj().T @ dft_matrix(6))


def test_full_orbit_of_irreducible_rep_is_tight():
    # Schur: Σ_g π(g)ξξ*π(g)* = |G|/d·‖ξ‖²·I, mit ‖ξ‖² = d also |G|·I
    G = build_group("affine", 5)
    rep = irreducible_reps(G)[-1]
    xi = sample_generating_vector(4, SCHEME_STEINHAUS, 9)
    ens = build_measurement(rep, xi, sample_omega(G, 20, OMEGA_FIXED))
    assert_allclose(ens.phi.conj().T @ ens.phi, np.eye(4), atol=1e-10)


def test_measurement_rejects_wrong_lengths():
    G = build_group("cyclic", 4)
    rep = trivial_rep(G, 3)
    with pytest.raises(RepresentationError):
        build_measurement(rep, np.ones(4), SamplingSet((0,), OMEGA_FIXED))
    with pytest.raises(SamplingError):
        build_measurement(rep, np.ones(3), SamplingSet((0, 7), OMEGA_FIXED))


def test_equivalent_realizations_give_same_matrix():
    G = build_group("dihedral", 6)
    catalog = irreducible_reps(G)
    pi = block_diagonal([(catalog[0], 1), (catalog[4], 2), (catalog[5], 1)])
    V = dft_matrix(pi.degree)
    # ρ = V*πV entspricht conjugate_rep mit V*
    rho = conjugate_rep(pi, V.conj().T)
    xi = sample_generating_vector(pi.degree, SCHEME_GAUSSIAN, 4).values
    omega = sample_omega(G, 7, OMEGA_FIXED, 1)
    phi_pi = build_measurement(pi, xi, omega).phi
    xi_rho = equivalent_generating_vector(xi, V)
    phi_rho = build_measurement(rho, xi_rho, omega, V.conj().T).phi
    assert_allclose(phi_rho, phi_pi, atol=1e-10)


def test_plant_sparse_signal():
    x = plant_sparse_signal(20, 5, np.random.default_rng(0))
    assert np.count_nonzero(x) == 5
    assert_allclose(np.abs(x[x != 0]), 1.0)
    with pytest.raises(SamplingError):
        plant_sparse_signal(4, 5, np.random.default_rng(0))
