import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from module.darstellungen import irreducible_reps
from module.fehler import ConfigurationError, RepresentationError
from module.fourier import (
    circular_convolve,
    classical_dft,
    classical_idft,
    cyclic_fourier_matrix,
    delta_train,
    dft_matrix,
    group_convolve,
    group_fourier,
    group_inverse_fourier,
    plancherel_inner,
)
from module.gruppen import build_group
from module.zufall import make_rng


def _complex(rng, n):
    parts = rng.standard_normal((2, n))
    return parts[0] + 1j * parts[1]


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_dft_matrix_is_unitary(n):
    F = dft_matrix(n)
    assert_allclose(F.conj().T @ F, np.eye(n), atol=1e-12)


def test_classical_dft_matches_definition(rng):
    n = 12
    x = _complex(rng, n)
    j = np.arange(1, n + 1)
    expected = np.exp(2j * np.pi * np.outer(j, j) / n) @ x
    assert_allclose(classical_dft(x), expected, atol=1e-10)
    assert_allclose(classical_dft(x), np.sqrt(n) * dft_matrix(n) @ x, atol=1e-10)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=2**32))
def test_classical_idft_inverts(n, seed):
    x = _complex(make_rng(seed), n)
    assert_allclose(classical_idft(classical_dft(x)), x, atol=1e-9)


def test_convolution_theorem(rng):
    n = 10
    a, b = _complex(rng, n), _complex(rng, n)
    assert_allclose(classical_dft(circular_convolve(a, b)), classical_dft(a) * classical_dft(b), atol=1e-9)


def test_circular_convolve_with_unit_impulse():
    n = 6
    a = np.arange(1, n + 1, dtype=complex)
    # Koordinate j = n ist das neutrale Element der 1-basierten Indizierung
    impulse = np.zeros(n, dtype=complex)
    impulse[n - 1] = 1.0
    assert_allclose(circular_convolve(a, impulse), a)


def test_delta_train_has_sparse_transform():
    for n in range(1, 65):
        for s in (d for d in range(1, n + 1) if n % d == 0):
            v = delta_train(n, s)
            assert np.count_nonzero(v) == s
            assert v[0] == 1
            spectrum = classical_dft(v)
            support = np.flatnonzero(np.abs(spectrum) > 1e-9)
            # 1-basierte Frequenz l = Position + 1 mit s | l
            assert_array_equal(support, np.arange(s - 1, n, s))
            assert len(support) == n // s
            assert_allclose(np.abs(spectrum[support]), s)


def test_delta_train_needs_divisor():
    with pytest.raises(ConfigurationError):
        delta_train(9, 2)


def test_cyclic_fourier_matrix_rows():
    G = build_group("cyclic", 5)
    F = cyclic_fourier_matrix(G)
    assert_allclose(F.conj().T @ F, np.eye(5), atol=1e-12)
    assert_allclose(F[-1], np.full(5, 1 / np.sqrt(5)))


@pytest.mark.parametrize("kind, param", [("cyclic", 9), ("dihedral", 6), ("dihedral", 5), ("affine", 5)])
def test_group_fourier_inversion_and_plancherel(kind, param, rng):
    G = build_group(kind, param)
    catalog = irreducible_reps(G)
    f, h = _complex(rng, G.order), _complex(rng, G.order)
    F, H = group_fourier(f, catalog), group_fourier(h, catalog)
    assert_allclose(group_inverse_fourier(F), f, atol=1e-10)
    assert plancherel_inner(F, H) == pytest.approx(np.sum(f * np.conj(h)), abs=1e-9)


def test_group_convolution_theorem(rng):
    G = build_group("affine", 5)
    catalog = irreducible_reps(G)
    x = _complex(rng, G.order)
    y = rng.standard_normal(G.order)
    xy = group_fourier(group_convolve(x, y, G), catalog)
    X, Y = group_fourier(x, catalog), group_fourier(y, catalog)
    # (x∗y)(g) = Σ_h x(h) y(g⁻¹h) ergibt für reelles y das Produkt x̂·ŷ*
    for i in range(len(catalog)):
        assert_allclose(xy[i], X[i] @ Y[i].conj().T, atol=1e-9)


def test_group_fourier_rejects_incomplete_catalog():
    G = build_group("dihedral", 4)
    with pytest.raises(RepresentationError, match="Unvollständig"):
        group_fourier(np.ones(G.order), irreducible_reps(G)[:-1])


def test_group_convolve_checks_length():
    G = build_group("cyclic", 4)
    with pytest.raises(RepresentationError):
        group_convolve(np.ones(3), np.ones(4), G)
