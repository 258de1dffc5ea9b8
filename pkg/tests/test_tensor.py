import numpy as np
import pytest

from spanwitness import (
    CANONICAL,
    NotHermitianError,
    ProductVector,
    TensorShape,
    all_subsets,
    eighth_root,
    flatten,
    is_ppt,
    normalize,
    partial_conjugate,
    partial_transpose,
    ppt_interior_check,
    product_state,
    product_vector,
    rho_lambda,
    state_from,
    subset_complement,
    x_state,
    zeta_vector,
)
from spanwitness.family import FamilyParams, ZeroFamily

SUBSETS3 = all_subsets(3)


def test_flat_index_big_endian():
    shape = TensorShape((2, 2, 2))
    assert shape.flat_index((0, 1, 1)) == 3
    assert shape.flat_index((1, 0, 0)) == 4
    assert shape.multi_index(5) == (1, 0, 1)
    assert shape.basis_label(6) == "110"


def test_all_subsets_order():
    assert SUBSETS3 == [(), (1,), (2,), (1, 2), (3,), (1, 3), (2, 3), (1, 2, 3)]
    assert subset_complement((1, 3), 3) == (2,)


def test_flatten_basis():
    pv = product_vector([1, 0], [1, 0], [1, 0])
    v = flatten(pv)
    assert np.array_equal(v, np.eye(8)[0])


def test_flatten_two_party_grouping():
    # (1, conj(a)) (x) (0, 1, a, 0) lands on coordinates
    # (0, 1, a, 0, 0, conj(a), |a|^2, 0)
    a = 0.3 + 0.8j
    pv = product_vector([1, np.conj(a)], [0, 1, a, 0])
    expected = np.array([0, 1, a, 0, 0, np.conj(a), abs(a) ** 2, 0], dtype=complex)
    assert np.allclose(flatten(pv), expected, atol=1e-14)


def test_flatten_phase_locked_vector():
    pv = zeta_vector(ZeroFamily.Z1, 1.0, 1.0, CANONICAL)
    w = eighth_root
    expected = np.array([1, w(3), w(1), -1, w(7), w(2), 1, w(3)])
    assert np.allclose(flatten(pv), expected, atol=1e-14)


def test_partial_transpose_empty_and_full():
    rng = np.random.default_rng(2)
    g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    state = state_from(g, (2, 2, 2))
    assert np.array_equal(partial_transpose(state, ()), g)
    assert np.array_equal(partial_transpose(state, (1, 2, 3)), g.T)


def test_partial_transpose_single_swap():
    m = np.zeros((8, 8), dtype=complex)
    m[0, 7] = 1.0  # |000><111|
    state = state_from(m, (2, 2, 2))
    got = partial_transpose(state, (3,))
    expected = np.zeros((8, 8), dtype=complex)
    expected[1, 6] = 1.0  # |001><110|
    assert np.array_equal(got, expected)


def test_partial_transpose_involution_and_composition():
    rng = np.random.default_rng(4)
    g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    state = state_from(g, (2, 2, 2))
    for sub in SUBSETS3:
        once = partial_transpose(state, sub)
        twice = partial_transpose(state_from(once, (2, 2, 2)), sub)
        assert np.array_equal(twice, g)
    step = partial_transpose(state, (1,))
    composed = partial_transpose(state_from(step, (2, 2, 2)), (3,))
    assert np.array_equal(composed, partial_transpose(state, (1, 3)))


def test_partial_transpose_preserves_trace_and_spectrum_pairing():
    rng = np.random.default_rng(8)
    g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    h = (g + g.conj().T) / 2
    state = state_from(h, (2, 2, 2))
    for sub in SUBSETS3:
        pt = partial_transpose(state, sub)
        assert abs(np.trace(pt) - np.trace(h)) < 1e-10
        # S and its complement carry transpose-related, equal spectra
        ptc = partial_transpose(state, subset_complement(sub, 3))
        assert np.allclose(
            np.linalg.eigvalsh(pt), np.linalg.eigvalsh(ptc), atol=1e-10
        )


def test_partial_conjugate_real_and_full():
    pv = product_vector([1, 2], [3, 4], [5, 6])
    for sub in SUBSETS3:
        assert np.array_equal(flatten(partial_conjugate(pv, sub)), flatten(pv))
    pvc = product_vector([1, 1j], [1, -1j], [1j, 0])
    full = partial_conjugate(pvc, (1, 2, 3))
    assert np.array_equal(flatten(full), flatten(pvc).conj())


def test_partial_conjugate_first_factor_of_z1():
    pv = zeta_vector(ZeroFamily.Z1, 1.0, 1.0, CANONICAL)
    got = partial_conjugate(pv, (1,))
    assert np.allclose(got.factors[0], [1, eighth_root(1)], atol=1e-15)
    assert np.array_equal(got.factors[1], pv.factors[1])
    assert np.array_equal(got.factors[2], pv.factors[2])


def test_partial_conjugate_complement_conjugation_identity():
    rng = np.random.default_rng(12)
    for _ in range(20):
        pv = ProductVector(
            [rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(3)]
        )
        for sub in SUBSETS3:
            a = flatten(partial_conjugate(pv, sub))
            b = flatten(partial_conjugate(pv, subset_complement(sub, 3)))
            assert np.max(np.abs(a - b.conj())) < 1e-12


def test_pure_product_partial_transpose_matches_partial_conjugate():
    rng = np.random.default_rng(21)
    for _ in range(10):
        pv = ProductVector(
            [rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(3)]
        )
        rho = product_state(pv)
        for sub in SUBSETS3:
            gamma = flatten(partial_conjugate(pv, sub))
            expected = np.outer(gamma, gamma.conj())
            assert np.max(np.abs(partial_transpose(rho, sub) - expected)) < 1e-12


def test_is_ppt_product_projector():
    pv = product_vector([1, 1j], [2, 1], [0, 1])
    rep = is_ppt(product_state(pv), tol=1e-12)
    assert rep.is_ppt
    assert all(v >= -1e-12 for v in rep.min_eigenvalues.values())
    assert len(rep.min_eigenvalues) == 8


def test_is_ppt_x_state_on_curve():
    assert is_ppt(x_state(CANONICAL), 1e-10).is_ppt


def test_is_ppt_x_state_off_curve_fails_at_identity_subset():
    rep = is_ppt(x_state(FamilyParams(2.0, 2.0)), 1e-10)
    assert not rep.is_ppt
    # the central block [[1/sqrt2, -1], [-1, 1/sqrt2]] has eigenvalue
    # 1/sqrt2 - 1 already before any transposition
    assert abs(rep.min_eigenvalues[()] - (1 / np.sqrt(2) - 1)) < 1e-12


def test_is_ppt_rejects_non_hermitian():
    m = np.zeros((8, 8), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(NotHermitianError):
        is_ppt(state_from(m, (2, 2, 2)))


def test_interior_check_maximally_mixed():
    rep = ppt_interior_check(state_from(np.eye(8) / 8, (2, 2, 2)))
    assert rep.full_rank
    assert all(r == 8 for r in rep.ranks.values())


def test_interior_check_pure_product():
    rep = ppt_interior_check(product_state(product_vector([1, 0], [1, 0], [1, 0])))
    assert not rep.full_rank
    assert rep.ranks[()] == 1


def test_interior_check_boundary_family_midpoint():
    state, _ = rho_lambda(0.5)
    rep = ppt_interior_check(state)
    assert rep.full_rank
    assert list(rep.ranks.values()) == [8] * 8


def test_normalize():
    state = normalize(x_state(CANONICAL))
    assert abs(np.trace(state.matrix) - 1.0) < 1e-12
    assert state.normalized
