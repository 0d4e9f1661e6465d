"""Hankel sections, derivation products, and the displacement identity."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from foguel_lab import (
    HankelSpec,
    InvalidDimensionError,
    InvalidWindowError,
    ValidationError,
    WeightSequence,
    antisym_part,
    derivation_matrix,
    derivation_product,
    derivative_weight,
    hankel_defect,
    make_hankel,
    make_shift,
    make_weighted_hankel,
    number_matrix,
    op_norm_dense,
    sylvester_residual,
    unit_weight,
)
from conftest import random_complex


def test_hankel_entries_follow_the_sequence():
    spec = HankelSpec(WeightSequence.geometric(0.5), 4)
    h = make_hankel(spec)
    for i in range(4):
        for j in range(4):
            assert h[i, j] == 0.5 ** (i + j)


def test_weighted_hankel_carries_the_derivative_weight():
    spec = HankelSpec(WeightSequence.geometric(0.5), 4)
    h = make_weighted_hankel(spec, derivative_weight)
    for i in range(4):
        for j in range(4):
            assert h[i, j] == (i + j + 1) * 0.5 ** (i + j)


def test_callable_coefficients_are_accepted():
    spec = HankelSpec(lambda k: complex(k), 3)
    h = make_hankel(spec)
    assert np.array_equal(h, [[0, 1, 2], [1, 2, 3], [2, 3, 4]])


def test_hilbert_type_section_climbs_toward_pi():
    """1/(k+1)^2 coefficients with the derivative weight give the classical
    [1/(i+j+1)] section, whose norms increase to pi with the size."""
    norms = []
    for n in (8, 32, 128, 256):
        spec = HankelSpec(WeightSequence.power(2.0), n)
        norms.append(op_norm_dense(make_weighted_hankel(spec, derivative_weight)).value)
    assert all(a < b for a, b in zip(norms, norms[1:]))
    assert all(v < np.pi for v in norms)
    assert norms[-1] > 2.3  # well on its way at N = 256


def test_block_sections_repeat_blocks_along_antidiagonals():
    pauli_like = [np.eye(2), np.array([[0.0, 1.0], [1.0, 0.0]])]
    spec = HankelSpec(
        WeightSequence.geometric(0.5),
        3,
        block_dim=2,
        block_map=lambda k: pauli_like[k % 2],
    )
    h = make_hankel(spec)
    assert h.shape == (6, 6)
    assert hankel_defect(h, block_dim=2) == 0.0
    assert np.array_equal(h[:2, 2:4], 0.5 * pauli_like[1])


def test_block_dim_requires_block_map():
    with pytest.raises(ValidationError):
        HankelSpec(WeightSequence.constant(), 3, block_dim=2)


def test_defect_detects_a_corrupted_entry():
    spec = HankelSpec(WeightSequence.geometric(0.5), 5)
    h = make_hankel(spec)
    h[2, 3] += 0.125
    assert hankel_defect(h) == pytest.approx(0.125)


def test_defect_zero_on_every_generated_section():
    for seq in (WeightSequence.pisier_flat(), WeightSequence.harmonic()):
        h = make_hankel(HankelSpec(seq, 6))
        assert hankel_defect(h) == 0.0


# ---- derivation products ----------------------------------------------


def test_derivation_matrix_differentiates_monomials():
    d = derivation_matrix(5)
    # column j holds j at row j-1: the image of z^j is j z^(j-1)
    v = np.zeros(5, dtype=complex)
    v[3] = 1.0
    out = d @ v
    assert out[2] == 3.0 and np.abs(out).sum() == 3.0


def test_number_matrix_is_the_diagonal():
    assert np.array_equal(number_matrix(4), np.diag([0.0, 1.0, 2.0, 3.0]))


@pytest.mark.parametrize("kind", ["commutator", "gamma_d", "dstar_gamma"])
def test_derivation_products_match_literal_matmul(kind):
    """Entry formulas vs. actual matrix products — two independent routes."""
    spec = HankelSpec(WeightSequence.power(1.5), 9)
    gamma = make_hankel(spec)
    d = derivation_matrix(9)
    literal = {
        "gamma_d": gamma @ d,
        "dstar_gamma": d.conj().T @ gamma,
        "commutator": gamma @ d - d.conj().T @ gamma,
    }[kind]
    assert np.abs(derivation_product(spec, kind) - literal).max() < 1e-13


def test_commutator_is_difference_of_the_one_sided_products():
    spec = HankelSpec(WeightSequence.geometric(0.5), 8)
    lhs = derivation_product(spec, "commutator")
    rhs = derivation_product(spec, "gamma_d") - derivation_product(spec, "dstar_gamma")
    assert np.array_equal(lhs, rhs)


def test_derivation_product_rejects_blocks_and_bad_kinds():
    block_spec = HankelSpec(
        WeightSequence.constant(), 3, block_dim=2, block_map=lambda k: np.eye(2)
    )
    with pytest.raises(ValidationError):
        derivation_product(block_spec, "commutator")
    with pytest.raises(ValidationError):
        derivation_product(HankelSpec(WeightSequence.constant(), 3), "sideways")


# ---- displacement identity --------------------------------------------


@given(
    st.lists(
        st.floats(-2.0, 2.0, allow_nan=False, allow_infinity=False),
        min_size=8,
        max_size=12,
    )
)
def test_negated_gamma_d_solves_the_displacement_equation(values):
    """S* Y - Y S = Gamma holds entrywise away from the boundary for the
    candidate Y = -(Gamma D), whatever the coefficient sequence — the
    identity telescopes index by index."""
    values = values + [0.0, 0.0]  # pad so every antidiagonal is defined
    seq = WeightSequence.custom(values)
    n = 6
    spec = HankelSpec(seq, n)
    y = -derivation_product(spec, "gamma_d")
    gamma = make_hankel(spec)
    assert sylvester_residual(y, gamma, n - 1) < 1e-12


def test_dyadic_displacement_is_exact_to_machine():
    for n in (16, 64):
        spec = HankelSpec(WeightSequence.geometric(0.5), n)
        y = -derivation_product(spec, "gamma_d")
        gamma = make_hankel(spec)
        assert sylvester_residual(y, gamma, n - 1) < 1e-14


def test_full_window_residual_sees_the_boundary():
    # flat coefficients keep the truncation boundary O(n) instead of
    # letting it decay away with the sequence
    n = 16
    spec = HankelSpec(WeightSequence.constant(), n)
    y = -derivation_product(spec, "gamma_d")
    gamma = make_hankel(spec)
    s = make_shift(n)
    full = s.conj().T @ y - y @ s - gamma
    # everything off the last row/column cancels; the boundary does not
    assert np.abs(full[: n - 1, : n - 1]).max() < 1e-13
    assert np.abs(full).max() > 1.0


def test_hankel_perturbations_leave_the_residual_invariant(rng):
    """S* H - H S vanishes on the interior for any Hankel H, so adding one
    to a displacement candidate cannot change the interior residual."""
    n = 24
    spec = HankelSpec(WeightSequence.power(0.7), n)
    gamma = make_hankel(spec)
    y = -derivation_product(spec, "gamma_d")
    h = make_hankel(HankelSpec(WeightSequence.custom(rng.standard_normal(2 * n - 1)), n))
    base = sylvester_residual(y, gamma, n - 1)
    bumped = sylvester_residual(y + h, gamma, n - 1)
    assert abs(base - bumped) < 1e-12


def test_displacement_kernel_contains_hankel_matrices(rng):
    n = 12
    h = make_hankel(HankelSpec(WeightSequence.custom(rng.standard_normal(2 * n - 1)), n))
    s = make_shift(n)
    moved = s.conj().T @ h - h @ s
    assert np.abs(moved[: n - 1, : n - 1]).max() < 1e-14


def test_sylvester_residual_validates_window():
    y = np.zeros((4, 4))
    with pytest.raises(InvalidWindowError):
        sylvester_residual(y, y, 4)  # window must leave the boundary out
    with pytest.raises(InvalidWindowError):
        sylvester_residual(y, y, 0)


def test_sylvester_residual_shape_mismatch():
    with pytest.raises(InvalidDimensionError):
        sylvester_residual(np.zeros((4, 4)), np.zeros((5, 5)), 2)


# ---- antisymmetric part -----------------------------------------------


def test_antisym_part_is_antisymmetric_and_dominated(rng):
    for _ in range(5):
        y = random_complex(rng, 7)
        a = antisym_part(y)
        assert np.abs(a + a.T).max() < 1e-14
        assert op_norm_dense(a).value <= op_norm_dense(y).value + 1e-12


def test_antisym_part_of_symmetric_is_zero():
    h = make_hankel(HankelSpec(WeightSequence.harmonic(), 5))
    assert np.abs(antisym_part(h)).max() == 0.0
