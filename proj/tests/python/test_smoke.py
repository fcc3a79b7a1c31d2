"""End-to-end smoke checks for the guplab Python module.

Fast sanity checks that the bindings expose working pieces of every layer:
model parameters, grids, states, operator expectations, overlap formulas,
oscillator energies, root solving, and the grid oracle.  Tight numerics live
in the C++ test suite; tolerances here only guard the plumbing.
"""

import math

import pytest

import guplab


def natural_units():
    return guplab.ModelParameters(beta=1.0)


def test_model_parameters_and_validation():
    p = natural_units()
    assert p.beta == 1.0
    assert p.hbar == 1.0
    assert p.p_max == 1.0
    assert p.min_length == 1.0
    assert p.g == pytest.approx(1.0)
    assert "ModelParameters" in repr(p)
    with pytest.raises(ValueError):
        guplab.ModelParameters(beta=-1.0)
    with pytest.raises(ValueError):
        guplab.ModelParameters(beta=1.0, hbar=-1.0)
    # beta = 0 constructs (classical-limit helpers accept it) but deformed
    # quantities reject it
    classical = guplab.ModelParameters(beta=0.0)
    with pytest.raises(ValueError):
        classical.p_max


def test_grid_measure_normalization():
    p = natural_units()
    grid = guplab.build_grid(p, 128)
    assert len(grid) == 128
    # integral of the invariant measure over the momentum interval is pi/sqrt(beta)
    assert sum(grid.weights) == pytest.approx(math.pi, rel=1e-12)
    assert all(-1.0 < x < 1.0 for x in grid.nodes)


def test_ground_state_energy_special_value():
    # beta = hbar = m = omega = 1: E_0 = 1/4 + sqrt(5)/4
    e0 = guplab.energy_level(natural_units(), 0)
    assert e0 == pytest.approx(0.25 + math.sqrt(5.0) / 4.0, abs=1e-14)
    e_cl = guplab.energy_classical_limit(natural_units(), 0)
    assert e_cl == pytest.approx(0.5, abs=1e-15)


def test_alpha_exponent_tuple():
    alpha, g = guplab.alpha_exponent(natural_units())
    assert g == pytest.approx(1.0)
    assert alpha == pytest.approx(0.25 + math.sqrt(5.0) / 4.0, abs=1e-14)


def test_overlap_closed_form_and_quadrature():
    p = natural_units()
    L = p.min_length
    assert guplab.overlap_closed_form(p, 0.0, 0.0) == pytest.approx(1.0)
    # neighbouring integer-lattice midpoint: sin(pi/2)/(pi/2) = 2/pi
    assert guplab.overlap_closed_form(p, L, 0.0) == pytest.approx(2.0 / math.pi, abs=1e-14)
    # orthogonal at even-integer separation
    assert abs(guplab.overlap_closed_form(p, 2.0 * L, 0.0)) < 1e-15
    quad = guplab.overlap_quadrature(p, 0.37 * L, -1.2 * L)
    closed = guplab.overlap_closed_form(p, 0.37 * L, -1.2 * L)
    assert quad == pytest.approx(closed, abs=1e-9)


def test_lattice_matrix_is_identity():
    m = guplab.lattice_overlap_matrix(natural_units(), 2)
    for i, row in enumerate(m):
        for j, entry in enumerate(row):
            assert entry == pytest.approx(1.0 if i == j else 0.0, abs=1e-12)


def test_position_eigenstate_value_and_residual():
    p = natural_units()
    s = guplab.position_eigenstate(p, 0.0)
    assert s.order == 3
    assert s.value(0.0) == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-14)
    res = guplab.commutator_residual(s, [0.0, 0.4, -0.8])
    assert max(res) < 1e-10


def test_max_localization_profile():
    p = natural_units()
    prof = guplab.ml_uncertainty_profile(p, xi=0.0)
    assert prof.norm == pytest.approx(1.0, abs=1e-9)
    assert prof.delta_X == pytest.approx(2.0 / math.sqrt(3.0), abs=1e-9)
    assert prof.min_length_reference == pytest.approx(0.75 * math.sqrt(3.0), abs=1e-14)
    assert prof.kinetic_lower == pytest.approx(1.0 / 12.0, abs=1e-9)
    assert prof.kinetic_deformed == pytest.approx(1.0 / 6.0, abs=1e-7)
    assert prof.robertson_lhs == pytest.approx(prof.robertson_rhs, rel=1e-8)
    # the ml state itself evaluates to the flat-envelope modulus at p = 0
    s = guplab.max_localization_state(p, 0.0)
    assert s.value(0.0).real == pytest.approx(math.sqrt(8.0 / (3.0 * math.pi)), abs=1e-14)


def test_squeezed_state_moments():
    p = natural_units()
    grid = guplab.build_grid(p, 512)
    state = guplab.squeezed_state(p, guplab.SqueezedStateParams(dp2=0.5))
    rep = guplab.expectation_report(state, grid)
    assert rep.norm == pytest.approx(1.0, abs=1e-9)
    assert rep.mean_P == pytest.approx(0.0, abs=1e-8)
    assert rep.var_P == pytest.approx(0.5, rel=1e-4)
    assert not rep.deformed_moments_divergent


def test_operator_application_changes_order():
    s = guplab.max_localization_state(natural_units(), 0.0)
    assert guplab.apply_P(s).order == s.order
    assert guplab.apply_X(s).order == s.order - 1


def test_inner_product_normalization():
    p = natural_units()
    grid = guplab.build_grid(p, 256)
    s = guplab.position_eigenstate(p, 0.0)
    assert guplab.inner_product(s, s, grid).real == pytest.approx(1.0, abs=1e-10)


def test_bethe_roots_against_polynomial_oracle():
    p = natural_units()
    one = guplab.bethe_solve(p, 1)
    assert one.converged
    assert one.roots == pytest.approx([0.5], abs=1e-12)
    assert one.max_residual() < 1e-12
    two = guplab.bethe_solve(p, 2)
    oracle = guplab.polynomial_oracle_roots(p, 2)
    assert two.roots == pytest.approx(oracle.roots, abs=1e-10)


def test_oscillator_wavefunction_annihilated_norm():
    p = natural_units()
    grid = guplab.build_grid(p, 256)
    psi0 = guplab.oscillator_wavefunction(p, 0)
    assert guplab.inner_product(psi0, psi0, grid).real == pytest.approx(1.0, rel=1e-8)
    assert psi0.value(0.0).real > 0.0


def test_oracle_matches_closed_form_spectrum():
    p = natural_units()
    levels = guplab.oracle_spectrum_extrapolated(p, 512, 3)
    for n, approx in enumerate(levels):
        assert approx == pytest.approx(guplab.energy_level(p, n), rel=1e-6)
    raw = guplab.oracle_spectrum(p, 512, 3)
    assert raw == pytest.approx(levels, rel=1e-4)
