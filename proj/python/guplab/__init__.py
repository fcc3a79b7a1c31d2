"""Quantum mechanics on a bounded momentum interval.

The compiled extension carries all of the numerics; this package just
re-exports it under a stable name.
"""

from ._core import (
    BetheRootSet,
    ChebyshevGrid,
    ExpectationReport,
    MlUncertaintyProfile,
    ModelParameters,
    SqueezedStateParams,
    State,
    alpha_exponent,
    apply_P,
    apply_X,
    bethe_solve,
    build_grid,
    commutator_residual,
    energy_classical_limit,
    energy_level,
    expectation_report,
    inner_product,
    lattice_overlap_matrix,
    max_localization_state,
    ml_uncertainty_profile,
    oracle_spectrum,
    oracle_spectrum_extrapolated,
    oscillator_wavefunction,
    overlap_closed_form,
    overlap_quadrature,
    polynomial_oracle_roots,
    position_eigenstate,
    squeezed_state,
)

__all__ = [
    "BetheRootSet",
    "ChebyshevGrid",
    "ExpectationReport",
    "MlUncertaintyProfile",
    "ModelParameters",
    "SqueezedStateParams",
    "State",
    "alpha_exponent",
    "apply_P",
    "apply_X",
    "bethe_solve",
    "build_grid",
    "commutator_residual",
    "energy_classical_limit",
    "energy_level",
    "expectation_report",
    "inner_product",
    "lattice_overlap_matrix",
    "max_localization_state",
    "ml_uncertainty_profile",
    "oracle_spectrum",
    "oracle_spectrum_extrapolated",
    "oscillator_wavefunction",
    "overlap_closed_form",
    "overlap_quadrature",
    "polynomial_oracle_roots",
    "position_eigenstate",
    "squeezed_state",
]
