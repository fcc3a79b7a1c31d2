#pragma once

#include <vector>

#include "guplab/operators.hpp"
#include "guplab/state.hpp"

namespace guplab {

// Formal position eigenstate with eigenvalue lambda:
//   psi_lambda(p) = (beta^(1/4)/sqrt(pi)) exp(-i lambda arcsin(sqrt(beta) p)/(hbar sqrt(beta))).
// Normalized under the weighted measure; not mutually orthogonal except on
// the lattice with spacing 2 hbar sqrt(beta).
struct PositionEigenstate {
  double lambda = 0.0;
  AnalyticState state;
};

PositionEigenstate position_eigenstate(const ModelParameters& params, double lambda);

// Closed-form overlap <psi_lambda | psi_lambda'>: sin(u)/u with
// u = (lambda - lambda') pi / (2 hbar sqrt(beta)).  Real and even.
double overlap_closed_form(const ModelParameters& params, double lambda, double lambda_prime);

// Overlap by quadrature of the weighted-measure integrand, never touching the
// closed form.  Plain Gauss-Chebyshev converges only at second order here
// (the phase has arcsin branch points at the interval ends), so the sum is
// Richardson-accelerated over grids of size n, 2n, 4n; the h^2 and h^4 error
// terms cancel exactly and the result carries the closed form to ~1e-13.
double overlap_quadrature(const ModelParameters& params, double lambda, double lambda_prime,
                          std::size_t base_n = 1024);

// Closed-form overlap matrix of the lattice lambda_n = (2n + offset) hbar sqrt(beta)
// for n in [-n_half, n_half].  Asserts identity within 1e-12 before returning.
std::vector<std::vector<double>> lattice_overlap_matrix(const ModelParameters& params,
                                                        int n_half, double offset);

// Squeezed family on the bounded interval: envelope power kappa/(4 beta dp2)
// with kappa = 1 + beta dp2 + beta mean_p^2, and the position/momentum phase
// profile in arcsin(sqrt(beta) p).
struct SqueezedStateParams {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double dp2 = 0.0;  // target momentum variance, must be positive
};

AnalyticState squeezed_state(const ModelParameters& params, const SqueezedStateParams& sq);

// Maximal-localization state centred at xi: the squeezed family member with
// the smallest position uncertainty, envelope (1 - beta p^2) exactly.
struct MaxLocalizationState {
  double xi = 0.0;
  AnalyticState state;
};

MaxLocalizationState max_localization_state(const ModelParameters& params, double xi);

struct MlUncertaintyProfile {
  double norm = 0.0;
  double mean_X = 0.0;
  double delta_X = 0.0;            // quadrature position uncertainty, 2 hbar sqrt(beta/3)
  double min_length_reference = 0.0;  // closed-form scale (3 sqrt(3)/4) hbar sqrt(beta)
  double kinetic_lower = 0.0;      // <p^2>/2m = 1/(12 m beta)
  double kinetic_deformed = 0.0;   // <P^2>/2m = 1/(6 m beta)
  double robertson_lhs = 0.0;      // delta_X * delta_P
  double robertson_rhs = 0.0;      // |<[X,P]>|/2; saturated by this family
};

MlUncertaintyProfile ml_uncertainty_profile(const ModelParameters& params, double xi,
                                            std::size_t grid_n = 1024);

// Reference scales of this model next to the minimal-length families it is
// measured against.  The ADV family depends on an opaque scale alpha chosen
// by the caller (default 1).
struct ReferenceConstants {
  double kmm_min_length = 0.0;   // hbar sqrt(beta)
  double pp_min_length = 0.0;    // (3 sqrt(3)/4) hbar sqrt(beta)
  double this_min_length = 0.0;  // same scale as pp_min_length
  double adv_alpha = 1.0;
  double adv_min_length = 0.0;   // hbar alpha
  double adv_max_momentum = 0.0; // 1/alpha
  // Kinetic energy of each family's maximal-localization state in units of
  // 1/(12 m beta).
  static constexpr double kKineticRatioKmm = 6.0;
  static constexpr double kKineticRatioPp = 0.8814;
  static constexpr double kKineticRatioWh = 0.7176;
  static constexpr double kKineticRatioThis = 1.0;
};

ReferenceConstants make_reference_constants(const ModelParameters& params, double adv_alpha = 1.0);

struct ComparisonRow {
  const char* model;
  double kinetic_ratio;     // in units of 1/(12 m beta)
  double kinetic_value;     // ratio / (12 m beta)
  bool measured;            // true when computed by quadrature here
};

// Kinetic-energy comparison across families.  Literature rows carry their
// quoted ratios; the rows for this model are measured by quadrature (lower
// symbol ~1, deformed symbol ~2).
std::vector<ComparisonRow> comparison_report(const ModelParameters& params,
                                             std::size_t grid_n = 1024);

}  // namespace guplab
