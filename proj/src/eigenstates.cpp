#include "guplab/eigenstates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace guplab {

namespace {

// exp(c * arcsin(sqrt(beta) p)) as a jet, c complex.
AnalyticState arcsin_phase_state(const ModelParameters& params, Complex c, double amplitude) {
  params.require_deformed();
  AnalyticState s;
  s.order = 3;
  s.params = params;
  s.eval = [c, amplitude, sb = std::sqrt(params.beta)](double p) {
    return amplitude * jet_exp(c * jet_arcsin_scaled(p, sb));
  };
  return s;
}

}  // namespace

PositionEigenstate position_eigenstate(const ModelParameters& params, double lambda) {
  params.require_deformed();
  const double sb = std::sqrt(params.beta);
  const double amplitude = std::sqrt(sb / std::numbers::pi);
  const Complex c{0.0, -lambda / (params.hbar * sb)};
  return {lambda, arcsin_phase_state(params, c, amplitude)};
}

double overlap_closed_form(const ModelParameters& params, double lambda, double lambda_prime) {
  params.require_deformed();
  const double u =
      (lambda - lambda_prime) * std::numbers::pi / (2.0 * params.hbar * std::sqrt(params.beta));
  if (std::abs(u) < 1e-8) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double overlap_quadrature(const ModelParameters& params, double lambda, double lambda_prime,
                          std::size_t base_n) {
  params.require_deformed();
  if (base_n < 8) throw std::invalid_argument("overlap_quadrature: base grid too small");

  const PositionEigenstate a = position_eigenstate(params, lambda);
  const PositionEigenstate b = position_eigenstate(params, lambda_prime);

  double q[3], h2[3];
  for (int level = 0; level < 3; ++level) {
    const std::size_t n = base_n << level;
    const ChebyshevGrid grid = build_grid(params, n);
    q[level] = std::real(inner_product(a.state, b.state, grid));
    const double h = std::numbers::pi / static_cast<double>(n);
    h2[level] = h * h;
  }
  // Two Richardson sweeps on the h^2 expansion (Neville with exact ratios).
  for (int sweep = 1; sweep < 3; ++sweep)
    for (int i = 0; i < 3 - sweep; ++i) {
      const double r = h2[i] / h2[i + sweep];
      q[i] = q[i + 1] + (q[i + 1] - q[i]) / (r - 1.0);
    }
  return q[0];
}

std::vector<std::vector<double>> lattice_overlap_matrix(const ModelParameters& params,
                                                        int n_half, double offset) {
  params.require_deformed();
  if (n_half < 0) throw std::invalid_argument("lattice_overlap_matrix: negative range");
  if (!(offset >= -1.0 && offset <= 1.0))
    throw std::invalid_argument("lattice_overlap_matrix: offset outside [-1, 1]");

  const double step = params.min_length();
  const int dim = 2 * n_half + 1;
  std::vector<std::vector<double>> m(dim, std::vector<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double li = (2.0 * (i - n_half) + offset) * step;
      const double lj = (2.0 * (j - n_half) + offset) * step;
      m[i][j] = overlap_closed_form(params, li, lj);
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(m[i][j] - expected) > 1e-12)
        throw std::logic_error("lattice_overlap_matrix: lattice failed the identity check");
    }
  return m;
}

AnalyticState squeezed_state(const ModelParameters& params, const SqueezedStateParams& sq) {
  params.require_deformed();
  if (!(sq.dp2 > 0.0))
    throw std::invalid_argument("squeezed_state: momentum variance must be positive");
  const double beta = params.beta;
  const double kappa = 1.0 + beta * sq.dp2 + beta * sq.mean_p * sq.mean_p;
  const double env_power = kappa / (4.0 * beta * sq.dp2);
  if (!(env_power > 0.0))
    throw std::invalid_argument("squeezed_state: non-integrable envelope exponent");

  const double sb = std::sqrt(beta);
  // Phase/stretch profile in theta = arcsin(sqrt(beta) p): an imaginary part
  // translates the state to <x> = mean_x, a real part shifts <p>.
  const Complex c{kappa * sq.mean_p / (2.0 * sq.dp2 * sb), -sq.mean_x / (params.hbar * sb)};

  AnalyticState s;
  s.order = 3;
  s.params = params;
  s.eval = [c, env_power, beta, sb](double p) {
    return jet_pow(jet_envelope(p, beta), env_power) * jet_exp(c * jet_arcsin_scaled(p, sb));
  };

  // Quadrature normalization.
  const ChebyshevGrid grid = build_grid(params, defaults::kExpectationGridSize * 4);
  const double nrm = norm(s, grid);
  if (!(nrm > 0.0)) throw std::runtime_error("squeezed_state: normalization failed");
  AnalyticState scaled = s;
  scaled.eval = [inner = s.eval, inv = 1.0 / nrm](double p) { return inv * inner(p); };
  return scaled;
}

MaxLocalizationState max_localization_state(const ModelParameters& params, double xi) {
  params.require_deformed();
  const double beta = params.beta;
  const double sb = std::sqrt(beta);
  const double amplitude = std::sqrt(8.0 * sb / (3.0 * std::numbers::pi));
  const Complex c{0.0, -xi / (params.hbar * sb)};

  AnalyticState s;
  s.order = 3;
  s.params = params;
  s.eval = [c, amplitude, beta, sb](double p) {
    return amplitude * (jet_envelope(p, beta) * jet_exp(c * jet_arcsin_scaled(p, sb)));
  };
  return {xi, s};
}

MlUncertaintyProfile ml_uncertainty_profile(const ModelParameters& params, double xi,
                                            std::size_t grid_n) {
  const MaxLocalizationState ml = max_localization_state(params, xi);
  const ChebyshevGrid grid = build_grid(params, grid_n);
  const ExpectationReport rep = expectation_report(ml.state, grid);

  MlUncertaintyProfile prof;
  prof.norm = rep.norm;
  prof.mean_X = rep.mean_X;
  prof.delta_X = std::sqrt(rep.var_X);
  prof.min_length_reference = 0.75 * std::sqrt(3.0) * params.min_length();
  const double inv2m = 1.0 / (2.0 * params.mass);
  prof.kinetic_lower = rep.mean_p2_lower * inv2m;
  prof.kinetic_deformed = rep.mean_P2_deformed * inv2m;
  prof.robertson_lhs = std::sqrt(rep.var_X) * std::sqrt(rep.var_P);
  prof.robertson_rhs = rep.robertson_rhs;
  return prof;
}

ReferenceConstants make_reference_constants(const ModelParameters& params, double adv_alpha) {
  params.require_deformed();
  if (!(adv_alpha > 0.0))
    throw std::invalid_argument("make_reference_constants: alpha must be positive");
  ReferenceConstants rc;
  rc.kmm_min_length = params.min_length();
  rc.pp_min_length = 0.75 * std::sqrt(3.0) * params.min_length();
  rc.this_min_length = rc.pp_min_length;
  rc.adv_alpha = adv_alpha;
  rc.adv_min_length = params.hbar * adv_alpha;
  rc.adv_max_momentum = 1.0 / adv_alpha;
  return rc;
}

std::vector<ComparisonRow> comparison_report(const ModelParameters& params, std::size_t grid_n) {
  const double unit = 1.0 / (12.0 * params.mass * params.beta);
  const MlUncertaintyProfile prof = ml_uncertainty_profile(params, 0.0, grid_n);

  std::vector<ComparisonRow> rows;
  rows.push_back({"KMM", ReferenceConstants::kKineticRatioKmm,
                  ReferenceConstants::kKineticRatioKmm * unit, false});
  rows.push_back({"PP", ReferenceConstants::kKineticRatioPp,
                  ReferenceConstants::kKineticRatioPp * unit, false});
  rows.push_back({"WH", ReferenceConstants::kKineticRatioWh,
                  ReferenceConstants::kKineticRatioWh * unit, false});
  rows.push_back({"this-lower", prof.kinetic_lower / unit, prof.kinetic_lower, true});
  rows.push_back({"this-deformed", prof.kinetic_deformed / unit, prof.kinetic_deformed, true});
  return rows;
}

}  // namespace guplab
