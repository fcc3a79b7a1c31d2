#include "guplab/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace guplab {

Jet AnalyticState::at(double p) const {
  const double pm = params.p_max();
  if (!(std::abs(p) < pm))
    throw std::domain_error("AnalyticState: evaluation outside the open momentum interval");
  return eval(p);
}

SampledState sample(const AnalyticState& state, const ChebyshevGrid& grid) {
  if (grid.params.beta != state.params.beta)
    throw std::invalid_argument("sample: grid and state deformation parameters differ");
  SampledState out;
  out.grid = grid;
  out.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = state.eval(grid.nodes[i]).f;
  return out;
}

AnalyticState polynomial_state(const ModelParameters& params, std::vector<Complex> coeffs) {
  params.require_deformed();
  if (coeffs.empty()) throw std::invalid_argument("polynomial_state: empty coefficient list");
  AnalyticState s;
  s.order = 3;
  s.params = params;
  s.eval = [coeffs = std::move(coeffs)](double p) {
    Jet acc = jet_const(0.0);
    const Jet x = jet_var(p);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + jet_const(*it);
    return acc;
  };
  return s;
}

AnalyticState envelope_polynomial_state(const ModelParameters& params, int k,
                                        std::vector<Complex> coeffs) {
  if (k < 0) throw std::invalid_argument("envelope_polynomial_state: negative envelope power");
  AnalyticState poly = polynomial_state(params, std::move(coeffs));
  AnalyticState s;
  s.order = 3;
  s.params = params;
  s.eval = [poly, k, beta = params.beta](double p) {
    Jet env = jet_const(1.0);
    const Jet base = jet_envelope(p, beta);
    for (int i = 0; i < k; ++i) env = env * base;
    return env * poly.eval(p);
  };
  return s;
}

AnalyticState gaussian_state(const ModelParameters& params, double width_scale) {
  params.require_deformed();
  if (!(width_scale > 0.0)) throw std::invalid_argument("gaussian_state: width must be positive");
  AnalyticState s;
  s.order = 3;
  s.params = params;
  const double a = 1.0 / (2.0 * width_scale * width_scale);
  s.eval = [a](double p) {
    Jet q{{-a * p * p, 0.0}, {-2.0 * a * p, 0.0}, {-2.0 * a, 0.0}, {0.0, 0.0}};
    return jet_exp(q);
  };
  return s;
}

AnalyticState combine(const AnalyticState& s1, const AnalyticState& s2, Complex a, Complex b) {
  if (s1.params.beta != s2.params.beta)
    throw std::invalid_argument("combine: states carry different deformation parameters");
  AnalyticState s;
  s.order = std::min(s1.order, s2.order);
  s.params = s1.params;
  s.eval = [s1, s2, a, b](double p) { return a * s1.eval(p) + b * s2.eval(p); };
  return s;
}

double validate_jet(const AnalyticState& state, const std::vector<double>& probes) {
  const double pm = state.params.p_max();
  double worst = 0.0;
  for (double p : probes) {
    // Step balances second-difference truncation (h^2) against roundoff
    // (eps/h^2); 1e-4 of the half-width keeps both under ~1e-7.
    const double h = 1e-4 * pm;
    if (!(std::abs(p) + 2.0 * h < pm))
      throw std::invalid_argument("validate_jet: probe too close to the interval boundary");
    const Jet c = state.at(p);
    const Complex fp = state.at(p + h).f, fm = state.at(p - h).f;
    const Complex d1 = (fp - fm) / (2.0 * h);
    const Complex d2 = (fp - 2.0 * c.f + fm) / (h * h);
    const double scale1 = std::max(std::abs(c.d1), std::abs(c.f) / pm) + 1e-300;
    const double scale2 = std::max(std::abs(c.d2), std::abs(c.f) / (pm * pm)) + 1e-300;
    worst = std::max(worst, std::abs(d1 - c.d1) / scale1);
    worst = std::max(worst, std::abs(d2 - c.d2) / scale2);
  }
  return worst;
}

}  // namespace guplab
