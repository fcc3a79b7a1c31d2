#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "guplab/grid.hpp"
#include "guplab/jet.hpp"
#include "guplab/model.hpp"

namespace guplab {

// Momentum-space wavefunction given by an exact jet evaluator.  `order` is
// the number of trusted derivatives (0..3); each application of X consumes
// one.  Evaluation outside the open momentum interval throws.
struct AnalyticState {
  int order = 3;
  ModelParameters params;
  std::function<Jet(double)> eval;

  Jet at(double p) const;
  Complex value(double p) const { return at(p).f; }
};

// Wavefunction values cached on a quadrature grid.
struct SampledState {
  ChebyshevGrid grid;
  std::vector<Complex> values;
};

SampledState sample(const AnalyticState& state, const ChebyshevGrid& grid);

// --- building blocks used by tests and state constructors ---

// Polynomial with the given coefficients (c[0] + c[1] p + ...).
AnalyticState polynomial_state(const ModelParameters& params, std::vector<Complex> coeffs);

// (1 - beta p^2)^k * polynomial; vanishes at the interval ends for k >= 1.
AnalyticState envelope_polynomial_state(const ModelParameters& params, int k,
                                        std::vector<Complex> coeffs);

AnalyticState gaussian_state(const ModelParameters& params, double width_scale);

// Pointwise linear combination a*s1 + b*s2 (states must share parameters).
AnalyticState combine(const AnalyticState& s1, const AnalyticState& s2, Complex a, Complex b);

// Max relative mismatch between the jet derivatives d1, d2 and central finite
// differences of the value slot, over the given interior probe points.
// Validation helper for newly written state constructors; not used in any
// operator path.
double validate_jet(const AnalyticState& state, const std::vector<double>& probes);

}  // namespace guplab
