#pragma once

#include <vector>

#include "guplab/state.hpp"

namespace guplab {

// Deformed momentum operator: multiplication by p / sqrt(1 - beta p^2).
// Preserves the trusted jet order.
AnalyticState apply_P(const AnalyticState& state);

// Deformed position operator: i hbar sqrt(1 - beta p^2) d/dp.
// Consumes one trusted derivative; requires order >= 1.
AnalyticState apply_X(const AnalyticState& state);

// Pointwise residual of [X,P]psi = i hbar / (1 - beta p^2) psi at the probe
// points, relative to the local magnitude of the right-hand side (absolute
// where psi vanishes).  Requires order >= 2.
std::vector<double> commutator_residual(const AnalyticState& state,
                                        const std::vector<double>& probes);
double max_commutator_residual(const AnalyticState& state, const std::vector<double>& probes);

// Weighted-measure inner product, conjugate-linear in the first argument.
Complex inner_product(const SampledState& a, const SampledState& b);
Complex inner_product(const AnalyticState& a, const AnalyticState& b, const ChebyshevGrid& grid);

double norm(const AnalyticState& a, const ChebyshevGrid& grid);

// |<Xa|b> - <a|Xb>| on the given grid.  Vanishes (up to quadrature error)
// whenever the boundary term a* b at the interval ends cancels; for states
// that are finite at the boundary the defect reproduces that boundary term,
// X being symmetric but not self-adjoint on this domain.
double symmetry_defect_X(const AnalyticState& a, const AnalyticState& b,
                         const ChebyshevGrid& grid);
double symmetry_defect_P(const AnalyticState& a, const AnalyticState& b,
                         const ChebyshevGrid& grid);

// H = P^2/(2m) + m omega^2 X^2 / 2 assembled from the deformed operators.
// Requires order >= 2 and consumes two trusted derivative orders.
AnalyticState apply_oscillator_hamiltonian(const AnalyticState& state);

struct ExpectationReport {
  double norm = 0.0;          // quadrature norm of the input (report is norm-independent)
  double mean_X = 0.0;
  double mean_P = 0.0;
  double var_X = 0.0;
  double var_P = 0.0;
  double mean_p2_lower = 0.0;     // <p^2> of the undeformed symbol p
  double mean_P2_deformed = 0.0;  // <P^2> with the full deformed symbol
  double robertson_rhs = 0.0;     // |<[X,P]>|/2, computed operationally
  // True when the deformed kinetic moments fail the grid-doubling convergence
  // probe (boundary non-integrable); var_P, mean_P2_deformed and
  // robertson_rhs are then NaN and the uncertainty product is not asserted.
  bool deformed_moments_divergent = false;
};

// All first and second moments of X and P in one pass over the grid, plus the
// operational Robertson bound.  Variances are computed as squared norms of
// (A - <A>)psi and are non-negative by construction.  Throws on zero-norm
// input or insufficient jet order (needs order >= 1).
ExpectationReport expectation_report(const AnalyticState& state, const ChebyshevGrid& grid);

}  // namespace guplab
