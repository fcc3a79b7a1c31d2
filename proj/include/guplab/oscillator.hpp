#pragma once

#include <vector>

#include "guplab/state.hpp"

namespace guplab {

// Envelope exponent of the oscillator eigenfunctions:
//   alpha = 1/4 + sqrt(g^2 + 4)/(4g),  g = beta m omega hbar.
// alpha solves the indicial relation alpha^2 - alpha/2 - 1/(4 g^2) = 0 and
// exceeds 1/2 for every g > 0.
struct AlphaExponent {
  double alpha = 0.0;
  double g = 0.0;
};

AlphaExponent alpha_exponent(const ModelParameters& params);

struct SpectrumRow {
  int n = 0;
  double energy = 0.0;
};

// Closed-form energy of level n:
//   E_n = (n + 1/2) hbar omega sqrt(1 + g^2/4) + (n^2 + n + 1/2) beta m omega^2 hbar^2 / 2.
// Cross-checked internally against the polynomial termination identity
//   (2 beta m E_n + 1) / g^2 = (n + 2 alpha)^2.
SpectrumRow energy_level(const ModelParameters& params, int n);

// Harmonic reference (n + 1/2) hbar omega; the only entry point that admits
// beta = 0.
double energy_classical_limit(const ModelParameters& params, int n);

struct BetheRootSet {
  int n = 0;
  std::vector<double> roots;      // ascending, inside (0, 1)
  std::vector<double> residuals;  // per-root residual of the coupled equations
  bool converged = false;
  int iterations = 0;

  double max_residual() const;
};

// Roots t_1..t_n of the coupled algebraic system
//   sum_{j != i} 2/(t_i - t_j) + (1 + 4 alpha - (2 + 8 alpha) t_i) / (2 (t_i - t_i^2)) = 0
// by damped Newton iteration with the analytic Jacobian, started from
// Chebyshev-spaced points in (0.1, 0.9).  The single-root denominator is
// 2(t - t^2): the residue of the regular-singular expansion at t = 0 fixes
// the sign of the quadratic term.  Non-convergence is reported through the
// `converged` flag with the last iterate's residuals.
BetheRootSet bethe_solve(const ModelParameters& params, int n);

// Independent root oracle: the same t_i are the roots of the degree-n
// polynomial factor of the eigenfunction, an ultraspherical (Gegenbauer)
// polynomial of order 2*alpha in x = 1 - 2t.  Built from the three-term
// recurrence and bracketed bisection with a Newton polish; no data flows in
// from bethe_solve.  Residuals are evaluated on the coupled system above so
// both producers satisfy the same contract.
BetheRootSet polynomial_oracle_roots(const ModelParameters& params, int n);

// Normalized eigenfunction of level n:
//   psi_n(p) = N (1/4 - beta p^2/4)^alpha prod_i (1/2 - sqrt(beta) p / 2 - t_i),
// with the global sign fixed so that the first nonvanishing of
// {psi_n(0), psi_n'(0)} is positive.  Roots may be supplied to skip the solve.
AnalyticState oscillator_wavefunction(const ModelParameters& params, int n,
                                      const std::vector<double>* roots = nullptr,
                                      std::size_t norm_grid_n = 512);

}  // namespace guplab
