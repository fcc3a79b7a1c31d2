#pragma once

#include <array>
#include <vector>

#include "guplab/state.hpp"

namespace guplab {

// Uniform Dirichlet discretization of the oscillator Hamiltonian in the
// compactified variable theta = arcsin(sqrt(beta) p):
//   H = -(m omega^2 hbar^2 beta / 2) d^2/dtheta^2 + tan^2(theta) / (2 m beta)
// on (-pi/2, pi/2), M interior nodes theta_j = -pi/2 + j h, h = pi/(M+1),
// ghost values clamped to zero at both ends.  Real symmetric tridiagonal with
// constant off-diagonal.
struct ThetaProblem {
  ModelParameters params;
  std::size_t m = 0;
  double h = 0.0;
  std::vector<double> nodes;
  std::vector<double> diag;
  double offdiag = 0.0;

  // Largest Gershgorin bound, used as the norm scale in residual contracts.
  double norm_bound() const;
};

// Builds the problem and runs a transform self-test: the Hamiltonian applied
// to a smooth probe through the theta chain rule must match the direct
// momentum-space form to 1e-10 at interior probe points.
ThetaProblem build_theta_problem(const ModelParameters& params, std::size_t m);

struct OracleSpectrum {
  std::size_t m = 0;
  double h = 0.0;
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // flat-theta normalized, sign-fixed
};

// k lowest eigenpairs by Sturm-sequence bisection and tridiagonal inverse
// iteration.  Requires k <= M/10.  Eigenvectors are normalized so that
// h * sum v_j^2 = 1 and the largest-magnitude component is positive.
OracleSpectrum solve_spectrum(const ThetaProblem& problem, std::size_t k,
                              bool want_vectors = true);

struct RichardsonLevel {
  double coarse = 0.0;
  double fine = 0.0;
  double extrapolated = 0.0;
  double error_estimate = 0.0;  // |fine - coarse| / 3
};

// Eliminates the h^2 error of a grid pair (M, 2M+1-style refinement) using
// the exact step ratio r = h_coarse/h_fine; the reported error estimate keeps
// the conventional |difference|/3 form.
std::vector<RichardsonLevel> richardson_extrapolate(const OracleSpectrum& coarse,
                                                    const OracleSpectrum& fine);

// Three-grid extrapolation eliminating both h^2 and h^4; used where the
// boundary layer forces very fine grids (deep classical regime).
std::vector<double> extrapolate_three(const OracleSpectrum& s1, const OracleSpectrum& s2,
                                      const OracleSpectrum& s3);

// L2 distance (flat-theta, discrete) between an oracle eigenvector and an
// analytic state transplanted to the theta nodes, after normalizing the
// transplant and aligning the global sign.
double compare_eigenvector(const ThetaProblem& problem, const std::vector<double>& vec,
                           const AnalyticState& state);

}  // namespace guplab
