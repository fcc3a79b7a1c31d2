#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "guplab/operators.hpp"
#include "guplab/oracle.hpp"
#include "guplab/oscillator.hpp"

using namespace guplab;

TEST_CASE("problem construction enforces the minimum grid") {
  ModelParameters params;
  CHECK_THROWS_WITH_AS(build_theta_problem(params, 63),
                       "build_theta_problem: insufficient grid (need M >= 64)",
                       std::invalid_argument);
  const ThetaProblem p = build_theta_problem(params, 64);
  CHECK(p.m == 64);
  CHECK(p.nodes.size() == 64);
  CHECK(p.diag.size() == 64);
  CHECK(p.h == doctest::Approx(3.14159265358979323846 / 65.0).epsilon(1e-15));
  CHECK(p.offdiag < 0.0);
  CHECK(p.norm_bound() > 0.0);
  // interior nodes stay clear of the potential poles
  CHECK(p.nodes.front() == doctest::Approx(-3.14159265358979323846 / 2.0 + p.h).epsilon(1e-13));
  CHECK(std::abs(p.nodes.back()) < 3.14159265358979323846 / 2.0);
}

TEST_CASE("eigenpairs satisfy the residual contract") {
  ModelParameters params;
  params.beta = 0.25;
  const ThetaProblem prob = build_theta_problem(params, 512);
  const OracleSpectrum spec = solve_spectrum(prob, 5, true);
  REQUIRE(spec.eigenvalues.size() == 5);
  REQUIRE(spec.eigenvectors.size() == 5);

  const double bound = 1e-10 * prob.norm_bound();
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& v = spec.eigenvectors[k];
    REQUIRE(v.size() == prob.m);
    double res2 = 0.0, nrm2 = 0.0;
    for (std::size_t j = 0; j < prob.m; ++j) {
      double r = (prob.diag[j] - spec.eigenvalues[k]) * v[j];
      if (j) r += prob.offdiag * v[j - 1];
      if (j + 1 < prob.m) r += prob.offdiag * v[j + 1];
      res2 += r * r;
      nrm2 += v[j] * v[j];
    }
    CHECK(std::sqrt(res2 / nrm2) < bound);
    if (k) CHECK(spec.eigenvalues[k] > spec.eigenvalues[k - 1]);
  }

  // flat-theta orthonormality
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a; b < 5; ++b) {
      double dot = 0.0;
      for (std::size_t j = 0; j < prob.m; ++j)
        dot += spec.eigenvectors[a][j] * spec.eigenvectors[b][j];
      dot *= prob.h;
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("ground state is nodeless and even, first excited odd with one node") {
  ModelParameters params;
  params.beta = 0.1;
  const ThetaProblem prob = build_theta_problem(params, 511);  // odd size, symmetric nodes
  const OracleSpectrum spec = solve_spectrum(prob, 2, true);

  const auto& v0 = spec.eigenvectors[0];
  const auto& v1 = spec.eigenvectors[1];
  int flips0 = 0, flips1 = 0;
  for (std::size_t j = 1; j < prob.m; ++j) {
    if (v0[j] * v0[j - 1] < 0.0 && std::abs(v0[j]) > 1e-8) ++flips0;
    if (v1[j] * v1[j - 1] < 0.0 && std::abs(v1[j]) > 1e-8) ++flips1;
  }
  CHECK(flips0 == 0);
  CHECK(flips1 == 1);
  for (std::size_t j = 0; j < prob.m; ++j) {
    CHECK(std::abs(v0[j] - v0[prob.m - 1 - j]) < 1e-8);
    CHECK(std::abs(v1[j] + v1[prob.m - 1 - j]) < 1e-8);
  }
}

TEST_CASE("small deformation reproduces the harmonic levels") {
  ModelParameters params;
  params.beta = 1e-6;
  const auto coarse = solve_spectrum(build_theta_problem(params, 16384), 3, false);
  const auto fine = solve_spectrum(build_theta_problem(params, 32768), 3, false);
  const auto ext = richardson_extrapolate(coarse, fine);
  for (int n = 0; n < 3; ++n)
    CHECK(std::abs(ext[n].extrapolated - (n + 0.5)) < 1e-4);
}

TEST_CASE("discrete gaps inherit super-linearity") {
  ModelParameters params;
  params.beta = 0.1;
  const auto spec = solve_spectrum(build_theta_problem(params, 1024), 3, false);
  CHECK(spec.eigenvalues[1] - spec.eigenvalues[0] < spec.eigenvalues[2] - spec.eigenvalues[1]);
}

TEST_CASE("pair extrapolation improves on both grids and reports |diff|/3") {
  ModelParameters params;
  params.beta = 0.1;
  const auto coarse = solve_spectrum(build_theta_problem(params, 512), 4, false);
  const auto fine = solve_spectrum(build_theta_problem(params, 1024), 4, false);
  const auto ext = richardson_extrapolate(coarse, fine);
  REQUIRE(ext.size() == 4);
  for (std::size_t n = 0; n < 4; ++n) {
    const double exact = energy_level(params, static_cast<int>(n)).energy;
    CHECK(ext[n].error_estimate ==
          doctest::Approx(std::abs(ext[n].fine - ext[n].coarse) / 3.0).epsilon(1e-12));
    CHECK(std::abs(ext[n].extrapolated - exact) < std::abs(ext[n].fine - exact));
    CHECK(std::abs(ext[n].extrapolated - exact) < 0.1 * std::abs(ext[n].coarse - exact));
  }
}

TEST_CASE("ground eigenvalue rises monotonically toward its limit as the grid doubles") {
  // Measured convergence direction of this discretization: the discrete
  // eigenvalues sit below the continuum value and increase with refinement.
  ModelParameters params;
  params.beta = 0.1;
  const double exact = energy_level(params, 0).energy;
  double prev = -1e300;
  for (std::size_t m : {256u, 512u, 1024u, 2048u}) {
    const double lam = solve_spectrum(build_theta_problem(params, m), 1, false).eigenvalues[0];
    CHECK(lam < exact);
    CHECK(lam > prev);
    prev = lam;
  }
}

TEST_CASE("flat-theta quadrature agrees with the weighted momentum quadrature") {
  // The momentum-space rule is the midpoint rule in theta up to the sqrt(beta)
  // Jacobian; for states vanishing at the interval ends both discretizations
  // integrate the same theta function.
  ModelParameters params;
  params.beta = 0.5;
  const double sb = std::sqrt(params.beta);
  const AnalyticState a = envelope_polynomial_state(params, 2, {{1, 0}, {0.3, 0}});
  const AnalyticState b = envelope_polynomial_state(params, 1, {{0.5, 0}, {0, 0}, {1, 0}});

  const ThetaProblem prob = build_theta_problem(params, 2048);
  double flat = 0.0;
  for (std::size_t j = 0; j < prob.m; ++j) {
    const double p = std::sin(prob.nodes[j]) / sb;
    flat += std::real(std::conj(a.eval(p).f) * b.eval(p).f);
  }
  flat *= prob.h;

  const ChebyshevGrid grid = build_grid(params, 2048);
  const double weighted = inner_product(a, b, grid).real();
  CHECK(std::abs(flat - sb * weighted) < 1e-10);
}

TEST_CASE("transplanting a state onto its own grid vector gives zero distance") {
  ModelParameters params;
  params.beta = 1.0;
  const ThetaProblem prob = build_theta_problem(params, 256);
  const AnalyticState psi = oscillator_wavefunction(params, 0);

  std::vector<double> vec(prob.m);
  double nrm = 0.0;
  for (std::size_t j = 0; j < prob.m; ++j) {
    vec[j] = std::real(psi.eval(std::sin(prob.nodes[j]) / 1.0).f);
    nrm += vec[j] * vec[j];
  }
  nrm = std::sqrt(nrm * prob.h);
  for (auto& x : vec) x /= nrm;
  CHECK(compare_eigenvector(prob, vec, psi) < 1e-13);
}

TEST_CASE("solver guards its preconditions") {
  ModelParameters params;
  const ThetaProblem prob = build_theta_problem(params, 100);
  CHECK_THROWS_AS(solve_spectrum(prob, 11, false), std::invalid_argument);
  CHECK_NOTHROW(solve_spectrum(prob, 10, false));

  const auto s1 = solve_spectrum(build_theta_problem(params, 128), 2, false);
  const auto s2 = solve_spectrum(build_theta_problem(params, 256), 2, false);
  const auto s3 = solve_spectrum(build_theta_problem(params, 512), 2, false);
  CHECK_NOTHROW(extrapolate_three(s1, s2, s3));
  CHECK_THROWS_AS(extrapolate_three(s3, s2, s1), std::invalid_argument);
  CHECK_THROWS_AS(extrapolate_three(s1, s1, s2), std::invalid_argument);
}
