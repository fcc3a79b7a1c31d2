#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "guplab/operators.hpp"
#include "guplab/oracle.hpp"
#include "guplab/oscillator.hpp"

using namespace guplab;

namespace {

ModelParameters with_g(double g) {
  ModelParameters params;
  params.beta = g;  // natural units hbar = m = omega = 1
  return params;
}

}  // namespace

TEST_CASE("envelope exponent closed form and indicial relation") {
  CHECK(alpha_exponent(with_g(1.0)).alpha ==
        doctest::Approx(0.25 + std::sqrt(5.0) / 4.0).epsilon(1e-15));
  CHECK(alpha_exponent(with_g(2.0)).alpha ==
        doctest::Approx(0.25 + std::sqrt(8.0) / 8.0).epsilon(1e-15));
  // large-coupling asymptote 1/2
  CHECK(alpha_exponent(with_g(1e8)).alpha == doctest::Approx(0.5).epsilon(1e-7));

  for (double g : {0.5, 1.0, 2.0, 7.0}) {
    const double a = alpha_exponent(with_g(g)).alpha;
    CHECK(std::abs(a * a - a / 2.0 - 1.0 / (4.0 * g * g)) < 1e-15);
    CHECK(a > 0.5);
  }
}

TEST_CASE("closed-form energies of the lowest levels") {
  CHECK(energy_level(with_g(1.0), 0).energy ==
        doctest::Approx(0.25 + std::sqrt(5.0) / 4.0).epsilon(1e-15));
  CHECK(energy_level(with_g(1.0), 1).energy ==
        doctest::Approx(1.25 + 3.0 * std::sqrt(5.0) / 4.0).epsilon(1e-15));
  CHECK(energy_level(with_g(0.1), 1).energy ==
        doctest::Approx(1.5 * std::sqrt(1.0025) + 0.125).epsilon(1e-15));
}

TEST_CASE("termination identity links energy and exponent") {
  for (double g : {0.5, 1.0, 2.0}) {
    const ModelParameters params = with_g(g);
    const double a = alpha_exponent(params).alpha;
    for (int n = 0; n <= 8; ++n) {
      const double e = energy_level(params, n).energy;
      const double lhs = (2.0 * params.beta * params.mass * e + 1.0) / (g * g);
      const double t = n + 2.0 * a;
      CHECK(lhs == doctest::Approx(t * t).epsilon(1e-12));
    }
  }
}

TEST_CASE("spectrum grows monotonically and super-linearly") {
  const ModelParameters params = with_g(0.1);
  double prev_gap = 0.0;
  for (int n = 0; n < 10; ++n) {
    const double gap = energy_level(params, n + 1).energy - energy_level(params, n).energy;
    CHECK(gap > prev_gap);
    prev_gap = gap;
  }
  // and the energy of a fixed level grows with the deformation
  for (int n : {0, 3, 7}) {
    CHECK(energy_level(with_g(0.5), n).energy < energy_level(with_g(1.0), n).energy);
    CHECK(energy_level(with_g(1.0), n).energy < energy_level(with_g(2.0), n).energy);
  }
}

TEST_CASE("classical limit is linear in the deformation with a bounded slope") {
  for (double beta : {1e-4, 1e-5, 1e-6}) {
    const ModelParameters params = with_g(beta);
    for (int n = 0; n <= 10; ++n) {
      const double drift =
          std::abs(energy_level(params, n).energy - energy_classical_limit(params, n));
      CHECK(drift <= 56.0 * beta);
    }
  }
  ModelParameters zero;
  zero.beta = 0.0;
  CHECK(energy_classical_limit(zero, 0) == doctest::Approx(0.5));
  CHECK(energy_classical_limit(zero, 7) == doctest::Approx(7.5));
  CHECK(std::abs(energy_level(with_g(1e-8), 2).energy - 2.5) < 1e-6);
}

TEST_CASE("single Bethe root sits at one half for every coupling") {
  for (double g : {0.5, 1.0, 2.0, 5.0}) {
    const BetheRootSet set = bethe_solve(with_g(g), 1);
    REQUIRE(set.converged);
    REQUIRE(set.roots.size() == 1);
    CHECK(std::abs(set.roots[0] - 0.5) < 1e-14);

    // The root is forced by the numerator alone: 1 + 4a - (2 + 8a) t = 0 at
    // t = 1/2 independently of which quadratic denominator multiplies it.
    const double a = alpha_exponent(with_g(g)).alpha;
    CHECK(std::abs(1.0 + 4.0 * a - (2.0 + 8.0 * a) * 0.5) < 1e-15);
  }
}

TEST_CASE("two-root set matches its closed form") {
  const ModelParameters params = with_g(1.0);
  const double a = alpha_exponent(params).alpha;
  const double d = 0.5 / std::sqrt(4.0 * a + 2.0);
  const BetheRootSet set = bethe_solve(params, 2);
  REQUIRE(set.converged);
  CHECK(set.roots[0] == doctest::Approx(0.5 - d).epsilon(1e-13));
  CHECK(set.roots[1] == doctest::Approx(0.5 + d).epsilon(1e-13));
}

TEST_CASE("Newton roots agree with the polynomial oracle") {
  for (double g : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 6; ++n) {
      const BetheRootSet newton = bethe_solve(with_g(g), n);
      const BetheRootSet oracle = polynomial_oracle_roots(with_g(g), n);
      REQUIRE(newton.converged);
      REQUIRE(oracle.converged);
      REQUIRE(newton.roots.size() == static_cast<std::size_t>(n));
      REQUIRE(oracle.roots.size() == static_cast<std::size_t>(n));
      CHECK(newton.max_residual() < 1e-12);
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(newton.roots[i] - oracle.roots[i]) < 1e-10);
        // symmetric about 1/2
        CHECK(std::abs(newton.roots[i] + newton.roots[n - 1 - i] - 1.0) < 1e-12);
        CHECK(newton.roots[i] > 0.0);
        CHECK(newton.roots[i] < 1.0);
        if (i) CHECK(newton.roots[i] > newton.roots[i - 1]);
      }
    }
  }
}

TEST_CASE("root sets of consecutive degree interlace") {
  const ModelParameters params = with_g(1.0);
  const BetheRootSet five = bethe_solve(params, 5);
  const BetheRootSet six = bethe_solve(params, 6);
  for (int i = 0; i < 5; ++i) {
    CHECK(six.roots[i] < five.roots[i]);
    CHECK(five.roots[i] < six.roots[i + 1]);
  }
}

TEST_CASE("eigenfunctions are orthonormal under the weighted measure") {
  const ModelParameters params = with_g(1.0);
  const ChebyshevGrid grid = build_grid(params, 2048);
  std::vector<AnalyticState> psi;
  for (int n = 0; n <= 5; ++n) psi.push_back(oscillator_wavefunction(params, n));
  for (int a = 0; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      const double want = a == b ? 1.0 : 0.0;
      CHECK(std::abs(inner_product(psi[a], psi[b], grid).real() - want) < 1e-8);
      CHECK(std::abs(inner_product(psi[a], psi[b], grid).imag()) < 1e-14);
    }
}

TEST_CASE("eigenfunctions alternate parity") {
  const ModelParameters params = with_g(0.5);
  for (int n = 0; n <= 5; ++n) {
    const AnalyticState psi = oscillator_wavefunction(params, n);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    for (double p : {0.3, 0.77, 1.1}) {
      const Complex left = psi.value(-p), right = psi.value(p);
      CHECK(std::abs(left - sign * right) < 1e-12 * std::max(1.0, std::abs(right)));
    }
  }
}

TEST_CASE("sign convention puts the first nonvanishing derivative positive") {
  const ModelParameters params = with_g(1.0);
  CHECK(oscillator_wavefunction(params, 0).value(0.0).real() > 0.0);
  CHECK(oscillator_wavefunction(params, 2).value(0.0).real() > 0.0);
  const AnalyticState odd = oscillator_wavefunction(params, 1);
  CHECK(std::abs(odd.value(0.0)) < 1e-14);
  CHECK(odd.at(0.0).d1.real() > 0.0);
}

TEST_CASE("supplying the roots skips the solve but changes nothing") {
  const ModelParameters params = with_g(1.0);
  const BetheRootSet set = bethe_solve(params, 3);
  const AnalyticState direct = oscillator_wavefunction(params, 3);
  const AnalyticState seeded = oscillator_wavefunction(params, 3, &set.roots);
  for (double p : {-0.6, 0.1, 0.9})
    CHECK(std::abs(direct.value(p) - seeded.value(p)) < 1e-14);
}

TEST_CASE("eigenfunctions match the grid oracle's eigenvectors") {
  const ModelParameters params = with_g(1.0);
  const ThetaProblem problem = build_theta_problem(params, 1024);
  const OracleSpectrum spectrum = solve_spectrum(problem, 2, true);
  for (int n : {0, 1}) {
    const AnalyticState psi = oscillator_wavefunction(params, n);
    CHECK(compare_eigenvector(problem, spectrum.eigenvectors[n], psi) < 1e-4);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(energy_level(with_g(1.0), -1), std::invalid_argument);
  CHECK_THROWS_AS(bethe_solve(with_g(1.0), 0), std::invalid_argument);
  ModelParameters zero;
  zero.beta = 0.0;
  CHECK_THROWS_AS(energy_level(zero, 0), std::invalid_argument);
  const BetheRootSet set = bethe_solve(with_g(1.0), 2);
  CHECK_THROWS_AS(oscillator_wavefunction(with_g(1.0), 3, &set.roots), std::invalid_argument);
}
