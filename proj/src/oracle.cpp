#include "guplab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace guplab {

double ThetaProblem::norm_bound() const {
  double bound = 0.0;
  for (double d : diag) bound = std::max(bound, std::abs(d) + 2.0 * std::abs(offdiag));
  return bound;
}

namespace {

// Direct momentum-space action of the Hamiltonian on a jet state:
//   (H psi)(p) = -(m w^2 hbar^2 / 2) [ (1 - beta p^2) psi'' - beta p psi' ]
//                + p^2 / (2 m (1 - beta p^2)) psi.
Complex hamiltonian_momentum_form(const ModelParameters& pp, const Jet& j, double p) {
  const double d = 1.0 - pp.beta * p * p;
  const double kin = pp.mass * pp.omega * pp.omega * pp.hbar * pp.hbar / 2.0;
  return -kin * (d * j.d2 - pp.beta * p * j.d1) + p * p / (2.0 * pp.mass * d) * j.f;
}

// Same action computed through the theta chain rule, as the discrete builder
// sees it: with p = sin(theta)/sqrt(beta),
//   d^2 psi/dtheta^2 = (1-beta p^2)/beta psi'' - p psi' ... (in p-derivatives)
Complex hamiltonian_theta_form(const ModelParameters& pp, const Jet& j, double p) {
  const double beta = pp.beta;
  const double d = 1.0 - beta * p * p;
  // dp/dtheta = cos(theta)/sqrt(beta), d2p/dtheta2 = -sin(theta)/beta * sqrt(beta) ... = -p
  const double dp_dth = std::sqrt(d / beta);
  const Complex psi_thth = j.d2 * dp_dth * dp_dth + j.d1 * (-p);
  const double c = pp.mass * pp.omega * pp.omega * pp.hbar * pp.hbar * beta / 2.0;
  const double pot = p * p / (2.0 * pp.mass * d);  // tan^2(theta)/(2 m beta)
  return -c * psi_thth + pot * j.f;
}

}  // namespace

ThetaProblem build_theta_problem(const ModelParameters& params, std::size_t m) {
  params.require_deformed();
  if (m < 64) throw std::invalid_argument("build_theta_problem: insufficient grid (need M >= 64)");

  ThetaProblem prob;
  prob.params = params;
  prob.m = m;
  prob.h = std::numbers::pi / static_cast<double>(m + 1);
  prob.nodes.resize(m);
  prob.diag.resize(m);
  const double c =
      params.mass * params.omega * params.omega * params.hbar * params.hbar * params.beta / 2.0;
  prob.offdiag = -c / (prob.h * prob.h);
  for (std::size_t j = 0; j < m; ++j) {
    const double th = -0.5 * std::numbers::pi + static_cast<double>(j + 1) * prob.h;
    prob.nodes[j] = th;
    const double tn = std::tan(th);
    prob.diag[j] = 2.0 * c / (prob.h * prob.h) + tn * tn / (2.0 * params.mass * params.beta);
  }

  // Transform fidelity probe: both Hamiltonian readings must agree on a
  // smooth state at interior points.
  const AnalyticState probe = envelope_polynomial_state(params, 1, {1.0, Complex{0.2, 0.1}});
  const double pm = params.p_max();
  for (double frac : {-0.6, -0.2, 0.1, 0.5, 0.8}) {
    const double p = frac * pm;
    const Jet j = probe.at(p);
    const Complex a = hamiltonian_momentum_form(params, j, p);
    const Complex b = hamiltonian_theta_form(params, j, p);
    const double scale = std::max(std::abs(a), 1.0);
    if (std::abs(a - b) > 1e-10 * scale)
      throw std::logic_error("build_theta_problem: transform self-test failed");
  }
  return prob;
}

namespace {

// Number of eigenvalues of the tridiagonal problem strictly below x.
std::size_t sturm_count(const ThetaProblem& prob, double x) {
  const double b2 = prob.offdiag * prob.offdiag;
  const double tiny = 1e-300;
  std::size_t count = 0;
  double d = prob.diag[0] - x;
  if (d == 0.0) d = -tiny;
  if (d < 0.0) ++count;
  for (std::size_t j = 1; j < prob.m; ++j) {
    d = prob.diag[j] - x - b2 / d;
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

double bisect_eigenvalue(const ThetaProblem& prob, std::size_t index, double lo_hint) {
  // Find an upper bound with count > index by doubling.
  double lo = lo_hint;
  double hi = std::max(1.0, std::abs(lo_hint) * 2.0);
  while (sturm_count(prob, hi) <= index) {
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("solve_spectrum: eigenvalue bracket overflow");
  }
  while (sturm_count(prob, lo) > index) {
    lo = lo > 0.0 ? -1.0 : lo * 2.0;
    if (lo < -1e300) throw std::runtime_error("solve_spectrum: eigenvalue bracket underflow");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count(prob, mid) > index) hi = mid;
    else lo = mid;
    if (hi - lo < 1e-14 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

// One tridiagonal solve (T - s) x = b, Gaussian elimination with partial
// pivoting between adjacent rows (the classic dgttrf/dgttrs scheme with one
// fill-in superdiagonal).  b enters and x leaves through the same vector.
void shifted_tridiag_solve(const ThetaProblem& prob, double s, std::vector<double>& x) {
  const std::size_t m = prob.m;
  std::vector<double> d(m), du(m > 1 ? m - 1 : 0, prob.offdiag), du2(m > 2 ? m - 2 : 0, 0.0);
  for (std::size_t j = 0; j < m; ++j) d[j] = prob.diag[j] - s;
  std::vector<double>& b = x;

  for (std::size_t i = 0; i + 1 < m; ++i) {
    double dl = prob.offdiag;  // subdiagonal entry of row i+1, untouched so far
    if (std::abs(d[i]) >= std::abs(dl)) {
      if (d[i] == 0.0) d[i] = 1e-300;
      const double fact = dl / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
    } else {
      const double fact = d[i] / dl;
      d[i] = dl;
      const double tmp = d[i + 1];
      d[i + 1] = du[i] - fact * tmp;
      du[i] = tmp;
      if (i + 2 < m) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      std::swap(b[i], b[i + 1]);
      b[i + 1] -= fact * b[i];
    }
  }
  if (d[m - 1] == 0.0) d[m - 1] = 1e-300;

  x[m - 1] = b[m - 1] / d[m - 1];
  if (m >= 2) x[m - 2] = (b[m - 2] - du[m - 2] * x[m - 1]) / d[m - 2];
  for (std::size_t idx = m - 1; idx-- > 1;) {
    const std::size_t i = idx - 1;
    x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
  }
}

}  // namespace

OracleSpectrum solve_spectrum(const ThetaProblem& problem, std::size_t k, bool want_vectors) {
  if (problem.m == 0) throw std::invalid_argument("solve_spectrum: empty problem");
  if (k == 0) throw std::invalid_argument("solve_spectrum: need k >= 1");
  if (k > problem.m / 10)
    throw std::invalid_argument("solve_spectrum: requested too many levels for this grid");

  OracleSpectrum spec;
  spec.m = problem.m;
  spec.h = problem.h;
  spec.eigenvalues.resize(k);

  double lo = problem.diag[0];
  for (double dj : problem.diag) lo = std::min(lo, dj);
  lo -= 2.0 * std::abs(problem.offdiag) + 1.0;

  for (std::size_t i = 0; i < k; ++i)
    spec.eigenvalues[i] = bisect_eigenvalue(problem, i, lo);
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());

  if (!want_vectors) return spec;

  spec.eigenvectors.assign(k, std::vector<double>(problem.m));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double>& v = spec.eigenvectors[i];
    // Deterministic start with a sign pattern matching level i's node count.
    for (std::size_t j = 0; j < problem.m; ++j)
      v[j] = std::sin(static_cast<double>(i + 1) * std::numbers::pi *
                      static_cast<double>(j + 1) / static_cast<double>(problem.m + 1));
    // Slightly detuned shift keeps the solve well-posed at machine precision.
    const double shift = spec.eigenvalues[i] * (1.0 + 1e-13) + 1e-13;
    for (int sweep = 0; sweep < 3; ++sweep) {
      shifted_tridiag_solve(problem, shift, v);
      double nrm = 0.0;
      for (double x : v) nrm += x * x;
      nrm = std::sqrt(nrm);
      if (!(nrm > 0.0)) throw std::runtime_error("solve_spectrum: inverse iteration collapsed");
      for (double& x : v) x /= nrm;
    }
    // Flat-theta normalization and sign fix.
    double nrm = 0.0, peak = 0.0;
    std::size_t peak_idx = 0;
    for (std::size_t j = 0; j < problem.m; ++j) {
      nrm += v[j] * v[j];
      if (std::abs(v[j]) > peak) {
        peak = std::abs(v[j]);
        peak_idx = j;
      }
    }
    nrm = std::sqrt(nrm * problem.h);
    const double sgn = v[peak_idx] >= 0.0 ? 1.0 : -1.0;
    for (double& x : v) x *= sgn / nrm;
  }
  return spec;
}

std::vector<RichardsonLevel> richardson_extrapolate(const OracleSpectrum& coarse,
                                                    const OracleSpectrum& fine) {
  if (coarse.eigenvalues.size() != fine.eigenvalues.size())
    throw std::invalid_argument("richardson_extrapolate: level counts differ");
  if (!(fine.h < coarse.h))
    throw std::invalid_argument("richardson_extrapolate: grids are not ordered coarse to fine");

  const double r = coarse.h / fine.h;
  const double r2 = r * r;
  std::vector<RichardsonLevel> out(coarse.eigenvalues.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double ec = coarse.eigenvalues[i], ef = fine.eigenvalues[i];
    out[i].coarse = ec;
    out[i].fine = ef;
    out[i].extrapolated = ef + (ef - ec) / (r2 - 1.0);
    out[i].error_estimate = std::abs(ef - ec) / 3.0;
  }
  return out;
}

std::vector<double> extrapolate_three(const OracleSpectrum& s1, const OracleSpectrum& s2,
                                      const OracleSpectrum& s3) {
  const std::size_t k = s1.eigenvalues.size();
  if (s2.eigenvalues.size() != k || s3.eigenvalues.size() != k)
    throw std::invalid_argument("extrapolate_three: level counts differ");
  const double h2[3] = {s1.h * s1.h, s2.h * s2.h, s3.h * s3.h};
  if (!(h2[0] > h2[1] && h2[1] > h2[2]))
    throw std::invalid_argument("extrapolate_three: grids must be strictly refining");

  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    double q[3] = {s1.eigenvalues[i], s2.eigenvalues[i], s3.eigenvalues[i]};
    for (int sweep = 1; sweep < 3; ++sweep)
      for (int j = 0; j < 3 - sweep; ++j) {
        const double r = h2[j] / h2[j + sweep];
        q[j] = q[j + 1] + (q[j + 1] - q[j]) / (r - 1.0);
      }
    out[i] = q[0];
  }
  return out;
}

double compare_eigenvector(const ThetaProblem& problem, const std::vector<double>& vec,
                           const AnalyticState& state) {
  if (vec.size() != problem.m)
    throw std::invalid_argument("compare_eigenvector: vector does not match the grid");
  const double sb = std::sqrt(problem.params.beta);

  std::vector<double> w(problem.m);
  double nrm = 0.0;
  for (std::size_t j = 0; j < problem.m; ++j) {
    const double p = std::sin(problem.nodes[j]) / sb;
    w[j] = std::real(state.eval(p).f);
    nrm += w[j] * w[j];
  }
  nrm = std::sqrt(nrm * problem.h);
  if (!(nrm > 0.0)) throw std::invalid_argument("compare_eigenvector: zero transplant");

  double dot = 0.0;
  for (std::size_t j = 0; j < problem.m; ++j) dot += vec[j] * w[j] / nrm;
  const double sgn = dot >= 0.0 ? 1.0 : -1.0;

  double dist2 = 0.0;
  for (std::size_t j = 0; j < problem.m; ++j) {
    const double diff = vec[j] - sgn * w[j] / nrm;
    dist2 += diff * diff;
  }
  return std::sqrt(dist2 * problem.h);
}

}  // namespace guplab
