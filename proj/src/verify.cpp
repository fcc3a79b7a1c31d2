#include "guplab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "guplab/eigenstates.hpp"
#include "guplab/operators.hpp"
#include "guplab/oracle.hpp"
#include "guplab/oscillator.hpp"

namespace guplab::verify {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double rel_diff(double value, double reference) {
  const double scale = std::max(std::abs(reference), 1e-300);
  return std::abs(value - reference) / scale;
}

class Runner {
 public:
  explicit Runner(const Options& opts) : opts_(opts) {}

  Report take() && { return std::move(report_); }

  void add(int criterion, std::string label, double value, double reference, double defect,
           double tolerance, std::string provenance) {
    CheckRow row;
    row.criterion = criterion;
    row.label = std::move(label);
    row.value = value;
    row.reference = reference;
    row.defect = defect;
    row.tolerance = tolerance;
    row.pass = defect <= tolerance;
    row.provenance = std::move(provenance);
    report_.rows.push_back(std::move(row));
  }

  void fail(int criterion, std::string label, std::string why) {
    add(criterion, std::move(label), kNaN, kNaN, 1.0, 0.0, std::move(why));
  }

  std::vector<double> betas_with_extras(std::initializer_list<double> pinned) const {
    std::vector<double> out(pinned);
    for (double b : opts_.extra_betas)
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    return out;
  }

  void overlap_suite();
  void commutator_suite();
  void spectrum_suite();
  void special_cases_suite();
  void classical_limit_suite();
  void bethe_suite();
  void hamiltonian_suite();
  void localization_suite();
  void discrepancy_suite();
  void robertson_suite();

  Options opts_;
  Report report_;
};

void Runner::overlap_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  ModelParameters params;
  params.beta = 1.0;

  // Closed form vs accelerated quadrature on the 21 x 21 grid of
  // (lambda, lambda') in [-3L, 3L]^2, L = hbar sqrt(beta).
  const double L = params.min_length();
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double la = (-3.0 + 0.3 * i) * L;
      const double lb = (-3.0 + 0.3 * j) * L;
      const double closed = overlap_closed_form(params, la, lb);
      const double quad = overlap_quadrature(params, la, lb);
      worst = std::max(worst, std::abs(closed - quad));
    }
  add(1, "overlap 21x21 closed vs quadrature, abs", kNaN, kNaN, worst, 1e-10,
      "sin(u)/u, u = pi (lambda - lambda')/(2 hbar sqrt(beta)) vs Richardson-accelerated "
      "Gauss-Chebyshev sum");

  ModelParameters spot;
  spot.beta = 0.25;
  const double spot_diff = std::abs(overlap_closed_form(spot, 0.7, -0.4) -
                                    overlap_quadrature(spot, 0.7, -0.4));
  add(1, "overlap spot pair beta=1/4, abs", kNaN, kNaN, spot_diff, 1e-10,
      "same comparison off the natural-unit point");

  // Lattice orthonormality for |n| <= 5 across five offsets.
  double lattice_worst = 0.0;
  for (double offset : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const auto m = lattice_overlap_matrix(params, 5, offset);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        lattice_worst = std::max(lattice_worst, std::abs(m[i][j] - (i == j ? 1.0 : 0.0)));
  }
  add(1, "lattice overlap matrix vs identity, abs", kNaN, kNaN, lattice_worst, 1e-12,
      "lambda_n = (2n + offset) hbar sqrt(beta) zeros of sin(u)/u");

  report_.seconds[0] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

namespace basket {

std::vector<AnalyticState> commutator_states(const ModelParameters& params) {
  std::vector<AnalyticState> states;
  states.push_back(polynomial_state(params, {1.0, Complex{0.4, -0.2}, Complex{0.0, 0.3}}));
  states.push_back(envelope_polynomial_state(params, 1, {0.7, Complex{-0.3, 0.5}}));
  states.push_back(envelope_polynomial_state(params, 2, {0.2, 0.0, 1.0}));
  states.push_back(gaussian_state(params, 0.35 * params.p_max()));
  states.push_back(position_eigenstate(params, 0.0).state);
  states.push_back(position_eigenstate(params, 1.3 * params.min_length()).state);
  states.push_back(max_localization_state(params, 0.7 * params.min_length()).state);
  SqueezedStateParams sq;
  sq.dp2 = 0.5 / params.beta;
  sq.mean_x = 0.4 * params.min_length();
  states.push_back(squeezed_state(params, sq));
  return states;
}

std::vector<double> probes(const ModelParameters& params) {
  std::vector<double> out;
  for (int k = 0; k <= 10; ++k) out.push_back((-0.95 + 0.19 * k) * params.p_max());
  return out;
}

}  // namespace basket

void Runner::commutator_suite() {
  for (double beta : betas_with_extras({0.1, 1.0})) {
    ModelParameters params;
    params.beta = beta;
    const auto probes = basket::probes(params);
    double worst = 0.0;
    for (const auto& state : basket::commutator_states(params))
      worst = std::max(worst, max_commutator_residual(state, probes));
    add(2, "commutator [X,P] residual, beta=" + format_double(beta) + ", rel", kNaN, kNaN, worst,
        1e-10, "jet transport of X(P psi) - P(X psi) vs i hbar psi/(1 - beta p^2)");
  }
}

void Runner::spectrum_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  for (double beta : {0.01, 0.1, 0.5, 1.0}) {
    ModelParameters params;
    params.beta = beta;
    try {
      const ThetaProblem coarse = build_theta_problem(params, opts_.oracle_m);
      const ThetaProblem fine = build_theta_problem(params, 2 * opts_.oracle_m);
      const std::size_t k = static_cast<std::size_t>(opts_.n_max) + 1;
      const OracleSpectrum sc = solve_spectrum(coarse, k, false);
      const OracleSpectrum sf = solve_spectrum(fine, k, false);
      const auto levels = richardson_extrapolate(sc, sf);
      double worst = 0.0;
      for (int n = 0; n <= opts_.n_max; ++n)
        worst = std::max(worst, rel_diff(levels[n].extrapolated, energy_level(params, n).energy));
      add(3, "spectrum closed form vs oracle, beta=" + format_double(beta) + ", rel", kNaN, kNaN,
          worst, 1e-6,
          "(n+1/2) hbar w sqrt(1+g^2/4) + (n^2+n+1/2) beta m w^2 hbar^2/2 vs extrapolated "
          "Dirichlet grid");
    } catch (const std::exception& e) {
      fail(3, "spectrum oracle, beta=" + format_double(beta), e.what());
    }
  }
  report_.seconds[2] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void Runner::special_cases_suite() {
  ModelParameters params;
  params.beta = 1.0;
  const double e0_ref = 0.25 + std::sqrt(5.0) / 4.0;
  const double e1_ref = 1.25 + 3.0 * std::sqrt(5.0) / 4.0;

  const double e0 = energy_level(params, 0).energy;
  const double e1 = energy_level(params, 1).energy;
  add(4, "ground energy at beta=1, rel", e0, e0_ref, rel_diff(e0, e0_ref), 1e-12,
      "hbar w sqrt(1+g^2/4)/2 + beta m w^2 hbar^2/4 = 1/4 + sqrt(5)/4 at natural units");
  add(4, "first excited energy at beta=1, rel", e1, e1_ref, rel_diff(e1, e1_ref), 1e-12,
      "3 hbar w sqrt(1+g^2/4)/2 + 5 beta m w^2 hbar^2/4 = 5/4 + 3 sqrt(5)/4 at natural units");

  try {
    const ThetaProblem coarse = build_theta_problem(params, opts_.oracle_m);
    const ThetaProblem fine = build_theta_problem(params, 2 * opts_.oracle_m);
    const auto levels =
        richardson_extrapolate(solve_spectrum(coarse, 2, false), solve_spectrum(fine, 2, false));
    add(4, "ground energy oracle at beta=1, rel", levels[0].extrapolated, e0_ref,
        rel_diff(levels[0].extrapolated, e0_ref), 1e-6, "extrapolated Dirichlet grid");
    add(4, "first excited oracle at beta=1, rel", levels[1].extrapolated, e1_ref,
        rel_diff(levels[1].extrapolated, e1_ref), 1e-6, "extrapolated Dirichlet grid");
  } catch (const std::exception& e) {
    fail(4, "special-case oracle, beta=1", e.what());
  }

  const BetheRootSet set = bethe_solve(params, 1);
  const double root = set.converged && !set.roots.empty() ? set.roots[0] : kNaN;
  add(4, "single root at n=1, abs", root, 0.5, std::abs(root - 0.5), 1e-14,
      "the n=1 equation pivots about t = 1/2 for every coupling");
}

void Runner::classical_limit_suite() {
  ModelParameters params;
  params.beta = 1e-8;

  double worst_closed = 0.0;
  for (int n = 0; n <= opts_.n_max; ++n) {
    const double e = energy_level(params, n).energy;
    worst_closed = std::max(worst_closed, std::abs(e - energy_classical_limit(params, n)));
  }
  add(5, "classical limit closed form, abs", kNaN, kNaN, worst_closed, 1e-6,
      "E_n -> (n + 1/2) hbar w as beta -> 0");

  try {
    // The eigenfunctions live in a boundary layer of width ~ sqrt(beta) in
    // theta, so this regime needs far finer grids than the generic sweep;
    // three-grid extrapolation removes h^2 and h^4.
    const ThetaProblem p1 = build_theta_problem(params, 262144);
    const ThetaProblem p2 = build_theta_problem(params, 524288);
    const ThetaProblem p3 = build_theta_problem(params, 1048576);
    const std::size_t k = static_cast<std::size_t>(opts_.n_max) + 1;
    const auto ext = extrapolate_three(solve_spectrum(p1, k, false), solve_spectrum(p2, k, false),
                                       solve_spectrum(p3, k, false));
    double worst = 0.0;
    for (int n = 0; n <= opts_.n_max; ++n)
      worst = std::max(worst, std::abs(ext[n] - energy_classical_limit(params, n)));
    add(5, "classical limit oracle, abs", kNaN, kNaN, worst, 1e-6,
        "three-grid extrapolated Dirichlet spectrum at beta = 1e-8");
  } catch (const std::exception& e) {
    fail(5, "classical limit oracle", e.what());
  }
}

void Runner::bethe_suite() {
  double worst_residual = 0.0, worst_oracle = 0.0, worst_symmetry = 0.0;
  bool all_converged = true;
  for (double g : {0.5, 1.0, 2.0}) {
    ModelParameters params;
    params.beta = g;  // natural units: g = beta
    for (int n = 1; n <= 6; ++n) {
      const BetheRootSet newton = bethe_solve(params, n);
      all_converged = all_converged && newton.converged;
      worst_residual = std::max(worst_residual, newton.max_residual());

      const BetheRootSet oracle = polynomial_oracle_roots(params, n);
      for (int i = 0; i < n; ++i) {
        worst_oracle = std::max(worst_oracle, std::abs(newton.roots[i] - oracle.roots[i]));
        worst_symmetry = std::max(
            worst_symmetry, std::abs(newton.roots[i] + newton.roots[n - 1 - i] - 1.0));
      }
    }
  }
  add(6, "root-system residual, abs", kNaN, kNaN, all_converged ? worst_residual : 1.0, 1e-12,
      "coupled pairwise equations with single-root denominator 2(t - t^2)");
  add(6, "Newton roots vs polynomial oracle, abs", kNaN, kNaN, worst_oracle, 1e-10,
      "ultraspherical recurrence roots in x = 1 - 2t, bracketed bisection");
  add(6, "root-set symmetry about 1/2, abs", kNaN, kNaN, worst_symmetry, 1e-12,
      "the envelope is even, so root sets pair as t and 1 - t");
}

void Runner::hamiltonian_suite() {
  for (double beta : {0.1, 1.0}) {
    ModelParameters params;
    params.beta = beta;
    const ChebyshevGrid grid = build_grid(params, 2048);
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n) {
      const AnalyticState psi = oscillator_wavefunction(params, n);
      const double energy = energy_level(params, n).energy;
      const AnalyticState h_psi = apply_oscillator_hamiltonian(psi);
      const AnalyticState resid = combine(h_psi, psi, 1.0, -energy);
      worst = std::max(worst, norm(resid, grid) / energy);
    }
    add(7, "eigen-relation residual |H psi - E psi|/E, beta=" + format_double(beta) + ", rel",
        kNaN, kNaN, worst, 1e-8, "operator composition P^2/2m + m w^2 X^2/2 on jet states");
  }
}

void Runner::localization_suite() {
  for (double beta : {0.1, 1.0}) {
    ModelParameters params;
    params.beta = beta;
    const double unit = 1.0 / (12.0 * params.mass * params.beta);
    const MlUncertaintyProfile prof =
        ml_uncertainty_profile(params, 0.8 * params.min_length(), 1024);

    add(8, "ml norm, beta=" + format_double(beta) + ", abs", prof.norm, 1.0,
        std::abs(prof.norm - 1.0), 1e-8, "amplitude sqrt(8 sqrt(beta)/(3 pi)) normalizes exactly");
    add(8, "ml <X> vs xi, beta=" + format_double(beta) + ", abs", prof.mean_X,
        0.8 * params.min_length(), std::abs(prof.mean_X - 0.8 * params.min_length()), 1e-8,
        "the arcsin phase translates the state to <X> = xi");
    add(8, "ml lower kinetic vs 1/(12 m beta), rel", prof.kinetic_lower, unit,
        rel_diff(prof.kinetic_lower, unit), 1e-10, "quadrature of p^2 |psi|^2 / 2m");

    const PositionEigenstate eig = position_eigenstate(params, 0.37 * params.min_length());
    const ChebyshevGrid grid = build_grid(params, 1024);
    const ExpectationReport rep = expectation_report(eig.state, grid);
    const double eig_kin = rep.mean_p2_lower / (2.0 * params.mass);
    add(8, "eigenstate lower kinetic vs 1/(4 m beta), rel", eig_kin,
        1.0 / (4.0 * params.mass * params.beta),
        rel_diff(eig_kin, 1.0 / (4.0 * params.mass * params.beta)), 1e-8,
        "flat-modulus state: <p^2> = 1/(2 beta)");
  }

  // Scaling spot check away from unit mass.
  ModelParameters scaled;
  scaled.beta = 0.5;
  scaled.mass = 2.0;
  const MlUncertaintyProfile prof = ml_uncertainty_profile(scaled, 0.0, 1024);
  add(8, "ml lower kinetic, m=2 beta=1/2, rel", prof.kinetic_lower, 1.0 / 12.0,
      rel_diff(prof.kinetic_lower, 1.0 / 12.0), 1e-10, "1/(12 m beta) with m = 2, beta = 1/2");

  // Kinetic-comparison table constants, quoted verbatim from the family
  // literature, plus the measured entries for this model.
  ModelParameters params;
  params.beta = 0.1;
  const auto rows = comparison_report(params, 1024);
  const double expected_ratio[3] = {6.0, 0.8814, 0.7176};
  for (int i = 0; i < 3; ++i)
    add(8, std::string("comparison ratio ") + rows[i].model, rows[i].kinetic_ratio,
        expected_ratio[i], std::abs(rows[i].kinetic_ratio - expected_ratio[i]), 0.0,
        "literature constant, quoted verbatim");
  add(8, "comparison ratio this-lower vs 1, rel", rows[3].kinetic_ratio, 1.0,
      rel_diff(rows[3].kinetic_ratio, 1.0), 1e-8, "measured by quadrature");
}

void Runner::discrepancy_suite() {
  for (double beta : betas_with_extras({0.1, 1.0})) {
    ModelParameters params;
    params.beta = beta;
    const MlUncertaintyProfile prof = ml_uncertainty_profile(params, 0.0, 1024);
    const std::string tag = ", beta=" + format_double(beta);

    const double deformed_ref = 1.0 / (6.0 * params.mass * params.beta);
    add(9, "ml deformed kinetic" + tag + ", rel", prof.kinetic_deformed, deformed_ref,
        rel_diff(prof.kinetic_deformed, deformed_ref), 1e-8,
        "quadrature of |P psi|^2 / 2m; formula 1/(6 m beta), twice the lower reading");

    const double dx_ref = 2.0 * params.hbar * std::sqrt(params.beta / 3.0);
    add(9, "ml quadrature Delta X" + tag + ", rel", prof.delta_X, dx_ref,
        rel_diff(prof.delta_X, dx_ref), 1e-8,
        "second moment of the ml envelope: 2 hbar sqrt(beta/3)");

    const double const_ref = 0.75 * std::sqrt(3.0) * params.hbar * std::sqrt(params.beta);
    add(9, "minimal-length reference constant" + tag + ", rel", prof.min_length_reference,
        const_ref, rel_diff(prof.min_length_reference, const_ref), 1e-15,
        "(3 sqrt(3)/4) hbar sqrt(beta), the model's quoted localization scale");
  }
}

void Runner::robertson_suite() {
  std::mt19937_64 rng(opts_.seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(2, 6);
  std::uniform_int_distribution<int> env_power(1, 2);

  double worst_slack = std::numeric_limits<double>::infinity();
  double worst_chain = std::numeric_limits<double>::infinity();
  int chain_states = 0;

  for (int trial = 0; trial < 100; ++trial) {
    ModelParameters params;
    params.beta = (trial % 2 == 0) ? 0.1 : 1.0;
    const bool even_state = trial % 2 == 1;

    const int deg = degree(rng);
    std::vector<Complex> coeffs(deg + 1);
    for (auto& c : coeffs) c = Complex{coeff(rng), coeff(rng)};
    if (even_state)
      for (int k = 1; k <= deg; k += 2) coeffs[k] = 0.0;

    const AnalyticState psi = envelope_polynomial_state(params, env_power(rng), coeffs);
    const ChebyshevGrid grid = build_grid(params, 1024);
    const ExpectationReport rep = expectation_report(psi, grid);
    if (rep.deformed_moments_divergent) {
      fail(10, "random state moments", "unexpected divergent moments in the random basket");
      return;
    }
    const double slack =
        std::sqrt(rep.var_X) * std::sqrt(rep.var_P) - rep.robertson_rhs;
    worst_slack = std::min(worst_slack, slack);

    if (even_state) {
      // Chain bound: (hbar/2) <1/(1 - beta p^2)> for symmetric envelopes.
      const SampledState s = sample(psi, grid);
      double sec2 = 0.0, nrm2 = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = 1.0 - params.beta * grid.nodes[i] * grid.nodes[i];
        sec2 += grid.weights[i] * std::norm(s.values[i]) / d;
        nrm2 += grid.weights[i] * std::norm(s.values[i]);
      }
      const double chain_rhs = 0.5 * params.hbar * sec2 / nrm2;
      worst_chain =
          std::min(worst_chain, std::sqrt(rep.var_X) * std::sqrt(rep.var_P) - chain_rhs);
      ++chain_states;
    }
  }

  add(10, "Robertson slack over 100 random states, abs", kNaN, kNaN,
      std::max(0.0, -worst_slack), 1e-12,
      "Delta X Delta P >= |<[X,P]>|/2 computed operationally");
  add(10, "chain bound slack over " + std::to_string(chain_states) + " symmetric states, abs",
      kNaN, kNaN, std::max(0.0, -worst_chain), 1e-12,
      "Delta X Delta P >= (hbar/2) <1/(1 - beta p^2)> for symmetric states");
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

bool Report::criterion_pass(int criterion) const {
  bool any = false;
  for (const CheckRow& r : rows)
    if (r.criterion == criterion) {
      any = true;
      if (!r.pass) return false;
    }
  return any;
}

double Report::worst_margin(int criterion) const {
  double worst = 0.0;
  for (const CheckRow& r : rows)
    if (r.criterion == criterion)
      worst = std::max(worst, r.tolerance > 0.0 ? r.defect / r.tolerance
                                                : (r.defect == 0.0 ? 0.0 : kNaN));
  return worst;
}

const std::array<std::string, 10>& criterion_titles() {
  static const std::array<std::string, 10> titles = {
      "overlap closed form vs quadrature and lattice orthonormality",
      "commutator identity on the state basket",
      "spectrum closed form vs extrapolated oracle",
      "beta = 1 special values and the n = 1 root",
      "classical limit at beta = 1e-8",
      "root solver vs polynomial oracle",
      "eigen-relation residual of the wavefunctions",
      "localization moments and kinetic comparison table",
      "dual kinetic readings and the localization scale",
      "uncertainty bounds on random states",
  };
  return titles;
}

Report run(const Options& opts) {
  Runner runner(opts);
  runner.overlap_suite();
  runner.commutator_suite();
  runner.spectrum_suite();
  runner.special_cases_suite();
  runner.classical_limit_suite();
  runner.bethe_suite();
  runner.hamiltonian_suite();
  runner.localization_suite();
  runner.discrepancy_suite();
  runner.robertson_suite();
  return std::move(runner).take();
}

Table to_table(const Report& report) {
  Table t;
  t.name = "verification";
  t.columns = {"criterion", "label", "value", "reference", "defect", "tolerance", "status",
               "provenance"};
  const auto cell = [](double v) -> Cell {
    if (std::isnan(v)) return std::string("-");
    return v;
  };
  for (const CheckRow& r : report.rows)
    t.add_row({static_cast<long long>(r.criterion), r.label, cell(r.value), cell(r.reference),
               r.defect, r.tolerance, std::string(r.pass ? "pass" : "FAIL"), r.provenance});
  return t;
}

}  // namespace guplab::verify
