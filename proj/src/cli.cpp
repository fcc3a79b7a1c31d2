#include "guplab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "guplab/eigenstates.hpp"
#include "guplab/operators.hpp"
#include "guplab/oracle.hpp"
#include "guplab/oscillator.hpp"
#include "guplab/verify.hpp"

namespace guplab::cli {

namespace {

ModelParameters params_for(const RunConfig& config, double beta) {
  ModelParameters p;
  p.beta = beta;
  p.hbar = config.hbar;
  p.mass = config.mass;
  p.omega = config.omega;
  return p;
}

void echo_config(Table& table, const RunConfig& config) {
  for (std::size_t i = 0; i < config.betas.size(); ++i)
    table.meta["beta" + (config.betas.size() > 1 ? std::to_string(i) : "")] = config.betas[i];
  table.meta["hbar"] = config.hbar;
  table.meta["mass"] = config.mass;
  table.meta["omega"] = config.omega;
}

}  // namespace

bool validate(const RunConfig& config, std::string& message) {
  if (config.betas.empty()) {
    message = "at least one --beta is required";
    return false;
  }
  for (double b : config.betas)
    if (!(b > 0.0) || !std::isfinite(b)) {
      message = "--beta must be positive and finite";
      return false;
    }
  for (double v : {config.hbar, config.mass, config.omega})
    if (!(v > 0.0) || !std::isfinite(v)) {
      message = "--hbar, --mass, --omega must be positive and finite";
      return false;
    }
  if (config.n_max < 0) {
    message = "--n-max must be non-negative";
    return false;
  }
  if (config.grid_size == 0) {
    message = "--grid-size must be positive";
    return false;
  }
  if (config.format != "csv" && config.format != "json") {
    message = "--format must be csv or json";
    return false;
  }
  return true;
}

int emit(const RunConfig& config, const Table& table, int status) {
  std::ofstream file;
  if (!config.out_path.empty()) {
    file.open(config.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output path " << config.out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& os = config.out_path.empty() ? std::cout : file;
  if (config.format == "json") write_json(table, os);
  else write_csv(table, os);
  return status;
}

int cmd_verify(const RunConfig& config) {
  verify::Options opts;
  opts.oracle_m = config.grid_size;
  opts.n_max = config.n_max;
  for (double b : config.betas)
    if (b != 0.1) opts.extra_betas.push_back(b);

  const verify::Report report = verify::run(opts);
  Table table = verify::to_table(report);
  echo_config(table, config);
  table.meta["grid_size"] = static_cast<long long>(config.grid_size);
  table.meta["n_max"] = static_cast<long long>(config.n_max);

  long long failures = 0;
  for (const auto& row : report.rows)
    if (!row.pass) ++failures;
  table.footer.emplace_back("checks", static_cast<long long>(report.rows.size()));
  table.footer.emplace_back("failures", failures);
  table.footer.emplace_back("result", std::string(report.all_pass() ? "pass" : "FAIL"));

  return emit(config, table, report.all_pass() ? kExitOk : kExitSuiteFailure);
}

int cmd_overlap(const RunConfig& config, double lambda_min, double lambda_max, int steps) {
  if (steps < 2) {
    std::cerr << "error: --steps must be at least 2\n";
    return kExitUsage;
  }
  if (!(lambda_max > lambda_min)) {
    std::cerr << "error: --lambda-max must exceed --lambda-min\n";
    return kExitUsage;
  }
  const ModelParameters params = params_for(config, config.betas.front());
  const double unit = params.min_length();

  Table table;
  table.name = "overlap";
  table.columns = {"x", "y_closed_form", "y_quadrature", "abs_diff"};
  echo_config(table, config);
  table.meta["lambda_min"] = lambda_min;
  table.meta["lambda_max"] = lambda_max;
  table.meta["steps"] = static_cast<long long>(steps);
  table.meta["x_unit"] = std::string("hbar*sqrt(beta)");

  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double x =
        lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / (steps - 1);
    const double closed = overlap_closed_form(params, x * unit, 0.0);
    const double quad = overlap_quadrature(params, x * unit, 0.0);
    const double diff = std::abs(closed - quad);
    worst = std::max(worst, diff);
    ok = ok && diff < 1e-10;
    table.add_row({x, closed, quad, diff});
  }
  table.footer.emplace_back("max_abs_diff", worst);
  table.footer.emplace_back("result", std::string(ok ? "pass" : "FAIL"));
  return emit(config, table, ok ? kExitOk : kExitSuiteFailure);
}

int cmd_spectrum(const RunConfig& config) {
  Table table;
  table.name = "spectrum";
  table.columns = {"n", "beta", "E_closed_form", "E_oracle", "rel_diff"};
  echo_config(table, config);
  table.meta["grid_size"] = static_cast<long long>(config.grid_size);

  bool ok = true;
  double worst = 0.0;
  for (double beta : config.betas) {
    const ModelParameters params = params_for(config, beta);
    try {
      const ThetaProblem coarse = build_theta_problem(params, config.grid_size);
      const ThetaProblem fine = build_theta_problem(params, 2 * config.grid_size);
      const std::size_t k = static_cast<std::size_t>(config.n_max) + 1;
      const auto levels = richardson_extrapolate(solve_spectrum(coarse, k, false),
                                                 solve_spectrum(fine, k, false));
      for (int n = 0; n <= config.n_max; ++n) {
        const double closed = energy_level(params, n).energy;
        const double oracle = levels[n].extrapolated;
        const double rel = std::abs(oracle - closed) / std::abs(closed);
        worst = std::max(worst, rel);
        table.add_row({static_cast<long long>(n), beta, closed, oracle, rel});
      }
    } catch (const std::exception& e) {
      table.add_row({static_cast<long long>(-1), beta, 0.0, 0.0, std::string(e.what())});
      ok = false;
    }
  }
  table.footer.emplace_back("max_rel_diff", worst);
  table.footer.emplace_back("result", std::string(ok ? "pass" : "FAIL"));
  return emit(config, table, ok ? kExitOk : kExitSuiteFailure);
}

int cmd_bethe(const RunConfig& config, int n) {
  if (n < 1 || n > 12) {
    std::cerr << "error: --n must lie in 1..12\n";
    return kExitUsage;
  }
  const ModelParameters params = params_for(config, config.betas.front());

  Table table;
  table.name = "bethe";
  table.columns = {"i", "t", "residual", "oracle_root", "abs_diff"};
  echo_config(table, config);
  table.meta["n"] = static_cast<long long>(n);
  table.meta["alpha"] = alpha_exponent(params).alpha;

  const BetheRootSet newton = bethe_solve(params, n);
  const BetheRootSet oracle = polynomial_oracle_roots(params, n);
  for (int i = 0; i < n; ++i)
    table.add_row({static_cast<long long>(i), newton.roots[i], newton.residuals[i],
                   oracle.roots[i], std::abs(newton.roots[i] - oracle.roots[i])});

  table.footer.emplace_back("converged", std::string(newton.converged ? "true" : "false"));
  table.footer.emplace_back("iterations", static_cast<long long>(newton.iterations));
  table.footer.emplace_back("max_residual", newton.max_residual());
  return emit(config, table, newton.converged ? kExitOk : kExitSuiteFailure);
}

int cmd_mlstate(const RunConfig& config, double xi, int samples) {
  if (samples < 16) {
    std::cerr << "error: --samples must be at least 16\n";
    return kExitUsage;
  }
  const ModelParameters params = params_for(config, config.betas.front());
  const MaxLocalizationState ml = max_localization_state(params, xi);

  Table table;
  table.name = "mlstate";
  table.columns = {"p", "re_psi", "im_psi", "abs2_psi"};
  echo_config(table, config);
  table.meta["xi"] = xi;
  table.meta["samples"] = static_cast<long long>(samples);

  const double pm = params.p_max();
  for (int i = 0; i < samples; ++i) {
    const double p = pm * (2.0 * (i + 0.5) / samples - 1.0);
    const Complex v = ml.state.value(p);
    table.add_row({p, v.real(), v.imag(), std::norm(v)});
  }

  const MlUncertaintyProfile prof = ml_uncertainty_profile(params, xi, config.grid_size);
  table.footer.emplace_back("norm", prof.norm);
  table.footer.emplace_back("mean_X", prof.mean_X);
  table.footer.emplace_back("delta_X_quadrature", prof.delta_X);
  table.footer.emplace_back("min_length_reference", prof.min_length_reference);
  table.footer.emplace_back("kinetic_lower", prof.kinetic_lower);
  table.footer.emplace_back("kinetic_deformed", prof.kinetic_deformed);
  table.footer.emplace_back("robertson_lhs", prof.robertson_lhs);
  table.footer.emplace_back("robertson_rhs", prof.robertson_rhs);
  return emit(config, table, kExitOk);
}

}  // namespace guplab::cli
