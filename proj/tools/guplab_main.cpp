// guplab: numerical laboratory for quantum mechanics on a bounded momentum
// interval with the deformed bracket [X,P] = i hbar / (1 - beta p^2).
//
// Subcommands:
//   verify    run the full invariant and acceptance check table
//   overlap   position-eigenstate overlap curve, closed form vs quadrature
//   spectrum  oscillator levels, closed form vs extrapolated grid oracle
//   bethe     oscillator root system for level n, Newton vs polynomial oracle
//   mlstate   maximal-localization state profile and its moment footer

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "guplab/cli.hpp"

int main(int argc, char** argv) {
  using namespace guplab;

  CLI::App app{"bounded-momentum deformed quantum mechanics laboratory"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  cli::RunConfig config;
  config.betas.clear();

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--beta", config.betas,
                    "deformation parameter, repeatable (default 0.1)");
    sub->add_option("--hbar", config.hbar, "reduced Planck constant");
    sub->add_option("--mass", config.mass, "oscillator mass");
    sub->add_option("--omega", config.omega, "oscillator frequency");
    sub->add_option("--n-max", config.n_max, "highest oscillator level");
    sub->add_option("--grid-size", config.grid_size, "oracle / quadrature grid size");
    sub->add_option("--format", config.format, "output format: csv or json");
    sub->add_option("--out", config.out_path, "output path (default stdout)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the verification table");
  add_common(verify);

  double lambda_min = -6.0, lambda_max = 6.0;
  int steps = 121;
  CLI::App* overlap = app.add_subcommand("overlap", "overlap curve of position eigenstates");
  add_common(overlap);
  overlap->add_option("--lambda-min", lambda_min, "lower end, in units of hbar*sqrt(beta)");
  overlap->add_option("--lambda-max", lambda_max, "upper end, in units of hbar*sqrt(beta)");
  overlap->add_option("--steps", steps, "number of samples");

  CLI::App* spectrum = app.add_subcommand("spectrum", "oscillator spectrum vs oracle");
  add_common(spectrum);

  int bethe_n = 2;
  CLI::App* bethe = app.add_subcommand("bethe", "oscillator root system at level n");
  add_common(bethe);
  bethe->add_option("--n", bethe_n, "level (1..12)");

  double xi = 0.0;
  int samples = 64;
  CLI::App* mlstate = app.add_subcommand("mlstate", "maximal-localization state profile");
  add_common(mlstate);
  mlstate->add_option("--xi", xi, "localization centre");
  mlstate->add_option("--samples", samples, "number of momentum samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (config.betas.empty()) config.betas.push_back(0.1);
  std::string message;
  if (!cli::validate(config, message)) {
    std::cerr << "error: " << message << "\n";
    return cli::kExitUsage;
  }

  try {
    if (verify->parsed()) return cli::cmd_verify(config);
    if (overlap->parsed()) return cli::cmd_overlap(config, lambda_min, lambda_max, steps);
    if (spectrum->parsed()) return cli::cmd_spectrum(config);
    if (bethe->parsed()) return cli::cmd_bethe(config, bethe_n);
    if (mlstate->parsed()) return cli::cmd_mlstate(config, xi, samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitSuiteFailure;
  }
  return cli::kExitUsage;
}
