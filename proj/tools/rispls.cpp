// Command-line front end: phase optimization, capacity sweeps and the
// power-allocation solver, all emitting CSV.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rispls/errors.hpp"
#include "rispls/harness.hpp"

int main(int argc, char** argv) {
  using namespace rispls;

  CLI::App app{"RIS-assisted artificial-noise secrecy simulator"};
  app.set_version_flag("--version", kToolVersion);

  std::string command;
  std::string scenario;
  std::string algorithm = "iterative";
  std::string pt_sweep;
  std::string phases;
  std::string config_out;
  ExperimentSpec spec;
  double eta = 0.0, gamma_bob_db = 0.0, ratio = 0.0;
  std::string out;

  app.add_option("command", command,
                 "optimize-phases | sweep-alpha | sweep-power | solve-alpha | dump-channels")
      ->required();
  app.add_option("--scenario", scenario, "scenario file (key = value)")->required();
  app.add_option("--algorithm", algorithm, "iterative | dft | zero")->capture_default_str();
  app.add_option("--seed", spec.seed, "seed for element order and codebook padding")
      ->capture_default_str();
  app.add_option("--alpha-grid", spec.alpha_grid, "alpha1 grid points over [0, 1]")
      ->capture_default_str();
  auto* eta_opt = app.add_option("--eta", eta, "ratio of Eve's SINR ceiling to Bob's SINR floor");
  auto* gamma_opt = app.add_option("--gamma-bob-db", gamma_bob_db, "Bob's minimum SINR in dB");
  app.add_option("--pt-sweep", pt_sweep, "transmit power sweep start:step:stop in dBm (default -30:2:10)");
  app.add_option("--phases", phases, "use this phase configuration instead of optimizing");
  app.add_option("--config-out", config_out, "optimize-phases: where to write the final configuration");
  auto* ratio_opt = app.add_option("--capacity-ratio", ratio,
                                   "solve-alpha: largest alpha1 with C_e <= ratio * C_b");
  app.add_flag("--unconstrained", spec.unconstrained, "solve-alpha without SINR constraints");
  app.add_flag("--with-zero", spec.with_zero, "sweep-alpha: append the all-zero baseline");
  app.add_option("--out", out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    spec.command = parse_command(command);
    spec.scenario = scenario;
    spec.algorithm = parse_algorithm(algorithm);
    if (*eta_opt) spec.eta = eta;
    if (*gamma_opt) spec.gamma_bob_db = gamma_bob_db;
    if (*ratio_opt) spec.capacity_ratio = ratio;
    if (!pt_sweep.empty()) spec.pt_sweep_dbm = parse_power_sweep(pt_sweep);
    if (!phases.empty()) spec.phases = phases;
    if (!config_out.empty()) spec.config_out = config_out;
    spec.out = out;

    const int code = run(spec);
    if (code == kExitInfeasible) std::cerr << "rispls: no feasible operating point\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "rispls: " << e.what() << '\n';
    return kExitInputError;
  }
}
