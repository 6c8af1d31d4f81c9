#include "rispls/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "rispls/csv.hpp"
#include "rispls/scenario_io.hpp"

namespace rispls {

const char* to_string(Command c) {
  switch (c) {
    case Command::optimize_phases: return "optimize-phases";
    case Command::sweep_alpha: return "sweep-alpha";
    case Command::sweep_power: return "sweep-power";
    case Command::solve_alpha: return "solve-alpha";
    case Command::dump_channels: return "dump-channels";
  }
  return "";
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::iterative: return "iterative";
    case Algorithm::dft: return "dft";
    case Algorithm::zero: return "zero";
  }
  return "";
}

Command parse_command(const std::string& s) {
  for (const auto c : {Command::optimize_phases, Command::sweep_alpha, Command::sweep_power,
                       Command::solve_alpha, Command::dump_channels}) {
    if (s == to_string(c)) return c;
  }
  throw InputError("unknown command '" + s + "'");
}

Algorithm parse_algorithm(const std::string& s) {
  for (const auto a : {Algorithm::iterative, Algorithm::dft, Algorithm::zero}) {
    if (s == to_string(a)) return a;
  }
  throw InputError("unknown algorithm '" + s + "'");
}

std::vector<double> parse_power_sweep(const std::string& text) {
  const auto parts = csv::split(text, ':');
  if (parts.size() != 3) throw InputError("power sweep must look like start:step:stop, got '" + text + "'");
  const double start = csv::parse_number(parts[0]);
  const double step = csv::parse_number(parts[1]);
  const double stop = csv::parse_number(parts[2]);
  if (!(step > 0.0) || stop < start) throw InputError("power sweep needs step > 0 and stop >= start");
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) throw InputError("power sweep has too many points");
  std::vector<double> out;
  for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

std::string CsvTable::str() const {
  std::string out;
  if (!comment.empty()) out += "# " + comment + '\n';
  out += csv::join(header) + '\n';
  for (const auto& r : rows) out += csv::join(r) + '\n';
  return out;
}

std::string provenance(const ScenarioConfig& sc, std::uint64_t seed) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(scenario_hash(sc)));
  return std::string("scenario_hash=") + hash + " seed=" + std::to_string(seed) +
         " version=" + kToolVersion;
}

namespace {

PhaseSearchResult measure_only(const MeasurementOracle& oracle, const PhaseConfig& cfg, Partition p) {
  PhaseSearchResult r{cfg, OptimizationTrace{p, {}}, oracle(cfg), 1};
  r.trace.entries.push_back({1, r.best_power, r.best_power, 1});
  return r;
}

std::string db(double linear) { return csv::format_number(10.0 * std::log10(linear)); }

}  // namespace

PhaseRun optimize_phases(const ScenarioConfig& sc, const ChannelSet& ch, Algorithm algorithm,
                         std::uint64_t seed) {
  const auto cs_oracle = channel_oracle(sc, ch, Objective::cs_at_bob);
  const auto an_oracle = channel_oracle(sc, ch, Objective::an_at_eve);
  const PhaseConfig start = zero_config(sc.ris);

  PhaseRun run;
  run.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::iterative:
      run.bob = iterative_optimize(cs_oracle, start, Partition::bob, seed);
      run.eve = iterative_optimize(an_oracle, run.bob.config, Partition::eve, seed);
      break;
    case Algorithm::dft: {
      const int half = sc.ris.size() / 2;
      const Codebook cb = binary_dft_codebook(half);
      const auto budget = static_cast<std::size_t>(half);
      run.bob = dft_sweep(cs_oracle, start, Partition::bob, cb, seed, budget);
      run.eve = dft_sweep(an_oracle, run.bob.config, Partition::eve, cb, seed, budget);
      break;
    }
    case Algorithm::zero:
      run.bob = measure_only(cs_oracle, start, Partition::bob);
      run.eve = measure_only(an_oracle, start, Partition::eve);
      break;
  }
  run.config = run.eve.config;
  return run;
}

CsvTable trace_table(const PhaseRun& run) {
  CsvTable t;
  t.header = {"trial", "power_dbm", "best_power_dbm", "partition", "algorithm"};
  for (const auto* part : {&run.bob, &run.eve}) {
    for (const auto& e : part->trace.entries) {
      t.rows.push_back({std::to_string(e.trial), csv::format_number(watts_to_dbm(e.power)),
                        csv::format_number(watts_to_dbm(e.best_power)),
                        to_string(part->trace.partition), to_string(run.algorithm)});
    }
  }
  return t;
}

CsvTable alpha_sweep_table() {
  CsvTable t;
  t.header = {"alpha1", "c_bob", "c_eve", "c_secrecy", "sinr_bob_db", "sinr_eve_db", "algorithm"};
  return t;
}

void append_alpha_sweep(CsvTable& table, const AllocationModel& model, int grid,
                        const std::string& label) {
  if (grid < 2) throw InputError("alpha grid needs at least 2 points");
  for (int i = 0; i < grid; ++i) {
    const double alpha = i == grid - 1 ? 1.0 : static_cast<double>(i) / (grid - 1);
    const auto r = model.report(alpha);
    const double c_bob = csv::rounded(r.c_bob);
    const double c_eve = csv::rounded(r.c_eve);
    table.rows.push_back({csv::format_number(alpha), csv::format_number(c_bob),
                          csv::format_number(c_eve),
                          csv::format_number(secrecy_capacity(c_bob, c_eve)), db(r.sinr_bob),
                          db(r.sinr_eve), label});
  }
}

std::vector<PowerSweepPoint> sweep_power(const ScenarioConfig& sc, const ChannelSet& ch,
                                         const PhaseConfig& cfg, double eta, double gamma_bob,
                                         const std::vector<double>& pt_dbm, int grid) {
  const auto th = SecrecyThresholds::from_eta(gamma_bob, eta);
  const LinkGains gains = link_gains(ch, cfg);
  std::vector<std::future<AllocationSolution>> jobs;
  jobs.reserve(pt_dbm.size());
  for (const double p : pt_dbm) {
    jobs.push_back(std::async(std::launch::async, [&, p] {
      const AllocationModel model(gains, dbm_to_watts(p), sc.noise_bob_watts(), sc.noise_eve_watts());
      return optimize_alpha(model, th, grid);
    }));
  }
  std::vector<PowerSweepPoint> out;
  out.reserve(pt_dbm.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) out.push_back({pt_dbm[i], jobs[i].get()});
  return out;
}

namespace {

std::vector<std::string> solution_cells(const AllocationSolution& s) {
  return {csv::format_number(s.alpha1), s.feasible ? "1" : "0",
          csv::format_number(s.report.c_bob), csv::format_number(s.report.c_eve),
          csv::format_number(s.report.c_secrecy), to_string(s.binding)};
}

}  // namespace

CsvTable power_sweep_table(const std::vector<PowerSweepPoint>& points) {
  CsvTable t;
  t.header = {"pt_dbm", "alpha1", "feasible", "c_bob", "c_eve", "c_secrecy", "binding_constraint"};
  for (const auto& p : points) {
    auto cells = solution_cells(p.solution);
    cells.insert(cells.begin(), csv::format_number(p.pt_dbm));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

CsvTable solution_table(const AllocationSolution& sol) {
  CsvTable t;
  t.header = {"alpha1", "feasible", "c_bob", "c_eve", "c_secrecy", "binding_constraint"};
  t.rows.push_back(solution_cells(sol));
  return t;
}

CsvTable channel_table(const ChannelSet& ch) {
  CsvTable t;
  t.header = {"n", "h_s_amp", "h_s_phase", "h_a_amp", "h_a_phase",
              "h_b_amp", "h_b_phase", "h_e_amp", "h_e_phase"};
  for (Eigen::Index n = 0; n < ch.size(); ++n) {
    std::vector<std::string> row{std::to_string(n + 1)};
    for (const auto* link : {&ch.h_s, &ch.h_a, &ch.h_b, &ch.h_e}) {
      row.push_back(csv::format_number(link->amplitude[n]));
      row.push_back(csv::format_number(link->phase[n]));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

PhaseConfig load_config(const std::filesystem::path& path, const PartitionSplit& split) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open phase configuration '" + path.string() + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (!csv::trim(line).empty() && csv::trim(line).front() != '#') return parse_config(line, split);
  }
  throw InputError("phase configuration '" + path.string() + "' is empty");
}

}  // namespace

int run(const ExperimentSpec& spec) {
  if (spec.alpha_grid < 2) throw InputError("--alpha-grid must be at least 2");
  if (!std::filesystem::exists(spec.scenario)) {
    throw InputError("scenario file '" + spec.scenario.string() + "' does not exist");
  }
  if (spec.out.empty()) throw InputError("--out is required");
  const ScenarioConfig sc = load_scenario(spec.scenario);
  const ChannelSet ch = build_channel_set(sc);
  const std::string comment = provenance(sc, spec.seed);

  if (spec.command == Command::dump_channels) {
    auto t = channel_table(ch);
    t.comment = comment;
    write_file(spec.out, t.str());
    return kExitOk;
  }

  if (spec.command == Command::optimize_phases) {
    const PhaseRun run = optimize_phases(sc, ch, spec.algorithm, spec.seed);
    auto t = trace_table(run);
    t.comment = comment;
    write_file(spec.out, t.str());
    auto cfg_path = spec.config_out.value_or(std::filesystem::path(spec.out).replace_extension(".phases"));
    write_file(cfg_path, format_config(run.config) + '\n');
    return kExitOk;
  }

  const PhaseConfig cfg = spec.phases ? load_config(*spec.phases, canonical_split(sc.ris))
                                      : optimize_phases(sc, ch, spec.algorithm, spec.seed).config;

  switch (spec.command) {
    case Command::sweep_alpha: {
      auto t = alpha_sweep_table();
      t.comment = comment;
      append_alpha_sweep(t, AllocationModel(sc, ch, cfg), spec.alpha_grid,
                         spec.phases ? "loaded" : to_string(spec.algorithm));
      if (spec.with_zero && (spec.phases || spec.algorithm != Algorithm::zero)) {
        append_alpha_sweep(t, AllocationModel(sc, ch, zero_config(sc.ris)), spec.alpha_grid, "zero");
      }
      write_file(spec.out, t.str());
      return kExitOk;
    }
    case Command::sweep_power: {
      if (!spec.eta || !spec.gamma_bob_db) throw InputError("sweep-power needs --eta and --gamma-bob-db");
      const auto pts = spec.pt_sweep_dbm.empty() ? parse_power_sweep("-30:2:10") : spec.pt_sweep_dbm;
      const auto points = sweep_power(sc, ch, cfg, *spec.eta, db_to_linear(*spec.gamma_bob_db), pts,
                                      spec.alpha_grid);
      auto t = power_sweep_table(points);
      t.comment = comment;
      write_file(spec.out, t.str());
      const bool any = std::any_of(points.begin(), points.end(),
                                   [](const PowerSweepPoint& p) { return p.solution.feasible; });
      return any ? kExitOk : kExitInfeasible;
    }
    case Command::solve_alpha: {
      const AllocationModel model(sc, ch, cfg);
      if (spec.capacity_ratio) {
        CsvTable t;
        t.comment = comment;
        t.header = {"ratio", "alpha1", "c_bob", "c_eve", "c_secrecy"};
        try {
          const double a = capacity_ratio_alpha(model, *spec.capacity_ratio, spec.alpha_grid);
          const auto r = model.report(a);
          t.rows.push_back({csv::format_number(*spec.capacity_ratio), csv::format_number(a),
                            csv::format_number(r.c_bob), csv::format_number(r.c_eve),
                            csv::format_number(r.c_secrecy)});
        } catch (const Infeasible&) {
          write_file(spec.out, t.str());
          return kExitInfeasible;
        }
        write_file(spec.out, t.str());
        return kExitOk;
      }
      SecrecyThresholds th;
      if (!spec.unconstrained) {
        if (!spec.eta || !spec.gamma_bob_db) {
          throw InputError("solve-alpha needs --eta and --gamma-bob-db, --unconstrained or --capacity-ratio");
        }
        th = SecrecyThresholds::from_eta(db_to_linear(*spec.gamma_bob_db), *spec.eta);
      }
      const auto sol = optimize_alpha(model, th, spec.alpha_grid);
      auto t = solution_table(sol);
      t.comment = comment;
      write_file(spec.out, t.str());
      return sol.feasible ? kExitOk : kExitInfeasible;
    }
    default:
      break;
  }
  return kExitOk;
}

}  // namespace rispls
