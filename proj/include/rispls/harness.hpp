#ifndef RISPLS_HARNESS_HPP
#define RISPLS_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rispls/channel.hpp"
#include "rispls/optimize.hpp"
#include "rispls/ris.hpp"
#include "rispls/scene.hpp"

namespace rispls {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { optimize_phases, sweep_alpha, sweep_power, solve_alpha, dump_channels };
enum class Algorithm { iterative, dft, zero };

const char* to_string(Command c);
const char* to_string(Algorithm a);
Command parse_command(const std::string& s);
Algorithm parse_algorithm(const std::string& s);

/// "start:step:stop" in dBm, inclusive of stop.
std::vector<double> parse_power_sweep(const std::string& text);

struct CsvTable {
  std::string comment;  // without the leading '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

/// "scenario_hash=<hex> seed=<n> version=<v>"
std::string provenance(const ScenarioConfig& sc, std::uint64_t seed);

struct PhaseRun {
  Algorithm algorithm = Algorithm::iterative;
  PhaseConfig config;
  PhaseSearchResult bob;  // r_b tuned for CS power at Bob
  PhaseSearchResult eve;  // r_e tuned for AN power at Eve
};

/// Tunes r_b and then r_e from the all-zero start. The DFT sweep spends N/2
/// trials per partition.
PhaseRun optimize_phases(const ScenarioConfig& sc, const ChannelSet& ch, Algorithm algorithm,
                         std::uint64_t seed);

CsvTable trace_table(const PhaseRun& run);

/// One row per grid point: alpha1, c_bob, c_eve, c_secrecy, sinr_bob_db, sinr_eve_db, algorithm.
/// c_secrecy is computed from the printed c_bob and c_eve.
void append_alpha_sweep(CsvTable& table, const AllocationModel& model, int grid,
                        const std::string& label);
CsvTable alpha_sweep_table();

struct PowerSweepPoint {
  double pt_dbm = 0.0;
  AllocationSolution solution;
};

/// Solves the allocation at every transmit power with gamma_e = eta * gamma_b.
/// Points run concurrently; the result is in sweep order.
std::vector<PowerSweepPoint> sweep_power(const ScenarioConfig& sc, const ChannelSet& ch,
                                         const PhaseConfig& cfg, double eta, double gamma_bob,
                                         const std::vector<double>& pt_dbm, int grid);

CsvTable power_sweep_table(const std::vector<PowerSweepPoint>& points);
CsvTable solution_table(const AllocationSolution& sol);
CsvTable channel_table(const ChannelSet& ch);

struct ExperimentSpec {
  Command command = Command::optimize_phases;
  std::filesystem::path scenario;
  Algorithm algorithm = Algorithm::iterative;
  std::uint64_t seed = 1;
  int alpha_grid = 101;
  std::optional<double> eta;
  std::optional<double> gamma_bob_db;
  std::vector<double> pt_sweep_dbm;  // empty -> -30..10 dBm in 2 dB steps
  std::optional<std::filesystem::path> phases;
  std::optional<std::filesystem::path> config_out;
  std::optional<double> capacity_ratio;
  bool unconstrained = false;
  bool with_zero = false;
  std::filesystem::path out;
};

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;

/// Executes one command and writes its CSV. Input problems raise InputError.
int run(const ExperimentSpec& spec);

}  // namespace rispls

#endif
