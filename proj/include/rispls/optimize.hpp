#ifndef RISPLS_OPTIMIZE_HPP
#define RISPLS_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rispls/channel.hpp"
#include "rispls/ris.hpp"
#include "rispls/secrecy.hpp"

namespace rispls {

// ---------------------------------------------------------------------------
// Phase search
// ---------------------------------------------------------------------------

/// Which received power an oracle reports.
enum class Objective {
  cs_at_bob,  // communication signal power at Bob, tunes r_b
  an_at_eve,  // artificial noise power at Eve, tunes r_e
};

inline Objective objective_for(Partition p) {
  return p == Partition::bob ? Objective::cs_at_bob : Objective::an_at_eve;
}

/// Black-box power measurement, the only feedback the phase searches get.
/// `measure` must be deterministic and safe to call concurrently.
struct MeasurementOracle {
  Objective objective = Objective::cs_at_bob;
  std::function<double(const PhaseConfig&)> measure;

  double operator()(const PhaseConfig& cfg) const { return measure(cfg); }
};

/// Simulated measurement: the selected signal transmitted alone at the
/// scenario's full power, received through both RIS halves. Watts.
MeasurementOracle channel_oracle(const ScenarioConfig& sc, const ChannelSet& ch, Objective obj);

struct TraceEntry {
  int trial = 0;            // 1-based, strictly increasing
  double power = 0.0;       // watts measured at this trial
  double best_power = 0.0;  // best seen so far, watts
  int best_trial = 0;       // trial that produced the best configuration, 0 = start
};

struct OptimizationTrace {
  Partition partition = Partition::bob;
  std::vector<TraceEntry> entries;
};

struct PhaseSearchResult {
  PhaseConfig config;
  OptimizationTrace trace;
  double best_power = 0.0;
  int oracle_calls = 0;
};

/// Coordinate ascent over one partition. Each pass visits every element once in
/// a seeded random order, measures the flipped phase against the cached
/// incumbent and keeps the flip only if it strictly raises the power.
PhaseSearchResult iterative_optimize(const MeasurementOracle& oracle, const PhaseConfig& start,
                                     Partition which, std::uint64_t seed, int passes = 1);

/// Applies each codeword to `which` with the other partition held at 0 and keeps
/// the best. If `trial_budget` exceeds the codebook size, the sweep is padded
/// with seeded random binary codewords; 0 means codebook only. The returned
/// config is `start` with only `which` replaced.
PhaseSearchResult dft_sweep(const MeasurementOracle& oracle, const PhaseConfig& start,
                            Partition which, const Codebook& cb, std::uint64_t seed,
                            std::size_t trial_budget = 0);

struct ExhaustiveResult {
  PhaseConfig config;
  double power = 0.0;
};

inline constexpr int kMaxExhaustiveElements = 20;

/// Global maximizer over all 2^n binary settings of partition `which`, the rest
/// of `base` held fixed. Ties keep the lexicographically smallest setting.
ExhaustiveResult exhaustive_search(const MeasurementOracle& oracle, const PhaseConfig& base,
                                   Partition which);

// ---------------------------------------------------------------------------
// Power allocation
// ---------------------------------------------------------------------------

/// Capacities as a function of alpha1 for a fixed configuration; the
/// channel-dependent part is computed once.
class AllocationModel {
public:
  AllocationModel(const ScenarioConfig& sc, const ChannelSet& ch, const PhaseConfig& cfg);
  AllocationModel(const LinkGains& gains, double pt_watts, double noise_bob, double noise_eve);

  CapacityReport report(double alpha1) const;
  LinkPowers powers(double alpha1) const;

  const LinkGains& gains() const { return gains_; }

private:
  LinkGains gains_;
  double pt_watts_;
  double noise_bob_;
  double noise_eve_;
};

enum class Binding { none, bob_min, eve_max, both };

std::string to_string(Binding b);

struct AllocationSolution {
  double alpha1 = 0.0;
  bool feasible = false;
  CapacityReport report;
  Binding binding = Binding::none;
};

inline constexpr double kSinrTolerance = 1e-9;
inline constexpr double kAlphaTolerance = 1e-5;

/// True when Bob's SINR meets the floor and Eve's stays under the ceiling.
bool satisfies(const CapacityReport& r, const SecrecyThresholds& th);

/// Maximizes secrecy capacity over alpha1 in [0, 1] subject to the SINR
/// thresholds: uniform grid scan, then golden-section refinement inside the
/// feasible part of the bracket around the best feasible grid point.
/// With no feasible grid point, returns the point of least violation with
/// feasible = false.
AllocationSolution optimize_alpha(const AllocationModel& model, const SecrecyThresholds& th,
                                  int grid);

AllocationSolution optimize_alpha(const ScenarioConfig& sc, const ChannelSet& ch,
                                  const PhaseConfig& cfg, const SecrecyThresholds& th, int grid);

/// Largest alpha1 > 0 with C_e <= ratio * C_b, located on the grid and then
/// refined by bisection. Throws Infeasible if no positive alpha1 qualifies.
double capacity_ratio_alpha(const AllocationModel& model, double ratio, int grid);

double capacity_ratio_alpha(const ScenarioConfig& sc, const ChannelSet& ch,
                            const PhaseConfig& cfg, double ratio, int grid);

/// Maximizer of f on [lo, hi] for unimodal f, to absolute tolerance `tol`.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

}  // namespace rispls

#endif
