#include "rispls/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>

#include "rispls/rng.hpp"

namespace rispls {

namespace {

// RNG stream tags, one per (use, partition)
constexpr std::uint32_t kIterativeStream = 1;
constexpr std::uint32_t kPaddingStream = 3;

std::uint32_t stream_for(std::uint32_t base, Partition p) {
  return base + (p == Partition::eve ? 1u : 0u);
}

double flipped(double theta) { return theta == kPhaseFlip ? kPhaseOff : kPhaseFlip; }

void check_partition(const PhaseConfig& cfg, Partition which) {
  if (cfg.indices(which).empty()) {
    throw InputError("partition " + std::string(to_string(which)) + " is empty");
  }
  if (!cfg.phases.unaryExpr([](double t) { return is_binary_phase(t); }).all()) {
    throw InputError("start configuration must be binary");
  }
}

}  // namespace

MeasurementOracle channel_oracle(const ScenarioConfig& sc, const ChannelSet& ch, Objective obj) {
  auto shared = std::make_shared<const ChannelSet>(ch);
  const double pt = sc.pt_watts();
  const Source src = obj == Objective::cs_at_bob ? Source::cs : Source::an;
  const User user = obj == Objective::cs_at_bob ? User::bob : User::eve;
  return MeasurementOracle{obj, [shared, pt, src, user](const PhaseConfig& cfg) {
                             if (cfg.size() != shared->size()) {
                               throw InputError("configuration size does not match the channel set");
                             }
                             double total = 0.0;
                             for (const Partition p : {Partition::bob, Partition::eve}) {
                               const auto G = cascaded_gain(shared->incoming(src), shared->outgoing(user),
                                                            cfg.phases, shared->indices(p));
                               total += shared->L(src, p, user) * std::norm(G);
                             }
                             return pt * total;
                           }};
}

PhaseSearchResult iterative_optimize(const MeasurementOracle& oracle, const PhaseConfig& start,
                                     Partition which, std::uint64_t seed, int passes) {
  check_partition(start, which);
  if (passes < 1) throw InputError("iterative_optimize needs at least one pass");

  auto eng = make_engine(seed, stream_for(kIterativeStream, which));
  PhaseSearchResult res{start, OptimizationTrace{which, {}}, 0.0, 0};
  res.best_power = oracle(res.config);
  res.oracle_calls = 1;

  int trial = 0;
  int best_trial = 0;
  for (int pass = 0; pass < passes; ++pass) {
    std::vector<int> order = start.indices(which);
    shuffle(order, eng);
    for (const int n : order) {
      PhaseConfig candidate = res.config;
      candidate.phases[n] = flipped(candidate.phases[n]);
      const double power = oracle(candidate);
      ++res.oracle_calls;
      ++trial;
      if (power > res.best_power) {
        res.config = std::move(candidate);
        res.best_power = power;
        best_trial = trial;
      }
      res.trace.entries.push_back({trial, power, res.best_power, best_trial});
    }
  }
  return res;
}

PhaseSearchResult dft_sweep(const MeasurementOracle& oracle, const PhaseConfig& start,
                            Partition which, const Codebook& cb, std::uint64_t seed,
                            std::size_t trial_budget) {
  if (cb.codewords.empty()) throw InputError("dft_sweep: empty codebook");
  check_partition(start, which);
  const Partition other = which == Partition::bob ? Partition::eve : Partition::bob;
  const auto m = static_cast<Eigen::Index>(start.indices(which).size());

  std::vector<Eigen::ArrayXd> words;
  const std::size_t budget = trial_budget == 0 ? cb.size() : trial_budget;
  for (std::size_t i = 0; i < std::min(budget, cb.size()); ++i) words.push_back(cb.codewords[i]);

  if (words.size() < budget) {
    // random binary padding, kept distinct from everything already queued
    auto eng = make_engine(seed, stream_for(kPaddingStream, which));
    const bool space_small = m < 63;
    const std::uint64_t space = space_small ? (std::uint64_t{1} << m) : 0;
    const auto key = [](const Eigen::ArrayXd& w) {
      std::string k(static_cast<std::size_t>(w.size()), '0');
      for (Eigen::Index i = 0; i < w.size(); ++i) if (w[i] == kPhaseFlip) k[static_cast<std::size_t>(i)] = '1';
      return k;
    };
    std::set<std::string> seen;
    for (const auto& w : words) seen.insert(key(w));
    while (words.size() < budget && (!space_small || seen.size() < space)) {
      Eigen::ArrayXd w(m);
      for (Eigen::Index i = 0; i < m; ++i) w[i] = (eng() >> 63) ? kPhaseFlip : kPhaseOff;
      if (seen.insert(key(w)).second) words.push_back(std::move(w));
    }
  }

  const PhaseConfig probe_base = set_partition(start, other, Eigen::ArrayXd::Zero(
                                                                 static_cast<Eigen::Index>(start.indices(other).size())));
  PhaseSearchResult res{start, OptimizationTrace{which, {}}, -std::numeric_limits<double>::infinity(), 0};
  std::size_t best_word = 0;
  int best_trial = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const double power = oracle(set_partition(probe_base, which, words[i]));
    ++res.oracle_calls;
    const int trial = static_cast<int>(i) + 1;
    if (power > res.best_power) {
      res.best_power = power;
      best_word = i;
      best_trial = trial;
    }
    res.trace.entries.push_back({trial, power, res.best_power, best_trial});
  }
  res.config = set_partition(start, which, words[best_word]);
  return res;
}

ExhaustiveResult exhaustive_search(const MeasurementOracle& oracle, const PhaseConfig& base,
                                   Partition which) {
  check_partition(base, which);
  const auto& idx = base.indices(which);
  const int n = static_cast<int>(idx.size());
  if (n > kMaxExhaustiveElements) {
    throw InputError("exhaustive_search: partition of " + std::to_string(n) +
                     " elements exceeds the limit of " + std::to_string(kMaxExhaustiveElements));
  }
  // Settings are enumerated so that element idx[0] is the most significant bit,
  // which makes the first maximum the lexicographically smallest one.
  ExhaustiveResult best{base, -std::numeric_limits<double>::infinity()};
  PhaseConfig cfg = base;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (int i = 0; i < n; ++i) {
      cfg.phases[idx[i]] = (mask >> (n - 1 - i)) & 1u ? kPhaseFlip : kPhaseOff;
    }
    const double power = oracle(cfg);
    if (power > best.power) {
      best.power = power;
      best.config = cfg;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

AllocationModel::AllocationModel(const ScenarioConfig& sc, const ChannelSet& ch,
                                 const PhaseConfig& cfg)
    : AllocationModel(link_gains(ch, cfg), sc.pt_watts(), sc.noise_bob_watts(), sc.noise_eve_watts()) {}

AllocationModel::AllocationModel(const LinkGains& gains, double pt_watts, double noise_bob,
                                 double noise_eve)
    : gains_(gains), pt_watts_(pt_watts), noise_bob_(noise_bob), noise_eve_(noise_eve) {}

LinkPowers AllocationModel::powers(double alpha1) const {
  return link_powers(gains_, pt_watts_, PowerSplit::from_alpha1(alpha1), noise_bob_, noise_eve_);
}

CapacityReport AllocationModel::report(double alpha1) const {
  return capacity_report(powers(alpha1));
}

std::string to_string(Binding b) {
  switch (b) {
    case Binding::none: return "none";
    case Binding::bob_min: return "C1";
    case Binding::eve_max: return "C2";
    case Binding::both: return "C1+C2";
  }
  return "none";
}

bool satisfies(const CapacityReport& r, const SecrecyThresholds& th) {
  return r.sinr_bob >= th.gamma_bob_min - kSinrTolerance &&
         r.sinr_eve <= th.gamma_eve_max + kSinrTolerance;
}

namespace {

double violation(const CapacityReport& r, const SecrecyThresholds& th) {
  double v = 0.0;
  if (r.sinr_bob < th.gamma_bob_min) v += th.gamma_bob_min - r.sinr_bob;
  if (r.sinr_eve > th.gamma_eve_max) v += r.sinr_eve - th.gamma_eve_max;
  return v;
}

Binding binding_of(const CapacityReport& r, const SecrecyThresholds& th, bool feasible) {
  bool c1, c2;
  if (feasible) {
    const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)); };
    c1 = near(r.sinr_bob, th.gamma_bob_min);
    c2 = std::isfinite(th.gamma_eve_max) && near(r.sinr_eve, th.gamma_eve_max);
  } else {
    c1 = r.sinr_bob < th.gamma_bob_min - kSinrTolerance;
    c2 = r.sinr_eve > th.gamma_eve_max + kSinrTolerance;
  }
  if (c1 && c2) return Binding::both;
  if (c1) return Binding::bob_min;
  if (c2) return Binding::eve_max;
  return Binding::none;
}

/// Feasibility edge between `bad` (infeasible) and `good` (feasible); returns a feasible point.
template <typename Pred>
double bisect_edge(const Pred& ok, double bad, double good) {
  for (int i = 0; i < 200 && std::abs(good - bad) > 1e-13; ++i) {
    const double mid = 0.5 * (bad + good);
    (ok(mid) ? good : bad) = mid;
  }
  return good;
}

double grid_point(int i, int grid) {
  return i == grid - 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(grid - 1);
}

}  // namespace

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    }
  }
  return 0.5 * (a + b);
}

AllocationSolution optimize_alpha(const AllocationModel& model, const SecrecyThresholds& th,
                                  int grid) {
  if (grid < 2) throw InputError("alpha grid needs at least 2 points");

  std::vector<CapacityReport> reports(static_cast<std::size_t>(grid));
  int best = -1;
  int least_violating = 0;
  double least_violation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const auto& r = reports[static_cast<std::size_t>(i)] = model.report(grid_point(i, grid));
    if (satisfies(r, th)) {
      if (best < 0 || r.c_secrecy > reports[static_cast<std::size_t>(best)].c_secrecy) best = i;
    } else if (const double v = violation(r, th); v < least_violation) {
      least_violation = v;
      least_violating = i;
    }
  }

  if (best < 0) {
    AllocationSolution sol;
    sol.alpha1 = grid_point(least_violating, grid);
    sol.feasible = false;
    sol.report = reports[static_cast<std::size_t>(least_violating)];
    sol.binding = binding_of(sol.report, th, false);
    return sol;
  }

  const auto feasible = [&](double a) { return satisfies(model.report(a), th); };
  const double center = grid_point(best, grid);
  double lo = center, hi = center;
  if (best > 0) {
    const double left = grid_point(best - 1, grid);
    lo = feasible(left) ? left : bisect_edge(feasible, left, center);
  }
  if (best < grid - 1) {
    const double right = grid_point(best + 1, grid);
    hi = feasible(right) ? right : bisect_edge(feasible, right, center);
  }

  const auto objective = [&](double a) {
    const auto r = model.report(a);
    return satisfies(r, th) ? r.c_secrecy : -std::numeric_limits<double>::infinity();
  };
  double alpha = center;
  double value = objective(center);
  const double refined = hi > lo ? golden_section_max(objective, lo, hi, kAlphaTolerance) : center;
  for (const double cand : {refined, lo, hi}) {
    const double v = objective(cand);
    if (v > value) {
      value = v;
      alpha = cand;
    }
  }

  AllocationSolution sol;
  sol.alpha1 = alpha;
  sol.feasible = true;
  sol.report = model.report(alpha);
  sol.binding = binding_of(sol.report, th, true);
  return sol;
}

AllocationSolution optimize_alpha(const ScenarioConfig& sc, const ChannelSet& ch,
                                  const PhaseConfig& cfg, const SecrecyThresholds& th, int grid) {
  return optimize_alpha(AllocationModel(sc, ch, cfg), th, grid);
}

double capacity_ratio_alpha(const AllocationModel& model, double ratio, int grid) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw InputError("capacity ratio must lie in (0, 1)");
  if (grid < 2) throw InputError("alpha grid needs at least 2 points");
  const auto ok = [&](double a) {
    const auto r = model.report(a);
    return r.c_eve <= ratio * r.c_bob;
  };
  for (int i = grid - 1; i >= 1; --i) {
    const double a = grid_point(i, grid);
    if (!ok(a)) continue;
    if (i == grid - 1) return a;
    return bisect_edge(ok, grid_point(i + 1, grid), a);
  }
  // the first grid step may still hold a feasible sliver
  const double first = grid_point(1, grid);
  const double probe = first * 1e-6;
  if (ok(probe)) return bisect_edge(ok, first, probe);
  throw Infeasible("no alpha1 > 0 keeps Eve's capacity within the requested ratio of Bob's");
}

double capacity_ratio_alpha(const ScenarioConfig& sc, const ChannelSet& ch,
                            const PhaseConfig& cfg, double ratio, int grid) {
  return capacity_ratio_alpha(AllocationModel(sc, ch, cfg), ratio, grid);
}

}  // namespace rispls
