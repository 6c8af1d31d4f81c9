#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rispls/optimize.hpp"

using namespace rispls;

namespace {

/// Oracle computing the measured power from the raw complex sums, bypassing
/// the library's normalized path-loss route.
MeasurementOracle raw_oracle(const ScenarioConfig& sc, const ChannelSet& ch, Objective obj) {
  const auto to_vec = [](const Eigen::ArrayXd& a) { return std::vector<double>(a.data(), a.data() + a.size()); };
  const auto& in = obj == Objective::cs_at_bob ? ch.h_s : ch.h_a;
  const auto& out = obj == Objective::cs_at_bob ? ch.h_b : ch.h_e;
  const auto ai = to_vec(in.amplitude), pi = to_vec(in.phase);
  const auto ao = to_vec(out.amplitude), po = to_vec(out.phase);
  const double pt = sc.pt_watts();
  const auto split = ch.split;
  return MeasurementOracle{obj, [=](const PhaseConfig& cfg) {
                             const std::vector<double> th(cfg.phases.data(), cfg.phases.data() + cfg.size());
                             return pt * (std::norm(oracle::raw_cascade(ai, pi, ao, po, th, split.bob)) +
                                          std::norm(oracle::raw_cascade(ai, pi, ao, po, th, split.eve)));
                           }};
}

/// The eight unit-power gains of a configuration, from raw sums.
std::array<double, 8> raw_gains(const ChannelSet& ch, const PhaseConfig& cfg) {
  const auto to_vec = [](const Eigen::ArrayXd& a) { return std::vector<double>(a.data(), a.data() + a.size()); };
  const std::vector<double> th(cfg.phases.data(), cfg.phases.data() + cfg.size());
  std::array<double, 8> g{};
  for (int k = 0; k < 8; ++k) {
    const auto& r = kBetaRoutes[k];
    const auto& in = ch.incoming(r.source);
    const auto& out = ch.outgoing(r.user);
    g[static_cast<std::size_t>(k)] = std::norm(oracle::raw_cascade(
        to_vec(in.amplitude), to_vec(in.phase), to_vec(out.amplitude), to_vec(out.phase), th,
        ch.indices(r.partition)));
  }
  return g;
}

PhaseConfig random_config(const PhaseConfig& base, std::mt19937_64& eng) {
  auto cfg = base;
  for (int n = 0; n < cfg.size(); ++n) cfg.phases[n] = (eng() & 1) ? kPhaseFlip : kPhaseOff;
  return cfg;
}

MeasurementOracle table_oracle(std::map<std::vector<int>, double> table, const PhaseConfig& like) {
  (void)like;
  return MeasurementOracle{Objective::cs_at_bob, [table](const PhaseConfig& cfg) {
                             std::vector<int> key(static_cast<std::size_t>(cfg.size()));
                             for (int n = 0; n < cfg.size(); ++n) key[static_cast<std::size_t>(n)] = cfg.phases[n] == kPhaseFlip;
                             const auto it = table.find(key);
                             return it == table.end() ? 0.0 : it->second;
                           }};
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("iterative_optimize: single element takes the better phase") {
  // zero_config(2): element 0 is r_e, element 1 is r_b
  const auto start = zero_config(2);
  const auto oracle = table_oracle({{{0, 0}, 1.0}, {{0, 1}, 2.0}}, start);
  const auto res = iterative_optimize(oracle, start, Partition::bob, 5);
  CHECK(res.config.phases[1] == kPhaseFlip);
  CHECK(res.config.phases[0] == kPhaseOff);
  CHECK(res.best_power == 2.0);
  CHECK(res.oracle_calls == 2);
  REQUIRE(res.trace.entries.size() == 1);
  CHECK(res.trace.entries[0].best_trial == 1);
}

TEST_CASE("iterative_optimize: constant oracle keeps the start") {
  RisGeometry g;
  g.rows = 2;
  g.cols = 4;
  auto start = zero_config(g);
  start.phases[2] = kPhaseFlip;
  start.phases[7] = kPhaseFlip;
  const MeasurementOracle flat{Objective::cs_at_bob, [](const PhaseConfig&) { return 3.0; }};
  for (const Partition p : {Partition::bob, Partition::eve}) {
    const auto res = iterative_optimize(flat, start, p, 11);
    CHECK(res.config == start);
    for (const auto& e : res.trace.entries) {
      CHECK(e.best_power == 3.0);
      CHECK(e.best_trial == 0);
    }
  }
}

TEST_CASE("iterative_optimize: visits each element once, caches the incumbent") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  const auto start = zero_config(sc.ris);
  const auto base = channel_oracle(sc, ch, Objective::cs_at_bob);
  int calls = 0;
  const MeasurementOracle spy{Objective::cs_at_bob, [&](const PhaseConfig& cfg) {
                                ++calls;
                                return base(cfg);
                              }};
  const auto res = iterative_optimize(spy, start, Partition::bob, 3);
  CHECK(calls == 129);
  CHECK(res.oracle_calls == 129);
  CHECK(calls <= sc.ris.size());
  REQUIRE(res.trace.entries.size() == 128);

  // the r_e half is untouched
  for (int n : start.split.eve) CHECK(res.config.phases[n] == kPhaseOff);

  SUBCASE("visit order is a permutation of the partition") {
    // with a flat oracle no flip is accepted, so each probe differs from the
    // start in exactly the visited element
    std::vector<int> visited;
    const MeasurementOracle recorder{Objective::cs_at_bob, [&](const PhaseConfig& cfg) {
                                       for (int n = 0; n < cfg.size(); ++n)
                                         if (cfg.phases[n] != start.phases[n]) visited.push_back(n);
                                       return 1.0;
                                     }};
    iterative_optimize(recorder, start, Partition::bob, 3);
    REQUIRE(visited.size() == 128);
    auto sorted = visited;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == start.split.bob);
    CHECK(visited != start.split.bob);
  }
}

TEST_CASE("iterative_optimize: trace is monotone and reproducible") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  const auto start = zero_config(sc.ris);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const Partition p : {Partition::bob, Partition::eve}) {
      const auto oracle = channel_oracle(sc, ch, objective_for(p));
      const auto a = iterative_optimize(oracle, start, p, seed);
      const auto b = iterative_optimize(oracle, start, p, seed);
      CHECK(a.config == b.config);
      REQUIRE(a.trace.entries.size() == b.trace.entries.size());
      double prev = oracle(start);
      for (std::size_t i = 0; i < a.trace.entries.size(); ++i) {
        const auto& e = a.trace.entries[i];
        CHECK(e.trial == static_cast<int>(i) + 1);
        CHECK(e.best_power >= prev);
        CHECK(e.best_power >= e.power);
        CHECK(e.power == b.trace.entries[i].power);
        prev = e.best_power;
      }
      CHECK(a.best_power == prev);
      CHECK(oracle(a.config) == a.best_power);
    }
  }
  const auto oracle = channel_oracle(sc, ch, Objective::cs_at_bob);
  CHECK_FALSE(iterative_optimize(oracle, start, Partition::bob, 1).config ==
              iterative_optimize(oracle, start, Partition::bob, 2).config);
}

TEST_CASE("iterative_optimize: extra passes never lose power") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  const auto oracle = channel_oracle(sc, ch, Objective::cs_at_bob);
  const auto one = iterative_optimize(oracle, zero_config(sc.ris), Partition::bob, 9, 1);
  const auto three = iterative_optimize(oracle, zero_config(sc.ris), Partition::bob, 9, 3);
  CHECK(three.trace.entries.size() == 384);
  CHECK(three.best_power >= one.best_power);
  CHECK_THROWS_AS(iterative_optimize(oracle, zero_config(sc.ris), Partition::bob, 9, 0), InputError);
}

TEST_CASE("iterative_optimize: 2-element partition reaches the exhaustive optimum") {
  std::mt19937_64 eng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sc = oracle::random_scenario(eng, 1, 4);
    const auto ch = build_channel_set(sc);
    for (const Partition p : {Partition::bob, Partition::eve}) {
      const auto oracle = raw_oracle(sc, ch, objective_for(p));
      const auto start = zero_config(sc.ris);
      const auto best = exhaustive_search(oracle, start, p);
      const auto it = iterative_optimize(oracle, start, p, static_cast<std::uint64_t>(trial));
      CHECK(it.best_power == doctest::Approx(best.power).epsilon(1e-12));
    }
  }
}

TEST_CASE("iterative_optimize: errors") {
  const auto start = zero_config(2);
  const MeasurementOracle failing{Objective::cs_at_bob,
                                  [](const PhaseConfig&) -> double { throw std::runtime_error("probe lost"); }};
  CHECK_THROWS_WITH(iterative_optimize(failing, start, Partition::bob, 1), "probe lost");
  auto bad = start;
  bad.phases[0] = 1.0;
  const MeasurementOracle flat{Objective::cs_at_bob, [](const PhaseConfig&) { return 1.0; }};
  CHECK_THROWS_AS(iterative_optimize(flat, bad, Partition::bob, 1), InputError);
}

// ---------------------------------------------------------------------------

TEST_CASE("dft_sweep: all-zero codebook returns the zero partition") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  auto start = zero_config(sc.ris);
  for (int n : start.split.bob) start.phases[n] = kPhaseFlip;
  Codebook cb;
  cb.codewords.push_back(Eigen::ArrayXd::Zero(128));
  const auto res = dft_sweep(channel_oracle(sc, ch, Objective::cs_at_bob), start, Partition::bob, cb, 1);
  CHECK(res.config == zero_config(sc.ris));
  CHECK(res.trace.entries.size() == 1);
  CHECK(res.oracle_calls == 1);
}

TEST_CASE("dft_sweep: holds the other partition at zero while probing") {
  RisGeometry g;
  g.rows = 1;
  g.cols = 4;
  auto start = zero_config(g);
  start.phases[0] = kPhaseFlip;  // r_e element
  const MeasurementOracle check{Objective::cs_at_bob, [](const PhaseConfig& cfg) {
                                  REQUIRE(cfg.phases[0] == kPhaseOff);
                                  REQUIRE(cfg.phases[1] == kPhaseOff);
                                  return cfg.phases[3] == kPhaseFlip ? 2.0 : 1.0;
                                }};
  const auto res = dft_sweep(check, start, Partition::bob, binary_dft_codebook(2), 1);
  // the returned config keeps r_e from the start
  CHECK(res.config.phases[0] == kPhaseFlip);
  CHECK(res.config.phases[3] == kPhaseFlip);
  CHECK(res.best_power == 2.0);
}

TEST_CASE("dft_sweep: codebook containing the optimum returns it") {
  std::mt19937_64 eng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sc = oracle::random_scenario(eng, 2, 4);
    const auto ch = build_channel_set(sc);
    const auto oracle = raw_oracle(sc, ch, Objective::cs_at_bob);
    const auto start = zero_config(sc.ris);
    const auto best = exhaustive_search(oracle, start, Partition::bob);
    Codebook cb = binary_dft_codebook(4);
    cb.codewords.push_back(best.config.partition_phases(Partition::bob));
    const auto res = dft_sweep(oracle, start, Partition::bob, cb, 1);
    CHECK(res.best_power == best.power);
    CHECK(oracle(res.config) == best.power);
  }
}

TEST_CASE("dft_sweep: 4-element partition against exhaustive search") {
  std::mt19937_64 eng(12);
  int equal = 0, below = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto sc = oracle::random_scenario(eng, 2, 4);
    const auto ch = build_channel_set(sc);
    for (const Partition p : {Partition::bob, Partition::eve}) {
      const auto oracle = raw_oracle(sc, ch, objective_for(p));
      const auto start = zero_config(sc.ris);
      const auto best = exhaustive_search(oracle, start, p);
      const auto cb = binary_dft_codebook(4);
      const auto res = dft_sweep(oracle, start, p, cb, 1);
      CHECK(res.best_power <= best.power);

      // a partition measured alone is invariant under a global flip, so the
      // optimum counts as present when either it or its complement is listed
      const Eigen::ArrayXd opt = best.config.partition_phases(p);
      const Eigen::ArrayXd comp = (opt == kPhaseFlip).select(Eigen::ArrayXd::Zero(opt.size()),
                                                             Eigen::ArrayXd::Constant(opt.size(), kPhaseFlip));
      bool present = false;
      for (const auto& w : cb.codewords) present = present || (w == opt).all() || (w == comp).all();
      // any other maximizer in the codebook also yields equality
      bool tied = false;
      for (const auto& w : cb.codewords)
        tied = tied || std::abs(oracle(set_partition(start, p, w)) - best.power) <= 1e-12 * best.power;
      const bool eq = std::abs(res.best_power - best.power) <= 1e-12 * best.power;
      if (present) CHECK(eq);
      CHECK(eq == tied);
      (eq ? equal : below)++;
    }
  }
  CHECK(equal > 0);
  CHECK(below > 0);
}

TEST_CASE("dft_sweep: padding") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  const auto oracle = channel_oracle(sc, ch, Objective::cs_at_bob);
  const auto start = zero_config(sc.ris);
  const auto cb = binary_dft_codebook(128);
  REQUIRE(cb.size() < 128);

  const auto plain = dft_sweep(oracle, start, Partition::bob, cb, 1);
  CHECK(plain.trace.entries.size() == cb.size());

  const auto padded = dft_sweep(oracle, start, Partition::bob, cb, 1, 128);
  CHECK(padded.trace.entries.size() == 128);
  CHECK(padded.best_power >= plain.best_power);
  for (std::size_t i = 0; i < cb.size(); ++i) CHECK(padded.trace.entries[i].power == plain.trace.entries[i].power);

  const auto again = dft_sweep(oracle, start, Partition::bob, cb, 1, 128);
  CHECK(again.config == padded.config);
  const auto other = dft_sweep(oracle, start, Partition::bob, cb, 2, 128);
  bool differs = false;
  for (std::size_t i = cb.size(); i < 128; ++i)
    differs = differs || other.trace.entries[i].power != padded.trace.entries[i].power;
  CHECK(differs);

  // trace: strictly increasing trial numbers, best-so-far consistent
  double best = -1.0;
  for (std::size_t i = 0; i < padded.trace.entries.size(); ++i) {
    const auto& e = padded.trace.entries[i];
    CHECK(e.trial == static_cast<int>(i) + 1);
    best = std::max(best, e.power);
    CHECK(e.best_power == best);
  }

  // a tiny partition cannot be padded past its 2^m distinct words
  const auto tiny = zero_config(4);
  const auto small = dft_sweep(MeasurementOracle{Objective::cs_at_bob, [](const PhaseConfig&) { return 1.0; }},
                               tiny, Partition::bob, binary_dft_codebook(2), 1, 50);
  CHECK(small.trace.entries.size() == 4);
}

TEST_CASE("dft_sweep: errors") {
  const MeasurementOracle flat{Objective::cs_at_bob, [](const PhaseConfig&) { return 1.0; }};
  CHECK_THROWS_AS(dft_sweep(flat, zero_config(4), Partition::bob, Codebook{}, 1), InputError);
}

// ---------------------------------------------------------------------------

TEST_CASE("exhaustive_search") {
  SUBCASE("one element: best of two") {
    const auto start = zero_config(2);
    const auto oracle = table_oracle({{{0, 0}, 5.0}, {{0, 1}, 4.0}}, start);
    const auto res = exhaustive_search(oracle, start, Partition::bob);
    CHECK(res.power == 5.0);
    CHECK(res.config == start);
  }
  SUBCASE("two elements: coherent sum with opposite passive phases") {
    // a = 1, passive phases {0, pi}: the maximum 2 is reached by (0, pi) and
    // its global flip (pi, 0); the first in enumeration order is returned
    RisGeometry g;
    g.rows = 1;
    g.cols = 4;
    const auto start = zero_config(g);
    const MeasurementOracle coherent{Objective::cs_at_bob, [](const PhaseConfig& cfg) {
                                       const auto s = std::polar(1.0, -cfg.phases[2]) +
                                                      std::polar(1.0, -(oracle::kPi + cfg.phases[3]));
                                       return std::norm(s) / 2.0;
                                     }};
    const auto res = exhaustive_search(coherent, start, Partition::bob);
    CHECK(res.power == doctest::Approx(2.0));
    CHECK(res.config.phases[2] == kPhaseOff);
    CHECK(res.config.phases[3] == kPhaseFlip);
  }
  SUBCASE("limits") {
    RisGeometry g;
    g.rows = 1;
    g.cols = 42;
    const MeasurementOracle flat{Objective::cs_at_bob, [](const PhaseConfig&) { return 1.0; }};
    CHECK_THROWS_AS(exhaustive_search(flat, zero_config(g), Partition::bob), InputError);
  }
}

// ---------------------------------------------------------------------------

TEST_CASE("golden_section_max") {
  const auto f = [](double x) { return -(x - 0.3) * (x - 0.3); };
  CHECK(golden_section_max(f, 0.0, 1.0, 1e-8) == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(golden_section_max([](double x) { return x; }, 0.0, 1.0, 1e-6) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("optimize_alpha: unconstrained reference argmax sits near one") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  auto cfg = zero_config(sc.ris);
  cfg = iterative_optimize(channel_oracle(sc, ch, Objective::cs_at_bob), cfg, Partition::bob, 1).config;
  cfg = iterative_optimize(channel_oracle(sc, ch, Objective::an_at_eve), cfg, Partition::eve, 1).config;
  const auto sol = optimize_alpha(sc, ch, cfg, SecrecyThresholds::unconstrained(), 101);
  CHECK(sol.feasible);
  CHECK(sol.alpha1 >= 0.95);
  CHECK(sol.alpha1 < 1.0);
  CHECK(sol.binding == Binding::none);
  CHECK(to_string(sol.binding) == "none");
}

TEST_CASE("optimize_alpha: zero SINR ceiling at Eve") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  const auto cfg = zero_config(sc.ris);
  SecrecyThresholds th;
  th.gamma_bob_min = 0.0;
  th.gamma_eve_max = 0.0;
  const auto sol = optimize_alpha(sc, ch, cfg, th, 101);
  CHECK(sol.feasible);
  CHECK(sol.alpha1 <= 1e-6);
  CHECK(sol.report.sinr_eve <= kSinrTolerance);

  th.gamma_bob_min = 1.0;
  const auto none = optimize_alpha(sc, ch, cfg, th, 101);
  CHECK_FALSE(none.feasible);
  CHECK(none.binding != Binding::none);
}

TEST_CASE("optimize_alpha: infeasible returns the least violating point") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  const auto cfg = zero_config(sc.ris);
  SecrecyThresholds th;
  th.gamma_bob_min = 1e12;
  const auto sol = optimize_alpha(sc, ch, cfg, th, 51);
  CHECK_FALSE(sol.feasible);
  CHECK(sol.alpha1 == 1.0);  // Bob's SINR is largest at full CS power
  CHECK(sol.binding == Binding::bob_min);
  CHECK(to_string(sol.binding) == "C1");
  CHECK_THROWS_AS(optimize_alpha(sc, ch, cfg, th, 1), InputError);
}

TEST_CASE("optimize_alpha: agrees with a dense brute-force grid") {
  std::mt19937_64 eng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto sc = oracle::random_scenario(eng, 4, 4);
    const auto ch = build_channel_set(sc);
    auto cfg = zero_config(sc.ris);
    cfg = iterative_optimize(channel_oracle(sc, ch, Objective::cs_at_bob), cfg, Partition::bob, 1).config;
    cfg = iterative_optimize(channel_oracle(sc, ch, Objective::an_at_eve), cfg, Partition::eve, 1).config;
    const auto g = raw_gains(ch, cfg);
    const double pt = sc.pt_watts(), nb = sc.noise_bob_watts(), ne = sc.noise_eve_watts();

    const double top = oracle::capacities_from_gains(g.data(), pt, 1.0, nb, ne).sinr_bob;
    SecrecyThresholds th;
    switch (trial % 3) {
      case 0: th = SecrecyThresholds::unconstrained(); break;
      case 1: th = SecrecyThresholds::from_eta(top * (0.05 + 0.5 * u(eng)), 0.01 + 0.2 * u(eng)); break;
      default: th.gamma_bob_min = top * 0.3 * u(eng); break;
    }

    constexpr int kDense = 1'000'000;
    double best_a = -1.0, best_c = -1.0;
    for (int i = 0; i <= kDense; ++i) {
      const double a = static_cast<double>(i) / kDense;
      const auto p = oracle::capacities_from_gains(g.data(), pt, a, nb, ne);
      if (p.sinr_bob < th.gamma_bob_min - 1e-9 || p.sinr_eve > th.gamma_eve_max + 1e-9) continue;
      if (p.c_s > best_c) {
        best_c = p.c_s;
        best_a = a;
      }
    }
    const auto sol = optimize_alpha(sc, ch, cfg, th, 101);
    if (best_a < 0.0) {
      CHECK_FALSE(sol.feasible);
      continue;
    }
    REQUIRE(sol.feasible);

    CHECK(sol.report.c_secrecy >= best_c - 1e-7);  // alpha tolerance 1e-5 near a smooth maximum
    if (best_c > 1e-6) {
      CHECK(std::abs(sol.alpha1 - best_a) <= 1e-3);
      ++compared;
    }
  }
  CHECK(compared >= 12);
}

TEST_CASE("optimize_alpha: feasible solutions satisfy every constraint") {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sc = oracle::random_scenario(eng, 2, 4);
    const auto ch = build_channel_set(sc);
    const auto cfg = random_config(zero_config(sc.ris), eng);
    const auto th = SecrecyThresholds::from_eta(std::pow(10.0, 3 * u(eng) - 1), u(eng));
    const auto sol = optimize_alpha(sc, ch, cfg, th, 101);
    if (!sol.feasible) continue;
    const auto split = PowerSplit::from_alpha1(sol.alpha1);
    CHECK(split.alpha1 + split.alpha2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(split.alpha1 >= 0.0);
    CHECK(split.alpha2 >= 0.0);
    const auto r = capacity_report(beta_terms(sc, ch, cfg, split));
    CHECK(r.sinr_bob >= th.gamma_bob_min - kSinrTolerance);
    CHECK(r.sinr_eve <= th.gamma_eve_max + kSinrTolerance);
    CHECK(r.c_secrecy == sol.report.c_secrecy);
  }
}

TEST_CASE("optimize_alpha: common scaling of power and noise leaves the argmax") {
  auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  std::mt19937_64 eng(2);
  const auto cfg = random_config(zero_config(sc.ris), eng);
  for (const auto& th : {SecrecyThresholds::unconstrained(), SecrecyThresholds::from_eta(1.0, 0.1)}) {
    const auto base = optimize_alpha(sc, ch, cfg, th, 101);
    auto scaled = sc;
    scaled.pt_dbm += 13.0;
    scaled.noise_bob_dbm += 13.0;
    scaled.noise_eve_dbm += 13.0;
    const auto other = optimize_alpha(scaled, ch, cfg, th, 101);
    CHECK(other.feasible == base.feasible);
    CHECK(other.alpha1 == doctest::Approx(base.alpha1).epsilon(1e-4));
  }
}

TEST_CASE("optimize_alpha: binding constraint reported") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  auto cfg = zero_config(sc.ris);
  cfg = iterative_optimize(channel_oracle(sc, ch, Objective::cs_at_bob), cfg, Partition::bob, 1).config;
  cfg = iterative_optimize(channel_oracle(sc, ch, Objective::an_at_eve), cfg, Partition::eve, 1).config;
  const auto model = AllocationModel(sc, ch, cfg);
  // Eve ceiling tight enough to cut below the unconstrained argmax
  const double ceiling = model.report(0.5).sinr_eve;
  SecrecyThresholds th;
  th.gamma_eve_max = ceiling;
  const auto sol = optimize_alpha(model, th, 101);
  CHECK(sol.feasible);
  CHECK(sol.alpha1 == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(sol.binding == Binding::eve_max);
  CHECK(to_string(sol.binding) == "C2");
}

// ---------------------------------------------------------------------------

TEST_CASE("capacity_ratio_alpha") {
  const auto sc = reference_scenario();
  const auto ch = build_channel_set(sc);
  auto cfg = zero_config(sc.ris);
  cfg = iterative_optimize(channel_oracle(sc, ch, Objective::cs_at_bob), cfg, Partition::bob, 1).config;
  cfg = iterative_optimize(channel_oracle(sc, ch, Objective::an_at_eve), cfg, Partition::eve, 1).config;
  const AllocationModel model(sc, ch, cfg);

  for (double ratio : {0.01, 0.05, 0.2}) {
    const double a = capacity_ratio_alpha(model, ratio, 101);
    CHECK(a > 0.0);
    const auto r = model.report(a);
    CHECK(r.c_eve <= ratio * r.c_bob);
    if (a + 1e-4 <= 1.0) {
      const auto above = model.report(a + 1e-4);
      CHECK(above.c_eve > ratio * above.c_bob);
    }
  }
  CHECK(capacity_ratio_alpha(model, 0.01, 101) < capacity_ratio_alpha(model, 0.05, 101));

  // near-vacuous ratio reaches at least the unconstrained optimum
  const auto free = optimize_alpha(model, SecrecyThresholds::unconstrained(), 101);
  CHECK(capacity_ratio_alpha(model, 0.999, 101) >= free.alpha1 - 1e-3);

  CHECK_THROWS_AS(capacity_ratio_alpha(model, 0.0, 101), InputError);
  CHECK_THROWS_AS(capacity_ratio_alpha(model, 1.0, 101), InputError);

  LinkGains leak;
  leak.gain << 0, 0, 1, 1, 1, 1, 1, 1;
  CHECK_THROWS_AS(capacity_ratio_alpha(AllocationModel(leak, 1.0, 1.0, 1.0), 0.5, 101), Infeasible);
}
