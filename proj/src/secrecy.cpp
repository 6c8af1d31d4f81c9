#include "rispls/secrecy.hpp"

#include <cmath>
#include <string>

namespace rispls {

PowerSplit PowerSplit::from_alpha1(double alpha1) {
  PowerSplit s{alpha1, 1.0 - alpha1};
  s.validate();
  return s;
}

void PowerSplit::validate() const {
  if (!(alpha1 >= 0.0) || !(alpha2 >= 0.0) || std::abs(alpha1 + alpha2 - 1.0) > 1e-12) {
    throw InputError("power split must be non-negative and sum to 1, got (" +
                     std::to_string(alpha1) + ", " + std::to_string(alpha2) + ")");
  }
}

LinkGains link_gains(const ChannelSet& ch, const PhaseConfig& cfg) {
  if (cfg.size() != ch.size()) throw InputError("configuration and channel set sizes differ");
  LinkGains g;
  for (int k = 0; k < 8; ++k) {
    const auto& r = kBetaRoutes[k];
    const auto G = cascaded_gain(ch.incoming(r.source), ch.outgoing(r.user), cfg.phases,
                                 ch.indices(r.partition));
    g.gain[k] = ch.L(r.source, r.partition, r.user) * std::norm(G);
  }
  return g;
}

LinkPowers link_powers(const LinkGains& g, double pt_watts, PowerSplit split, double noise_bob,
                       double noise_eve) {
  split.validate();
  LinkPowers lp;
  for (int k = 0; k < 8; ++k) {
    const double share = kBetaRoutes[k].source == Source::cs ? split.alpha1 : split.alpha2;
    lp.beta[k] = std::sqrt(share * pt_watts * g.gain[k]);
  }
  lp.noise_bob = noise_bob;
  lp.noise_eve = noise_eve;
  return lp;
}

LinkPowers beta_terms(const ScenarioConfig& sc, const ChannelSet& ch, const PhaseConfig& cfg,
                      PowerSplit split) {
  return link_powers(link_gains(ch, cfg), sc.pt_watts(), split, sc.noise_bob_watts(),
                     sc.noise_eve_watts());
}

namespace {

double ratio(double signal, double interference, const char* who) {
  if (!(interference > 0.0)) {
    throw InfiniteCapacity(std::string(who) + ": interference plus noise is zero");
  }
  return signal / interference;
}

}  // namespace

Sinr sinr_values(const LinkPowers& lp) {
  const Beta sq = lp.beta.square();
  return {ratio(sq[0] + sq[1], sq[2] + sq[3] + lp.noise_bob, "Bob"),
          ratio(sq[6] + sq[7], sq[4] + sq[5] + lp.noise_eve, "Eve")};
}

Sinr sinr_from_path_loss(const ScenarioConfig& sc, const ChannelSet& ch, const PhaseConfig& cfg,
                         PowerSplit split) {
  split.validate();
  const auto term = [&](Source s, Partition p, User u) {
    const auto G = cascaded_gain(ch.incoming(s), ch.outgoing(u), cfg.phases, ch.indices(p));
    return ch.L(s, p, u) * std::norm(G);
  };
  using enum Source;
  const double pt = sc.pt_watts();
  const double bob_sig = split.alpha1 * pt * (term(cs, Partition::bob, User::bob) + term(cs, Partition::eve, User::bob));
  const double bob_int = split.alpha2 * pt * (term(an, Partition::eve, User::bob) + term(an, Partition::bob, User::bob));
  const double eve_sig = split.alpha1 * pt * (term(cs, Partition::bob, User::eve) + term(cs, Partition::eve, User::eve));
  const double eve_int = split.alpha2 * pt * (term(an, Partition::eve, User::eve) + term(an, Partition::bob, User::eve));
  return {ratio(bob_sig, bob_int + sc.noise_bob_watts(), "Bob"),
          ratio(eve_sig, eve_int + sc.noise_eve_watts(), "Eve")};
}

double bob_capacity(const LinkPowers& lp) { return std::log2(1.0 + sinr_values(lp).bob); }

double eve_capacity(const LinkPowers& lp) { return std::log2(1.0 + sinr_values(lp).eve); }

double secrecy_capacity(double c_bob, double c_eve) { return std::max(c_bob - c_eve, 0.0); }

CapacityReport capacity_report(const LinkPowers& lp) {
  const Sinr s = sinr_values(lp);
  CapacityReport r;
  r.sinr_bob = s.bob;
  r.sinr_eve = s.eve;
  r.c_bob = std::log2(1.0 + s.bob);
  r.c_eve = std::log2(1.0 + s.eve);
  r.c_secrecy = secrecy_capacity(r.c_bob, r.c_eve);
  return r;
}

SecrecyThresholds SecrecyThresholds::from_eta(double gamma_bob_min, double eta) {
  if (!(gamma_bob_min > 0.0)) throw InputError("gamma_bob_min must be positive");
  if (!(eta >= 0.0)) throw InputError("eta must be non-negative");
  return {gamma_bob_min, eta * gamma_bob_min};
}

double SecrecyThresholds::c_bob_min() const { return std::log2(1.0 + gamma_bob_min); }

double SecrecyThresholds::c_eve_max() const { return std::log2(1.0 + gamma_eve_max); }

}  // namespace rispls
