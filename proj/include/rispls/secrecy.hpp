#ifndef RISPLS_SECRECY_HPP
#define RISPLS_SECRECY_HPP

#include <limits>

#include <Eigen/Dense>

#include "rispls/channel.hpp"
#include "rispls/ris.hpp"
#include "rispls/scene.hpp"

namespace rispls {

/// Fractions of the total transmit power given to the communication signal
/// (alpha1) and to the artificial noise (alpha2).
struct PowerSplit {
  double alpha1 = 1.0;
  double alpha2 = 0.0;

  static PowerSplit from_alpha1(double alpha1);
  void validate() const;
};

/// Index k of the eight received components, beta_{k+1}:
///   0 CS via r_b at Bob      (aligned)       4 AN via r_e at Eve   (aligned)
///   1 CS via r_e at Bob                      5 AN via r_b at Eve
///   2 AN via r_e at Bob                      6 CS via r_b at Eve
///   3 AN via r_b at Bob                      7 CS via r_e at Eve
struct BetaRoute {
  Source source;
  Partition partition;
  User user;
};

inline constexpr BetaRoute kBetaRoutes[8] = {
    {Source::cs, Partition::bob, User::bob}, {Source::cs, Partition::eve, User::bob},
    {Source::an, Partition::eve, User::bob}, {Source::an, Partition::bob, User::bob},
    {Source::an, Partition::eve, User::eve}, {Source::an, Partition::bob, User::eve},
    {Source::cs, Partition::bob, User::eve}, {Source::cs, Partition::eve, User::eve},
};

using Beta = Eigen::Array<double, 8, 1>;

/// Received amplitudes (sqrt watts) of the eight components plus the noise variances.
struct LinkPowers {
  Beta beta = Beta::Zero();
  double noise_bob = 0.0;  // watts
  double noise_eve = 0.0;  // watts
};

/// Per-component power gains L * |G|^2, independent of transmit power and split.
struct LinkGains {
  Beta gain = Beta::Zero();
};

LinkGains link_gains(const ChannelSet& ch, const PhaseConfig& cfg);

/// Scales unit-power gains by the transmit power of each component's source.
LinkPowers link_powers(const LinkGains& g, double pt_watts, PowerSplit split, double noise_bob,
                       double noise_eve);

LinkPowers beta_terms(const ScenarioConfig& sc, const ChannelSet& ch, const PhaseConfig& cfg,
                      PowerSplit split);

struct Sinr {
  double bob = 0.0;
  double eve = 0.0;
};

Sinr sinr_values(const LinkPowers& lp);

/// Same SINRs assembled term by term from path-loss factors and cascaded gains,
/// without going through the beta amplitudes.
Sinr sinr_from_path_loss(const ScenarioConfig& sc, const ChannelSet& ch, const PhaseConfig& cfg,
                         PowerSplit split);

double bob_capacity(const LinkPowers& lp);
double eve_capacity(const LinkPowers& lp);
double secrecy_capacity(double c_bob, double c_eve);

struct CapacityReport {
  double c_bob = 0.0;
  double c_eve = 0.0;
  double c_secrecy = 0.0;
  double sinr_bob = 0.0;
  double sinr_eve = 0.0;
};

CapacityReport capacity_report(const LinkPowers& lp);

/// SINR requirements: Bob needs at least gamma_bob_min, Eve may reach at most gamma_eve_max.
struct SecrecyThresholds {
  double gamma_bob_min = 0.0;
  double gamma_eve_max = std::numeric_limits<double>::infinity();

  static SecrecyThresholds from_eta(double gamma_bob_min, double eta);
  static SecrecyThresholds unconstrained() { return {}; }

  double eta() const { return gamma_eve_max / gamma_bob_min; }
  double c_bob_min() const;
  double c_eve_max() const;
};

}  // namespace rispls

#endif
