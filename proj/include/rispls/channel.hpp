#ifndef RISPLS_CHANNEL_HPP
#define RISPLS_CHANNEL_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rispls/scene.hpp"

namespace rispls {

enum class Source { cs, an };
enum class Partition { bob, eve };
enum class User { bob, eve };

inline const char* to_string(Partition p) { return p == Partition::bob ? "r_b" : "r_e"; }

/// Complex LOS coefficient |h| e^{-j phase}.
struct ElementChannel {
  double amplitude = 0.0;
  double phase = 0.0;  // [0, 2 pi)

  std::complex<double> value() const { return std::polar(amplitude, -phase); }
};

/// Per-element channels of one link, indexed by canonical element number.
struct LinkChannel {
  Eigen::ArrayXd amplitude;
  Eigen::ArrayXd phase;

  Eigen::Index size() const { return amplitude.size(); }
};

/// A pattern with its pointing direction.
struct Antenna {
  AntennaPattern pattern;
  Orientation frame;
};

/// Maps x to [0, 2 pi) for x = 2 pi * turns.
template <typename Scalar>
Scalar wrap_turns(Scalar turns) {
  constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  const Scalar phase = two_pi * (turns - std::floor(turns));
  return phase >= two_pi ? Scalar(0) : phase;
}

/// Free-space line-of-sight channel from `tx` to `rx`. Both antenna gains are
/// evaluated along the connecting line, each in its own frame.
ElementChannel los_channel(const Position3D& tx, const Position3D& rx, double fc,
                           const Antenna& tx_ant, const Antenna& rx_ant);

struct ChannelSet {
  LinkChannel h_s;  // CS transmitter -> element
  LinkChannel h_a;  // AN transmitter -> element
  LinkChannel h_b;  // element -> Bob
  LinkChannel h_e;  // element -> Eve
  PartitionSplit split;

  /// Squared mean cascaded amplitude over a partition, indexed by path_loss_index.
  std::array<double, 8> path_loss{};

  static constexpr int path_loss_index(Source s, Partition p, User u) {
    return (s == Source::an ? 4 : 0) + (p == Partition::eve ? 2 : 0) + (u == User::eve ? 1 : 0);
  }

  double L(Source s, Partition p, User u) const { return path_loss[path_loss_index(s, p, u)]; }

  const LinkChannel& incoming(Source s) const { return s == Source::cs ? h_s : h_a; }
  const LinkChannel& outgoing(User u) const { return u == User::bob ? h_b : h_e; }
  const std::vector<int>& indices(Partition p) const {
    return p == Partition::bob ? split.bob : split.eve;
  }

  Eigen::Index size() const { return h_s.size(); }
};

/// Computes all per-element channels and partition path-loss factors.
/// Receivers are isotropic 0 dBi; transmitters point at the RIS center.
ChannelSet build_channel_set(const ScenarioConfig& sc);

/// Coherent sum over `indices` of a_n e^{-j(phi_in + phi_out + theta)} where a_n is
/// the cascaded amplitude normalized by its mean over `indices`.
template <typename Derived>
std::complex<double> cascaded_gain(const LinkChannel& in, const LinkChannel& out,
                                   const Eigen::DenseBase<Derived>& phases,
                                   std::span<const int> indices) {
  const Eigen::Index n_total = in.size();
  if (out.size() != n_total || phases.size() != n_total) {
    throw InputError("cascaded_gain: channel and phase lengths differ");
  }
  if (indices.empty()) return {0.0, 0.0};

  double mean = 0.0;
  for (const int n : indices) {
    if (n < 0 || n >= n_total) {
      throw std::out_of_range("cascaded_gain: element index " + std::to_string(n) + " out of range");
    }
    mean += in.amplitude[n] * out.amplitude[n];
  }
  mean /= static_cast<double>(indices.size());
  if (!(mean > 0.0)) return {0.0, 0.0};

  std::complex<double> sum{0.0, 0.0};
  for (const int n : indices) {
    const double a = in.amplitude[n] * out.amplitude[n] / mean;
    sum += std::polar(a, -(in.phase[n] + out.phase[n] + static_cast<double>(phases(n))));
  }
  return sum;
}

}  // namespace rispls

#endif
