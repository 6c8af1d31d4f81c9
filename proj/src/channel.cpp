#include "rispls/channel.hpp"

namespace rispls {

ElementChannel los_channel(const Position3D& tx, const Position3D& rx, double fc,
                           const Antenna& tx_ant, const Antenna& rx_ant) {
  const Eigen::Vector3d delta = rx - tx;
  const double d = delta.norm();
  if (!(d > 0.0)) throw DegenerateGeometry("line-of-sight channel between coincident points");
  const Eigen::Vector3d dir = delta / d;

  const double g_tx = pattern_gain(tx_ant.pattern, tx_ant.frame.to_local(dir));
  const double g_rx = pattern_gain(rx_ant.pattern, rx_ant.frame.to_local(-dir));

  ElementChannel ch;
  ch.amplitude = std::sqrt(fspl(d, fc) * g_tx * g_rx);
  ch.phase = wrap_turns(d / (kSpeedOfLight / fc));
  return ch;
}

namespace {

LinkChannel allocate(Eigen::Index n) {
  return LinkChannel{Eigen::ArrayXd::Zero(n), Eigen::ArrayXd::Zero(n)};
}

void store(LinkChannel& link, Eigen::Index n, const ElementChannel& ch) {
  link.amplitude[n] = ch.amplitude;
  link.phase[n] = ch.phase;
}

}  // namespace

ChannelSet build_channel_set(const ScenarioConfig& sc) {
  sc.validate();
  const auto pos = element_positions(sc.ris);
  const Eigen::Index n_elems = pos.cols();

  const Antenna element{sc.ris_element_pattern, sc.ris.orientation()};
  const Antenna cs_ant{sc.tx_pattern, Orientation::facing(sc.ris.center - sc.cs_tx)};
  const Antenna an_ant{sc.tx_pattern, Orientation::facing(sc.ris.center - sc.an_tx)};
  const Antenna receiver{AntennaPattern{PatternKind::isotropic, 0.0, 0.0, 0.0}, Orientation{}};

  ChannelSet ch;
  ch.h_s = allocate(n_elems);
  ch.h_a = allocate(n_elems);
  ch.h_b = allocate(n_elems);
  ch.h_e = allocate(n_elems);
  ch.split = canonical_split(sc.ris);

  for (Eigen::Index n = 0; n < n_elems; ++n) {
    const Position3D el = pos.col(n);
    store(ch.h_s, n, los_channel(sc.cs_tx, el, sc.fc_hz, cs_ant, element));
    store(ch.h_a, n, los_channel(sc.an_tx, el, sc.fc_hz, an_ant, element));
    store(ch.h_b, n, los_channel(el, sc.bob, sc.fc_hz, element, receiver));
    store(ch.h_e, n, los_channel(el, sc.eve, sc.fc_hz, element, receiver));
  }

  for (const Source s : {Source::cs, Source::an}) {
    for (const Partition p : {Partition::bob, Partition::eve}) {
      for (const User u : {User::bob, User::eve}) {
        const auto& idx = ch.indices(p);
        double mean = 0.0;
        for (const int n : idx) mean += ch.incoming(s).amplitude[n] * ch.outgoing(u).amplitude[n];
        mean /= static_cast<double>(idx.size());
        if (!(mean > 0.0)) {
          throw DegenerateGeometry("a node lies outside every element's field of view");
        }
        ch.path_loss[ChannelSet::path_loss_index(s, p, u)] = mean * mean;
      }
    }
  }
  return ch;
}

}  // namespace rispls
