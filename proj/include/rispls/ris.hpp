#ifndef RISPLS_RIS_HPP
#define RISPLS_RIS_HPP

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rispls/channel.hpp"
#include "rispls/scene.hpp"

namespace rispls {

inline constexpr double kPhaseOff = 0.0;
inline constexpr double kPhaseFlip = std::numbers::pi;

inline bool is_binary_phase(double theta) { return theta == kPhaseOff || theta == kPhaseFlip; }

/// Binary RIS configuration (every phase is 0 or pi) over a fixed partition split.
struct PhaseConfig {
  Eigen::ArrayXd phases;
  PartitionSplit split;

  int size() const { return static_cast<int>(phases.size()); }

  const std::vector<int>& indices(Partition p) const {
    return p == Partition::bob ? split.bob : split.eve;
  }

  /// Phases of one partition, in the order of its index set.
  Eigen::ArrayXd partition_phases(Partition p) const;

  bool operator==(const PhaseConfig& o) const {
    return phases.size() == o.phases.size() && (phases == o.phases).all() &&
           split.bob == o.split.bob && split.eve == o.split.eve;
  }
};

/// All-zero (mirror) configuration with the canonical split of `g`.
PhaseConfig zero_config(const RisGeometry& g);

/// All-zero configuration of a single-row surface: the first N/2 elements serve Eve.
PhaseConfig zero_config(int n_elements);

/// Copy of `cfg` with partition `which` replaced by `partition_phases`.
PhaseConfig set_partition(const PhaseConfig& cfg, Partition which,
                          const Eigen::ArrayXd& partition_phases);

struct Codebook {
  std::vector<Eigen::ArrayXd> codewords;

  std::size_t size() const { return codewords.size(); }
};

/// Columns of the M-point DFT matrix with every entry's phase rounded to the
/// nearer of {0, pi} (a tie at +-90 degrees rounds to 0), duplicates removed.
/// Codeword 0 is all-zero. M must be a power of two.
Codebook binary_dft_codebook(int m);

/// One line of N comma-separated bits, 1 meaning a pi phase.
std::string format_config(const PhaseConfig& cfg);

PhaseConfig parse_config(std::string_view line, const PartitionSplit& split);

}  // namespace rispls

#endif
