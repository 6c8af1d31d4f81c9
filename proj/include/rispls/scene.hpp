#ifndef RISPLS_SCENE_HPP
#define RISPLS_SCENE_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "rispls/errors.hpp"

namespace rispls {

template <typename Scalar>
using Position3 = Eigen::Matrix<Scalar, 3, 1>;
using Position3D = Position3<double>;

/// Element positions stored column-wise, one column per RIS element.
template <typename Scalar>
using PositionList = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

inline constexpr double kSpeedOfLight = 299792458.0;

template <typename Scalar>
Scalar db_to_linear(Scalar db) {
  return std::pow(Scalar(10), db / Scalar(10));
}

template <typename Scalar>
Scalar linear_to_db(Scalar lin) {
  return Scalar(10) * std::log10(lin);
}

template <typename Scalar>
Scalar dbm_to_watts(Scalar dbm) {
  return db_to_linear(dbm - Scalar(30));
}

template <typename Scalar>
Scalar watts_to_dbm(Scalar w) {
  return linear_to_db(w) + Scalar(30);
}

/// Right-handed antenna frame. Column 0 is boresight, column 1 the horizontal
/// (azimuth) axis, column 2 the vertical (elevation) axis.
struct Orientation {
  Eigen::Matrix3d axes = Eigen::Matrix3d::Identity();

  /// Builds a frame looking along `boresight`, keeping `up` as vertical as possible.
  static Orientation facing(const Eigen::Vector3d& boresight,
                            const Eigen::Vector3d& up = Eigen::Vector3d::UnitZ()) {
    const Eigen::Vector3d fwd = boresight.normalized();
    Eigen::Vector3d vert = up - up.dot(fwd) * fwd;
    if (vert.norm() < 1e-12) {
      // boresight is vertical; fall back to world x as the up hint
      const Eigen::Vector3d alt = Eigen::Vector3d::UnitX();
      vert = alt - alt.dot(fwd) * fwd;
    }
    vert.normalize();
    Orientation o;
    o.axes.col(0) = fwd;
    o.axes.col(1) = vert.cross(fwd);
    o.axes.col(2) = vert;
    return o;
  }

  template <typename Derived>
  Eigen::Vector3d to_local(const Eigen::MatrixBase<Derived>& world_dir) const {
    return axes.transpose() * world_dir;
  }
};

struct RisGeometry {
  int rows = 16;
  int cols = 16;
  double spacing = 0.041;
  Position3D center = Position3D(0.0, 0.0, 0.4);
  Eigen::Vector3d normal = Eigen::Vector3d::UnitX();

  int size() const { return rows * cols; }

  Orientation orientation() const { return Orientation::facing(normal); }

  void validate() const {
    if (rows <= 0 || cols <= 0) throw InputError("RIS rows and cols must be positive");
    if (cols % 2 != 0) throw InputError("RIS column count must be even to split into halves");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) throw InputError("RIS spacing must be positive");
    if (!center.allFinite()) throw InputError("RIS center must be finite");
    if (!(normal.norm() > 0.0) || !normal.allFinite()) throw InputError("RIS normal must be nonzero");
  }
};

enum class PatternKind { cosine, isotropic };

struct AntennaPattern {
  PatternKind kind = PatternKind::cosine;
  double azimuth_exponent = 1.0;
  double elevation_exponent = 1.0;
  double boresight_gain_dbi = 0.0;

  double boresight_linear() const { return db_to_linear(boresight_gain_dbi); }
};

/// Element index sets (0-based) of the two RIS halves. The half at the
/// smaller column indices steers artificial noise toward Eve; the other half
/// steers the communication signal toward Bob.
struct PartitionSplit {
  std::vector<int> bob;
  std::vector<int> eve;
};

/// Partition used throughout: columns [0, cols/2) serve Eve, the rest serve Bob.
inline PartitionSplit canonical_split(const RisGeometry& g) {
  PartitionSplit split;
  split.bob.reserve(g.size() / 2);
  split.eve.reserve(g.size() / 2);
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      const int n = r * g.cols + c;
      (c < g.cols / 2 ? split.eve : split.bob).push_back(n);
    }
  }
  return split;
}

struct ScenarioConfig {
  double fc_hz = 3.75e9;
  double fs_hz = 0.5e6;  // carried through to outputs only
  double pt_dbm = -9.0;
  double noise_bob_dbm = -90.0;
  double noise_eve_dbm = -90.0;
  Position3D cs_tx = Position3D(0.74, 0.31, 0.0);
  Position3D an_tx = Position3D(0.74, -0.31, 0.0);
  Position3D bob = Position3D(1.19, 1.41, 0.0);
  Position3D eve = Position3D(1.19, -1.41, 0.0);
  RisGeometry ris;
  AntennaPattern tx_pattern{PatternKind::cosine, 1.0, 1.0, 13.0};
  AntennaPattern ris_element_pattern{PatternKind::cosine, 1.0, 1.0, 0.0};

  double wavelength() const { return kSpeedOfLight / fc_hz; }
  double pt_watts() const { return dbm_to_watts(pt_dbm); }
  double noise_bob_watts() const { return dbm_to_watts(noise_bob_dbm); }
  double noise_eve_watts() const { return dbm_to_watts(noise_eve_dbm); }

  /// Throws InputError on violated invariants (including nodes sitting on an element).
  void validate() const;
};

/// Default scenario: 3.75 GHz, 16x16 RIS with 4.1 cm pitch, -9 dBm total power.
inline ScenarioConfig reference_scenario() { return ScenarioConfig{}; }

/// Centered rectangular lattice in the RIS plane, row-major. Row 0 is the top row.
template <typename Scalar = double>
PositionList<Scalar> element_positions(const RisGeometry& g) {
  g.validate();
  const Orientation o = g.orientation();
  const Position3<Scalar> side = o.axes.col(1).cast<Scalar>();
  const Position3<Scalar> up = o.axes.col(2).cast<Scalar>();
  const Position3<Scalar> center = g.center.cast<Scalar>();
  const Scalar d = static_cast<Scalar>(g.spacing);
  const Scalar row_mid = Scalar(g.rows - 1) / Scalar(2);
  const Scalar col_mid = Scalar(g.cols - 1) / Scalar(2);

  PositionList<Scalar> pos(3, g.size());
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      pos.col(r * g.cols + c) =
          center + (Scalar(c) - col_mid) * d * side + (row_mid - Scalar(r)) * d * up;
    }
  }
  return pos;
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm();
}

/// Linear power gain toward `local_dir` (unit vector, antenna frame, x = boresight).
template <typename Derived>
typename Derived::Scalar pattern_gain(const AntennaPattern& p,
                                      const Eigen::MatrixBase<Derived>& local_dir) {
  using Scalar = typename Derived::Scalar;
  const Scalar g0 = static_cast<Scalar>(p.boresight_linear());
  if (p.kind == PatternKind::isotropic) return g0;

  const Scalar x = local_dir(0), y = local_dir(1), z = local_dir(2);
  if (!(x > Scalar(0))) return Scalar(0);
  const Scalar az = std::atan2(y, x);
  const Scalar el = std::atan2(z, std::hypot(x, y));
  constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / Scalar(2);
  if (std::abs(az) >= half_pi || std::abs(el) >= half_pi) return Scalar(0);
  return g0 * std::pow(std::cos(az), Scalar(2) * static_cast<Scalar>(p.azimuth_exponent)) *
         std::pow(std::cos(el), Scalar(2) * static_cast<Scalar>(p.elevation_exponent));
}

/// Free-space power attenuation (lambda / 4 pi d)^2.
template <typename Scalar>
Scalar fspl(Scalar d, Scalar fc) {
  if (!(d > Scalar(0))) throw DegenerateGeometry("free-space path loss at zero distance");
  if (!(fc > Scalar(0))) throw InputError("carrier frequency must be positive");
  const Scalar lambda = static_cast<Scalar>(kSpeedOfLight) / fc;
  const Scalar r = lambda / (Scalar(4) * std::numbers::pi_v<Scalar> * d);
  return r * r;
}

}  // namespace rispls

#endif
