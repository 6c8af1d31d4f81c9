#include "rispls/ris.hpp"

#include <algorithm>

#include "rispls/csv.hpp"

namespace rispls {

Eigen::ArrayXd PhaseConfig::partition_phases(Partition p) const {
  const auto& idx = indices(p);
  Eigen::ArrayXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out[static_cast<Eigen::Index>(i)] = phases[idx[i]];
  return out;
}

PhaseConfig zero_config(const RisGeometry& g) {
  if (g.size() % 2 != 0) throw InputError("RIS element count must be even");
  g.validate();
  return PhaseConfig{Eigen::ArrayXd::Zero(g.size()), canonical_split(g)};
}

PhaseConfig zero_config(int n_elements) {
  if (n_elements <= 0 || n_elements % 2 != 0) {
    throw InputError("RIS element count must be positive and even, got " + std::to_string(n_elements));
  }
  RisGeometry g;
  g.rows = 1;
  g.cols = n_elements;
  return zero_config(g);
}

PhaseConfig set_partition(const PhaseConfig& cfg, Partition which,
                          const Eigen::ArrayXd& partition_phases) {
  const auto& idx = cfg.indices(which);
  if (static_cast<std::size_t>(partition_phases.size()) != idx.size()) {
    throw InputError("partition " + std::string(to_string(which)) + " has " +
                     std::to_string(idx.size()) + " elements, got " +
                     std::to_string(partition_phases.size()) + " phases");
  }
  if (!partition_phases.unaryExpr([](double t) { return is_binary_phase(t); }).all()) {
    throw InputError("partition phases must be 0 or pi");
  }
  PhaseConfig out = cfg;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.phases[idx[i]] = partition_phases[static_cast<Eigen::Index>(i)];
  }
  return out;
}

Codebook binary_dft_codebook(int m) {
  if (m <= 0 || (m & (m - 1)) != 0) {
    throw InputError("codebook size must be a power of two, got " + std::to_string(m));
  }
  // Entry (n, k) has phase -2 pi t / M with t = n k mod M; its cosine is
  // non-negative exactly when 4t <= M or 4t >= 3M.
  const long long mm = m;
  Codebook cb;
  for (long long k = 0; k < mm; ++k) {
    Eigen::ArrayXd word(m);
    for (long long n = 0; n < mm; ++n) {
      const long long t = (n * k) % mm;
      word[n] = (4 * t <= mm || 4 * t >= 3 * mm) ? kPhaseOff : kPhaseFlip;
    }
    const bool dup = std::any_of(cb.codewords.begin(), cb.codewords.end(),
                                 [&](const Eigen::ArrayXd& w) { return (w == word).all(); });
    if (!dup) cb.codewords.push_back(std::move(word));
  }
  return cb;
}

std::string format_config(const PhaseConfig& cfg) {
  std::string out;
  out.reserve(static_cast<std::size_t>(cfg.size()) * 2);
  for (int n = 0; n < cfg.size(); ++n) {
    if (n) out += ',';
    if (!is_binary_phase(cfg.phases[n])) throw InputError("configuration is not binary");
    out += cfg.phases[n] == kPhaseFlip ? '1' : '0';
  }
  return out;
}

PhaseConfig parse_config(std::string_view line, const PartitionSplit& split) {
  const auto cells = csv::split(csv::trim(line), ',');
  const std::size_t n = split.bob.size() + split.eve.size();
  if (cells.size() != n) {
    throw InputError("configuration has " + std::to_string(cells.size()) + " entries, expected " +
                     std::to_string(n));
  }
  PhaseConfig cfg{Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n)), split};
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[i] == "1") cfg.phases[static_cast<Eigen::Index>(i)] = kPhaseFlip;
    else if (cells[i] != "0") throw InputError("configuration entries must be 0 or 1, got '" + cells[i] + "'");
  }
  return cfg;
}

}  // namespace rispls
