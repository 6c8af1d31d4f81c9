#ifndef RISPLS_SCENARIO_IO_HPP
#define RISPLS_SCENARIO_IO_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>

#include "rispls/scene.hpp"

namespace rispls {

// Scenario files are flat `key = value` text with `#` comments. Every key
// below must appear exactly once; anything else is rejected.
//
//   fc_hz, fs_hz, pt_dbm, noise_bob_dbm, noise_eve_dbm,
//   cs_tx, an_tx, bob, eve, ris_center   (x,y,z triples in meters)
//   ris_rows, ris_cols, ris_spacing_m, tx_gain_dbi,
//   pattern_kind                         (cosine | isotropic)

ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Canonical text form; parse_scenario_text(format_scenario(c)) reproduces c.
std::string format_scenario(const ScenarioConfig& sc);

/// FNV-1a 64 of the canonical text, so comments and key order do not matter.
std::uint64_t scenario_hash(const ScenarioConfig& sc);

}  // namespace rispls

#endif
