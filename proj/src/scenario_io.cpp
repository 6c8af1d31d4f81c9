#include "rispls/scenario_io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rispls/csv.hpp"

namespace rispls {

void ScenarioConfig::validate() const {
  if (!(fc_hz > 0.0) || !std::isfinite(fc_hz)) throw InputError("fc_hz must be positive");
  if (!std::isfinite(fs_hz)) throw InputError("fs_hz must be finite");
  if (!std::isfinite(pt_dbm)) throw InputError("pt_dbm must be finite");
  if (!std::isfinite(noise_bob_dbm) || !std::isfinite(noise_eve_dbm)) {
    throw InputError("noise powers must be finite");
  }
  ris.validate();
  const auto pos = element_positions(ris);
  const std::pair<const char*, const Position3D*> nodes[] = {
      {"cs_tx", &cs_tx}, {"an_tx", &an_tx}, {"bob", &bob}, {"eve", &eve}};
  for (const auto& [name, p] : nodes) {
    if (!p->allFinite()) throw InputError(std::string(name) + " has non-finite coordinates");
    const double closest = (pos.colwise() - *p).colwise().norm().minCoeff();
    if (closest < 1e-9) throw InputError(std::string(name) + " coincides with a RIS element");
  }
}

namespace {

Position3D parse_triple(const std::string& key, const std::string& value) {
  const auto cells = csv::split(value, ',');
  if (cells.size() != 3) throw InputError(key + ": expected x,y,z triple, got '" + value + "'");
  return {csv::parse_number(cells[0]), csv::parse_number(cells[1]), csv::parse_number(cells[2])};
}

int parse_count(const std::string& key, const std::string& value) {
  const double v = csv::parse_number(value);
  if (v != std::floor(v) || v < 1 || v > 1 << 20) throw InputError(key + ": expected a positive integer");
  return static_cast<int>(v);
}

std::string triple(const Position3D& p) {
  return csv::format_number(p.x()) + ", " + csv::format_number(p.y()) + ", " +
         csv::format_number(p.z());
}

}  // namespace

ScenarioConfig parse_scenario(std::istream& in) {
  ScenarioConfig sc;
  int tx_gain_seen = 0;
  double tx_gain = 0.0;
  PatternKind kind = PatternKind::cosine;

  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"fc_hz", [&](auto& k, auto& v) { (void)k; sc.fc_hz = csv::parse_number(v); }},
      {"fs_hz", [&](auto& k, auto& v) { (void)k; sc.fs_hz = csv::parse_number(v); }},
      {"pt_dbm", [&](auto& k, auto& v) { (void)k; sc.pt_dbm = csv::parse_number(v); }},
      {"noise_bob_dbm", [&](auto& k, auto& v) { (void)k; sc.noise_bob_dbm = csv::parse_number(v); }},
      {"noise_eve_dbm", [&](auto& k, auto& v) { (void)k; sc.noise_eve_dbm = csv::parse_number(v); }},
      {"cs_tx", [&](auto& k, auto& v) { sc.cs_tx = parse_triple(k, v); }},
      {"an_tx", [&](auto& k, auto& v) { sc.an_tx = parse_triple(k, v); }},
      {"bob", [&](auto& k, auto& v) { sc.bob = parse_triple(k, v); }},
      {"eve", [&](auto& k, auto& v) { sc.eve = parse_triple(k, v); }},
      {"ris_rows", [&](auto& k, auto& v) { sc.ris.rows = parse_count(k, v); }},
      {"ris_cols", [&](auto& k, auto& v) { sc.ris.cols = parse_count(k, v); }},
      {"ris_spacing_m", [&](auto& k, auto& v) { (void)k; sc.ris.spacing = csv::parse_number(v); }},
      {"ris_center", [&](auto& k, auto& v) { sc.ris.center = parse_triple(k, v); }},
      {"tx_gain_dbi",
       [&](auto& k, auto& v) {
         (void)k;
         tx_gain = csv::parse_number(v);
         ++tx_gain_seen;
       }},
      {"pattern_kind",
       [&](auto& k, auto& v) {
         if (v == "cosine") kind = PatternKind::cosine;
         else if (v == "isotropic") kind = PatternKind::isotropic;
         else throw InputError(k + ": expected 'cosine' or 'isotropic', got '" + v + "'");
       }},
  };

  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = csv::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key(csv::trim(body.substr(0, eq)));
    const std::string value(csv::trim(body.substr(eq + 1)));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw InputError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    it->second(key, value);
  }
  for (const auto& [key, setter] : setters) {
    if (!seen.count(key)) throw InputError("missing key '" + key + "'");
  }

  sc.tx_pattern = AntennaPattern{kind, 1.0, 1.0, tx_gain};
  sc.ris_element_pattern = AntennaPattern{kind, 1.0, 1.0, 0.0};
  sc.validate();
  return sc;
}

ScenarioConfig parse_scenario_text(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path.string() + "'");
  return parse_scenario(in);
}

std::string format_scenario(const ScenarioConfig& sc) {
  std::ostringstream out;
  out << "fc_hz = " << csv::format_number(sc.fc_hz) << '\n'
      << "fs_hz = " << csv::format_number(sc.fs_hz) << '\n'
      << "pt_dbm = " << csv::format_number(sc.pt_dbm) << '\n'
      << "noise_bob_dbm = " << csv::format_number(sc.noise_bob_dbm) << '\n'
      << "noise_eve_dbm = " << csv::format_number(sc.noise_eve_dbm) << '\n'
      << "cs_tx = " << triple(sc.cs_tx) << '\n'
      << "an_tx = " << triple(sc.an_tx) << '\n'
      << "bob = " << triple(sc.bob) << '\n'
      << "eve = " << triple(sc.eve) << '\n'
      << "ris_rows = " << sc.ris.rows << '\n'
      << "ris_cols = " << sc.ris.cols << '\n'
      << "ris_spacing_m = " << csv::format_number(sc.ris.spacing) << '\n'
      << "ris_center = " << triple(sc.ris.center) << '\n'
      << "tx_gain_dbi = " << csv::format_number(sc.tx_pattern.boresight_gain_dbi) << '\n'
      << "pattern_kind = "
      << (sc.tx_pattern.kind == PatternKind::cosine ? "cosine" : "isotropic") << '\n';
  return out.str();
}

std::uint64_t scenario_hash(const ScenarioConfig& sc) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char ch : format_scenario(sc)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace rispls
