#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torsion/asymptotics.hpp"
#include "torsion/lie.hpp"

namespace torsion {

/// Command options that are not part of the configuration file.
struct RunOptions {
  std::int64_t m_min = 0;
  std::optional<std::int64_t> m_max;
  std::optional<std::int64_t> q_override;
  std::optional<int> degree_cap;
  double tolerance = 1e-9;
  std::string out_dir;
  EvalMode mode = EvalMode::Exact;

  friend bool operator==(const RunOptions&, const RunOptions&) = default;
};

/// Validated configuration: the base ray, the orbifold data and the run options.
struct RunConfig {
  int n = 1;
  std::vector<std::int64_t> tau;
  OrbifoldData orbifold;
  AngleUnit angle_unit = AngleUnit::TwoPi;
  /// lcm of all angle denominators (in turns); the residue period of every pseudopolynomial.
  std::int64_t q = 1;
  RunOptions options;

  RayConfig ray(std::int64_t m) const { return RayConfig(n, tau, m); }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates a JSON configuration. Throws ConfigError listing every
/// violation with its field path (e.g. "classes[0].angles: angles must be distinct").
RunConfig parse_config_text(std::string_view text);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Canonical JSON form of the file-level fields; parse_config_text(dump) reproduces cfg.
nlohmann::json to_json(const RunConfig& cfg);
std::string canonical_config(const RunConfig& cfg);

/// JSON Schema (draft-07) describing the configuration file.
const nlohmann::json& config_schema();

/// n = 2, τ = 0, unit volume, one class with d = 2 and angle 2π·1/4, weight 1.
RunConfig pinned_config();

}  // namespace torsion
