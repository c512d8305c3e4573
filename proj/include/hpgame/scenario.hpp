#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpgame/deployment.hpp"
#include "hpgame/models.hpp"

namespace hpgame {

/// Raised on malformed scenario files; `line` is 1-based (0 when no specific
/// line applies, e.g. a missing required key).
struct ScenarioParseError : std::runtime_error {
  ScenarioParseError(int line_, const std::string& msg)
      : std::runtime_error(msg), line(line_) {}
  int line;
};

/**
 * A parsed scenario file. The format is flat `key = value` text: one pair
 * per line, `#` starts a comment, blank lines are ignored, every key outside
 * the schema is rejected.
 *
 * Schema: game (honest|semi|full); b_s c_t c_p b_d c_a c_n (decimals);
 * cost_mode (fixed|dynamic); c_h (required for fixed) or k (required for
 * dynamic); optional p_h, alpha (default 0.5), tolerance (default 1e-9,
 * must be positive).
 */
struct ScenarioConfig {
  GameKind game = GameKind::SemiFeatured;
  double b_s = 0, c_t = 0, c_p = 0, b_d = 0, c_a = 0, c_n = 0;
  CostModel cost = CostModel::fixed(1.0);
  std::optional<double> p_h;
  double alpha = 0.5;
  double tolerance = 1e-9;

  /// Full parameter set at the given ratio, with c_h from the cost model.
  GameParams params_at(double p_h_value) const;

  /// Assumption violations that are properties of the scenario itself:
  /// positivity, c_t > c_p, c_n < c_a, the p_h range when present, and the
  /// c_h bounds for fixed cost. The dynamic c_h range is swept and flagged
  /// per point rather than validated here.
  std::vector<std::string> structural_violations() const;
};

ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

}  // namespace hpgame
