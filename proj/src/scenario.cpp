#include "hpgame/scenario.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace hpgame {

GameParams ScenarioConfig::params_at(double p_h_value) const {
  GameParams g{b_s, c_t, c_p, b_d, c_a, cost.effective_ch(p_h_value), c_n, p_h_value};
  return g;
}

std::vector<std::string> ScenarioConfig::structural_violations() const {
  if (cost.kind() == CostModel::Kind::Fixed) {
    // A fixed c_h is part of the scenario, so the full set applies; 0.5 is a
    // neutral probe when no p_h is given (the range check is vacuous there).
    return validate(params_at(p_h.value_or(0.5)));
  }
  GameParams probe{b_s, c_t, c_p, b_d, c_a, /*c_h=*/0.0, c_n, p_h.value_or(0.5)};
  std::vector<std::string> v;
  for (const std::string& s : validate(probe)) {
    if (s.find("c_h") != std::string::npos) continue;  // c_h varies with p_h
    v.push_back(s);
  }
  if (!(cost.parameter() > 0.0)) {
    std::ostringstream os;
    os << "k > 0 violated (k = " << cost.parameter() << ")";
    v.push_back(os.str());
  }
  return v;
}

namespace {

const std::vector<std::string> kKnownKeys = {
    "game", "b_s", "c_t", "c_p", "b_d", "c_a", "c_n",
    "cost_mode", "c_h", "k", "p_h", "alpha", "tolerance"};

struct RawEntry {
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const RawEntry& entry, const std::string& key) {
  const std::string& v = entry.value;
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE)
    throw ScenarioParseError(entry.line, "invalid number for key '" + key + "': '" + v + "'");
  return x;
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text) {
  std::map<std::string, RawEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioParseError(lineno, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioParseError(lineno, "empty key");
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw ScenarioParseError(lineno, "unknown key '" + key + "'");
    if (entries.count(key))
      throw ScenarioParseError(lineno, "duplicate key '" + key + "'");
    if (value.empty()) throw ScenarioParseError(lineno, "empty value for key '" + key + "'");
    entries[key] = {value, lineno};
  }

  auto require = [&](const std::string& key) -> const RawEntry& {
    auto it = entries.find(key);
    if (it == entries.end())
      throw ScenarioParseError(0, "missing required key '" + key + "'");
    return it->second;
  };

  ScenarioConfig cfg;
  {
    const RawEntry& e = require("game");
    const auto kind = parse_game_kind(e.value);
    if (!kind)
      throw ScenarioParseError(e.line, "game must be honest, semi or full, got '" +
                                           e.value + "'");
    cfg.game = *kind;
  }
  cfg.b_s = parse_number(require("b_s"), "b_s");
  cfg.c_t = parse_number(require("c_t"), "c_t");
  cfg.c_p = parse_number(require("c_p"), "c_p");
  cfg.b_d = parse_number(require("b_d"), "b_d");
  cfg.c_a = parse_number(require("c_a"), "c_a");
  cfg.c_n = parse_number(require("c_n"), "c_n");

  {
    const RawEntry& mode = require("cost_mode");
    if (mode.value == "fixed") {
      const RawEntry& ch = require("c_h");
      if (entries.count("k"))
        throw ScenarioParseError(entries.at("k").line,
                                 "key 'k' not allowed with cost_mode = fixed");
      cfg.cost = CostModel::fixed(parse_number(ch, "c_h"));
    } else if (mode.value == "dynamic") {
      const RawEntry& k = require("k");
      if (entries.count("c_h"))
        throw ScenarioParseError(entries.at("c_h").line,
                                 "key 'c_h' not allowed with cost_mode = dynamic");
      cfg.cost = CostModel::dynamic(parse_number(k, "k"));
    } else {
      throw ScenarioParseError(mode.line,
                               "cost_mode must be fixed or dynamic, got '" + mode.value + "'");
    }
  }

  if (entries.count("p_h")) cfg.p_h = parse_number(entries.at("p_h"), "p_h");
  if (entries.count("alpha")) cfg.alpha = parse_number(entries.at("alpha"), "alpha");
  if (entries.count("tolerance")) {
    cfg.tolerance = parse_number(entries.at("tolerance"), "tolerance");
    if (!(cfg.tolerance > 0.0))
      throw ScenarioParseError(entries.at("tolerance").line, "tolerance must be positive");
  }
  return cfg;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError(0, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace hpgame
