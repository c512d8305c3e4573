// Command-line front end: validate scenario files, list equilibria, sweep
// the honeypot ratio to CSV, compute the optimal deployment point, and run
// seeded simulations. Data goes to stdout or --out files; diagnostics go to
// stderr, so sweeps pipe cleanly.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpgame/analytic.hpp"
#include "hpgame/core.hpp"
#include "hpgame/deployment.hpp"
#include "hpgame/models.hpp"
#include "hpgame/scenario.hpp"
#include "hpgame/simulate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 2;
constexpr int kParseError = 64;
constexpr int kSemanticError = 65;

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x + 0.0);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

hpgame::GameParams base_params(const hpgame::ScenarioConfig& cfg) {
  // c_h and p_h are placeholders; effective_params replaces both.
  return {cfg.b_s, cfg.c_t, cfg.c_p, cfg.b_d, cfg.c_a,
          cfg.cost.effective_ch(0.0), cfg.c_n, 0.0};
}

std::optional<hpgame::SelectionPolicy> parse_policy(const std::string& text) {
  using hpgame::SelectionPolicy;
  if (text == "optimistic") return SelectionPolicy::optimistic();
  if (text == "pessimistic") return SelectionPolicy::pessimistic();
  if (text.rfind("fixed:", 0) == 0) {
    const auto name = hpgame::parse_equilibrium_name(text.substr(6));
    if (!name) return std::nullopt;
    return SelectionPolicy::fixed_to(*name);
  }
  return std::nullopt;
}

// Non-validate commands refuse to run on structurally broken scenarios.
int gate_violations(const hpgame::ScenarioConfig& cfg) {
  const auto v = cfg.structural_violations();
  if (v.empty()) return kOk;
  for (const auto& s : v) std::cerr << s << "\n";
  return kViolations;
}

double require_p_h(const hpgame::ScenarioConfig& cfg) {
  if (!cfg.p_h)
    throw std::invalid_argument("scenario does not set p_h, required by this command");
  return *cfg.p_h;
}

int cmd_validate(const std::string& config_path) {
  const auto cfg = hpgame::parse_scenario_file(config_path);
  const auto violations = cfg.structural_violations();
  for (const auto& v : violations) std::cout << v << "\n";
  return violations.empty() ? kOk : kViolations;
}

void print_record(const hpgame::SignalingGame& game, const hpgame::EquilibriumRecord& rec) {
  std::cout << "equilibrium=" << hpgame::to_string(rec.name) << "\n";
  std::cout << "profile=" << rec.profile << "\n";
  std::cout << "condition=" << rec.on_condition.text << "\n";
  for (const auto& off : rec.off_conditions)
    std::cout << "off_path[" << off.signal << "]=q in [" << fmt6(off.lo) << ", "
              << fmt6(off.hi) << "], witness=" << fmt6(off.witness) << "\n";
  for (const auto& s : game.signals()) {
    const auto& belief = rec.assessment.beliefs.at_signal.at(s);
    const auto senders = game.senders_of(s);
    std::cout << "belief[" << s << "]=P[" << senders.front()
              << "]=" << fmt6(hpgame::prob_of(belief.type_dist, senders.front())) << " ("
              << (belief.on_path ? "on-path" : "off-path") << ")\n";
  }
  std::cout << "defender_payoff=" << fmt6(rec.payoffs.defender) << "\n";
  std::cout << "attacker_payoff=" << fmt6(rec.payoffs.attacker) << "\n";
}

int cmd_equilibria(const std::string& config_path, bool alpha_set, double alpha_value) {
  const auto cfg = hpgame::parse_scenario_file(config_path);
  if (int rc = gate_violations(cfg); rc != kOk) return rc;
  const double p_h = require_p_h(cfg);
  const double alpha = alpha_set ? alpha_value : cfg.alpha;
  const auto params = cfg.params_at(p_h);
  const auto game = hpgame::build(cfg.game, params);
  const auto records = hpgame::analytic_equilibria(cfg.game, params, cfg.tolerance, alpha);

  if (cfg.game != hpgame::GameKind::Honest)
    std::cout << "threshold=" << fmt6(hpgame::threshold(params).value) << "\n";
  std::cout << "p_h=" << fmt6(p_h) << "\n";
  for (const auto& rec : records) {
    std::cout << "\n";
    print_record(game, rec);
  }
  return kOk;
}

struct GridSpec {
  double start, stop, step;
};

std::optional<GridSpec> parse_grid(const std::string& text) {
  GridSpec g{};
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.start, &g.stop, &g.step, &extra) != 3)
    return std::nullopt;
  if (!(g.start >= 0.0 && g.start < g.stop && g.stop <= 1.0 && g.step > 0.0))
    return std::nullopt;
  return g;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_text,
              const std::string& policy_text, const std::string& out_path) {
  const auto cfg = hpgame::parse_scenario_file(config_path);
  if (int rc = gate_violations(cfg); rc != kOk) return rc;
  const auto grid_spec = parse_grid(grid_text);
  if (!grid_spec)
    throw std::invalid_argument("grid must be START:STOP:STEP with 0 <= start < stop <= 1");
  const auto policy = parse_policy(policy_text);
  if (!policy)
    throw std::invalid_argument("policy must be optimistic, pessimistic or fixed:NAME");

  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double p = grid_spec->start + i * grid_spec->step;
    if (p > grid_spec->stop + 1e-12) break;
    grid.push_back(std::min(p, 1.0));
  }
  if (cfg.cost.kind() == hpgame::CostModel::Kind::Dynamic) {
    std::vector<double> capped;
    bool truncated = false;
    for (double p : grid) {
      if (p > hpgame::kDynamicPhCap)
        truncated = true;
      else
        capped.push_back(p);
    }
    if (truncated) {
      if (capped.empty() || capped.back() < hpgame::kDynamicPhCap)
        capped.push_back(hpgame::kDynamicPhCap);
      std::cerr << "warning: dynamic cost grid capped at " << fmt6(hpgame::kDynamicPhCap)
                << "\n";
    }
    grid = std::move(capped);
  }

  const auto points =
      hpgame::sweep(base_params(cfg), cfg.cost, grid, *policy, cfg.game, cfg.tolerance);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out = &file;
  }
  *out << "p_h,c_h_effective,equilibria,defender_payoff_selected,attacker_payoff,"
          "defender_payoff_SE1_or_FE1,defender_payoff_SE2_or_FE2,assumption_ok\n";
  for (const auto& pt : points) {
    std::string names;
    for (std::size_t i = 0; i < pt.equilibria.size(); ++i) {
      if (i) names += "+";
      names += hpgame::to_string(pt.equilibria[i]);
    }
    *out << fmt6(pt.p_h) << "," << fmt6(pt.c_h_effective) << "," << names << ","
         << fmt6(pt.selected_payoff.defender) << "," << fmt6(pt.selected_payoff.attacker)
         << "," << (pt.branch1_defender ? fmt6(*pt.branch1_defender) : "") << ","
         << (pt.branch2_defender ? fmt6(*pt.branch2_defender) : "") << ","
         << (pt.assumption_ok ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_optimize(const std::string& config_path, const std::string& policy_text) {
  const auto cfg = hpgame::parse_scenario_file(config_path);
  if (int rc = gate_violations(cfg); rc != kOk) return rc;
  const auto policy = parse_policy(policy_text);
  if (!policy)
    throw std::invalid_argument("policy must be optimistic, pessimistic or fixed:NAME");
  const auto best =
      hpgame::optimal_ph(base_params(cfg), cfg.cost, *policy, cfg.game, 1e-4, cfg.tolerance);
  std::cout << "p_h_star=" << fmt6(best.p_h) << "\n";
  std::cout << "equilibrium=" << hpgame::to_string(best.equilibrium) << "\n";
  std::cout << "payoff=" << fmt6(best.payoff.defender) << "\n";
  std::cout << "attacker_payoff=" << fmt6(best.payoff.attacker) << "\n";
  std::cout << "threshold=" << fmt6(best.threshold) << "\n";
  return kOk;
}

int cmd_simulate(const std::string& config_path, const std::string& name_text,
                 std::uint64_t plays, std::uint64_t seed, bool alpha_set,
                 double alpha_value) {
  const auto cfg = hpgame::parse_scenario_file(config_path);
  if (int rc = gate_violations(cfg); rc != kOk) return rc;
  const double p_h = require_p_h(cfg);
  const double alpha = alpha_set ? alpha_value : cfg.alpha;
  const auto name = hpgame::parse_equilibrium_name(name_text);
  if (!name) throw std::invalid_argument("unknown equilibrium name '" + name_text + "'");

  const auto params = cfg.params_at(p_h);
  const auto records = hpgame::analytic_equilibria(cfg.game, params, cfg.tolerance, alpha);
  const hpgame::EquilibriumRecord* record = nullptr;
  std::string applicable;
  for (const auto& rec : records) {
    if (!applicable.empty()) applicable += ", ";
    applicable += hpgame::to_string(rec.name);
    if (rec.name == *name) record = &rec;
  }
  if (!record)
    throw std::invalid_argument("equilibrium '" + name_text + "' not applicable at p_h=" +
                                fmt6(p_h) + "; applicable: " + applicable);

  const auto game = hpgame::build(cfg.game, params);
  const auto report = hpgame::run(game, record->assessment, plays, seed);
  const auto verdict = hpgame::check_pbe(game, record->assessment, cfg.tolerance);

  const auto ratio = [](double mean, double analytic, double se) {
    return se > 0.0 ? std::abs(mean - analytic) / se : 0.0;
  };
  std::cout << "equilibrium=" << hpgame::to_string(*name) << "\n";
  std::cout << "p_h=" << fmt6(p_h) << "\n";
  std::cout << "plays=" << report.plays << "\n";
  std::cout << "seed=" << report.seed << "\n";
  std::cout << "generator=" << report.generator << "\n";
  std::cout << "defender_mean=" << fmt6(report.defender_mean) << "\n";
  std::cout << "defender_stddev=" << fmt6(report.defender_stddev) << "\n";
  std::cout << "defender_se=" << fmt6(report.defender_se) << "\n";
  std::cout << "defender_analytic=" << fmt6(record->payoffs.defender) << "\n";
  std::cout << "defender_diff_se_ratio="
            << fmt6(ratio(report.defender_mean, record->payoffs.defender, report.defender_se))
            << "\n";
  std::cout << "attacker_mean=" << fmt6(report.attacker_mean) << "\n";
  std::cout << "attacker_stddev=" << fmt6(report.attacker_stddev) << "\n";
  std::cout << "attacker_se=" << fmt6(report.attacker_se) << "\n";
  std::cout << "attacker_analytic=" << fmt6(record->payoffs.attacker) << "\n";
  std::cout << "attacker_diff_se_ratio="
            << fmt6(ratio(report.attacker_mean, record->payoffs.attacker, report.attacker_se))
            << "\n";
  for (const auto& c : report.counts)
    std::cout << "count[" << c.type << "," << c.signal << "," << c.action << "]=" << c.count
              << "\n";
  std::cout << "is_pbe=" << (verdict.is_pbe ? "true" : "false") << "\n";
  for (const auto& v : verdict.violations)
    std::cout << "violation[" << hpgame::to_string(v.who) << "," << v.where
              << "]=" << v.deviation << ", gain=" << fmt6(v.gain) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Honeypot signaling-game analysis: equilibria, deployment sweeps, simulation"};
  app.require_subcommand(1);

  std::string config_path, grid_text, policy_text = "pessimistic", out_path, eq_name;
  std::uint64_t plays = 100000, seed = 0;
  double alpha_value = 0.5;
  bool alpha_set = false;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "scenario file")->required();
  };
  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha_value, "mixing weight of the semi-separating profile")
        ->each([&](const std::string&) { alpha_set = true; });
  };

  CLI::App* validate = app.add_subcommand("validate", "check the scenario assumptions");
  add_config(validate);

  CLI::App* equilibria = app.add_subcommand("equilibria", "list applicable equilibria");
  add_config(equilibria);
  add_alpha(equilibria);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep the honeypot ratio to CSV");
  add_config(sweep);
  sweep->add_option("--grid", grid_text, "grid as START:STOP:STEP")->required();
  sweep->add_option("--policy", policy_text, "optimistic | pessimistic | fixed:NAME");
  sweep->add_option("--out", out_path, "output CSV path (default: stdout)");

  CLI::App* optimize = app.add_subcommand("optimize", "optimal honeypot ratio");
  add_config(optimize);
  optimize->add_option("--policy", policy_text, "optimistic | pessimistic | fixed:NAME");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo play of an equilibrium");
  add_config(simulate);
  simulate->add_option("name", eq_name, "equilibrium name (HE1, SE1, SE2, FE1, FE2, FE3)")
      ->required();
  simulate->add_option("--plays", plays, "number of plays");
  simulate->add_option("--seed", seed, "PRNG seed");
  add_alpha(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(config_path);
    if (app.got_subcommand(equilibria))
      return cmd_equilibria(config_path, alpha_set, alpha_value);
    if (app.got_subcommand(sweep))
      return cmd_sweep(config_path, grid_text, policy_text, out_path);
    if (app.got_subcommand(optimize)) return cmd_optimize(config_path, policy_text);
    if (app.got_subcommand(simulate))
      return cmd_simulate(config_path, eq_name, plays, seed, alpha_set, alpha_value);
  } catch (const hpgame::ScenarioParseError& e) {
    std::cerr << "parse error";
    if (e.line > 0) std::cerr << " at line " << e.line;
    std::cerr << ": " << e.what() << "\n";
    return kParseError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kOk;
}
