#include "hpgame/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hpgame {

Threshold threshold(const GameParams& g) {
  return Threshold{(g.b_s + g.c_p) / (g.b_s + g.c_t)};
}

std::string to_string(EquilibriumName name) {
  switch (name) {
    case EquilibriumName::HE1: return "HE1";
    case EquilibriumName::SE1: return "SE1";
    case EquilibriumName::SE2: return "SE2";
    case EquilibriumName::FE1: return "FE1";
    case EquilibriumName::FE2: return "FE2";
    case EquilibriumName::FE3: return "FE3";
    case EquilibriumName::Numeric: return "numeric";
  }
  return "?";
}

std::optional<EquilibriumName> parse_equilibrium_name(const std::string& text) {
  for (EquilibriumName n : {EquilibriumName::HE1, EquilibriumName::SE1, EquilibriumName::SE2,
                            EquilibriumName::FE1, EquilibriumName::FE2, EquilibriumName::FE3})
    if (text == to_string(n)) return n;
  return std::nullopt;
}

namespace {

std::string num6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x + 0.0);
  return buf;
}

Distribution pure(const std::string& outcome) { return {{outcome, 1.0}}; }

// Pooling-on-n assessment with the attacker playing `act_h` / `act_n` at the
// two signals. Covers SE1/SE2/FE1/FE2; the games differ only in whether the
// normal type owns the h signal.
Assessment pooling_assessment(GameKind kind, const GameParams& g, const std::string& act_h,
                              const std::string& act_n, double witness_q) {
  Assessment a;
  a.defender.signal_dist["H"] = pure("n");
  a.defender.signal_dist["N"] = pure("n");
  a.attacker.action_dist["h"] = pure(act_h);
  a.attacker.action_dist["n"] = pure(act_n);
  a.beliefs.at_signal["n"] = {Distribution{{"H", g.p_h}, {"N", 1.0 - g.p_h}}, true};
  if (kind == GameKind::FullFeatured)
    a.beliefs.at_signal["h"] = {Distribution{{"H", witness_q}, {"N", 1.0 - witness_q}}, false};
  else
    a.beliefs.at_signal["h"] = {Distribution{{"H", 1.0}}, false};
  return a;
}

}  // namespace

Assessment fe3_profile(const GameParams& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie strictly inside (0, 1)");
  const double attack = g.c_h / (g.b_d + g.c_a);
  const double q = threshold(g).value;
  Assessment a;
  for (const char* t : {"H", "N"})
    a.defender.signal_dist[t] = {{"h", alpha}, {"n", 1.0 - alpha}};
  for (const char* s : {"h", "n"}) {
    a.attacker.action_dist[s] = {{"A", attack}, {"L", 1.0 - attack}};
    a.beliefs.at_signal[s] = {Distribution{{"H", q}, {"N", 1.0 - q}}, true};
  }
  return a;
}

Payoff equilibrium_payoffs(EquilibriumName name, const GameParams& g) {
  switch (name) {
    case EquilibriumName::HE1:
      return {-g.c_a, g.b_s};
    case EquilibriumName::SE1:
    case EquilibriumName::FE1:
      return {g.p_h * (g.b_d - g.c_h) + (1.0 - g.p_h) * (-g.c_a),
              g.p_h * (-g.c_t) + (1.0 - g.p_h) * g.b_s};
    case EquilibriumName::SE2:
    case EquilibriumName::FE2:
      return {g.p_h * (-g.c_h), -g.c_p};
    default:
      throw std::invalid_argument("no closed-form payoff for equilibrium '" +
                                  to_string(name) + "'");
  }
}

std::vector<EquilibriumRecord> analytic_equilibria(GameKind kind, const GameParams& g,
                                                   double tol, double alpha) {
  const SignalingGame game = build(kind, g);
  std::vector<EquilibriumRecord> out;

  auto finish = [&](EquilibriumRecord rec) {
    rec.kind = kind;
    rec.payoffs = expected_payoffs(game, rec.assessment.defender, rec.assessment.attacker);
    out.push_back(std::move(rec));
  };

  if (kind == GameKind::Honest) {
    EquilibriumRecord rec;
    rec.name = EquilibriumName::HE1;
    rec.assessment.defender.signal_dist["N"] = pure("n");
    rec.assessment.attacker.action_dist["n"] = pure("A");
    rec.assessment.beliefs.at_signal["n"] = {Distribution{{"N", 1.0}}, true};
    rec.on_condition = {true, "-"};
    rec.profile = "(A)";
    finish(std::move(rec));
    return out;
  }

  const double th = threshold(g).value;
  const bool full = kind == GameKind::FullFeatured;
  const std::string below = "P_h <= (b_s + c_p)/(b_s + c_t)  [" + num6(g.p_h) +
                            " <= " + num6(th) + "]";
  const std::string above = "P_h >= (b_s + c_p)/(b_s + c_t)  [" + num6(g.p_h) +
                            " >= " + num6(th) + "]";

  if (g.p_h <= th + tol) {
    EquilibriumRecord rec;
    rec.name = full ? EquilibriumName::FE1 : EquilibriumName::SE1;
    rec.on_condition = {true, below};
    if (full) {
      const double w = std::clamp(g.p_h, 0.0, th);
      rec.assessment = pooling_assessment(kind, g, "A", "A", w);
      rec.off_conditions.push_back(
          {"h", 0.0, th, w, "q <= " + num6(th) + " supports A at off-path h"});
      rec.profile = "((n, n), (A, A))";
    } else {
      rec.assessment = pooling_assessment(kind, g, "L", "A", 1.0);
      rec.off_conditions.push_back(
          {"h", 1.0, 1.0, 1.0, "off-path h reachable only from a honeypot (q = 1); L dominates"});
      rec.profile = "(n, (L, A))";
    }
    finish(std::move(rec));
  }

  if (g.p_h >= th - tol) {
    EquilibriumRecord rec;
    rec.name = full ? EquilibriumName::FE2 : EquilibriumName::SE2;
    rec.on_condition = {true, above};
    if (full) {
      const double w = std::clamp(g.p_h, th, 1.0);
      rec.assessment = pooling_assessment(kind, g, "L", "L", w);
      rec.off_conditions.push_back(
          {"h", th, 1.0, w, "q >= " + num6(th) + " supports L at off-path h"});
      rec.profile = "((n, n), (L, L))";
    } else {
      rec.assessment = pooling_assessment(kind, g, "L", "L", 1.0);
      rec.off_conditions.push_back(
          {"h", 1.0, 1.0, 1.0, "off-path h reachable only from a honeypot (q = 1); L dominates"});
      rec.profile = "(n, (L, L))";
    }
    finish(std::move(rec));
  }

  if (full && std::abs(g.p_h - th) <= tol) {
    EquilibriumRecord rec;
    rec.name = EquilibriumName::FE3;
    rec.assessment = fe3_profile(g, alpha);
    rec.on_condition = {true, "P_h = (b_s + c_p)/(b_s + c_t)  [" + num6(g.p_h) + " = " +
                                  num6(th) + "]"};
    const double attack = g.c_h / (g.b_d + g.c_a);
    rec.profile = "(both types mix h with " + num6(alpha) + ", attacker attacks with " +
                  num6(attack) + " at both signals)";
    finish(std::move(rec));
  }

  return out;
}

}  // namespace hpgame
