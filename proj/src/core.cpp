#include "hpgame/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hpgame {

Payoff expected_payoffs(const SignalingGame& game, const DefenderStrategy& defender,
                        const AttackerStrategy& attacker) {
  check_defender_strategy(game, defender);
  check_attacker_strategy(game, attacker);
  Payoff total;
  for (const auto& t : game.types()) {
    const double pt = game.prior(t);
    if (pt == 0.0) continue;
    const auto& tau = defender.signal_dist.at(t);
    for (const auto& s : game.signals_of(t)) {
      const double ps = prob_of(tau, s);
      if (ps == 0.0) continue;
      const auto& sigma = attacker.action_dist.at(s);
      for (const auto& a : game.actions_of(s)) {
        const double pa = prob_of(sigma, a);
        if (pa == 0.0) continue;
        total = total + (pt * ps * pa) * game.payoff(t, s, a);
      }
    }
  }
  return total;
}

BeliefSystem bayes_update(const SignalingGame& game, const DefenderStrategy& defender) {
  check_defender_strategy(game, defender);
  BeliefSystem beliefs;
  for (const auto& s : game.signals()) {
    const auto senders = game.senders_of(s);
    Distribution joint;
    double marginal = 0.0;
    for (const auto& t : senders) {
      const double w = game.prior(t) * prob_of(defender.signal_dist.at(t), s);
      joint[t] = w;
      marginal += w;
    }
    Belief b;
    if (marginal > 0.0) {
      b.on_path = true;
      for (auto& [t, w] : joint) b.type_dist[t] = w / marginal;
    } else {
      // Unconstrained placeholder: uniform over the feasible senders.
      b.on_path = false;
      for (const auto& t : senders)
        b.type_dist[t] = 1.0 / static_cast<double>(senders.size());
    }
    beliefs.at_signal[s] = std::move(b);
  }
  return beliefs;
}

double attacker_utility(const SignalingGame& game, const Distribution& belief,
                        const std::string& signal, const std::string& action) {
  double u = 0.0;
  for (const auto& [t, p] : belief) {
    if (p == 0.0) continue;
    u += p * game.payoff(t, signal, action).attacker;
  }
  return u;
}

double defender_utility(const SignalingGame& game, const AttackerStrategy& attacker,
                        const std::string& type, const std::string& signal) {
  const auto& sigma = attacker.action_dist.at(signal);
  double u = 0.0;
  for (const auto& a : game.actions_of(signal))
    u += prob_of(sigma, a) * game.payoff(type, signal, a).defender;
  return u;
}

namespace {

void check_belief(const SignalingGame& game, const Distribution& belief,
                  const std::string& signal) {
  const auto senders = game.senders_of(signal);
  double total = 0.0;
  for (const auto& [t, p] : belief) {
    if (std::find(senders.begin(), senders.end(), t) == senders.end())
      throw std::invalid_argument("belief at signal '" + signal +
                                  "' puts mass on type '" + t +
                                  "' which cannot send it");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("belief at signal '" + signal + "' does not sum to 1");
}

}  // namespace

std::vector<std::string> attacker_best_response(const SignalingGame& game,
                                                const Distribution& belief,
                                                const std::string& signal, double tol) {
  check_belief(game, belief, signal);
  const auto& actions = game.actions_of(signal);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& a : actions)
    best = std::max(best, attacker_utility(game, belief, signal, a));
  std::vector<std::string> out;
  for (const auto& a : actions)
    if (attacker_utility(game, belief, signal, a) >= best - tol) out.push_back(a);
  return out;
}

std::vector<std::string> defender_best_signals(const SignalingGame& game,
                                               const AttackerStrategy& attacker,
                                               const std::string& type, double tol) {
  check_attacker_strategy(game, attacker);
  const auto& signals = game.signals_of(type);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : signals)
    best = std::max(best, defender_utility(game, attacker, type, s));
  std::vector<std::string> out;
  for (const auto& s : signals)
    if (defender_utility(game, attacker, type, s) >= best - tol) out.push_back(s);
  return out;
}

std::string to_string(Actor who) {
  switch (who) {
    case Actor::Defender: return "defender";
    case Actor::Attacker: return "attacker";
    case Actor::Beliefs: return "beliefs";
  }
  return "?";
}

PbeVerdict check_pbe(const SignalingGame& game, const Assessment& assessment,
                     double tol) {
  check_assessment(game, assessment);
  PbeVerdict verdict;
  auto flag = [&](Actor who, std::string where, std::string deviation, double gain) {
    verdict.violations.push_back({who, std::move(where), std::move(deviation), gain});
  };

  // Sender rationality: every signal carrying mass must be within tol of the
  // type's best signal. Types with zero prior are ignored.
  for (const auto& t : game.types()) {
    if (game.prior(t) == 0.0) continue;
    const auto& tau = assessment.defender.signal_dist.at(t);
    double best = -std::numeric_limits<double>::infinity();
    std::string best_signal;
    for (const auto& s : game.signals_of(t)) {
      const double u = defender_utility(game, assessment.attacker, t, s);
      if (u > best) {
        best = u;
        best_signal = s;
      }
    }
    for (const auto& s : game.signals_of(t)) {
      if (prob_of(tau, s) <= 0.0) continue;
      const double gain = best - defender_utility(game, assessment.attacker, t, s);
      if (gain > tol)
        flag(Actor::Defender, t, "deviate from signal '" + s + "' to '" + best_signal + "'",
             gain);
    }
  }

  // Receiver rationality against the stated beliefs, at every signal
  // (off-path signals included: the prescribed action must be optimal there
  // under the stated belief).
  for (const auto& s : game.signals()) {
    const auto& belief = assessment.beliefs.at_signal.at(s).type_dist;
    const auto& sigma = assessment.attacker.action_dist.at(s);
    double best = -std::numeric_limits<double>::infinity();
    std::string best_action;
    for (const auto& a : game.actions_of(s)) {
      const double u = attacker_utility(game, belief, s, a);
      if (u > best) {
        best = u;
        best_action = a;
      }
    }
    for (const auto& a : game.actions_of(s)) {
      if (prob_of(sigma, a) <= 0.0) continue;
      const double gain = best - attacker_utility(game, belief, s, a);
      if (gain > tol)
        flag(Actor::Attacker, s, "deviate from action '" + a + "' to '" + best_action + "'",
             gain);
    }
  }

  // Bayes consistency of on-path beliefs, and on_path flags matching the
  // defender strategy.
  const BeliefSystem bayes = bayes_update(game, assessment.defender);
  for (const auto& s : game.signals()) {
    const Belief& stated = assessment.beliefs.at_signal.at(s);
    const Belief& derived = bayes.at_signal.at(s);
    if (stated.on_path != derived.on_path)
      flag(Actor::Beliefs, s,
           std::string("on_path flag should be ") + (derived.on_path ? "true" : "false"),
           0.0);
    if (!derived.on_path) continue;
    for (const auto& t : game.senders_of(s)) {
      const double diff =
          std::abs(prob_of(stated.type_dist, t) - prob_of(derived.type_dist, t));
      if (diff > tol)
        flag(Actor::Beliefs, s, "posterior of type '" + t + "' differs from Bayes rule",
             diff);
    }
  }

  verdict.is_pbe = verdict.violations.empty();
  return verdict;
}

namespace {

// Advances a mixed-radix counter; returns false once it wraps around.
bool next_assignment(std::vector<std::size_t>& idx, const std::vector<std::size_t>& radix) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (++idx[i] < radix[i]) return true;
    idx[i] = 0;
  }
  return false;
}

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool empty = false;
};

// Beliefs q = Pr[t0] at an off-path signal for which `prescribed` is a weak
// best response. The attacker utility of each action is linear in q, so each
// pairwise comparison contributes a half-line constraint.
Interval supporting_interval(const SignalingGame& game, const std::string& signal,
                             const std::string& t0, const std::string& t1,
                             const std::string& prescribed, double tol) {
  Interval iv;
  for (const auto& b : game.actions_of(signal)) {
    if (b == prescribed) continue;
    const double d0 =
        game.payoff(t0, signal, prescribed).attacker - game.payoff(t0, signal, b).attacker;
    const double d1 =
        game.payoff(t1, signal, prescribed).attacker - game.payoff(t1, signal, b).attacker;
    // Requirement: q*d0 + (1-q)*d1 >= -tol.
    const double slope = d0 - d1;
    const double scale = std::abs(d0) + std::abs(d1) + 1.0;
    if (std::abs(slope) <= 1e-15 * scale) {
      if (d1 < -tol) iv.empty = true;
      continue;
    }
    const double bound = (-d1 - tol) / slope;
    if (slope > 0.0)
      iv.lo = std::max(iv.lo, bound);
    else
      iv.hi = std::min(iv.hi, bound);
  }
  if (iv.lo > iv.hi) iv.empty = true;
  return iv;
}

}  // namespace

std::vector<PurePbe> enumerate_pure_pbe(const SignalingGame& game, double tol) {
  game.check();
  const auto& types = game.types();
  const auto& signals = game.signals();

  std::vector<std::size_t> def_radix, att_radix;
  for (const auto& t : types) def_radix.push_back(game.signals_of(t).size());
  for (const auto& s : signals) att_radix.push_back(game.actions_of(s).size());

  std::vector<PurePbe> found;
  std::vector<std::size_t> def_idx(types.size(), 0);
  do {
    DefenderStrategy defender;
    std::map<std::string, std::string> def_choice;
    for (std::size_t i = 0; i < types.size(); ++i) {
      const auto& s = game.signals_of(types[i])[def_idx[i]];
      def_choice[types[i]] = s;
      defender.signal_dist[types[i]] = {{s, 1.0}};
    }
    const BeliefSystem bayes = bayes_update(game, defender);

    std::vector<std::size_t> att_idx(signals.size(), 0);
    do {
      AttackerStrategy attacker;
      std::map<std::string, std::string> att_choice;
      for (std::size_t i = 0; i < signals.size(); ++i) {
        const auto& a = game.actions_of(signals[i])[att_idx[i]];
        att_choice[signals[i]] = a;
        attacker.action_dist[signals[i]] = {{a, 1.0}};
      }

      bool feasible = true;
      BeliefSystem beliefs = bayes;
      std::vector<OffPathSupport> off_path;
      for (const auto& s : signals) {
        const auto& prescribed = att_choice.at(s);
        const Belief& b = bayes.at_signal.at(s);
        if (b.on_path) {
          const auto best = attacker_best_response(game, b.type_dist, s, tol);
          if (std::find(best.begin(), best.end(), prescribed) == best.end()) {
            feasible = false;
            break;
          }
          continue;
        }
        const auto senders = game.senders_of(s);
        if (senders.size() == 1) {
          Distribution point{{senders[0], 1.0}};
          const auto best = attacker_best_response(game, point, s, tol);
          if (std::find(best.begin(), best.end(), prescribed) == best.end()) {
            feasible = false;
            break;
          }
          beliefs.at_signal[s] = {point, false};
          off_path.push_back({s, senders[0], 1.0, 1.0, 1.0});
        } else if (senders.size() == 2) {
          const Interval iv =
              supporting_interval(game, s, senders[0], senders[1], prescribed, tol);
          if (iv.empty) {
            feasible = false;
            break;
          }
          const double w = std::clamp(0.5 * (iv.lo + iv.hi), 0.0, 1.0);
          beliefs.at_signal[s] = {Distribution{{senders[0], w}, {senders[1], 1.0 - w}},
                                  false};
          off_path.push_back({s, senders[0], std::max(iv.lo, 0.0), std::min(iv.hi, 1.0), w});
        } else {
          throw std::domain_error(
              "off-path supporting beliefs implemented for at most two sender types");
        }
      }
      if (!feasible) continue;

      for (const auto& t : types) {
        if (game.prior(t) == 0.0) continue;
        const auto best = defender_best_signals(game, attacker, t, tol);
        if (std::find(best.begin(), best.end(), def_choice.at(t)) == best.end()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;

      PurePbe record;
      record.defender_choice = def_choice;
      record.attacker_choice = att_choice;
      record.beliefs = std::move(beliefs);
      record.off_path = std::move(off_path);
      record.payoffs = expected_payoffs(game, defender, attacker);
      found.push_back(std::move(record));
    } while (next_assignment(att_idx, att_radix));
  } while (next_assignment(def_idx, def_radix));

  return found;
}

}  // namespace hpgame
