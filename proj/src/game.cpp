#include "hpgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpgame {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

double prob_of(const Distribution& d, const std::string& key) {
  auto it = d.find(key);
  return it == d.end() ? 0.0 : it->second;
}

void SignalingGame::add_type(const std::string& type, double prior) {
  if (prior_.count(type)) fail("duplicate type '" + type + "'");
  types_.push_back(type);
  prior_[type] = prior;
  signals_of_[type];
}

void SignalingGame::add_signal(const std::string& type, const std::string& signal) {
  auto it = signals_of_.find(type);
  if (it == signals_of_.end()) fail("unknown type '" + type + "'");
  auto& sigs = it->second;
  if (std::find(sigs.begin(), sigs.end(), signal) != sigs.end())
    fail("signal '" + signal + "' already present for type '" + type + "'");
  sigs.push_back(signal);
  if (std::find(signals_.begin(), signals_.end(), signal) == signals_.end()) {
    signals_.push_back(signal);
    actions_of_[signal];
  }
}

void SignalingGame::add_action(const std::string& signal, const std::string& action) {
  auto it = actions_of_.find(signal);
  if (it == actions_of_.end()) fail("unknown signal '" + signal + "'");
  auto& acts = it->second;
  if (std::find(acts.begin(), acts.end(), action) != acts.end())
    fail("action '" + action + "' already present for signal '" + signal + "'");
  acts.push_back(action);
}

void SignalingGame::set_payoff(const std::string& type, const std::string& signal,
                               const std::string& action, Payoff value) {
  if (!can_send(type, signal))
    fail("type '" + type + "' cannot send signal '" + signal + "'");
  const auto& acts = actions_of(signal);
  if (std::find(acts.begin(), acts.end(), action) == acts.end())
    fail("action '" + action + "' undefined for signal '" + signal + "'");
  payoff_[type][signal][action] = value;
}

double SignalingGame::prior(const std::string& type) const {
  auto it = prior_.find(type);
  if (it == prior_.end()) fail("unknown type '" + type + "'");
  return it->second;
}

const std::vector<std::string>& SignalingGame::signals_of(const std::string& type) const {
  auto it = signals_of_.find(type);
  if (it == signals_of_.end()) fail("unknown type '" + type + "'");
  return it->second;
}

const std::vector<std::string>& SignalingGame::actions_of(const std::string& signal) const {
  auto it = actions_of_.find(signal);
  if (it == actions_of_.end()) fail("unknown signal '" + signal + "'");
  return it->second;
}

Payoff SignalingGame::payoff(const std::string& type, const std::string& signal,
                             const std::string& action) const {
  auto t = payoff_.find(type);
  if (t != payoff_.end()) {
    auto s = t->second.find(signal);
    if (s != t->second.end()) {
      auto a = s->second.find(action);
      if (a != s->second.end()) return a->second;
    }
  }
  fail("payoff undefined for (" + type + ", " + signal + ", " + action + ")");
}

bool SignalingGame::has_type(const std::string& type) const {
  return prior_.count(type) != 0;
}

bool SignalingGame::can_send(const std::string& type, const std::string& signal) const {
  auto it = signals_of_.find(type);
  if (it == signals_of_.end()) return false;
  const auto& sigs = it->second;
  return std::find(sigs.begin(), sigs.end(), signal) != sigs.end();
}

std::vector<std::string> SignalingGame::senders_of(const std::string& signal) const {
  std::vector<std::string> out;
  for (const auto& t : types_)
    if (can_send(t, signal)) out.push_back(t);
  return out;
}

void SignalingGame::check(double tol) const {
  if (types_.empty()) fail("game has no types");
  double total = 0.0;
  for (const auto& t : types_) {
    double p = prior_.at(t);
    if (!(p >= 0.0 && p <= 1.0)) fail("prior of type '" + t + "' outside [0, 1]");
    total += p;
    if (signals_of_.at(t).empty()) fail("type '" + t + "' has an empty signal set");
  }
  if (std::abs(total - 1.0) > tol) fail("type priors do not sum to 1");
  for (const auto& s : signals_) {
    if (actions_of_.at(s).empty()) fail("signal '" + s + "' has an empty action set");
  }
  for (const auto& t : types_)
    for (const auto& s : signals_of_.at(t))
      for (const auto& a : actions_of_.at(s)) payoff(t, s, a);
}

namespace {

void check_distribution(const Distribution& d, const std::vector<std::string>& support,
                        const std::string& what, double tol) {
  double total = 0.0;
  for (const auto& [key, p] : d) {
    if (std::find(support.begin(), support.end(), key) == support.end())
      fail(what + " references unknown outcome '" + key + "'");
    if (p < -tol) fail(what + " has a negative probability for '" + key + "'");
    total += p;
  }
  if (std::abs(total - 1.0) > tol) fail(what + " does not sum to 1");
}

}  // namespace

void check_defender_strategy(const SignalingGame& game, const DefenderStrategy& s,
                             double tol) {
  for (const auto& t : game.types()) {
    auto it = s.signal_dist.find(t);
    if (it == s.signal_dist.end())
      fail("defender strategy missing a distribution for type '" + t + "'");
    check_distribution(it->second, game.signals_of(t),
                       "defender strategy for type '" + t + "'", tol);
  }
  for (const auto& [t, d] : s.signal_dist)
    if (!game.has_type(t)) fail("defender strategy references unknown type '" + t + "'");
}

void check_attacker_strategy(const SignalingGame& game, const AttackerStrategy& s,
                             double tol) {
  for (const auto& sig : game.signals()) {
    auto it = s.action_dist.find(sig);
    if (it == s.action_dist.end())
      fail("attacker strategy missing a distribution for signal '" + sig + "'");
    check_distribution(it->second, game.actions_of(sig),
                       "attacker strategy at signal '" + sig + "'", tol);
  }
  for (const auto& [sig, d] : s.action_dist) {
    const auto& sigs = game.signals();
    if (std::find(sigs.begin(), sigs.end(), sig) == sigs.end())
      fail("attacker strategy references unknown signal '" + sig + "'");
  }
}

void check_assessment(const SignalingGame& game, const Assessment& a, double tol) {
  check_defender_strategy(game, a.defender, tol);
  check_attacker_strategy(game, a.attacker, tol);
  for (const auto& sig : game.signals()) {
    auto it = a.beliefs.at_signal.find(sig);
    if (it == a.beliefs.at_signal.end())
      fail("assessment missing a belief for signal '" + sig + "'");
    check_distribution(it->second.type_dist, game.senders_of(sig),
                       "belief at signal '" + sig + "'", tol);
  }
}

}  // namespace hpgame
