#pragma once

#include <map>
#include <string>
#include <vector>

namespace hpgame {

/// Utility pair accruing at a terminal node, in dimensionless utility units.
struct Payoff {
  double defender = 0.0;
  double attacker = 0.0;
};

inline Payoff operator+(Payoff a, Payoff b) {
  return {a.defender + b.defender, a.attacker + b.attacker};
}
inline Payoff operator*(double w, Payoff p) {
  return {w * p.defender, w * p.attacker};
}

/// Discrete probability distribution keyed by outcome identifier.
/// Entries may be sparse: a missing key means probability zero. Iteration
/// order (and therefore every serialized or sampled order) is the
/// lexicographic order of the identifiers.
using Distribution = std::map<std::string, double>;

/// Probability of `key` under `d`, zero if absent.
double prob_of(const Distribution& d, const std::string& key);

/**
 * Finite two-player signaling game.
 *
 * Nature draws a sender type from the prior; the sender (defender) emits a
 * signal from that type's signal set; the receiver (attacker) observes only
 * the signal and picks an action from that signal's action set. Payoffs are
 * defined per (type, signal, action) leaf.
 *
 * Build the game once with add_type / add_signal / add_action / set_payoff,
 * call check(), then treat it as immutable. All query methods are const and
 * the object is safe to share across concurrent readers.
 */
class SignalingGame {
 public:
  void add_type(const std::string& type, double prior);
  void add_signal(const std::string& type, const std::string& signal);
  void add_action(const std::string& signal, const std::string& action);
  void set_payoff(const std::string& type, const std::string& signal,
                  const std::string& action, Payoff value);

  /// Sender types in insertion order.
  const std::vector<std::string>& types() const { return types_; }
  /// All signals in first-appearance order (union over the type signal sets).
  const std::vector<std::string>& signals() const { return signals_; }

  double prior(const std::string& type) const;
  const std::vector<std::string>& signals_of(const std::string& type) const;
  const std::vector<std::string>& actions_of(const std::string& signal) const;
  Payoff payoff(const std::string& type, const std::string& signal,
                const std::string& action) const;

  bool has_type(const std::string& type) const;
  bool can_send(const std::string& type, const std::string& signal) const;
  /// Types whose signal set contains `signal`, in type order. A belief held
  /// at a signal must be supported on this set.
  std::vector<std::string> senders_of(const std::string& signal) const;

  /**
   * Verifies the structural invariants; throws std::invalid_argument on the
   * first breach:
   *  - priors lie in [0, 1] and sum to 1 within `tol`,
   *  - every type has a nonempty signal set, every signal a nonempty action
   *    set, and a payoff exists for every reachable (type, signal, action).
   * (Every signal belongs to at least one type's set by construction.)
   */
  void check(double tol = 1e-12) const;

 private:
  std::vector<std::string> types_;
  std::vector<std::string> signals_;
  std::map<std::string, double> prior_;
  std::map<std::string, std::vector<std::string>> signals_of_;
  std::map<std::string, std::vector<std::string>> actions_of_;
  std::map<std::string, std::map<std::string, std::map<std::string, Payoff>>> payoff_;
};

/// Behavioral strategy of the sender: one distribution over signals per type.
struct DefenderStrategy {
  std::map<std::string, Distribution> signal_dist;  // type -> dist over its signals
};

/// Behavioral strategy of the receiver: one distribution over actions per signal.
struct AttackerStrategy {
  std::map<std::string, Distribution> action_dist;  // signal -> dist over its actions
};

/// Posterior over the types able to send a signal, plus whether the signal
/// is reached with positive probability under the sender strategy.
struct Belief {
  Distribution type_dist;
  bool on_path = false;
};

struct BeliefSystem {
  std::map<std::string, Belief> at_signal;  // one belief per game signal
};

/// A candidate equilibrium object: strategies for both players plus the
/// attacker's belief system.
struct Assessment {
  DefenderStrategy defender;
  AttackerStrategy attacker;
  BeliefSystem beliefs;
};

/// Structural validation. Each checker throws std::invalid_argument when a
/// strategy references an unknown identifier, omits a required distribution,
/// places mass outside the legal support, or a distribution's mass does not
/// sum to 1 within `tol`.
void check_defender_strategy(const SignalingGame& game, const DefenderStrategy& s,
                             double tol = 1e-12);
void check_attacker_strategy(const SignalingGame& game, const AttackerStrategy& s,
                             double tol = 1e-12);
void check_assessment(const SignalingGame& game, const Assessment& a,
                      double tol = 1e-12);

}  // namespace hpgame
