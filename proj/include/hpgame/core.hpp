#pragma once

#include <string>
#include <vector>

#include "hpgame/game.hpp"

namespace hpgame {

/**
 * Expected payoffs of a strategy pair:
 *
 *   sum over types of  prior(t) * sum over signals of tau(s|t)
 *                      * sum over actions of sigma(a|s) * payoff(t, s, a)
 *
 * computed componentwise for both players. Throws std::invalid_argument if a
 * strategy references an unknown signal or action (malformed strategy).
 */
Payoff expected_payoffs(const SignalingGame& game, const DefenderStrategy& defender,
                        const AttackerStrategy& attacker);

/**
 * Posterior beliefs induced by the prior and the defender strategy.
 *
 * Signals with positive marginal probability are marked on-path and carry
 * the Bayes posterior over their possible senders. Zero-probability signals
 * are marked off-path and carry an unconstrained placeholder belief (uniform
 * over the types able to send the signal).
 */
BeliefSystem bayes_update(const SignalingGame& game, const DefenderStrategy& defender);

/// Attacker expected utility of playing `action` at `signal` under `belief`.
double attacker_utility(const SignalingGame& game, const Distribution& belief,
                        const std::string& signal, const std::string& action);

/// Defender expected utility for `type` of sending `signal`, given the
/// attacker's behavioral strategy.
double defender_utility(const SignalingGame& game, const AttackerStrategy& attacker,
                        const std::string& type, const std::string& signal);

/// All actions maximizing the attacker's expected utility at `signal` under
/// `belief`; exact ties (within `tol`) return every maximizer. The belief
/// must be supported on senders_of(signal) and sum to 1.
std::vector<std::string> attacker_best_response(const SignalingGame& game,
                                                const Distribution& belief,
                                                const std::string& signal,
                                                double tol = 1e-9);

/// All signals maximizing `type`'s expected defender utility against the
/// attacker strategy, ties included within `tol`.
std::vector<std::string> defender_best_signals(const SignalingGame& game,
                                               const AttackerStrategy& attacker,
                                               const std::string& type,
                                               double tol = 1e-9);

enum class Actor { Defender, Attacker, Beliefs };

std::string to_string(Actor who);

/// One failed equilibrium requirement: `where` names the type (defender),
/// signal (attacker) or signal (beliefs); `deviation` names the profitable
/// alternative or the mismatch; `gain` is the utility improvement (for
/// beliefs, the posterior discrepancy).
struct PbeViolation {
  Actor who = Actor::Defender;
  std::string where;
  std::string deviation;
  double gain = 0.0;
};

struct PbeVerdict {
  bool is_pbe = true;
  std::vector<PbeViolation> violations;
};

/**
 * Certifies an assessment as a perfect Bayesian equilibrium.
 *
 * The verdict lists, as data rather than faults:
 *  - every type that puts mass on a signal whose expected utility trails the
 *    best signal by more than `tol`,
 *  - every signal whose action distribution puts mass on an action that is
 *    not a best response to the stated belief (gain > tol),
 *  - every on-path belief that differs from the Bayes posterior by more than
 *    `tol`, and every on_path flag inconsistent with the defender strategy.
 *
 * Types with zero prior are ignored. is_pbe holds iff no violation is found.
 * Structurally malformed assessments throw std::invalid_argument instead.
 */
PbeVerdict check_pbe(const SignalingGame& game, const Assessment& assessment,
                     double tol);

/// Supporting-belief interval for a prescribed action at an off-path signal,
/// expressed as bounds on the probability of `anchor_type` (the first
/// possible sender). `witness` is one belief inside the interval.
struct OffPathSupport {
  std::string signal;
  std::string anchor_type;
  double lo = 0.0;
  double hi = 1.0;
  double witness = 0.0;
};

/// One pure strategy profile certified as a PBE by exhaustive checking.
struct PurePbe {
  std::map<std::string, std::string> defender_choice;  // type -> signal
  std::map<std::string, std::string> attacker_choice;  // signal -> action
  BeliefSystem beliefs;  // Bayes on-path, witness beliefs off-path
  std::vector<OffPathSupport> off_path;
  Payoff payoffs;
};

/**
 * Exhaustive pure-profile PBE search, the brute-force oracle for the
 * analytic equilibrium catalog.
 *
 * Enumerates every pure defender profile (one signal per type) against every
 * pure attacker profile (one action per signal). On-path beliefs follow
 * Bayes rule; for each off-path signal the attacker's payoff is linear in a
 * scalar belief, so the set of beliefs supporting the prescribed action is a
 * closed interval computed exactly. A profile is a PBE iff every off-path
 * interval is nonempty and every on-path best-response check passes (weak
 * best responses are admissible). Each returned record carries one witness
 * belief per off-path signal and the interval bounds.
 *
 * Types with zero prior are exempt from the sequential-rationality check;
 * their prescribed signal is still part of the profile, so degenerate priors
 * can yield several belief-equivalent records.
 *
 * Off-path signals with more than two possible senders are out of scope and
 * throw std::domain_error.
 */
std::vector<PurePbe> enumerate_pure_pbe(const SignalingGame& game, double tol = 1e-9);

}  // namespace hpgame
