#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpgame/core.hpp"
#include "hpgame/models.hpp"

namespace hpgame {

/// The attacker-indifference prior (b_s + c_p) / (b_s + c_t): below it the
/// attacker prefers attacking a pooled normal signal, above it leaving.
/// Strictly inside (0, 1) whenever the parameters are positive and c_t > c_p.
struct Threshold {
  double value;
};

Threshold threshold(const GameParams& params);

/// Catalog names for the closed-form equilibria; Numeric marks records that
/// only exist as computed profiles.
enum class EquilibriumName { HE1, SE1, SE2, FE1, FE2, FE3, Numeric };

std::string to_string(EquilibriumName name);
std::optional<EquilibriumName> parse_equilibrium_name(const std::string& text);

/// Applicability predicate with a human-readable rendering of the evaluated
/// inequality.
struct Condition {
  bool holds = true;
  std::string text;
};

/// Off-path supporting-belief interval in Pr[anchor type = honeypot];
/// `witness` is the belief stored in the record's assessment.
struct OffPathCondition {
  std::string signal;
  double lo = 0.0;
  double hi = 1.0;
  double witness = 0.0;
  std::string text;
};

struct EquilibriumRecord {
  EquilibriumName name = EquilibriumName::Numeric;
  GameKind kind = GameKind::Honest;
  Assessment assessment;
  Condition on_condition;
  std::vector<OffPathCondition> off_conditions;
  Payoff payoffs;       // expected_payoffs of the assessment
  std::string profile;  // printable strategy profile, e.g. "((n, n), (A, A))"
};

/**
 * The closed-form equilibrium catalog of the selected game at the given
 * parameters.
 *
 * Honest: HE1 (attack) always. Semi-featured: SE1 = (n, (L, A)) iff
 * P_h <= threshold + tol, SE2 = (n, (L, L)) iff P_h >= threshold - tol; the
 * off-path signal h can only come from a honeypot, so its belief is the
 * point q = 1 (where leaving dominates). Full-featured: FE1 = ((n,n), (A,A))
 * with supporting off-path interval q <= threshold, FE2 = ((n,n), (L,L))
 * with q >= threshold, same boundary tolerance; FE3, the semi-separating
 * profile, is included iff |P_h - threshold| <= tol.
 *
 * Both pooling equilibria are reported at the boundary (the conditions are
 * weak inequalities); consumers choose a selection policy. Witness beliefs
 * are the prior clamped into the supporting interval.
 */
std::vector<EquilibriumRecord> analytic_equilibria(GameKind kind, const GameParams& params,
                                                   double tol = 1e-9, double alpha = 0.5);

/**
 * The semi-separating assessment of the full-featured game: both types mix
 * h with probability alpha, the attacker attacks with probability
 * c_h / (b_d + c_a) at both signals, and both beliefs equal the threshold.
 * Meaningful as an equilibrium only at P_h = threshold, where the beliefs
 * are Bayes-consistent. alpha outside (0, 1) throws std::invalid_argument.
 *
 * Note: with this mixing the normal type strictly prefers the plain signal
 * (disguising costs c_n for no change in the attack probability), so
 * check_pbe reports a defender deviation with gain c_n; the profile is kept
 * verbatim and certified as-is rather than silently repaired.
 */
Assessment fe3_profile(const GameParams& params, double alpha);

/// Closed-form expected payoffs of the named pure equilibrium:
///   HE1       -> (-c_a, b_s)
///   SE1 / FE1 -> (P_h (b_d - c_h) + (1 - P_h)(-c_a), P_h (-c_t) + (1 - P_h) b_s)
///   SE2 / FE2 -> (P_h (-c_h), -c_p)
/// FE3 has no closed form here; request it and get std::invalid_argument
/// (evaluate its assessment with expected_payoffs instead).
Payoff equilibrium_payoffs(EquilibriumName name, const GameParams& params);

}  // namespace hpgame
