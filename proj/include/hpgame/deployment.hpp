#pragma once

#include <optional>
#include <vector>

#include "hpgame/analytic.hpp"
#include "hpgame/models.hpp"

namespace hpgame {

/// Dynamic sweeps stop short of the cost singularity at P_h = 1.
inline constexpr double kDynamicPhCap = 1.0 - 1e-3;

/**
 * Honeypot deployment cost as a function of the honeypot ratio. Fixed keeps
 * c_h constant; Dynamic models a fixed normal-node population with added
 * honeypots, c_h(P_h) = k * P_h / (1 - P_h), undefined at P_h = 1.
 */
class CostModel {
 public:
  enum class Kind { Fixed, Dynamic };

  static CostModel fixed(double c_h) { return CostModel(Kind::Fixed, c_h); }
  static CostModel dynamic(double k) { return CostModel(Kind::Dynamic, k); }

  Kind kind() const { return kind_; }
  /// The fixed c_h or the dynamic coefficient k, depending on kind().
  double parameter() const { return value_; }
  /// Effective c_h at the given ratio; throws std::domain_error at the
  /// dynamic singularity P_h = 1.
  double effective_ch(double p_h) const;

 private:
  CostModel(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

/// How to score a grid point where several equilibria coexist (which happens
/// only at the threshold): best defender payoff, worst, or a named one.
struct SelectionPolicy {
  enum class Kind { Optimistic, Pessimistic, Fixed };
  Kind kind = Kind::Pessimistic;
  EquilibriumName fixed_name = EquilibriumName::Numeric;

  static SelectionPolicy optimistic() { return {Kind::Optimistic, EquilibriumName::Numeric}; }
  static SelectionPolicy pessimistic() { return {Kind::Pessimistic, EquilibriumName::Numeric}; }
  static SelectionPolicy fixed_to(EquilibriumName name) { return {Kind::Fixed, name}; }
};

/// One evaluated abscissa of a P_h sweep. Payoffs are per pure equilibrium
/// applicable at this point (the semi-separating knife-edge profile is not
/// part of deployment sweeps); branch payoffs evaluate the two pooling
/// payoff expressions whether or not their condition holds, which is what a
/// per-equilibrium plot needs.
struct SweepPoint {
  double p_h = 0.0;
  double c_h_effective = 0.0;
  std::vector<EquilibriumName> equilibria;
  std::vector<Payoff> payoffs;  // aligned with `equilibria`
  EquilibriumName selected = EquilibriumName::Numeric;
  Payoff selected_payoff;
  std::optional<double> branch1_defender;  // SE1/FE1 expression (absent for honest)
  std::optional<double> branch2_defender;  // SE2/FE2 expression
  bool assumption_ok = true;
};

/// `params` with the prior and the effective honeypot cost replaced; every
/// other field is untouched.
GameParams effective_params(const GameParams& params, const CostModel& cost, double p_h);

/**
 * Evaluates one SweepPoint per grid value (the grid must be nonempty and
 * sorted ascending). Equilibria and payoffs follow the closed-form catalog
 * at the effective parameters; assumption_ok flags points where the
 * effective c_h leaves the validated region. Each point is a pure
 * computation, so the rows are deterministic regardless of evaluation order.
 */
std::vector<SweepPoint> sweep(const GameParams& params, const CostModel& cost,
                              const std::vector<double>& grid, SelectionPolicy policy,
                              GameKind kind, double tol = 1e-9);

struct OptimalPoint {
  double p_h = 0.0;
  Payoff payoff;
  EquilibriumName equilibrium = EquilibriumName::Numeric;
  double threshold = 0.0;
};

/**
 * The deployment ratio maximizing the defender payoff.
 *
 * The best achievable (optimistic-envelope) payoff is piecewise: the pooling
 * attack branch below the threshold, the pooling leave branch above, with a
 * possible interior stationary point under dynamic cost. The argmax is found
 * on the closed-form candidate set {0, threshold, 1 (or the dynamic cap),
 * interior stationary points} and cross-validated by a grid scan at
 * `resolution`; ties break toward smaller P_h. The reported payoff and
 * equilibrium apply the selection policy at that argmax, so coexistence at
 * the threshold is scored per the caller's posture.
 */
OptimalPoint optimal_ph(const GameParams& params, const CostModel& cost,
                        SelectionPolicy policy, GameKind kind, double resolution = 1e-4,
                        double tol = 1e-9);

/// Witness report for the attacker-payoff monotonicity property.
struct MonotonicityReport {
  bool monotone = true;
  struct Witness {
    double p_lo = 0.0, p_hi = 0.0;
    double value_lo = 0.0, value_hi = 0.0;
  };
  std::optional<Witness> violation;  // first increasing pair, if any
};

/// Checks that the attacker's equilibrium payoff is non-increasing along the
/// grid (strictly decreasing below the threshold, constant -c_p above; the
/// honeypot cost never enters it). The grid must be sorted ascending.
MonotonicityReport attacker_monotonicity_check(const GameParams& params,
                                               const CostModel& cost,
                                               const std::vector<double>& grid,
                                               double tol = 1e-9);

/**
 * Smallest P_h above the threshold at which the defender's payoff on the
 * pooling leave branch drops below `baseline` (default: the no-deception
 * payoff -c_a). Returns the exact crossing (linear or quadratic root), the
 * threshold itself when the branch already starts below the baseline, or
 * nothing when the branch never drops below it.
 */
std::optional<double> crossover_ph(const GameParams& params, const CostModel& cost,
                                   SelectionPolicy policy,
                                   std::optional<double> baseline = std::nullopt);

}  // namespace hpgame
