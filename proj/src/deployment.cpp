#include "hpgame/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpgame {

double CostModel::effective_ch(double p_h) const {
  if (kind_ == Kind::Fixed) return value_;
  if (p_h == 1.0)
    throw std::domain_error("dynamic honeypot cost is singular at P_h = 1");
  return value_ * p_h / (1.0 - p_h);
}

GameParams effective_params(const GameParams& params, const CostModel& cost, double p_h) {
  GameParams out = params;
  out.p_h = p_h;
  out.c_h = cost.effective_ch(p_h);
  return out;
}

namespace {

struct PointEquilibria {
  std::vector<EquilibriumName> names;
  std::vector<Payoff> payoffs;
};

// Pure equilibria applicable at the effective parameters, by condition, with
// closed-form payoffs. Equivalent to filtering analytic_equilibria down to
// the pure records but cheap enough for dense grids.
PointEquilibria pure_equilibria_at(const GameParams& eff, GameKind kind, double tol) {
  PointEquilibria pe;
  if (kind == GameKind::Honest) {
    pe.names.push_back(EquilibriumName::HE1);
    pe.payoffs.push_back(equilibrium_payoffs(EquilibriumName::HE1, eff));
    return pe;
  }
  const bool full = kind == GameKind::FullFeatured;
  const double th = threshold(eff).value;
  if (eff.p_h <= th + tol) {
    const EquilibriumName n = full ? EquilibriumName::FE1 : EquilibriumName::SE1;
    pe.names.push_back(n);
    pe.payoffs.push_back(equilibrium_payoffs(n, eff));
  }
  if (eff.p_h >= th - tol) {
    const EquilibriumName n = full ? EquilibriumName::FE2 : EquilibriumName::SE2;
    pe.names.push_back(n);
    pe.payoffs.push_back(equilibrium_payoffs(n, eff));
  }
  return pe;
}

std::size_t select_index(const PointEquilibria& pe, SelectionPolicy policy, double p_h) {
  if (policy.kind == SelectionPolicy::Kind::Fixed) {
    for (std::size_t i = 0; i < pe.names.size(); ++i)
      if (pe.names[i] == policy.fixed_name) return i;
    throw std::invalid_argument("equilibrium '" + to_string(policy.fixed_name) +
                                "' is not applicable at P_h = " + std::to_string(p_h));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < pe.names.size(); ++i) {
    const bool better = policy.kind == SelectionPolicy::Kind::Optimistic
                            ? pe.payoffs[i].defender > pe.payoffs[best].defender
                            : pe.payoffs[i].defender < pe.payoffs[best].defender;
    if (better) best = i;
  }
  return best;
}

void require_sorted(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("grid must be sorted ascending");
}

}  // namespace

std::vector<SweepPoint> sweep(const GameParams& params, const CostModel& cost,
                              const std::vector<double>& grid, SelectionPolicy policy,
                              GameKind kind, double tol) {
  require_sorted(grid);
  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (double p : grid) {
    const GameParams eff = effective_params(params, cost, p);
    const PointEquilibria pe = pure_equilibria_at(eff, kind, tol);
    SweepPoint pt;
    pt.p_h = p;
    pt.c_h_effective = eff.c_h;
    pt.equilibria = pe.names;
    pt.payoffs = pe.payoffs;
    const std::size_t sel = select_index(pe, policy, p);
    pt.selected = pe.names[sel];
    pt.selected_payoff = pe.payoffs[sel];
    if (kind != GameKind::Honest) {
      const bool full = kind == GameKind::FullFeatured;
      pt.branch1_defender =
          equilibrium_payoffs(full ? EquilibriumName::FE1 : EquilibriumName::SE1, eff)
              .defender;
      pt.branch2_defender =
          equilibrium_payoffs(full ? EquilibriumName::FE2 : EquilibriumName::SE2, eff)
              .defender;
    }
    pt.assumption_ok = validate(eff).empty();
    points.push_back(std::move(pt));
  }
  return points;
}

OptimalPoint optimal_ph(const GameParams& params, const CostModel& cost,
                        SelectionPolicy policy, GameKind kind, double resolution,
                        double tol) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  const double th = threshold(params).value;
  const double cap = cost.kind() == CostModel::Kind::Dynamic ? kDynamicPhCap : 1.0;

  const auto upper = [&](double p) {
    const GameParams eff = effective_params(params, cost, p);
    const PointEquilibria pe = pure_equilibria_at(eff, kind, tol);
    double best = pe.payoffs[0].defender;
    for (const Payoff& v : pe.payoffs) best = std::max(best, v.defender);
    return best;
  };

  std::vector<double> candidates = {0.0, std::min(th, cap), cap};
  if (cost.kind() == CostModel::Kind::Dynamic) {
    // Stationary point of p*(b_d + c_a) - c_a - k p^2/(1-p) on the attack
    // branch; the leave branch is strictly decreasing, so it adds none.
    const double m = params.b_d + params.c_a;
    const double p1 = 1.0 - std::sqrt(cost.parameter() / (m + cost.parameter()));
    if (p1 > 0.0 && p1 < std::min(th, cap)) candidates.push_back(p1);
  }
  std::sort(candidates.begin(), candidates.end());

  double best_p = candidates.front();
  double best_v = upper(best_p);
  for (double p : candidates) {
    const double v = upper(p);
    if (v > best_v + 1e-12) {
      best_v = v;
      best_p = p;
    }
  }

  // Grid cross-validation; it only overrides the closed-form candidates when
  // it finds a genuinely better value.
  for (double p = 0.0; p <= cap + 1e-12; p += resolution) {
    const double clamped = std::min(p, cap);
    const double v = upper(clamped);
    if (v > best_v + 1e-9) {
      best_v = v;
      best_p = clamped;
    }
  }

  const GameParams eff = effective_params(params, cost, best_p);
  const PointEquilibria pe = pure_equilibria_at(eff, kind, tol);
  const std::size_t sel = select_index(pe, policy, best_p);
  return {best_p, pe.payoffs[sel], pe.names[sel], th};
}

MonotonicityReport attacker_monotonicity_check(const GameParams& params,
                                               const CostModel& cost,
                                               const std::vector<double>& grid,
                                               double tol) {
  require_sorted(grid);
  const double th = threshold(params).value;
  const auto attacker_value = [&](double p) {
    // Attack branch below the threshold, constant -c_p at and above; the two
    // coincide exactly at the threshold, so the boundary side is immaterial.
    if (p <= th) return p * (-params.c_t) + (1.0 - p) * params.b_s;
    return -params.c_p;
  };
  MonotonicityReport report;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double lo = attacker_value(grid[i]);
    const double hi = attacker_value(grid[i + 1]);
    if (hi > lo + tol) {
      report.monotone = false;
      report.violation = MonotonicityReport::Witness{grid[i], grid[i + 1], lo, hi};
      break;
    }
  }
  (void)cost;  // the attacker payoff never depends on the honeypot cost
  return report;
}

std::optional<double> crossover_ph(const GameParams& params, const CostModel& cost,
                                   SelectionPolicy policy, std::optional<double> baseline) {
  if (policy.kind == SelectionPolicy::Kind::Fixed &&
      (policy.fixed_name == EquilibriumName::SE1 || policy.fixed_name == EquilibriumName::FE1))
    throw std::invalid_argument("crossover is defined on the leave branch above the threshold");
  const double b = baseline.value_or(-params.c_a);
  const double th = threshold(params).value;

  if (cost.kind() == CostModel::Kind::Fixed) {
    // -c_h * p crosses b at p = -b / c_h, decreasing.
    if (!(-cost.parameter() * 1.0 < b)) return std::nullopt;  // never drops below
    const double root = -b / cost.parameter();
    return std::max(root, th);
  }

  // Dynamic: -k p^2 / (1 - p) is strictly decreasing to -inf, so a crossing
  // always exists; solve k p^2 = -b (1 - p).
  if (b >= 0.0) return th;  // branch is negative immediately above the threshold
  const double k = cost.parameter();
  const double beta = -b;
  const double root = (-beta + std::sqrt(beta * beta + 4.0 * k * beta)) / (2.0 * k);
  return std::max(root, th);
}

}  // namespace hpgame
