#include "hpgame/simulate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hpgame {

namespace {

double to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Cumulative inverse-CDF table over a Distribution's outcomes in
// lexicographic (map) order.
struct Sampler {
  std::vector<double> cum;
  std::vector<std::size_t> target;

  std::size_t draw(double u) const {
    for (std::size_t i = 0; i + 1 < cum.size(); ++i)
      if (u < cum[i]) return target[i];
    return target.back();  // last bucket absorbs rounding remainder
  }
};

}  // namespace

SimulationReport run(const SignalingGame& game, const Assessment& assessment,
                     std::uint64_t plays, std::uint64_t seed) {
  if (plays < 1) throw std::invalid_argument("plays must be at least 1");
  check_assessment(game, assessment);

  // Flatten the game into index tables once; the play loop is index-only.
  struct Path {
    std::string type, signal, action;
    Payoff payoff;
  };
  std::vector<Path> paths;
  std::vector<std::vector<std::vector<std::size_t>>> path_index;  // [type][signal][action]

  const auto& types = game.types();
  Sampler type_sampler;
  std::vector<Sampler> signal_samplers(types.size());
  std::vector<std::vector<std::string>> type_signals(types.size());
  std::map<std::string, Sampler> action_samplers;

  {
    double acc = 0.0;
    for (std::size_t i = 0; i < types.size(); ++i) {
      acc += game.prior(types[i]);
      type_sampler.cum.push_back(acc);
      type_sampler.target.push_back(i);
    }
  }
  for (const auto& s : game.signals()) {
    Sampler sam;
    double acc = 0.0;
    std::size_t j = 0;
    for (const auto& a : game.actions_of(s)) {
      acc += prob_of(assessment.attacker.action_dist.at(s), a);
      sam.cum.push_back(acc);
      sam.target.push_back(j++);
    }
    action_samplers[s] = std::move(sam);
  }
  path_index.resize(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& t = types[i];
    const auto& dist = assessment.defender.signal_dist.at(t);
    double acc = 0.0;
    std::size_t j = 0;
    for (const auto& s : game.signals_of(t)) {
      type_signals[i].push_back(s);
      acc += prob_of(dist, s);
      signal_samplers[i].cum.push_back(acc);
      signal_samplers[i].target.push_back(j++);
      std::vector<std::size_t> per_action;
      for (const auto& a : game.actions_of(s)) {
        per_action.push_back(paths.size());
        paths.push_back({t, s, a, game.payoff(t, s, a)});
      }
      path_index[i].push_back(std::move(per_action));
    }
  }

  std::vector<std::uint64_t> counts(paths.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t n = 0; n < plays; ++n) {
    const std::size_t ti = type_sampler.draw(to_unit(rng()));
    const std::size_t si = signal_samplers[ti].draw(to_unit(rng()));
    const std::string& sig = type_signals[ti][si];
    const std::size_t ai = action_samplers.at(sig).draw(to_unit(rng()));
    ++counts[path_index[ti][si][ai]];
  }

  SimulationReport report;
  report.plays = plays;
  report.seed = seed;
  report.generator = "mt19937_64";

  double sum_d = 0.0, sum_a = 0.0, sumsq_d = 0.0, sumsq_a = 0.0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const double n = static_cast<double>(counts[i]);
    sum_d += n * paths[i].payoff.defender;
    sum_a += n * paths[i].payoff.attacker;
    sumsq_d += n * paths[i].payoff.defender * paths[i].payoff.defender;
    sumsq_a += n * paths[i].payoff.attacker * paths[i].payoff.attacker;
    report.counts.push_back({paths[i].type, paths[i].signal, paths[i].action, counts[i]});
  }
  const double np = static_cast<double>(plays);
  report.defender_mean = sum_d / np;
  report.attacker_mean = sum_a / np;
  if (plays > 1) {
    const double var_d =
        std::max(0.0, (sumsq_d - np * report.defender_mean * report.defender_mean) / (np - 1.0));
    const double var_a =
        std::max(0.0, (sumsq_a - np * report.attacker_mean * report.attacker_mean) / (np - 1.0));
    report.defender_stddev = std::sqrt(var_d);
    report.attacker_stddev = std::sqrt(var_a);
  }
  report.defender_se = report.defender_stddev / std::sqrt(np);
  report.attacker_se = report.attacker_stddev / std::sqrt(np);
  return report;
}

}  // namespace hpgame
