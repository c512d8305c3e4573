#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpgame/game.hpp"

namespace hpgame {

/// Outcome statistics of a seeded Monte Carlo run. Means and deviations are
/// derived from the outcome counts, so `mean == payoff-weighted counts /
/// plays` holds exactly by construction.
struct SimulationReport {
  std::uint64_t plays = 0;
  std::uint64_t seed = 0;
  std::string generator;  // PRNG family used, fixed to "mt19937_64"

  double defender_mean = 0.0;
  double attacker_mean = 0.0;
  double defender_stddev = 0.0;  // sample standard deviation (n - 1)
  double attacker_stddev = 0.0;
  double defender_se = 0.0;  // stddev / sqrt(plays)
  double attacker_se = 0.0;

  struct OutcomeCount {
    std::string type, signal, action;
    std::uint64_t count = 0;
  };
  /// One entry per reachable (type, signal, action) path, zero counts
  /// included, ordered by type, then the type's signals, then the signal's
  /// actions in game order. Counts sum to `plays`.
  std::vector<OutcomeCount> counts;
};

/**
 * Plays the game `plays` times under the assessment's behavioral strategies
 * and reports empirical payoff statistics.
 *
 * Each play draws the type from the prior, the signal from the defender's
 * distribution for that type, and the action from the attacker's
 * distribution for that signal — exactly three variates from a single
 * std::mt19937_64 seeded with `seed`, mapped to [0, 1) with the 53-bit
 * (x >> 11) * 2^-53 ladder. Discrete sampling is inverse-CDF over the
 * distribution's outcomes in lexicographic identifier order: outcome k is
 * chosen when cum_{k-1} <= u < cum_k, with the final outcome absorbing any
 * floating-point remainder. The report is therefore bit-identical for
 * identical (game, assessment, plays, seed).
 */
SimulationReport run(const SignalingGame& game, const Assessment& assessment,
                     std::uint64_t plays, std::uint64_t seed);

}  // namespace hpgame
