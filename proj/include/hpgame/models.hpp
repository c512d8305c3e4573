#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpgame/game.hpp"

namespace hpgame {

/// The three deception tiers: no deception at all, honeypots that may
/// masquerade as normal nodes, and additionally normal nodes disguised as
/// honeypots.
enum class GameKind { Honest, SemiFeatured, FullFeatured };

std::string to_string(GameKind kind);
std::optional<GameKind> parse_game_kind(const std::string& text);  // honest|semi|full

/// The seven payoff scalars plus the honeypot prior.
struct GameParams {
  double b_s;  // attacker benefit from compromising a normal node
  double c_t;  // attacker cost of revealing the attack on a honeypot
  double c_p;  // attacker cost of probing without attacking
  double b_d;  // defender benefit from detecting an attack
  double c_a;  // defender cost of a successful attack
  double c_h;  // defender cost of deploying a honeypot node
  double c_n;  // defender cost of disguising a normal node as a honeypot
  double p_h;  // probability that nature assigns a honeypot node
};

/**
 * Checks the standing assumptions. Returns one descriptor per violated
 * inequality (empty when all hold), naming the inequality and the offending
 * values. Violations are data, not faults: the deployment layer deliberately
 * sweeps into violating regions and flags them.
 *
 * Checked: all seven payoff scalars strictly positive; 0 <= P_h <= 1;
 * c_t > c_p; c_h < c_a; c_n < c_h; c_n < c_a.
 */
std::vector<std::string> validate(const GameParams& params);

/// Constructs the signaling game for the given tier. The caller normally
/// ensures validate(params) is empty but may override it to explore
/// assumption-violating regions.
SignalingGame build(GameKind kind, const GameParams& params);

}  // namespace hpgame
