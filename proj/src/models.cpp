#include "hpgame/models.hpp"

#include <cstdio>

namespace hpgame {

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::Honest: return "honest";
    case GameKind::SemiFeatured: return "semi";
    case GameKind::FullFeatured: return "full";
  }
  return "?";
}

std::optional<GameKind> parse_game_kind(const std::string& text) {
  if (text == "honest") return GameKind::Honest;
  if (text == "semi") return GameKind::SemiFeatured;
  if (text == "full") return GameKind::FullFeatured;
  return std::nullopt;
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

std::vector<std::string> validate(const GameParams& g) {
  std::vector<std::string> v;
  auto positive = [&](double x, const char* name) {
    if (!(x > 0.0))
      v.push_back(std::string(name) + " > 0 violated (" + name + " = " + num(x) + ")");
  };
  positive(g.b_s, "b_s");
  positive(g.c_t, "c_t");
  positive(g.c_p, "c_p");
  positive(g.b_d, "b_d");
  positive(g.c_a, "c_a");
  positive(g.c_h, "c_h");
  positive(g.c_n, "c_n");
  if (!(g.p_h >= 0.0 && g.p_h <= 1.0))
    v.push_back("0 <= P_h <= 1 violated (P_h = " + num(g.p_h) + ")");
  if (!(g.c_t > g.c_p))
    v.push_back("c_t > c_p violated (c_t = " + num(g.c_t) + ", c_p = " + num(g.c_p) + ")");
  if (!(g.c_h < g.c_a))
    v.push_back("c_h < c_a violated (c_h = " + num(g.c_h) + ", c_a = " + num(g.c_a) + ")");
  if (!(g.c_n < g.c_h))
    v.push_back("c_n < c_h violated (c_n = " + num(g.c_n) + ", c_h = " + num(g.c_h) + ")");
  if (!(g.c_n < g.c_a))
    v.push_back("c_n < c_a violated (c_n = " + num(g.c_n) + ", c_a = " + num(g.c_a) + ")");
  return v;
}

SignalingGame build(GameKind kind, const GameParams& g) {
  SignalingGame game;
  if (kind == GameKind::Honest) {
    // Degenerate signaling game: one type, one vacuous signal. Keeping it in
    // the same formalism gives a single code path for payoff evaluation,
    // simulation and certification.
    game.add_type("N", 1.0);
    game.add_signal("N", "n");
    game.add_action("n", "A");
    game.add_action("n", "L");
    game.set_payoff("N", "n", "A", {-g.c_a, g.b_s});
    game.set_payoff("N", "n", "L", {0.0, -g.c_p});
    game.check();
    return game;
  }

  game.add_type("H", g.p_h);
  game.add_type("N", 1.0 - g.p_h);
  game.add_signal("H", "h");
  game.add_signal("H", "n");
  game.add_signal("N", "n");
  if (kind == GameKind::FullFeatured) game.add_signal("N", "h");
  game.add_action("h", "A");
  game.add_action("h", "L");
  game.add_action("n", "A");
  game.add_action("n", "L");

  // Honeypot leaves are signal-independent: attacking a honeypot reveals the
  // attack either way.
  for (const char* s : {"h", "n"}) {
    game.set_payoff("H", s, "A", {g.b_d - g.c_h, -g.c_t});
    game.set_payoff("H", s, "L", {-g.c_h, -g.c_p});
  }
  game.set_payoff("N", "n", "A", {-g.c_a, g.b_s});
  game.set_payoff("N", "n", "L", {0.0, -g.c_p});
  if (kind == GameKind::FullFeatured) {
    // Disguising a normal node costs the defender c_n on top of the usual
    // outcome of the attacker's move.
    game.set_payoff("N", "h", "A", {-g.c_a - g.c_n, g.b_s});
    game.set_payoff("N", "h", "L", {-g.c_n, -g.c_p});
  }
  game.check();
  return game;
}

}  // namespace hpgame
