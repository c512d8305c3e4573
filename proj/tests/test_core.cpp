#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hpgame/analytic.hpp"
#include "hpgame/core.hpp"
#include "hpgame/models.hpp"
#include "test_support.hpp"

using namespace hpgame;
using testsupport::random_ph_off_threshold;
using testsupport::random_valid_params;
using testsupport::reference_params;

namespace {

DefenderStrategy pure_defender(std::initializer_list<std::pair<const char*, const char*>> m) {
  DefenderStrategy s;
  for (const auto& [t, sig] : m) s.signal_dist[t] = {{sig, 1.0}};
  return s;
}

AttackerStrategy pure_attacker(std::initializer_list<std::pair<const char*, const char*>> m) {
  AttackerStrategy s;
  for (const auto& [sig, a] : m) s.action_dist[sig] = {{a, 1.0}};
  return s;
}

std::set<std::string> as_set(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

// Canonical text key of a pure profile, for set comparison.
std::string profile_key(const std::map<std::string, std::string>& def_choice,
                        const std::map<std::string, std::string>& att_choice) {
  std::string key;
  for (const auto& [t, s] : def_choice) key += t + ">" + s + "|";
  key += "/";
  for (const auto& [s, a] : att_choice) key += s + ">" + a + "|";
  return key;
}

std::string profile_key(const PurePbe& record) {
  return profile_key(record.defender_choice, record.attacker_choice);
}

// Extracts the pure choices of a pure analytic assessment (argmax per
// distribution; the pooling records are all degenerate).
std::string profile_key(const SignalingGame& game, const Assessment& a) {
  std::map<std::string, std::string> def_choice, att_choice;
  for (const auto& t : game.types()) {
    const auto& dist = a.defender.signal_dist.at(t);
    def_choice[t] =
        std::max_element(dist.begin(), dist.end(), [](const auto& x, const auto& y) {
          return x.second < y.second;
        })->first;
  }
  for (const auto& s : game.signals()) {
    const auto& dist = a.attacker.action_dist.at(s);
    att_choice[s] =
        std::max_element(dist.begin(), dist.end(), [](const auto& x, const auto& y) {
          return x.second < y.second;
        })->first;
  }
  return profile_key(def_choice, att_choice);
}

// Random behavioral strategies for property tests.
DefenderStrategy random_defender(const SignalingGame& game, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  DefenderStrategy s;
  for (const auto& t : game.types()) {
    const auto& sigs = game.signals_of(t);
    std::vector<double> w;
    double total = 0.0;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      w.push_back(u(rng) + 1e-3);
      total += w.back();
    }
    for (std::size_t i = 0; i < sigs.size(); ++i) s.signal_dist[t][sigs[i]] = w[i] / total;
  }
  return s;
}

}  // namespace

TEST_CASE("expected payoffs match hand-computed cases") {
  const GameParams g5 = reference_params(0.5);

  const SignalingGame honest = build(GameKind::Honest, g5);
  const Payoff ph = expected_payoffs(honest, pure_defender({{"N", "n"}}),
                                     pure_attacker({{"n", "A"}}));
  CHECK(ph.defender == doctest::Approx(-300.0));
  CHECK(ph.attacker == doctest::Approx(200.0));

  const SignalingGame semi0 = build(GameKind::SemiFeatured, reference_params(0.0));
  const Payoff p0 =
      expected_payoffs(semi0, pure_defender({{"H", "n"}, {"N", "n"}}),
                       pure_attacker({{"h", "L"}, {"n", "L"}}));
  CHECK(p0.defender == doctest::Approx(0.0));
  CHECK(p0.attacker == doctest::Approx(-10.0));

  const SignalingGame full = build(GameKind::FullFeatured, g5);
  const Payoff pf =
      expected_payoffs(full, pure_defender({{"H", "n"}, {"N", "n"}}),
                       pure_attacker({{"h", "A"}, {"n", "A"}}));
  CHECK(pf.defender == doctest::Approx(-125.0));
  CHECK(pf.attacker == doctest::Approx(50.0));
}

TEST_CASE("malformed strategies are rejected") {
  const SignalingGame semi = build(GameKind::SemiFeatured, reference_params(0.5));

  AttackerStrategy bad_action = pure_attacker({{"h", "L"}, {"n", "X"}});
  CHECK_THROWS_AS(
      expected_payoffs(semi, pure_defender({{"H", "n"}, {"N", "n"}}), bad_action),
      std::invalid_argument);

  DefenderStrategy bad_signal = pure_defender({{"H", "n"}, {"N", "h"}});  // N lacks h
  CHECK_THROWS_AS(
      expected_payoffs(semi, bad_signal, pure_attacker({{"h", "L"}, {"n", "A"}})),
      std::invalid_argument);

  DefenderStrategy not_a_dist = pure_defender({{"H", "n"}, {"N", "n"}});
  not_a_dist.signal_dist["H"]["n"] = 0.7;  // sums to 0.7
  CHECK_THROWS_AS(
      expected_payoffs(semi, not_a_dist, pure_attacker({{"h", "L"}, {"n", "A"}})),
      std::invalid_argument);
}

TEST_CASE("bayes update: pooling keeps the prior, separation reveals the type") {
  const SignalingGame semi = build(GameKind::SemiFeatured, reference_params(0.7));
  const BeliefSystem pool =
      bayes_update(semi, pure_defender({{"H", "n"}, {"N", "n"}}));
  CHECK(pool.at_signal.at("n").on_path);
  CHECK(prob_of(pool.at_signal.at("n").type_dist, "H") == doctest::Approx(0.7));
  CHECK_FALSE(pool.at_signal.at("h").on_path);
  // Off-path placeholder: uniform over feasible senders, here only H.
  CHECK(prob_of(pool.at_signal.at("h").type_dist, "H") == doctest::Approx(1.0));

  const SignalingGame full = build(GameKind::FullFeatured, reference_params(0.5));
  const BeliefSystem sep = bayes_update(full, pure_defender({{"H", "h"}, {"N", "n"}}));
  CHECK(prob_of(sep.at_signal.at("h").type_dist, "H") == doctest::Approx(1.0));
  CHECK(prob_of(sep.at_signal.at("n").type_dist, "H") == doctest::Approx(0.0));
  CHECK(sep.at_signal.at("h").on_path);
  CHECK(sep.at_signal.at("n").on_path);
}

TEST_CASE("bayes update: identical mixing preserves the prior") {
  const GameParams g = reference_params(0.7);
  const SignalingGame full = build(GameKind::FullFeatured, g);
  DefenderStrategy mix;
  mix.signal_dist["H"] = {{"h", 0.5}, {"n", 0.5}};
  mix.signal_dist["N"] = {{"h", 0.5}, {"n", 0.5}};
  const BeliefSystem b = bayes_update(full, mix);
  for (const char* s : {"h", "n"}) {
    CHECK(b.at_signal.at(s).on_path);
    CHECK(prob_of(b.at_signal.at(s).type_dist, "H") == doctest::Approx(0.7));
  }
}

TEST_CASE("bayes reconstruction property") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const GameParams g = random_valid_params(rng);
    const SignalingGame game = build(GameKind::FullFeatured, g);
    const DefenderStrategy def = random_defender(game, rng);
    const BeliefSystem beliefs = bayes_update(game, def);
    for (const auto& s : game.signals()) {
      const Belief& b = beliefs.at_signal.at(s);
      double marginal = 0.0;
      for (const auto& t : game.senders_of(s))
        marginal += game.prior(t) * prob_of(def.signal_dist.at(t), s);
      if (!b.on_path) {
        CHECK(marginal == doctest::Approx(0.0));
        continue;
      }
      double total = 0.0;
      for (const auto& t : game.senders_of(s)) {
        // posterior * marginal == prior * strategy joint
        const double joint = prob_of(b.type_dist, t) * marginal;
        CHECK(joint ==
              doctest::Approx(game.prior(t) * prob_of(def.signal_dist.at(t), s)).epsilon(1e-9));
        total += prob_of(b.type_dist, t);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("attacker best response thresholds") {
  const SignalingGame semi = build(GameKind::SemiFeatured, reference_params(0.5));
  CHECK(as_set(attacker_best_response(semi, {{"H", 0.5}, {"N", 0.5}}, "n")) ==
        std::set<std::string>{"A"});
  CHECK(as_set(attacker_best_response(semi, {{"H", 0.7}, {"N", 0.3}}, "n")) ==
        std::set<std::string>{"A", "L"});  // exact indifference at the threshold
  CHECK(as_set(attacker_best_response(semi, {{"H", 1.0}}, "h")) ==
        std::set<std::string>{"L"});
}

TEST_CASE("defender best signals") {
  const GameParams g = reference_params(0.5);
  const SignalingGame semi = build(GameKind::SemiFeatured, g);
  CHECK(as_set(defender_best_signals(semi, pure_attacker({{"h", "L"}, {"n", "A"}}), "H")) ==
        std::set<std::string>{"n"});

  const SignalingGame full = build(GameKind::FullFeatured, g);
  const AttackerStrategy attack_all = pure_attacker({{"h", "A"}, {"n", "A"}});
  CHECK(as_set(defender_best_signals(full, attack_all, "N")) == std::set<std::string>{"n"});
  CHECK(as_set(defender_best_signals(full, attack_all, "H")) ==
        std::set<std::string>{"h", "n"});  // both yield b_d - c_h
}

TEST_CASE("best responses are sound under direct evaluation") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const GameParams g = random_valid_params(rng);
    const SignalingGame game = build(GameKind::FullFeatured, g);
    for (const auto& s : game.signals()) {
      const double q = u(rng);
      const Distribution belief{{"H", q}, {"N", 1.0 - q}};
      for (const auto& a : attacker_best_response(game, belief, s)) {
        const double ua = attacker_utility(game, belief, s, a);
        for (const auto& b : game.actions_of(s))
          CHECK(ua >= attacker_utility(game, belief, s, b) - 1e-9);
      }
    }
    AttackerStrategy att;
    for (const auto& s : game.signals()) {
      const double pa = u(rng);
      att.action_dist[s] = {{"A", pa}, {"L", 1.0 - pa}};
    }
    for (const auto& t : game.types()) {
      for (const auto& s : defender_best_signals(game, att, t)) {
        const double us = defender_utility(game, att, t, s);
        for (const auto& s2 : game.signals_of(t))
          CHECK(us >= defender_utility(game, att, t, s2) - 1e-9);
      }
    }
  }
}

TEST_CASE("check_pbe certifies the honest equilibrium") {
  const SignalingGame honest = build(GameKind::Honest, reference_params(0.5));
  Assessment a;
  a.defender = pure_defender({{"N", "n"}});
  a.attacker = pure_attacker({{"n", "A"}});
  a.beliefs.at_signal["n"] = {Distribution{{"N", 1.0}}, true};
  const PbeVerdict verdict = check_pbe(honest, a, 1e-9);
  CHECK(verdict.is_pbe);
  CHECK(verdict.violations.empty());
}

TEST_CASE("check_pbe flags the separating profile in the full game") {
  const SignalingGame full = build(GameKind::FullFeatured, reference_params(0.5));
  Assessment a;
  a.defender = pure_defender({{"H", "h"}, {"N", "n"}});
  a.attacker = pure_attacker({{"h", "L"}, {"n", "A"}});
  a.beliefs = bayes_update(full, a.defender);
  const PbeVerdict verdict = check_pbe(full, a, 1e-9);
  CHECK_FALSE(verdict.is_pbe);
  bool defender_violation = false;
  for (const auto& v : verdict.violations)
    if (v.who == Actor::Defender) defender_violation = true;
  CHECK(defender_violation);
}

TEST_CASE("check_pbe flags stale beliefs") {
  const SignalingGame semi = build(GameKind::SemiFeatured, reference_params(0.5));
  Assessment a;
  a.defender = pure_defender({{"H", "n"}, {"N", "n"}});
  a.attacker = pure_attacker({{"h", "L"}, {"n", "A"}});
  a.beliefs = bayes_update(semi, a.defender);
  a.beliefs.at_signal["n"].type_dist = {{"H", 0.2}, {"N", 0.8}};  // not the Bayes posterior
  const PbeVerdict verdict = check_pbe(semi, a, 1e-9);
  CHECK_FALSE(verdict.is_pbe);
  bool belief_violation = false;
  for (const auto& v : verdict.violations)
    if (v.who == Actor::Beliefs) belief_violation = true;
  CHECK(belief_violation);
}

TEST_CASE("enumeration finds exactly the catalog equilibria at the reference points") {
  struct Case {
    GameKind kind;
    double p_h;
    std::vector<EquilibriumName> expected;
  };
  const std::vector<Case> cases = {
      {GameKind::SemiFeatured, 0.5, {EquilibriumName::SE1}},
      {GameKind::SemiFeatured, 0.8, {EquilibriumName::SE2}},
      {GameKind::FullFeatured, 0.5, {EquilibriumName::FE1}},
      {GameKind::FullFeatured, 0.7, {EquilibriumName::FE1, EquilibriumName::FE2}},
      {GameKind::FullFeatured, 0.8, {EquilibriumName::FE2}},
      {GameKind::Honest, 0.5, {EquilibriumName::HE1}},
  };
  for (const auto& c : cases) {
    const GameParams g = reference_params(c.p_h);
    const SignalingGame game = build(c.kind, g);
    const auto enumerated = enumerate_pure_pbe(game);
    std::set<std::string> enum_keys;
    for (const auto& r : enumerated) enum_keys.insert(profile_key(r));

    std::set<std::string> analytic_keys;
    for (const auto& rec : analytic_equilibria(c.kind, g)) {
      if (rec.name == EquilibriumName::FE3) continue;  // mixed, not a pure profile
      analytic_keys.insert(profile_key(game, rec.assessment));
    }
    CHECK(enum_keys == analytic_keys);
    REQUIRE(enumerated.size() == c.expected.size());
  }
}

TEST_CASE("enumeration reports off-path supporting intervals") {
  const GameParams g = reference_params(0.5);
  const SignalingGame full = build(GameKind::FullFeatured, g);
  const auto records = enumerate_pure_pbe(full);
  REQUIRE(records.size() == 1);  // FE1 only
  REQUIRE(records[0].off_path.size() == 1);
  const OffPathSupport& off = records[0].off_path[0];
  CHECK(off.signal == "h");
  CHECK(off.anchor_type == "H");
  CHECK(off.lo == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(off.hi == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(off.witness >= off.lo);
  CHECK(off.witness <= off.hi);

  const SignalingGame semi = build(GameKind::SemiFeatured, g);
  const auto semi_records = enumerate_pure_pbe(semi);
  REQUIRE(semi_records.size() == 1);
  REQUIRE(semi_records[0].off_path.size() == 1);
  CHECK(semi_records[0].off_path[0].lo == 1.0);  // only a honeypot can send h
  CHECK(semi_records[0].off_path[0].hi == 1.0);
}

TEST_CASE("degenerate priors are handled, absent types are ignored") {
  // All honeypots: the leave-everywhere pooling profile still certifies.
  const GameParams all_h = reference_params(1.0);
  const SignalingGame semi1 = build(GameKind::SemiFeatured, all_h);
  const auto se2 = analytic_equilibria(GameKind::SemiFeatured, all_h);
  REQUIRE(se2.size() == 1);
  CHECK(se2[0].name == EquilibriumName::SE2);
  CHECK(check_pbe(semi1, se2[0].assessment, 1e-9).is_pbe);

  const auto enumerated1 = enumerate_pure_pbe(semi1);
  bool found_se2 = false;
  for (const auto& r : enumerated1)
    if (r.defender_choice.at("H") == "n" && r.attacker_choice.at("n") == "L")
      found_se2 = true;
  CHECK(found_se2);

  // No honeypots: the attack equilibrium certifies and the honeypot type's
  // strategy carries no weight.
  const GameParams none = reference_params(0.0);
  const SignalingGame semi0 = build(GameKind::SemiFeatured, none);
  const auto se1 = analytic_equilibria(GameKind::SemiFeatured, none);
  REQUIRE(se1.size() == 1);
  CHECK(se1[0].name == EquilibriumName::SE1);
  CHECK(check_pbe(semi0, se1[0].assessment, 1e-9).is_pbe);
  const BeliefSystem b = bayes_update(semi0, se1[0].assessment.defender);
  CHECK(prob_of(b.at_signal.at("n").type_dist, "N") == doctest::Approx(1.0));
}

TEST_CASE("oracle agreement: enumeration matches the analytic catalog on random draws") {
  std::mt19937_64 rng(20250809);
  for (int i = 0; i < 1000; ++i) {
    GameParams g = random_valid_params(rng);
    const double th = threshold(g).value;
    g.p_h = random_ph_off_threshold(rng, th);
    for (GameKind kind : {GameKind::SemiFeatured, GameKind::FullFeatured}) {
      const SignalingGame game = build(kind, g);
      const auto enumerated = enumerate_pure_pbe(game);

      // Exactly one pooling equilibrium away from the threshold.
      REQUIRE(enumerated.size() == 1);
      std::set<std::string> enum_keys{profile_key(enumerated[0])};
      std::set<std::string> analytic_keys;
      for (const auto& rec : analytic_equilibria(kind, g))
        analytic_keys.insert(profile_key(game, rec.assessment));
      REQUIRE(enum_keys == analytic_keys);

      // No separating profile ever appears in the full game.
      if (kind == GameKind::FullFeatured)
        for (const auto& r : enumerated)
          REQUIRE(r.defender_choice.at("H") == r.defender_choice.at("N"));
    }
  }
}
