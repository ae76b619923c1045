#include <doctest.h>

#include <bit>
#include <random>

#include "generators.hpp"
#include "ipe/casebook.hpp"
#include "ipe/transforms.hpp"
#include "ipe/updating.hpp"

using namespace ipe;

TEST_CASE("three prisoners under the three rules") {
  const PrisonersModel pm = prisoners_model();

  const ConditionalResult gb = gen_bayes(pm.capacity, pm.a_lives, pm.says_b);
  CHECK(gb.interval.lo == doctest::Approx(0.0));
  CHECK(gb.interval.hi == doctest::Approx(0.5));

  const ConditionalResult d = dempster(pm.capacity, pm.a_lives, pm.says_b);
  CHECK(d.interval.lo == doctest::Approx(0.5));
  CHECK(d.interval.hi == doctest::Approx(0.5));

  const ConditionalResult g = geometric(pm.capacity, pm.a_lives, pm.says_b);
  CHECK(g.interval.lo == doctest::Approx(0.0));
  CHECK(g.interval.hi == doctest::Approx(0.0));
}

TEST_CASE("boxer and wrestler given the witness report") {
  const BoxerModel bm = boxer_model();

  // The coin margin dilates to vacuity under generalized Bayes.
  const ConditionalResult gb =
      gen_bayes(bm.capacity, bm.coin_heads, bm.match_coin);
  CHECK(gb.interval.lo == doctest::Approx(0.0));
  CHECK(gb.interval.hi == doctest::Approx(1.0));

  // The fight margin contracts to one half under Dempster.
  const ConditionalResult d =
      dempster(bm.capacity, bm.boxer_wins, bm.match_coin);
  CHECK(d.interval.lo == doctest::Approx(0.5));
  CHECK(d.interval.hi == doctest::Approx(0.5));

  CHECK_THROWS_AS(geometric(bm.capacity, bm.boxer_wins, bm.match_coin), Error);
}

TEST_CASE("election intervals through the engine") {
  {
    const ElectionModel em = election_model(0.05);
    const ConditionalResult gb =
        gen_bayes(em.capacity, em.clinton, em.democrat);
    CHECK(gb.interval.lo == doctest::Approx(0.0625));
    CHECK(gb.interval.hi == doctest::Approx(0.9375));
  }
  {
    const ElectionModel em = election_model(0.0);
    const ConditionalResult d = dempster(em.capacity, em.clinton, em.democrat);
    CHECK(d.interval.lo == doctest::Approx(2.0 / 7.0));
    CHECK(d.interval.hi == doctest::Approx(5.0 / 7.0));
    const ConditionalResult g =
        geometric(em.capacity, em.clinton, em.democrat);
    CHECK(g.interval.lo == doctest::Approx(1.0 / 3.0));
    CHECK(g.interval.hi == doctest::Approx(2.0 / 3.0));
  }
}

TEST_CASE("dempster mass conditioning is the cookie cutter") {
  const PrisonersModel pm = prisoners_model();
  const MassFunction cond = dempster_mass(pm.mass, pm.says_b);
  REQUIRE(cond.entries.size() == 2);
  CHECK(cond.mass(pm.a_lives & pm.says_b) == doctest::Approx(0.5));
  CHECK(cond.mass(pm.c_lives) == doctest::Approx(0.5));

  // Vacuous prior conditioned on b is certainty on b.
  Frame frame({"w1", "w2", "w3"});
  MassFunction vac = make_mass(frame, {{frame.full_event(), 1.0}});
  const Event b = frame.event({"w1", "w3"});
  const MassFunction vb = dempster_mass(vac, b);
  REQUIRE(vb.entries.size() == 1);
  CHECK(vb.mass(b) == doctest::Approx(1.0));

  const BoxerModel bm = boxer_model();
  const MassFunction bc = dempster_mass(bm.mass, bm.match_coin);
  REQUIRE(bc.entries.size() == 2);
  CHECK(bc.mass(bm.frame.event({"x1y1"})) == doctest::Approx(0.5));
  CHECK(bc.mass(bm.frame.event({"x0y0"})) == doctest::Approx(0.5));

  CHECK_THROWS_AS(dempster_mass(vac, frame.empty_event()), Error);
}

TEST_CASE("geometric mass conditioning keeps contained focal sets") {
  const PrisonersModel pm = prisoners_model();
  const MassFunction cond = geometric_mass(pm.mass, pm.says_b);
  REQUIRE(cond.entries.size() == 1);
  CHECK(cond.mass(pm.c_lives) == doctest::Approx(1.0));

  Frame frame({"w1", "w2", "w3"});
  const Event b = frame.event({"w1", "w2"});
  MassFunction m = make_mass(frame, {{b, 0.4}, {frame.full_event(), 0.6}});
  const MassFunction mb = geometric_mass(m, b);
  REQUIRE(mb.entries.size() == 1);
  CHECK(mb.mass(b) == doctest::Approx(1.0));

  MassFunction vac = make_mass(frame, {{frame.full_event(), 1.0}});
  CHECK_THROWS_AS(geometric_mass(vac, b), Error);
}

TEST_CASE("dispatcher matches the direct calls") {
  const PrisonersModel pm = prisoners_model();
  for (Rule rule : {Rule::generalized_bayes, Rule::dempster, Rule::geometric}) {
    const ConditionalResult via =
        condition(pm.capacity, pm.a_lives, pm.says_b, rule);
    ConditionalResult direct =
        rule == Rule::generalized_bayes
            ? gen_bayes(pm.capacity, pm.a_lives, pm.says_b)
            : (rule == Rule::dempster
                   ? dempster(pm.capacity, pm.a_lives, pm.says_b)
                   : geometric(pm.capacity, pm.a_lives, pm.says_b));
    CHECK(via.interval.lo == direct.interval.lo);
    CHECK(via.interval.hi == direct.interval.hi);
  }
}

TEST_CASE("all rules coincide with Bayes on precise capacities") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Frame frame = gen::random_frame(rng, 2, 6);
    const Capacity c = gen::random_precise(rng, frame);
    const Event a = gen::random_event(rng, frame);
    const Event b = gen::random_event(rng, frame);
    if (c.lower(b) <= 0.01) continue;
    const double bayes = c.lower((a & b).mask()) / c.lower(b.mask());
    for (Rule rule :
         {Rule::generalized_bayes, Rule::dempster, Rule::geometric}) {
      const ConditionalResult res = condition(c, a, b, rule);
      CHECK(res.interval.lo == doctest::Approx(bayes).epsilon(1e-9));
      CHECK(res.interval.hi == doctest::Approx(bayes).epsilon(1e-9));
    }
  }
}

TEST_CASE("rule preconditions are enforced, not defaulted") {
  const PrisonersModel pm = prisoners_model();
  const Event impossible = pm.frame.empty_event();
  CHECK_THROWS_AS(gen_bayes(pm.capacity, pm.a_lives, impossible), Error);
  CHECK_THROWS_AS(dempster(pm.capacity, pm.a_lives, impossible), Error);
  CHECK_THROWS_AS(geometric(pm.capacity, pm.a_lives, impossible), Error);
}

TEST_CASE("widest interval nesting across random 2-monotone capacities") {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Frame frame = gen::random_frame(rng, 2, 6);
    const Capacity c = gen::random_two_monotone(rng, frame);
    const auto b = gen::pick_block(rng, c, 0.02, true);
    if (!b) continue;
    const Event a = gen::random_event(rng, frame);
    const ConditionalResult gb = gen_bayes(c, a, *b);
    const ConditionalResult d = dempster(c, a, *b);
    const ConditionalResult g = geometric(c, a, *b);
    CHECK(gb.interval.lo <= d.interval.lo + kTol);
    CHECK(d.interval.hi <= gb.interval.hi + kTol);
    CHECK(gb.interval.lo <= g.interval.lo + kTol);
    CHECK(g.interval.hi <= gb.interval.hi + kTol);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("Dempster and Geometric posteriors preserve k-monotonicity") {
  std::mt19937_64 rng(103);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Frame frame = gen::random_frame(rng, 3, 5);
    const Capacity c = gen::random_two_monotone(rng, frame);
    const auto b = gen::pick_block(rng, c, 0.02, true);
    if (!b) continue;
    for (int k = 2; k <= std::min(3, frame.size()); ++k) {
      if (!is_k_monotone(c, k).holds) continue;
      const Capacity post_d = posterior_capacity(c, *b, Rule::dempster);
      const Capacity post_g = posterior_capacity(c, *b, Rule::geometric);
      CHECK(is_k_monotone(post_d, k).holds);
      CHECK(is_k_monotone(post_g, k).holds);
      ++checked;
    }
  }
  CHECK(checked >= 25);
}

TEST_CASE("vacuous priors stay vacuous under generalized Bayes and Geometric") {
  // Boxer-shaped family: focal sets on a split and its complement leave any
  // event straddling the split completely undetermined.
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> unit(0.1, 0.6);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Frame frame = gen::random_frame(rng, 4, 6);
    const std::uint32_t full = frame.full_mask();
    const Event split = gen::random_event(rng, frame);
    if (split.cardinality() < 2 || split.cardinality() > frame.size() - 2) {
      continue;
    }
    const double alpha = unit(rng);
    const double beta = unit(rng) * (1.0 - alpha);
    const Capacity c = belief_from_mass(make_mass(
        frame, {{split, alpha},
                {complement(split), beta},
                {frame.full_event(), 1.0 - alpha - beta}}));

    // One outcome from each side: a vacuous event.
    const int in_split = std::countr_zero(split.mask());
    const int out_split = std::countr_zero(complement(split).mask());
    const Event a = frame.event_mask((1u << in_split) | (1u << out_split));
    REQUIRE(c.is_vacuous(a));
    (void)full;

    const ConditionalResult gb = gen_bayes(c, a, split);
    CHECK(gb.interval.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gb.interval.hi == doctest::Approx(1.0).epsilon(1e-12));
    const ConditionalResult g = geometric(c, a, split);
    CHECK(g.interval.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.interval.hi == doctest::Approx(1.0).epsilon(1e-12));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("formula and mass-operational paths agree on belief functions") {
  std::mt19937_64 rng(109);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Frame frame = gen::random_frame(rng, 2, 6);
    const Capacity c = gen::random_belief(rng, frame);
    const auto b = gen::pick_block(rng, c, 0.02, true);
    if (!b) continue;
    const Event a = gen::random_event(rng, frame);
    // Both rules run the mass path internally on belief kinds and abort on
    // any disagreement; the recorded gap must be tiny.
    const ConditionalResult d = dempster(c, a, *b);
    REQUIRE(d.cross_check_gap.has_value());
    CHECK(*d.cross_check_gap <= kTol);
    const ConditionalResult g = geometric(c, a, *b);
    REQUIRE(g.cross_check_gap.has_value());
    CHECK(*g.cross_check_gap <= kTol);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("posterior credal sets nest inside the generalized Bayes one") {
  std::mt19937_64 rng(113);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Frame frame = gen::random_frame(rng, 2, 5);
    const Capacity c = gen::random_belief(rng, frame);
    const auto b = gen::pick_block(rng, c, 0.05, true);
    if (!b) continue;
    const Capacity post_gb =
        posterior_capacity(c, *b, Rule::generalized_bayes);
    for (Rule rule : {Rule::dempster, Rule::geometric}) {
      const Capacity post = posterior_capacity(c, *b, rule);
      for (const auto& v : enumerate_vertices(post)) {
        for (std::uint32_t mask = 0; mask < (1u << frame.size()); ++mask) {
          double sum = 0.0;
          for (int i = 0; i < frame.size(); ++i) {
            if (mask & (1u << i)) sum += v[i];
          }
          REQUIRE(sum >= post_gb.lower(mask) - 1e-7);
        }
      }
    }
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("posterior tables reproduce the per-event intervals") {
  const ElectionModel em = election_model(0.0);
  const Capacity post =
      posterior_capacity(em.capacity, em.democrat, Rule::dempster);
  const ConditionalResult d = dempster(em.capacity, em.clinton, em.democrat);
  CHECK(post.lower(em.clinton) == doctest::Approx(d.interval.lo));
  CHECK(post.upper(em.clinton) == doctest::Approx(d.interval.hi));
  CHECK(post.kind() == CapacityKind::belief);
}

TEST_CASE("dispatcher attaches the posterior table on request") {
  const ElectionModel em = election_model(0.0);
  for (Rule rule :
       {Rule::generalized_bayes, Rule::dempster, Rule::geometric}) {
    const ConditionalResult bare =
        condition(em.capacity, em.clinton, em.democrat, rule);
    CHECK(!bare.posterior.has_value());
    const ConditionalResult rich =
        condition(em.capacity, em.clinton, em.democrat, rule, true);
    REQUIRE(rich.posterior.has_value());
    CHECK(rich.posterior->lower(em.clinton) ==
          doctest::Approx(rich.interval.lo).epsilon(1e-9));
    CHECK(rich.posterior->upper(em.clinton) ==
          doctest::Approx(rich.interval.hi).epsilon(1e-9));
  }
}
