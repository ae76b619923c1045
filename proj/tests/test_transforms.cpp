#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ipe/casebook.hpp"
#include "ipe/lattice.hpp"
#include "ipe/transforms.hpp"

using namespace ipe;

namespace {

// Independent O(3^n) oracle for the belief table of a mass assignment.
Eigen::VectorXd naive_belief_table(const MassFunction& m) {
  const std::uint32_t size = 1u << m.frame.size();
  Eigen::VectorXd table = Eigen::VectorXd::Zero(size);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    for (const auto& [focal, v] : m.entries) {
      if ((focal & ~mask) == 0) table[mask] += v;
    }
  }
  return table;
}

}  // namespace

TEST_CASE("vacuous capacity has Mobius mass one on the full frame") {
  Frame frame({"w1", "w2", "w3"});
  Eigen::VectorXd lower = Eigen::VectorXd::Zero(8);
  lower[7] = 1.0;
  const Capacity vacuous = Capacity::from_lower(frame, lower);
  CHECK(vacuous.kind() == CapacityKind::belief);
  const MassFunction m = mobius(vacuous);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.mass(frame.full_event()) == doctest::Approx(1.0));
}

TEST_CASE("boxer capacity splits its mass across the two coin outcomes") {
  const BoxerModel bm = boxer_model();
  const MassFunction m = mobius(bm.capacity);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.mass(bm.coin_heads) == doctest::Approx(0.5));
  CHECK(m.mass(complement(bm.coin_heads)) == doctest::Approx(0.5));
}

TEST_CASE("mobius and belief_from_mass are mutually inverse") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Frame frame = gen::random_frame(rng, 1, 6);
    MassFunction m = gen::random_mass(rng, frame);
    const Capacity c = belief_from_mass(m);

    // Engine table against the brute-force zeta oracle.
    const Eigen::VectorXd oracle = naive_belief_table(m);
    CHECK((c.table() - oracle).lpNorm<Eigen::Infinity>() <= 1e-12);

    const MassFunction back = mobius(c);
    for (const auto& [mask, v] : m.entries) {
      CHECK(back.mass(mask) == doctest::Approx(v).epsilon(1e-9));
    }
    const Capacity again = belief_from_mass(back);
    CHECK((c.table() - again.table()).lpNorm<Eigen::Infinity>() <= kTol);
  }
}

TEST_CASE("belief from prisoners masses reproduces the survival lower bound") {
  const PrisonersModel pm = prisoners_model();
  CHECK(pm.capacity.lower(pm.a_lives) == doctest::Approx(1.0 / 3.0));
  CHECK(pm.capacity.upper(pm.a_lives) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("singleton masses give back the precise distribution") {
  Frame frame({"w1", "w2", "w3"});
  MassFunction m = make_mass(frame, {{frame.event({"w1"}), 0.5},
                                     {frame.event({"w2"}), 0.3},
                                     {frame.event({"w3"}), 0.2}});
  const Capacity c = belief_from_mass(m);
  CHECK(c.lower(frame.event({"w1", "w3"})) == doctest::Approx(0.7));
  CHECK(check_two_monotone(c.table(), 3));
  CHECK(Capacity::from_lower(frame, c.table()).kind() ==
        CapacityKind::precise);
}

TEST_CASE("conjugate upper probabilities") {
  Frame frame({"w1", "w2", "w3"});
  Eigen::VectorXd lower = Eigen::VectorXd::Zero(8);
  lower[7] = 1.0;
  const Capacity vacuous = Capacity::from_lower(frame, lower);
  CHECK(conjugate_upper(vacuous, frame.event({"w1"})) == doctest::Approx(1.0));

  const ElectionModel em = election_model(0.0);
  CHECK(conjugate_upper(em.capacity, em.clinton) == doctest::Approx(0.7));

  // Precise capacity: upper equals lower everywhere.
  std::mt19937_64 rng(7);
  const Capacity precise = gen::random_precise(rng, frame);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const Event e = frame.event_mask(mask);
    CHECK(conjugate_upper(precise, e) ==
          doctest::Approx(precise.lower(e)).epsilon(1e-12));
  }
}

TEST_CASE("conjugacy involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Frame frame = gen::random_frame(rng, 2, 6);
    const Capacity c = gen::random_two_monotone(rng, frame);
    for (int k = 0; k < 10; ++k) {
      const Event a = gen::random_event(rng, frame);
      CHECK(1.0 - conjugate_upper(c, complement(a)) ==
            doctest::Approx(c.lower(a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("belief functions are k-monotone at every order") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Frame frame = gen::random_frame(rng, 2, 5);
    const Capacity c = gen::random_belief(rng, frame);
    for (int k = 2; k <= frame.size(); ++k) {
      CHECK(is_k_monotone(c, k).holds);
    }
  }
}

TEST_CASE("contamination-style capacity on three outcomes is 2-monotone") {
  Frame frame({"w1", "w2", "w3"});
  const double p[3] = {0.5, 0.3, 0.2};
  Eigen::VectorXd lower(8);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1u << i)) sum += p[i];
    }
    lower[mask] = std::max(0.0, sum - 0.2);
  }
  lower[7] = 1.0;
  const Capacity c = Capacity::from_lower(frame, lower);
  const MonotonicityReport report = is_k_monotone(c, 2);
  CHECK(report.holds);
  CHECK(report.exhaustive);

  // Independent supermodularity oracle over all pairs.
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      CHECK(lower[a | b] + lower[a & b] >= lower[a] + lower[b] - kTol);
    }
  }
}

TEST_CASE("perturbed precise capacity fails 2-monotonicity with a witness") {
  Frame frame({"w1", "w2", "w3"});
  std::mt19937_64 rng(5);
  const Capacity precise = gen::random_precise(rng, frame);
  Eigen::VectorXd lower = precise.table();
  // Push lower({w1, w2}) below lower({w1}) + lower({w2}).
  lower[3] = std::max(lower[1], lower[2]);
  const Capacity c = Capacity::from_lower(frame, lower);
  CHECK(c.kind() == CapacityKind::general);
  const MonotonicityReport report = is_k_monotone(c, 2);
  CHECK(!report.holds);
  REQUIRE(report.witness.has_value());
  const auto& w = *report.witness;
  CHECK(w.lhs < w.rhs - kTol);
  // The witness must reproduce the violated inequality from the table.
  double rhs = 0.0;
  REQUIRE(w.parts.size() == 2);
  rhs = lower[w.parts[0]] + lower[w.parts[1]] -
        lower[w.parts[0] & w.parts[1]];
  CHECK(w.rhs == doctest::Approx(rhs));
  CHECK(w.lhs == doctest::Approx(lower[w.event]));
}

TEST_CASE("monotone hierarchy: order k+1 implies order k") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Frame frame = gen::random_frame(rng, 3, 5);
    const Capacity c = gen::random_two_monotone(rng, frame);
    for (int k = 2; k + 1 <= frame.size(); ++k) {
      if (is_k_monotone(c, k + 1).holds) {
        CHECK(is_k_monotone(c, k).holds);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("sampled mode covers frames beyond the exhaustive cutoff") {
  std::mt19937_64 rng(37);
  Frame frame = gen::random_frame(rng, 7, 7);
  const Capacity c = gen::random_belief(rng, frame);
  const MonotonicityReport report = is_k_monotone(c, 3, 20000);
  CHECK(report.holds);
  CHECK(!report.exhaustive);
  CHECK(report.collections_tested >= 20000);
}

TEST_CASE("subset transforms are inverse bijections") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int n : {1, 3, 6}) {
    Eigen::VectorXd f(1 << n);
    for (int i = 0; i < f.size(); ++i) f[i] = unit(rng);
    Eigen::VectorXd g = f;
    subset_zeta_inplace(g, n);
    subset_mobius_inplace(g, n);
    CHECK((g - f).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}
