#include <doctest.h>

#include "ipe/linprog.hpp"

using namespace ipe;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("simplex solves a textbook maximization") {
  // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), value 36.
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective = vec2(3, 5);
  lp.add(vec2(1, 0), Relation::le, 4);
  lp.add(vec2(0, 2), Relation::le, 12);
  lp.add(vec2(3, 2), Relation::le, 18);
  LpResult res = solve(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.value == doctest::Approx(36.0).epsilon(1e-10));
  CHECK(res.x[0] == doctest::Approx(2.0));
  CHECK(res.x[1] == doctest::Approx(6.0));
}

TEST_CASE("simplex handles ge and eq rows through phase 1") {
  // min x + y st x + y >= 2, x - y = 1 -> (1.5, 0.5), value 2.
  LinearProgram lp;
  lp.objective = vec2(1, 1);
  lp.add(vec2(1, 1), Relation::ge, 2);
  lp.add(vec2(1, -1), Relation::eq, 1);
  LpResult res = solve(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.value == doctest::Approx(2.0));
  CHECK(res.x[0] == doctest::Approx(1.5));
  CHECK(res.x[1] == doctest::Approx(0.5));
}

TEST_CASE("simplex detects infeasibility") {
  LinearProgram lp;
  lp.objective = vec2(1, 1);
  lp.add(vec2(1, 1), Relation::le, 1);
  lp.add(vec2(1, 1), Relation::ge, 2);
  CHECK(solve(lp).status == LpStatus::infeasible);
}

TEST_CASE("simplex detects unboundedness") {
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective = vec2(1, 0);
  lp.add(vec2(0, 1), Relation::le, 1);
  CHECK(solve(lp).status == LpStatus::unbounded);
}

TEST_CASE("simplex copes with negative right-hand sides") {
  // min x st -x - y <= -3, y <= 1  ->  x = 2.
  LinearProgram lp;
  lp.objective = vec2(1, 0);
  lp.add(vec2(-1, -1), Relation::le, -3);
  lp.add(vec2(0, 1), Relation::le, 1);
  LpResult res = solve(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.value == doctest::Approx(2.0));
}

TEST_CASE("simplex survives a degenerate vertex") {
  // Multiple constraints active at the optimum (0, 0) of min -x + y.
  LinearProgram lp;
  lp.objective = vec2(1, 1);
  lp.add(vec2(1, 1), Relation::ge, 0);
  lp.add(vec2(1, 2), Relation::ge, 0);
  lp.add(vec2(2, 1), Relation::ge, 0);
  lp.add(vec2(1, 0), Relation::le, 5);
  LpResult res = solve(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.value == doctest::Approx(0.0));
}
