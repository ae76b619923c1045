#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ipe/common.hpp"

namespace ipe {

enum class Relation { le, eq, ge };
enum class Sense { minimize, maximize };

/// Dense LP over nonnegative variables:
///   optimize objective . x  subject to  coeffs . x (rel) rhs,  x >= 0.
struct LinearProgram {
  struct Constraint {
    Eigen::VectorXd coeffs;
    Relation rel;
    double rhs;
  };

  Eigen::VectorXd objective;
  Sense sense = Sense::minimize;
  std::vector<Constraint> constraints;

  void add(Eigen::VectorXd coeffs, Relation rel, double rhs) {
    constraints.push_back({std::move(coeffs), rel, rhs});
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  Eigen::VectorXd x;
};

/// Two-phase tableau simplex. Entering variable by most-negative reduced
/// cost, falling back to Bland's rule once the iteration count suggests
/// cycling; the ratio test breaks ties toward the smallest basis column.
LpResult solve(const LinearProgram& lp);

}  // namespace ipe
