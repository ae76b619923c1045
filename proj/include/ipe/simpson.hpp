#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ipe/common.hpp"

namespace ipe {

/// A point of the standard K-simplex; an aggregation rule mapping
/// stratum-conditional probabilities to a marginal by total probability.
class SimplexVector {
 public:
  explicit SimplexVector(Eigen::VectorXd weights);
  static SimplexVector unit(int dim, int index);

  const Eigen::VectorXd& weights() const { return weights_; }
  int dim() const { return static_cast<int>(weights_.size()); }

 private:
  Eigen::VectorXd weights_;
};

/// Stratified success rates p, q, the de-facto aggregation rule u, and the
/// finite set of desirable rules V (a polytope is represented by its
/// vertices; the objectives below are linear, so vertices suffice).
struct SimpsonInstance {
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  SimplexVector u;
  std::vector<SimplexVector> desirable;
};

enum class LossDirection { loss_low, loss_high, none };

const char* loss_direction_name(LossDirection d);

struct SimpsonReport {
  bool dominance_ok = false;  // p > q elementwise (strict at tolerance)
  bool reversal = false;      // aggregate comparison contradicts every v in V
  bool sure_loss = false;     // same condition from the box-extreme route
  LossDirection direction = LossDirection::none;

  double p_marginal = 0.0;        // p . u
  double q_marginal = 0.0;        // q . u
  double q_marginal_inf = 0.0;    // inf over V of q . v
  double p_marginal_sup = 0.0;    // sup over V of p . v

  // Indices of rules in V that individually witness a reversal. When only
  // some do, the instance is "partial": not a reversal relative to all of V.
  std::vector<int> reversal_witnesses;
  bool partial = false;
};

double aggregate(const Eigen::VectorXd& p, const SimplexVector& w);

/// Max-norm comparison of the two observed aggregation rules.
bool is_fair(const SimplexVector& u_obs, const SimplexVector& v_obs,
             double tol);

SimpsonReport detect_reversal(const SimpsonInstance& inst);

struct EquivalenceCheck {
  bool applicable = false;  // dominance must hold
  bool lhs = false;         // sure-loss condition from box extremes
  bool rhs = false;         // reversal condition from direct aggregation
};

/// Both sides of the sure-loss/reversal equivalence, computed by their own
/// routes and asserted equal.
EquivalenceCheck sure_loss_equivalence(const SimpsonInstance& inst);

/// Sure loss of the scheme (u, v) against itself on the atomic
/// lower/upper-probability credal set { pi in simplex : q <= pi <= p }.
/// Extremes are computed by the greedy fractional-knapsack fill.
bool alup_sure_loss(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                    const SimplexVector& u, const SimplexVector& v);

/// Greedy optimizer of c . pi over { pi in simplex : lo <= pi <= hi }:
/// start at lo and spend the remaining budget on coordinates in objective
/// order (ties broken by ascending index).
double box_simplex_extreme(const Eigen::VectorXd& c, const Eigen::VectorXd& lo,
                           const Eigen::VectorXd& hi, bool maximize);

}  // namespace ipe
