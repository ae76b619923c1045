#include "ipe/simpson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ipe {

SimplexVector::SimplexVector(Eigen::VectorXd weights)
    : weights_(std::move(weights)) {
  if (weights_.size() == 0) {
    raise(Errc::invalid_simplex_vector, "empty weight vector");
  }
  if (weights_.minCoeff() < -kTol) {
    raise(Errc::invalid_simplex_vector, "negative weight");
  }
  if (std::fabs(weights_.sum() - 1.0) > kTol) {
    raise(Errc::invalid_simplex_vector,
          "weights sum to " + std::to_string(weights_.sum()));
  }
  for (int i = 0; i < weights_.size(); ++i) {
    weights_[i] = std::max(0.0, weights_[i]);
  }
}

SimplexVector SimplexVector::unit(int dim, int index) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
  w[index] = 1.0;
  return SimplexVector(std::move(w));
}

const char* loss_direction_name(LossDirection d) {
  switch (d) {
    case LossDirection::loss_low: return "loss_low";
    case LossDirection::loss_high: return "loss_high";
    case LossDirection::none: return "none";
  }
  return "?";
}

double aggregate(const Eigen::VectorXd& p, const SimplexVector& w) {
  if (p.size() != w.weights().size()) {
    raise(Errc::dimension_mismatch, "aggregation arity mismatch");
  }
  return p.dot(w.weights());
}

bool is_fair(const SimplexVector& u_obs, const SimplexVector& v_obs,
             double tol) {
  if (u_obs.dim() != v_obs.dim()) {
    raise(Errc::dimension_mismatch, "rule arity mismatch");
  }
  return (u_obs.weights() - v_obs.weights()).lpNorm<Eigen::Infinity>() <= tol;
}

double box_simplex_extreme(const Eigen::VectorXd& c, const Eigen::VectorXd& lo,
                           const Eigen::VectorXd& hi, bool maximize) {
  const int k = static_cast<int>(c.size());
  if (lo.size() != k || hi.size() != k) {
    raise(Errc::dimension_mismatch, "box arity mismatch");
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return maximize ? c[a] > c[b] : c[a] < c[b];
  });
  double budget = 1.0 - lo.sum();
  if (budget < -kTol) raise(Errc::empty_alup, "lower bounds exceed budget");
  Eigen::VectorXd x = lo;
  for (int idx : order) {
    const double room = hi[idx] - lo[idx];
    if (room < -kTol) raise(Errc::empty_alup, "crossed bounds");
    const double add = std::min(std::max(room, 0.0), budget);
    x[idx] += add;
    budget -= add;
    if (budget <= 0.0) break;
  }
  if (budget > kTol) raise(Errc::empty_alup, "upper bounds below budget");
  return c.dot(x);
}

namespace {

void check_dims(const SimpsonInstance& inst) {
  const auto k = inst.p.size();
  if (inst.q.size() != k || inst.u.weights().size() != k) {
    raise(Errc::dimension_mismatch, "instance arity mismatch");
  }
  if (inst.desirable.empty()) {
    raise(Errc::dimension_mismatch, "no desirable aggregation rules");
  }
  for (const auto& v : inst.desirable) {
    if (v.weights().size() != k) {
      raise(Errc::dimension_mismatch, "instance arity mismatch");
    }
  }
}

bool dominates(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  for (int i = 0; i < p.size(); ++i) {
    if (!(p[i] - q[i] > kTol)) return false;
  }
  return true;
}

// Extremes of lambda . w over the box q <= lambda <= p (no simplex
// constraint; these are the marginal bounds generated by the dominance box).
double box_extreme(const Eigen::VectorXd& w, const Eigen::VectorXd& lo,
                   const Eigen::VectorXd& hi, bool maximize) {
  double total = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    const bool up = maximize ? w[i] >= 0.0 : w[i] < 0.0;
    total += w[i] * (up ? hi[i] : lo[i]);
  }
  return total;
}

}  // namespace

SimpsonReport detect_reversal(const SimpsonInstance& inst) {
  check_dims(inst);
  SimpsonReport report;
  report.dominance_ok = dominates(inst.p, inst.q);
  report.p_marginal = aggregate(inst.p, inst.u);
  report.q_marginal = aggregate(inst.q, inst.u);

  double q_inf = std::numeric_limits<double>::infinity();
  double p_sup = -std::numeric_limits<double>::infinity();
  for (const auto& v : inst.desirable) {
    q_inf = std::min(q_inf, aggregate(inst.q, v));
    p_sup = std::max(p_sup, aggregate(inst.p, v));
  }
  report.q_marginal_inf = q_inf;
  report.p_marginal_sup = p_sup;

  if (!report.dominance_ok) return report;

  const bool low = report.p_marginal < q_inf - kTol;
  const bool high = report.q_marginal > p_sup + kTol;
  report.reversal = low || high;
  report.direction = low ? LossDirection::loss_low
                         : (high ? LossDirection::loss_high
                                 : LossDirection::none);

  for (int i = 0; i < static_cast<int>(inst.desirable.size()); ++i) {
    const double qv = aggregate(inst.q, inst.desirable[i]);
    const double pv = aggregate(inst.p, inst.desirable[i]);
    if (report.p_marginal < qv - kTol || report.q_marginal > pv + kTol) {
      report.reversal_witnesses.push_back(i);
    }
  }
  report.partial = !report.reversal && !report.reversal_witnesses.empty();

  // The sure-loss route goes through the box extremes; the theorem says it
  // coincides with the reversal condition exactly.
  EquivalenceCheck eq = sure_loss_equivalence(inst);
  report.sure_loss = eq.lhs;
  if (report.sure_loss != report.reversal) {
    raise(Errc::internal_check_failed,
          "sure-loss and reversal conditions disagree");
  }
  return report;
}

EquivalenceCheck sure_loss_equivalence(const SimpsonInstance& inst) {
  check_dims(inst);
  EquivalenceCheck check;
  check.applicable = dominates(inst.p, inst.q);
  if (!check.applicable) return check;

  double q_inf = std::numeric_limits<double>::infinity();
  double p_sup = -std::numeric_limits<double>::infinity();
  for (const auto& v : inst.desirable) {
    q_inf = std::min(q_inf, aggregate(inst.q, v));
    p_sup = std::max(p_sup, aggregate(inst.p, v));
  }

  const double sup_lambda_u =
      box_extreme(inst.u.weights(), inst.q, inst.p, true);
  const double inf_lambda_u =
      box_extreme(inst.u.weights(), inst.q, inst.p, false);
  check.lhs = sup_lambda_u < q_inf - kTol || inf_lambda_u > p_sup + kTol;

  const double pu = aggregate(inst.p, inst.u);
  const double qu = aggregate(inst.q, inst.u);
  check.rhs = pu < q_inf - kTol || qu > p_sup + kTol;

  if (check.lhs != check.rhs) {
    raise(Errc::internal_check_failed,
          "equivalence routes disagree (boundary instance?)");
  }
  return check;
}

bool alup_sure_loss(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                    const SimplexVector& u, const SimplexVector& v) {
  const int k = static_cast<int>(p.size());
  if (q.size() != k || u.dim() != k || v.dim() != k) {
    raise(Errc::dimension_mismatch, "instance arity mismatch");
  }
  for (int i = 0; i < k; ++i) {
    if (q[i] > p[i] + kTol) {
      raise(Errc::empty_alup, "lower bound exceeds upper bound");
    }
  }
  if (q.sum() > 1.0 + kTol || p.sum() < 1.0 - kTol) {
    raise(Errc::empty_alup, "bounds admit no probability vector");
  }

  const double sup_u = box_simplex_extreme(u.weights(), q, p, true);
  const double inf_u = box_simplex_extreme(u.weights(), q, p, false);
  const double sup_v = box_simplex_extreme(v.weights(), q, p, true);
  const double inf_v = box_simplex_extreme(v.weights(), q, p, false);

  return sup_u < inf_v - kTol || inf_u > sup_v + kTol;
}

}  // namespace ipe
