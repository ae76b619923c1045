#include "ipe/credal.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

namespace ipe {

namespace {

double event_sum(const Eigen::VectorXd& p, std::uint32_t mask) {
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (mask & (1u << i)) sum += p[i];
  }
  return sum;
}

Eigen::VectorXd indicator(int n, std::uint32_t mask) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) v[i] = 1.0;
  }
  return v;
}

}  // namespace

struct CredalSet::VertexCache {
  std::once_flag computed;
  std::vector<Eigen::VectorXd> vertices;
};

CredalSet::CredalSet(Capacity capacity)
    : capacity_(std::move(capacity)),
      cache_(std::make_shared<VertexCache>()) {
  const std::uint32_t full = capacity_.frame().full_mask();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const double bound = capacity_.lower(mask);
    if (bound > kTol) constraints_.emplace_back(mask, bound);
  }
}

bool CredalSet::vertices_available() const {
  return capacity_.at_least_two_monotone() && capacity_.size() <= 8;
}

const std::vector<Eigen::VectorXd>& CredalSet::vertices() const {
  if (!vertices_available()) {
    raise(Errc::frame_too_large,
          "vertex enumeration unavailable (needs 2-monotone, n <= 8)");
  }
  std::call_once(cache_->computed, [this] {
    cache_->vertices = enumerate_vertices(capacity_);
  });
  return cache_->vertices;
}

std::vector<Eigen::VectorXd> enumerate_vertices(const Capacity& c) {
  const int n = c.size();
  if (n > 8) raise(Errc::frame_too_large, "vertex enumeration needs n <= 8");
  if (!c.at_least_two_monotone()) {
    if (!check_two_monotone(c.table(), n)) {
      raise(Errc::not_two_monotone,
            "vertex enumeration needs a 2-monotone capacity");
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Eigen::VectorXd> verts;
  do {
    Eigen::VectorXd p(n);
    std::uint32_t prefix = 0;
    double prev = 0.0;
    for (int i : order) {
      prefix |= 1u << i;
      const double cur = c.lower(prefix);
      p[i] = std::max(0.0, cur - prev);
      prev = cur;
    }
    verts.push_back(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));

  // Exact-duplicate removal first (lexicographic), then the tolerance pass.
  std::sort(verts.begin(), verts.end(),
            [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
              for (int i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  verts.erase(std::unique(verts.begin(), verts.end(),
                          [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
                            return a == b;
                          }),
              verts.end());
  std::vector<Eigen::VectorXd> out;
  for (auto& v : verts) {
    bool dup = false;
    for (const auto& kept : out) {
      if ((v - kept).lpNorm<Eigen::Infinity>() <= kVertexTol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(v));
  }
  return out;
}

namespace {

LinearProgram credal_lp(const CredalSet& cs, Eigen::VectorXd objective,
                        Sense sense) {
  const int n = cs.capacity().size();
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.sense = sense;
  lp.add(Eigen::VectorXd::Ones(n), Relation::eq, 1.0);
  for (const auto& [mask, bound] : cs.constraints()) {
    lp.add(indicator(n, mask), Relation::ge, bound);
  }
  return lp;
}

ProbabilityInterval vertex_scan(const CredalSet& cs, std::uint32_t mask) {
  double lo = 1.0, hi = 0.0;
  for (const auto& v : cs.vertices()) {
    const double val = event_sum(v, mask);
    lo = std::min(lo, val);
    hi = std::max(hi, val);
  }
  return ProbabilityInterval(std::min(lo, hi), std::max(lo, hi));
}

}  // namespace

ProbabilityInterval credal_bounds(const CredalSet& cs, const Event& a) {
  const Capacity& c = cs.capacity();
  if (a.frame_id() != c.frame_id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  const int n = c.size();
  auto run = [&](Sense sense) {
    LpResult res = solve(credal_lp(cs, indicator(n, a.mask()), sense));
    if (res.status == LpStatus::infeasible) {
      raise(Errc::infeasible_polytope, "lower table admits no probability");
    }
    if (res.status != LpStatus::optimal) {
      raise(Errc::internal_check_failed, "credal LP unbounded");
    }
    return res.value;
  };
  const double lo = run(Sense::minimize);
  const double hi = run(Sense::maximize);
  ProbabilityInterval lp_interval(std::clamp(lo, 0.0, 1.0),
                                  std::clamp(hi, 0.0, 1.0));
  if (cs.vertices_available()) {
    ProbabilityInterval scan = vertex_scan(cs, a.mask());
    if (std::fabs(scan.lo - lp_interval.lo) > kLpTol ||
        std::fabs(scan.hi - lp_interval.hi) > kLpTol) {
      raise(Errc::internal_check_failed,
            "vertex scan disagrees with LP bounds");
    }
  }
  return lp_interval;
}

ProbabilityInterval credal_bounds(const Capacity& c, const Event& a) {
  return credal_bounds(CredalSet(c), a);
}

FractionalOptimum fractional_optimum(const CredalSet& cs, const Event& num,
                                     const Event& den, Sense sense) {
  const Capacity& c = cs.capacity();
  const int n = c.size();
  const std::uint32_t num_mask = num.mask() & den.mask();

  // Charnes-Cooper: y = t P with t = 1 / P(den). Constraints P(A) >= l(A)
  // become y(A) - l(A) t >= 0; normalization becomes y(full) = t; the
  // denominator is scaled to y(den) = 1.
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = Eigen::VectorXd::Zero(n + 1);
  for (int i = 0; i < n; ++i) {
    if (num_mask & (1u << i)) lp.objective[i] = 1.0;
  }
  for (const auto& [mask, bound] : cs.constraints()) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n + 1);
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) row[i] = 1.0;
    }
    row[n] = -bound;
    lp.add(std::move(row), Relation::ge, 0.0);
  }
  {
    Eigen::VectorXd row = Eigen::VectorXd::Ones(n + 1);
    row[n] = -1.0;
    lp.add(std::move(row), Relation::eq, 0.0);
  }
  {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n + 1);
    for (int i = 0; i < n; ++i) {
      if (den.mask() & (1u << i)) row[i] = 1.0;
    }
    lp.add(std::move(row), Relation::eq, 1.0);
  }

  LpResult res = solve(lp);
  if (res.status == LpStatus::infeasible) {
    raise(Errc::infeasible_polytope,
          "no compatible probability assigns the conditioning event "
          "positive mass");
  }
  if (res.status != LpStatus::optimal) {
    raise(Errc::internal_check_failed, "fractional LP unbounded");
  }
  FractionalOptimum opt;
  opt.value = std::clamp(res.value, 0.0, 1.0);
  const double t = res.x[n];
  if (t > kTol) {
    opt.p = res.x.head(n) / t;
  } else {
    // Optimum reached in the limit P(den) -> 0; renormalize the y part to
    // recover a nearby probability vector.
    const double total = res.x.head(n).sum();
    opt.p = total > kTol ? Eigen::VectorXd(res.x.head(n) / total)
                         : Eigen::VectorXd::Constant(n, 1.0 / n);
  }
  return opt;
}

ProbabilityInterval fractional_bounds(const CredalSet& cs, const Event& num,
                                      const Event& den) {
  const Capacity& c = cs.capacity();
  if (num.frame_id() != c.frame_id() || den.frame_id() != c.frame_id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  if (c.upper(den) <= kTol) {
    raise(Errc::conditioning_on_null,
          "conditioning event has upper probability zero");
  }
  const double lo = fractional_optimum(cs, num, den, Sense::minimize).value;
  const double hi = fractional_optimum(cs, num, den, Sense::maximize).value;
  return ProbabilityInterval(lo, hi);
}

ProbabilityInterval fractional_bounds(const Capacity& c, const Event& num,
                                      const Event& den) {
  return fractional_bounds(CredalSet(c), num, den);
}

namespace {

double independence_defect(const Eigen::VectorXd& p, std::uint32_t a_mask,
                           std::uint32_t b_mask) {
  return event_sum(p, a_mask & b_mask) -
         event_sum(p, a_mask) * event_sum(p, b_mask);
}

// Feasible points for capacities without a vertex enumeration: optimize
// random objectives over the credal polytope.
std::vector<Eigen::VectorXd> sample_basic_points(const CredalSet& cs,
                                                 std::mt19937_64& rng,
                                                 int count) {
  const int n = cs.capacity().size();
  std::normal_distribution<double> gauss;
  std::vector<Eigen::VectorXd> points;
  for (int trial = 0; trial < count; ++trial) {
    Eigen::VectorXd obj(n);
    for (int i = 0; i < n; ++i) obj[i] = gauss(rng);
    LpResult res = solve(credal_lp(cs, obj, Sense::minimize));
    if (res.status == LpStatus::infeasible) {
      raise(Errc::infeasible_polytope, "lower table admits no probability");
    }
    if (res.status == LpStatus::optimal) points.push_back(res.x);
  }
  return points;
}

}  // namespace

IndependencePoint independence_point_search(const CredalSet& cs,
                                            const Event& a, const Event& b) {
  const Capacity& c = cs.capacity();
  const std::uint32_t a_mask = a.mask();
  const std::uint32_t b_mask = b.mask();
  std::mt19937_64 rng(0x1de9e2d5u);

  std::vector<Eigen::VectorXd> candidates;
  if (cs.vertices_available()) {
    candidates = cs.vertices();
  } else {
    candidates = sample_basic_points(cs, rng, 40);
  }
  // The conditional-probability optimizers put the two dilation witnesses in
  // the candidate pool, which is what makes "found" reliable when a binary
  // partition dilates.
  if (c.upper(b) > kTol) {
    for (Sense sense : {Sense::minimize, Sense::maximize}) {
      candidates.push_back(fractional_optimum(cs, a, b, sense).p);
    }
  }
  if (c.upper(complement(b)) > kTol) {
    for (Sense sense : {Sense::minimize, Sense::maximize}) {
      candidates.push_back(fractional_optimum(cs, a, complement(b), sense).p);
    }
  }
  if (candidates.empty()) return {};

  auto finish = [&](const Eigen::VectorXd& p) {
    IndependencePoint res;
    res.found = true;
    res.p = p;
    res.defect = independence_defect(p, a_mask, b_mask);
    return res;
  };

  const Eigen::VectorXd* best_pos = nullptr;
  const Eigen::VectorXd* best_neg = nullptr;
  double pos_val = 0.0, neg_val = 0.0;
  auto consider = [&](const Eigen::VectorXd& p) {
    const double f = independence_defect(p, a_mask, b_mask);
    if (f >= 0.0 && (!best_pos || f < pos_val)) {
      best_pos = &p;
      pos_val = f;
    }
    if (f <= 0.0 && (!best_neg || f > neg_val)) {
      best_neg = &p;
      neg_val = f;
    }
  };
  for (const auto& p : candidates) consider(p);

  // Random convex combinations widen the net beyond the extreme points.
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Eigen::VectorXd> mixtures;
  mixtures.reserve(10000);
  for (int trial = 0; trial < 10000; ++trial) {
    const double w = unit(rng);
    mixtures.push_back(w * candidates[pick(rng)] +
                       (1.0 - w) * candidates[pick(rng)]);
    consider(mixtures.back());
    if (best_pos && best_neg) break;
  }

  if (best_pos && pos_val <= kTol) return finish(*best_pos);
  if (best_neg && -neg_val <= kTol) return finish(*best_neg);
  if (!best_pos || !best_neg) return {};

  // Sign change: bisect the connecting segment; the defect is continuous.
  Eigen::VectorXd low = *best_neg;
  Eigen::VectorXd high = *best_pos;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXd mid = 0.5 * (low + high);
    const double f = independence_defect(mid, a_mask, b_mask);
    if (std::fabs(f) <= kTol) return finish(mid);
    if (f < 0.0) {
      low = std::move(mid);
    } else {
      high = std::move(mid);
    }
  }
  Eigen::VectorXd mid = 0.5 * (low + high);
  if (std::fabs(independence_defect(mid, a_mask, b_mask)) <= kTol) {
    return finish(mid);
  }
  return {};
}

IndependencePoint independence_point_search(const Capacity& c, const Event& a,
                                            const Event& b) {
  return independence_point_search(CredalSet(c), a, b);
}

}  // namespace ipe
