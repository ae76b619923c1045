#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "ipe/capacity.hpp"
#include "ipe/linprog.hpp"

namespace ipe {

/// The convex polytope { P : P(A) >= lower(A) for all A }, carried together
/// with its defining constraints. For 2-monotone capacities on frames of at
/// most 8 outcomes the complete vertex set is available; it is enumerated on
/// first use and cached (copies share the cache).
class CredalSet {
 public:
  explicit CredalSet(Capacity capacity);

  const Capacity& capacity() const { return capacity_; }

  /// (event mask, lower bound) rows with a nontrivial bound.
  const std::vector<std::pair<std::uint32_t, double>>& constraints() const {
    return constraints_;
  }

  /// Whether the permutation vertex set is available for this capacity.
  bool vertices_available() const;
  const std::vector<Eigen::VectorXd>& vertices() const;

 private:
  struct VertexCache;
  Capacity capacity_;
  std::vector<std::pair<std::uint32_t, double>> constraints_;
  std::shared_ptr<VertexCache> cache_;
};

/// Extreme points of a 2-monotone capacity's core: for every outcome
/// ordering, the vector of successive prefix increments of the lower table.
/// Deduplicated to pairwise max-norm distance > 1e-7.
std::vector<Eigen::VectorXd> enumerate_vertices(const Capacity& c);

/// [min, max] of P(a) over the credal set, via LP; cross-checked against the
/// vertex scan whenever vertices are available.
ProbabilityInterval credal_bounds(const CredalSet& cs, const Event& a);
ProbabilityInterval credal_bounds(const Capacity& c, const Event& a);

/// [inf, sup] of P(num & den) / P(den) over { P in the credal set :
/// P(den) > 0 }, by Charnes-Cooper homogenization to two LPs.
ProbabilityInterval fractional_bounds(const Capacity& c, const Event& num,
                                      const Event& den);
ProbabilityInterval fractional_bounds(const CredalSet& cs, const Event& num,
                                      const Event& den);

/// Charnes-Cooper solution for one side, exposing the optimizing probability
/// vector (the y/t de-homogenization). Used by the independence search.
struct FractionalOptimum {
  double value;
  Eigen::VectorXd p;
};
FractionalOptimum fractional_optimum(const CredalSet& cs, const Event& num,
                                     const Event& den, Sense sense);

struct IndependencePoint {
  bool found = false;
  Eigen::VectorXd p;
  double defect = 0.0;  // P(a&b) - P(a)P(b) at p
};

/// Searches the credal set for a P* with P*(a&b) = P*(a)P*(b). Sound when it
/// reports found; a not_found answer is not a proof of absence.
IndependencePoint independence_point_search(const CredalSet& cs,
                                            const Event& a, const Event& b);
IndependencePoint independence_point_search(const Capacity& c, const Event& a,
                                            const Event& b);

}  // namespace ipe
