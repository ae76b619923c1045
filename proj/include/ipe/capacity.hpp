#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ipe/frame.hpp"
#include "ipe/mass.hpp"

namespace ipe {

/// A pair of lower/upper probabilities for one event.
struct ProbabilityInterval {
  double lo = 0.0;
  double hi = 1.0;

  ProbabilityInterval() = default;
  ProbabilityInterval(double lo_, double hi_);

  double width() const { return hi - lo; }
};

enum class CapacityKind { general, two_monotone, belief, precise };

const char* capacity_kind_name(CapacityKind kind);

/// Lower-probability table over all 2^n events of a frame, with the upper
/// probability available through conjugacy. The kind tag records the
/// strongest verified monotonicity class: precise => belief => two_monotone.
class Capacity {
 public:
  /// Validates the table invariants (boundary values, monotonicity, range)
  /// and verifies the kind tag. Without a requested kind, the strongest
  /// class that verifies is detected and tagged.
  static Capacity from_lower(const Frame& frame, Eigen::VectorXd lower,
                             std::optional<CapacityKind> kind = std::nullopt);

  const Frame& frame() const { return frame_; }
  int size() const { return frame_.size(); }
  std::uint64_t frame_id() const { return frame_.id(); }
  CapacityKind kind() const { return kind_; }
  bool at_least_two_monotone() const { return kind_ != CapacityKind::general; }

  const Eigen::VectorXd& table() const { return lower_; }
  double lower(std::uint32_t mask) const { return lower_[mask]; }
  double lower(const Event& e) const;
  double upper(std::uint32_t mask) const {
    return 1.0 - lower_[~mask & frame_.full_mask()];
  }
  double upper(const Event& e) const;
  ProbabilityInterval interval(const Event& e) const;

  bool is_vacuous(const Event& e) const;

 private:
  Capacity(Frame frame, Eigen::VectorXd lower, CapacityKind kind)
      : frame_(std::move(frame)), lower_(std::move(lower)), kind_(kind) {}

  Frame frame_;
  Eigen::VectorXd lower_;
  CapacityKind kind_;
};

/// Exact pairwise supermodularity test: lower(A|B) + lower(A&B) >=
/// lower(A) + lower(B) for all pairs when n <= 10, a seeded random sample of
/// pairs beyond that. Used for kind verification; witnesses come from
/// is_k_monotone in transforms.
bool check_two_monotone(const Eigen::VectorXd& lower, int n,
                        double tol = kTol);

/// Measurable partition of the frame: disjoint nonempty blocks covering it.
struct Partition {
  std::vector<Event> blocks;

  Partition(std::vector<Event> blocks_);
  static Partition binary(const Event& b);
};

}  // namespace ipe
