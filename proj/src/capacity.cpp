#include "ipe/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ipe/lattice.hpp"

namespace ipe {

ProbabilityInterval::ProbabilityInterval(double lo_, double hi_) {
  // Forgive floating drift just past the unit interval or a hair of
  // inversion; anything larger signals a computation bug upstream.
  if (lo_ < -kTol || hi_ > 1.0 + kTol || lo_ > hi_ + kTol) {
    raise(Errc::out_of_range,
          "invalid probability interval [" + std::to_string(lo_) + ", " +
              std::to_string(hi_) + "]");
  }
  lo = std::clamp(lo_, 0.0, 1.0);
  hi = std::clamp(hi_, 0.0, 1.0);
  if (lo > hi) lo = hi = 0.5 * (lo + hi);
}

const char* capacity_kind_name(CapacityKind kind) {
  switch (kind) {
    case CapacityKind::general: return "general";
    case CapacityKind::two_monotone: return "two_monotone";
    case CapacityKind::belief: return "belief";
    case CapacityKind::precise: return "precise";
  }
  return "?";
}

namespace {

bool check_precise(const Eigen::VectorXd& lower, int n) {
  const std::uint32_t size = 1u << n;
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += lower[1u << i];
    }
    if (std::fabs(lower[mask] - sum) > kTol) return false;
  }
  return true;
}

// On a finite frame, nonnegativity of the Mobius transform is equivalent to
// k-monotonicity for every k up to n.
bool check_belief(const Eigen::VectorXd& lower, int n) {
  Eigen::VectorXd m = lower;
  subset_mobius_inplace(m, n);
  return m.minCoeff() >= -kTol;
}

}  // namespace

bool check_two_monotone(const Eigen::VectorXd& lower, int n, double tol) {
  const std::uint32_t size = 1u << n;
  auto violates = [&](std::uint32_t a, std::uint32_t b) {
    return lower[a | b] + lower[a & b] < lower[a] + lower[b] - tol;
  };
  if (n <= 10) {
    for (std::uint32_t a = 1; a < size; ++a) {
      for (std::uint32_t b = a + 1; b < size; ++b) {
        if (violates(a, b)) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x2b0e7a11u ^ (static_cast<std::uint64_t>(n) << 32));
  std::uniform_int_distribution<std::uint32_t> pick(1, size - 1);
  for (int trial = 0; trial < 1000000; ++trial) {
    if (violates(pick(rng), pick(rng))) return false;
  }
  return true;
}

Capacity Capacity::from_lower(const Frame& frame, Eigen::VectorXd lower,
                              std::optional<CapacityKind> kind) {
  const int n = frame.size();
  const std::uint32_t size = 1u << n;
  if (lower.size() != static_cast<Eigen::Index>(size)) {
    raise(Errc::invalid_capacity,
          "lower table must have 2^n entries, got " +
              std::to_string(lower.size()));
  }
  if (std::fabs(lower[0]) > kTol || std::fabs(lower[size - 1] - 1.0) > kTol) {
    raise(Errc::invalid_capacity, "lower(empty) must be 0 and lower(full) 1");
  }
  lower[0] = 0.0;
  lower[size - 1] = 1.0;
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    if (lower[mask] < -kTol || lower[mask] > 1.0 + kTol) {
      raise(Errc::invalid_capacity, "lower value outside [0, 1]");
    }
    lower[mask] = std::clamp(lower[mask], 0.0, 1.0);
  }
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t step = 1u << bit;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if ((mask & step) && lower[mask] < lower[mask ^ step] - kTol) {
        raise(Errc::invalid_capacity, "lower table is not monotone");
      }
    }
  }

  if (kind) {
    switch (*kind) {
      case CapacityKind::general:
        break;
      case CapacityKind::two_monotone:
        if (!check_two_monotone(lower, n)) {
          raise(Errc::not_two_monotone, "capacity is not 2-monotone");
        }
        break;
      case CapacityKind::belief:
        if (!check_belief(lower, n)) {
          raise(Errc::not_a_belief_function,
                "Mobius transform has a negative mass");
        }
        break;
      case CapacityKind::precise:
        if (!check_precise(lower, n)) {
          raise(Errc::invalid_capacity, "lower table is not additive");
        }
        break;
    }
    return Capacity(frame, std::move(lower), *kind);
  }

  CapacityKind detected = CapacityKind::general;
  if (check_precise(lower, n)) {
    detected = CapacityKind::precise;
  } else if (check_belief(lower, n)) {
    detected = CapacityKind::belief;
  } else if (check_two_monotone(lower, n)) {
    detected = CapacityKind::two_monotone;
  }
  return Capacity(frame, std::move(lower), detected);
}

double Capacity::lower(const Event& e) const {
  if (e.frame_id() != frame_.id()) {
    raise(Errc::frame_mismatch, "event does not belong to capacity frame");
  }
  return lower_[e.mask()];
}

double Capacity::upper(const Event& e) const {
  if (e.frame_id() != frame_.id()) {
    raise(Errc::frame_mismatch, "event does not belong to capacity frame");
  }
  return upper(e.mask());
}

ProbabilityInterval Capacity::interval(const Event& e) const {
  return ProbabilityInterval(lower(e), upper(e));
}

bool Capacity::is_vacuous(const Event& e) const {
  return lower(e) <= kTol && upper(e) >= 1.0 - kTol;
}

Partition::Partition(std::vector<Event> blocks_) : blocks(std::move(blocks_)) {
  if (blocks.empty()) raise(Errc::invalid_partition, "no blocks");
  std::uint32_t covered = 0;
  for (const auto& b : blocks) {
    require_same_frame(blocks.front(), b);
    if (b.empty()) raise(Errc::invalid_partition, "empty block");
    if (covered & b.mask()) {
      raise(Errc::invalid_partition, "blocks are not disjoint");
    }
    covered |= b.mask();
  }
  if (covered != blocks.front().full_mask()) {
    raise(Errc::invalid_partition, "blocks do not cover the frame");
  }
}

Partition Partition::binary(const Event& b) {
  if (b.empty() || b.full()) {
    raise(Errc::invalid_partition, "binary partition needs a proper event");
  }
  return Partition({b, complement(b)});
}

}  // namespace ipe
