#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ipe/capacity.hpp"

namespace ipe {

/// Mobius transform of a belief-function capacity back to its mass function.
/// Masses within kTol below zero are floating noise and are clamped away; a
/// genuinely negative mass raises not_a_belief_function.
MassFunction mobius(const Capacity& c);

/// Subset-zeta transform of a valid mass function: lower(A) = sum of masses
/// of subsets of A. The result is tagged belief.
Capacity belief_from_mass(const MassFunction& m);

/// Conjugate upper probability, 1 - lower(complement).
double conjugate_upper(const Capacity& c, const Event& a);

struct MonotonicityReport {
  int k_tested = 0;
  bool holds = true;
  bool exhaustive = true;
  long long collections_tested = 0;
  struct Witness {
    std::uint32_t event;                 // the A of the failing inequality
    std::vector<std::uint32_t> parts;    // the A_1..A_j collection
    double lhs;                          // lower(A)
    double rhs;                          // inclusion-exclusion bound
  };
  std::optional<Witness> witness;
};

/// Tests the order-k inclusion-exclusion inequalities. Exhaustive over all
/// collections of distinct strict subsets (sizes 2..k) when n <= 5; for
/// larger frames a fixed-seed random sample of at least `sample_budget`
/// collections is checked instead.
MonotonicityReport is_k_monotone(const Capacity& c, int k,
                                 long long sample_budget = 100000);

}  // namespace ipe
