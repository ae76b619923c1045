#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace ipe {

// Subset-lattice transforms on dense 2^n tables, in place, O(n * 2^n).

/// g(A) = sum over B subset of A of f(B).
inline void subset_zeta_inplace(Eigen::VectorXd& f, int n) {
  const std::uint32_t size = 1u << n;
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t step = 1u << bit;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if (mask & step) f[mask] += f[mask ^ step];
    }
  }
}

/// Inverse of subset_zeta_inplace: f(A) = sum over B subset of A of
/// (-1)^|A\B| g(B).
inline void subset_mobius_inplace(Eigen::VectorXd& f, int n) {
  const std::uint32_t size = 1u << n;
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t step = 1u << bit;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if (mask & step) f[mask] -= f[mask ^ step];
    }
  }
}

/// Visits every nonempty submask of `mask`, including `mask` itself.
template <typename F>
void for_each_submask(std::uint32_t mask, F&& fn) {
  for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
    fn(sub);
  }
}

}  // namespace ipe
