#pragma once

#include <stdexcept>
#include <string>

namespace ipe {

// Absolute tolerance for all real comparisons. Equality of capacities means
// max-norm distance <= kTol.
inline constexpr double kTol = 1e-9;

// Looser tolerance used when deduplicating polytope vertices: permutation
// vertices of degenerate capacities coincide only up to rounding.
inline constexpr double kVertexTol = 1e-7;

// Agreement tolerance between an LP-computed quantity and a closed form.
inline constexpr double kLpTol = 1e-7;

enum class Errc {
  frame_mismatch,
  unknown_label,
  negative_mass,
  mass_not_normalized,
  empty_set_mass,
  invalid_capacity,
  not_a_belief_function,
  not_two_monotone,
  frame_too_large,
  infeasible_polytope,
  conditioning_on_null,
  geometric_undefined,
  invalid_partition,
  no_sure_loss,
  dimension_mismatch,
  invalid_simplex_vector,
  empty_alup,
  out_of_range,
  parse_error,
  internal_check_failed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

inline bool near(double a, double b, double tol = kTol) {
  return (a > b ? a - b : b - a) <= tol;
}

}  // namespace ipe
