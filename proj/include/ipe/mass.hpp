#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ipe/frame.hpp"

namespace ipe {

/// Random-set distribution: nonnegative weights on nonempty subsets of the
/// frame, summing to one. Stored sparsely as mask -> mass in mask order.
struct MassFunction {
  Frame frame;
  std::map<std::uint32_t, double> entries;

  double mass(std::uint32_t mask) const {
    auto it = entries.find(mask);
    return it == entries.end() ? 0.0 : it->second;
  }
  double mass(const Event& e) const { return mass(e.mask()); }
};

MassFunction make_mass(const Frame& frame,
                       std::vector<std::pair<Event, double>> entries);
MassFunction make_mass_masks(const Frame& frame,
                             std::vector<std::pair<std::uint32_t, double>> entries);

struct MassCheck {
  bool ok = true;
  std::optional<Errc> violation;
  std::string detail;
};

/// Confirms the mass-function invariants; reports the first violation
/// (empty-set mass, negative mass, sum off one beyond 1e-9) otherwise.
MassCheck validate_mass(const MassFunction& m);

/// Throwing form of validate_mass, used as a precondition guard.
void require_valid(const MassFunction& m);

}  // namespace ipe
