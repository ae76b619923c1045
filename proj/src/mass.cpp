#include "ipe/mass.hpp"

#include <cmath>

namespace ipe {

MassFunction make_mass(const Frame& frame,
                       std::vector<std::pair<Event, double>> entries) {
  std::vector<std::pair<std::uint32_t, double>> raw;
  raw.reserve(entries.size());
  for (const auto& [e, v] : entries) {
    if (e.frame_id() != frame.id()) {
      raise(Errc::frame_mismatch, "mass entry from another frame");
    }
    raw.emplace_back(e.mask(), v);
  }
  return make_mass_masks(frame, std::move(raw));
}

MassFunction make_mass_masks(
    const Frame& frame, std::vector<std::pair<std::uint32_t, double>> entries) {
  MassFunction m{frame, {}};
  for (const auto& [mask, v] : entries) {
    if (mask & ~frame.full_mask()) {
      raise(Errc::out_of_range, "mass entry mask exceeds frame");
    }
    m.entries[mask] += v;
  }
  return m;
}

MassCheck validate_mass(const MassFunction& m) {
  double total = 0.0;
  for (const auto& [mask, v] : m.entries) {
    if (mask == 0 && v != 0.0) {
      return {false, Errc::empty_set_mass, "mass assigned to the empty set"};
    }
    if (v < 0.0) {
      return {false, Errc::negative_mass,
              "negative mass " + std::to_string(v)};
    }
    total += v;
  }
  if (std::fabs(total - 1.0) > kTol) {
    return {false, Errc::mass_not_normalized,
            "masses sum to " + std::to_string(total)};
  }
  return {};
}

void require_valid(const MassFunction& m) {
  MassCheck check = validate_mass(m);
  if (!check.ok) raise(*check.violation, check.detail);
}

}  // namespace ipe
