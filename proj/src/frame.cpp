#include "ipe/frame.hpp"

#include <atomic>
#include <unordered_set>

namespace ipe {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::frame_mismatch: return "FrameMismatch";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::negative_mass: return "NegativeMass";
    case Errc::mass_not_normalized: return "MassNotNormalized";
    case Errc::empty_set_mass: return "EmptySetMass";
    case Errc::invalid_capacity: return "InvalidCapacity";
    case Errc::not_a_belief_function: return "NotABeliefFunction";
    case Errc::not_two_monotone: return "NotTwoMonotone";
    case Errc::frame_too_large: return "FrameTooLarge";
    case Errc::infeasible_polytope: return "InfeasiblePolytope";
    case Errc::conditioning_on_null: return "ConditioningOnNull";
    case Errc::geometric_undefined: return "GeometricUndefined";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::no_sure_loss: return "NoSureLoss";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_simplex_vector: return "InvalidSimplexVector";
    case Errc::empty_alup: return "EmptyAlup";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_check_failed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

namespace {
std::uint64_t next_frame_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty() || labels.size() > kMaxOutcomes) {
    raise(Errc::out_of_range,
          "frame must have between 1 and 24 outcomes, got " +
              std::to_string(labels.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) raise(Errc::parse_error, "empty outcome label");
    if (!seen.insert(label).second) {
      raise(Errc::parse_error, "duplicate outcome label '" + label + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(labels), next_frame_id()});
}

int Frame::index_of(std::string_view label) const {
  const auto& ls = data_->labels;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return static_cast<int>(i);
  }
  raise(Errc::unknown_label, std::string(label));
}

Event Frame::event_mask(std::uint32_t mask) const {
  if (mask & ~full_mask()) {
    raise(Errc::out_of_range, "event mask exceeds frame size");
  }
  return Event(mask, id(), size());
}

Event Frame::event(std::span<const std::string> labels) const {
  std::uint32_t mask = 0;
  for (const auto& label : labels) mask |= 1u << index_of(label);
  return Event(mask, id(), size());
}

Event Frame::event(std::initializer_list<std::string_view> labels) const {
  std::uint32_t mask = 0;
  for (auto label : labels) mask |= 1u << index_of(label);
  return Event(mask, id(), size());
}

Event Frame::empty_event() const { return Event(0, id(), size()); }
Event Frame::full_event() const { return Event(full_mask(), id(), size()); }

void require_same_frame(const Event& a, const Event& b) {
  if (a.frame_id() != b.frame_id()) {
    raise(Errc::frame_mismatch, "events belong to different frames");
  }
}

Event complement(const Event& e) {
  return Event(~e.mask() & e.full_mask(), e.frame_id(), e.frame_size());
}

Event intersect(const Event& a, const Event& b) {
  require_same_frame(a, b);
  return Event(a.mask() & b.mask(), a.frame_id(), a.frame_size());
}

Event unite(const Event& a, const Event& b) {
  require_same_frame(a, b);
  return Event(a.mask() | b.mask(), a.frame_id(), a.frame_size());
}

bool is_subset(const Event& a, const Event& b) {
  require_same_frame(a, b);
  return (a.mask() & ~b.mask()) == 0;
}

std::string event_name(const Frame& frame, const Event& e) {
  if (e.frame_id() != frame.id()) {
    raise(Errc::frame_mismatch, "event does not belong to frame");
  }
  if (e.empty()) return "{}";
  std::string out;
  for (int i = 0; i < frame.size(); ++i) {
    if (!e.contains(i)) continue;
    if (!out.empty()) out += '+';
    out += frame.label(i);
  }
  return out;
}

}  // namespace ipe
