#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipe/common.hpp"

namespace ipe {

class Event;

/// A finite outcome space: an ordered list of distinct outcome labels.
/// Frames are immutable; copies share the label storage and the identity.
class Frame {
 public:
  static constexpr int kMaxOutcomes = 24;

  explicit Frame(std::vector<std::string> labels);

  int size() const { return static_cast<int>(data_->labels.size()); }
  std::uint64_t id() const { return data_->id; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(int i) const { return data_->labels.at(i); }

  /// Index of a label; raises unknown_label otherwise.
  int index_of(std::string_view label) const;

  Event event_mask(std::uint32_t mask) const;
  Event event(std::span<const std::string> labels) const;
  Event event(std::initializer_list<std::string_view> labels) const;
  Event empty_event() const;
  Event full_event() const;

  std::uint32_t full_mask() const {
    return size() == 32 ? ~0u : ((1u << size()) - 1u);
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::uint64_t id;
  };
  std::shared_ptr<const Data> data_;
};

/// A subset of a frame's outcomes, encoded as a bit mask. Events remember the
/// frame they belong to; combining events from different frames is an error.
class Event {
 public:
  Event() : mask_(0), frame_id_(0), n_(0) {}
  Event(std::uint32_t mask, std::uint64_t frame_id, int n)
      : mask_(mask), frame_id_(frame_id), n_(n) {}

  std::uint32_t mask() const { return mask_; }
  std::uint64_t frame_id() const { return frame_id_; }
  int frame_size() const { return n_; }

  bool empty() const { return mask_ == 0; }
  bool full() const { return mask_ == full_mask(); }
  int cardinality() const { return std::popcount(mask_); }
  bool contains(int outcome) const { return (mask_ >> outcome) & 1u; }

  std::uint32_t full_mask() const {
    return n_ == 32 ? ~0u : ((1u << n_) - 1u);
  }

  friend bool operator==(const Event& a, const Event& b) {
    return a.mask_ == b.mask_ && a.frame_id_ == b.frame_id_;
  }
  friend bool operator!=(const Event& a, const Event& b) { return !(a == b); }

 private:
  std::uint32_t mask_;
  std::uint64_t frame_id_;
  int n_;
};

void require_same_frame(const Event& a, const Event& b);

Event complement(const Event& e);
Event intersect(const Event& a, const Event& b);
Event unite(const Event& a, const Event& b);
bool is_subset(const Event& a, const Event& b);

// Expression-style aliases for the set operations.
inline Event operator~(const Event& e) { return complement(e); }
inline Event operator&(const Event& a, const Event& b) { return intersect(a, b); }
inline Event operator|(const Event& a, const Event& b) { return unite(a, b); }

/// Label rendering: outcomes joined by '+' in frame order; "{}" when empty.
std::string event_name(const Frame& frame, const Event& e);

}  // namespace ipe
