#pragma once

#include <optional>
#include <string>

#include "ipe/capacity.hpp"
#include "ipe/simpson.hpp"

namespace ipe {

/// A model file holds a frame plus either a mass assignment over focal sets
/// or a full lower-probability table:
///   { "frame": ["w1", ...],
///     "model": { "type": "mass" | "lower",
///                "entries": [ {"set": ["w1","w2"], "value": 0.5}, ... ] } }
/// Mass entries list the focal sets (omitted sets carry no mass). Lower
/// entries must cover every nonempty proper subset; the empty set and the
/// full frame are implied. Duplicate sets are rejected.
struct ParsedModel {
  Frame frame;
  std::optional<MassFunction> mass;  // present for type "mass"
  Capacity capacity;
};

ParsedModel parse_model_json(const std::string& text);
ParsedModel load_model_file(const std::string& path);

/// { "p": [...], "q": [...], "u": [...], "V": [[...], ...] }
SimpsonInstance parse_simpson_json(const std::string& text);
SimpsonInstance load_simpson_file(const std::string& path);

/// Command-line event syntax: frame labels joined by '+'.
Event parse_event(const Frame& frame, const std::string& spec);

/// Numeric rendering used for all emitted values: 12 significant digits.
std::string format_real(double value);

}  // namespace ipe
