#include "ipe/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ipe/transforms.hpp"

namespace ipe {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) raise(Errc::parse_error, "malformed JSON");
  return doc;
}

Frame parse_frame(const json& doc) {
  if (!doc.is_object() || !doc.contains("frame") ||
      !doc["frame"].is_array()) {
    raise(Errc::parse_error, "expected object with a \"frame\" array");
  }
  std::vector<std::string> labels;
  for (const auto& item : doc["frame"]) {
    if (!item.is_string()) raise(Errc::parse_error, "frame labels must be strings");
    const std::string label = item.get<std::string>();
    if (label.find('+') != std::string::npos) {
      raise(Errc::parse_error,
            "label '" + label + "' contains the event separator '+'");
    }
    labels.push_back(label);
  }
  if (labels.empty() || labels.size() > Frame::kMaxOutcomes) {
    raise(Errc::parse_error, "frame must have between 1 and 24 outcomes");
  }
  return Frame(std::move(labels));
}

std::uint32_t parse_set(const Frame& frame, const json& arr) {
  if (!arr.is_array()) raise(Errc::parse_error, "\"set\" must be an array");
  std::uint32_t mask = 0;
  for (const auto& item : arr) {
    if (!item.is_string()) raise(Errc::parse_error, "set members must be strings");
    const std::string label = item.get<std::string>();
    int idx;
    try {
      idx = frame.index_of(label);
    } catch (const Error&) {
      raise(Errc::parse_error, "unknown outcome '" + label + "'");
    }
    mask |= 1u << idx;
  }
  return mask;
}

Eigen::VectorXd parse_vector(const json& arr, const char* name) {
  if (!arr.is_array() || arr.empty()) {
    raise(Errc::parse_error, std::string("\"") + name + "\" must be a nonempty array");
  }
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      raise(Errc::parse_error, std::string("\"") + name + "\" must be numeric");
    }
    v[i] = arr[i].get<double>();
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ParsedModel parse_model_json(const std::string& text) {
  const json doc = parse_json(text);
  Frame frame = parse_frame(doc);

  if (!doc.contains("model") || !doc["model"].is_object()) {
    raise(Errc::parse_error, "expected a \"model\" object");
  }
  const json& model = doc["model"];
  const std::string type = model.value("type", "");
  if (!model.contains("entries") || !model["entries"].is_array()) {
    raise(Errc::parse_error, "expected an \"entries\" array");
  }

  std::set<std::uint32_t> seen;
  std::vector<std::pair<std::uint32_t, double>> entries;
  for (const auto& item : model["entries"]) {
    if (!item.is_object() || !item.contains("set") || !item.contains("value") ||
        !item["value"].is_number()) {
      raise(Errc::parse_error, "entries need a \"set\" and a numeric \"value\"");
    }
    const std::uint32_t mask = parse_set(frame, item["set"]);
    if (!seen.insert(mask).second) {
      raise(Errc::parse_error, "duplicate set in entries");
    }
    entries.emplace_back(mask, item["value"].get<double>());
  }

  if (type == "mass") {
    MassFunction mass = make_mass_masks(frame, std::move(entries));
    require_valid(mass);
    Capacity capacity = belief_from_mass(mass);
    return ParsedModel{frame, std::move(mass), std::move(capacity)};
  }
  if (type == "lower") {
    const std::uint32_t full = frame.full_mask();
    Eigen::VectorXd lower = Eigen::VectorXd::Zero(full + 1);
    lower[full] = 1.0;
    std::size_t proper = 0;
    for (const auto& [mask, value] : entries) {
      if (mask == 0 || mask == full) {
        raise(Errc::parse_error,
              "lower entries list nonempty proper subsets only");
      }
      lower[mask] = value;
      ++proper;
    }
    if (proper != full - 1) {
      raise(Errc::parse_error,
            "lower entries must cover every nonempty proper subset");
    }
    Capacity capacity = Capacity::from_lower(frame, std::move(lower));
    return ParsedModel{frame, std::nullopt, std::move(capacity)};
  }
  raise(Errc::parse_error, "model type must be \"mass\" or \"lower\"");
}

ParsedModel load_model_file(const std::string& path) {
  return parse_model_json(read_file(path));
}

SimpsonInstance parse_simpson_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("q") ||
      !doc.contains("u") || !doc.contains("V")) {
    raise(Errc::parse_error, "expected keys \"p\", \"q\", \"u\", \"V\"");
  }
  Eigen::VectorXd p = parse_vector(doc["p"], "p");
  Eigen::VectorXd q = parse_vector(doc["q"], "q");
  SimplexVector u(parse_vector(doc["u"], "u"));
  if (!doc["V"].is_array() || doc["V"].empty()) {
    raise(Errc::parse_error, "\"V\" must be a nonempty array of rules");
  }
  std::vector<SimplexVector> desirable;
  for (const auto& item : doc["V"]) {
    desirable.emplace_back(parse_vector(item, "V"));
  }
  SimpsonInstance inst{std::move(p), std::move(q), std::move(u),
                       std::move(desirable)};
  if (inst.q.size() != inst.p.size() ||
      inst.u.weights().size() != inst.p.size()) {
    raise(Errc::dimension_mismatch, "instance arity mismatch");
  }
  return inst;
}

SimpsonInstance load_simpson_file(const std::string& path) {
  return parse_simpson_json(read_file(path));
}

Event parse_event(const Frame& frame, const std::string& spec) {
  if (spec.empty()) raise(Errc::parse_error, "empty event");
  std::uint32_t mask = 0;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t stop = spec.find('+', start);
    const std::string label =
        spec.substr(start, stop == std::string::npos ? stop : stop - start);
    if (label.empty()) raise(Errc::parse_error, "empty label in event '" + spec + "'");
    try {
      mask |= 1u << frame.index_of(label);
    } catch (const Error&) {
      raise(Errc::parse_error, "unknown outcome '" + label + "'");
    }
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return frame.event_mask(mask);
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // never print the negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace ipe
