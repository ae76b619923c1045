#include "ipe/transforms.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "ipe/lattice.hpp"

namespace ipe {

MassFunction mobius(const Capacity& c) {
  const int n = c.size();
  Eigen::VectorXd m = c.table();
  subset_mobius_inplace(m, n);

  MassFunction out{c.frame(), {}};
  const std::uint32_t size = 1u << n;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    double v = m[mask];
    if (v < -kTol) {
      raise(Errc::not_a_belief_function,
            "Mobius transform yields mass " + std::to_string(v));
    }
    if (v > 1e-12) out.entries[mask] = v;
  }
  if (m[0] < -kTol || m[0] > kTol) {
    raise(Errc::not_a_belief_function, "empty set received Mobius mass");
  }
  return out;
}

Capacity belief_from_mass(const MassFunction& m) {
  require_valid(m);
  const int n = m.frame.size();
  Eigen::VectorXd table = Eigen::VectorXd::Zero(1u << n);
  bool singletons_only = true;
  for (const auto& [mask, v] : m.entries) {
    table[mask] = v;
    if (v > 0.0 && std::popcount(mask) > 1) singletons_only = false;
  }
  subset_zeta_inplace(table, n);
  table[table.size() - 1] = 1.0;  // absorb the summation round-off
  return Capacity::from_lower(
      m.frame, std::move(table),
      singletons_only ? CapacityKind::precise : CapacityKind::belief);
}

double conjugate_upper(const Capacity& c, const Event& a) {
  return c.upper(a);
}

namespace {

// Inclusion-exclusion bound of Choquet order j for one collection.
double collection_bound(const Eigen::VectorXd& lower,
                        const std::vector<std::uint32_t>& parts) {
  const int j = static_cast<int>(parts.size());
  double rhs = 0.0;
  for (std::uint32_t sel = 1; sel < (1u << j); ++sel) {
    std::uint32_t inter = ~0u;
    for (int i = 0; i < j; ++i) {
      if (sel & (1u << i)) inter &= parts[i];
    }
    const double term = lower[inter];
    rhs += (std::popcount(sel) & 1) ? term : -term;
  }
  return rhs;
}

bool check_collection(const Eigen::VectorXd& lower, std::uint32_t event,
                      const std::vector<std::uint32_t>& parts,
                      MonotonicityReport& report) {
  const double rhs = collection_bound(lower, parts);
  ++report.collections_tested;
  if (lower[event] < rhs - kTol) {
    report.holds = false;
    report.witness =
        MonotonicityReport::Witness{event, parts, lower[event], rhs};
    return false;
  }
  return true;
}

bool exhaustive_pass(const Eigen::VectorXd& lower, int n, int j,
                     MonotonicityReport& report) {
  const std::uint32_t size = 1u << n;
  std::vector<std::uint32_t> subs;
  std::vector<int> idx(j);
  std::vector<std::uint32_t> parts(j);
  for (std::uint32_t event = 1; event < size; ++event) {
    subs.clear();
    for_each_submask(event, [&](std::uint32_t s) {
      if (s != event) subs.push_back(s);
    });
    const int count = static_cast<int>(subs.size());
    if (count < j) continue;
    for (int i = 0; i < j; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < j; ++i) parts[i] = subs[idx[i]];
      if (!check_collection(lower, event, parts, report)) return false;
      int pos = j - 1;
      while (pos >= 0 && idx[pos] == count - j + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < j; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return true;
}

}  // namespace

MonotonicityReport is_k_monotone(const Capacity& c, int k,
                                 long long sample_budget) {
  const int n = c.size();
  if (k < 2 || k > n) {
    raise(Errc::out_of_range, "k must satisfy 2 <= k <= n");
  }
  MonotonicityReport report;
  report.k_tested = k;
  const Eigen::VectorXd& lower = c.table();

  if (n <= 5) {
    // Order k holds iff the distinct-collection inequalities hold for every
    // size 2..k, so the hierarchy over k is honored by construction.
    for (int j = 2; j <= k; ++j) {
      if (!exhaustive_pass(lower, n, j, report)) return report;
    }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(0x5eed0000u + static_cast<std::uint64_t>(k) * 131 + n);
  const std::uint32_t size = 1u << n;
  std::uniform_int_distribution<std::uint32_t> pick_event(1, size - 1);
  std::uniform_int_distribution<int> pick_j(2, k);
  std::vector<std::uint32_t> parts;
  while (report.collections_tested < sample_budget) {
    const std::uint32_t event = pick_event(rng);
    if (std::popcount(event) < 2) continue;
    const int j = pick_j(rng);
    parts.clear();
    std::uniform_int_distribution<std::uint32_t> pick_sub(0, event);
    int attempts = 0;
    while (static_cast<int>(parts.size()) < j && attempts < 64) {
      ++attempts;
      const std::uint32_t s = pick_sub(rng) & event;
      if (s == 0 || s == event) continue;
      if (std::find(parts.begin(), parts.end(), s) != parts.end()) continue;
      parts.push_back(s);
    }
    if (static_cast<int>(parts.size()) < j) continue;
    if (!check_collection(lower, event, parts, report)) return report;
  }
  return report;
}

}  // namespace ipe
