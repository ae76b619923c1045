#include "ipe/updating.hpp"

#include <cmath>

#include "ipe/transforms.hpp"

namespace ipe {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::generalized_bayes: return "generalized_bayes";
    case Rule::dempster: return "dempster";
    case Rule::geometric: return "geometric";
  }
  return "?";
}

namespace {

double belief_of(const MassFunction& m, std::uint32_t mask) {
  double sum = 0.0;
  for (const auto& [focal, v] : m.entries) {
    if ((focal & ~mask) == 0 && focal != 0) sum += v;
  }
  return sum;
}

// Fagin-Halpern endpoints on the lower/upper tables of a 2-monotone
// capacity. A 0/0 ratio resolves to the vacuous end.
double fh_lower(const Capacity& c, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t full = c.frame().full_mask();
  const double num = c.lower(a & b);
  const double den = num + c.upper((~a & full) & b);
  if (den <= kTol) return 0.0;
  return num / den;
}

double fh_upper(const Capacity& c, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t full = c.frame().full_mask();
  const double num = c.upper(a & b);
  const double den = num + c.lower((~a & full) & b);
  if (den <= kTol) return 1.0;
  return num / den;
}

void enforce_gap(std::optional<double>& slot, double gap, double tol,
                 const char* what) {
  if (!slot || gap > *slot) slot = gap;
  if (gap > tol) {
    raise(Errc::internal_check_failed,
          std::string(what) + " paths disagree by " + std::to_string(gap));
  }
}

}  // namespace

ConditionalResult gen_bayes(const CredalSet& cs, const Event& a,
                            const Event& b) {
  const Capacity& c = cs.capacity();
  if (a.frame_id() != c.frame_id() || b.frame_id() != c.frame_id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  if (c.upper(b) <= kTol) {
    raise(Errc::conditioning_on_null,
          "conditioning event has upper probability zero");
  }
  ProbabilityInterval lp_interval = fractional_bounds(cs, a, b);

  ConditionalResult res;
  res.rule = Rule::generalized_bayes;
  if (!c.at_least_two_monotone()) {
    res.interval = lp_interval;
    res.method = Method::lp;
    return res;
  }

  ProbabilityInterval closed(fh_lower(c, a.mask(), b.mask()),
                             fh_upper(c, a.mask(), b.mask()));
  const double gap = std::max(std::fabs(closed.lo - lp_interval.lo),
                              std::fabs(closed.hi - lp_interval.hi));
  res.method = Method::closed_form;
  if (c.lower(b) > kTol) {
    enforce_gap(res.cross_check_gap, gap, kTol, "generalized Bayes");
    res.interval = closed;
  } else {
    // Degenerate regime: the closed form and the restricted-set LP may pull
    // apart on pathological tables. Keep the LP (restricted-set) value and
    // surface the gap instead of resolving silently.
    res.cross_check_gap = gap;
    if (gap > kTol) {
      res.interval = lp_interval;
      res.method = Method::lp;
    } else {
      res.interval = closed;
    }
  }
  return res;
}

ConditionalResult gen_bayes(const Capacity& c, const Event& a,
                            const Event& b) {
  return gen_bayes(CredalSet(c), a, b);
}

ConditionalResult dempster(const Capacity& c, const Event& a, const Event& b) {
  if (a.frame_id() != c.frame_id() || b.frame_id() != c.frame_id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  const double upper_b = c.upper(b);
  if (upper_b <= kTol) {
    raise(Errc::conditioning_on_null,
          "conditioning event has upper probability zero");
  }
  const Event ac = complement(a);
  const double hi = c.upper(a & b) / upper_b;
  const double lo = 1.0 - c.upper(ac & b) / upper_b;

  ConditionalResult res;
  res.rule = Rule::dempster;
  res.method = Method::closed_form;
  res.interval = ProbabilityInterval(lo, hi);

  if (c.kind() == CapacityKind::belief ||
      c.kind() == CapacityKind::precise) {
    const MassFunction cond = dempster_mass(mobius(c), b);
    const double lo_mass = belief_of(cond, a.mask());
    const double hi_mass = 1.0 - belief_of(cond, ac.mask());
    const double gap = std::max(std::fabs(lo - lo_mass), std::fabs(hi - hi_mass));
    enforce_gap(res.cross_check_gap, gap, kTol, "Dempster");
  }
  return res;
}

ConditionalResult geometric(const Capacity& c, const Event& a,
                            const Event& b) {
  if (a.frame_id() != c.frame_id() || b.frame_id() != c.frame_id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  const double lower_b = c.lower(b);
  if (lower_b <= kTol) {
    raise(Errc::geometric_undefined,
          "conditioning event has lower probability zero");
  }
  const Event ac = complement(a);
  const double lo = c.lower(a & b) / lower_b;
  const double hi = 1.0 - c.lower(ac & b) / lower_b;

  ConditionalResult res;
  res.rule = Rule::geometric;
  res.method = Method::closed_form;
  res.interval = ProbabilityInterval(lo, hi);

  if (c.kind() == CapacityKind::belief ||
      c.kind() == CapacityKind::precise) {
    const MassFunction cond = geometric_mass(mobius(c), b);
    const double lo_mass = belief_of(cond, a.mask());
    const double hi_mass = 1.0 - belief_of(cond, ac.mask());
    const double gap = std::max(std::fabs(lo - lo_mass), std::fabs(hi - hi_mass));
    enforce_gap(res.cross_check_gap, gap, kTol, "Geometric");
  }
  return res;
}

MassFunction dempster_mass(const MassFunction& m, const Event& b) {
  require_valid(m);
  if (b.frame_id() != m.frame.id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  double norm = 0.0;
  for (const auto& [focal, v] : m.entries) {
    if (focal & b.mask()) norm += v;
  }
  if (norm <= kTol) {
    raise(Errc::conditioning_on_null,
          "no focal set intersects the conditioning event");
  }
  MassFunction out{m.frame, {}};
  for (const auto& [focal, v] : m.entries) {
    const std::uint32_t cut = focal & b.mask();
    if (cut == 0 || v == 0.0) continue;
    out.entries[cut] += v / norm;
  }
  return out;
}

MassFunction geometric_mass(const MassFunction& m, const Event& b) {
  require_valid(m);
  if (b.frame_id() != m.frame.id()) {
    raise(Errc::frame_mismatch, "event from another frame");
  }
  double norm = 0.0;
  for (const auto& [focal, v] : m.entries) {
    if ((focal & ~b.mask()) == 0) norm += v;
  }
  if (norm <= kTol) {
    raise(Errc::geometric_undefined,
          "no focal set is contained in the conditioning event");
  }
  MassFunction out{m.frame, {}};
  for (const auto& [focal, v] : m.entries) {
    if ((focal & ~b.mask()) != 0 || v == 0.0) continue;
    out.entries[focal] += v / norm;
  }
  return out;
}

ConditionalResult condition(const Capacity& c, const Event& a, const Event& b,
                            Rule rule, bool with_posterior) {
  ConditionalResult res;
  switch (rule) {
    case Rule::generalized_bayes: res = gen_bayes(c, a, b); break;
    case Rule::dempster: res = dempster(c, a, b); break;
    case Rule::geometric: res = geometric(c, a, b); break;
  }
  if (with_posterior) res.posterior = posterior_capacity(c, b, rule);
  return res;
}

Capacity posterior_capacity(const Capacity& c, const Event& b, Rule rule) {
  const int n = c.size();
  const std::uint32_t size = 1u << n;
  const std::uint32_t full = c.frame().full_mask();
  Eigen::VectorXd table(size);

  switch (rule) {
    case Rule::dempster: {
      const double upper_b = c.upper(b);
      if (upper_b <= kTol) {
        raise(Errc::conditioning_on_null,
              "conditioning event has upper probability zero");
      }
      for (std::uint32_t mask = 0; mask < size; ++mask) {
        table[mask] = 1.0 - c.upper((~mask & full) & b.mask()) / upper_b;
      }
      break;
    }
    case Rule::geometric: {
      const double lower_b = c.lower(b);
      if (lower_b <= kTol) {
        raise(Errc::geometric_undefined,
              "conditioning event has lower probability zero");
      }
      for (std::uint32_t mask = 0; mask < size; ++mask) {
        table[mask] = c.lower(mask & b.mask()) / lower_b;
      }
      break;
    }
    case Rule::generalized_bayes: {
      if (c.upper(b) <= kTol) {
        raise(Errc::conditioning_on_null,
              "conditioning event has upper probability zero");
      }
      if (c.at_least_two_monotone()) {
        for (std::uint32_t mask = 0; mask < size; ++mask) {
          table[mask] = fh_lower(c, mask, b.mask());
        }
        table[full] = 1.0;
      } else {
        CredalSet cs(c);
        for (std::uint32_t mask = 0; mask < size; ++mask) {
          table[mask] =
              fractional_optimum(cs, c.frame().event_mask(mask), b,
                                 Sense::minimize)
                  .value;
        }
        table[full] = 1.0;
      }
      break;
    }
  }
  table[0] = 0.0;

  // Conditioning preserves the monotonicity class of the prior, so the
  // posterior is tagged (and thereby re-verified) at the same kind.
  return Capacity::from_lower(c.frame(), std::move(table), c.kind());
}

}  // namespace ipe
