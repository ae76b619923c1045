#pragma once

#include <optional>

#include "ipe/credal.hpp"

namespace ipe {

enum class Rule { generalized_bayes, dempster, geometric };

const char* rule_name(Rule rule);

enum class Method { closed_form, lp, mass_operational };

struct ConditionalResult {
  ProbabilityInterval interval;
  Rule rule;
  Method method = Method::closed_form;
  /// Full posterior lower table, filled when requested from condition().
  std::optional<Capacity> posterior;
  /// Largest absolute gap between independently computed paths, when more
  /// than one ran. Mismatches beyond tolerance abort, except in the
  /// degenerate lower(B) = 0 regime where the gap is surfaced here instead.
  std::optional<double> cross_check_gap;
};

/// Generalized Bayes conditioning: extremize P(a & b)/P(b) over the credal
/// set (LP path). On 2-monotone capacities the closed form
///   lo = lower(a&b) / (lower(a&b) + upper(~a & b)),
///   hi = upper(a&b) / (upper(a&b) + lower(~a & b))
/// is the primary path and the LP the auditor; 0/0 resolves to the vacuous
/// ends lo = 0, hi = 1.
ConditionalResult gen_bayes(const Capacity& c, const Event& a, const Event& b);
ConditionalResult gen_bayes(const CredalSet& cs, const Event& a, const Event& b);

/// Dempster conditioning: hi = upper(a&b)/upper(b), lo by conjugacy. For
/// belief functions the mass-operational path is run as well and must agree.
ConditionalResult dempster(const Capacity& c, const Event& a, const Event& b);

/// Geometric conditioning: lo = lower(a&b)/lower(b), hi by conjugacy.
/// Raises geometric_undefined when lower(b) vanishes.
ConditionalResult geometric(const Capacity& c, const Event& a, const Event& b);

/// Cookie-cutter mass conditioning: intersect focal sets with b, discard the
/// empty intersections, renormalize.
MassFunction dempster_mass(const MassFunction& m, const Event& b);

/// Keep only focal sets contained in b, renormalize.
MassFunction geometric_mass(const MassFunction& m, const Event& b);

ConditionalResult condition(const Capacity& c, const Event& a, const Event& b,
                            Rule rule, bool with_posterior = false);

/// Full posterior lower table under a rule, one event at a time.
Capacity posterior_capacity(const Capacity& c, const Event& b, Rule rule);

}  // namespace ipe
