#pragma once

#include <vector>

#include "ipe/updating.hpp"

namespace ipe {

enum class Phenomenon {
  dilation,
  strict_dilation,
  contraction,
  strict_contraction,
  sure_loss,
  sure_gain,
  none,
};

const char* phenomenon_name(Phenomenon p);

struct PhenomenonReport {
  Phenomenon classification = Phenomenon::none;
  Rule rule;
  ProbabilityInterval prior;
  std::vector<std::pair<Event, ProbabilityInterval>> per_block;

  // Extremal statistics over blocks of the conditional endpoints.
  double sup_lo = 0.0;
  double inf_lo = 0.0;
  double sup_hi = 0.0;
  double inf_hi = 0.0;
};

/// Classifies how conditioning on each block of the partition moves the
/// probability interval of `a` under the rule. Boundary comparisons use the
/// 1e-9 tolerance: values within it count as equal, demoting strict
/// classifications to their non-strict forms. Blocks where the rule is
/// undefined abort detection (the definitions quantify over every block).
PhenomenonReport detect(const Capacity& c, const Event& a,
                        const Partition& part, Rule rule);

/// The compound bet certifying a detected sure loss: one unconditional bet
/// against `a` plus one called-off bet on `a` per block. Its net payoff is
/// t - s < 0 whichever outcome obtains.
struct DutchBook {
  double s = 0.0;
  double t = 0.0;

  struct UnconditionalBet {
    double cost;     // 1 - t
    Event pays_on;   // complement of a, pays 1
  } unconditional;

  struct ConditionalBet {
    Event given;     // active iff this block occurs
    double cost;     // s
    Event pays_on;   // a, pays 1
  };
  std::vector<ConditionalBet> conditional_bets;

  double guaranteed_net = 0.0;  // t - s, outcome-independent
};

/// Requires detect(...) == sure_loss and 0 < gamma < (inf_B lo - prior.hi)/2;
/// verifies the guaranteed net by exhaustive outcome enumeration. A sure
/// gain in `a` is a sure loss in its complement, so callers certify those
/// books on the complement event.
DutchBook dutch_book(const Capacity& c, const Event& a, const Partition& part,
                     Rule rule, double gamma);

}  // namespace ipe
