#include "ipe/phenomena.hpp"

#include <algorithm>
#include <cmath>

namespace ipe {

const char* phenomenon_name(Phenomenon p) {
  switch (p) {
    case Phenomenon::dilation: return "dilation";
    case Phenomenon::strict_dilation: return "strict_dilation";
    case Phenomenon::contraction: return "contraction";
    case Phenomenon::strict_contraction: return "strict_contraction";
    case Phenomenon::sure_loss: return "sure_loss";
    case Phenomenon::sure_gain: return "sure_gain";
    case Phenomenon::none: return "none";
  }
  return "?";
}

PhenomenonReport detect(const Capacity& c, const Event& a,
                        const Partition& part, Rule rule) {
  PhenomenonReport report;
  report.rule = rule;
  report.prior = c.interval(a);

  // Reuse one CredalSet across blocks so the generalized Bayes LP path does
  // not re-enumerate vertices per block.
  CredalSet cs(c);
  report.sup_lo = 0.0;
  report.inf_lo = 1.0;
  report.sup_hi = 0.0;
  report.inf_hi = 1.0;
  for (const Event& block : part.blocks) {
    ConditionalResult cond = rule == Rule::generalized_bayes
                                 ? gen_bayes(cs, a, block)
                                 : condition(c, a, block, rule);
    report.per_block.emplace_back(block, cond.interval);
    report.sup_lo = std::max(report.sup_lo, cond.interval.lo);
    report.inf_lo = std::min(report.inf_lo, cond.interval.lo);
    report.sup_hi = std::max(report.sup_hi, cond.interval.hi);
    report.inf_hi = std::min(report.inf_hi, cond.interval.hi);
  }

  const double plo = report.prior.lo;
  const double phi = report.prior.hi;
  auto eq = [](double x, double y) { return std::fabs(x - y) <= kTol; };
  const bool lo_drops = report.sup_lo < plo - kTol;
  const bool hi_rises = report.inf_hi > phi + kTol;
  const bool lo_rises = report.inf_lo > plo + kTol;
  const bool hi_drops = report.sup_hi < phi - kTol;

  if (report.inf_lo > phi + kTol) {
    report.classification = Phenomenon::sure_loss;
  } else if (report.sup_hi < plo - kTol) {
    report.classification = Phenomenon::sure_gain;
  } else if (lo_drops && hi_rises) {
    report.classification = Phenomenon::strict_dilation;
  } else if ((lo_drops && eq(report.inf_hi, phi)) ||
             (eq(report.sup_lo, plo) && hi_rises)) {
    report.classification = Phenomenon::dilation;
  } else if (lo_rises && hi_drops) {
    report.classification = Phenomenon::strict_contraction;
  } else if ((lo_rises && eq(report.sup_hi, phi)) ||
             (eq(report.inf_lo, plo) && hi_drops)) {
    report.classification = Phenomenon::contraction;
  } else {
    // Mixed movement across blocks, or both outer comparisons landing on
    // equality (a neutral update).
    report.classification = Phenomenon::none;
  }
  return report;
}

DutchBook dutch_book(const Capacity& c, const Event& a, const Partition& part,
                     Rule rule, double gamma) {
  PhenomenonReport report = detect(c, a, part, rule);
  if (report.classification != Phenomenon::sure_loss) {
    raise(Errc::no_sure_loss,
          std::string("detector classified ") +
              phenomenon_name(report.classification));
  }
  const double window = report.inf_lo - report.prior.hi;
  if (!(gamma > 0.0) || !(gamma < window / 2.0)) {
    raise(Errc::no_sure_loss,
          "gamma outside the (0, " + std::to_string(window / 2.0) +
              ") construction window");
  }

  DutchBook book;
  book.t = report.prior.hi + gamma;
  book.s = report.inf_lo - gamma;
  book.unconditional = {1.0 - book.t, complement(a)};
  for (const Event& block : part.blocks) {
    book.conditional_bets.push_back({block, book.s, a});
  }
  book.guaranteed_net = book.t - book.s;

  // Every outcome settles the unconditional bet plus exactly one called-off
  // bet; enumerate all of them and confirm the net never moves.
  for (int w = 0; w < c.size(); ++w) {
    double net = -book.unconditional.cost;
    if (book.unconditional.pays_on.contains(w)) net += 1.0;
    for (const auto& bet : book.conditional_bets) {
      if (!bet.given.contains(w)) continue;
      net -= bet.cost;
      if (bet.pays_on.contains(w)) net += 1.0;
    }
    if (std::fabs(net - book.guaranteed_net) > kTol) {
      raise(Errc::internal_check_failed,
            "compound bet net varies across outcomes");
    }
  }
  if (book.guaranteed_net >= 0.0) {
    raise(Errc::internal_check_failed, "compound bet net is not negative");
  }
  return book;
}

}  // namespace ipe
