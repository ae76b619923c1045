#include "ipe/casebook.hpp"

#include <cmath>

#include "ipe/transforms.hpp"

namespace ipe {

PrisonersModel prisoners_model(std::optional<double> delta_b) {
  Frame frame({"A-saysB", "A-saysC", "B-saysC", "C-saysB"});
  const Event a_says_b = frame.event({"A-saysB"});
  const Event a_says_c = frame.event({"A-saysC"});
  const Event b_says_c = frame.event({"B-saysC"});
  const Event c_says_b = frame.event({"C-saysB"});

  MassFunction mass{frame, {}};
  const double third = 1.0 / 3.0;
  if (delta_b) {
    if (*delta_b < 0.0 || *delta_b > 1.0) {
      raise(Errc::out_of_range, "delta_b must lie in [0, 1]");
    }
    mass = make_mass(frame, {{a_says_b, *delta_b * third},
                             {a_says_c, (1.0 - *delta_b) * third},
                             {b_says_c, third},
                             {c_says_b, third}});
  } else {
    mass = make_mass(frame, {{a_says_b | a_says_c, third},
                             {b_says_c, third},
                             {c_says_b, third}});
  }

  PrisonersModel model{frame,
                       mass,
                       belief_from_mass(mass),
                       delta_b,
                       a_says_b | a_says_c,
                       c_says_b,
                       a_says_b | c_says_b,
                       a_says_c | b_says_c,
                       Partition({a_says_b | c_says_b, a_says_c | b_says_c})};
  return model;
}

double prisoners_posterior(double delta_b) {
  if (delta_b < 0.0 || delta_b > 1.0) {
    raise(Errc::out_of_range, "delta_b must lie in [0, 1]");
  }
  return delta_b / (1.0 + delta_b);
}

double prisoners_curve(double x) {
  if (x < 0.0 || x > 0.5) {
    raise(Errc::out_of_range, "curve is defined on [0, 1/2]");
  }
  return (1.0 - 2.0 * x) / (2.0 - 3.0 * x);
}

BoxerModel boxer_model() {
  Frame frame({"x1y1", "x1y0", "x0y1", "x0y0"});
  const Event x1y1 = frame.event({"x1y1"});
  const Event x1y0 = frame.event({"x1y0"});
  const Event x0y1 = frame.event({"x0y1"});
  const Event x0y0 = frame.event({"x0y0"});

  const Event heads = x1y1 | x1y0;
  MassFunction mass =
      make_mass(frame, {{heads, 0.5}, {x0y1 | x0y0, 0.5}});

  const Event match_coin = x1y1 | x0y0;
  BoxerModel model{frame,
                   mass,
                   belief_from_mass(mass),
                   heads,
                   x1y1 | x0y1,
                   match_coin,
                   Partition::binary(match_coin)};
  return model;
}

TreatmentModel treatment_model() {
  Frame frame({"A-B", "A-Bc", "Ac-B", "Ac-Bc"});
  // The compatible probabilities form the segment between (0,.5,.5,0) and
  // (.5,0,0,.5); every event probability is linear along it, so the lower
  // envelope is the minimum over the two endpoints.
  const Eigen::Vector4d end0(0.0, 0.5, 0.5, 0.0);
  const Eigen::Vector4d end1(0.5, 0.0, 0.0, 0.5);
  Eigen::VectorXd lower = Eigen::VectorXd::Zero(16);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    double p0 = 0.0, p1 = 0.0;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) {
        p0 += end0[i];
        p1 += end1[i];
      }
    }
    lower[mask] = std::min(p0, p1);
  }
  Capacity capacity =
      Capacity::from_lower(frame, std::move(lower), CapacityKind::general);

  const Event improves = frame.event({"A-B", "A-Bc"});
  const Event assigned = frame.event({"A-B", "Ac-B"});
  TreatmentModel model{frame, capacity, improves, assigned,
                       Partition::binary(assigned)};
  return model;
}

namespace {

void check_epsilon(double epsilon) {
  if (epsilon < -0.025 - kTol || epsilon > 0.1 + kTol) {
    raise(Errc::out_of_range, "epsilon must lie in [-0.025, 0.1]");
  }
}

}  // namespace

ElectionModel election_model(double epsilon) {
  check_epsilon(epsilon);
  Frame frame({"C-Dem", "T-Dem", "C-Rep", "T-Rep"});
  const Event cd = frame.event({"C-Dem"});
  const Event td = frame.event({"T-Dem"});
  const Event cr = frame.event({"C-Rep"});
  const Event tr = frame.event({"T-Rep"});

  const double focal = 0.1 - epsilon;
  const double ignorance = 0.2 + 8.0 * epsilon;
  MassFunction mass = make_mass(frame, {
                                            {cd, focal},
                                            {td, focal},
                                            {cr, focal},
                                            {tr, focal},
                                            {cd | cr, focal},  // C, no Q2
                                            {td | tr, focal},  // T, no Q2
                                            {cd | td, focal},  // Dem, no Q1
                                            {cr | tr, focal},  // Rep, no Q1
                                            {frame.full_event(), ignorance},
                                        });

  ElectionModel model{epsilon,
                      frame,
                      mass,
                      belief_from_mass(mass),
                      cd | cr,
                      td | tr,
                      cd | td,
                      cr | tr,
                      Partition({cd | td, cr | tr})};
  return model;
}

ProbabilityInterval election_intervals(double epsilon, Rule rule) {
  check_epsilon(epsilon);
  ProbabilityInterval closed;
  switch (rule) {
    case Rule::generalized_bayes:
      closed =
          ProbabilityInterval((0.1 - epsilon) / (0.6 + 4.0 * epsilon),
                              (0.5 + 5.0 * epsilon) / (0.6 + 4.0 * epsilon));
      break;
    case Rule::dempster:
      closed = ProbabilityInterval(
          (0.2 - 2.0 * epsilon) / (0.7 + 3.0 * epsilon),
          (0.5 + 5.0 * epsilon) / (0.7 + 3.0 * epsilon));
      break;
    case Rule::geometric:
      // lower(partisanship answer) = 3 (0.1 - eps) vanishes at the right
      // endpoint, where the rule stops being applicable.
      if (3.0 * (0.1 - epsilon) <= kTol) {
        raise(Errc::geometric_undefined,
              "partisanship answer has lower probability zero");
      }
      closed = ProbabilityInterval(1.0 / 3.0, 2.0 / 3.0);
      break;
  }

  // The closed forms stay tied to the generic engine on the mass model.
  const ElectionModel model = election_model(epsilon);
  const ConditionalResult engine =
      condition(model.capacity, model.clinton, model.democrat, rule);
  if (std::fabs(engine.interval.lo - closed.lo) > kTol ||
      std::fabs(engine.interval.hi - closed.hi) > kTol) {
    raise(Errc::internal_check_failed,
          "closed-form election interval drifted from the engine");
  }
  return closed;
}

double election_crossover() {
  // 9 eps^2 - 0.8 eps - 0.01 = 0 has roots 0.1 and -1/90; the interior root
  // is where Dempster's lower/upper cross the prior's.
  const double disc = std::sqrt(0.8 * 0.8 + 4.0 * 9.0 * 0.01);
  return (0.8 - disc) / 18.0;
}

SimpsonInstance kidney_stone_instance() {
  Eigen::VectorXd p(2), q(2), u(2), v(2);
  p << 0.93, 0.73;
  q << 0.87, 0.69;
  u << 0.249, 0.751;
  v << 0.771, 0.229;
  return SimpsonInstance{p, q, SimplexVector(u), {SimplexVector(v)}};
}

}  // namespace ipe
