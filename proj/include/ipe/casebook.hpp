#pragma once

#include <optional>

#include "ipe/phenomena.hpp"
#include "ipe/simpson.hpp"

namespace ipe {

// Closed-form encodings of the classic puzzles, each carrying the events and
// partitions needed to drive the generic engine over the same model.

/// Three prisoners. Without delta_b the model is the three-focal-set belief
/// function (the guard's tie-breaking is unspecified); with delta_b the tie
/// is resolved and the model is precise.
struct PrisonersModel {
  Frame frame;
  MassFunction mass;
  Capacity capacity;
  std::optional<double> delta_b;
  Event a_lives;
  Event c_lives;
  Event says_b;
  Event says_c;
  Partition guard_report;
};
PrisonersModel prisoners_model(std::optional<double> delta_b = std::nullopt);

/// Posterior survival probability delta_b / (1 + delta_b) of the inquiring
/// prisoner once the guard names the first victim.
double prisoners_posterior(double delta_b);

/// The locus (1 - 2x) / (2 - 3x) traced by the pair of posteriors as the
/// guard's reporting bias sweeps [0, 1]; defined for x in [0, 1/2].
double prisoners_curve(double x);

/// Boxer, wrestler, and the fair coin: precise coin margin, vacuous fight
/// margin.
struct BoxerModel {
  Frame frame;
  MassFunction mass;
  Capacity capacity;
  Event coin_heads;   // X = 1
  Event boxer_wins;   // Y = 1
  Event match_coin;   // X = Y
  Partition witness_report;  // {X = Y, X != Y}
};
BoxerModel boxer_model();

/// Randomized treatment assignment with an unspecified joint: both margins
/// are pinned to one half, the joint is free. The lower envelope is not
/// 2-monotone, so only the LP path applies.
struct TreatmentModel {
  Frame frame;
  Capacity capacity;
  Event improves;    // A: first patient improves more
  Event assigned;    // B: second patient gets treatment I
  Partition assignment;  // {B, ~B}
};
TreatmentModel treatment_model();

/// Two-question pre-election poll with coarsened responses. epsilon in
/// [-0.025, 0.1] tunes the coarseness: eight focal masses of 0.1 - epsilon
/// plus full ignorance at 0.2 + 8 epsilon.
struct ElectionModel {
  double epsilon;
  Frame frame;
  MassFunction mass;
  Capacity capacity;
  Event clinton;
  Event trump;
  Event democrat;
  Event republican;
  Partition partisanship;  // {Dem, Rep}
};
ElectionModel election_model(double epsilon);

/// Closed-form posterior interval for the Clinton vote share given either
/// partisanship answer.
ProbabilityInterval election_intervals(double epsilon, Rule rule);

/// The epsilon at which Dempster's dilation flips to contraction (and the
/// Geometric rule flips the opposite way): the root of
/// 9 eps^2 - 0.8 eps - 0.01 inside the tuning interval, -1/90.
double election_crossover();

/// The K = 2 stratified comparison whose aggregate ordering flips.
SimpsonInstance kidney_stone_instance();

}  // namespace ipe
