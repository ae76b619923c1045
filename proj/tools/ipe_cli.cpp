#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipe/casebook.hpp"
#include "ipe/model_io.hpp"

namespace {

using namespace ipe;

Rule rule_from_token(const std::string& token) {
  if (token == "gb") return Rule::generalized_bayes;
  if (token == "dempster") return Rule::dempster;
  if (token == "geometric") return Rule::geometric;
  raise(Errc::parse_error, "rule must be gb, dempster or geometric");
}

std::vector<Event> parse_partition(const Frame& frame,
                                   const std::string& spec) {
  std::vector<Event> blocks;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t stop = spec.find(';', start);
    const std::string part =
        spec.substr(start, stop == std::string::npos ? stop : stop - start);
    if (!part.empty()) blocks.push_back(parse_event(frame, part));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (blocks.empty()) raise(Errc::parse_error, "empty partition");
  return blocks;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) raise(Errc::parse_error, "cannot open '" + out_path + "'");
  out << payload;
}

std::string csv_bool(bool v) { return v ? "true" : "false"; }

struct SweepOptions {
  int steps = 251;
  double eps_min = -0.025;
  double eps_max = 0.1;
};

std::string run_condition(const std::string& model_path,
                          const std::string& target, const std::string& given,
                          const std::string& rule_token) {
  ParsedModel model = load_model_file(model_path);
  const Event a = parse_event(model.frame, target);
  const Event b = parse_event(model.frame, given);
  ConditionalResult res =
      condition(model.capacity, a, b, rule_from_token(rule_token));
  std::string out = "rule,lo,hi\n";
  out += rule_token + "," + format_real(res.interval.lo) + "," +
         format_real(res.interval.hi) + "\n";
  return out;
}

std::string run_detect(const std::string& model_path, const std::string& target,
                       const std::string& partition_spec,
                       const std::string& rule_token) {
  ParsedModel model = load_model_file(model_path);
  const Event a = parse_event(model.frame, target);
  Partition part(parse_partition(model.frame, partition_spec));
  PhenomenonReport report =
      detect(model.capacity, a, part, rule_from_token(rule_token));

  std::string out = "section,label,lo,hi\n";
  out += "prior," + event_name(model.frame, a) + "," +
         format_real(report.prior.lo) + "," + format_real(report.prior.hi) +
         "\n";
  for (const auto& [block, interval] : report.per_block) {
    out += "block," + event_name(model.frame, block) + "," +
           format_real(interval.lo) + "," + format_real(interval.hi) + "\n";
  }
  out += std::string("result,") + phenomenon_name(report.classification) +
         ",,\n";
  return out;
}

std::string run_sweep(const SweepOptions& opts) {
  if (opts.steps < 2) raise(Errc::parse_error, "--steps must be at least 2");
  std::string out = "epsilon,rule,lo,hi\n";
  const char* tokens[3] = {"gb", "dempster", "geometric"};
  const Rule rules[3] = {Rule::generalized_bayes, Rule::dempster,
                         Rule::geometric};
  for (int i = 0; i < opts.steps; ++i) {
    double eps = (opts.eps_min * (opts.steps - 1 - i) + opts.eps_max * i) /
                 (opts.steps - 1);
    if (std::fabs(eps) < 1e-15) eps = 0.0;
    for (int r = 0; r < 3; ++r) {
      out += format_real(eps);
      out += ",";
      out += tokens[r];
      try {
        const ProbabilityInterval interval = election_intervals(eps, rules[r]);
        out += "," + format_real(interval.lo) + "," + format_real(interval.hi);
      } catch (const Error& err) {
        if (err.code() != Errc::geometric_undefined) throw;
        out += ",undefined,undefined";
      }
      out += "\n";
    }
  }
  return out;
}

std::string run_prisoners_curve(int steps) {
  if (steps < 2) raise(Errc::parse_error, "--steps must be at least 2");
  std::string out = "delta_b,posterior_says_b,posterior_says_c\n";
  for (int i = 0; i < steps; ++i) {
    const double delta = static_cast<double>(i) / (steps - 1);
    const double x = prisoners_posterior(delta);
    const double y = (1.0 - delta) / (2.0 - delta);
    if (std::fabs(prisoners_curve(x) - y) > kTol) {
      raise(Errc::internal_check_failed, "posterior pair left the curve");
    }
    out += format_real(delta) + "," + format_real(x) + "," + format_real(y) +
           "\n";
  }
  return out;
}

std::string run_simpson(const std::string& file_path) {
  SimpsonInstance inst = load_simpson_file(file_path);
  SimpsonReport report = detect_reversal(inst);
  std::string out = "key,value\n";
  out += "dominance," + csv_bool(report.dominance_ok) + "\n";
  out += "p_marginal," + format_real(report.p_marginal) + "\n";
  out += "q_marginal," + format_real(report.q_marginal) + "\n";
  out += "q_marginal_inf," + format_real(report.q_marginal_inf) + "\n";
  out += "p_marginal_sup," + format_real(report.p_marginal_sup) + "\n";
  out += "reversal," + csv_bool(report.reversal) + "\n";
  out += "sure_loss," + csv_bool(report.sure_loss) + "\n";
  out += std::string("direction,") + loss_direction_name(report.direction) +
         "\n";
  out += "partial," + csv_bool(report.partial) + "\n";
  return out;
}

void casebook_interval(std::string& out, const std::string& case_name,
                       const std::string& quantity,
                       const ProbabilityInterval& interval) {
  out += case_name + "," + quantity + "_lo," + format_real(interval.lo) + "\n";
  out += case_name + "," + quantity + "_hi," + format_real(interval.hi) + "\n";
}

std::string run_casebook() {
  std::string out = "case,quantity,value\n";

  {
    PrisonersModel pm = prisoners_model();
    casebook_interval(out, "prisoners", "prior",
                      pm.capacity.interval(pm.a_lives));
    for (Rule rule : {Rule::generalized_bayes, Rule::dempster, Rule::geometric}) {
      ConditionalResult res =
          condition(pm.capacity, pm.a_lives, pm.says_b, rule);
      casebook_interval(out, "prisoners",
                        std::string(rule_name(rule)) + "_given_says_b",
                        res.interval);
      PhenomenonReport report = detect(pm.capacity, pm.a_lives,
                                       pm.guard_report, rule);
      out += std::string("prisoners,") + rule_name(rule) + "_class," +
             phenomenon_name(report.classification) + "\n";
    }
    DutchBook book =
        dutch_book(pm.capacity, pm.a_lives, pm.guard_report, Rule::dempster,
                   0.05);
    out += "prisoners,dempster_dutch_book_net," +
           format_real(book.guaranteed_net) + "\n";
  }

  {
    BoxerModel bm = boxer_model();
    casebook_interval(
        out, "boxer", "dempster_boxer_wins_given_match",
        dempster(bm.capacity, bm.boxer_wins, bm.match_coin).interval);
    casebook_interval(
        out, "boxer", "gb_heads_given_match",
        gen_bayes(bm.capacity, bm.coin_heads, bm.match_coin).interval);
    try {
      geometric(bm.capacity, bm.boxer_wins, bm.match_coin);
      out += "boxer,geometric_given_match,defined\n";
    } catch (const Error& err) {
      out += std::string("boxer,geometric_given_match,") +
             errc_name(err.code()) + "\n";
    }
  }

  {
    TreatmentModel tm = treatment_model();
    PhenomenonReport report =
        detect(tm.capacity, tm.improves, tm.assignment,
               Rule::generalized_bayes);
    casebook_interval(out, "treatment", "prior",
                      tm.capacity.interval(tm.improves));
    for (const auto& [block, interval] : report.per_block) {
      casebook_interval(out, "treatment",
                        "gb_given_" + event_name(tm.frame, block), interval);
    }
    out += std::string("treatment,gb_class,") +
           phenomenon_name(report.classification) + "\n";
  }

  {
    for (Rule rule : {Rule::generalized_bayes, Rule::dempster, Rule::geometric}) {
      casebook_interval(out, "election_eps0",
                        std::string(rule_name(rule)) + "_given_partisanship",
                        election_intervals(0.0, rule));
    }
    out += "election_eps0,crossover," + format_real(election_crossover()) +
           "\n";
  }

  {
    SimpsonReport report = detect_reversal(kidney_stone_instance());
    out += "kidney_stone,reversal," + csv_bool(report.reversal) + "\n";
    out += "kidney_stone,sure_loss," + csv_bool(report.sure_loss) + "\n";
  }

  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-frame imprecise probability engine"};
  app.require_subcommand(1);

  std::string model_path, file_path, target, given, partition_spec, rule_token;
  std::string out_path;
  SweepOptions sweep;
  int curve_steps = 101;

  CLI::App* cmd_condition =
      app.add_subcommand("condition", "conditional interval under a rule");
  cmd_condition->add_option("--model", model_path)->required();
  cmd_condition->add_option("--target", target)->required();
  cmd_condition->add_option("--given", given)->required();
  cmd_condition->add_option("--rule", rule_token)->required();
  cmd_condition->add_option("--out", out_path);

  CLI::App* cmd_detect = app.add_subcommand(
      "detect", "classify dilation/contraction/sure loss over a partition");
  cmd_detect->add_option("--model", model_path)->required();
  cmd_detect->add_option("--target", target)->required();
  cmd_detect->add_option("--partition", partition_spec)->required();
  cmd_detect->add_option("--rule", rule_token)->required();
  cmd_detect->add_option("--out", out_path);

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep-election", "posterior intervals over the "
                                           "election tuning grid");
  cmd_sweep->add_option("--steps", sweep.steps);
  cmd_sweep->add_option("--eps-min", sweep.eps_min);
  cmd_sweep->add_option("--eps-max", sweep.eps_max);
  cmd_sweep->add_option("--out", out_path);

  CLI::App* cmd_curve = app.add_subcommand(
      "prisoners-curve", "posterior pair as the guard's bias sweeps [0,1]");
  cmd_curve->add_option("--steps", curve_steps);
  cmd_curve->add_option("--out", out_path);

  CLI::App* cmd_simpson =
      app.add_subcommand("simpson", "audit an aggregation instance");
  cmd_simpson->add_option("--file", file_path)->required();
  cmd_simpson->add_option("--out", out_path);

  CLI::App* cmd_casebook =
      app.add_subcommand("casebook", "reproduce the worked examples");
  cmd_casebook->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string payload;
    if (cmd_condition->parsed()) {
      payload = run_condition(model_path, target, given, rule_token);
    } else if (cmd_detect->parsed()) {
      payload = run_detect(model_path, target, partition_spec, rule_token);
    } else if (cmd_sweep->parsed()) {
      payload = run_sweep(sweep);
    } else if (cmd_curve->parsed()) {
      payload = run_prisoners_curve(curve_steps);
    } else if (cmd_simpson->parsed()) {
      payload = run_simpson(file_path);
    } else if (cmd_casebook->parsed()) {
      payload = run_casebook();
    }
    emit(out_path, payload);
  } catch (const Error& err) {
    std::cerr << err.what() << "\n";
    return err.code() == Errc::parse_error ? 2 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
