// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "cmrank/checks.h"
#include "cmrank/edge_list_io.h"
#include "cmrank/errors.h"
#include "cmrank/family_spec.h"
#include "cmrank/graph.h"
#include "cmrank/graphing.h"
#include "cmrank/json_io.h"
#include "cmrank/minorize.h"
#include "cmrank/partition.h"
#include "cmrank/rank_estimator.h"

namespace cmrank::cli {
namespace {

using json = nlohmann::ordered_json;
using json_io::round12;
using json_io::to_json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

struct EstimatorArgs {
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::string mode = "cap";
  int threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--epsilon", epsilon, "Error bound in (0,1)")->capture_default_str();
    cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    cmd->add_option("--mode", mode, "radius | cap")->check(CLI::IsMember({"radius", "cap"}))
        ->capture_default_str();
    cmd->add_option("--threads", threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber)->capture_default_str();
  }
  EstimatorPlan make_plan() const { return plan(epsilon, parse_mode(mode)); }
  EstimateOptions options() const { return {.threads = threads}; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle-matroid rank of graphs and graphings: exact verifiers and local estimators",
               "cmrank"};
  app.require_subcommand(1);

  // rank
  std::string rank_input;
  std::string rank_subset;
  auto* rank_cmd = app.add_subcommand("rank", "Exact rank, normalized rank and component count");
  rank_cmd->add_option("--input", rank_input, "Edge-list file")->required();
  rank_cmd->add_option("--subset", rank_subset, "Edge-index file (default: all edges)");

  // estimate
  std::string est_family;
  EstimatorArgs est_args;
  bool est_timing = false;
  auto* est_cmd = app.add_subcommand("estimate", "Sampling estimate of the total rank");
  est_cmd->add_option("--family", est_family, "Oracle family spec, e.g. tree:3")->required();
  est_args.attach(est_cmd);
  est_cmd->add_flag("--timing", est_timing, "Include wall time (breaks byte-reproducibility)");

  // converge
  std::string conv_family;
  std::vector<std::size_t> conv_sizes;
  EstimatorArgs conv_args;
  auto* conv_cmd = app.add_subcommand("converge", "Exact and estimated total rank along a family");
  conv_cmd->add_option("--family", conv_family, "cycle | path | torus | triangles")->required();
  conv_cmd->add_option("--sizes", conv_sizes, "Comma-separated sizes")->required()->delimiter(',');
  conv_args.attach(conv_cmd);

  // check
  std::string check_kind;
  std::size_t check_trials = 1000;
  std::uint64_t check_seed = 0;
  std::optional<std::size_t> check_nodes;
  std::string check_input;
  auto* check_cmd = app.add_subcommand("check", "Randomized verification of the inequalities");
  check_cmd->add_option("kind", check_kind, "submodular | supermod | sandwich | rerand")
      ->required()->check(CLI::IsMember({"submodular", "supermod", "sandwich", "rerand"}));
  check_cmd->add_option("--trials", check_trials)->capture_default_str();
  check_cmd->add_option("--seed", check_seed)->capture_default_str();
  check_cmd->add_option("--nodes", check_nodes, "Graph size / maximum space size");
  check_cmd->add_option("--input", check_input, "submodular only: check this edge list instead");

  // minorize
  std::string min_input;
  std::string min_order = "given";
  std::uint64_t min_seed = 0;
  bool min_forest = false;
  std::string min_measure;
  auto* min_cmd = app.add_subcommand("minorize", "Minorizing measure and its verification");
  min_cmd->add_option("--input", min_input, "Edge-list file")->required();
  min_cmd->add_option("--order", min_order, "random | given")
      ->check(CLI::IsMember({"random", "given"}))->capture_default_str();
  min_cmd->add_option("--seed", min_seed)->capture_default_str();
  auto* forest_flag = min_cmd->add_flag("--forest", min_forest, "Use the BFS spanning-forest measure");
  min_cmd->add_option("--measure", min_measure, "Verify this measure (JSON array) instead")
      ->excludes(forest_flag);

  // experiment
  std::string exp_kind;
  int exp_degree = 5;
  int exp_r = 3;
  EstimatorArgs exp_args;
  auto* exp_cmd = app.add_subcommand("experiment", "Estimator experiments");
  exp_cmd->add_option("kind", exp_kind, "nonadd")->required()->check(CLI::IsMember({"nonadd"}));
  exp_cmd->add_option("--degree", exp_degree)->capture_default_str();
  exp_cmd->add_option("--r", exp_r)->capture_default_str();
  exp_args.attach(exp_cmd);

  // partition
  std::string part_input;
  auto* part_cmd = app.add_subcommand("partition", "psi and re-randomization of a partition");
  part_cmd->add_option("--input", part_input, "Partition JSON")->required();

  // graphing
  std::string gr_input;
  std::string gr_subset;
  auto* gr_cmd = app.add_subcommand("graphing", "Edge measure, rho and the sandwich bound");
  gr_cmd->add_option("--input", gr_input, "Weighted graphing JSON")->required();
  gr_cmd->add_option("--subset", gr_subset, "Edge-index file (default: all edges)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (rank_cmd->parsed()) {
      const FiniteGraph g = read_edge_list(rank_input);
      const EdgeSet x = rank_subset.empty() ? EdgeSet::all(g) : read_edge_set(rank_subset, g);
      emit(out, {{"rho", to_json(normalized_rank(g, x))},
                 {"rank", rank(g, x)},
                 {"components", component_count(g, x)}});
      return kOk;
    }

    if (est_cmd->parsed()) {
      const OraclePtr oracle = parse_family(est_family);
      const Estimate est = estimate_total_rank(*oracle, est_args.make_plan(), est_args.seed,
                                               est_args.options());
      json j = to_json(est, est_family, oracle->known_total_rank());
      if (est_timing) j["wall_seconds"] = est.wall_seconds;
      emit(out, j);
      return kOk;
    }

    if (conv_cmd->parsed()) {
      write_convergence_csv(out, convergence_table(conv_family, conv_sizes, conv_args.make_plan(),
                                                   conv_args.seed, conv_args.options()));
      return kOk;
    }

    if (check_cmd->parsed()) {
      checks::TrialSummary summary;
      if (check_kind == "submodular" && !check_input.empty()) {
        const FiniteGraph g = read_edge_list(check_input);
        const SubmodularReport report = check_submodular(g, {.seed = check_seed});
        summary.name = "submodular";
        summary.trials = 1;
        summary.items_checked = report.pairs_checked;
        for (const auto& v : report.violations) {
          summary.fail(v.kind == SubmodularViolation::Kind::kSubmodularity ? "submodularity" : "monotonicity");
        }
      } else if (check_kind == "submodular") {
        summary = checks::run_submodular_trials(check_trials, check_seed, check_nodes.value_or(5));
      } else if (check_kind == "supermod") {
        summary = checks::run_supermodular_trials(check_trials, check_seed, check_nodes.value_or(12));
      } else if (check_kind == "sandwich") {
        summary = checks::run_sandwich_trials(check_trials, check_seed, check_nodes.value_or(10));
      } else {
        summary = checks::run_rerand_trials(check_trials, check_seed, check_nodes.value_or(12));
      }
      emit(out, {{"check", summary.name},
                 {"trials", summary.trials},
                 {"checked", summary.items_checked},
                 {"violations", summary.failure_count},
                 {"examples", summary.failures}});
      return summary.ok() ? kOk : kViolation;
    }

    if (min_cmd->parsed()) {
      const FiniteGraph g = read_edge_list(min_input);
      std::optional<MinorizingMeasure> alpha;
      std::string method;
      json order_json = nullptr;
      if (!min_measure.empty()) {
        alpha = json_io::measure_from_json(read_json_file(min_measure), g);
        method = "file";
      } else if (min_forest) {
        alpha = forest_minorizer(g, spanning_forest(g));
        method = "forest";
      } else {
        RandomStream rng(min_seed);
        const ChainOrder order = min_order == "random" ? ChainOrder::random(g, rng) : ChainOrder::identity(g);
        alpha = greedy_minorizer(g, order);
        method = "greedy";
        order_json = order.order();
      }
      const MinorizingReport report = verify_minorizing(g, *alpha, {.seed = min_seed});
      json j = {{"method", method}};
      if (!order_json.is_null()) j["order"] = order_json;
      j["measure"] = to_json(*alpha);
      j["alpha_E"] = to_json(alpha->measure(EdgeSet::all(g)));
      j["rho_E"] = to_json(normalized_rank(g, EdgeSet::all(g)));
      j["base"] = report.base;
      j["exhaustive"] = report.exhaustive;
      j["subsets_checked"] = report.subsets_checked;
      j["violations"] = report.violations.size();
      if (g.edge_count() <= 6) j["extremal"] = is_extremal_minorizer(g, *alpha);
      emit(out, j);
      const bool base_required = method != "file";
      return report.ok() && (report.base || !base_required) ? kOk : kViolation;
    }

    if (exp_cmd->parsed()) {
      const NonadditivityReport report = nonadditivity_experiment(
          exp_degree, exp_r, exp_args.make_plan(), exp_args.seed, exp_args.options());
      emit(out, {{"degree", report.degree},
                 {"r", report.r},
                 {"epsilon", round12(exp_args.epsilon)},
                 {"k", report.rho_u.plan.k},
                 {"N", report.rho_u.plan.samples},
                 {"mode", std::string(to_string(report.rho_u.plan.mode))},
                 {"seed", exp_args.seed},
                 {"rho_U_est", round12(report.rho_u.value)},
                 {"rho_W_est", round12(report.rho_w.value)},
                 {"sum", round12(report.sum)},
                 {"paper_bound", round12(report.bound.to_double())},
                 {"bound_rational", to_json(report.bound)},
                 {"rho_full_est", round12(report.rho_full.value)},
                 {"bound_holds", report.bound_holds()}});
      return report.bound_holds() ? kOk : kViolation;
    }

    if (part_cmd->parsed()) {
      const Partition p = json_io::partition_from_json(read_json_file(part_input));
      json law = json::array();
      for (const auto& v : rerandomized_distribution(p).probability) law.push_back(to_json(v));
      emit(out, {{"points", p.point_count()},
                 {"classes", p.class_count()},
                 {"psi", to_json(psi(p))},
                 {"rerandomizing", has_rerandomizing_property(p)},
                 {"rerandomized", law}});
      return kOk;
    }

    if (gr_cmd->parsed()) {
      const WeightedGraphing wg = json_io::graphing_from_json(read_json_file(gr_input), false);
      const auto violations = check_measure_preservation(wg.graph(), *wg.weights());
      json j = {{"measure_preserving", violations.empty()}};
      json bad = json::array();
      for (const auto& [a, b] : violations) bad.push_back({a, b});
      j["violations"] = bad;
      if (!violations.empty()) {
        emit(out, j);
        return kViolation;
      }
      const EdgeSet x = gr_subset.empty() ? EdgeSet::all(wg.graph()) : read_edge_set(gr_subset, wg.graph());
      j["average_degree"] = to_json(average_degree(wg));
      j["rho"] = to_json(rho(wg, x));
      if (!average_degree(wg).is_zero()) {
        const SandwichReport s = check_rho_eta_sandwich(wg, x);
        j["eta"] = to_json(edge_measure(wg, x));
        j["sandwich"] = {{"lower", to_json(s.lower)}, {"upper", to_json(s.upper)}, {"holds", s.holds()}};
        emit(out, j);
        return s.holds() ? kOk : kViolation;
      }
      emit(out, j);
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cmrank::cli
