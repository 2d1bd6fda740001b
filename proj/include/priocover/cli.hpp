// Copyright 2026 The priocover Authors.
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

// Command-line surface. RunCommand parses one command line, reads documents
// from files or the input stream, and writes result documents. Exit codes:
//   0 success, 1 infeasible, 2 validation or parse error, 3 budget exceeded,
//   64 usage error, 70 internal consistency check failed.

#ifndef PRIOCOVER_CLI_HPP_
#define PRIOCOVER_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "priocover/ccip_rounding.hpp"
#include "priocover/errors.hpp"
#include "priocover/generators.hpp"
#include "priocover/io.hpp"
#include "priocover/model.hpp"
#include "priocover/oracles.hpp"
#include "priocover/plc.hpp"
#include "priocover/ptc.hpp"
#include "priocover/reductions.hpp"
#include "priocover/relaxation.hpp"

namespace priocover {

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,
  kExitInvalid = 2,
  kExitBudget = 3,
  kExitUsage = 64,
  kExitInternal = 70,
};

// ---------------------------------------------------------------------------
// Audit encoders.

inline Json IntMatrixToJson(const std::vector<std::vector<int64_t>>& m) { return m; }

inline Json DualToJson(const PrimalDualResult& pd) {
  Json j = Json::object();
  j["y"] = RationalsToJson(pd.dual.y);
  j["dual_value"] = RationalToJson(pd.dual_value);
  std::vector<int> tight;
  for (size_t k = 0; k < pd.dual.tight.size(); ++k) {
    if (pd.dual.tight[k]) tight.push_back(static_cast<int>(k));
  }
  j["tight_segments"] = tight;
  j["insertion_order"] = pd.insertion_order;
  return j;
}

inline Json RoundingAuditToJson(const RoundingAudit& a) {
  Json j = Json::object();
  j["alpha"] = RationalToJson(a.alpha);
  j["x_star"] = RationalsToJson(a.x_star);
  j["lower_bound"] = RationalToJson(a.lower_bound);
  j["f"] = a.f;
  j["lp_iterations"] = a.lp_iterations;
  j["xbar"] = RationalsToJson(a.xbar);
  j["residual"] = {{"matrix", IntMatrixToJson(a.residual.matrix)},
                   {"demands", a.residual.demands},
                   {"unbounded_in_f", a.residual.unbounded_in_f}};
  j["normalized"] = {{"rows", a.normalized.rows},
                     {"rounded_demands", a.normalized.rounded_demands},
                     {"rounded_supplies", a.normalized.rounded_supplies},
                     {"scaled_solution", RationalsToJson(a.normalized.scaled_solution)},
                     {"matrix", IntMatrixToJson(a.normalized.matrix)}};
  j["partition"] = {{"large_rows", a.partition.large_rows},
                    {"small_rows", a.partition.small_rows},
                    {"large_columns", a.partition.large_columns},
                    {"small_columns", a.partition.small_columns}};
  Json contribution = Json::array();
  for (const auto& row : a.classes.contribution) contribution.push_back(RationalsToJson(row));
  j["classes"] = {{"max_supply", a.classes.max_supply},
                  {"columns", a.classes.columns},
                  {"class_supply", a.classes.class_supply},
                  {"threshold", a.classes.threshold},
                  {"contribution", contribution}};
  Json small = Json::array();
  for (const auto& c : a.small_classes) {
    small.push_back({{"t", c.t},
                     {"supply", c.supply},
                     {"columns", c.columns},
                     {"demands", c.demands},
                     {"witness", RationalsToJson(c.witness)},
                     {"output", c.output}});
  }
  j["small_classes"] = small;
  j["large_witness"] = RationalsToJson(a.large_witness);
  j["x_small"] = a.x_small;
  j["x_large"] = a.x_large;
  j["x_int"] = a.x_int;
  j["z"] = a.z;
  j["cost_xbar"] = RationalToJson(a.cost_xbar);
  j["cost_small"] = RationalToJson(a.cost_small);
  j["cost_large"] = RationalToJson(a.cost_large);
  j["cost_z"] = RationalToJson(a.cost_z);
  j["small_bound"] = RationalToJson(a.small_bound);
  j["large_bound"] = RationalToJson(a.large_bound);
  j["final_bound"] = RationalToJson(a.final_bound);
  return j;
}

inline Json NoKcAuditToJson(const NoKcResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"t", c.t},
                       {"columns", c.columns},
                       {"class_demand", RationalsToJson(c.class_demand)},
                       {"min_entry", c.min_entry},
                       {"scaled_demand", c.scaled_demand},
                       {"witness", RationalsToJson(c.witness)},
                       {"output", c.output}});
  }
  return {{"classes", classes}};
}

// ---------------------------------------------------------------------------
// Dispatch helpers.

// Calls f with the instance held by d; rejects solution/report/graph kinds.
template <typename F>
auto WithInstance(const Document& d, F&& f) {
  return std::visit(
      [&](const auto& v) -> decltype(f(std::declval<const LineInstance&>())) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SolutionDocument> || std::is_same_v<T, ReportDocument> ||
                      std::is_same_v<T, Graph>) {
          throw ParseError(std::string("expected an instance document, got '") + DocumentKind(d) + "'");
        } else {
          return f(v);
        }
      },
      d);
}

namespace internal {

struct CliContext {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string ReadInput(CliContext& io, const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>());
  }
  return ReadTextFile(path);
}

inline void WriteOutput(CliContext& io, const std::string& path, const Document& d) {
  const std::string text = SerializeDocument(d);
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

inline SolutionDocument IntSolutionDoc(const std::string& algorithm, const IntSolution& x,
                                       const std::vector<int64_t>& costs) {
  SolutionDocument s;
  s.algorithm = algorithm;
  s.x = x;
  s.cost = SolutionCost(costs, x);
  s.details = Json::object();
  return s;
}

inline Document SolveCommand(const std::string& algo, const Document& input, bool audit) {
  if (algo == "plc-exact") {
    const auto line = ExpectKind<LineInstance>(input, "line");
    RequireValid(line);
    ExactPlcResult r = ExactPlc(line);
    if (!r.cost) throw Infeasible("some edge is covered by no segment");
    return IntSolutionDoc(algo, r.x, Costs(line));
  }
  if (algo == "plc-pd") {
    const auto line = ExpectKind<LineInstance>(input, "line");
    PrimalDualResult r = PrimalDualPlc(line);
    SolutionDocument s = IntSolutionDoc(algo, r.x, Costs(line));
    s.details["dual"] = DualToJson(r);
    return s;
  }
  if (algo == "ptc-2apx") {
    const auto tree = ExpectKind<TreeInstance>(input, "tree");
    Ptc2ApxResult r = Ptc2Apx(tree);
    SolutionDocument s = IntSolutionDoc(algo, r.x, Costs(tree));
    s.details["pair_cover_value"] = r.pair_cover_value;
    Json chosen = Json::array();
    for (int p : r.chosen) {
      const PairPlc& pp = r.pairs[p];
      chosen.push_back({{"top", pp.pair.top}, {"bottom", pp.pair.bottom}, {"cost", pp.pair.cost},
                        {"segments", pp.segments}});
    }
    s.details["chosen_pairs"] = chosen;
    if (audit) {
      Json all = Json::array();
      for (const PairPlc& pp : r.pairs) {
        all.push_back({{"top", pp.pair.top}, {"bottom", pp.pair.bottom}, {"cost", pp.pair.cost},
                       {"segments", pp.segments}});
      }
      s.details["all_pairs"] = all;
    }
    return s;
  }
  if (algo == "ptc-unw6") {
    const auto tree = ExpectKind<TreeInstance>(input, "tree");
    LpResult lp = SolveCanonical(tree);
    UnweightedRoundResult r = UnweightedPtcRound(tree, lp.x);
    SolutionDocument s = IntSolutionDoc(algo, r.x, Costs(tree));
    s.details["lp_value"] = RationalToJson(lp.value);
    s.details["fractional_x"] = RationalsToJson(lp.x);
    s.details["decomposed_mass"] = RationalToJson(r.decomposition.total_mass);
    s.details["piece_sizes"] = r.piece_sizes;
    if (audit) {
      Json pieces = Json::array();
      for (const PathPiece& p : r.decomposition.pieces) {
        pieces.push_back({{"edges", p.edges},
                          {"parent_path", p.parent_path},
                          {"segment_ids", p.segment_ids},
                          {"local", p.local},
                          {"x", RationalsToJson(p.x)}});
      }
      s.details["pieces"] = pieces;
    }
    return s;
  }
  if (algo == "ccip") {
    const auto ccip = ExpectKind<ColumnRestrictedCIP>(input, "ccip");
    RoundingResult r = RoundCcip(ccip, TuLineOracle(), PrimalDualLineOracle());
    SolutionDocument s = IntSolutionDoc(algo, r.z, ccip.base.costs);
    s.details["lower_bound"] = RationalToJson(r.audit.lower_bound);
    s.details["bound"] = RationalToJson(r.audit.final_bound);
    s.details["f"] = r.audit.f;
    if (audit) s.details["audit"] = RoundingAuditToJson(r.audit);
    return s;
  }
  if (algo == "ccip-nokc") {
    const auto ccip = ExpectKind<ColumnRestrictedCIP>(input, "ccip");
    LpResult lp = SolveCanonical(ccip);
    NoKcResult r = RoundNoKc(ccip, lp.x, TuLineOracle());
    SolutionDocument s = IntSolutionDoc(algo, r.x_int, ccip.base.costs);
    s.details["fractional_x"] = RationalsToJson(lp.x);
    s.details["fractional_cost"] = RationalToJson(r.cost_x);
    // This pipeline may exceed d by a factor of up to 10; verify honours it.
    s.details["bound_scale"] = 10;
    if (audit) s.details["audit"] = NoKcAuditToJson(r);
    return s;
  }
  if (algo == "tree01") {
    // Segments are treated as plain vertical paths; priorities are ignored.
    const auto tree = ExpectKind<TreeInstance>(input, "tree");
    RequireValid(tree);
    std::vector<VirtualPair> pairs;
    for (const auto& seg : tree.segments) pairs.push_back({seg.top, seg.bottom, seg.cost});
    TreeCoverResult r = ExactTreeCover01(tree, pairs);
    if (!r.cost) throw Infeasible("some edge is covered by no segment");
    IntSolution x(tree.segments.size(), 0);
    for (int p : r.chosen) x[p] = 1;
    LpResult lp = SolveCanonical(PairsAsTree(tree, pairs));
    if (lp.value != Rational(*r.cost)) throw CertificateViolated("tree cover DP value differs from its LP value");
    SolutionDocument s = IntSolutionDoc(algo, x, Costs(tree));
    s.details["lp_value"] = RationalToJson(lp.value);
    return s;
  }
  throw ValidationError("unknown algorithm '" + algo + "'");
}

inline Document LpCommand(const std::string& mode, const Document& input, const std::string& alpha_text) {
  if (mode == "solve") {
    LinearProgram lp = WithInstance(input, [](const auto& inst) {
      RequireValid(inst);
      return CanonicalRelaxation(inst);
    });
    LpResult r = SimplexSolve(lp);
    if (r.status == LpStatus::kInfeasible) throw Infeasible("LP relaxation is infeasible");
    if (r.status == LpStatus::kUnbounded) throw ValidationError("LP relaxation is unbounded");
    SolutionDocument s;
    s.algorithm = "lp";
    s.x = r.x;
    s.cost = r.value;
    s.details = {{"basis", r.basis}, {"duals", RationalsToJson(r.duals)}, {"pivots", r.pivots}};
    return s;
  }
  const auto ccip = ExpectKind<ColumnRestrictedCIP>(input, "ccip");
  Rational alpha;
  try {
    alpha = ParseRational(alpha_text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--alpha: ") + e.what());
  }
  AlphaRelaxedResult r = AlphaRelaxed(ccip, alpha);
  SolutionDocument s;
  s.algorithm = "alpha-relaxed";
  s.x = r.x;
  s.cost = r.lower_bound;
  s.details = {{"alpha", RationalToJson(alpha)},
               {"f", r.f},
               {"iterations", r.iterations},
               {"kc_rows", r.kc_rows}};
  return s;
}

inline ReportDocument VerifyCommand(const Document& input, const SolutionDocument& sol) {
  return WithInstance(input, [&](const auto& inst) {
    RequireValid(inst);
    const CoverSystem cs = ToCoverSystem(inst);
    ReportDocument rep;
    CoverReport cr = std::visit([&](const auto& x) { return CheckCover(cs, x); }, sol.x);
    rep.feasible = cr.feasible;
    for (int i : cr.uncovered) rep.uncovered.push_back(cs.row_labels[i]);
    // A solution may declare that its algorithm only guarantees x <= scale*d.
    int64_t scale = 1;
    if (sol.details.is_object() && sol.details.contains("bound_scale")) {
      scale = JsonReader(sol.details["bound_scale"], "details.bound_scale").Int();
      if (scale < 1) throw ValidationError("details.bound_scale must be >= 1");
    }
    std::vector<UpperBound> caps = cs.caps;
    for (auto& d : caps) {
      if (IsFinite(d)) d = FiniteValue(d) * scale;
    }
    rep.within_bounds = std::visit([&](const auto& x) { return WithinBounds(caps, x); }, sol.x);
    rep.cost = std::visit([&](const auto& x) { return SolutionCost(cs.costs, x); }, sol.x);
    Json slack = Json::array();
    for (const auto& v : cr.slack) slack.push_back(RationalToJson(v));
    rep.details = {{"slack", slack}, {"bound_scale", scale}};
    return rep;
  });
}

inline Document GenerateCommand(const std::string& what, int k, const std::string& graph_path, CliContext& io) {
  if (what == "gap-line") return GenGapLine(k);
  if (what == "broom") return GenBroom(ExpectKind<Graph>(ParseDocument(ReadInput(io, graph_path)), "graph")).tree;
  Rng rng(SeedFromEnvironment());
  if (what == "random-line") return RandomLine(rng);
  if (what == "random-tree") return RandomTree(rng);
  if (what == "random-ccip") return RandomLineCcip(rng);
  throw ValidationError("unknown generator '" + what + "'");
}

}  // namespace internal

// Runs one command. `args` excludes the program name.
inline int RunCommand(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  internal::CliContext io{in, out, err};
  CLI::App app{"Priority and column-restricted covering solvers", "priocover"};
  app.require_subcommand(1);
  std::string in_path, out_path, solution_path, graph_path, algo, what, mode, alpha = "1/24";
  int k = 5;
  int64_t budget = kDefaultBruteForceBudget;
  bool audit = false;

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("algorithm", algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"plc-exact", "plc-pd", "ptc-2apx", "ptc-unw6", "ccip", "ccip-nokc", "tree01"}));
  solve->add_option("--in", in_path, "Input document (default: stdin)");
  solve->add_option("--out", out_path, "Output document (default: stdout)");
  solve->add_flag("--audit", audit, "Include the full audit trail");

  auto* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("family", what, "Family")
      ->required()
      ->check(CLI::IsMember({"gap-line", "broom", "random-line", "random-tree", "random-ccip"}));
  generate->add_option("--k", k, "Gap-line size (odd, >= 3)");
  generate->add_option("--graph", graph_path, "Graph document for broom");
  generate->add_option("--out", out_path, "Output document (default: stdout)");

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->add_option("reduction", what, "Reduction")->required()->check(CLI::IsMember({"ptc-to-2plc", "2plc-to-rect"}));
  reduce->add_option("--in", in_path, "Input document (default: stdin)");
  reduce->add_option("--out", out_path, "Output document (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Run a reference oracle");
  oracle->add_option("oracle", what, "Oracle")->required()->check(CLI::IsMember({"brute"}));
  oracle->add_option("--in", in_path, "Input document (default: stdin)");
  oracle->add_option("--out", out_path, "Output document (default: stdout)");
  oracle->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("--in", in_path, "Instance document")->required();
  verify->add_option("--solution", solution_path, "Solution document")->required();
  verify->add_option("--out", out_path, "Report document (default: stdout)");

  auto* lp = app.add_subcommand("lp", "Solve an LP relaxation");
  lp->add_option("mode", mode, "Mode")->required()->check(CLI::IsMember({"solve", "alpha-relaxed"}));
  lp->add_option("--in", in_path, "Input document (default: stdin)");
  lp->add_option("--out", out_path, "Output document (default: stdout)");
  lp->add_option("--alpha", alpha, "Alpha as P/Q");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "priocover: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      internal::WriteOutput(io, out_path, internal::SolveCommand(algo, ParseDocument(internal::ReadInput(io, in_path)), audit));
    } else if (generate->parsed()) {
      internal::WriteOutput(io, out_path, internal::GenerateCommand(what, k, graph_path, io));
    } else if (reduce->parsed()) {
      const Document d = ParseDocument(internal::ReadInput(io, in_path));
      if (what == "ptc-to-2plc") {
        internal::WriteOutput(io, out_path, PtcTo2Plc(ExpectKind<TreeInstance>(d, "tree")));
      } else {
        internal::WriteOutput(io, out_path, TwoPlcToRect(ExpectKind<TwoPriorityLineInstance>(d, "two_plc")));
      }
    } else if (oracle->parsed()) {
      const Document d = ParseDocument(internal::ReadInput(io, in_path));
      SolutionDocument s = WithInstance(d, [&](const auto& inst) {
        RequireValid(inst);
        const CoverSystem cs = ToCoverSystem(inst);
        BruteForceResult r = BruteForceOpt(cs, budget);
        SolutionDocument doc = internal::IntSolutionDoc("brute", r.x, cs.costs);
        doc.details["nodes"] = r.nodes;
        return doc;
      });
      internal::WriteOutput(io, out_path, s);
    } else if (verify->parsed()) {
      const Document d = ParseDocument(ReadTextFile(in_path));
      const auto sol = ExpectKind<SolutionDocument>(ParseDocument(ReadTextFile(solution_path)), "solution");
      ReportDocument rep = internal::VerifyCommand(d, sol);
      internal::WriteOutput(io, out_path, rep);
      if (!rep.feasible || !rep.within_bounds) {
        err << "priocover: solution is infeasible";
        for (const auto& u : rep.uncovered) err << "; uncovered " << u;
        if (!rep.within_bounds) err << "; exceeds upper bounds";
        err << "\n";
        return kExitInfeasible;
      }
    } else if (lp->parsed()) {
      internal::WriteOutput(io, out_path, internal::LpCommand(mode, ParseDocument(internal::ReadInput(io, in_path)), alpha));
    }
  } catch (const Infeasible& e) {
    err << "priocover: infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    err << "priocover: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "priocover: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InternalCheckFailed& e) {
    err << "priocover: internal check failed: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace priocover

#endif  // PRIOCOVER_CLI_HPP_
