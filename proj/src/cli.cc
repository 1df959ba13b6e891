// Copyright 2026 The LPAL Authors
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

#include "lpal/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpal/error.h"
#include "lpal/exact_oracle.h"
#include "lpal/generators.h"
#include "lpal/reductions.h"
#include "lpal/star_solver.h"
#include "lpal/text_format.h"
#include "lpal/tree_solver.h"

namespace lpal {
namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

template <typename T>
T read_from(const std::string& path, std::istream& in,
            const std::function<T(std::istream&)>& parse) {
  if (path.empty() || path == "-") return parse(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return parse(file);
}

Instance read_instance(const std::string& path, std::istream& in) {
  return read_from<Instance>(path, in, [](std::istream& s) {
    return parse_instance(s);
  });
}

ParsedConcept read_concept(const std::string& path, std::istream& in) {
  return read_from<ParsedConcept>(path, in, [](std::istream& s) {
    return parse_concept(s);
  });
}

void write_decision_instance(std::ostream& out, const Instance& instance,
                             const Cost& threshold) {
  out << "# threshold " << threshold << "\n";
  write_instance(out, instance);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kInfeasibleInput:
      return kExitNo;
    case ErrorCode::kTimeout:
      return kExitTimeout;
    default:
      return kExitUsage;
  }
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string method = "oracle";
  std::optional<int> bound;
  bool reconstruct = false;
  std::optional<std::string> threshold;
  std::optional<Frequency> cap;
  std::optional<double> timeout;
  int max_vertices = OracleConfig{}.max_vertices;
};

OracleConfig oracle_config(const SolveArgs& args) {
  OracleConfig config;
  config.max_vertices = args.max_vertices;
  config.frequency_cap = args.cap;
  if (args.timeout) {
    config.time_budget = std::chrono::duration<double>(*args.timeout);
  }
  return config;
}

void add_oracle_flags(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--cap", args.cap, "Frequency cap per line (oracle)");
  cmd->add_option("--timeout", args.timeout, "Oracle time budget in seconds");
  cmd->add_option("--max-vertices", args.max_vertices,
                  "Largest graph the oracle accepts");
}

// Runs the selected solver; rethrows solver precondition failures as
// MethodMismatch.
LineConcept run_method(const SolveArgs& args, const Instance& instance) {
  try {
    if (args.method == "star") return solve_star(StarInstance(instance));
    if (args.method == "tree-dp") {
      TreeDpOptions options;
      options.bound = args.bound;
      options.reconstruct = true;
      return *solve_tree_dp(instance, options).lines;
    }
    if (args.method == "tree-fixed") return solve_tree_fixed_freq(instance);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNotAStar:
      case ErrorCode::kNotATree:
      case ErrorCode::kNonzeroDfix:
      case ErrorCode::kUnequalBounds:
        throw Error(ErrorCode::kMethodMismatch,
                    "method " + args.method + " does not apply: " + e.what());
      default:
        throw;
    }
  }
  return oracle_solve(instance, oracle_config(args)).lines;
}

int do_solve(const SolveArgs& args, Streams io) {
  const Instance instance = read_instance(args.input, io.in);
  if (args.method == "tree-dp" && !args.reconstruct && !args.threshold) {
    TreeDpOptions options;
    options.bound = args.bound;
    Cost cost;
    try {
      cost = solve_tree_dp(instance, options).cost;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotATree && e.code() != ErrorCode::kNonzeroDfix) {
        throw;
      }
      throw Error(ErrorCode::kMethodMismatch,
                  std::string("method tree-dp does not apply: ") + e.what());
    }
    io.out << "cost " << cost << "\n";
    return kExitOk;
  }
  if (args.threshold) {
    const Cost threshold = Rational::parse(*args.threshold);
    bool yes;
    if (args.method == "oracle") {
      yes = oracle_decide(instance, threshold, oracle_config(args));
    } else {
      yes = concept_cost(run_method(args, instance), instance) <= threshold;
    }
    io.out << (yes ? "true" : "false") << "\n";
    return yes ? kExitOk : kExitNo;
  }
  const LineConcept lines = run_method(args, instance);
  const Cost cost = concept_cost(lines, instance);
  if (args.output.empty()) {
    io.out << "# cost " << cost << "\n";
    write_concept(io.out, lines);
  } else {
    std::ofstream file(args.output);
    if (!file) throw Error(ErrorCode::kParseError, "cannot write " + args.output);
    file << "# cost " << cost << "\n";
    write_concept(file, lines);
    io.out << "cost " << cost << "\n";
  }
  return kExitOk;
}

int do_check(const std::string& instance_path, const std::string& concept_path,
             Streams io) {
  const Instance instance = read_instance(instance_path, io.in);
  const ParsedConcept parsed = read_concept(concept_path, io.in);
  for (const std::string& warning : parsed.warnings) {
    io.err << "warning: " << warning << "\n";
  }
  const FeasibilityReport report = is_feasible(parsed.lines, instance);
  const Cost cost = concept_cost(parsed.lines, instance);
  if (report.feasible && report.zero_edge_lines == 0) {
    io.out << "feasible, cost " << cost << "\n";
    return kExitOk;
  }
  io.out << "infeasible, cost " << cost << "\n";
  for (const EdgeViolation& v : report.violations) {
    io.out << "edge " << v.edge << ": total " << v.total << " not in ["
           << v.fmin << ", " << frequency_to_string(v.fmax) << "]\n";
  }
  if (report.zero_edge_lines > 0) {
    io.out << report.zero_edge_lines << " zero-edge line(s)\n";
  }
  return kExitNo;
}

int do_cost(const std::string& instance_path, const std::string& concept_path,
            Streams io) {
  const Instance instance = read_instance(instance_path, io.in);
  const ParsedConcept parsed = read_concept(concept_path, io.in);
  io.out << concept_cost(parsed.lines, instance) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app("Line planning on all lines: solvers, oracle and generators",
               "lpal");
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Compute an optimal concept");
  solve->add_option("instance", solve_args.input, "Instance file (default stdin)");
  solve->add_option("--method", solve_args.method, "Solver")
      ->check(CLI::IsMember({"star", "tree-dp", "tree-fixed", "oracle"}));
  solve->add_option("--bound", solve_args.bound, "Line-end bound b (tree-dp)");
  solve->add_flag("--reconstruct", solve_args.reconstruct,
                  "Also print the concept (tree-dp)");
  solve->add_option("--threshold", solve_args.threshold,
                    "Answer cost <= C instead of printing a concept");
  solve->add_option("-o,--output", solve_args.output, "Concept output file");
  add_oracle_flags(solve, solve_args);

  SolveArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "Exact search (small graphs)");
  oracle->add_option("instance", oracle_args.input, "Instance file (default stdin)");
  oracle->add_option("--threshold", oracle_args.threshold,
                     "Answer cost <= C instead of printing a concept");
  oracle->add_option("-o,--output", oracle_args.output, "Concept output file");
  add_oracle_flags(oracle, oracle_args);

  std::string instance_path;
  std::string concept_path;
  CLI::App* check = app.add_subcommand("check", "Validate a concept");
  check->add_option("instance", instance_path, "Instance file")->required();
  check->add_option("concept", concept_path, "Concept file (default stdin)");
  CLI::App* cost = app.add_subcommand("cost", "Print the cost of a concept");
  cost->add_option("instance", instance_path, "Instance file")->required();
  cost->add_option("concept", concept_path, "Concept file (default stdin)");

  CLI::App* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::vector<std::int64_t> set;
  int p = 1;
  std::int64_t k = 0;
  std::string square_path;
  std::uint64_t seed = 1;
  RandomInstanceOptions random;
  CLI::App* gen_3part = gen->add_subcommand("3part", "Path from 3-Partition");
  gen_3part->add_option("--set", set, "Values, comma separated")
      ->required()
      ->delimiter(',');
  gen_3part->add_option("--p", p, "Number of groups")->required();
  CLI::App* gen_pmpp = gen->add_subcommand("pmpp-star", "Star from PMPP");
  gen_pmpp->add_option("--set", set, "Distinct values, comma separated")
      ->required()
      ->delimiter(',');
  gen_pmpp->add_option("--k", k, "Number of equal-sum splits")->required();
  CLI::App* gen_plsc =
      gen->add_subcommand("plsc", "Star from a partial Latin square via PMPP");
  gen_plsc->add_option("square,--file", square_path, "Square file (default stdin)");
  CLI::App* gen_tree = gen->add_subcommand("random-tree", "Random tree");
  CLI::App* gen_star = gen->add_subcommand("random-star", "Random star");
  for (CLI::App* cmd : {gen_tree, gen_star}) {
    cmd->add_option("--n", random.vertices, "Number of vertices");
    cmd->add_option("--max-f", random.max_frequency, "Largest frequency");
    cmd->add_flag("--fixed", random.fixed_frequencies, "fmin = fmax");
    cmd->add_option("--max-cfix", random.max_cfix, "Largest cfix");
    cmd->add_option("--max-cost", random.max_edge_cost, "Largest edge cost");
    cmd->add_option("--dfix", random.dfix, "dfix");
    cmd->add_option("--seed", seed, "Random seed");
  }

  CLI::App* transform = app.add_subcommand("transform", "Transform instances");
  transform->require_subcommand(1);
  std::string lift_k = "0";
  std::string inner_path;
  std::string outer_path;
  CLI::App* lift = transform->add_subcommand("lift", "Replace fmax by infinity");
  lift->add_option("--k", lift_k, "Decision threshold K")->required();
  lift->add_option("instance", instance_path, "Instance file (default stdin)");
  CLI::App* product = transform->add_subcommand("product", "Instance product");
  product->add_option("inner", inner_path, "Inner factor I")->required();
  product->add_option("outer", outer_path, "Outer factor J")->required();

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return do_solve(solve_args, io);
    if (*oracle) return do_solve(oracle_args, io);
    if (*check) return do_check(instance_path, concept_path, io);
    if (*cost) return do_cost(instance_path, concept_path, io);
    if (*gen_3part) {
      const DecisionInstance d =
          three_partition_to_path(ThreePartitionInstance(set, p));
      write_decision_instance(out, d.instance, d.threshold);
    } else if (*gen_pmpp) {
      const DecisionInstance d = pmpp_to_star(PmppInstance(set, k));
      write_decision_instance(out, d.instance, d.threshold);
    } else if (*gen_plsc) {
      const PartialLatinSquare square = read_from<PartialLatinSquare>(
          square_path, in, [](std::istream& s) { return parse_latin_square(s); });
      const DecisionInstance d = pmpp_to_star(plsc_to_pmpp(square).pmpp);
      write_decision_instance(out, d.instance, d.threshold);
    } else if (*gen_tree || *gen_star) {
      std::mt19937_64 rng(seed);
      write_instance(out, *gen_tree ? random_tree(random, rng)
                                    : random_star(random, rng));
    } else if (*lift) {
      const DecisionInstance d =
          lift_fmax(read_instance(instance_path, in), Rational::parse(lift_k));
      write_decision_instance(out, d.instance, d.threshold);
    } else if (*product) {
      write_instance(out, instance_product(read_instance(inner_path, in),
                                           read_instance(outer_path, in)));
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace lpal
