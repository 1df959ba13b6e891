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

#include <algorithm>
#include <string>
#include <utility>

#include "lpal/error.h"
#include "lpal/tree_solver.h"
#include "tree_dp_internal.h"

namespace lpal::internal {
namespace {

constexpr int kMaxBound = 1 << 20;

ScaledCost scale_to(const Rational& value, std::int64_t scale) {
  return checked_mul(value.num(), scale / value.den());
}

}  // namespace

RootedTree root_tree(const Graph& tree, Vertex root) {
  const int n = tree.vertex_count();
  RootedTree rt;
  rt.root = root;
  rt.parent.assign(n, -1);
  rt.up_edge.assign(n, -1);
  rt.depth.assign(n, 0);
  rt.preorder.reserve(n);
  rt.child_offset.assign(n + 1, 0);

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    rt.preorder.push_back(v);
    auto incident = tree.incident(v);
    // Reverse push keeps the preorder in incidence order.
    for (auto it = incident.rbegin(); it != incident.rend(); ++it) {
      if (seen[it->neighbor]) continue;
      seen[it->neighbor] = 1;
      rt.parent[it->neighbor] = v;
      rt.up_edge[it->neighbor] = it->edge;
      rt.depth[it->neighbor] = rt.depth[v] + 1;
      stack.push_back(it->neighbor);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (rt.parent[v] >= 0) ++rt.child_offset[rt.parent[v] + 1];
  }
  for (Vertex v = 0; v < n; ++v) rt.child_offset[v + 1] += rt.child_offset[v];
  rt.child_list.resize(rt.child_offset[n]);
  std::vector<int> fill(rt.child_offset.begin(), rt.child_offset.end() - 1);
  for (Vertex v = 0; v < n; ++v) {
    for (const Incidence& inc : tree.incident(v)) {
      if (rt.parent[inc.neighbor] == v && rt.up_edge[inc.neighbor] == inc.edge) {
        rt.child_list[fill[v]++] = inc.neighbor;
      }
    }
  }
  return rt;
}

DpProblem prepare_dp(const Instance& instance, const TreeDpOptions& options) {
  const Graph& g = instance.graph();
  if (!g.is_tree()) throw Error(ErrorCode::kNotATree, "graph is not a tree");
  if (!instance.dfix().is_zero()) {
    throw Error(ErrorCode::kNonzeroDfix, "tree solvers require dfix = 0");
  }
  if (options.root < 0 || options.root >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidInstance, "root out of range");
  }

  DpProblem problem;
  if (options.bound) {
    problem.bound = *options.bound;
  } else {
    Frequency largest = 0;
    for (Frequency f : instance.fmax()) {
      if (is_infinite(f)) {
        throw Error(ErrorCode::kBoundTooSmall,
                    "an explicit bound is required when some fmax is infinite");
      }
      largest = std::max(largest, f);
    }
    if (largest > kMaxBound) {
      throw Error(ErrorCode::kTooLarge, "frequency bound too large for the DP");
    }
    problem.bound = static_cast<int>(largest);
  }
  if (problem.bound < 0 || problem.bound > kMaxBound) {
    throw Error(ErrorCode::kBoundTooSmall, "bound out of range");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Frequency fmax = instance.fmax(e);
    if (instance.fmin(e) > problem.bound ||
        (!is_infinite(fmax) && fmax > problem.bound)) {
      throw Error(ErrorCode::kBoundTooSmall,
                  "edge " + std::to_string(e) + " has a frequency bound above " +
                      std::to_string(problem.bound));
    }
  }

  std::int64_t scale = instance.cfix().den();
  for (const Rational& c : instance.edge_cost()) {
    scale = lcm_checked(scale, c.den());
  }
  problem.scale = scale;
  problem.cfix = scale_to(instance.cfix(), scale);
  problem.edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    problem.edges.push_back({scale_to(instance.edge_cost(e), scale),
                             instance.fmin(e), instance.fmax(e)});
  }
  problem.tree = root_tree(g, options.root);
  return problem;
}

DpTables::DpTables(const DpProblem& problem) {
  const std::size_t n = problem.tree.parent.size();
  const std::size_t width = static_cast<std::size_t>(problem.bound) + 1;
  subtree.resize(n);
  intro_choice.assign(n * width, -1);
  merge_choice.assign(n * width, MergeChoice{-1, -1, -1});
}

void evaluate_vertex(const DpProblem& problem, Vertex v, DpTables& tables) {
  const int b = problem.bound;
  const std::size_t width = static_cast<std::size_t>(b) + 1;
  auto kids = problem.tree.children(v);
  if (kids.empty()) {
    tables.subtree[v] = cost_vector_leaf(problem.cfix, b);
    return;
  }
  std::vector<int> intro_argmin;
  std::vector<MergeChoice> merge_argmin;
  CostVector acc;
  for (std::size_t j = 0; j < kids.size(); ++j) {
    const Vertex c = kids[j];
    CostVector lifted = cost_vector_introduce_parent(
        tables.subtree[c], problem.edges[problem.tree.up_edge[c]],
        problem.cfix, b, &intro_argmin);
    std::copy(intro_argmin.begin(), intro_argmin.end(),
              tables.intro_choice.begin() + c * width);
    // The child's vector is no longer needed once lifted.
    tables.subtree[c].entries.clear();
    tables.subtree[c].entries.shrink_to_fit();
    if (j == 0) {
      acc = std::move(lifted);
      continue;
    }
    acc = cost_vector_merge(lifted, acc, problem.cfix, b, &merge_argmin);
    std::copy(merge_argmin.begin(), merge_argmin.end(),
              tables.merge_choice.begin() + c * width);
  }
  tables.subtree[v] = std::move(acc);
}

namespace {

// Partial line that ends at the vertex currently being assembled; the
// vertex is path.back().
struct OpenLine {
  std::vector<Vertex> path;
  Frequency frequency;
};

// Removes `units` of frequency from the front of `from`, splitting the last
// entry if needed, and returns them.
std::vector<OpenLine> take_units(std::vector<OpenLine>& from, Frequency units) {
  std::vector<OpenLine> taken;
  std::size_t i = 0;
  while (units > 0) {
    OpenLine& line = from[i];
    Frequency d = std::min(units, line.frequency);
    if (d == line.frequency) {
      taken.push_back({std::move(line.path), d});
    } else {
      taken.push_back({line.path, d});
    }
    line.frequency -= d;
    units -= d;
    if (line.frequency == 0) ++i;
  }
  from.erase(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(i));
  return taken;
}

void close_all(std::vector<OpenLine>& lines, LineConcept& out) {
  for (OpenLine& line : lines) {
    if (line.frequency > 0 && line.path.size() > 1) {
      out.add(Line(std::move(line.path)), line.frequency);
    }
  }
  lines.clear();
}

LineConcept reconstruct(const DpProblem& problem, const DpTables& tables) {
  const RootedTree& tree = problem.tree;
  const std::size_t n = tree.parent.size();
  const std::size_t width = static_cast<std::size_t>(problem.bound) + 1;

  // Top-down: which entry of every intermediate vector the optimum uses.
  std::vector<int> request(n, 0);
  std::vector<int> intro_request(n, 0);
  std::vector<int> joined(n, 0);
  for (Vertex v : tree.preorder) {
    auto kids = tree.children(v);
    int r = request[v];
    for (std::size_t j = kids.size(); j-- > 1;) {
      const MergeChoice& choice = tables.merge_choice[kids[j] * width + r];
      intro_request[kids[j]] = choice.k1;
      joined[kids[j]] = choice.joined;
      r = choice.k2;
    }
    if (!kids.empty()) intro_request[kids[0]] = r;
    for (Vertex c : kids) {
      request[c] = tables.intro_choice[c * width + intro_request[c]];
    }
  }

  // Bottom-up: materialize the lines.
  LineConcept out;
  std::vector<std::vector<OpenLine>> open(n);
  for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
    const Vertex v = *it;
    auto kids = tree.children(v);
    if (kids.empty()) {
      if (request[v] > 0) open[v].push_back({{v}, request[v]});
      continue;
    }
    std::vector<OpenLine> acc;
    for (std::size_t j = 0; j < kids.size(); ++j) {
      const Vertex c = kids[j];
      const EdgeParams& edge = problem.edges[tree.up_edge[c]];
      const Frequency a = std::max<Frequency>(intro_request[c], edge.fmin);
      const Frequency extended = request[c];
      std::vector<OpenLine> lifted = take_units(open[c], extended);
      for (OpenLine& line : lifted) line.path.push_back(v);
      close_all(open[c], out);
      if (a > extended) lifted.push_back({{c, v}, a - extended});

      if (j == 0) {
        acc = std::move(lifted);
        continue;
      }
      std::vector<OpenLine> left = take_units(lifted, joined[c]);
      std::vector<OpenLine> right = take_units(acc, joined[c]);
      std::size_t li = 0;
      std::size_t ri = 0;
      while (li < left.size() && ri < right.size()) {
        Frequency d = std::min(left[li].frequency, right[ri].frequency);
        std::vector<Vertex> path = left[li].path;
        path.insert(path.end(), right[ri].path.rbegin() + 1,
                    right[ri].path.rend());
        out.add(Line(std::move(path)), d);
        left[li].frequency -= d;
        right[ri].frequency -= d;
        if (left[li].frequency == 0) ++li;
        if (right[ri].frequency == 0) ++ri;
      }
      for (OpenLine& line : lifted) acc.push_back(std::move(line));
    }
    open[v] = std::move(acc);
  }
  close_all(open[tree.root], out);
  return out.sorted();
}

}  // namespace

TreeDpResult finish_dp(const DpProblem& problem, const DpTables& tables,
                       bool reconstruct_lines) {
  const ScaledCost best = tables.subtree[problem.tree.root].entries[0];
  TreeDpResult result;
  result.bound = problem.bound;
  result.cost = Rational(best, problem.scale);
  if (reconstruct_lines) result.lines = reconstruct(problem, tables);
  return result;
}

}  // namespace lpal::internal

namespace lpal {

TreeDpResult solve_tree_dp_serial(const Instance& instance,
                                  const TreeDpOptions& options) {
  internal::DpProblem problem = internal::prepare_dp(instance, options);
  internal::DpTables tables(problem);
  for (auto it = problem.tree.preorder.rbegin();
       it != problem.tree.preorder.rend(); ++it) {
    internal::evaluate_vertex(problem, *it, tables);
  }
  return internal::finish_dp(problem, tables, options.reconstruct);
}

}  // namespace lpal
