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

#ifndef LPAL_SRC_TREE_DP_INTERNAL_H_
#define LPAL_SRC_TREE_DP_INTERNAL_H_

#include <span>
#include <vector>

#include "lpal/tree_solver.h"

namespace lpal::internal {

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;     // -1 for the root
  std::vector<EdgeId> up_edge;    // edge to the parent, -1 for the root
  std::vector<int> depth;
  std::vector<Vertex> preorder;
  // Children of v: child_list[child_offset[v] .. child_offset[v+1]), in
  // incidence (edge index) order.
  std::vector<int> child_offset;
  std::vector<Vertex> child_list;

  std::span<const Vertex> children(Vertex v) const {
    return {child_list.data() + child_offset[v],
            child_list.data() + child_offset[v + 1]};
  }
};

// Iterative DFS; no recursion regardless of depth.
RootedTree root_tree(const Graph& tree, Vertex root);

// Validated, integer-scaled view of a tree DP input.
struct DpProblem {
  RootedTree tree;
  int bound = 0;
  ScaledCost cfix = 0;
  std::vector<EdgeParams> edges;
  std::int64_t scale = 1;  // real cost = scaled cost / scale
};

DpProblem prepare_dp(const Instance& instance, const TreeDpOptions& options);

struct DpTables {
  std::vector<CostVector> subtree;  // final vector per vertex
  // Indexed by child vertex c: [c * (bound + 1) + k].
  std::vector<int> intro_choice;
  std::vector<MergeChoice> merge_choice;

  explicit DpTables(const DpProblem& problem);
};

// Computes the subtree vector of `v` from its children's vectors. Writes only
// to tables.subtree[v] and to the choice rows of v's children, so distinct
// vertices whose children are finished can be evaluated concurrently.
void evaluate_vertex(const DpProblem& problem, Vertex v, DpTables& tables);

TreeDpResult finish_dp(const DpProblem& problem, const DpTables& tables,
                       bool reconstruct);

}  // namespace lpal::internal

#endif  // LPAL_SRC_TREE_DP_INTERNAL_H_
