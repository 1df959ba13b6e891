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
#include <exception>
#include <vector>

#include "lpal/tree_solver.h"
#include "tree_dp_internal.h"

namespace lpal {

TreeDpResult solve_tree_dp(const Instance& instance,
                           const TreeDpOptions& options) {
  internal::DpProblem problem = internal::prepare_dp(instance, options);
  internal::DpTables tables(problem);

  // Bucket vertices by depth; a level only depends on the level below it.
  const auto& depth = problem.tree.depth;
  const int max_depth = *std::max_element(depth.begin(), depth.end());
  std::vector<int> level_offset(max_depth + 2, 0);
  for (int d : depth) ++level_offset[d + 1];
  for (int d = 0; d <= max_depth; ++d) level_offset[d + 1] += level_offset[d];
  std::vector<Vertex> by_level(depth.size());
  {
    std::vector<int> fill(level_offset.begin(), level_offset.end() - 1);
    for (Vertex v : problem.tree.preorder) by_level[fill[depth[v]]++] = v;
  }

  std::exception_ptr failure;
  for (int d = max_depth; d >= 0 && !failure; --d) {
    const int first = level_offset[d];
    const int last = level_offset[d + 1];
#pragma omp parallel for schedule(dynamic, 32) if (last - first > 64)
    for (int i = first; i < last; ++i) {
      try {
        internal::evaluate_vertex(problem, by_level[i], tables);
      } catch (...) {
#pragma omp critical(lpal_tree_dp_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return internal::finish_dp(problem, tables, options.reconstruct);
}

}  // namespace lpal
