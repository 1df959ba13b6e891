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

#include "lpal/error.h"
#include "lpal/tree_solver.h"

namespace lpal {

CostVector cost_vector_leaf(ScaledCost cfix, int b) {
  CostVector cv;
  cv.entries.resize(b + 1);
  for (int k = 0; k <= b; ++k) cv.entries[k] = checked_mul(k, cfix);
  cv.root_degree = 0;
  return cv;
}

CostVector cost_vector_introduce_parent(const CostVector& child,
                                        const EdgeParams& edge, ScaledCost cfix,
                                        int b, std::vector<int>* argmin) {
  CostVector cv;
  cv.entries.assign(b + 1, kInfiniteCost);
  cv.root_degree = 1;
  if (argmin) argmin->assign(b + 1, -1);
  const ScaledCost unit = checked_add(cfix, edge.cost);
  const int child_bound = child.bound();
  for (int k = 0; k <= b; ++k) {
    if (k > edge.fmax) break;
    const Frequency a = std::max<Frequency>(k, edge.fmin);
    const ScaledCost edge_part = checked_mul(a, unit);
    const int m_max = static_cast<int>(std::min<Frequency>(a, child_bound));
    ScaledCost best = kInfiniteCost;
    int best_m = -1;
    for (int m = 0; m <= m_max; ++m) {
      const ScaledCost below = child.entries[m];
      if (below == kInfiniteCost) continue;
      const ScaledCost value =
          checked_add(checked_add(below, edge_part), -checked_mul(m, cfix));
      if (value < best) {
        best = value;
        best_m = m;
      }
    }
    cv.entries[k] = best;
    if (argmin) (*argmin)[k] = best_m;
  }
  return cv;
}

CostVector cost_vector_merge(const CostVector& cv1, const CostVector& cv2,
                             ScaledCost cfix, int b,
                             std::vector<MergeChoice>* argmin) {
  if (cv1.root_degree != 1 && cv2.root_degree != 1) {
    throw Error(ErrorCode::kDegreeViolation,
                "merge needs a subtree whose root has exactly one child");
  }
  CostVector cv;
  cv.entries.assign(b + 1, kInfiniteCost);
  cv.root_degree = cv1.root_degree + cv2.root_degree;
  if (argmin) argmin->assign(b + 1, MergeChoice{-1, -1, -1});
  const int b1 = std::min(b, cv1.bound());
  const int b2 = std::min(b, cv2.bound());
  for (int k = 0; k <= b; ++k) {
    ScaledCost best = kInfiniteCost;
    MergeChoice choice{-1, -1, -1};
    for (int m = 0; m <= std::min(b1, b2); ++m) {
      const ScaledCost saving = checked_mul(m, cfix);
      for (int k1 = m; k1 <= b1; ++k1) {
        const int k2 = k + 2 * m - k1;
        if (k2 < m) break;
        if (k2 > b2) continue;
        const ScaledCost x = cv1.entries[k1];
        const ScaledCost y = cv2.entries[k2];
        if (x == kInfiniteCost || y == kInfiniteCost) continue;
        const ScaledCost value = checked_add(checked_add(x, y), -saving);
        if (value < best) {
          best = value;
          choice = {k1, k2, m};
        }
      }
    }
    cv.entries[k] = best;
    if (argmin) (*argmin)[k] = choice;
  }
  return cv;
}

}  // namespace lpal
