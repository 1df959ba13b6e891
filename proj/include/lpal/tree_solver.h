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

// Exact solvers for trees with dfix = 0.
//
// The dynamic program keeps, for every rooted subtree, a cost vector whose
// entry k is the cheapest feasible concept on the subtree with at least k
// line ends (frequency weighted) at its root. Subtrees are grown by two
// operations: introducing a parent above a subtree root, and merging two
// subtrees that share their root when one of them has root degree one.
//
// Costs inside the kernels are integers: every rational cost parameter is
// multiplied by the common denominator before the DP starts.

#ifndef LPAL_TREE_SOLVER_H_
#define LPAL_TREE_SOLVER_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"

namespace lpal {

using ScaledCost = std::int64_t;
inline constexpr ScaledCost kInfiniteCost =
    std::numeric_limits<ScaledCost>::max();

struct CostVector {
  // entries[k], k = 0..b; kInfiniteCost when no concept has k root ends.
  std::vector<ScaledCost> entries;
  // Degree of the root inside the subtree the vector describes.
  int root_degree = 0;

  int bound() const { return static_cast<int>(entries.size()) - 1; }
};

struct EdgeParams {
  ScaledCost cost;
  Frequency fmin;
  Frequency fmax;
};

struct MergeChoice {
  int k1;
  int k2;
  int joined;
};

// Single vertex: k zero-edge lines, entries[k] = k * cfix.
CostVector cost_vector_leaf(ScaledCost cfix, int b);

// Adds the parent edge above `child`'s root. With a = max(k, fmin):
//   entries[k] = min_{0 <= m <= a} child[m] + a * (cfix + cost) - m * cfix,
// and kInfiniteCost for k > fmax. Ties take the smallest m. When `argmin` is
// given it receives the chosen m per k (-1 for infinite entries).
CostVector cost_vector_introduce_parent(const CostVector& child,
                                        const EdgeParams& edge, ScaledCost cfix,
                                        int b,
                                        std::vector<int>* argmin = nullptr);

// Joins two subtrees at their common root:
//   entries[k] = min cv1[k1] + cv2[k2] - m * cfix
// over 0 <= m <= min(k1, k2), k1, k2 <= b, k1 + k2 - 2m = k. Ties take the
// smallest m, then the smallest k1. Throws Error(kDegreeViolation) unless one
// of the inputs has root degree one.
CostVector cost_vector_merge(const CostVector& cv1, const CostVector& cv2,
                             ScaledCost cfix, int b,
                             std::vector<MergeChoice>* argmin = nullptr);

struct TreeDpOptions {
  // Cap on line ends per subtree root. Defaults to the largest fmax; must be
  // given when some fmax is infinite.
  std::optional<int> bound;
  bool reconstruct = false;
  Vertex root = 0;
};

struct TreeDpResult {
  Cost cost;
  int bound = 0;
  // Present when reconstruction was requested; never has zero-edge lines.
  std::optional<LineConcept> lines;
};

// OpenMP variant: subtrees at the same depth are evaluated concurrently.
// Output is identical to the serial variant for any thread count.
//
// Throws Error(kNotATree), Error(kNonzeroDfix) or Error(kBoundTooSmall) when
// some finite fmax, or some fmin, exceeds the bound.
TreeDpResult solve_tree_dp(const Instance& instance,
                           const TreeDpOptions& options = {});

// Serial reference: iterative post-order traversal.
TreeDpResult solve_tree_dp_serial(const Instance& instance,
                                  const TreeDpOptions& options = {});

// State of the fixed-frequency algorithm just before it visits `next`.
struct FixedFrequencySnapshot {
  Vertex next;
  std::span<const char> visited;
  const LineConcept& lines;
};
using FixedFrequencyObserver =
    std::function<void(const FixedFrequencySnapshot&)>;

// Optimal concept for trees with dfix = 0 and fmin = fmax: starts from one
// one-edge line per edge and, vertex by vertex, concatenates lines ending
// there according to the optimal pairing of the local star.
//
// Throws Error(kNotATree), Error(kNonzeroDfix) or Error(kUnequalBounds).
LineConcept solve_tree_fixed_freq(const Instance& instance,
                                  const FixedFrequencyObserver& observer = {});

}  // namespace lpal

#endif  // LPAL_TREE_SOLVER_H_
