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

// Brute-force LPAL solver for small general graphs. Branch and bound over
// one frequency per simple path; meant as ground truth in tests.

#ifndef LPAL_EXACT_ORACLE_H_
#define LPAL_EXACT_ORACLE_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"

namespace lpal {

struct OracleConfig {
  int max_vertices = 8;
  // Upper bound on the frequency of a single line. When unset, a line is
  // capped by the smallest finite fmax on it, or by sum(fmin) if every edge
  // on it is unbounded.
  std::optional<Frequency> frequency_cap;
  std::optional<std::chrono::duration<double>> time_budget;
  std::size_t max_paths = 200000;
};

// Every simple path with at least one edge, once per undirected path, smaller
// endpoint first. Ordered by edge count, then vertex sequence. Throws
// Error(kTooLarge) once more than `max_paths` paths are found.
using PathCatalog = std::vector<Line>;
PathCatalog enumerate_simple_paths(const Graph& graph,
                                   std::size_t max_paths = 200000);

struct OracleResult {
  Cost cost;
  LineConcept lines;  // sorted
};

// Minimum-cost feasible concept. Throws Error(kTooLarge) above
// config.max_vertices, Error(kInfeasible) when no concept within the
// frequency cap is feasible and Error(kTimeout) when the budget runs out.
OracleResult oracle_solve(const Instance& instance,
                          const OracleConfig& config = {});

// True iff some feasible concept costs at most `threshold`. Stops at the first
// such concept. Errors as oracle_solve.
bool oracle_decide(const Instance& instance, const Cost& threshold,
                   const OracleConfig& config = {});

}  // namespace lpal

#endif  // LPAL_EXACT_ORACLE_H_
