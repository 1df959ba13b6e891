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

// Slow, obviously-correct reference computations. They share no code with
// the library's solvers.

#ifndef LPAL_TESTS_TESTING_BRUTE_FORCE_H_
#define LPAL_TESTS_TESTING_BRUTE_FORCE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"

namespace lpal::testing {

// Smallest total line frequency over all star concepts that cover leaf i
// exactly demands[i] times with one- and two-edge lines.
Frequency star_min_line_frequency(const std::vector<Frequency>& demands);

// Split into p triples of equal sum.
bool has_three_partition(const std::vector<std::int64_t>& values, int p);
// Split into p groups of equal sum, any group sizes.
bool has_equal_sum_groups(const std::vector<std::int64_t>& values, int p);

// Every simple path with at least one edge, as canonical vertex sequences,
// found by trying all ordered vertex sequences.
std::vector<std::vector<Vertex>> paths_by_permutation(const Graph& graph);

// Minimum cost over every assignment of 0..max_frequency to every simple
// path; nullopt if none is feasible. Exponential; tiny graphs only.
std::optional<Cost> exhaustive_min_cost(const Instance& instance,
                                        Frequency max_frequency);

}  // namespace lpal::testing

#endif  // LPAL_TESTS_TESTING_BRUTE_FORCE_H_
