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

// Small reference instances and concepts.

#ifndef LPAL_TESTS_TESTING_FIXTURES_H_
#define LPAL_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"

namespace lpal::testing {

// 3-Partition path for S = {1, 2, 2, 4, 5, 6}, p = 2. Vertex id j + 1 is v_j.
inline const std::vector<std::int64_t> kSamplePathValues = {1, 2, 2, 4, 5, 6};
Instance sample_path_instance();
// The reference concept: left ends v_{-1} for {1, 4, 5} and v_0 for {2, 2, 6}.
LineConcept sample_path_concept();

// Star with center 0 and leaves 1..4 on fixed frequencies 5, 3, 4, 2.
Instance sample_star(Rational dfix, Rational cfix);
// The reference concept: v1-c-v2 x3, v1-c-v3 x2, v3-c-v4 x2.
LineConcept sample_star_concept();

// Factors I (inner) and J (outer) for the product: a triangle with
// two pendant antennae. dfix = 0, cfix = 1, c = 0, fmax = inf.
Instance pendant_triangle_inner();
Instance pendant_triangle_outer();
// Nice factor that needs two lines: the path x-a-b-y plus a demand edge a-z
// whose far end z continues over a free edge z-w.
Instance two_line_factor();

}  // namespace lpal::testing

#endif  // LPAL_TESTS_TESTING_FIXTURES_H_
