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

// Seeded random instances for tests, benchmarks and the `gen` command.

#ifndef LPAL_GENERATORS_H_
#define LPAL_GENERATORS_H_

#include <random>

#include "lpal/instance.h"

namespace lpal {

struct RandomInstanceOptions {
  int vertices = 8;  // for stars: leaves + 1
  Frequency max_frequency = 4;
  // fmax = fmin on every edge when set; otherwise fmax is drawn from
  // [fmin, max_frequency].
  bool fixed_frequencies = false;
  int max_cfix = 0;       // cfix drawn from [0, max_cfix]
  int max_edge_cost = 0;  // c_e drawn from [0, max_edge_cost]
  int dfix = 0;
};

// Uniform random attachment tree, vertex labels shuffled.
Instance random_tree(const RandomInstanceOptions& options, std::mt19937_64& rng);

// Star with center 0 and options.vertices - 1 leaves.
Instance random_star(const RandomInstanceOptions& options, std::mt19937_64& rng);

}  // namespace lpal

#endif  // LPAL_GENERATORS_H_
