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

#include "testing/fixtures.h"

namespace lpal::testing {

Instance sample_path_instance() {
  const std::vector<Frequency> f = {10, 20, 19, 17, 15, 11, 6};
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 7; ++i) edges.push_back({i, i + 1, 0, f[i], f[i]});
  return Instance(8, 1, 0, edges);
}

LineConcept sample_path_concept() {
  LineConcept c;
  c.add(Line({0, 1, 2}), 1);
  c.add(Line({1, 2, 3}), 2);
  c.add(Line({1, 2, 3, 4}), 2);
  c.add(Line({0, 1, 2, 3, 4, 5}), 4);
  c.add(Line({0, 1, 2, 3, 4, 5, 6}), 5);
  c.add(Line({1, 2, 3, 4, 5, 6, 7}), 6);
  return c;
}

Instance sample_star(Rational dfix, Rational cfix) {
  return Instance(5, dfix, cfix,
                  {{0, 1, 0, 5, 5}, {0, 2, 0, 3, 3}, {0, 3, 0, 4, 4},
                   {0, 4, 0, 2, 2}});
}

LineConcept sample_star_concept() {
  LineConcept c;
  c.add(Line({1, 0, 2}), 3);
  c.add(Line({1, 0, 3}), 2);
  c.add(Line({3, 0, 4}), 2);
  return c;
}

namespace {

// Vertices 1, 2, 3, x, y -> 0, 1, 2, 3, 4.
Instance triangle_factor(Frequency base, Frequency sides) {
  return Instance(5, 0, 1,
                  {{0, 1, 0, base},
                   {1, 2, 0, sides},
                   {2, 0, 0, sides},
                   {0, 3, 0, 1},
                   {1, 4, 0, 1}});
}

}  // namespace

Instance pendant_triangle_inner() { return triangle_factor(0, 1); }
Instance pendant_triangle_outer() { return triangle_factor(1, 0); }

Instance two_line_factor() {
  // x, a, b, y, z, w -> 0, 1, 2, 3, 4, 5.
  return Instance(6, 0, 1,
                  {{0, 1, 0, 1}, {1, 2, 0, 1}, {2, 3, 0, 1}, {1, 4, 0, 1},
                   {4, 5, 0, 0}});
}

}  // namespace lpal::testing
