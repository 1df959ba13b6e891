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

#include "lpal/generators.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "lpal/error.h"

namespace lpal {
namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Instance with_random_parameters(int n, const std::vector<Edge>& edges,
                                const RandomInstanceOptions& options,
                                std::mt19937_64& rng) {
  if (options.max_frequency < 0 || options.max_cfix < 0 ||
      options.max_edge_cost < 0 || options.dfix < 0) {
    throw Error(ErrorCode::kInvalidInstance, "generator bounds must be >= 0");
  }
  const Rational cfix = uniform(rng, 0, options.max_cfix);
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const Edge& e : edges) {
    EdgeSpec spec{e.u, e.v};
    spec.cost = uniform(rng, 0, options.max_edge_cost);
    spec.fmin = uniform(rng, 0, options.max_frequency);
    spec.fmax = options.fixed_frequencies
                    ? spec.fmin
                    : uniform(rng, spec.fmin, options.max_frequency);
    specs.push_back(spec);
  }
  return Instance(n, options.dfix, cfix, specs);
}

}  // namespace

Instance random_tree(const RandomInstanceOptions& options, std::mt19937_64& rng) {
  const int n = options.vertices;
  if (n < 1) throw Error(ErrorCode::kInvalidInstance, "need at least one vertex");
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    const Vertex parent = static_cast<Vertex>(uniform(rng, 0, i - 1));
    edges.push_back({label[parent], label[i]});
  }
  return with_random_parameters(n, edges, options, rng);
}

Instance random_star(const RandomInstanceOptions& options, std::mt19937_64& rng) {
  const int n = options.vertices;
  if (n < 2) throw Error(ErrorCode::kInvalidInstance, "a star needs a leaf");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
  return with_random_parameters(n, edges, options, rng);
}

}  // namespace lpal
