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

#ifndef LPAL_INSTANCE_H_
#define LPAL_INSTANCE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lpal/graph.h"
#include "lpal/rational.h"

namespace lpal {

using Frequency = std::int64_t;

// Upper frequency bound meaning "no bound"; compares greater than every
// finite frequency. Serialized as `inf`.
inline constexpr Frequency kInfiniteFrequency =
    std::numeric_limits<Frequency>::max();

inline bool is_infinite(Frequency f) { return f == kInfiniteFrequency; }

struct EdgeSpec {
  Vertex u;
  Vertex v;
  Rational cost = 0;
  Frequency fmin = 0;
  Frequency fmax = kInfiniteFrequency;
};

// A line planning instance: network, cost parameters and per-edge frequency
// bounds. Immutable once constructed; the constructor enforces the
// invariants (nonnegative costs, 0 <= fmin <= fmax, maps total on edges).
class Instance {
 public:
  Instance() = default;
  Instance(Graph graph, Rational dfix, Rational cfix,
           std::vector<Rational> edge_cost, std::vector<Frequency> fmin,
           std::vector<Frequency> fmax);
  Instance(int vertex_count, Rational dfix, Rational cfix,
           const std::vector<EdgeSpec>& edges);

  const Graph& graph() const { return graph_; }
  const Rational& dfix() const { return dfix_; }
  const Rational& cfix() const { return cfix_; }
  std::span<const Rational> edge_cost() const { return edge_cost_; }
  std::span<const Frequency> fmin() const { return fmin_; }
  std::span<const Frequency> fmax() const { return fmax_; }

  const Rational& edge_cost(EdgeId e) const { return edge_cost_[e]; }
  Frequency fmin(EdgeId e) const { return fmin_[e]; }
  Frequency fmax(EdgeId e) const { return fmax_[e]; }

  bool fixed_frequencies() const { return fmin_ == fmax_; }

  // Edge list view in the same shape the constructor accepts.
  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Graph graph_;
  Rational dfix_ = 0;
  Rational cfix_ = 0;
  std::vector<Rational> edge_cost_;
  std::vector<Frequency> fmin_;
  std::vector<Frequency> fmax_;
};

}  // namespace lpal

#endif  // LPAL_INSTANCE_H_
