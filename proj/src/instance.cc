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

#include "lpal/instance.h"

#include <string>
#include <utility>

#include "lpal/error.h"

namespace lpal {

Instance::Instance(Graph graph, Rational dfix, Rational cfix,
                   std::vector<Rational> edge_cost,
                   std::vector<Frequency> fmin, std::vector<Frequency> fmax)
    : graph_(std::move(graph)),
      dfix_(dfix),
      cfix_(cfix),
      edge_cost_(std::move(edge_cost)),
      fmin_(std::move(fmin)),
      fmax_(std::move(fmax)) {
  const auto m = static_cast<std::size_t>(graph_.edge_count());
  if (edge_cost_.size() != m || fmin_.size() != m || fmax_.size() != m) {
    throw Error(ErrorCode::kInvalidInstance,
                "edge cost and frequency maps must cover every edge");
  }
  if (dfix_.is_negative() || cfix_.is_negative()) {
    throw Error(ErrorCode::kInvalidInstance, "dfix and cfix must be >= 0");
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (edge_cost_[e].is_negative()) {
      throw Error(ErrorCode::kInvalidInstance,
                  "edge " + std::to_string(e) + " has negative cost");
    }
    if (fmin_[e] < 0) {
      throw Error(ErrorCode::kInvalidInstance,
                  "edge " + std::to_string(e) + " has negative fmin");
    }
    if (fmin_[e] > fmax_[e]) {
      throw Error(ErrorCode::kInvalidInstance,
                  "edge " + std::to_string(e) + " has fmin > fmax");
    }
  }
}

namespace {

Graph graph_from_specs(int vertex_count, const std::vector<EdgeSpec>& edges) {
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const EdgeSpec& e : edges) plain.push_back({e.u, e.v});
  return Graph(vertex_count, std::move(plain));
}

template <typename T, typename F>
std::vector<T> project(const std::vector<EdgeSpec>& edges, F field) {
  std::vector<T> out;
  out.reserve(edges.size());
  for (const EdgeSpec& e : edges) out.push_back(field(e));
  return out;
}

}  // namespace

Instance::Instance(int vertex_count, Rational dfix, Rational cfix,
                   const std::vector<EdgeSpec>& edges)
    : Instance(graph_from_specs(vertex_count, edges), dfix, cfix,
               project<Rational>(edges, [](const EdgeSpec& e) { return e.cost; }),
               project<Frequency>(edges, [](const EdgeSpec& e) { return e.fmin; }),
               project<Frequency>(edges,
                                  [](const EdgeSpec& e) { return e.fmax; })) {}

std::vector<EdgeSpec> Instance::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(graph_.edge_count());
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    const Edge& edge = graph_.edge(e);
    out.push_back({edge.u, edge.v, edge_cost_[e], fmin_[e], fmax_[e]});
  }
  return out;
}

}  // namespace lpal
