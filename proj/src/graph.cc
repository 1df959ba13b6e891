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

#include "lpal/graph.h"

#include <string>
#include <utility>

#include "lpal/error.h"

namespace lpal {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) {
    throw Error(ErrorCode::kInvalidInstance, "graph needs at least one vertex");
  }
  std::vector<int> degree(vertex_count_, 0);
  edge_index_.reserve(edges_.size());
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(ErrorCode::kInvalidInstance,
                  "edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidInstance,
                  "edge " + std::to_string(id) + " is a self-loop");
    }
    if (!edge_index_.emplace(key(e.u, e.v), id).second) {
      throw Error(ErrorCode::kInvalidInstance,
                  "duplicate edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "}");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (Vertex v = 0; v < vertex_count_; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  incidence_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    incidence_[fill[e.u]++] = {e.v, id};
    incidence_[fill[e.v]++] = {e.u, id};
  }
}

std::uint64_t Graph::key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::is_connected() const {
  std::vector<char> seen(vertex_count_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : incident(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == vertex_count_;
}

bool Graph::is_tree() const {
  return edge_count() == vertex_count_ - 1 && is_connected();
}

}  // namespace lpal
