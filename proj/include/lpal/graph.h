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

#ifndef LPAL_GRAPH_H_
#define LPAL_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace lpal {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. Edges keep the index order
// they were given in; endpoints are stored as given.
class Graph {
 public:
  Graph() = default;
  // Throws Error(kInvalidInstance) on self-loops, duplicate edges or
  // endpoints out of range.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Incidence> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v],
            incidence_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex a, Vertex b);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency: incidence_[offsets_[v] .. offsets_[v+1]) in edge order.
  std::vector<int> offsets_{0};
  std::vector<Incidence> incidence_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

}  // namespace lpal

#endif  // LPAL_GRAPH_H_
