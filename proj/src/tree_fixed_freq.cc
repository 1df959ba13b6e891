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

#include <algorithm>
#include <map>
#include <utility>

#include "lpal/error.h"
#include "lpal/star_solver.h"
#include "lpal/tree_solver.h"
#include "tree_dp_internal.h"

namespace lpal {
namespace {

// On a tree a line is determined by its two ends. `edge[i]` is the line's
// edge at `end[i]`.
struct EndpointLine {
  Vertex end[2];
  EdgeId edge[2];
  Frequency frequency;

  int side_at(Vertex v) const { return end[0] == v ? 0 : 1; }
};

class LineStore {
 public:
  explicit LineStore(int vertex_count) : ends_at_(vertex_count) {}

  void add(Vertex a, EdgeId ea, Vertex b, EdgeId eb, Frequency f) {
    if (a > b) {
      std::swap(a, b);
      std::swap(ea, eb);
    }
    auto [it, inserted] = index_.emplace(std::pair(a, b), lines_.size());
    if (!inserted) {
      lines_[it->second].frequency += f;
      return;
    }
    lines_.push_back({{a, b}, {ea, eb}, f});
    ends_at_[a].push_back(it->second);
    ends_at_[b].push_back(it->second);
  }

  std::vector<EndpointLine>& lines() { return lines_; }
  const std::vector<std::size_t>& ends_at(Vertex v) const { return ends_at_[v]; }

 private:
  std::vector<EndpointLine> lines_;
  std::vector<std::vector<std::size_t>> ends_at_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> index_;
};

std::vector<Vertex> tree_path(const internal::RootedTree& tree, Vertex a,
                              Vertex b) {
  std::vector<Vertex> front{a};
  std::vector<Vertex> back{b};
  while (a != b) {
    if (tree.depth[a] >= tree.depth[b]) {
      a = tree.parent[a];
      front.push_back(a);
    } else {
      b = tree.parent[b];
      back.push_back(b);
    }
  }
  // Both halves end in the meeting vertex.
  front.insert(front.end(), back.rbegin() + 1, back.rend());
  return front;
}

LineConcept to_concept(const internal::RootedTree& tree,
                       const std::vector<EndpointLine>& lines) {
  LineConcept out;
  for (const EndpointLine& line : lines) {
    if (line.frequency > 0) {
      out.add(Line(tree_path(tree, line.end[0], line.end[1])), line.frequency);
    }
  }
  return out.sorted();
}

}  // namespace

LineConcept solve_tree_fixed_freq(const Instance& instance,
                                  const FixedFrequencyObserver& observer) {
  const Graph& g = instance.graph();
  if (!g.is_tree()) throw Error(ErrorCode::kNotATree, "graph is not a tree");
  if (!instance.dfix().is_zero()) {
    throw Error(ErrorCode::kNonzeroDfix, "tree solvers require dfix = 0");
  }
  if (!instance.fixed_frequencies()) {
    throw Error(ErrorCode::kUnequalBounds, "requires fmin = fmax on every edge");
  }
  const internal::RootedTree tree = internal::root_tree(g, 0);

  LineStore store(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (instance.fmin(e) > 0) {
      store.add(g.edge(e).u, e, g.edge(e).v, e, instance.fmin(e));
    }
  }

  std::vector<char> visited(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (observer) {
      LineConcept snapshot = to_concept(tree, store.lines());
      observer({v, visited, snapshot});
    }
    auto incident = g.incident(v);
    // Local star: position i <-> incident edge i.
    std::vector<Frequency> demands;
    demands.reserve(incident.size());
    for (const Incidence& inc : incident) demands.push_back(instance.fmin(inc.edge));
    StarPairing pairing = pair_star_demands(demands);
    std::map<std::pair<EdgeId, EdgeId>, Frequency> budget;
    for (const auto& pair : pairing.pairs) {
      EdgeId a = incident[pair.first].edge;
      EdgeId b = incident[pair.second].edge;
      budget[std::minmax(a, b)] = pair.frequency;
    }

    const std::vector<std::size_t> ending_here = store.ends_at(v);
    for (std::size_t x = 0; x < ending_here.size(); ++x) {
      for (std::size_t y = x + 1; y < ending_here.size(); ++y) {
        // Re-fetch: add() may reallocate the line vector.
        EndpointLine first = store.lines()[ending_here[x]];
        EndpointLine second = store.lines()[ending_here[y]];
        if (first.frequency == 0) break;
        if (second.frequency == 0) continue;
        const int s1 = first.side_at(v);
        const int s2 = second.side_at(v);
        const EdgeId e1 = first.edge[s1];
        const EdgeId e2 = second.edge[s2];
        if (e1 == e2) continue;
        auto it = budget.find(std::minmax(e1, e2));
        if (it == budget.end() || it->second == 0) continue;
        const Frequency d =
            std::min({it->second, first.frequency, second.frequency});
        it->second -= d;
        store.lines()[ending_here[x]].frequency -= d;
        store.lines()[ending_here[y]].frequency -= d;
        store.add(first.end[1 - s1], first.edge[1 - s1], second.end[1 - s2],
                  second.edge[1 - s2], d);
      }
    }
    visited[v] = 1;
  }
  return to_concept(tree, store.lines());
}

}  // namespace lpal
