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

#include "lpal/star_solver.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lpal/error.h"

namespace lpal {

StarInstance::StarInstance(Instance instance) : instance_(std::move(instance)) {
  const Graph& g = instance_.graph();
  const int edges = g.edge_count();
  if (edges < 1 || g.vertex_count() != edges + 1) {
    throw Error(ErrorCode::kNotAStar, "graph is not a star K_{1,k}");
  }
  center_ = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == edges) {
      center_ = v;
      break;
    }
  }
  if (center_ < 0) {
    throw Error(ErrorCode::kNotAStar, "no vertex is adjacent to all others");
  }
  if (!instance_.dfix().is_zero()) {
    throw Error(ErrorCode::kNonzeroDfix, "star solver requires dfix = 0");
  }
}

Vertex StarInstance::leaf(EdgeId e) const {
  return instance_.graph().edge(e).other(center_);
}

StarPairing pair_star_demands(std::span<const Frequency> demands) {
  StarPairing result;
  result.singles.assign(demands.size(), 0);

  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(demands.size()); ++i) {
    if (demands[i] > 0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return demands[a] > demands[b]; });

  const int m = static_cast<int>(order.size());
  // pair[i * m + j] for sorted positions i > j.
  std::vector<Frequency> pair(static_cast<std::size_t>(m) * m, 0);
  std::vector<Frequency> single(m, 0);
  int open = -1;  // sorted position holding the only positive single

  for (int k = 0; k < m; ++k) {
    Frequency residual = demands[order[k]];
    if (open >= 0) {
      Frequency a = std::min(single[open], residual);
      single[open] -= a;
      pair[k * m + open] = a;
      residual -= a;
      if (single[open] == 0) open = -1;
    }
    for (int i = k - 1; i >= 1 && residual > 1; --i) {
      for (int j = i - 1; j >= 0 && residual > 1; --j) {
        Frequency& shared = pair[i * m + j];
        if (shared == 0) continue;
        Frequency b = std::min(shared, residual / 2);
        shared -= b;
        pair[k * m + i] += b;
        pair[k * m + j] += b;
        residual -= 2 * b;
      }
    }
    if (residual > 0) {
      single[k] = residual;
      open = k;
    }
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      if (pair[i * m + j] > 0) {
        int a = order[i];
        int b = order[j];
        result.pairs.push_back({std::min(a, b), std::max(a, b), pair[i * m + j]});
      }
    }
    result.singles[order[i]] = single[i];
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const StarPairing::Pair& x, const StarPairing::Pair& y) {
              return std::pair(x.first, x.second) < std::pair(y.first, y.second);
            });
  return result;
}

LineConcept solve_star(const StarInstance& star) {
  const Instance& instance = star.instance();
  StarPairing pairing = pair_star_demands(instance.fmin());
  LineConcept lines;
  for (const auto& pair : pairing.pairs) {
    lines.add(Line({star.leaf(pair.first), star.center(), star.leaf(pair.second)}),
              pair.frequency);
  }
  for (EdgeId e = 0; e < instance.graph().edge_count(); ++e) {
    if (pairing.singles[e] > 0) {
      lines.add(Line({star.center(), star.leaf(e)}), pairing.singles[e]);
    }
  }
  return lines.sorted();
}

std::string_view to_string(StarOptimality condition) {
  switch (condition) {
    case StarOptimality::kNoOneEdgeLine:
      return "NO_ONE_EDGE";
    case StarOptimality::kOneOneEdgeLineOfFrequencyOne:
      return "ONE_ONE_EDGE_FREQ1";
    case StarOptimality::kDominantEdge:
      return "DOMINANT_EDGE";
    case StarOptimality::kNone:
      return "NONE";
  }
  return "NONE";
}

StarOptimality optimality_condition(const LineConcept& lines,
                                    const StarInstance& star) {
  const Instance& instance = star.instance();
  std::vector<Frequency> total = total_frequency(lines, instance.graph());
  if (!std::equal(total.begin(), total.end(), instance.fmin().begin())) {
    throw Error(ErrorCode::kInfeasibleInput,
                "line concept does not cover every edge exactly fmin times");
  }
  int one_edge_lines = 0;
  Frequency one_edge_frequency = 0;
  for (const auto& entry : lines.entries()) {
    if (entry.line.is_zero_edge()) {
      throw Error(ErrorCode::kInfeasibleInput, "zero-edge line in star concept");
    }
    if (entry.line.edge_count() == 1) {
      ++one_edge_lines;
      one_edge_frequency += entry.frequency;
    }
  }
  if (one_edge_lines == 0) return StarOptimality::kNoOneEdgeLine;
  if (one_edge_lines == 1 && one_edge_frequency == 1) {
    return StarOptimality::kOneOneEdgeLineOfFrequencyOne;
  }
  const Frequency demand =
      std::accumulate(instance.fmin().begin(), instance.fmin().end(),
                      Frequency{0});
  const Frequency line_frequency = lines.total_line_frequency();
  for (Frequency fmin : instance.fmin()) {
    if (fmin > demand - fmin && line_frequency == fmin) {
      return StarOptimality::kDominantEdge;
    }
  }
  return StarOptimality::kNone;
}

}  // namespace lpal
