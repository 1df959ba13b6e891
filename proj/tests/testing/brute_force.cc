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

#include "testing/brute_force.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lpal::testing {

Frequency star_min_line_frequency(const std::vector<Frequency>& demands) {
  const int k = static_cast<int>(demands.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});
  }
  std::vector<Frequency> left = demands;
  Frequency best_paired = 0;
  // Leaves not fully used by two-edge lines are finished with one-edge lines,
  // so the total is sum(demands) - (two-edge frequency).
  std::function<void(std::size_t, Frequency)> go = [&](std::size_t i,
                                                       Frequency paired) {
    if (i == pairs.size()) {
      best_paired = std::max(best_paired, paired);
      return;
    }
    auto [a, b] = pairs[i];
    for (Frequency f = 0; f <= std::min(left[a], left[b]); ++f) {
      left[a] -= f;
      left[b] -= f;
      go(i + 1, paired + f);
      left[a] += f;
      left[b] += f;
    }
  };
  go(0, 0);
  const Frequency total = std::accumulate(demands.begin(), demands.end(),
                                          Frequency{0});
  return total - best_paired;
}

namespace {

bool assign_groups(const std::vector<std::int64_t>& values, std::size_t i,
                   std::vector<std::int64_t>& sums, std::vector<int>& sizes,
                   std::int64_t target, int fixed_size) {
  if (i == values.size()) {
    for (std::size_t g = 0; g < sums.size(); ++g) {
      if (sums[g] != target) return false;
      if (fixed_size > 0 && sizes[g] != fixed_size) return false;
    }
    return true;
  }
  for (std::size_t g = 0; g < sums.size(); ++g) {
    if (sums[g] + values[i] > target) continue;
    if (fixed_size > 0 && sizes[g] == fixed_size) continue;
    sums[g] += values[i];
    ++sizes[g];
    const bool ok = assign_groups(values, i + 1, sums, sizes, target, fixed_size);
    sums[g] -= values[i];
    --sizes[g];
    if (ok) return true;
  }
  return false;
}

bool partition_into(const std::vector<std::int64_t>& values, int p,
                    int fixed_size) {
  const std::int64_t total =
      std::accumulate(values.begin(), values.end(), std::int64_t{0});
  if (total % p != 0) return false;
  std::vector<std::int64_t> sums(p, 0);
  std::vector<int> sizes(p, 0);
  return assign_groups(values, 0, sums, sizes, total / p, fixed_size);
}

}  // namespace

bool has_three_partition(const std::vector<std::int64_t>& values, int p) {
  return values.size() == 3 * static_cast<std::size_t>(p) &&
         partition_into(values, p, 3);
}

bool has_equal_sum_groups(const std::vector<std::int64_t>& values, int p) {
  return partition_into(values, p, 0);
}

std::vector<std::vector<Vertex>> paths_by_permutation(const Graph& graph) {
  const int n = graph.vertex_count();
  std::set<std::vector<Vertex>> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> seq;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) seq.push_back(v);
    }
    if (seq.size() < 2) continue;
    do {
      bool is_path = true;
      for (std::size_t i = 0; i + 1 < seq.size() && is_path; ++i) {
        is_path = graph.find_edge(seq[i], seq[i + 1]).has_value();
      }
      if (!is_path) continue;
      std::vector<Vertex> canonical = seq;
      if (canonical.front() > canonical.back()) {
        std::reverse(canonical.begin(), canonical.end());
      }
      found.insert(canonical);
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return {found.begin(), found.end()};
}

std::optional<Cost> exhaustive_min_cost(const Instance& instance,
                                        Frequency max_frequency) {
  const Graph& g = instance.graph();
  const auto paths = paths_by_permutation(g);
  std::vector<Frequency> f(paths.size(), 0);
  std::optional<Cost> best;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == paths.size()) {
      std::vector<Frequency> total(g.edge_count(), 0);
      Cost cost = 0;
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (f[j] == 0) continue;
        Cost line_cost = instance.cfix();
        for (std::size_t t = 0; t + 1 < paths[j].size(); ++t) {
          const EdgeId e = *g.find_edge(paths[j][t], paths[j][t + 1]);
          total[e] += f[j];
          line_cost += instance.edge_cost(e);
        }
        cost += instance.dfix() + line_cost * Cost(f[j]);
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (total[e] < instance.fmin(e) || total[e] > instance.fmax(e)) return;
      }
      if (!best || cost < *best) best = cost;
      return;
    }
    for (Frequency x = 0; x <= max_frequency; ++x) {
      f[i] = x;
      go(i + 1);
    }
    f[i] = 0;
  };
  go(0);
  return best;
}

}  // namespace lpal::testing
