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

#include "lpal/exact_oracle.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "lpal/error.h"

namespace lpal {
namespace {

using Scaled = std::int64_t;
constexpr Scaled kNoCost = std::numeric_limits<Scaled>::max();
constexpr Frequency kUnbounded = std::numeric_limits<Frequency>::max();

void extend_paths(const Graph& graph, std::vector<Vertex>& path,
                  std::vector<char>& on_path, std::size_t max_paths,
                  PathCatalog& out) {
  const Vertex start = path.front();
  for (const Incidence& inc : graph.incident(path.back())) {
    const Vertex w = inc.neighbor;
    if (on_path[w]) continue;
    path.push_back(w);
    on_path[w] = 1;
    if (w > start) {
      if (out.size() == max_paths) {
        throw Error(ErrorCode::kTooLarge,
                    "more than " + std::to_string(max_paths) + " simple paths");
      }
      out.emplace_back(path);
    }
    extend_paths(graph, path, on_path, max_paths, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

Frequency saturating_add(Frequency a, Frequency b) {
  Frequency out;
  if (__builtin_add_overflow(a, b, &out)) return kUnbounded;
  return out;
}

Scaled floor_div(Scaled num, Scaled den) {
  Scaled q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

struct SearchPath {
  Line line;
  std::vector<EdgeId> edges;
  Scaled unit_cost;  // cfix + sum of edge costs, scaled
  Frequency cap;
  // Edges for which this is the last path in search order.
  std::vector<EdgeId> closes;
};

class Search {
 public:
  Search(const Instance& instance, const OracleConfig& config)
      : instance_(instance), graph_(instance.graph()) {
    if (config.max_vertices < 1) {
      throw Error(ErrorCode::kInvalidInstance, "max_vertices must be positive");
    }
    if (graph_.vertex_count() > config.max_vertices) {
      throw Error(ErrorCode::kTooLarge,
                  "oracle limited to " + std::to_string(config.max_vertices) +
                      " vertices");
    }
    if (config.time_budget) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      *config.time_budget);
      has_deadline_ = true;
    }

    scale_ = lcm_checked(instance.dfix().den(), instance.cfix().den());
    for (const Rational& c : instance.edge_cost()) {
      scale_ = lcm_checked(scale_, c.den());
    }
    dfix_ = scaled(instance.dfix());
    cfix_ = scaled(instance.cfix());
    const int m = graph_.edge_count();
    edge_cost_.resize(m);
    for (EdgeId e = 0; e < m; ++e) edge_cost_[e] = scaled(instance.edge_cost(e));

    Frequency demand_sum = 0;
    for (Frequency f : instance.fmin()) demand_sum = saturating_add(demand_sum, f);

    for (Line& line : enumerate_simple_paths(graph_, config.max_paths)) {
      SearchPath p{std::move(line), {}, cfix_, kUnbounded, {}};
      p.edges = p.line.edge_ids(graph_);
      Frequency auto_cap = kUnbounded;
      for (EdgeId e : p.edges) {
        p.unit_cost = checked_add(p.unit_cost, edge_cost_[e]);
        if (!is_infinite(instance.fmax(e))) {
          auto_cap = std::min(auto_cap, instance.fmax(e));
        }
      }
      if (auto_cap == kUnbounded) auto_cap = demand_sum;
      p.cap = config.frequency_cap ? *config.frequency_cap : auto_cap;
      paths_.push_back(std::move(p));
    }
    // Group paths by their lowest edge so that edges are closed early, longer
    // paths first within a group.
    std::stable_sort(paths_.begin(), paths_.end(),
                     [](const SearchPath& a, const SearchPath& b) {
                       const EdgeId ka = *std::min_element(a.edges.begin(),
                                                           a.edges.end());
                       const EdgeId kb = *std::min_element(b.edges.begin(),
                                                           b.edges.end());
                       if (ka != kb) return ka < kb;
                       return a.edges.size() > b.edges.size();
                     });
    std::vector<int> last(m, -1);
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
      for (EdgeId e : paths_[i].edges) last[e] = i;
    }
    for (EdgeId e = 0; e < m; ++e) {
      if (last[e] >= 0) paths_[last[e]].closes.push_back(e);
    }

    total_.assign(m, 0);
    remaining_.assign(m, 0);
    for (const SearchPath& p : paths_) {
      for (EdgeId e : p.edges) ++remaining_[e];
    }
    frequency_.assign(paths_.size(), 0);
  }

  Scaled scaled(const Rational& value) const {
    return checked_mul(value.num(), scale_ / value.den());
  }

  std::int64_t scale() const { return scale_; }

  // One-edge lines at fmin; nullopt if the frequency cap forbids it.
  std::optional<Scaled> trivial_cost(LineConcept* lines) const {
    Scaled cost = 0;
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      const Frequency f = instance_.fmin(e);
      if (f == 0) continue;
      const auto it = std::find_if(
          paths_.begin(), paths_.end(), [e](const SearchPath& p) {
            return p.edges.size() == 1 && p.edges[0] == e;
          });
      if (f > it->cap) return std::nullopt;
      cost = checked_add(cost, checked_add(dfix_, checked_mul(f, it->unit_cost)));
      if (lines) lines->add(it->line, f);
    }
    return cost;
  }

  // Minimizes; returns kNoCost if nothing beats `incumbent`.
  Scaled minimize(Scaled incumbent) {
    best_ = incumbent;
    threshold_ = kNoCost;
    found_ = false;
    descend(0, 0);
    return found_ ? best_ : kNoCost;
  }

  // True iff some concept costs at most `threshold`.
  bool decide(Scaled threshold) {
    best_ = kNoCost;
    threshold_ = threshold;
    found_ = false;
    descend(0, 0);
    return found_;
  }

  const LineConcept& best_lines() const { return best_lines_; }

 private:
  Frequency residual_demand(EdgeId e) const {
    return std::max<Frequency>(instance_.fmin(e) - total_[e], 0);
  }

  Frequency residual_capacity(EdgeId e) const {
    if (remaining_[e] == 0) return 0;
    const Frequency fmax = instance_.fmax(e);
    return is_infinite(fmax) ? kUnbounded : fmax - total_[e];
  }

  // Lower bound on the cost of any completion; kNoCost if none exists.
  Scaled lower_bound(Scaled cost) const {
    const int m = graph_.edge_count();
    Scaled bound = cost;
    Frequency max_demand = 0;
    for (EdgeId e = 0; e < m; ++e) {
      const Frequency r = residual_demand(e);
      if (r > residual_capacity(e)) return kNoCost;
      max_demand = std::max(max_demand, r);
      bound = checked_add(bound, checked_mul(r, edge_cost_[e]));
    }
    if (max_demand == 0) return bound;

    // Future line ends forced at each vertex: an edge's demand that the other
    // incident edges cannot absorb, or an odd forced total.
    Frequency ends = 0;
    int vertices_with_ends = 0;
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
      Frequency capacity_sum = 0;
      Frequency demand_sum = 0;
      int unbounded = 0;
      bool all_forced = true;
      for (const Incidence& inc : graph_.incident(v)) {
        const Frequency cap = residual_capacity(inc.edge);
        const Frequency r = residual_demand(inc.edge);
        if (cap == kUnbounded) {
          ++unbounded;
        } else {
          capacity_sum += cap;
        }
        demand_sum += r;
        if (r != cap) all_forced = false;
      }
      Frequency need = 0;
      for (const Incidence& inc : graph_.incident(v)) {
        const Frequency cap = residual_capacity(inc.edge);
        const int others_unbounded = unbounded - (cap == kUnbounded ? 1 : 0);
        if (others_unbounded > 0) continue;
        const Frequency others =
            capacity_sum - (cap == kUnbounded ? 0 : cap);
        need = std::max(need, residual_demand(inc.edge) - others);
      }
      if (need == 0 && all_forced && demand_sum % 2 == 1) need = 1;
      if (need > 0) {
        ends += need;
        ++vertices_with_ends;
      }
    }
    const Frequency units = std::max(max_demand, (ends + 1) / 2);
    const Frequency lines = std::max(1, (vertices_with_ends + 1) / 2);
    bound = checked_add(bound, checked_mul(units, cfix_));
    bound = checked_add(bound, checked_mul(lines, dfix_));
    return bound;
  }

  bool prune(Scaled bound) const {
    if (bound == kNoCost) return true;
    if (threshold_ != kNoCost) return bound > threshold_;
    return bound >= best_;
  }

  void check_clock() {
    if (!has_deadline_ || (++nodes_ & 1023) != 0) return;
    if (std::chrono::steady_clock::now() > deadline_) {
      throw Error(ErrorCode::kTimeout, "oracle time budget exhausted");
    }
  }

  // Returns true when the search should stop.
  bool descend(std::size_t i, Scaled cost) {
    check_clock();
    if (i == paths_.size()) {
      if (threshold_ != kNoCost) {
        if (cost > threshold_) return false;
        found_ = true;
        return true;
      }
      if (cost < best_) {
        best_ = cost;
        found_ = true;
        best_lines_ = LineConcept();
        for (std::size_t j = 0; j < paths_.size(); ++j) {
          if (frequency_[j] > 0) best_lines_.add(paths_[j].line, frequency_[j]);
        }
      }
      return false;
    }
    const SearchPath& p = paths_[i];
    Frequency lo = 0;
    for (EdgeId e : p.closes) lo = std::max(lo, residual_demand(e));
    // A line that overshoots fmin on every one of its edges can lose a unit
    // without breaking feasibility or raising the cost.
    Frequency hi = 0;
    for (EdgeId e : p.edges) {
      hi = std::max(hi, residual_demand(e));
    }
    hi = std::min(hi, p.cap);
    for (EdgeId e : p.edges) hi = std::min(hi, residual_capacity(e));
    if (lo > hi) return false;

    for (EdgeId e : p.edges) --remaining_[e];
    bool stop = false;
    for (Frequency f = hi; f >= lo && !stop; --f) {
      for (EdgeId e : p.edges) total_[e] += f;
      frequency_[i] = f;
      Scaled next = cost;
      if (f > 0) {
        next = checked_add(next, checked_add(dfix_, checked_mul(f, p.unit_cost)));
      }
      if (!prune(lower_bound(next))) stop = descend(i + 1, next);
      for (EdgeId e : p.edges) total_[e] -= f;
    }
    frequency_[i] = 0;
    for (EdgeId e : p.edges) ++remaining_[e];
    return stop;
  }

  const Instance& instance_;
  const Graph& graph_;
  std::int64_t scale_ = 1;
  Scaled dfix_ = 0;
  Scaled cfix_ = 0;
  std::vector<Scaled> edge_cost_;
  std::vector<SearchPath> paths_;

  std::vector<Frequency> total_;
  std::vector<int> remaining_;
  std::vector<Frequency> frequency_;

  Scaled best_ = kNoCost;
  Scaled threshold_ = kNoCost;
  bool found_ = false;
  LineConcept best_lines_;

  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PathCatalog enumerate_simple_paths(const Graph& graph, std::size_t max_paths) {
  PathCatalog out;
  std::vector<char> on_path(graph.vertex_count(), 0);
  for (Vertex s = 0; s < graph.vertex_count(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = 1;
    extend_paths(graph, path, on_path, max_paths, out);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Line& a, const Line& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return a < b;
  });
  return out;
}

OracleResult oracle_solve(const Instance& instance, const OracleConfig& config) {
  Search search(instance, config);
  LineConcept trivial;
  const std::optional<Scaled> seed = search.trivial_cost(&trivial);
  const Scaled improved = search.minimize(seed ? *seed : kNoCost);
  if (improved != kNoCost) {
    return {Rational(improved, search.scale()), search.best_lines().sorted()};
  }
  if (!seed) throw Error(ErrorCode::kInfeasible, "no feasible line concept");
  return {Rational(*seed, search.scale()), trivial.sorted()};
}

bool oracle_decide(const Instance& instance, const Cost& threshold,
                   const OracleConfig& config) {
  Search search(instance, config);
  const std::optional<Scaled> seed = search.trivial_cost(nullptr);
  if (!seed) return oracle_solve(instance, config).cost <= threshold;
  const Rational limit = threshold * Rational(search.scale());
  const Scaled scaled_limit = floor_div(limit.num(), limit.den());
  if (*seed <= scaled_limit) return true;
  if (scaled_limit < 0) return false;
  return search.decide(scaled_limit);
}

}  // namespace lpal
