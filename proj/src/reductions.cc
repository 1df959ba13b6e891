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

#include "lpal/reductions.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "lpal/error.h"

namespace lpal {
namespace {

std::int64_t sum_of(const std::vector<std::int64_t>& values) {
  std::int64_t s = 0;
  for (std::int64_t v : values) s = checked_add(s, v);
  return s;
}

std::vector<Vertex> vertex_range(Vertex from, Vertex to) {
  std::vector<Vertex> out(to - from + 1);
  std::iota(out.begin(), out.end(), from);
  return out;
}

}  // namespace

ThreePartitionInstance::ThreePartitionInstance(std::vector<std::int64_t> values,
                                               int p)
    : values_(std::move(values)), p_(p) {
  if (p_ < 1 || values_.size() != 3 * static_cast<std::size_t>(p_)) {
    throw Error(ErrorCode::kInvalidInstance, "3-Partition needs 3p values");
  }
  for (std::int64_t v : values_) {
    if (v <= 0) {
      throw Error(ErrorCode::kInvalidInstance, "values must be positive");
    }
  }
  const std::int64_t total = sum_of(values_);
  if (total % p_ != 0) {
    throw Error(ErrorCode::kNotDivisible,
                "sum " + std::to_string(total) + " is not divisible by " +
                    std::to_string(p_));
  }
  h_ = total / p_;
}

DecisionInstance three_partition_to_path(const ThreePartitionInstance& tp) {
  const int p = tp.p();
  const int n = 4 * p;
  std::vector<EdgeSpec> edges;
  edges.reserve(n - 1);
  std::int64_t load = 0;
  for (int i = 0; i + 1 < n; ++i) {
    // Edge between v_j and v_{j+1}.
    const int j = i - p + 1;
    if (j <= 0) {
      load = checked_add(load, tp.h());
    } else {
      load -= tp.values()[j - 1];
    }
    edges.push_back({i, i + 1, 0, load, load});
  }
  return {Instance(n, 1, 0, edges), 3 * p};
}

LineConcept three_partition_solution_to_concept(
    const ThreePartitionInstance& tp,
    const std::vector<std::vector<int>>& groups) {
  const int p = tp.p();
  const int count = static_cast<int>(tp.values().size());
  if (static_cast<int>(groups.size()) != p) {
    throw Error(ErrorCode::kBadPartition, "expected p groups");
  }
  std::vector<char> used(count, 0);
  LineConcept out;
  for (int k = 1; k <= p; ++k) {
    std::int64_t sum = 0;
    for (int index : groups[k - 1]) {
      if (index < 0 || index >= count || used[index]) {
        throw Error(ErrorCode::kBadPartition,
                    "index " + std::to_string(index) + " invalid or repeated");
      }
      used[index] = 1;
      sum += tp.values()[index];
      out.add(Line(vertex_range(p - k, index + p)), tp.values()[index]);
    }
    if (sum != tp.h()) {
      throw Error(ErrorCode::kBadPartition,
                  "group " + std::to_string(k) + " sums to " +
                      std::to_string(sum));
    }
  }
  if (std::count(used.begin(), used.end(), 0) != 0) {
    throw Error(ErrorCode::kBadPartition, "some values are not in any group");
  }
  return out.sorted();
}

PmppInstance::PmppInstance(std::vector<std::int64_t> values, std::int64_t k)
    : values_(std::move(values)), k_(k) {
  if (k_ < 0) throw Error(ErrorCode::kInvalidInstance, "K must be nonnegative");
  std::set<std::int64_t> seen;
  for (std::int64_t v : values_) {
    if (v <= 0) {
      throw Error(ErrorCode::kInvalidInstance, "values must be positive");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::kInvalidInstance,
                  "duplicate value " + std::to_string(v));
    }
  }
}

bool is_valid_pmpp_solution(const PmppSolution& solution,
                            const PmppInstance& pmpp) {
  if (static_cast<std::int64_t>(solution.pairs.size()) != pmpp.k()) return false;
  std::set<std::int64_t> available(pmpp.values().begin(), pmpp.values().end());
  for (const PmppPair& pair : solution.pairs) {
    if (pair.a.empty() || pair.b.empty()) return false;
    for (const auto* side : {&pair.a, &pair.b}) {
      for (std::int64_t v : *side) {
        if (available.erase(v) == 0) return false;
      }
    }
    if (sum_of(pair.a) != sum_of(pair.b)) return false;
  }
  return true;
}

DecisionInstance pmpp_to_star(const PmppInstance& pmpp) {
  const int m = static_cast<int>(pmpp.values().size());
  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i) {
    const Frequency x = pmpp.values()[i - 1];
    edges.push_back({0, i, 0, x, x});
  }
  return {Instance(m + 1, 1, 0, edges), Cost(m - pmpp.k())};
}

LineConcept pmpp_solution_to_concept(const PmppSolution& solution,
                                     const Instance& star) {
  const Graph& g = star.graph();
  std::map<std::int64_t, Vertex> leaf_of;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.u != 0 || !star.fixed_frequencies()) {
      throw Error(ErrorCode::kInvalidSolution, "not a star built from PMPP");
    }
    leaf_of[star.fmin(e)] = edge.v;
  }
  std::vector<std::int64_t> values;
  for (const auto& [value, leaf] : leaf_of) values.push_back(value);
  if (!is_valid_pmpp_solution(
          solution, PmppInstance(values, static_cast<std::int64_t>(
                                             solution.pairs.size())))) {
    throw Error(ErrorCode::kInvalidSolution,
                "solution does not match the star's frequencies");
  }

  struct Item {
    std::int64_t value;
    Vertex leaf;
  };
  const auto items = [&](const std::vector<std::int64_t>& side) {
    std::vector<Item> out;
    for (std::int64_t v : side) out.push_back({v, leaf_of.at(v)});
    return out;
  };
  const auto take_min = [](std::vector<Item>& side) {
    return std::min_element(side.begin(), side.end(),
                            [](const Item& x, const Item& y) {
                              return x.value < y.value;
                            });
  };

  LineConcept out;
  std::vector<char> covered(g.vertex_count(), 0);
  for (const PmppPair& pair : solution.pairs) {
    std::vector<Item> a = items(pair.a);
    std::vector<Item> b = items(pair.b);
    while (!a.empty() && !b.empty()) {
      auto x = take_min(a);
      auto y = take_min(b);
      covered[x->leaf] = covered[y->leaf] = 1;
      const std::int64_t f = std::min(x->value, y->value);
      out.add(Line({x->leaf, 0, y->leaf}), f);
      x->value -= f;
      y->value -= f;
      if (x->value == 0) a.erase(x);
      if (y->value == 0) b.erase(y);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Vertex leaf = g.edge(e).v;
    if (!covered[leaf]) out.add(Line({leaf, 0}), star.fmin(e));
  }
  return out.sorted();
}

std::optional<PmppSolution> brute_force_pmpp(const PmppInstance& pmpp) {
  const std::vector<std::int64_t>& x = pmpp.values();
  const int m = static_cast<int>(x.size());
  if (m > 12) throw Error(ErrorCode::kTooLarge, "brute force limited to 12 values");
  if (pmpp.k() == 0) return PmppSolution{};
  if (2 * pmpp.k() > m) return std::nullopt;

  const unsigned full = 1u << m;
  std::vector<std::int64_t> sum(full, 0);
  for (unsigned s = 1; s < full; ++s) {
    const int low = __builtin_ctz(s);
    sum[s] = sum[s & (s - 1)] + x[low];
  }
  // split[s]: a nonempty proper subset of s with half the sum, or 0.
  std::vector<unsigned> split(full, 0);
  std::vector<unsigned> blocks;
  for (unsigned s = 1; s < full; ++s) {
    if (sum[s] % 2 != 0) continue;
    for (unsigned a = (s - 1) & s; a != 0; a = (a - 1) & s) {
      if (2 * sum[a] == sum[s]) {
        split[s] = a;
        blocks.push_back(s);
        break;
      }
    }
  }

  std::set<std::pair<unsigned, std::int64_t>> dead;
  std::vector<unsigned> chosen;
  const auto search_all = [&](auto&& self, unsigned used,
                              std::int64_t need) -> bool {
    if (need == 0) return true;
    if (dead.count({used, need}) != 0) return false;
    for (unsigned block : blocks) {
      if ((block & used) != 0) continue;
      chosen.push_back(block);
      if (self(self, used | block, need - 1)) return true;
      chosen.pop_back();
    }
    dead.insert({used, need});
    return false;
  };
  if (!search_all(search_all, 0u, pmpp.k())) return std::nullopt;

  PmppSolution out;
  for (unsigned block : chosen) {
    PmppPair pair;
    for (int i = 0; i < m; ++i) {
      if ((block >> i & 1u) == 0) continue;
      ((split[block] >> i & 1u) ? pair.a : pair.b).push_back(x[i]);
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

PartialLatinSquare::PartialLatinSquare(std::vector<std::vector<int>> cells)
    : cells_(std::move(cells)) {
  const int p = static_cast<int>(cells_.size());
  if (p == 0) throw Error(ErrorCode::kInvalidInstance, "empty square");
  for (const auto& row : cells_) {
    if (static_cast<int>(row.size()) != p) {
      throw Error(ErrorCode::kInvalidInstance, "square is not p x p");
    }
  }
  for (int i = 0; i < p; ++i) {
    std::vector<char> in_row(p + 1, 0);
    std::vector<char> in_column(p + 1, 0);
    for (int j = 0; j < p; ++j) {
      for (auto [colour, seen] : {std::pair{cells_[i][j], &in_row},
                                  std::pair{cells_[j][i], &in_column}}) {
        if (colour < 0 || colour > p) {
          throw Error(ErrorCode::kInvalidInstance,
                      "colour " + std::to_string(colour) + " out of range");
        }
        if (colour == 0) continue;
        if ((*seen)[colour]) {
          throw Error(ErrorCode::kInvalidInstance,
                      "colour " + std::to_string(colour) + " repeats");
        }
        (*seen)[colour] = 1;
      }
    }
  }
}

int PartialLatinSquare::empty_cells() const {
  int count = 0;
  for (const auto& row : cells_) count += static_cast<int>(std::count(row.begin(), row.end(), 0));
  return count;
}

LatinSquareEncoding plsc_to_pmpp(const PartialLatinSquare& square) {
  const int p = square.p();
  const std::int64_t q = 6 * static_cast<std::int64_t>(p) - 2;
  const std::int64_t q2 = checked_mul(q, q);
  std::vector<EncodedNumber> numbers;
  for (int k = 1; k <= p; ++k) {
    std::vector<char> present(p + 1, 0);
    for (int l = 1; l <= p; ++l) present[square.at(k - 1, l - 1)] = 1;
    for (int c = 1; c <= p; ++c) {
      if (present[c]) continue;
      numbers.push_back({EncodedNumber::Kind::kRowColour, k, 0, c,
                         q * (2 * k - 1) - (2 * c - 1)});
    }
  }
  for (int l = 1; l <= p; ++l) {
    std::vector<char> present(p + 1, 0);
    for (int k = 1; k <= p; ++k) present[square.at(k - 1, l - 1)] = 1;
    for (int c = 1; c <= p; ++c) {
      if (present[c]) continue;
      numbers.push_back({EncodedNumber::Kind::kColumnColour, 0, l, c,
                         checked_add(checked_mul(q2, 2 * l - 1), 2 * c - 1)});
    }
  }
  for (int k = 1; k <= p; ++k) {
    for (int l = 1; l <= p; ++l) {
      if (square.at(k - 1, l - 1) != 0) continue;
      numbers.push_back({EncodedNumber::Kind::kCell, k, l, 0,
                         checked_add(checked_mul(q2, 2 * l - 1),
                                     checked_mul(q, 2 * k - 1))});
    }
  }
  std::vector<std::int64_t> values;
  std::set<std::int64_t> seen;
  for (const EncodedNumber& number : numbers) {
    if (!seen.insert(number.value).second) {
      throw Error(ErrorCode::kCollisionDetected,
                  "value " + std::to_string(number.value) + " produced twice");
    }
    values.push_back(number.value);
  }
  return {PmppInstance(std::move(values), square.empty_cells()),
          std::move(numbers)};
}

DecisionInstance lift_fmax(const Instance& instance, const Cost& k) {
  if (!instance.cfix().is_zero() || !instance.fixed_frequencies()) {
    throw Error(ErrorCode::kHypothesisViolated,
                "lifting needs cfix = 0 and fmin = fmax");
  }
  for (const Rational& c : instance.edge_cost()) {
    if (!c.is_zero()) {
      throw Error(ErrorCode::kHypothesisViolated, "lifting needs c = 0");
    }
  }
  const Cost edge_cost = k + Cost(1);
  std::vector<EdgeSpec> edges = instance.edge_specs();
  Cost demand = 0;
  for (EdgeSpec& e : edges) {
    e.cost = edge_cost;
    e.fmax = kInfiniteFrequency;
    demand += Cost(e.fmin);
  }
  return {Instance(instance.graph().vertex_count(), instance.dfix(), 0, edges),
          k + edge_cost * demand};
}

std::vector<Antenna> find_antennae(const Instance& instance) {
  const Graph& g = instance.graph();
  std::vector<Antenna> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (instance.fmin(e) != 1) continue;
    Vertex ends[2] = {std::min(g.edge(e).u, g.edge(e).v),
                      std::max(g.edge(e).u, g.edge(e).v)};
    for (int side = 0; side < 2; ++side) {
      if (g.degree(ends[side]) == 1) out.push_back({e, ends[side], ends[1 - side]});
    }
  }
  return out;
}

bool is_nice(const Instance& instance) {
  return find_antennae(instance).size() == 2;
}

Instance instance_product(const Instance& inner, const Instance& outer) {
  if (inner.dfix() != outer.dfix() || inner.cfix() != outer.cfix()) {
    throw Error(ErrorCode::kHypothesisViolated,
                "factors must share dfix and cfix");
  }
  const std::vector<Antenna> inner_antennae = find_antennae(inner);
  if (inner_antennae.size() != 2 || !is_nice(outer)) {
    throw Error(ErrorCode::kNotNice, "both factors need exactly two antennae");
  }
  const Vertex tip_u = inner_antennae[0].tip;
  const Vertex tip_v = inner_antennae[1].tip;
  const Graph& ig = inner.graph();
  const Graph& og = outer.graph();

  int next = og.vertex_count();
  std::vector<EdgeSpec> edges;
  for (const EdgeSpec& spec : outer.edge_specs()) {
    if (spec.fmin != 1) {
      edges.push_back(spec);
      continue;
    }
    std::vector<Vertex> map(ig.vertex_count());
    for (Vertex w = 0; w < ig.vertex_count(); ++w) {
      if (w == tip_u) {
        map[w] = spec.u;
      } else if (w == tip_v) {
        map[w] = spec.v;
      } else {
        map[w] = next++;
      }
    }
    for (EdgeSpec copy : inner.edge_specs()) {
      copy.u = map[copy.u];
      copy.v = map[copy.v];
      edges.push_back(copy);
    }
  }
  Instance product(next, outer.dfix(), outer.cfix(), edges);
  if (!is_nice(product)) {
    throw Error(ErrorCode::kNotNice, "product is not nice");
  }
  return product;
}

}  // namespace lpal
