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

#include "lpal/line_concept.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "lpal/error.h"

namespace lpal {

Line::Line(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw Error(ErrorCode::kInvalidLine, "line without vertices");
  }
  std::unordered_set<Vertex> seen;
  seen.reserve(vertices_.size());
  for (Vertex v : vertices_) {
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::kInvalidLine,
                  "line visits vertex " + std::to_string(v) + " twice");
    }
  }
}

Line Line::reversed() const {
  return Line(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

Line Line::canonical() const {
  return back() < front() ? reversed() : *this;
}

std::vector<EdgeId> Line::edge_ids(const Graph& graph) const {
  for (Vertex v : vertices_) {
    if (v < 0 || v >= graph.vertex_count()) {
      throw Error(ErrorCode::kInvalidLine,
                  "line vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<EdgeId> ids;
  ids.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    auto e = graph.find_edge(vertices_[i], vertices_[i + 1]);
    if (!e) {
      throw Error(ErrorCode::kInvalidLine,
                  "vertices " + std::to_string(vertices_[i]) + " and " +
                      std::to_string(vertices_[i + 1]) + " are not adjacent");
    }
    ids.push_back(*e);
  }
  return ids;
}

bool LineConcept::add(const Line& line, Frequency frequency) {
  if (frequency < 1) {
    throw Error(ErrorCode::kInvalidLine, "line frequency must be positive");
  }
  Line canon = line.canonical();
  std::vector<Vertex> key(canon.vertices().begin(), canon.vertices().end());
  auto [it, inserted] = index_.emplace(std::move(key), entries_.size());
  if (inserted) {
    entries_.push_back({line, frequency});
    return false;
  }
  Frequency& f = entries_[it->second].frequency;
  f = checked_add(f, frequency);
  return true;
}

Frequency LineConcept::total_line_frequency() const {
  Frequency sum = 0;
  for (const Entry& entry : entries_) sum = checked_add(sum, entry.frequency);
  return sum;
}

LineConcept LineConcept::sorted() const {
  std::vector<Entry> canon;
  canon.reserve(entries_.size());
  for (const Entry& entry : entries_) {
    canon.push_back({entry.line.canonical(), entry.frequency});
  }
  std::sort(canon.begin(), canon.end(), [](const Entry& a, const Entry& b) {
    if (a.line.front() != b.line.front()) return a.line.front() < b.line.front();
    if (a.line.back() != b.line.back()) return a.line.back() < b.line.back();
    return a.line < b.line;
  });
  LineConcept out;
  for (const Entry& entry : canon) out.add(entry.line, entry.frequency);
  return out;
}

LineConcept LineConcept::without_zero_edge_lines() const {
  LineConcept out;
  for (const Entry& entry : entries_) {
    if (!entry.line.is_zero_edge()) out.add(entry.line, entry.frequency);
  }
  return out;
}

bool operator==(const LineConcept& a, const LineConcept& b) {
  return a.sorted().entries_ == b.sorted().entries_;
}

std::vector<Frequency> total_frequency(const LineConcept& line_concept,
                                       const Graph& graph) {
  std::vector<Frequency> total(graph.edge_count(), 0);
  for (const auto& entry : line_concept.entries()) {
    for (EdgeId e : entry.line.edge_ids(graph)) {
      total[e] = checked_add(total[e], entry.frequency);
    }
  }
  return total;
}

FeasibilityReport is_feasible(const LineConcept& line_concept,
                              const Instance& instance) {
  FeasibilityReport report;
  std::vector<Frequency> total = total_frequency(line_concept, instance.graph());
  for (EdgeId e = 0; e < instance.graph().edge_count(); ++e) {
    if (total[e] < instance.fmin(e) || total[e] > instance.fmax(e)) {
      report.violations.push_back(
          {e, total[e], instance.fmin(e), instance.fmax(e)});
    }
  }
  for (const auto& entry : line_concept.entries()) {
    if (entry.line.is_zero_edge()) ++report.zero_edge_lines;
  }
  report.feasible = report.violations.empty() && report.zero_edge_lines == 0;
  return report;
}

Cost concept_cost(const LineConcept& line_concept, const Instance& instance) {
  Cost cost =
      instance.dfix() * Rational(static_cast<std::int64_t>(line_concept.size()));
  for (const auto& entry : line_concept.entries()) {
    Rational line_cost = instance.cfix();
    for (EdgeId e : entry.line.edge_ids(instance.graph())) {
      line_cost += instance.edge_cost(e);
    }
    cost += line_cost * Rational(entry.frequency);
  }
  return cost;
}

Frequency line_ends_at(const LineConcept& line_concept, Vertex v) {
  Frequency ends = 0;
  for (const auto& entry : line_concept.entries()) {
    if (entry.line.has_end_at(v)) ends = checked_add(ends, entry.frequency);
  }
  return ends;
}

}  // namespace lpal
