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

#ifndef LPAL_LINE_CONCEPT_H_
#define LPAL_LINE_CONCEPT_H_

#include <cstddef>
#include <map>
#include <vector>

#include "lpal/graph.h"
#include "lpal/instance.h"
#include "lpal/rational.h"

namespace lpal {

// A line is a simple path given by its vertex sequence. A single vertex is a
// zero-edge line; those only appear inside the tree dynamic program.
class Line {
 public:
  // Throws Error(kInvalidLine) if `vertices` is empty or repeats a vertex.
  explicit Line(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  int edge_count() const { return static_cast<int>(vertices_.size()) - 1; }
  bool is_zero_edge() const { return vertices_.size() == 1; }
  bool has_end_at(Vertex v) const { return front() == v || back() == v; }

  Line reversed() const;
  // Orientation with the smaller endpoint first. Two lines describe the same
  // undirected path iff their canonical forms are equal.
  Line canonical() const;

  // Edge ids along the line; throws Error(kInvalidLine) if two consecutive
  // vertices are not adjacent or a vertex is out of range.
  std::vector<EdgeId> edge_ids(const Graph& graph) const;

  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line&, const Line&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Set of distinct undirected lines with positive frequencies.
class LineConcept {
 public:
  struct Entry {
    Line line;
    Frequency frequency;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  LineConcept() = default;

  // Adds `frequency` (>= 1) units of `line`. A line that is already present,
  // in either orientation, has its frequency increased instead; returns
  // true in that case.
  bool add(const Line& line, Frequency frequency);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Frequency total_line_frequency() const;

  // Canonical orientation, entries ordered by (first end, last end, path).
  LineConcept sorted() const;
  // Copy without zero-edge lines.
  LineConcept without_zero_edge_lines() const;

  // Order-insensitive comparison of the undirected line multisets.
  friend bool operator==(const LineConcept& a, const LineConcept& b);

 private:
  std::vector<Entry> entries_;
  std::map<std::vector<Vertex>, std::size_t> index_;
};

// f^total per edge. Throws Error(kInvalidLine) for lines that are not simple
// paths in `graph`.
std::vector<Frequency> total_frequency(const LineConcept& line_concept,
                                       const Graph& graph);

struct EdgeViolation {
  EdgeId edge;
  Frequency total;
  Frequency fmin;
  Frequency fmax;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<EdgeViolation> violations;
  // Zero-edge lines make a concept unacceptable as a final answer.
  std::size_t zero_edge_lines = 0;
};

FeasibilityReport is_feasible(const LineConcept& line_concept,
                              const Instance& instance);

// dfix * |L| + sum over lines of f * (cfix + sum of edge costs).
Cost concept_cost(const LineConcept& line_concept, const Instance& instance);

// Frequency-weighted number of line ends at `v`. A zero-edge line at `v`
// contributes its frequency once.
Frequency line_ends_at(const LineConcept& line_concept, Vertex v);

}  // namespace lpal

#endif  // LPAL_LINE_CONCEPT_H_
