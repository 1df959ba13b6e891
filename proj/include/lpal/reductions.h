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

// Instance transformations between line planning and classic number /
// colouring problems. They generate hard test instances and let the exact
// oracle confirm that yes/no answers carry over.

#ifndef LPAL_REDUCTIONS_H_
#define LPAL_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"

namespace lpal {

// Instance together with the cost threshold of its decision question.
struct DecisionInstance {
  Instance instance;
  Cost threshold;
};

// A multiset of 3p positive integers to be split into p groups of sum h.
class ThreePartitionInstance {
 public:
  // Throws Error(kNotDivisible) unless sum(values) is a multiple of p, and
  // Error(kInvalidInstance) for nonpositive values or sizes other than 3p.
  ThreePartitionInstance(std::vector<std::int64_t> values, int p);

  const std::vector<std::int64_t>& values() const { return values_; }
  int p() const { return p_; }
  std::int64_t h() const { return h_; }

 private:
  std::vector<std::int64_t> values_;
  int p_;
  std::int64_t h_;
};

// Path v_{1-p} .. v_{3p} (vertex ids 0 .. 4p-1, left to right) whose fixed
// edge frequencies are prefix sums of h (p times) then -x_1, ..., -x_{3p}.
// dfix = 1, cfix = 0, c = 0; threshold 3p.
DecisionInstance three_partition_to_path(const ThreePartitionInstance& tp);

// Lines for a partition given as p groups of indices into tp.values(): the
// i-th value in group k becomes a line of frequency x_i from v_{1-k} to v_i.
// Groups must cover every index once and each sum to h (Error(kBadPartition)
// otherwise); group sizes are not restricted to three.
LineConcept three_partition_solution_to_concept(
    const ThreePartitionInstance& tp,
    const std::vector<std::vector<int>>& groups);

// Set of distinct positive integers and a target number of blocks.
class PmppInstance {
 public:
  // Throws Error(kInvalidInstance) for duplicates, nonpositive values or a
  // negative k.
  PmppInstance(std::vector<std::int64_t> values, std::int64_t k);

  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t k() const { return k_; }

 private:
  std::vector<std::int64_t> values_;
  std::int64_t k_;
};

struct PmppPair {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
};

struct PmppSolution {
  std::vector<PmppPair> pairs;
};

// True iff every A_i, B_i is nonempty, all 2K sets are pairwise disjoint
// subsets of the instance values and sum(A_i) == sum(B_i).
bool is_valid_pmpp_solution(const PmppSolution& solution,
                            const PmppInstance& pmpp);

// Star with center 0 and leaf i (1..m) on edge i-1 carrying fmin = fmax =
// x_i; dfix = 1, cfix = 0, c = 0; threshold m - K.
DecisionInstance pmpp_to_star(const PmppInstance& pmpp);

// Builds at most m - K lines from a partition solution by repeatedly
// joining the smallest remaining numbers of A and B, then covers untouched
// leaves with one-edge lines. Throws Error(kInvalidSolution) if `solution`
// does not fit the star's edge frequencies.
LineConcept pmpp_solution_to_concept(const PmppSolution& solution,
                                     const Instance& star);

// Exhaustive search for K disjoint equal-sum splits. Returns exactly K pairs
// when possible. Throws Error(kTooLarge) beyond 12 values.
std::optional<PmppSolution> brute_force_pmpp(const PmppInstance& pmpp);

// p x p grid of colours 1..p, 0 for an empty cell.
class PartialLatinSquare {
 public:
  // Throws Error(kInvalidInstance) if the grid is not square, a colour is out
  // of range or repeats within a row or column.
  explicit PartialLatinSquare(std::vector<std::vector<int>> cells);

  int p() const { return static_cast<int>(cells_.size()); }
  int at(int row, int column) const { return cells_[row][column]; }
  int empty_cells() const;

 private:
  std::vector<std::vector<int>> cells_;
};

// Provenance of one number produced by plsc_to_pmpp. Rows, columns and
// colours are 1-based; fields that do not apply are 0.
struct EncodedNumber {
  enum class Kind { kRowColour, kColumnColour, kCell };
  Kind kind;
  int row;
  int column;
  int colour;
  std::int64_t value;
};

struct LatinSquareEncoding {
  PmppInstance pmpp;
  std::vector<EncodedNumber> numbers;  // same order as pmpp.values()
};

// With q = 6p - 2: q(2k-1) - (2c-1) for colour c missing in row k,
// q^2(2l-1) + (2c-1) for colour c missing in column l and
// q^2(2l-1) + q(2k-1) for the empty cell (k, l); K = number of empty cells.
// Throws Error(kCollisionDetected) if two numbers coincide.
LatinSquareEncoding plsc_to_pmpp(const PartialLatinSquare& square);

// Replaces fmax by infinity and every edge cost by K + 1; the threshold
// becomes K + (K + 1) * sum(fmin). Requires cfix = 0, c = 0 and fmin = fmax
// (Error(kHypothesisViolated) otherwise).
DecisionInstance lift_fmax(const Instance& instance, const Cost& k);

// Edge with fmin = 1 and a degree-one endpoint (the tip). An edge whose both
// endpoints have degree one yields two antennae, one per tip.
struct Antenna {
  EdgeId edge;
  Vertex tip;
  Vertex base;
};

// Ordered by edge index, then tip.
std::vector<Antenna> find_antennae(const Instance& instance);
bool is_nice(const Instance& instance);

// Replaces every fmin = 1 edge {u, v} of `outer` by a copy of `inner`, gluing
// the first antenna tip of `inner` to u and the second to v. Vertices of
// `outer` keep their ids; the non-tip vertices of each copy follow in
// edge-index order. Throws Error(kNotNice) unless both factors have exactly
// two antennae, Error(kHypothesisViolated) if dfix or cfix differ.
Instance instance_product(const Instance& inner, const Instance& outer);

}  // namespace lpal

#endif  // LPAL_REDUCTIONS_H_
