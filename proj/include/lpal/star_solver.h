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

#ifndef LPAL_STAR_SOLVER_H_
#define LPAL_STAR_SOLVER_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"

namespace lpal {

// An instance on K_{1,k} (k >= 1) with dfix = 0.
class StarInstance {
 public:
  // Throws Error(kNotAStar) or Error(kNonzeroDfix).
  explicit StarInstance(Instance instance);

  const Instance& instance() const { return instance_; }
  Vertex center() const { return center_; }
  // leaf(e) is the non-center endpoint of edge e.
  Vertex leaf(EdgeId e) const;

 private:
  Instance instance_;
  Vertex center_;
};

// How the demand of each star edge is split into one-edge lines and
// two-edge lines. Indices refer to positions in the demand span.
struct StarPairing {
  struct Pair {
    int first;
    int second;
    Frequency frequency;
  };
  std::vector<Pair> pairs;         // positive frequencies only
  std::vector<Frequency> singles;  // one-edge line frequency per position
};

// Greedy pairing over demands sorted by decreasing size (stable): each new
// edge first absorbs the open one-edge remainder, then splits existing
// pairs to pair itself twice. Every position i ends up covered exactly
// demands[i] times, and at most one position keeps a positive single.
StarPairing pair_star_demands(std::span<const Frequency> demands);

// Optimal line concept for a star with dfix = 0: f^total_e = fmin_e on every
// edge and the smallest possible total frequency of one-edge lines.
LineConcept solve_star(const StarInstance& star);

enum class StarOptimality {
  kNoOneEdgeLine,
  kOneOneEdgeLineOfFrequencyOne,
  kDominantEdge,
  kNone,
};

std::string_view to_string(StarOptimality condition);

// Which sufficient optimality certificate `lines` satisfies, checked in the
// order listed. Throws Error(kInfeasibleInput) unless f^total = fmin.
StarOptimality optimality_condition(const LineConcept& lines,
                                    const StarInstance& star);

}  // namespace lpal

#endif  // LPAL_STAR_SOLVER_H_
