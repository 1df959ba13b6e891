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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lpal/exact_oracle.h"
#include "lpal/generators.h"
#include "lpal/star_solver.h"
#include "testing/brute_force.h"
#include "testing/fixtures.h"
#include "testing/status.h"

namespace lpal {
namespace {

Instance star_with(const std::vector<Frequency>& fmin, Rational cfix = 1) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < static_cast<int>(fmin.size()); ++i) {
    edges.push_back({0, i + 1, 0, fmin[i], fmin[i]});
  }
  return Instance(static_cast<int>(fmin.size()) + 1, 0, cfix, edges);
}

Frequency one_edge_frequency(const LineConcept& c) {
  Frequency f = 0;
  for (const auto& entry : c.entries()) {
    if (entry.line.edge_count() == 1) f += entry.frequency;
  }
  return f;
}

// f^total = fmin, lines of one or two edges, at most one one-edge line.
void expect_star_output_shape(const LineConcept& c, const Instance& instance) {
  EXPECT_EQ(total_frequency(c, instance.graph()),
            std::vector<Frequency>(instance.fmin().begin(),
                                   instance.fmin().end()));
  int one_edge_lines = 0;
  for (const auto& entry : c.entries()) {
    EXPECT_GE(entry.line.edge_count(), 1);
    EXPECT_LE(entry.line.edge_count(), 2);
    if (entry.line.edge_count() == 1) ++one_edge_lines;
  }
  EXPECT_LE(one_edge_lines, 1);
}

TEST(StarInstanceTest, Validates) {
  EXPECT_LPAL_ERROR(StarInstance(Instance(3, 0, 0, {{0, 1}, {1, 2}, {2, 0}})),
                    ErrorCode::kNotAStar);
  EXPECT_LPAL_ERROR(StarInstance(testing::sample_star(1, 0)),
                    ErrorCode::kNonzeroDfix);
  const StarInstance star(Instance(4, 0, 0, {{2, 0}, {2, 1}, {3, 2}}));
  EXPECT_EQ(star.center(), 2);
  EXPECT_EQ(star.leaf(2), 3);
}

TEST(SolveStarTest, SampleStar) {
  const Instance instance = testing::sample_star(0, 1);
  const LineConcept c = solve_star(StarInstance(instance));
  expect_star_output_shape(c, instance);
  EXPECT_EQ(c.total_line_frequency(), 7);
  EXPECT_EQ(one_edge_frequency(c), 0);
  EXPECT_EQ(concept_cost(c, instance), Cost(7));
  EXPECT_EQ(optimality_condition(c, StarInstance(instance)),
            StarOptimality::kNoOneEdgeLine);
  // The reference concept is an equally good optimum.
  EXPECT_EQ(concept_cost(testing::sample_star_concept(), instance), Cost(7));
  EXPECT_EQ(optimality_condition(testing::sample_star_concept(), StarInstance(instance)),
            StarOptimality::kNoOneEdgeLine);
}

TEST(SolveStarTest, SingleEdge) {
  const LineConcept c = solve_star(StarInstance(star_with({4})));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.entries()[0].line.edge_count(), 1);
  EXPECT_EQ(c.entries()[0].frequency, 4);
}

TEST(SolveStarTest, DominantEdge) {
  const Instance instance = star_with({7, 2, 1});
  const LineConcept c = solve_star(StarInstance(instance));
  EXPECT_EQ(c.total_line_frequency(), testing::star_min_line_frequency({7, 2, 1}));
  EXPECT_EQ(c.total_line_frequency(), 7);
  EXPECT_EQ(optimality_condition(c, StarInstance(instance)),
            StarOptimality::kDominantEdge);
}

TEST(SolveStarTest, ZeroDemandEdgesStayUncovered) {
  const Instance instance = star_with({0, 3, 0, 3});
  const LineConcept c = solve_star(StarInstance(instance));
  expect_star_output_shape(c, instance);
  EXPECT_EQ(c.total_line_frequency(), 3);
}

TEST(OptimalityConditionTest, OddRemainder) {
  const Instance instance = star_with({3, 2});
  LineConcept c;
  c.add(Line({1, 0, 2}), 2);
  c.add(Line({0, 1}), 1);
  EXPECT_EQ(optimality_condition(c, StarInstance(instance)),
            StarOptimality::kOneOneEdgeLineOfFrequencyOne);
}

TEST(OptimalityConditionTest, NoneAndInfeasible) {
  const Instance instance = star_with({2, 2});
  LineConcept singles;
  singles.add(Line({0, 1}), 2);
  singles.add(Line({0, 2}), 2);
  EXPECT_EQ(optimality_condition(singles, StarInstance(instance)),
            StarOptimality::kNone);
  LineConcept short_of_demand;
  short_of_demand.add(Line({1, 0, 2}), 1);
  EXPECT_LPAL_ERROR(
      optimality_condition(short_of_demand, StarInstance(instance)),
      ErrorCode::kInfeasibleInput);
}

TEST(PairStarDemandsTest, CoversEveryDemandExactly) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<Frequency> demand(0, 9);
  for (int round = 0; round < 500; ++round) {
    std::vector<Frequency> d(size(rng));
    for (Frequency& x : d) x = demand(rng);
    const StarPairing pairing = pair_star_demands(d);
    std::vector<Frequency> covered = pairing.singles;
    int positive_singles = 0;
    for (Frequency s : pairing.singles) positive_singles += s > 0;
    for (const auto& pair : pairing.pairs) {
      EXPECT_GT(pair.frequency, 0);
      covered[pair.first] += pair.frequency;
      covered[pair.second] += pair.frequency;
    }
    EXPECT_EQ(covered, d);
    EXPECT_LE(positive_singles, 1);
  }
}

TEST(SolveStarTest, MatchesBruteForceOnSmallStars) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> leaves(1, 5);
  std::uniform_int_distribution<Frequency> demand(0, 5);
  for (int round = 0; round < 300; ++round) {
    std::vector<Frequency> d(leaves(rng));
    for (Frequency& x : d) x = demand(rng);
    const Instance instance = star_with(d);
    const LineConcept c = solve_star(StarInstance(instance));
    expect_star_output_shape(c, instance);
    EXPECT_EQ(c.total_line_frequency(), testing::star_min_line_frequency(d));
    if (c.total_line_frequency() > 0) {
      EXPECT_NE(optimality_condition(c, StarInstance(instance)),
                StarOptimality::kNone);
    }
  }
}

TEST(SolveStarTest, MatchesOracleWithCostsAndSlack) {
  std::mt19937_64 rng(21);
  RandomInstanceOptions options;
  options.max_frequency = 4;
  options.max_cfix = 2;
  options.max_edge_cost = 2;
  for (int round = 0; round < 150; ++round) {
    options.vertices = 2 + static_cast<int>(rng() % 5);
    const Instance instance = random_star(options, rng);
    const LineConcept c = solve_star(StarInstance(instance));
    EXPECT_TRUE(is_feasible(c, instance).feasible);
    EXPECT_EQ(concept_cost(c, instance), oracle_solve(instance).cost);
  }
}

}  // namespace
}  // namespace lpal
