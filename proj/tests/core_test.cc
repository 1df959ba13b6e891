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

#include "lpal/generators.h"
#include "lpal/instance.h"
#include "lpal/line_concept.h"
#include "lpal/rational.h"
#include "testing/fixtures.h"
#include "testing/status.h"

namespace lpal {
namespace {

using ::lpal::testing::sample_path_concept;
using ::lpal::testing::sample_path_instance;

TEST(RationalTest, NormalizesAndParses) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational(1, 3).to_string(), "1/3");
  EXPECT_EQ(Rational::parse(Rational(-5, 7).to_string()), Rational(-5, 7));
  EXPECT_LPAL_ERROR(Rational::parse("1/0"), ErrorCode::kParseError);
  EXPECT_LPAL_ERROR(Rational::parse("abc"), ErrorCode::kParseError);
}

TEST(RationalTest, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LPAL_ERROR(Rational(INT64_MAX) + Rational(1), ErrorCode::kOverflow);
}

TEST(GraphTest, RejectsInvalidEdges) {
  EXPECT_LPAL_ERROR(Graph(2, {{0, 0}}), ErrorCode::kInvalidInstance);
  EXPECT_LPAL_ERROR(Graph(2, {{0, 1}, {1, 0}}), ErrorCode::kInvalidInstance);
  EXPECT_LPAL_ERROR(Graph(2, {{0, 2}}), ErrorCode::kInvalidInstance);
}

TEST(GraphTest, TreeAndConnectivity) {
  EXPECT_TRUE(Graph(3, {{0, 1}, {1, 2}}).is_tree());
  EXPECT_FALSE(Graph(3, {{0, 1}, {1, 2}, {2, 0}}).is_tree());
  EXPECT_FALSE(Graph(3, {{0, 1}}).is_connected());
  EXPECT_TRUE(Graph(1, {}).is_tree());
}

TEST(InstanceTest, RejectsLowerAboveUpper) {
  EXPECT_LPAL_ERROR(Instance(2, 0, 0, {{0, 1, 0, 3, 2}}),
                    ErrorCode::kInvalidInstance);
  EXPECT_LPAL_ERROR(Instance(2, -1, 0, {{0, 1, 0, 0, 2}}),
                    ErrorCode::kInvalidInstance);
}

TEST(LineTest, RejectsRepeatedVertices) {
  EXPECT_LPAL_ERROR(Line({0, 1, 0}), ErrorCode::kInvalidLine);
  EXPECT_LPAL_ERROR(Line(std::vector<Vertex>{}), ErrorCode::kInvalidLine);
  EXPECT_TRUE(Line({3}).is_zero_edge());
  EXPECT_EQ(Line({2, 1, 0}).canonical(), Line({0, 1, 2}));
}

TEST(LineConceptTest, MergesReversedDuplicates) {
  LineConcept c;
  EXPECT_FALSE(c.add(Line({0, 1, 2}), 2));
  EXPECT_TRUE(c.add(Line({2, 1, 0}), 3));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.entries()[0].frequency, 5);
}

TEST(TotalFrequencyTest, SamplePathConceptMatchesEdgeLabels) {
  const Instance instance = sample_path_instance();
  EXPECT_EQ(total_frequency(sample_path_concept(), instance.graph()),
            (std::vector<Frequency>{10, 20, 19, 17, 15, 11, 6}));
}

TEST(TotalFrequencyTest, EmptyAndSingleLine) {
  const Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(total_frequency(LineConcept(), g), (std::vector<Frequency>{0, 0}));
  LineConcept c;
  c.add(Line({2, 1}), 3);
  EXPECT_EQ(total_frequency(c, g), (std::vector<Frequency>{0, 3}));
}

TEST(TotalFrequencyTest, RejectsNonPaths) {
  const Graph g(3, {{0, 1}, {1, 2}});
  LineConcept c;
  c.add(Line({0, 2}), 1);
  EXPECT_LPAL_ERROR(total_frequency(c, g), ErrorCode::kInvalidLine);
}

TEST(FeasibilityTest, SamplePathConceptIsFeasible) {
  EXPECT_TRUE(is_feasible(sample_path_concept(), sample_path_instance()).feasible);
}

TEST(FeasibilityTest, ReportsViolations) {
  const Instance instance(3, 0, 0, {{0, 1, 0, 1, 2}, {1, 2, 0, 3, 3}});
  const FeasibilityReport empty = is_feasible(LineConcept(), instance);
  EXPECT_FALSE(empty.feasible);
  ASSERT_EQ(empty.violations.size(), 2u);
  EXPECT_EQ(empty.violations[0].edge, 0);

  LineConcept over;
  over.add(Line({0, 1}), 1);
  over.add(Line({1, 2}), 4);
  const FeasibilityReport report = is_feasible(over, instance);
  EXPECT_FALSE(report.feasible);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].edge, 1);
  EXPECT_EQ(report.violations[0].total, 4);
}

TEST(FeasibilityTest, CountsZeroEdgeLines) {
  const Instance instance(2, 0, 0, {{0, 1, 0, 0, 1}});
  LineConcept c;
  c.add(Line({0}), 1);
  EXPECT_EQ(is_feasible(c, instance).zero_edge_lines, 1u);
}

TEST(CostTest, Examples) {
  EXPECT_EQ(concept_cost(sample_path_concept(), sample_path_instance()), Cost(6));
  EXPECT_EQ(concept_cost(LineConcept(), sample_path_instance()), Cost(0));
  const Instance edge(2, 0, 1, {{0, 1, 1, 3, 3}});
  LineConcept c;
  c.add(Line({0, 1}), 3);
  EXPECT_EQ(concept_cost(c, edge), Cost(6));
}

TEST(LineEndsTest, Examples) {
  EXPECT_EQ(line_ends_at(sample_path_concept(), 7), 6);
  EXPECT_EQ(line_ends_at(LineConcept(), 0), 0);
  LineConcept c;
  c.add(Line({0, 1, 2}), 2);
  EXPECT_EQ(line_ends_at(c, 0), 2);
  EXPECT_EQ(line_ends_at(c, 1), 0);
  EXPECT_EQ(line_ends_at(c, 2), 2);
  LineConcept zero;
  zero.add(Line({1}), 3);
  EXPECT_EQ(line_ends_at(zero, 1), 3);
}

// Random concept on a random tree: every line is the tree path between two
// random vertices.
LineConcept random_concept(const Graph& tree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Vertex> vertex(0, tree.vertex_count() - 1);
  std::uniform_int_distribution<Frequency> freq(1, 5);
  LineConcept c;
  for (int i = 0; i < 4; ++i) {
    Vertex a = vertex(rng);
    Vertex b = vertex(rng);
    if (a == b) continue;
    // BFS parent pointers from a.
    std::vector<Vertex> parent(tree.vertex_count(), -1);
    std::vector<Vertex> queue{a};
    parent[a] = a;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const Incidence& inc : tree.incident(queue[q])) {
        if (parent[inc.neighbor] < 0) {
          parent[inc.neighbor] = queue[q];
          queue.push_back(inc.neighbor);
        }
      }
    }
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    c.add(Line(path), freq(rng));
  }
  return c;
}

TEST(CostPropertyTest, IdentitiesOnRandomConcepts) {
  std::mt19937_64 rng(7);
  RandomInstanceOptions options;
  options.vertices = 7;
  options.max_cfix = 3;
  options.max_edge_cost = 4;
  for (int round = 0; round < 200; ++round) {
    const Instance instance = random_tree(options, rng);
    const LineConcept c = random_concept(instance.graph(), rng);

    // cost = sum_e c_e f_e + cfix * sum_l f_l when dfix = 0.
    const std::vector<Frequency> total = total_frequency(c, instance.graph());
    Cost expected = instance.cfix() * Cost(c.total_line_frequency());
    for (EdgeId e = 0; e < instance.graph().edge_count(); ++e) {
      expected += instance.edge_cost(e) * Cost(total[e]);
    }
    EXPECT_EQ(concept_cost(c, instance), expected);

    LineConcept reversed;
    for (const auto& entry : c.entries()) {
      reversed.add(entry.line.reversed(), entry.frequency);
    }
    EXPECT_EQ(concept_cost(reversed, instance), concept_cost(c, instance));
    EXPECT_EQ(is_feasible(reversed, instance).feasible,
              is_feasible(c, instance).feasible);

    Frequency ends = 0;
    for (Vertex v = 0; v < instance.graph().vertex_count(); ++v) {
      ends += line_ends_at(c, v);
    }
    EXPECT_EQ(ends, 2 * c.total_line_frequency());
  }
}

TEST(CostPropertyTest, UnionAddsTotals) {
  std::mt19937_64 rng(11);
  RandomInstanceOptions options;
  options.vertices = 6;
  for (int round = 0; round < 100; ++round) {
    const Instance instance = random_tree(options, rng);
    const Graph& g = instance.graph();
    const LineConcept a = random_concept(g, rng);
    const LineConcept b = random_concept(g, rng);
    LineConcept both = a;
    for (const auto& entry : b.entries()) both.add(entry.line, entry.frequency);
    const auto ta = total_frequency(a, g);
    const auto tb = total_frequency(b, g);
    const auto tab = total_frequency(both, g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_EQ(tab[e], ta[e] + tb[e]);
  }
}

}  // namespace
}  // namespace lpal
