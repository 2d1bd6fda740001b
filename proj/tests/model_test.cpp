// Copyright 2026 The priocover Authors.
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


#include <gtest/gtest.h>

#include "priocover/model.hpp"

namespace priocover {
namespace {

LineInstance TwoEdgeLine() {
  LineInstance line;
  line.num_edges = 2;
  line.edge_priorities = {1, 3};
  line.segments = {{1, 2, 2, 5}, {2, 2, 3, 4}};
  return line;
}

// Root 0 with children 1 and 2; node 3 hangs below 1.
TreeInstance SmallTree() {
  TreeInstance t;
  t.num_nodes = 4;
  t.root = 0;
  t.parent = {-1, 0, 0, 1};
  t.edge_priorities = {0, 2, 1, 1};
  t.child_order = {{1, 2}, {3}, {}, {}};
  t.segments = {{0, 3, 2, 1}, {1, 3, 1, 1}, {0, 2, 1, 7}};
  return t;
}

TEST(LineInstanceTest, CoverageNeedsSpanAndSupply) {
  const LineInstance line = TwoEdgeLine();
  EXPECT_TRUE(line.Covers(0, 1));
  EXPECT_FALSE(line.Covers(0, 2));  // supply 2 < priority 3
  EXPECT_TRUE(line.Covers(1, 2));
  EXPECT_FALSE(line.Covers(1, 1));  // outside the span
}

TEST(LineInstanceTest, LoweringMatchesCoverage) {
  const CoverSystem cs = ToCoverSystem(TwoEdgeLine());
  EXPECT_EQ(cs.matrix, (std::vector<std::vector<int64_t>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(cs.demands, (std::vector<int64_t>{1, 1}));
  EXPECT_TRUE(cs.unit_columns);
  EXPECT_EQ(cs.row_labels.front(), "edge 1");
}

TEST(TreeInstanceTest, PathsAndCoverage) {
  const TreeInstance t = SmallTree();
  EXPECT_EQ(t.PathEdges(0, 3), (std::vector<int>{1, 3}));
  EXPECT_TRUE(t.IsAncestorOrSelf(0, 3));
  EXPECT_FALSE(t.IsAncestorOrSelf(2, 3));
  EXPECT_EQ(t.Depth(3), 2);
  EXPECT_TRUE(t.Covers(0, 1));
  EXPECT_TRUE(t.Covers(0, 3));
  EXPECT_FALSE(t.Covers(1, 1));  // the top node's parent edge is not on the path
  EXPECT_TRUE(t.Covers(1, 3));
  EXPECT_FALSE(t.Covers(0, 2));
  EXPECT_EQ(t.Edges(), (std::vector<int>{1, 2, 3}));
}

TEST(TreeInstanceTest, PriorityBlocksCoverage) {
  TreeInstance t = SmallTree();
  t.edge_priorities[1] = 3;
  EXPECT_FALSE(t.Covers(0, 1));
  EXPECT_TRUE(t.Covers(0, 3));
}

TEST(ValidationTest, ReportsMalformedSegmentWithoutThrowing) {
  LineInstance line = TwoEdgeLine();
  line.segments[0] = {2, 1, 1, 1};
  const Violations v = ValidateInstance(line);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("left > right"), std::string::npos);
  EXPECT_THROW(RequireValid(line), ValidationError);
}

TEST(ValidationTest, TreeStructureErrors) {
  TreeInstance t = SmallTree();
  EXPECT_TRUE(ValidateInstance(t).empty());
  t.parent[3] = 3;
  EXPECT_FALSE(ValidateInstance(t).empty());
  t = SmallTree();
  t.child_order[0] = {2};
  EXPECT_FALSE(ValidateInstance(t).empty());
  t = SmallTree();
  t.segments.push_back({2, 3, 1, 1});  // not a descending path
  EXPECT_FALSE(ValidateInstance(t).empty());
}

TEST(ValidationTest, CipDimensions) {
  ZeroOneCIP a{2, 2, {{1, 0}, {1, 1}}, {1, 2}, {1, 1}, {int64_t{1}, Unbounded{}}};
  EXPECT_TRUE(ValidateInstance(a).empty());
  a.matrix[0] = {1};
  EXPECT_FALSE(ValidateInstance(a).empty());
  a = ZeroOneCIP{1, 1, {{2}}, {1}, {1}, {int64_t{1}}};
  EXPECT_FALSE(ValidateInstance(a).empty());  // entries must be 0/1
}

TEST(CipTest, SuppliesScaleColumns) {
  ColumnRestrictedCIP c{{2, 2, {{1, 0}, {1, 1}}, {3, 4}, {1, 1}, {int64_t{2}, Unbounded{}}}, {3, 5}};
  EXPECT_EQ(ApplySupplies(c), (std::vector<std::vector<int64_t>>{{3, 0}, {3, 5}}));
  const CoverReport r = CheckCover(c, IntSolution{1, 0});
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.uncovered, (std::vector<int>{1}));
  EXPECT_EQ(r.slack[1], Rational(-1));
  EXPECT_TRUE(IsFeasible(c, IntSolution{1, 1}));
  EXPECT_TRUE(WithinBounds(c.base.upper_bounds, IntSolution{2, 100}));
  EXPECT_FALSE(WithinBounds(c.base.upper_bounds, IntSolution{3, 0}));
}

TEST(CipTest, PriorityMatrix) {
  PriorityCIP p{{2, 2, {{1, 1}, {1, 1}}, {1, 1}, {1, 1}, {int64_t{1}, int64_t{1}}}, {1, 3}, {2, 1}};
  EXPECT_EQ(BuildPriorityMatrix(p), (std::vector<std::vector<int>>{{0, 1}, {1, 1}}));
}

TEST(CipTest, LineAndPriorityCipRoundTrip) {
  const LineInstance line = TwoEdgeLine();
  const PriorityCIP p = LineToPriorityCIP(line);
  EXPECT_EQ(PriorityCIPToLine(p), line);
  EXPECT_EQ(ToCoverSystem(p).matrix, ToCoverSystem(line).matrix);
}

TEST(CipTest, NonIntervalColumnRejected) {
  PriorityCIP p{{3, 1, {{1}, {0}, {1}}, {1, 1, 1}, {1}, {int64_t{1}}}, {1}, {1, 1, 1}};
  EXPECT_THROW(PriorityCIPToLine(p), ValidationError);
}

TEST(CostTest, IntegralAndRationalCosts) {
  const std::vector<int64_t> c{3, 5};
  EXPECT_EQ(IntCost(c, IntSolution{1, 2}), 13);
  EXPECT_EQ(SolutionCost(c, FracSolution{Rational(1, 3), Rational(1, 5)}), Rational(2));
}

TEST(RectTest, BoxContainment) {
  const Box b{1, 3, 2, 2, 1};
  EXPECT_TRUE(b.Contains({2, 2, 1}));
  EXPECT_FALSE(b.Contains({2, 3, 1}));
  EXPECT_FALSE(b.Contains({4, 1, 1}));
}

}  // namespace
}  // namespace priocover
