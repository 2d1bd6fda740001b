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

#include <set>

#include "priocover/generators.hpp"
#include "priocover/oracles.hpp"
#include "priocover/ptc.hpp"
#include "priocover/relaxation.hpp"
#include "test_support.hpp"

namespace priocover {
namespace {

// Root 0 -> 1 -> 2 -> 3 and 1 -> 4 (child order 2, 4).
TreeInstance Fork() {
  TreeInstance t;
  t.num_nodes = 5;
  t.root = 0;
  t.parent = {-1, 0, 1, 2, 1};
  t.edge_priorities = {0, 1, 2, 1, 1};
  t.child_order = {{1}, {2, 4}, {3}, {}, {}};
  t.segments = {{0, 3, 2, 4}, {0, 4, 1, 2}, {1, 3, 1, 1}, {1, 2, 2, 2}};
  return t;
}

TEST(RestrictToPathTest, IntersectionsBecomeIntervals) {
  const TreeInstance t = Fork();
  const PathLine pl = RestrictToPath(t, t.PathEdges(0, 3));
  EXPECT_EQ(pl.line.edge_priorities, (std::vector<int64_t>{1, 2, 1}));
  EXPECT_EQ(pl.segment_ids, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(pl.line.segments[0], (Segment{1, 3, 2, 4}));
  EXPECT_EQ(pl.line.segments[1], (Segment{1, 1, 1, 2}));
  EXPECT_EQ(pl.line.segments[2], (Segment{2, 3, 1, 1}));
  EXPECT_EQ(pl.line.segments[3], (Segment{2, 2, 2, 2}));
}

TEST(TreeCoverDpTest, MatchesExhaustiveAndLp) {
  Rng rng(61);
  for (int it = 0; it < 150; ++it) {
    TreeInstance t = RandomTreeShape(rng, static_cast<int>(Uniform(rng, 2, 8)), 1);
    std::vector<VirtualPair> pairs;
    const int m = static_cast<int>(Uniform(rng, 1, 10));
    for (int k = 0; k < m; ++k) {
      const TreeSegment s = RandomTreeSegment(rng, t, 1, 9, false);
      pairs.push_back({s.top, s.bottom, s.cost});
    }
    const TreeCoverResult r = ExactTreeCover01(t, pairs);
    const TreeInstance as_tree = PairsAsTree(t, pairs);
    const auto expect = testing::ExhaustiveZeroOne(ToCoverSystem(as_tree));
    EXPECT_EQ(r.cost, expect) << "tree " << it;
    if (!r.cost) continue;
    IntSolution x(pairs.size(), 0);
    for (int p : r.chosen) x[p] = 1;
    EXPECT_TRUE(IsFeasible(as_tree, x));
    EXPECT_EQ(IntCost(Costs(as_tree), x), *r.cost);
    EXPECT_EQ(SolveCanonical(as_tree).value, Rational(*r.cost)) << "tree " << it;
  }
}

TEST(TreeCoverDpTest, RejectsNonDescendingPair) {
  const TreeInstance t = Fork();
  EXPECT_THROW(ExactTreeCover01(t, {{3, 4, 1}}), ValidationError);
}

TEST(Ptc2ApxTest, ForkInstance) {
  const TreeInstance t = Fork();
  const Ptc2ApxResult r = Ptc2Apx(t);
  const BruteForceResult opt = BruteForceOpt(t);
  EXPECT_EQ(opt.cost, 5);  // segments 1, 2 and 3
  EXPECT_TRUE(IsFeasible(t, r.x));
  EXPECT_LE(r.cost, 2 * opt.cost);
  EXPECT_LE(r.cost, r.pair_cover_value);
}

TEST(Ptc2ApxTest, RandomTreesWithinFactorTwo) {
  Rng rng(62);
  for (int it = 0; it < 120; ++it) {
    const TreeInstance t = RandomTree(rng);
    const Ptc2ApxResult r = Ptc2Apx(t);
    EXPECT_LE(r.cost, 2 * BruteForceOpt(t).cost) << "tree " << it;
  }
}

TEST(Ptc2ApxTest, InfeasibleTree) {
  TreeInstance t = Fork();
  t.segments = {{0, 2, 1, 1}};
  EXPECT_THROW(Ptc2Apx(t), Infeasible);
}

TEST(PathPartitionTest, PartsPartitionEdgesAndMeetAtMostTwo) {
  Rng rng(63);
  for (int it = 0; it < 120; ++it) {
    const TreeInstance t = RandomTree(rng);
    const IntSolution x = BruteForceOpt(t).x;
    const PathPartition pp = PathPartitionCertificate(t, x);
    std::multiset<int> seen;
    for (const auto& part : pp.parts) {
      ASSERT_FALSE(part.empty());
      for (size_t k = 0; k + 1 < part.size(); ++k) EXPECT_EQ(t.parent[part[k + 1]], part[k]);
      seen.insert(part.begin(), part.end());
    }
    const std::vector<int> edges = t.Edges();
    EXPECT_EQ(seen, std::multiset<int>(edges.begin(), edges.end()));
    for (int m : pp.parts_met) EXPECT_LE(m, 2);
    for (int e : edges) EXPECT_TRUE(t.Covers(pp.responsible[e], e));
  }
}

TEST(PathPartitionTest, RequiresCover) {
  const TreeInstance t = Fork();
  EXPECT_THROW(PathPartitionCertificate(t, IntSolution{0, 0, 0, 0}), ValidationError);
}

TEST(DecompositionTest, UniversalPathsEndInLeaves) {
  const LeafPathDecomposition d = UniversalDecomposition(Fork());
  EXPECT_EQ(d.paths, (std::vector<std::vector<int>>{{1, 2, 3}, {4}}));
  EXPECT_EQ(d.parent_path, (std::vector<int>{-1, 0}));
  EXPECT_EQ(d.path_of_edge, (std::vector<int>{-1, 0, 0, 0, 1}));
}

TEST(DecompositionTest, FractionalPiecesAreFeasible) {
  Rng rng(64);
  TreeParams p;
  p.max_nodes = 10;
  p.unit_costs = true;
  for (int it = 0; it < 100; ++it) {
    const TreeInstance t = RandomTree(rng, p);
    FracSolution x = SolveCanonical(t).x;
    for (auto& v : x) v = (v + 1) / 2;
    const FractionalDecomposition fd = DecomposeFractionalPtc(t, x);
    const Rational mass = std::accumulate(x.begin(), x.end(), Rational(0));
    EXPECT_LE(fd.total_mass, 3 * mass);
    for (const PathPiece& piece : fd.pieces) {
      EXPECT_TRUE(IsFeasible(piece.line, piece.x));
      for (size_t k = 0; k < piece.x.size(); ++k) EXPECT_LE(piece.x[k], x[piece.segment_ids[k]]);
    }
    const UnweightedRoundResult r = UnweightedPtcRound(t, x);
    EXPECT_TRUE(IsFeasible(t, r.x));
    EXPECT_LE(Rational(r.size), 6 * mass);
  }
}

TEST(DecompositionTest, RejectsInfeasibleOrWeightedInput) {
  const TreeInstance t = Fork();
  EXPECT_THROW(DecomposeFractionalPtc(t, FracSolution(4, Rational(0))), Infeasible);
  EXPECT_THROW(UnweightedPtcRound(t, FracSolution(4, Rational(1))), ValidationError);
}

TEST(BroomTest, GadgetShape) {
  const Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  const Broom b = GenBroom(k3);
  EXPECT_EQ(b.tree.num_nodes, 3 * 3 + 1);
  EXPECT_EQ(b.tree.segments.size(), 2u * 3 + 3);
  EXPECT_TRUE(ValidateInstance(b.tree).empty());
  // Bristle labels descend from x_m.
  for (const auto& bristle : b.spec.bristle_nodes) {
    for (size_t k = 0; k + 1 < bristle.size(); ++k) {
      EXPECT_GT(b.tree.edge_priorities[bristle[k]], b.tree.edge_priorities[bristle[k + 1]]);
    }
  }
  const TreeSegment& s = b.tree.segments[b.spec.edge_segment.at({2, 1})];
  EXPECT_EQ(s.top, b.spec.handle_nodes[1]);
  EXPECT_EQ(s.supply, 2);
}

// Optimum = m + vertex cover, worked by hand for three small graphs.
TEST(BroomTest, SmallOptima) {
  EXPECT_EQ(BruteForceOpt(GenBroom({3, {{0, 1}, {1, 2}, {0, 2}}}).tree).cost, 5);
  EXPECT_EQ(BruteForceOpt(GenBroom({2, {{0, 1}}}).tree).cost, 2);
  EXPECT_EQ(BruteForceOpt(GenBroom({3, {{0, 1}, {1, 2}}}).tree).cost, 3);
  EXPECT_EQ(MinVertexCover({3, {{0, 1}, {1, 2}, {0, 2}}}), 2);
}

TEST(BroomTest, IsolatedVerticesGetNoBristle) {
  const Broom b = GenBroom({4, {{0, 1}}});
  EXPECT_TRUE(b.spec.bristle_nodes[2].empty());
  EXPECT_EQ(b.spec.vertex_segment[3], -1);
  EXPECT_EQ(BruteForceOpt(b.tree).cost, 2);
}

TEST(BroomTest, MalformedGraph) {
  EXPECT_THROW(GenBroom({2, {{0, 0}}}), ValidationError);
  EXPECT_THROW(GenBroom({2, {{0, 1}, {1, 0}}}), ValidationError);
  EXPECT_THROW(GenBroom({2, {{0, 2}}}), ValidationError);
}

}  // namespace
}  // namespace priocover
