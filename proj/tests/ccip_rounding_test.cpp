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

#include "priocover/ccip_rounding.hpp"
#include "priocover/generators.hpp"
#include "priocover/plc.hpp"

namespace priocover {
namespace {

// One row of demand 5; supplies (3, 6), bounds (2, 1), unit costs.
ColumnRestrictedCIP OneRow() { return {{1, 2, {{1, 1}}, {5}, {1, 1}, {int64_t{2}, int64_t{1}}}, {3, 6}}; }

TEST(PowerOfTwoTest, Rounding) {
  EXPECT_EQ(CeilPow2(1), 1);
  EXPECT_EQ(CeilPow2(5), 8);
  EXPECT_EQ(CeilPow2(8), 8);
  EXPECT_EQ(FloorPow2(1), 1);
  EXPECT_EQ(FloorPow2(6), 4);
  EXPECT_EQ(FloorPow2(8), 8);
  EXPECT_EQ(Log2Exact(8), 3);
}

// Hand derivation with F empty and xbar = (1, 1/2): bbar = 8, sbar = (2, 4),
// y = (4, 2), A^F[sbar] = (2, 4) covering 16 >= 8. No column reaches bbar, so
// the row is small; classes t=0 {1} and t=1 {0} with contributions 16 each.
TEST(NormalizationTest, HandWorkedRow) {
  const ColumnRestrictedCIP c = OneRow();
  const ResidualSystem res = KcResidual(c, {});
  const FracSolution xbar{Rational(1), Rational(1, 2)};
  const Power2Normalized norm = Power2Normalize(c, res, xbar);
  EXPECT_EQ(norm.rows, (std::vector<int>{0}));
  EXPECT_EQ(norm.rounded_demands, (std::vector<int64_t>{8}));
  EXPECT_EQ(norm.rounded_supplies, (std::vector<int64_t>{2, 4}));
  EXPECT_EQ(norm.scaled_solution, (FracSolution{Rational(4), Rational(2)}));
  EXPECT_EQ(norm.matrix, (std::vector<std::vector<int64_t>>{{2, 4}}));
  const RowPartition part = PartitionRows(c, res, norm);
  EXPECT_TRUE(part.large_rows.empty());
  EXPECT_EQ(part.small_rows, (std::vector<int>{0}));
  EXPECT_EQ(part.small_columns[0], (std::vector<int>{0, 1}));
  const SupplyClasses sc = BuildSupplyClasses(c, res, norm, part);
  EXPECT_EQ(sc.max_supply, 4);
  EXPECT_EQ(sc.columns, (std::vector<std::vector<int>>{{1}, {0}}));
  EXPECT_EQ(sc.class_supply, (std::vector<int64_t>{4, 2}));
  EXPECT_EQ(sc.threshold, (std::vector<int>{0}));
  EXPECT_EQ(sc.contribution[0][0], Rational(16));
  EXPECT_EQ(sc.contribution[1][0], Rational(16));
}

TEST(NormalizationTest, InsufficientPointIsRejected) {
  const ColumnRestrictedCIP c = OneRow();
  const ResidualSystem res = KcResidual(c, {});
  EXPECT_THROW(Power2Normalize(c, res, FracSolution{Rational(0), Rational(1, 4)}), LemmaViolation);
}

TEST(LiftTest, BuysFullBoundsOnF) {
  const ColumnRestrictedCIP c = OneRow();
  EXPECT_EQ(LiftSolution(c, {0}, IntSolution{0, 1}), (IntSolution{2, 1}));
  ColumnRestrictedCIP u = c;
  u.base.upper_bounds[0] = Unbounded{};
  EXPECT_THROW(LiftSolution(u, {0}, IntSolution{0, 0}), ValidationError);
}

TEST(RoundCcipTest, AuditIsConsistent) {
  Rng rng(51);
  for (int it = 0; it < 80; ++it) {
    const ColumnRestrictedCIP c = RandomLineCcip(rng);
    const RoundingResult r = RoundCcip(c, TuLineOracle(), PrimalDualLineOracle());
    const RoundingAudit& a = r.audit;
    EXPECT_TRUE(IsFeasible(c, r.z)) << "instance " << it;
    EXPECT_TRUE(WithinBounds(c.base.upper_bounds, r.z)) << "instance " << it;
    EXPECT_LE(SolutionCost(c.base.costs, r.z), 40 * a.lower_bound) << "instance " << it;
    EXPECT_EQ(a.final_bound, 40 * a.lower_bound);
    // xbar is x* with F zeroed, and F is exactly the alpha-set of x*.
    EXPECT_EQ(a.f, AlphaSet(c, a.x_star, RoundingAlpha()));
    for (int j = 0; j < c.base.num_cols; ++j) {
      const bool in_f = std::find(a.f.begin(), a.f.end(), j) != a.f.end();
      EXPECT_EQ(a.xbar[j], in_f ? Rational(0) : a.x_star[j]);
      EXPECT_EQ(a.normalized.scaled_solution[j], 4 * a.xbar[j]);
    }
    // Large and small rows partition the rows with residual demand.
    std::vector<int> rows = a.partition.large_rows;
    rows.insert(rows.end(), a.partition.small_rows.begin(), a.partition.small_rows.end());
    std::sort(rows.begin(), rows.end());
    EXPECT_EQ(rows, a.normalized.rows);
    EXPECT_LE(a.cost_small, a.small_bound);
    EXPECT_LE(a.cost_large, a.large_bound);
  }
}

TEST(RoundNoKcTest, RejectsViolatedAssumption) {
  // Supply 6 exceeds the demand 5.
  const ColumnRestrictedCIP c = OneRow();
  try {
    RoundNoKc(c, FracSolution{Rational(0), Rational(1)}, TuLineOracle());
    FAIL() << "expected AssumptionViolated";
  } catch (const AssumptionViolated& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(RoundNoKcTest, RejectsInfeasibleFractionalPoint) {
  ColumnRestrictedCIP c = OneRow();
  c.supplies = {3, 5};
  EXPECT_THROW(RoundNoKc(c, FracSolution{Rational(0), Rational(0)}, TuLineOracle()), ValidationError);
}

TEST(RoundNoKcTest, ClassesAndBounds) {
  Rng rng(52);
  for (int it = 0; it < 80; ++it) {
    const ColumnRestrictedCIP c = RandomBoundedSupplyCcip(rng);
    const LpResult lp = SolveCanonical(c);
    const NoKcResult r = RoundNoKc(c, lp.x, TuLineOracle());
    EXPECT_TRUE(IsFeasible(c, r.x_int));
    EXPECT_LE(r.cost_int, 10 * r.cost_x);
    const int64_t smax = *std::max_element(c.supplies.begin(), c.supplies.end());
    for (const auto& cl : r.classes) {
      for (int j : cl.columns) {
        // smax / 2^(t+1) < s_j <= smax / 2^t
        EXPECT_GT(c.supplies[j] << (cl.t + 1), smax);
        EXPECT_LE(c.supplies[j] << cl.t, smax);
      }
    }
  }
}

}  // namespace
}  // namespace priocover
