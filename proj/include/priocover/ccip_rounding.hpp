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

// LP rounding for column-restricted covering programs.
//
// RoundCcip implements the knapsack-cover based pipeline: alpha-relaxed
// solution, power-of-two normalisation, the large/small row split, grouping
// and scaling of small rows into 0,1 sub-programs, a priority-cover program
// for large rows, and the final lift that buys full bounds on F. RoundNoKc
// implements the bound-violating variant that needs no knapsack-cover rows.
// Each step's guarantee is asserted exactly and recorded in an audit trail.

#ifndef PRIOCOVER_CCIP_ROUNDING_HPP_
#define PRIOCOVER_CCIP_ROUNDING_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/oracles.hpp"
#include "priocover/rational.hpp"
#include "priocover/relaxation.hpp"

namespace priocover {

// Smallest power of two >= v (v >= 1).
inline int64_t CeilPow2(int64_t v) {
  int64_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

// Largest power of two <= v (v >= 1).
inline int64_t FloorPow2(int64_t v) {
  int64_t p = 1;
  while (p <= v / 2) p <<= 1;
  return p;
}

inline int Log2Exact(int64_t p) {
  int k = 0;
  while ((int64_t{1} << k) < p) ++k;
  return k;
}

struct Power2Normalized {
  std::vector<int> rows;                      // rows with b^F_i > 0
  std::vector<int64_t> rounded_demands;       // bbar_i per original row (0 if dropped)
  std::vector<int64_t> rounded_supplies;      // sbar_j per column
  FracSolution scaled_solution;               // y = 4 xbar
  std::vector<std::vector<int64_t>> matrix;   // A^F[sbar]_ij = min(A_ij sbar_j, b^F_i), 0 on F
};

struct RowPartition {
  std::vector<int> large_rows;
  std::vector<int> small_rows;
  std::vector<std::vector<int>> large_columns;  // L_i per original row
  std::vector<std::vector<int>> small_columns;  // S_i per original row
};

struct SupplyClasses {
  int64_t max_supply = 0;                     // sbar_max over non-F columns
  std::vector<std::vector<int>> columns;      // C^(t)
  std::vector<int64_t> class_supply;          // sbar^(t)
  std::vector<int> threshold;                 // t_i per original row (-1 unless small)
  std::vector<std::vector<Rational>> contribution;  // bbar^(t)_i, [t][i]
};

struct SmallClassAudit {
  int t = 0;
  int64_t supply = 0;
  std::vector<int> columns;
  std::vector<int64_t> demands;  // per small row
  FracSolution witness;          // 6y restricted to the class
  IntSolution output;
};

struct RoundingAudit {
  Rational alpha = 0;
  FracSolution x_star;
  Rational lower_bound = 0;
  std::vector<int> f;
  int lp_iterations = 0;
  FracSolution xbar;
  ResidualSystem residual;
  Power2Normalized normalized;
  RowPartition partition;
  SupplyClasses classes;
  std::vector<SmallClassAudit> small_classes;
  FracSolution large_witness;
  IntSolution x_small, x_large, x_int, z;
  Rational cost_xbar = 0;
  Rational cost_small = 0, cost_large = 0, cost_z = 0;
  Rational small_bound = 0, large_bound = 0, final_bound = 0;
};

namespace internal {

inline std::vector<bool> Membership(int n, const std::vector<int>& set) {
  std::vector<bool> in(n, false);
  for (int j : set) in[j] = true;
  return in;
}

}  // namespace internal

// Rounds b^F up and s down to powers of two and checks that y = 4 xbar
// satisfies A^F[sbar] y >= bbar on every kept row.
inline Power2Normalized Power2Normalize(const ColumnRestrictedCIP& ccip, const ResidualSystem& residual,
                                        const FracSolution& xbar) {
  const ZeroOneCIP& a = ccip.base;
  const auto in_f = internal::Membership(a.num_cols, residual.columns_in_f);
  Power2Normalized p;
  p.rounded_demands.assign(a.num_rows, 0);
  for (int j = 0; j < a.num_cols; ++j) p.rounded_supplies.push_back(FloorPow2(ccip.supplies[j]));
  for (const auto& v : xbar) p.scaled_solution.push_back(4 * v);
  p.matrix.assign(a.num_rows, std::vector<int64_t>(a.num_cols, 0));
  for (int i = 0; i < a.num_rows; ++i) {
    if (residual.demands[i] == 0) continue;
    p.rows.push_back(i);
    p.rounded_demands[i] = CeilPow2(residual.demands[i]);
    Rational lhs = 0;
    for (int j = 0; j < a.num_cols; ++j) {
      if (in_f[j] || a.matrix[i][j] == 0) continue;
      p.matrix[i][j] = std::min(p.rounded_supplies[j], residual.demands[i]);
      lhs += Rational(p.matrix[i][j]) * p.scaled_solution[j];
    }
    if (lhs < Rational(p.rounded_demands[i])) {
      throw LemmaViolation("4*xbar does not cover rounded demand of row " + std::to_string(i));
    }
  }
  return p;
}

// Row i is large iff the contribution of S_i is at most that of L_i.
inline RowPartition PartitionRows(const ColumnRestrictedCIP& ccip, const ResidualSystem& residual,
                                  const Power2Normalized& norm) {
  const ZeroOneCIP& a = ccip.base;
  const auto in_f = internal::Membership(a.num_cols, residual.columns_in_f);
  RowPartition part;
  part.large_columns.assign(a.num_rows, {});
  part.small_columns.assign(a.num_rows, {});
  for (int i : norm.rows) {
    Rational large = 0, small = 0;
    for (int j = 0; j < a.num_cols; ++j) {
      if (in_f[j] || a.matrix[i][j] == 0) continue;
      const Rational contrib = Rational(norm.matrix[i][j]) * norm.scaled_solution[j];
      if (norm.rounded_supplies[j] >= norm.rounded_demands[i]) {
        part.large_columns[i].push_back(j);
        large += contrib;
      } else {
        part.small_columns[i].push_back(j);
        small += contrib;
      }
    }
    const Rational half = Rational(norm.rounded_demands[i]) / 2;
    if (small <= large) {
      part.large_rows.push_back(i);
      if (large < half) throw LemmaViolation("large row " + std::to_string(i) + " gets less than half from L_i");
    } else {
      part.small_rows.push_back(i);
      if (small < half) throw LemmaViolation("small row " + std::to_string(i) + " gets less than half from S_i");
    }
  }
  return part;
}

inline SupplyClasses BuildSupplyClasses(const ColumnRestrictedCIP& ccip, const ResidualSystem& residual,
                                        const Power2Normalized& norm, const RowPartition& part) {
  const ZeroOneCIP& a = ccip.base;
  const auto in_f = internal::Membership(a.num_cols, residual.columns_in_f);
  SupplyClasses sc;
  sc.threshold.assign(a.num_rows, -1);
  for (int j = 0; j < a.num_cols; ++j) {
    if (!in_f[j]) sc.max_supply = std::max(sc.max_supply, norm.rounded_supplies[j]);
  }
  if (sc.max_supply == 0) return sc;
  const int qmax = Log2Exact(sc.max_supply);
  for (int j = 0; j < a.num_cols; ++j) {
    if (in_f[j]) continue;
    const int t = qmax - Log2Exact(norm.rounded_supplies[j]);
    if (static_cast<int>(sc.columns.size()) <= t) sc.columns.resize(t + 1);
    sc.columns[t].push_back(j);
  }
  for (size_t t = 0; t < sc.columns.size(); ++t) sc.class_supply.push_back(sc.max_supply >> t);
  sc.contribution.assign(sc.columns.size(), std::vector<Rational>(a.num_rows, Rational(0)));
  for (int i : part.small_rows) {
    const int ti = std::max(0, qmax - Log2Exact(norm.rounded_demands[i]) + 1);
    sc.threshold[i] = ti;
    Rational total = 0;
    for (size_t t = ti; t < sc.columns.size(); ++t) {
      Rational sum = 0;
      for (int j : sc.columns[t]) sum += Rational(norm.matrix[i][j]) * norm.scaled_solution[j];
      sc.contribution[t][i] = 2 * sum;
      total += 2 * sum;
    }
    if (total < Rational(norm.rounded_demands[i])) {
      throw LemmaViolation("class contributions of small row " + std::to_string(i) + " fall short of bbar");
    }
  }
  return sc;
}

// Solves one 0,1 sub-program per supply class over the small rows and
// concatenates the answers.
inline IntSolution RoundSmallRows(const ColumnRestrictedCIP& ccip, const ResidualSystem& residual,
                                  const Power2Normalized& norm, const RowPartition& part,
                                  const SupplyClasses& classes, const CipOracle& oracle,
                                  const FracSolution& xbar, std::vector<SmallClassAudit>* audit = nullptr) {
  const ZeroOneCIP& a = ccip.base;
  IntSolution out(a.num_cols, 0);
  if (part.small_rows.empty()) return out;
  for (size_t t = 0; t < classes.columns.size(); ++t) {
    const auto& cols = classes.columns[t];
    if (cols.empty()) continue;
    SmallClassAudit ca;
    ca.t = static_cast<int>(t);
    ca.supply = classes.class_supply[t];
    ca.columns = cols;
    ZeroOneCIP sub;
    sub.num_rows = static_cast<int>(part.small_rows.size());
    sub.num_cols = static_cast<int>(cols.size());
    bool any_demand = false;
    for (int i : part.small_rows) {
      std::vector<int> row;
      for (int j : cols) row.push_back(a.matrix[i][j]);
      sub.matrix.push_back(row);
      const Rational q = 3 * classes.contribution[t][i] / Rational(ca.supply);
      const int64_t dem = ToInt64(Floor(q));
      sub.demands.push_back(dem);
      ca.demands.push_back(dem);
      any_demand = any_demand || dem > 0;
    }
    for (int j : cols) {
      sub.costs.push_back(a.costs[j]);
      sub.upper_bounds.push_back(a.upper_bounds[j]);
      const Rational w = 6 * norm.scaled_solution[j];
      if (IsFinite(a.upper_bounds[j]) && w > Rational(FiniteValue(a.upper_bounds[j]))) {
        throw LemmaViolation("6y exceeds d on column " + std::to_string(j));
      }
      ca.witness.push_back(w);
    }
    ca.output.assign(cols.size(), 0);
    if (any_demand) ca.output = CallOracle(oracle, sub, ca.witness);
    for (size_t k = 0; k < cols.size(); ++k) out[cols[k]] = ca.output[k];
    if (audit) audit->push_back(std::move(ca));
  }
  // Postconditions (a)-(c).
  if (!WithinBounds(a.upper_bounds, out)) throw LemmaViolation("small-row solution exceeds d");
  if (SolutionCost(a.costs, out) > 24 * oracle.gamma * SolutionCost(a.costs, xbar)) {
    throw LemmaViolation("small-row solution cost exceeds 24*gamma*cost(xbar)");
  }
  for (int i : part.small_rows) {
    Rational lhs = 0;
    for (int j = 0; j < a.num_cols; ++j) lhs += Rational(residual.matrix[i][j] * out[j]);
    if (lhs < Rational(residual.demands[i])) throw LemmaViolation("small row " + std::to_string(i) + " not covered");
  }
  return out;
}

// Builds the priority program over large rows (supply sbar_j, priority
// demand bbar_i) and rounds the witness 2y with the priority oracle.
inline IntSolution RoundLargeRows(const ColumnRestrictedCIP& ccip, const ResidualSystem& residual,
                                  const Power2Normalized& norm, const RowPartition& part,
                                  const PcipOracle& oracle, const FracSolution& xbar,
                                  FracSolution* witness_out = nullptr) {
  const ZeroOneCIP& a = ccip.base;
  IntSolution out(a.num_cols, 0);
  if (part.large_rows.empty()) return out;
  const auto in_f = internal::Membership(a.num_cols, residual.columns_in_f);
  std::vector<int> cols;
  for (int j = 0; j < a.num_cols; ++j) {
    if (in_f[j]) continue;
    if (IsFinite(a.upper_bounds[j]) && FiniteValue(a.upper_bounds[j]) == 0) continue;
    cols.push_back(j);
  }
  PriorityCIP p;
  p.base.num_rows = static_cast<int>(part.large_rows.size());
  p.base.num_cols = static_cast<int>(cols.size());
  for (int i : part.large_rows) {
    std::vector<int> row;
    for (int j : cols) row.push_back(a.matrix[i][j]);
    p.base.matrix.push_back(row);
    p.base.demands.push_back(1);
    p.priority_demands.push_back(norm.rounded_demands[i]);
  }
  FracSolution witness;
  for (int j : cols) {
    p.base.costs.push_back(a.costs[j]);
    p.base.upper_bounds.push_back(a.upper_bounds[j]);
    p.priority_supplies.push_back(norm.rounded_supplies[j]);
    witness.push_back(2 * norm.scaled_solution[j]);
  }
  if (cols.empty()) throw FractionalInfeasible("large rows exist but no usable column");
  IntSolution sub = CallOracle(oracle, p, witness);
  for (size_t k = 0; k < cols.size(); ++k) out[cols[k]] = sub[k];
  if (witness_out) *witness_out = witness;
  if (SolutionCost(a.costs, out) > 8 * oracle.omega * SolutionCost(a.costs, xbar)) {
    throw LemmaViolation("large-row solution cost exceeds 8*omega*cost(xbar)");
  }
  for (int i : part.large_rows) {
    Rational lhs = 0;
    for (int j = 0; j < a.num_cols; ++j) lhs += Rational(residual.matrix[i][j] * out[j]);
    if (lhs < Rational(residual.demands[i])) throw LemmaViolation("large row " + std::to_string(i) + " not covered");
  }
  return out;
}

// z_j = d_j on F, x_j elsewhere. Requires finite d on F.
inline IntSolution LiftSolution(const ColumnRestrictedCIP& ccip, const std::vector<int>& f, const IntSolution& x) {
  IntSolution z = x;
  for (int j : f) {
    if (!IsFinite(ccip.base.upper_bounds[j])) throw ValidationError("F contains an unbounded column");
    z[j] = FiniteValue(ccip.base.upper_bounds[j]);
  }
  return z;
}

struct RoundingResult {
  IntSolution z;
  RoundingAudit audit;
};

inline const Rational& RoundingAlpha() {
  static const Rational alpha(1, 24);
  return alpha;
}

inline RoundingResult RoundCcip(const ColumnRestrictedCIP& ccip, const CipOracle& cip_oracle,
                                const PcipOracle& pcip_oracle) {
  RequireValid(ccip);
  const ZeroOneCIP& a = ccip.base;
  RoundingResult res;
  RoundingAudit& au = res.audit;
  au.alpha = RoundingAlpha();
  AlphaRelaxedResult ar = AlphaRelaxed(ccip, au.alpha);
  au.x_star = ar.x;
  au.lower_bound = ar.lower_bound;
  au.f = ar.f;
  au.lp_iterations = ar.iterations;
  const auto in_f = internal::Membership(a.num_cols, au.f);
  au.xbar = ar.x;
  for (int j : au.f) au.xbar[j] = 0;
  au.residual = KcResidual(ccip, au.f);
  // xbar must satisfy the residual KC system within alpha*d.
  for (int i = 0; i < a.num_rows; ++i) {
    if (Dot(ToRationalVector(au.residual.matrix[i]), au.xbar) < Rational(au.residual.demands[i])) {
      throw LemmaViolation("xbar violates the residual knapsack-cover row " + std::to_string(i));
    }
  }
  au.normalized = Power2Normalize(ccip, au.residual, au.xbar);
  au.partition = PartitionRows(ccip, au.residual, au.normalized);
  au.classes = BuildSupplyClasses(ccip, au.residual, au.normalized, au.partition);
  au.x_small = RoundSmallRows(ccip, au.residual, au.normalized, au.partition, au.classes, cip_oracle, au.xbar,
                              &au.small_classes);
  au.x_large = RoundLargeRows(ccip, au.residual, au.normalized, au.partition, pcip_oracle, au.xbar,
                              &au.large_witness);
  au.x_int.assign(a.num_cols, 0);
  for (int j = 0; j < a.num_cols; ++j) {
    au.x_int[j] = in_f[j] ? 0 : std::max(au.x_small[j], au.x_large[j]);
  }
  au.z = LiftSolution(ccip, au.f, au.x_int);
  res.z = au.z;
  au.cost_xbar = SolutionCost(a.costs, au.xbar);
  au.cost_small = SolutionCost(a.costs, au.x_small);
  au.cost_large = SolutionCost(a.costs, au.x_large);
  au.cost_z = SolutionCost(a.costs, au.z);
  au.small_bound = 24 * cip_oracle.gamma * au.cost_xbar;
  au.large_bound = 8 * pcip_oracle.omega * au.cost_xbar;
  au.final_bound = (24 * cip_oracle.gamma + 8 * pcip_oracle.omega) * au.lower_bound;
  if (!IsFeasible(ccip, au.z)) throw LemmaViolation("lifted solution is infeasible");
  if (!WithinBounds(a.upper_bounds, au.z)) throw LemmaViolation("lifted solution exceeds d");
  if (au.cost_z > au.final_bound) throw LemmaViolation("rounded cost exceeds (24*gamma + 8*omega) * lower bound");
  return res;
}

// ---------------------------------------------------------------------------
// Rounding without knapsack-cover rows.

struct NoKcClassAudit {
  int t = 0;
  std::vector<int> columns;
  std::vector<Rational> class_demand;     // b^t_i
  std::vector<int64_t> min_entry;         // m^t_i (0 if the class misses row i)
  std::vector<int64_t> scaled_demand;     // a^t_i
  FracSolution witness;                   // 10x restricted
  IntSolution output;
};

struct NoKcResult {
  IntSolution x_int;
  std::vector<NoKcClassAudit> classes;
  Rational cost_x = 0;
  Rational cost_int = 0;
};

inline NoKcResult RoundNoKc(const ColumnRestrictedCIP& ccip, const FracSolution& x, const CipOracle& oracle) {
  RequireValid(ccip);
  const ZeroOneCIP& a = ccip.base;
  if (static_cast<int>(x.size()) != a.num_cols) throw ValidationError("fractional solution has wrong length");
  {
    auto bad = LpViolations(CanonicalRelaxation(ccip), x);
    if (!bad.empty()) throw ValidationError("x is not feasible for the canonical relaxation: " + bad.front());
  }
  std::string offending;
  for (int i = 0; i < a.num_rows; ++i) {
    for (int j = 0; j < a.num_cols; ++j) {
      if (a.matrix[i][j] == 1 && ccip.supplies[j] > a.demands[i]) {
        offending += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  if (!offending.empty()) throw AssumptionViolated("A_ij*s_j > b_i at (row,col):" + offending);
  NoKcResult res;
  res.x_int.assign(a.num_cols, 0);
  const int64_t smax = *std::max_element(ccip.supplies.begin(), ccip.supplies.end());
  // Class t: smax / 2^(t+1) < s_j <= smax / 2^t.
  std::vector<std::vector<int>> classes;
  for (int j = 0; j < a.num_cols; ++j) {
    int t = 0;
    while (ccip.supplies[j] * (int64_t{2} << t) <= smax) ++t;
    if (static_cast<int>(classes.size()) <= t) classes.resize(t + 1);
    classes[t].push_back(j);
  }
  std::vector<UpperBound> ten_d;
  for (const auto& d : a.upper_bounds) {
    ten_d.push_back(IsFinite(d) ? UpperBound{10 * FiniteValue(d)} : UpperBound{Unbounded{}});
  }
  for (size_t t = 0; t < classes.size(); ++t) {
    const auto& cols = classes[t];
    if (cols.empty()) continue;
    NoKcClassAudit ca;
    ca.t = static_cast<int>(t);
    ca.columns = cols;
    ZeroOneCIP sub;
    sub.num_rows = a.num_rows;
    sub.num_cols = static_cast<int>(cols.size());
    bool any = false;
    for (int i = 0; i < a.num_rows; ++i) {
      std::vector<int> row;
      Rational bt = 0;
      int64_t mt = 0;
      for (int j : cols) {
        row.push_back(a.matrix[i][j]);
        if (a.matrix[i][j] == 0) continue;
        bt += Rational(ccip.supplies[j]) * x[j];
        mt = mt == 0 ? ccip.supplies[j] : std::min(mt, ccip.supplies[j]);
      }
      const int64_t at = mt == 0 ? 0 : ToInt64(Floor(5 * bt / Rational(mt)));
      sub.matrix.push_back(row);
      sub.demands.push_back(at);
      ca.class_demand.push_back(bt);
      ca.min_entry.push_back(mt);
      ca.scaled_demand.push_back(at);
      any = any || at > 0;
    }
    for (int j : cols) {
      sub.costs.push_back(a.costs[j]);
      sub.upper_bounds.push_back(ten_d[j]);
      ca.witness.push_back(10 * x[j]);
    }
    ca.output.assign(cols.size(), 0);
    if (any) ca.output = CallOracle(oracle, sub, ca.witness);
    for (size_t k = 0; k < cols.size(); ++k) res.x_int[cols[k]] += ca.output[k];
    res.classes.push_back(std::move(ca));
  }
  res.cost_x = SolutionCost(a.costs, x);
  res.cost_int = SolutionCost(a.costs, res.x_int);
  if (!IsFeasible(ccip, res.x_int)) throw LemmaViolation("rounded solution violates A[s]x >= b");
  if (!WithinBounds(ten_d, res.x_int)) throw LemmaViolation("rounded solution exceeds 10d");
  if (res.cost_int > 10 * oracle.gamma * res.cost_x) throw LemmaViolation("rounded cost exceeds 10*gamma*cost(x)");
  return res;
}

}  // namespace priocover

#endif  // PRIOCOVER_CCIP_ROUNDING_HPP_
