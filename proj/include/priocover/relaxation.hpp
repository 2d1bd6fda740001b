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

// Canonical LP relaxations, knapsack-cover residual systems and the
// constraint-generation loop that computes alpha-relaxed solutions.

#ifndef PRIOCOVER_RELAXATION_HPP_
#define PRIOCOVER_RELAXATION_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/rational.hpp"
#include "priocover/simplex.hpp"

namespace priocover {

// One >= row per row of the cover system; finite caps become variable upper
// bounds when `use_caps` is set.
inline LinearProgram RelaxCoverSystem(const CoverSystem& cs, bool use_caps) {
  LinearProgram lp;
  lp.objective = ToRationalVector(cs.costs);
  for (int i = 0; i < cs.NumRows(); ++i) {
    lp.AddRow(ToRationalVector(cs.matrix[i]), Sense::kGreaterEqual, Rational(cs.demands[i]),
              cs.row_labels.empty() ? "row " + std::to_string(i) : cs.row_labels[i]);
  }
  lp.upper_bounds.assign(cs.NumCols(), std::nullopt);
  if (use_caps) {
    for (int j = 0; j < cs.NumCols(); ++j) {
      if (IsFinite(cs.caps[j])) lp.upper_bounds[j] = Rational(FiniteValue(cs.caps[j]));
    }
  }
  return lp;
}

// cov{A[s], b, c, d}: A[s]x >= b, 0 <= x <= d.
inline LinearProgram CanonicalRelaxation(const ColumnRestrictedCIP& ccip) {
  return RelaxCoverSystem(ToCoverSystem(ccip), true);
}

inline LinearProgram CanonicalRelaxation(const ZeroOneCIP& cip) {
  return RelaxCoverSystem(ToCoverSystem(cip), true);
}

// A[s,pi]x >= 1 with the carried upper bounds d.
inline LinearProgram CanonicalRelaxation(const PriorityCIP& pcip) {
  return RelaxCoverSystem(ToCoverSystem(pcip), true);
}

// Line and tree covers carry no upper bounds (minimal solutions are 0/1).
inline LinearProgram CanonicalRelaxation(const LineInstance& line) {
  return RelaxCoverSystem(ToCoverSystem(line), false);
}

inline LinearProgram CanonicalRelaxation(const TwoPriorityLineInstance& line) {
  return RelaxCoverSystem(ToCoverSystem(line), false);
}

inline LinearProgram CanonicalRelaxation(const TreeInstance& tree) {
  return RelaxCoverSystem(ToCoverSystem(tree), false);
}

inline LinearProgram CanonicalRelaxation(const RectCoverInstance& rect) {
  return RelaxCoverSystem(ToCoverSystem(rect), false);
}

// Solves the canonical relaxation; throws Infeasible if it has no solution.
template <typename Instance>
LpResult SolveCanonical(const Instance& inst) {
  LpResult r = SimplexSolve(CanonicalRelaxation(inst));
  if (r.status == LpStatus::kInfeasible) throw Infeasible("canonical relaxation is infeasible");
  if (r.status == LpStatus::kUnbounded) throw ValidationError("canonical relaxation is unbounded");
  return r;
}

// ---------------------------------------------------------------------------
// Knapsack-cover residual systems.

struct ResidualSystem {
  std::vector<std::vector<int64_t>> matrix;  // A^F[s]
  std::vector<int64_t> demands;              // b^F
  std::vector<int> columns_in_f;             // F, sorted
  // Set when some j in F has Unbounded d_j: its contribution is treated as
  // infinite, zeroing the residual demand of every row it touches.
  bool unbounded_in_f = false;
};

inline ResidualSystem KcResidual(const ColumnRestrictedCIP& ccip, const std::vector<int>& f) {
  const ZeroOneCIP& a = ccip.base;
  const auto as = ApplySupplies(ccip);
  ResidualSystem r;
  r.columns_in_f = f;
  std::sort(r.columns_in_f.begin(), r.columns_in_f.end());
  r.columns_in_f.erase(std::unique(r.columns_in_f.begin(), r.columns_in_f.end()), r.columns_in_f.end());
  std::vector<bool> in_f(a.num_cols, false);
  for (int j : r.columns_in_f) {
    if (j < 0 || j >= a.num_cols) throw ValidationError("column set F out of range");
    in_f[j] = true;
    if (!IsFinite(a.upper_bounds[j])) r.unbounded_in_f = true;
  }
  r.matrix.assign(a.num_rows, std::vector<int64_t>(a.num_cols, 0));
  r.demands.assign(a.num_rows, 0);
  for (int i = 0; i < a.num_rows; ++i) {
    int64_t residual = a.demands[i];
    for (int j : r.columns_in_f) {
      if (as[i][j] == 0) continue;
      if (!IsFinite(a.upper_bounds[j])) {
        residual = 0;
        break;
      }
      residual -= as[i][j] * FiniteValue(a.upper_bounds[j]);
      if (residual <= 0) {
        residual = 0;
        break;
      }
    }
    r.demands[i] = std::max<int64_t>(0, residual);
    for (int j = 0; j < a.num_cols; ++j) {
      r.matrix[i][j] = in_f[j] ? 0 : std::min(as[i][j], r.demands[i]);
    }
  }
  return r;
}

// F(x) = { j : d_j finite and x_j >= alpha * d_j }.
inline std::vector<int> AlphaSet(const ColumnRestrictedCIP& ccip, const FracSolution& x,
                                 const Rational& alpha) {
  std::vector<int> f;
  for (int j = 0; j < ccip.base.num_cols; ++j) {
    const UpperBound& d = ccip.base.upper_bounds[j];
    if (IsFinite(d) && x[j] >= alpha * Rational(FiniteValue(d))) f.push_back(j);
  }
  return f;
}

inline std::string KcLabel(const std::vector<int>& f, int row) {
  std::string s = "kc[F={";
  for (size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
  return s + "}][" + std::to_string(row) + "]";
}

struct AlphaRelaxedResult {
  FracSolution x;
  Rational lower_bound = 0;
  std::vector<int> f;
  int iterations = 0;
  int kc_rows = 0;
};

inline constexpr int kDefaultAlphaIterationCap = 200;

// Constraint generation: start from the F = {} knapsack-cover rows plus the
// bounds 0 <= x <= d, then repeatedly add the KC rows of F(x*) violated by
// the current optimum. Every sub-LP is a relaxation of the full KC program,
// so cost(x*) never exceeds its optimum.
inline AlphaRelaxedResult AlphaRelaxed(const ColumnRestrictedCIP& ccip, const Rational& alpha,
                                       int iteration_cap = kDefaultAlphaIterationCap) {
  if (alpha <= 0 || alpha >= 1) throw ValidationError("alpha must lie in (0,1)");
  RequireValid(ccip);
  const ZeroOneCIP& a = ccip.base;
  LinearProgram lp;
  lp.objective = ToRationalVector(a.costs);
  lp.upper_bounds.assign(a.num_cols, std::nullopt);
  for (int j = 0; j < a.num_cols; ++j) {
    if (IsFinite(a.upper_bounds[j])) lp.upper_bounds[j] = Rational(FiniteValue(a.upper_bounds[j]));
  }
  std::set<std::string> present;
  auto add_rows = [&](const std::vector<int>& f, const FracSolution* x) {
    ResidualSystem res = KcResidual(ccip, f);
    int added = 0;
    for (int i = 0; i < a.num_rows; ++i) {
      if (res.demands[i] == 0) continue;
      std::string label = KcLabel(res.columns_in_f, i);
      if (present.count(label)) continue;
      std::vector<Rational> coef = ToRationalVector(res.matrix[i]);
      if (x != nullptr && Dot(coef, *x) >= Rational(res.demands[i])) continue;
      lp.AddRow(std::move(coef), Sense::kGreaterEqual, Rational(res.demands[i]), label);
      present.insert(label);
      ++added;
    }
    return added;
  };
  add_rows({}, nullptr);
  AlphaRelaxedResult out;
  for (int it = 1; it <= iteration_cap; ++it) {
    LpResult r = SimplexSolve(lp);
    if (r.status == LpStatus::kInfeasible) throw Infeasible("knapsack-cover relaxation is infeasible");
    if (r.status == LpStatus::kUnbounded) throw ValidationError("knapsack-cover relaxation is unbounded");
    std::vector<int> f = AlphaSet(ccip, r.x, alpha);
    if (add_rows(f, &r.x) == 0) {
      out.x = r.x;
      out.lower_bound = r.value;
      out.f = f;
      out.iterations = it;
      out.kc_rows = static_cast<int>(lp.rows.size());
      return out;
    }
  }
  throw IterationBudgetExceeded("alpha-relaxed constraint generation did not stabilise within " +
                                std::to_string(iteration_cap) + " rounds");
}

// True iff x satisfies every KC row of F(x) (the alpha-relaxed property).
inline bool SatisfiesOwnKc(const ColumnRestrictedCIP& ccip, const FracSolution& x, const Rational& alpha) {
  ResidualSystem res = KcResidual(ccip, AlphaSet(ccip, x, alpha));
  for (int i = 0; i < ccip.base.num_rows; ++i) {
    if (Dot(ToRationalVector(res.matrix[i]), x) < Rational(res.demands[i])) return false;
  }
  return true;
}

}  // namespace priocover

#endif  // PRIOCOVER_RELAXATION_HPP_
