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

// Dense two-phase primal simplex over exact rationals.
//
// Every constraint row receives its own artificial column; Bland's rule
// (smallest eligible index for both entering and leaving variables) prevents
// cycling. Artificial columns are kept in the tableau during phase 2 but may
// not enter the basis, which lets the row duals be read off their reduced
// costs at the optimum.

#ifndef PRIOCOVER_SIMPLEX_HPP_
#define PRIOCOVER_SIMPLEX_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/rational.hpp"

namespace priocover {

enum class Sense { kGreaterEqual, kLessEqual, kEqual };

struct LpRow {
  std::vector<Rational> coefficients;
  Sense sense = Sense::kGreaterEqual;
  Rational rhs = 0;
  std::string label;
};

// min objective . x  subject to rows, 0 <= x_j <= upper_bounds[j].
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::vector<std::optional<Rational>> upper_bounds;  // nullopt = Unbounded

  int NumVars() const { return static_cast<int>(objective.size()); }

  void AddRow(std::vector<Rational> coefficients, Sense sense, Rational rhs, std::string label) {
    rows.push_back({std::move(coefficients), sense, std::move(rhs), std::move(label)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* LpStatusName(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value = 0;
  // Structural variables that are basic at the optimum (the vertex
  // certificate); other structurals are at zero.
  std::vector<int> basis;
  // One dual value per LP row, followed by one per finite upper bound (in
  // variable order). Signs follow the min-form convention: >= rows have
  // nonnegative duals, <= rows nonpositive.
  std::vector<Rational> duals;
  int pivots = 0;
};

// Returns human-readable descriptions of violated rows/bounds; empty when x
// satisfies the LP exactly.
inline std::vector<std::string> LpViolations(const LinearProgram& lp, const std::vector<Rational>& x) {
  std::vector<std::string> out;
  for (const auto& row : lp.rows) {
    Rational lhs = Dot(row.coefficients, x);
    bool ok = row.sense == Sense::kGreaterEqual ? lhs >= row.rhs
              : row.sense == Sense::kLessEqual  ? lhs <= row.rhs
                                                : lhs == row.rhs;
    if (!ok) out.push_back(row.label + ": lhs " + ToString(lhs) + " vs rhs " + ToString(row.rhs));
  }
  for (int j = 0; j < lp.NumVars(); ++j) {
    if (x[j] < 0) out.push_back("x" + std::to_string(j) + " negative");
    if (lp.upper_bounds.size() > static_cast<size_t>(j) && lp.upper_bounds[j] &&
        x[j] > *lp.upper_bounds[j]) {
      out.push_back("x" + std::to_string(j) + " above its upper bound");
    }
  }
  return out;
}

namespace internal {

class Tableau {
 public:
  // rows: m equality rows over `cols` columns with nonnegative rhs.
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs, std::vector<int> basis)
      : a_(std::move(a)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  int NumRows() const { return static_cast<int>(a_.size()); }
  int NumCols() const { return a_.empty() ? 0 : static_cast<int>(a_[0].size()); }
  const std::vector<int>& basis() const { return basis_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const Rational& At(int i, int j) const { return a_[i][j]; }

  // Reduced costs d_j = c_j - c_B B^{-1} A_j and objective value c_B B^{-1} b.
  void Price(const std::vector<Rational>& cost, std::vector<Rational>& reduced, Rational& value) const {
    const int n = NumCols();
    reduced = cost;
    value = 0;
    for (int i = 0; i < NumRows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      value += cb * rhs_[i];
      for (int j = 0; j < n; ++j) {
        if (a_[i][j] != 0) reduced[j] -= cb * a_[i][j];
      }
    }
  }

  void Pivot(int r, int c) {
    const int n = NumCols();
    Rational p = a_[r][c];
    for (int j = 0; j < n; ++j) {
      if (a_[r][j] != 0) a_[r][j] /= p;
    }
    rhs_[r] /= p;
    for (int i = 0; i < NumRows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (int j = 0; j < n; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Runs Bland-rule simplex for `cost`, allowing only columns with
  // allowed[j] to enter. Returns false if unbounded.
  bool Optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed, int& pivots) {
    std::vector<Rational> reduced;
    Rational value;
    for (;;) {
      Price(cost, reduced, value);
      int enter = -1;
      for (int j = 0; j < NumCols(); ++j) {
        if (allowed[j] && reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < NumRows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
      ++pivots;
    }
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
};

}  // namespace internal

inline LpResult SimplexSolve(const LinearProgram& lp) {
  const int n = lp.NumVars();
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw ValidationError("LP row '" + row.label + "' has wrong width");
    }
  }
  // Collect all constraints, finite upper bounds becoming <= rows.
  struct Con {
    std::vector<Rational> coef;
    Sense sense;
    Rational rhs;
  };
  std::vector<Con> cons;
  for (const auto& row : lp.rows) cons.push_back({row.coefficients, row.sense, row.rhs});
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(lp.upper_bounds.size()) > j && lp.upper_bounds[j]) {
      std::vector<Rational> e(n, Rational(0));
      e[j] = 1;
      cons.push_back({std::move(e), Sense::kLessEqual, *lp.upper_bounds[j]});
    }
  }
  const int m = static_cast<int>(cons.size());
  // Column layout: [structural n][slack per inequality][artificial m].
  std::vector<int> slack_col(m, -1);
  int cols = n;
  for (int i = 0; i < m; ++i) {
    if (cons[i].sense != Sense::kEqual) slack_col[i] = cols++;
  }
  const int art0 = cols;
  cols += m;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs(m);
  std::vector<int> sign(m, 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cons[i].coef[j];
    if (cons[i].sense == Sense::kGreaterEqual) a[i][slack_col[i]] = -1;
    if (cons[i].sense == Sense::kLessEqual) a[i][slack_col[i]] = 1;
    rhs[i] = cons[i].rhs;
    if (rhs[i] < 0) {
      sign[i] = -1;
      for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
      rhs[i] = -rhs[i];
    }
    a[i][art0 + i] = 1;
    basis[i] = art0 + i;
  }
  internal::Tableau tab(std::move(a), std::move(rhs), std::move(basis));
  LpResult result;

  // Phase 1: minimise the sum of artificials.
  std::vector<Rational> phase1(cols, Rational(0));
  for (int i = 0; i < m; ++i) phase1[art0 + i] = 1;
  std::vector<bool> all(cols, true);
  tab.Optimize(phase1, all, result.pivots);
  {
    std::vector<Rational> reduced;
    Rational value;
    tab.Price(phase1, reduced, value);
    if (value > 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
  }
  // Drive zero-level artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (tab.basis()[i] < art0) continue;
    for (int j = 0; j < art0; ++j) {
      if (tab.At(i, j) != 0) {
        tab.Pivot(i, j);
        ++result.pivots;
        break;
      }
    }
  }

  // Phase 2.
  std::vector<Rational> cost(cols, Rational(0));
  for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
  std::vector<bool> allowed(cols, true);
  for (int i = 0; i < m; ++i) allowed[art0 + i] = false;
  if (!tab.Optimize(cost, allowed, result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    int b = tab.basis()[i];
    if (b < n) {
      result.x[b] = tab.rhs()[i];
      result.basis.push_back(b);
    }
  }
  std::sort(result.basis.begin(), result.basis.end());
  result.value = Dot(lp.objective, result.x);
  std::vector<Rational> reduced;
  Rational value;
  tab.Price(cost, reduced, value);
  result.duals.resize(m);
  for (int i = 0; i < m; ++i) result.duals[i] = -Rational(sign[i]) * reduced[art0 + i];
  return result;
}

}  // namespace priocover

#endif  // PRIOCOVER_SIMPLEX_HPP_
