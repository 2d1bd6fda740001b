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

// Integral oracles: the exact solver for interval-structured 0,1-CIPs, the
// oracle interfaces consumed by the rounding pipelines, and the brute-force
// ground-truth solver.

#ifndef PRIOCOVER_ORACLES_HPP_
#define PRIOCOVER_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/rational.hpp"
#include "priocover/relaxation.hpp"
#include "priocover/simplex.hpp"

namespace priocover {

// Rounds a 0,1-CIP: given a fractional solution feasible for the canonical
// LP, returns an integral solution within bounds of cost at most
// gamma * cost(fractional).
struct CipOracle {
  std::string name;
  Rational gamma = 1;
  std::function<IntSolution(const ZeroOneCIP&, const FracSolution&)> solve;
};

// Rounds a priority CIP to a 0/1 solution of cost at most
// omega * cost(fractional).
struct PcipOracle {
  std::string name;
  Rational omega = 1;
  std::function<IntSolution(const PriorityCIP&, const FracSolution&)> solve;
};

namespace internal {

template <typename Instance>
void CheckWitness(const Instance& inst, const FracSolution& witness, const std::string& who) {
  LinearProgram lp = CanonicalRelaxation(inst);
  auto bad = LpViolations(lp, witness);
  if (!bad.empty()) throw FractionalInfeasible(who + ": fractional witness infeasible (" + bad.front() + ")");
}

template <typename Instance>
void CheckOracleOutput(const Instance& inst, const std::vector<UpperBound>& bounds, const FracSolution& witness,
                       const IntSolution& out, const Rational& factor, bool zero_one, const std::string& who) {
  const CoverSystem cs = ToCoverSystem(inst);
  if (static_cast<int>(out.size()) != cs.NumCols()) throw LemmaViolation(who + ": output has wrong length");
  for (int64_t v : out) {
    if (v < 0 || (zero_one && v > 1)) throw LemmaViolation(who + ": output entry out of range");
  }
  if (!WithinBounds(bounds, out)) throw LemmaViolation(who + ": output exceeds upper bounds");
  if (!CheckCover(cs, out).feasible) throw LemmaViolation(who + ": output infeasible");
  if (SolutionCost(cs.costs, out) > factor * SolutionCost(cs.costs, witness)) {
    throw LemmaViolation(who + ": output cost exceeds factor times fractional cost");
  }
}

}  // namespace internal

// Invokes a CIP oracle and audits its contract.
inline IntSolution CallOracle(const CipOracle& oracle, const ZeroOneCIP& cip, const FracSolution& witness) {
  internal::CheckWitness(cip, witness, oracle.name);
  IntSolution out = oracle.solve(cip, witness);
  internal::CheckOracleOutput(cip, cip.upper_bounds, witness, out, oracle.gamma, false, oracle.name);
  return out;
}

inline IntSolution CallOracle(const PcipOracle& oracle, const PriorityCIP& pcip, const FracSolution& witness) {
  internal::CheckWitness(pcip, witness, oracle.name);
  IntSolution out = oracle.solve(pcip, witness);
  internal::CheckOracleOutput(pcip, pcip.base.upper_bounds, witness, out, oracle.omega, true, oracle.name);
  return out;
}

// Exact solver for 0,1-CIPs whose columns are intervals of rows: the
// constraint matrix (with bound rows) is totally unimodular, so the simplex
// optimum is an integral vertex. Integrality is verified, not assumed.
inline IntSolution SolveTuLineCover(const ZeroOneCIP& cip, const FracSolution& fractional) {
  RequireValid(cip);
  LinearProgram lp = CanonicalRelaxation(cip);
  if (static_cast<int>(fractional.size()) != cip.num_cols) {
    throw ValidationError("fractional solution has wrong length");
  }
  LpResult r = SimplexSolve(lp);
  if (r.status == LpStatus::kInfeasible) throw Infeasible("interval CIP is infeasible");
  if (r.status == LpStatus::kUnbounded) throw ValidationError("interval CIP LP is unbounded");
  IntSolution x(cip.num_cols, 0);
  for (int j = 0; j < cip.num_cols; ++j) {
    if (!IsInteger(r.x[j])) {
      throw NonIntegralVertex("LP vertex has fractional entry x" + std::to_string(j) + " = " + ToString(r.x[j]));
    }
    x[j] = ToInt64(Numerator(r.x[j]));
  }
  return x;
}

inline CipOracle TuLineOracle() {
  return {"tu-line", Rational(1), [](const ZeroOneCIP& cip, const FracSolution& frac) {
            return SolveTuLineCover(cip, frac);
          }};
}

// ---------------------------------------------------------------------------
// Brute force.

struct BruteForceResult {
  int64_t cost = 0;
  IntSolution x;
  int64_t nodes = 0;
};

inline constexpr int64_t kDefaultBruteForceBudget = 50'000'000;

// Per-column multiplicity caps: 1 for priority-style systems, otherwise
// min(d_j, max over touched rows of ceil(b_i / M_ij)).
inline std::vector<int64_t> BruteForceCaps(const CoverSystem& cs) {
  std::vector<int64_t> caps(cs.NumCols(), 0);
  for (int j = 0; j < cs.NumCols(); ++j) {
    int64_t need = 0;
    for (int i = 0; i < cs.NumRows(); ++i) {
      const int64_t m = cs.matrix[i][j];
      if (m <= 0 || cs.demands[i] <= 0) continue;
      need = std::max(need, cs.unit_columns ? int64_t{1} : (cs.demands[i] + m - 1) / m);
    }
    if (IsFinite(cs.caps[j])) need = std::min(need, FiniteValue(cs.caps[j]));
    caps[j] = need;
  }
  return caps;
}

// Exact optimum by depth-first search in lexicographic order of the
// solution vector with strict-improvement acceptance, so ties resolve to the
// lexicographically smallest optimal vector.
inline BruteForceResult BruteForceOpt(const CoverSystem& cs, int64_t budget = kDefaultBruteForceBudget) {
  const int m = cs.NumRows(), n = cs.NumCols();
  const std::vector<int64_t> caps = BruteForceCaps(cs);
  // suffix[k][i]: coverage available to row i from columns k..n-1 at caps.
  std::vector<std::vector<int64_t>> suffix(n + 1, std::vector<int64_t>(m, 0));
  for (int k = n - 1; k >= 0; --k) {
    for (int i = 0; i < m; ++i) suffix[k][i] = suffix[k + 1][i] + cs.matrix[i][k] * caps[k];
  }
  std::vector<int64_t> cov(m, 0);
  IntSolution cur(n, 0), best_x;
  int64_t best = std::numeric_limits<int64_t>::max();
  int64_t nodes = 0;
  std::function<void(int, int64_t)> dfs = [&](int k, int64_t cost) {
    if (++nodes > budget) throw BudgetExceeded("brute force exceeded " + std::to_string(budget) + " nodes");
    if (cost >= best) return;
    bool done = true;
    for (int i = 0; i < m; ++i) {
      if (cov[i] < cs.demands[i]) {
        done = false;
        if (cov[i] + suffix[k][i] < cs.demands[i]) return;
      }
    }
    if (done) {
      best = cost;
      best_x = cur;
      return;
    }
    if (k == n) return;
    for (int64_t v = 0; v <= caps[k]; ++v) {
      cur[k] = v;
      if (v > 0) {
        for (int i = 0; i < m; ++i) cov[i] += cs.matrix[i][k];
      }
      dfs(k + 1, cost + v * cs.costs[k]);
    }
    for (int i = 0; i < m; ++i) cov[i] -= cs.matrix[i][k] * caps[k];
    cur[k] = 0;
  };
  dfs(0, 0);
  if (best_x.empty() && best == std::numeric_limits<int64_t>::max()) {
    throw Infeasible("no integral solution within the multiplicity caps");
  }
  return {best, best_x, nodes};
}

template <typename Instance>
BruteForceResult BruteForceOpt(const Instance& inst, int64_t budget = kDefaultBruteForceBudget) {
  RequireValid(inst);
  return BruteForceOpt(ToCoverSystem(inst), budget);
}

}  // namespace priocover

#endif  // PRIOCOVER_ORACLES_HPP_
