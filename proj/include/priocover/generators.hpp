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

// Seeded random instance generators and small-graph enumeration used by the
// property suites, the acceptance harness and `priocover generate`.

#ifndef PRIOCOVER_GENERATORS_HPP_
#define PRIOCOVER_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/ptc.hpp"

namespace priocover {

using Rng = std::mt19937_64;

inline constexpr uint64_t kDefaultSeed = 20240611;

// Seed from PRIOCOVER_SEED when set, otherwise `fallback`.
inline uint64_t SeedFromEnvironment(uint64_t fallback = kDefaultSeed) {
  const char* s = std::getenv("PRIOCOVER_SEED");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw ValidationError(std::string("PRIOCOVER_SEED is not an unsigned integer: ") + s);
  return v;
}

inline int64_t Uniform(Rng& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

struct LineParams {
  int max_edges = 10;
  int max_segments = 15;
  int64_t max_priority = 8;
  int64_t max_cost = 20;
  bool ensure_feasible = true;
};

// Adds one segment per maximal run of uncovered edges, spanning the run with
// supply equal to its largest priority.
inline void MakeLineFeasible(Rng& rng, LineInstance& line, int64_t max_cost) {
  std::vector<bool> covered(line.num_edges + 1, false);
  for (int e = 1; e <= line.num_edges; ++e) {
    for (int j = 0; j < static_cast<int>(line.segments.size()); ++j) covered[e] = covered[e] || line.Covers(j, e);
  }
  for (int e = 1; e <= line.num_edges; ++e) {
    if (covered[e]) continue;
    int r = e;
    int64_t top = line.Priority(e);
    while (r + 1 <= line.num_edges && !covered[r + 1]) top = std::max(top, line.Priority(++r));
    line.segments.push_back({e, r, top, Uniform(rng, 1, max_cost)});
    e = r;
  }
}

// With ensure_feasible, draws are repeated until the repaired instance stays
// within max_segments.
inline LineInstance RandomLine(Rng& rng, const LineParams& p = {}) {
  for (;;) {
    LineInstance line;
    line.num_edges = static_cast<int>(Uniform(rng, 1, p.max_edges));
    for (int e = 0; e < line.num_edges; ++e) line.edge_priorities.push_back(Uniform(rng, 1, p.max_priority));
    const int m = static_cast<int>(Uniform(rng, 1, p.max_segments));
    for (int j = 0; j < m; ++j) {
      int l = static_cast<int>(Uniform(rng, 1, line.num_edges));
      int r = static_cast<int>(Uniform(rng, 1, line.num_edges));
      if (l > r) std::swap(l, r);
      line.segments.push_back({l, r, Uniform(rng, 1, p.max_priority), Uniform(rng, 1, p.max_cost)});
    }
    if (!p.ensure_feasible) return line;
    MakeLineFeasible(rng, line, p.max_cost);
    if (static_cast<int>(line.segments.size()) <= p.max_segments) return line;
  }
}

struct TreeParams {
  int max_nodes = 8;
  int max_segments = 12;
  int64_t max_priority = 4;
  int64_t max_cost = 10;
  bool unit_costs = false;
  bool ensure_feasible = true;
};

// Random rooted tree on nodes 0..n-1 with root 0; parents have smaller ids
// and child orders are shuffled.
inline TreeInstance RandomTreeShape(Rng& rng, int num_nodes, int64_t max_priority) {
  TreeInstance t;
  t.num_nodes = num_nodes;
  t.root = 0;
  t.parent.assign(num_nodes, -1);
  t.edge_priorities.assign(num_nodes, 0);
  t.child_order.assign(num_nodes, {});
  for (int v = 1; v < num_nodes; ++v) {
    t.parent[v] = static_cast<int>(Uniform(rng, 0, v - 1));
    t.edge_priorities[v] = Uniform(rng, 1, max_priority);
    t.child_order[t.parent[v]].push_back(v);
  }
  for (auto& order : t.child_order) std::shuffle(order.begin(), order.end(), rng);
  return t;
}

inline TreeSegment RandomTreeSegment(Rng& rng, const TreeInstance& t, int64_t max_priority, int64_t max_cost,
                                     bool unit) {
  const int bottom = static_cast<int>(Uniform(rng, 1, t.num_nodes - 1));
  std::vector<int> ancestors;
  for (int v = t.parent[bottom]; v >= 0; v = t.parent[v]) ancestors.push_back(v);
  const int top = ancestors[Uniform(rng, 0, static_cast<int64_t>(ancestors.size()) - 1)];
  return {top, bottom, Uniform(rng, 1, max_priority), unit ? 1 : Uniform(rng, 1, max_cost)};
}

// With ensure_feasible, every uncovered edge gets a segment from a random
// ancestor with maximal supply; draws repeat until the repaired instance stays
// within max_segments.
inline TreeInstance RandomTree(Rng& rng, const TreeParams& p = {}) {
  for (;;) {
    TreeInstance t = RandomTreeShape(rng, static_cast<int>(Uniform(rng, 2, p.max_nodes)), p.max_priority);
    const int m = static_cast<int>(Uniform(rng, 1, p.max_segments));
    for (int j = 0; j < m; ++j) {
      t.segments.push_back(RandomTreeSegment(rng, t, p.max_priority, p.max_cost, p.unit_costs));
    }
    if (!p.ensure_feasible) return t;
    for (int e : t.Edges()) {
      bool covered = false;
      for (int j = 0; j < static_cast<int>(t.segments.size()); ++j) covered = covered || t.Covers(j, e);
      if (covered) continue;
      std::vector<int> ancestors;
      for (int v = t.parent[e]; v >= 0; v = t.parent[v]) ancestors.push_back(v);
      const int top = ancestors[Uniform(rng, 0, static_cast<int64_t>(ancestors.size()) - 1)];
      t.segments.push_back({top, e, p.max_priority, p.unit_costs ? 1 : Uniform(rng, 1, p.max_cost)});
    }
    if (static_cast<int>(t.segments.size()) <= p.max_segments) return t;
  }
}

struct CcipParams {
  int max_rows = 6;
  int max_cols = 8;
  int64_t max_demand = 12;
  int64_t max_supply = 8;
  int64_t max_bound = 3;
  int64_t max_cost = 10;
};

// Column-restricted line cover: rows are edges 1..n, every column is an
// interval, bounds are finite or unbounded. Feasible by construction.
inline ColumnRestrictedCIP RandomLineCcip(Rng& rng, const CcipParams& p = {}) {
  ColumnRestrictedCIP c;
  const int n = static_cast<int>(Uniform(rng, 1, p.max_rows));
  const int m = static_cast<int>(Uniform(rng, 1, p.max_cols));
  c.base.num_rows = n;
  c.base.matrix.assign(n, {});
  for (int i = 0; i < n; ++i) c.base.demands.push_back(Uniform(rng, 1, p.max_demand));
  auto add_column = [&](int l, int r, int64_t supply, UpperBound d) {
    for (int i = 0; i < n; ++i) c.base.matrix[i].push_back(l <= i && i <= r ? 1 : 0);
    c.supplies.push_back(supply);
    c.base.upper_bounds.push_back(d);
    c.base.costs.push_back(Uniform(rng, 1, p.max_cost));
    ++c.base.num_cols;
  };
  auto random_bound = [&]() -> UpperBound {
    if (Uniform(rng, 0, 3) == 0) return Unbounded{};
    return Uniform(rng, 1, p.max_bound);
  };
  for (int j = 0; j < m; ++j) {
    int l = static_cast<int>(Uniform(rng, 0, n - 1));
    int r = static_cast<int>(Uniform(rng, 0, n - 1));
    if (l > r) std::swap(l, r);
    add_column(l, r, Uniform(rng, 1, p.max_supply), random_bound());
  }
  for (int i = 0; i < n; ++i) {
    bool unbounded = false;
    int64_t capacity = 0;
    for (int j = 0; j < c.base.num_cols; ++j) {
      if (!c.base.matrix[i][j]) continue;
      if (!IsFinite(c.base.upper_bounds[j])) unbounded = true;
      else capacity += c.supplies[j] * FiniteValue(c.base.upper_bounds[j]);
    }
    if (!unbounded && capacity < c.base.demands[i]) {
      const int l = static_cast<int>(Uniform(rng, 0, i));
      add_column(l, i, Uniform(rng, 1, p.max_supply), Unbounded{});
    }
  }
  return c;
}

// Column-restricted line cover with every supply bounded by the smallest
// demand of the rows it touches (A_ij s_j <= b_i). Columns are intervals so
// the grouped sub-programs stay totally unimodular. Feasible by construction.
inline ColumnRestrictedCIP RandomBoundedSupplyCcip(Rng& rng, const CcipParams& p = {}) {
  ColumnRestrictedCIP c;
  const int n = static_cast<int>(Uniform(rng, 1, p.max_rows));
  const int m = static_cast<int>(Uniform(rng, 1, p.max_cols));
  c.base.num_rows = n;
  c.base.num_cols = m;
  c.base.matrix.assign(n, std::vector<int>(m, 0));
  for (int i = 0; i < n; ++i) c.base.demands.push_back(Uniform(rng, 1, p.max_demand));
  for (int j = 0; j < m; ++j) {
    int l = static_cast<int>(Uniform(rng, 0, n - 1));
    int r = static_cast<int>(Uniform(rng, 0, n - 1));
    if (l > r) std::swap(l, r);
    for (int i = l; i <= r; ++i) c.base.matrix[i][j] = 1;
  }
  // Every row needs a column; widen the nearest interval.
  for (int i = 0; i < n; ++i) {
    if (std::any_of(c.base.matrix[i].begin(), c.base.matrix[i].end(), [](int a) { return a != 0; })) continue;
    const int j = static_cast<int>(Uniform(rng, 0, m - 1));
    int lo = n, hi = -1;
    for (int r = 0; r < n; ++r) {
      if (c.base.matrix[r][j]) lo = std::min(lo, r), hi = std::max(hi, r);
    }
    lo = std::min(lo, i);
    hi = std::max(hi, i);
    for (int r = lo; r <= hi; ++r) c.base.matrix[r][j] = 1;
  }
  for (int j = 0; j < m; ++j) {
    int64_t cap = p.max_supply;
    for (int i = 0; i < n; ++i) {
      if (c.base.matrix[i][j]) cap = std::min(cap, c.base.demands[i]);
    }
    c.supplies.push_back(Uniform(rng, 1, cap));
    c.base.costs.push_back(Uniform(rng, 1, p.max_cost));
    c.base.upper_bounds.push_back(Uniform(rng, 1, p.max_bound));
  }
  // Raise bounds until every row can be met.
  for (int i = 0; i < n; ++i) {
    for (;;) {
      int64_t capacity = 0;
      int widest = -1;
      for (int j = 0; j < m; ++j) {
        if (!c.base.matrix[i][j]) continue;
        capacity += c.supplies[j] * FiniteValue(c.base.upper_bounds[j]);
        if (widest < 0 || c.supplies[j] > c.supplies[widest]) widest = j;
      }
      if (capacity >= c.base.demands[i]) break;
      c.base.upper_bounds[widest] = FiniteValue(c.base.upper_bounds[widest]) + 1;
    }
  }
  return c;
}

// All simple graphs on `num_vertices` vertices with at most `max_edges`
// edges, one per isomorphism class (canonical form: lexicographically
// smallest sorted edge list over all vertex relabelings).
inline std::vector<Graph> AllGraphsUpToIsomorphism(int num_vertices, int max_edges) {
  if (num_vertices < 0 || num_vertices > 7) throw ValidationError("graph enumeration supports 0..7 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < num_vertices; ++a) {
    for (int b = a + 1; b < num_vertices; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(num_vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<Graph> out;
  const uint32_t total = 1u << pairs.size();
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (__builtin_popcount(mask) > max_edges) continue;
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1) edges.push_back(pairs[k]);
    }
    std::vector<std::pair<int, int>> canon;
    bool first = true;
    for (const auto& pi : perms) {
      std::vector<std::pair<int, int>> relabeled;
      for (auto [a, b] : edges) relabeled.emplace_back(std::min(pi[a], pi[b]), std::max(pi[a], pi[b]));
      std::sort(relabeled.begin(), relabeled.end());
      if (first || relabeled < canon) canon = relabeled;
      first = false;
    }
    if (seen.insert(canon).second) out.push_back({num_vertices, canon});
  }
  return out;
}

}  // namespace priocover

#endif  // PRIOCOVER_GENERATORS_HPP_
