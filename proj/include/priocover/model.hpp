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

// Instance and solution types, coverage semantics and validation.
//
// Every instance shape lowers to a CoverSystem: an integer matrix M, demands
// b, costs c and per-column caps d. Row i is covered by x iff
// sum_j M[i][j] * x[j] >= b[i]. Feasibility checks, brute force and the
// canonical LP relaxation all work on that common form.

#ifndef PRIOCOVER_MODEL_HPP_
#define PRIOCOVER_MODEL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/rational.hpp"

namespace priocover {

struct Unbounded {
  bool operator==(const Unbounded&) const = default;
};

// Upper bound on a column multiplicity: a finite nonnegative integer or
// Unbounded. Never encoded as a large sentinel number.
using UpperBound = std::variant<int64_t, Unbounded>;

inline bool IsFinite(const UpperBound& d) { return std::holds_alternative<int64_t>(d); }
inline int64_t FiniteValue(const UpperBound& d) { return std::get<int64_t>(d); }

using IntSolution = std::vector<int64_t>;
using FracSolution = std::vector<Rational>;

struct ZeroOneCIP {
  int num_rows = 0;
  int num_cols = 0;
  std::vector<std::vector<int>> matrix;  // m x n, entries in {0,1}
  std::vector<int64_t> demands;          // b
  std::vector<int64_t> costs;            // c
  std::vector<UpperBound> upper_bounds;  // d
  bool operator==(const ZeroOneCIP&) const = default;
};

struct ColumnRestrictedCIP {
  ZeroOneCIP base;
  std::vector<int64_t> supplies;  // s
  bool operator==(const ColumnRestrictedCIP&) const = default;
};

// Demands of `base` are ignored; every row has unit demand.
struct PriorityCIP {
  ZeroOneCIP base;
  std::vector<int64_t> priority_supplies;  // s, per column
  std::vector<int64_t> priority_demands;   // pi, per row
  bool operator==(const PriorityCIP&) const = default;
};

// Edges are 1..num_edges; edge e has priority edge_priorities[e - 1].
struct Segment {
  int left = 1;
  int right = 1;
  int64_t supply = 1;
  int64_t cost = 0;
  bool operator==(const Segment&) const = default;
};

struct LineInstance {
  int num_edges = 0;
  std::vector<int64_t> edge_priorities;
  std::vector<Segment> segments;
  bool operator==(const LineInstance&) const = default;

  int64_t Priority(int e) const { return edge_priorities[e - 1]; }
  bool Covers(int j, int e) const {
    const Segment& s = segments[j];
    return s.left <= e && e <= s.right && s.supply >= Priority(e);
  }
};

using PriorityPair = std::pair<int64_t, int64_t>;

struct TwoPrioritySegment {
  int left = 1;
  int right = 1;
  PriorityPair supply{1, 1};
  int64_t cost = 0;
  bool operator==(const TwoPrioritySegment&) const = default;
};

struct TwoPriorityLineInstance {
  int num_edges = 0;
  std::vector<PriorityPair> edge_priorities;
  std::vector<TwoPrioritySegment> segments;
  bool operator==(const TwoPriorityLineInstance&) const = default;

  bool Covers(int j, int e) const {
    const TwoPrioritySegment& s = segments[j];
    const PriorityPair& p = edge_priorities[e - 1];
    return s.left <= e && e <= s.right && s.supply.first >= p.first &&
           s.supply.second >= p.second;
  }
};

struct TreeSegment {
  int top = 0;
  int bottom = 0;
  int64_t supply = 1;
  int64_t cost = 0;
  bool operator==(const TreeSegment&) const = default;
};

// Nodes are 0..num_nodes-1. Each non-root node v identifies the edge
// (parent[v], v); edge_priorities[v] is its priority (unused for the root).
// parent[root] == -1.
struct TreeInstance {
  int num_nodes = 0;
  int root = 0;
  std::vector<int> parent;
  std::vector<int64_t> edge_priorities;
  std::vector<TreeSegment> segments;
  std::vector<std::vector<int>> child_order;
  bool operator==(const TreeInstance&) const = default;

  // Non-root nodes in increasing id order; this is the canonical edge order.
  std::vector<int> Edges() const {
    std::vector<int> out;
    for (int v = 0; v < num_nodes; ++v) {
      if (v != root) out.push_back(v);
    }
    return out;
  }

  int Depth(int v) const {
    int d = 0;
    while (v != root) {
      v = parent[v];
      ++d;
    }
    return d;
  }

  // True iff a is an ancestor of b or a == b.
  bool IsAncestorOrSelf(int a, int b) const {
    for (int v = b;; v = parent[v]) {
      if (v == a) return true;
      if (v == root) return false;
    }
  }

  // Edges (child nodes) on the path from `top` down to `bottom`, listed
  // top-down. Requires top to be an ancestor of bottom.
  std::vector<int> PathEdges(int top, int bottom) const {
    std::vector<int> out;
    for (int v = bottom; v != top; v = parent[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool Covers(int j, int edge) const {
    const TreeSegment& s = segments[j];
    if (s.supply < edge_priorities[edge]) return false;
    return edge != s.top && IsAncestorOrSelf(s.top, edge) && IsAncestorOrSelf(edge, s.bottom);
  }
};

struct Point3 {
  int64_t x = 0, y = 0, z = 0;
  bool operator==(const Point3&) const = default;
};

// Box [x_lo, x_hi] x [0, y_hi] x [0, z_hi].
struct Box {
  int64_t x_lo = 0, x_hi = 0, y_hi = 0, z_hi = 0, cost = 0;
  bool operator==(const Box&) const = default;
  bool Contains(const Point3& p) const {
    return x_lo <= p.x && p.x <= x_hi && p.y <= y_hi && p.z <= z_hi;
  }
};

struct RectCoverInstance {
  std::vector<Point3> points;
  std::vector<Box> boxes;
  bool operator==(const RectCoverInstance&) const = default;
};

// Common lowering target. `unit_columns` marks priority-style instances whose
// minimal solutions are 0/1.
struct CoverSystem {
  std::vector<std::vector<int64_t>> matrix;
  std::vector<int64_t> demands;
  std::vector<int64_t> costs;
  std::vector<UpperBound> caps;
  std::vector<std::string> row_labels;
  bool unit_columns = false;

  int NumRows() const { return static_cast<int>(demands.size()); }
  int NumCols() const { return static_cast<int>(costs.size()); }
};

// ---------------------------------------------------------------------------
// Matrix builders.

// A[s]_{ij} = A_{ij} * s_j.
inline std::vector<std::vector<int64_t>> ApplySupplies(const ColumnRestrictedCIP& ccip) {
  const ZeroOneCIP& a = ccip.base;
  std::vector<std::vector<int64_t>> out(a.num_rows, std::vector<int64_t>(a.num_cols, 0));
  for (int i = 0; i < a.num_rows; ++i) {
    for (int j = 0; j < a.num_cols; ++j) out[i][j] = a.matrix[i][j] * ccip.supplies[j];
  }
  return out;
}

// A[s,pi]_{ij} = 1 iff A_{ij} = 1 and s_j >= pi_i.
inline std::vector<std::vector<int>> BuildPriorityMatrix(const PriorityCIP& pcip) {
  const ZeroOneCIP& a = pcip.base;
  std::vector<std::vector<int>> out(a.num_rows, std::vector<int>(a.num_cols, 0));
  for (int i = 0; i < a.num_rows; ++i) {
    for (int j = 0; j < a.num_cols; ++j) {
      out[i][j] = (a.matrix[i][j] == 1 &&
                   pcip.priority_supplies[j] >= pcip.priority_demands[i]) ? 1 : 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lowering to CoverSystem.

inline CoverSystem ToCoverSystem(const ZeroOneCIP& a) {
  CoverSystem cs;
  cs.matrix.assign(a.num_rows, std::vector<int64_t>(a.num_cols, 0));
  for (int i = 0; i < a.num_rows; ++i) {
    for (int j = 0; j < a.num_cols; ++j) cs.matrix[i][j] = a.matrix[i][j];
    cs.row_labels.push_back("row " + std::to_string(i));
  }
  cs.demands = a.demands;
  cs.costs = a.costs;
  cs.caps = a.upper_bounds;
  return cs;
}

inline CoverSystem ToCoverSystem(const ColumnRestrictedCIP& ccip) {
  CoverSystem cs = ToCoverSystem(ccip.base);
  cs.matrix = ApplySupplies(ccip);
  return cs;
}

inline CoverSystem ToCoverSystem(const PriorityCIP& pcip) {
  CoverSystem cs = ToCoverSystem(pcip.base);
  auto m = BuildPriorityMatrix(pcip);
  for (int i = 0; i < pcip.base.num_rows; ++i) {
    for (int j = 0; j < pcip.base.num_cols; ++j) cs.matrix[i][j] = m[i][j];
  }
  cs.demands.assign(pcip.base.num_rows, 1);
  cs.unit_columns = true;
  return cs;
}

inline CoverSystem LowerCoverRelation(int rows, int cols,
                               const std::vector<int64_t>& costs,
                               const std::vector<std::string>& labels,
                               auto covers) {
  CoverSystem cs;
  cs.matrix.assign(rows, std::vector<int64_t>(cols, 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) cs.matrix[i][j] = covers(i, j) ? 1 : 0;
  }
  cs.demands.assign(rows, 1);
  cs.costs = costs;
  cs.caps.assign(cols, UpperBound{Unbounded{}});
  cs.row_labels = labels;
  cs.unit_columns = true;
  return cs;
}

inline CoverSystem ToCoverSystem(const LineInstance& line) {
  std::vector<int64_t> costs;
  for (const auto& s : line.segments) costs.push_back(s.cost);
  std::vector<std::string> labels;
  for (int e = 1; e <= line.num_edges; ++e) labels.push_back("edge " + std::to_string(e));
  return LowerCoverRelation(line.num_edges, static_cast<int>(line.segments.size()), costs,
                            labels, [&](int i, int j) { return line.Covers(j, i + 1); });
}

inline CoverSystem ToCoverSystem(const TwoPriorityLineInstance& line) {
  std::vector<int64_t> costs;
  for (const auto& s : line.segments) costs.push_back(s.cost);
  std::vector<std::string> labels;
  for (int e = 1; e <= line.num_edges; ++e) labels.push_back("edge " + std::to_string(e));
  return LowerCoverRelation(line.num_edges, static_cast<int>(line.segments.size()), costs,
                            labels, [&](int i, int j) { return line.Covers(j, i + 1); });
}

// Rows follow TreeInstance::Edges() order.
inline CoverSystem ToCoverSystem(const TreeInstance& tree) {
  std::vector<int64_t> costs;
  for (const auto& s : tree.segments) costs.push_back(s.cost);
  std::vector<int> edges = tree.Edges();
  std::vector<std::string> labels;
  for (int v : edges) labels.push_back("edge " + std::to_string(v));
  return LowerCoverRelation(static_cast<int>(edges.size()),
                            static_cast<int>(tree.segments.size()), costs, labels,
                            [&](int i, int j) { return tree.Covers(j, edges[i]); });
}

inline CoverSystem ToCoverSystem(const RectCoverInstance& rect) {
  std::vector<int64_t> costs;
  for (const auto& b : rect.boxes) costs.push_back(b.cost);
  std::vector<std::string> labels;
  for (size_t i = 0; i < rect.points.size(); ++i) labels.push_back("point " + std::to_string(i));
  return LowerCoverRelation(static_cast<int>(rect.points.size()),
                            static_cast<int>(rect.boxes.size()), costs, labels,
                            [&](int i, int j) { return rect.boxes[j].Contains(rect.points[i]); });
}

// ---------------------------------------------------------------------------
// Translation between line instances and priority CIPs.

inline PriorityCIP LineToPriorityCIP(const LineInstance& line) {
  PriorityCIP p;
  const int n = static_cast<int>(line.segments.size());
  p.base.num_rows = line.num_edges;
  p.base.num_cols = n;
  p.base.matrix.assign(line.num_edges, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    const Segment& s = line.segments[j];
    for (int e = s.left; e <= s.right; ++e) p.base.matrix[e - 1][j] = 1;
    p.base.costs.push_back(s.cost);
    p.base.upper_bounds.push_back(Unbounded{});
    p.priority_supplies.push_back(s.supply);
  }
  p.base.demands.assign(line.num_edges, 1);
  p.priority_demands = line.edge_priorities;
  return p;
}

// Inverse of LineToPriorityCIP: requires every column's support to be a
// contiguous run of rows. Columns with empty support are rejected.
inline LineInstance PriorityCIPToLine(const PriorityCIP& p) {
  LineInstance line;
  line.num_edges = p.base.num_rows;
  line.edge_priorities = p.priority_demands;
  for (int j = 0; j < p.base.num_cols; ++j) {
    int lo = -1, hi = -1;
    for (int i = 0; i < p.base.num_rows; ++i) {
      if (p.base.matrix[i][j] == 1) {
        if (lo < 0) lo = i;
        hi = i;
      }
    }
    if (lo < 0) throw ValidationError("column " + std::to_string(j) + " has empty support");
    for (int i = lo; i <= hi; ++i) {
      if (p.base.matrix[i][j] != 1) {
        throw ValidationError("column " + std::to_string(j) + " is not an interval");
      }
    }
    line.segments.push_back({lo + 1, hi + 1, p.priority_supplies[j], p.base.costs[j]});
  }
  return line;
}

// ---------------------------------------------------------------------------
// Coverage checks.

struct CoverReport {
  std::vector<Rational> coverage;  // sum_j M_ij x_j per row
  std::vector<Rational> slack;     // coverage - demand
  std::vector<int> uncovered;      // row indices with negative slack
  bool feasible = true;
};

template <typename T>
CoverReport CheckCover(const CoverSystem& cs, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != cs.NumCols()) {
    throw ValidationError("solution has " + std::to_string(x.size()) + " entries, instance has " +
                          std::to_string(cs.NumCols()) + " columns");
  }
  CoverReport r;
  for (int i = 0; i < cs.NumRows(); ++i) {
    Rational cov = 0;
    for (int j = 0; j < cs.NumCols(); ++j) {
      if (cs.matrix[i][j] != 0) cov += Rational(cs.matrix[i][j]) * Rational(x[j]);
    }
    r.coverage.push_back(cov);
    r.slack.push_back(cov - Rational(cs.demands[i]));
    if (cov < Rational(cs.demands[i])) {
      r.uncovered.push_back(i);
      r.feasible = false;
    }
  }
  return r;
}

template <typename Instance, typename T>
CoverReport CheckCover(const Instance& inst, const std::vector<T>& x) {
  return CheckCover(ToCoverSystem(inst), x);
}

template <typename Instance, typename T>
bool IsFeasible(const Instance& inst, const std::vector<T>& x) {
  return CheckCover(inst, x).feasible;
}

// x_j <= d_j for every finite bound.
template <typename T>
bool WithinBounds(const std::vector<UpperBound>& d, const std::vector<T>& x) {
  for (size_t j = 0; j < d.size() && j < x.size(); ++j) {
    if (IsFinite(d[j]) && Rational(x[j]) > Rational(FiniteValue(d[j]))) return false;
  }
  return true;
}

template <typename T>
Rational SolutionCost(const std::vector<int64_t>& costs, const std::vector<T>& x) {
  Rational s = 0;
  for (size_t j = 0; j < costs.size() && j < x.size(); ++j) s += Rational(costs[j]) * Rational(x[j]);
  return s;
}

inline int64_t IntCost(const std::vector<int64_t>& costs, const IntSolution& x) {
  int64_t s = 0;
  for (size_t j = 0; j < costs.size() && j < x.size(); ++j) s += costs[j] * x[j];
  return s;
}

template <typename Instance>
std::vector<int64_t> Costs(const Instance& inst) {
  return ToCoverSystem(inst).costs;
}

// ---------------------------------------------------------------------------
// Validation: returns human-readable violations, never throws.

using Violations = std::vector<std::string>;

inline void ValidateBase(const ZeroOneCIP& a, Violations& v) {
  if (a.num_rows <= 0) v.push_back("num_rows must be positive");
  if (a.num_cols <= 0) v.push_back("num_cols must be positive");
  if (static_cast<int>(a.matrix.size()) != a.num_rows) v.push_back("matrix row count mismatch");
  for (size_t i = 0; i < a.matrix.size(); ++i) {
    if (static_cast<int>(a.matrix[i].size()) != a.num_cols) {
      v.push_back("matrix row " + std::to_string(i) + " width mismatch");
      continue;
    }
    for (int j = 0; j < a.num_cols; ++j) {
      if (a.matrix[i][j] != 0 && a.matrix[i][j] != 1) {
        v.push_back("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") not 0/1");
      }
    }
  }
  if (static_cast<int>(a.demands.size()) != a.num_rows) v.push_back("demand vector length mismatch");
  if (static_cast<int>(a.costs.size()) != a.num_cols) v.push_back("cost vector length mismatch");
  if (static_cast<int>(a.upper_bounds.size()) != a.num_cols) v.push_back("upper bound vector length mismatch");
  for (size_t i = 0; i < a.demands.size(); ++i) {
    if (a.demands[i] < 0) v.push_back("demand " + std::to_string(i) + " negative");
  }
  for (size_t j = 0; j < a.costs.size(); ++j) {
    if (a.costs[j] < 0) v.push_back("cost " + std::to_string(j) + " negative");
  }
  for (size_t j = 0; j < a.upper_bounds.size(); ++j) {
    if (IsFinite(a.upper_bounds[j]) && FiniteValue(a.upper_bounds[j]) < 0) {
      v.push_back("upper bound " + std::to_string(j) + " negative");
    }
  }
}

inline Violations ValidateInstance(const ZeroOneCIP& a) {
  Violations v;
  ValidateBase(a, v);
  return v;
}

inline Violations ValidateInstance(const ColumnRestrictedCIP& c) {
  Violations v;
  ValidateBase(c.base, v);
  if (static_cast<int>(c.supplies.size()) != c.base.num_cols) v.push_back("supply vector length mismatch");
  for (size_t j = 0; j < c.supplies.size(); ++j) {
    if (c.supplies[j] <= 0) v.push_back("supply " + std::to_string(j) + " not positive");
  }
  return v;
}

inline Violations ValidateInstance(const PriorityCIP& p) {
  Violations v;
  ValidateBase(p.base, v);
  if (static_cast<int>(p.priority_supplies.size()) != p.base.num_cols) {
    v.push_back("priority supply vector length mismatch");
  }
  if (static_cast<int>(p.priority_demands.size()) != p.base.num_rows) {
    v.push_back("priority demand vector length mismatch");
  }
  for (size_t j = 0; j < p.priority_supplies.size(); ++j) {
    if (p.priority_supplies[j] <= 0) v.push_back("priority supply " + std::to_string(j) + " not positive");
  }
  for (size_t i = 0; i < p.priority_demands.size(); ++i) {
    if (p.priority_demands[i] <= 0) v.push_back("priority demand " + std::to_string(i) + " not positive");
  }
  return v;
}

template <typename Seg>
void ValidateLineSegments(int num_edges, const std::vector<Seg>& segs, Violations& v) {
  for (size_t j = 0; j < segs.size(); ++j) {
    const auto& s = segs[j];
    const std::string tag = "segment " + std::to_string(j);
    if (s.left > s.right) v.push_back(tag + ": left > right");
    if (s.left < 1 || s.right > num_edges) v.push_back(tag + ": endpoints outside 1.." + std::to_string(num_edges));
    if (s.cost < 0) v.push_back(tag + ": negative cost");
  }
}

inline Violations ValidateInstance(const LineInstance& line) {
  Violations v;
  if (line.num_edges <= 0) v.push_back("num_edges must be positive");
  if (static_cast<int>(line.edge_priorities.size()) != line.num_edges) v.push_back("priority vector length mismatch");
  for (size_t e = 0; e < line.edge_priorities.size(); ++e) {
    if (line.edge_priorities[e] <= 0) v.push_back("edge " + std::to_string(e + 1) + ": priority not positive");
  }
  ValidateLineSegments(line.num_edges, line.segments, v);
  for (size_t j = 0; j < line.segments.size(); ++j) {
    if (line.segments[j].supply <= 0) v.push_back("segment " + std::to_string(j) + ": supply not positive");
  }
  return v;
}

inline Violations ValidateInstance(const TwoPriorityLineInstance& line) {
  Violations v;
  if (line.num_edges <= 0) v.push_back("num_edges must be positive");
  if (static_cast<int>(line.edge_priorities.size()) != line.num_edges) v.push_back("priority vector length mismatch");
  for (size_t e = 0; e < line.edge_priorities.size(); ++e) {
    if (line.edge_priorities[e].first <= 0 || line.edge_priorities[e].second <= 0) {
      v.push_back("edge " + std::to_string(e + 1) + ": priority not positive");
    }
  }
  ValidateLineSegments(line.num_edges, line.segments, v);
  for (size_t j = 0; j < line.segments.size(); ++j) {
    if (line.segments[j].supply.first <= 0 || line.segments[j].supply.second <= 0) {
      v.push_back("segment " + std::to_string(j) + ": supply not positive");
    }
  }
  return v;
}

inline Violations ValidateInstance(const TreeInstance& t) {
  Violations v;
  const int n = t.num_nodes;
  if (n <= 0) {
    v.push_back("num_nodes must be positive");
    return v;
  }
  if (t.root < 0 || t.root >= n) {
    v.push_back("root out of range");
    return v;
  }
  if (static_cast<int>(t.parent.size()) != n) {
    v.push_back("parent vector length mismatch");
    return v;
  }
  if (static_cast<int>(t.edge_priorities.size()) != n) v.push_back("edge priority vector length mismatch");
  if (t.parent[t.root] != -1) v.push_back("root must have parent -1");
  bool structure_ok = true;
  for (int u = 0; u < n; ++u) {
    if (u == t.root) continue;
    if (t.parent[u] < 0 || t.parent[u] >= n || t.parent[u] == u) {
      v.push_back("node " + std::to_string(u) + ": invalid parent");
      structure_ok = false;
    }
  }
  if (structure_ok) {
    // Every node must reach the root within n steps (acyclic and connected).
    for (int u = 0; u < n; ++u) {
      int w = u, steps = 0;
      while (w != t.root && steps <= n) {
        w = t.parent[w];
        ++steps;
        if (w < 0) break;
      }
      if (w != t.root) {
        v.push_back("node " + std::to_string(u) + " does not reach the root");
        structure_ok = false;
      }
    }
  }
  for (int u = 0; u < n && u < static_cast<int>(t.edge_priorities.size()); ++u) {
    if (u != t.root && t.edge_priorities[u] <= 0) v.push_back("edge " + std::to_string(u) + ": priority not positive");
  }
  if (static_cast<int>(t.child_order.size()) != n) {
    v.push_back("child_order length mismatch");
  } else if (structure_ok) {
    for (int u = 0; u < n; ++u) {
      std::vector<int> expect, got = t.child_order[u];
      for (int c = 0; c < n; ++c) {
        if (c != t.root && t.parent[c] == u) expect.push_back(c);
      }
      std::sort(got.begin(), got.end());
      if (got != expect) v.push_back("node " + std::to_string(u) + ": child_order is not a permutation of its children");
    }
  }
  for (size_t j = 0; j < t.segments.size(); ++j) {
    const auto& s = t.segments[j];
    const std::string tag = "segment " + std::to_string(j);
    if (s.top < 0 || s.top >= n || s.bottom < 0 || s.bottom >= n) {
      v.push_back(tag + ": endpoint out of range");
      continue;
    }
    if (s.supply <= 0) v.push_back(tag + ": supply not positive");
    if (s.cost < 0) v.push_back(tag + ": negative cost");
    if (structure_ok && (s.top == s.bottom || !t.IsAncestorOrSelf(s.top, s.bottom))) {
      v.push_back(tag + ": top is not a strict ancestor of bottom");
    }
  }
  return v;
}

inline Violations ValidateInstance(const RectCoverInstance& r) {
  Violations v;
  for (size_t j = 0; j < r.boxes.size(); ++j) {
    if (r.boxes[j].x_lo > r.boxes[j].x_hi) v.push_back("box " + std::to_string(j) + ": x_lo > x_hi");
    if (r.boxes[j].cost < 0) v.push_back("box " + std::to_string(j) + ": negative cost");
  }
  return v;
}

template <typename Instance>
void RequireValid(const Instance& inst) {
  Violations v = ValidateInstance(inst);
  if (!v.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& s : v) msg += " " + s + ";";
    throw ValidationError(msg);
  }
}

}  // namespace priocover

#endif  // PRIOCOVER_MODEL_HPP_
