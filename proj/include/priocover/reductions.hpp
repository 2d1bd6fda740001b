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

// Reductions from priority tree cover to two-priority line cover (via two
// depth-first orders) and from two-priority line cover to 3-D box cover,
// plus the materialized cover relation used to check that they preserve
// coverage exactly.

#ifndef PRIOCOVER_REDUCTIONS_HPP_
#define PRIOCOVER_REDUCTIONS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"

namespace priocover {

// Ranks of tree edges (identified by child node) in two depth-first
// traversals: `mu` follows child_order, `mu_r` follows the reversed child
// orders. Ranks are 1-based; the root carries 0.
struct DfsOrders {
  std::vector<int> mu;
  std::vector<int> mu_r;
  std::vector<int> by_mu;  // by_mu[p-1] = edge with mu == p
};

inline DfsOrders ComputeDfsOrders(const TreeInstance& tree) {
  RequireValid(tree);
  DfsOrders d;
  d.mu.assign(tree.num_nodes, 0);
  d.mu_r.assign(tree.num_nodes, 0);
  int rank = 0;
  std::function<void(int)> forward = [&](int v) {
    for (int c : tree.child_order[v]) {
      d.mu[c] = ++rank;
      d.by_mu.push_back(c);
      forward(c);
    }
  };
  forward(tree.root);
  rank = 0;
  std::function<void(int)> backward = [&](int v) {
    for (auto it = tree.child_order[v].rbegin(); it != tree.child_order[v].rend(); ++it) {
      d.mu_r[*it] = ++rank;
      backward(*it);
    }
  };
  backward(tree.root);
  return d;
}

// Line positions follow mu; edge e gets priorities (mu_r(e), pi_e). A
// segment with top v and bottom u becomes the interval from its first edge to
// u's parent edge, with supplies (mu_r(u), s_j). Edges inside that interval
// but off the path hang from earlier siblings, which the reversed traversal
// visits after u, so the first coordinate excludes them.
inline TwoPriorityLineInstance PtcTo2Plc(const TreeInstance& tree) {
  const DfsOrders d = ComputeDfsOrders(tree);
  TwoPriorityLineInstance out;
  out.num_edges = static_cast<int>(d.by_mu.size());
  if (out.num_edges == 0) throw ValidationError("tree has no edges");
  for (int e : d.by_mu) out.edge_priorities.push_back({d.mu_r[e], tree.edge_priorities[e]});
  for (size_t j = 0; j < tree.segments.size(); ++j) {
    const TreeSegment& s = tree.segments[j];
    const std::vector<int> path = tree.PathEdges(s.top, s.bottom);
    if (path.empty()) throw ValidationError("segment " + std::to_string(j) + " spans no edge");
    out.segments.push_back({d.mu[path.front()], d.mu[s.bottom], {d.mu_r[s.bottom], s.supply}, s.cost});
  }
  return out;
}

// Edge i becomes the point (i, pi1_i, pi2_i); a segment becomes the box
// [l, r] x [0, s1] x [0, s2]. Priorities are positive, so the zero lower
// bounds lose nothing.
inline RectCoverInstance TwoPlcToRect(const TwoPriorityLineInstance& line) {
  RequireValid(line);
  RectCoverInstance out;
  for (int e = 1; e <= line.num_edges; ++e) {
    const auto& p = line.edge_priorities[e - 1];
    out.points.push_back({e, p.first, p.second});
  }
  for (const auto& s : line.segments) {
    out.boxes.push_back({s.left, s.right, s.supply.first, s.supply.second, s.cost});
  }
  return out;
}

using CoverRelation = std::vector<std::vector<bool>>;

// Rows are edges/points in the instance's canonical row order (tree rows
// follow TreeInstance::Edges()); columns are segments/boxes.
template <typename Instance>
CoverRelation ComputeCoverRelation(const Instance& inst) {
  RequireValid(inst);
  const CoverSystem cs = ToCoverSystem(inst);
  CoverRelation rel(cs.NumRows(), std::vector<bool>(cs.NumCols(), false));
  for (int i = 0; i < cs.NumRows(); ++i) {
    for (int j = 0; j < cs.NumCols(); ++j) rel[i][j] = cs.matrix[i][j] != 0;
  }
  return rel;
}

// The tree relation with rows reordered by mu, i.e. aligned with the rows of
// the two-priority line image.
inline CoverRelation TreeRelationInLineOrder(const TreeInstance& tree) {
  const DfsOrders d = ComputeDfsOrders(tree);
  CoverRelation rel;
  for (int e : d.by_mu) {
    std::vector<bool> row;
    for (int j = 0; j < static_cast<int>(tree.segments.size()); ++j) row.push_back(tree.Covers(j, e));
    rel.push_back(std::move(row));
  }
  return rel;
}

}  // namespace priocover

#endif  // PRIOCOVER_REDUCTIONS_HPP_
