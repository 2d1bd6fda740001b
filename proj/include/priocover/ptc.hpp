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

// Priority tree cover: the pairwise-PLC 2-approximation, the exact 0,1
// rooted tree cover dynamic program, the path-partition certificate, the
// fractional leaf-path decomposition with its unweighted rounding, and the
// broom gadget generator.

#ifndef PRIOCOVER_PTC_HPP_
#define PRIOCOVER_PTC_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/plc.hpp"
#include "priocover/rational.hpp"
#include "priocover/relaxation.hpp"

namespace priocover {

// A line instance induced on a vertical tree path, with each restricted
// segment mapped back to the tree segment it came from.
struct PathLine {
  std::vector<int> edges;  // tree edges (child nodes), top-down
  LineInstance line;
  std::vector<int> segment_ids;
};

// Restricts every tree segment to the given top-down path of edges; each
// non-empty intersection is contiguous and becomes one line segment.
inline PathLine RestrictToPath(const TreeInstance& tree, const std::vector<int>& edges) {
  PathLine pl;
  pl.edges = edges;
  pl.line.num_edges = static_cast<int>(edges.size());
  std::map<int, int> pos;
  for (size_t k = 0; k < edges.size(); ++k) {
    pos[edges[k]] = static_cast<int>(k) + 1;
    pl.line.edge_priorities.push_back(tree.edge_priorities[edges[k]]);
  }
  for (int j = 0; j < static_cast<int>(tree.segments.size()); ++j) {
    const TreeSegment& s = tree.segments[j];
    int lo = 0, hi = 0;
    for (int e : tree.PathEdges(s.top, s.bottom)) {
      auto it = pos.find(e);
      if (it == pos.end()) continue;
      if (lo == 0) lo = it->second;
      hi = it->second;
    }
    if (lo == 0) continue;
    pl.line.segments.push_back({lo, hi, s.supply, s.cost});
    pl.segment_ids.push_back(j);
  }
  return pl;
}

// ---------------------------------------------------------------------------
// Exact 0,1 rooted tree cover.

struct VirtualPair {
  int top = 0;
  int bottom = 0;
  int64_t cost = 0;
};

struct TreeCoverResult {
  std::optional<int64_t> cost;
  std::vector<int> chosen;  // indices into the pair list
};

// g(v, a): minimum cost of pairs with bottom inside subtree(v) that cover
// every edge below v and every edge on the path from ancestor a down to v.
// A pair with bottom in subtree(v) that reaches above v covers a suffix of
// that path ending at v, so one pair must reach a: either a pair ending at
// v, or one delegated to a single child.
inline TreeCoverResult ExactTreeCover01(const TreeInstance& tree, const std::vector<VirtualPair>& pairs) {
  const int n = tree.num_nodes;
  std::vector<int> depth(n);
  std::vector<std::vector<int>> anc(n);  // anc[v][d] = ancestor at depth d
  std::function<void(int, int)> walk = [&](int v, int d) {
    depth[v] = d;
    anc[v] = v == tree.root ? std::vector<int>{} : anc[tree.parent[v]];
    anc[v].push_back(v);
    for (int c : tree.child_order[v]) walk(c, d + 1);
  };
  walk(tree.root, 0);
  std::vector<std::vector<int>> by_bottom(n);
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    if (pairs[p].top == pairs[p].bottom || !tree.IsAncestorOrSelf(pairs[p].top, pairs[p].bottom)) {
      throw ValidationError("virtual pair " + std::to_string(p) + " is not a descending path");
    }
    by_bottom[pairs[p].bottom].push_back(p);
  }
  struct Choice {
    int pair = -1;   // pair ending at v that reaches a
    int child = -1;  // or the child delegated to reach a
  };
  std::vector<std::vector<std::optional<int64_t>>> g(n);
  std::vector<std::vector<Choice>> choice(n);
  std::function<void(int)> solve = [&](int v) {
    for (int c : tree.child_order[v]) solve(c);
    g[v].assign(depth[v] + 1, std::nullopt);
    choice[v].assign(depth[v] + 1, {});
    std::optional<int64_t> base = 0;
    for (int c : tree.child_order[v]) base = internal::AddCost(base, g[c][depth[v]]);
    g[v][depth[v]] = base;
    for (int da = 0; da < depth[v]; ++da) {
      std::optional<int64_t> best;
      Choice ch;
      for (int p : by_bottom[v]) {
        if (depth[pairs[p].top] > da) continue;
        auto cand = internal::AddCost(pairs[p].cost, base);
        if (internal::Better(cand, best)) {
          best = cand;
          ch = {p, -1};
        }
      }
      for (int c : tree.child_order[v]) {
        std::optional<int64_t> cand = g[c][da];
        for (int c2 : tree.child_order[v]) {
          if (c2 != c) cand = internal::AddCost(cand, g[c2][depth[v]]);
        }
        if (internal::Better(cand, best)) {
          best = cand;
          ch = {-1, c};
        }
      }
      g[v][da] = best;
      choice[v][da] = ch;
    }
  };
  solve(tree.root);
  TreeCoverResult res;
  res.cost = g[tree.root][0];
  if (!res.cost) return res;
  std::function<void(int, int)> collect = [&](int v, int da) {
    if (da == depth[v]) {
      for (int c : tree.child_order[v]) collect(c, depth[v]);
      return;
    }
    const Choice& ch = choice[v][da];
    if (ch.pair >= 0) {
      res.chosen.push_back(ch.pair);
      for (int c : tree.child_order[v]) collect(c, depth[v]);
    } else {
      for (int c : tree.child_order[v]) collect(c, c == ch.child ? da : depth[v]);
    }
  };
  collect(tree.root, 0);
  std::sort(res.chosen.begin(), res.chosen.end());
  return res;
}

// The same program as a tree instance whose segments are the pairs with
// priorities ignored; its LP relaxation is integral (TU).
inline TreeInstance PairsAsTree(const TreeInstance& tree, const std::vector<VirtualPair>& pairs) {
  TreeInstance t = tree;
  t.segments.clear();
  for (auto& p : t.edge_priorities) p = 1;
  for (const auto& p : pairs) t.segments.push_back({p.top, p.bottom, 1, p.cost});
  return t;
}

// ---------------------------------------------------------------------------
// 2-approximation.

struct PairPlc {
  VirtualPair pair;
  std::vector<int> segments;  // original tree segments of the optimal path cover
};

struct Ptc2ApxResult {
  IntSolution x;
  int64_t cost = 0;
  int64_t pair_cover_value = 0;  // sum of chosen pair costs
  std::vector<PairPlc> pairs;    // every feasible (t, b) pair
  std::vector<int> chosen;       // indices into `pairs`
};

inline Ptc2ApxResult Ptc2Apx(const TreeInstance& tree) {
  RequireValid(tree);
  Ptc2ApxResult res;
  res.x.assign(tree.segments.size(), 0);
  for (int b = 0; b < tree.num_nodes; ++b) {
    if (b == tree.root) continue;
    for (int t = tree.parent[b]; t >= 0; t = tree.parent[t]) {
      PathLine pl = RestrictToPath(tree, tree.PathEdges(t, b));
      ExactPlcResult ex = ExactPlc(pl.line);
      if (ex.cost) {
        PairPlc pp{{t, b, *ex.cost}, {}};
        for (size_t k = 0; k < pl.segment_ids.size(); ++k) {
          if (ex.x[k]) pp.segments.push_back(pl.segment_ids[k]);
        }
        res.pairs.push_back(std::move(pp));
      }
      if (t == tree.root) break;
    }
  }
  std::vector<VirtualPair> vps;
  for (const auto& p : res.pairs) vps.push_back(p.pair);
  TreeCoverResult tc = ExactTreeCover01(tree, vps);
  if (!tc.cost) throw Infeasible("tree instance has no feasible cover");
  res.chosen = tc.chosen;
  res.pair_cover_value = *tc.cost;
  for (int p : tc.chosen) {
    for (int j : res.pairs[p].segments) res.x[j] = 1;
  }
  res.cost = IntCost(Costs(tree), res.x);
  if (!IsFeasible(tree, res.x)) throw CertificateViolated("2-approximation output is infeasible");
  if (res.cost > res.pair_cover_value) throw CertificateViolated("union cost exceeds the pair cover value");
  return res;
}

// ---------------------------------------------------------------------------
// Path-partition certificate.

struct PathPartition {
  std::vector<std::vector<int>> parts;   // edges, top-down
  std::vector<int> part_segment;         // segment whose path defined each part
  std::vector<int> responsible;          // per node: responsible segment (-1 for root)
  std::vector<int> parts_met;            // per segment: parts its responsible set meets
};

// Segment responsible for an edge: the highest-supply chosen segment covering
// it, ties to the smallest index.
inline std::vector<int> ResponsibleSegments(const TreeInstance& tree, const IntSolution& x) {
  std::vector<int> resp(tree.num_nodes, -1);
  for (int e : tree.Edges()) {
    for (int j = 0; j < static_cast<int>(tree.segments.size()); ++j) {
      if (x[j] <= 0 || !tree.Covers(j, e)) continue;
      if (resp[e] < 0 || tree.segments[j].supply > tree.segments[resp[e]].supply) resp[e] = j;
    }
    if (resp[e] < 0) throw ValidationError("solution leaves edge " + std::to_string(e) + " uncovered");
  }
  return resp;
}

inline PathPartition PathPartitionCertificate(const TreeInstance& tree, const IntSolution& x) {
  RequireValid(tree);
  PathPartition pp;
  pp.responsible = ResponsibleSegments(tree, x);
  std::deque<std::pair<int, int>> pending;  // (component root, child edge)
  for (int c : tree.child_order[tree.root]) pending.emplace_back(tree.root, c);
  while (!pending.empty()) {
    auto [u, c] = pending.front();
    pending.pop_front();
    const int j = pp.responsible[c];
    const TreeSegment& s = tree.segments[j];
    std::vector<int> part;
    for (int e : tree.PathEdges(u, s.bottom)) part.push_back(e);
    pp.parts.push_back(part);
    pp.part_segment.push_back(j);
    for (size_t k = 0; k < part.size(); ++k) {
      const int v = part[k];
      const int next = k + 1 < part.size() ? part[k + 1] : -1;
      for (int c2 : tree.child_order[v]) {
        if (c2 != next) pending.emplace_back(v, c2);
      }
    }
  }
  std::vector<int> part_of(tree.num_nodes, -1);
  for (size_t p = 0; p < pp.parts.size(); ++p) {
    for (int e : pp.parts[p]) part_of[e] = static_cast<int>(p);
  }
  pp.parts_met.assign(tree.segments.size(), 0);
  for (int j = 0; j < static_cast<int>(tree.segments.size()); ++j) {
    std::set<int> met;
    for (int e : tree.Edges()) {
      if (pp.responsible[e] == j) met.insert(part_of[e]);
    }
    pp.parts_met[j] = static_cast<int>(met.size());
    if (met.size() > 2) {
      throw CertificateViolated("segment " + std::to_string(j) + " is responsible for edges in " +
                                std::to_string(met.size()) + " parts");
    }
  }
  return pp;
}

// ---------------------------------------------------------------------------
// Fractional leaf-path decomposition.

struct LeafPathDecomposition {
  std::vector<std::vector<int>> paths;  // edges top-down; each ends at a leaf
  std::vector<int> parent_path;         // -1 for the first path
  std::vector<int> path_of_edge;        // per node (-1 for the root)
};

// Always follows the first child; paths hanging off a node are created in
// child order, top-down along each path, in path creation order.
inline LeafPathDecomposition UniversalDecomposition(const TreeInstance& tree) {
  LeafPathDecomposition d;
  d.path_of_edge.assign(tree.num_nodes, -1);
  std::deque<std::pair<int, int>> starts;  // (top node, first edge)
  for (int c : tree.child_order[tree.root]) starts.emplace_back(tree.root, c);
  while (!starts.empty()) {
    auto [u, c] = starts.front();
    starts.pop_front();
    const int id = static_cast<int>(d.paths.size());
    std::vector<int> path;
    for (int v = c;; v = tree.child_order[v].front()) {
      path.push_back(v);
      d.path_of_edge[v] = id;
      if (tree.child_order[v].empty()) break;
    }
    d.parent_path.push_back(u == tree.root ? (id == 0 ? -1 : 0) : d.path_of_edge[u]);
    for (int v : path) {
      for (size_t k = 1; k < tree.child_order[v].size(); ++k) starts.emplace_back(v, tree.child_order[v][k]);
    }
    d.paths.push_back(std::move(path));
  }
  return d;
}

struct PathPiece {
  std::vector<int> edges;
  int parent_path = -1;
  LineInstance line;
  FracSolution x;
  std::vector<int> segment_ids;
  std::vector<bool> local;
};

struct FractionalDecomposition {
  LeafPathDecomposition paths;
  std::vector<PathPiece> pieces;
  Rational total_mass = 0;
  Rational input_mass = 0;
};

inline FractionalDecomposition DecomposeFractionalPtc(const TreeInstance& tree, const FracSolution& x) {
  RequireValid(tree);
  if (x.size() != tree.segments.size()) throw ValidationError("fractional solution has wrong length");
  for (const auto& v : x) {
    if (v < 0) throw ValidationError("fractional solution has a negative entry");
  }
  if (!IsFeasible(tree, x)) throw Infeasible("fractional input does not cover the tree");
  FractionalDecomposition fd;
  fd.paths = UniversalDecomposition(tree);
  const int np = static_cast<int>(fd.paths.paths.size());
  bool unit = true;
  for (const auto& s : tree.segments) unit = unit && s.cost == 1;
  for (const auto& v : x) fd.input_mass += v;
  for (int i = 0; i < np; ++i) {
    PathPiece piece;
    piece.edges = fd.paths.paths[i];
    piece.parent_path = fd.paths.parent_path[i];
    PathLine pl = RestrictToPath(tree, piece.edges);
    piece.line = pl.line;
    piece.segment_ids = pl.segment_ids;
    // Global segments grouped by the child path through which they leave.
    std::map<int, std::vector<int>> groups;  // child path -> positions in pl
    piece.x.assign(pl.segment_ids.size(), Rational(0));
    piece.local.assign(pl.segment_ids.size(), false);
    for (size_t k = 0; k < pl.segment_ids.size(); ++k) {
      const TreeSegment& s = tree.segments[pl.segment_ids[k]];
      const std::vector<int> path = tree.PathEdges(s.top, s.bottom);
      const bool local = fd.paths.path_of_edge[path.front()] == i || fd.paths.path_of_edge[path.back()] == i;
      if (local) {
        piece.local[k] = true;
        piece.x[k] = x[pl.segment_ids[k]];
        continue;
      }
      // The segment leaves path i below its last edge on the path.
      int exit_path = -1;
      for (size_t t = 0; t + 1 < path.size(); ++t) {
        if (fd.paths.path_of_edge[path[t]] == i && fd.paths.path_of_edge[path[t + 1]] != i) {
          exit_path = fd.paths.path_of_edge[path[t + 1]];
          break;
        }
      }
      groups[exit_path].push_back(static_cast<int>(k));
    }
    for (auto& [child, members] : groups) {
      std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
        const auto& sa = tree.segments[pl.segment_ids[a]];
        const auto& sb = tree.segments[pl.segment_ids[b]];
        if (sa.supply != sb.supply) return sa.supply > sb.supply;
        return pl.segment_ids[a] < pl.segment_ids[b];
      });
      Rational prefix = 0;
      for (int k : members) {
        const Rational room = Rational(1) - prefix;
        if (room <= 0) break;
        const Rational take = std::min(room, x[pl.segment_ids[k]]);
        piece.x[k] = take;
        prefix += take;
      }
    }
    if (!IsFeasible(piece.line, piece.x)) {
      throw LemmaViolation("decomposed fractional solution infeasible on path " + std::to_string(i));
    }
    for (const auto& v : piece.x) fd.total_mass += v;
    fd.pieces.push_back(std::move(piece));
  }
  if (unit && fd.total_mass > 3 * fd.input_mass) {
    throw LemmaViolation("decomposed mass exceeds three times the input mass");
  }
  return fd;
}

struct UnweightedRoundResult {
  IntSolution x;
  int64_t size = 0;
  FractionalDecomposition decomposition;
  std::vector<int64_t> piece_sizes;
};

inline UnweightedRoundResult UnweightedPtcRound(const TreeInstance& tree, const FracSolution& x) {
  for (const auto& s : tree.segments) {
    if (s.cost != 1) throw ValidationError("unweighted rounding requires unit costs");
  }
  UnweightedRoundResult res;
  res.decomposition = DecomposeFractionalPtc(tree, x);
  res.x.assign(tree.segments.size(), 0);
  for (const PathPiece& piece : res.decomposition.pieces) {
    PrimalDualResult pd = PrimalDualPlc(piece.line);
    res.piece_sizes.push_back(pd.cost);
    for (size_t k = 0; k < pd.x.size(); ++k) {
      if (pd.x[k]) res.x[piece.segment_ids[k]] = 1;
    }
  }
  for (int64_t v : res.x) res.size += v;
  if (!IsFeasible(tree, res.x)) throw LemmaViolation("unweighted rounding output is infeasible");
  if (Rational(res.size) > 6 * res.decomposition.input_mass) {
    throw LemmaViolation("unweighted rounding output exceeds six times the fractional mass");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Broom gadget.

struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // edge i+1 is edges[i]
  bool operator==(const Graph&) const = default;
};

inline Violations ValidateGraph(const Graph& g) {
  Violations v;
  if (g.num_vertices < 0) v.push_back("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    const std::string tag = "graph edge " + std::to_string(i + 1);
    if (a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices) v.push_back(tag + ": endpoint out of range");
    if (a == b) v.push_back(tag + ": self-loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) v.push_back(tag + ": duplicate edge");
  }
  return v;
}

struct BroomSpec {
  Graph graph;
  std::vector<int> handle_nodes;                // x_0..x_m
  std::vector<std::vector<int>> bristle_nodes;  // per vertex, y^v_1..y^v_deg
  std::map<std::pair<int, int>, int> edge_segment;  // (edge number i, vertex v) -> s^i_v
  std::vector<int> vertex_segment;              // per vertex: t_v, -1 if isolated
};

struct Broom {
  TreeInstance tree;
  BroomSpec spec;
};

// Handle x_0 - ... - x_m with edge e_i of priority i; every non-isolated
// vertex v gets a bristle hanging from x_m whose edges carry v's incident
// edge numbers in descending order. Segment s^i_v runs from x_{i-1} down to
// the bristle edge of v labelled i (supply i); t_v spans v's bristle with
// supply equal to its largest label. All costs are 1.
inline Broom GenBroom(const Graph& g) {
  Violations bad = ValidateGraph(g);
  if (!bad.empty()) throw ValidationError("malformed graph: " + bad.front());
  const int m = static_cast<int>(g.edges.size());
  Broom b;
  b.spec.graph = g;
  TreeInstance& t = b.tree;
  std::vector<std::vector<int>> incident(g.num_vertices);
  for (int i = 1; i <= m; ++i) {
    incident[g.edges[i - 1].first].push_back(i);
    incident[g.edges[i - 1].second].push_back(i);
  }
  auto add_node = [&](int parent, int64_t priority) {
    const int id = t.num_nodes++;
    t.parent.push_back(parent);
    t.edge_priorities.push_back(priority);
    t.child_order.emplace_back();
    if (parent >= 0) t.child_order[parent].push_back(id);
    return id;
  };
  t.root = add_node(-1, 0);
  b.spec.handle_nodes.push_back(t.root);
  for (int i = 1; i <= m; ++i) b.spec.handle_nodes.push_back(add_node(b.spec.handle_nodes.back(), i));
  const int xm = b.spec.handle_nodes.back();
  b.spec.bristle_nodes.assign(g.num_vertices, {});
  std::vector<std::map<int, int>> label_node(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) {
    std::vector<int> labels = incident[v];
    std::sort(labels.rbegin(), labels.rend());
    int prev = xm;
    for (int lab : labels) {
      prev = add_node(prev, lab);
      b.spec.bristle_nodes[v].push_back(prev);
      label_node[v][lab] = prev;
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int v : {g.edges[i - 1].first, g.edges[i - 1].second}) {
      b.spec.edge_segment[{i, v}] = static_cast<int>(t.segments.size());
      t.segments.push_back({b.spec.handle_nodes[i - 1], label_node[v][i], i, 1});
    }
  }
  b.spec.vertex_segment.assign(g.num_vertices, -1);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (b.spec.bristle_nodes[v].empty()) continue;
    b.spec.vertex_segment[v] = static_cast<int>(t.segments.size());
    t.segments.push_back({xm, b.spec.bristle_nodes[v].back(), *std::max_element(incident[v].begin(), incident[v].end()), 1});
  }
  return b;
}

// Minimum vertex cover size by exhaustive search (small graphs only).
inline int MinVertexCover(const Graph& g) {
  int best = g.num_vertices;
  for (uint32_t mask = 0; mask < (1u << g.num_vertices); ++mask) {
    bool ok = true;
    for (auto [a, b] : g.edges) ok = ok && (((mask >> a) & 1) || ((mask >> b) & 1));
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace priocover

#endif  // PRIOCOVER_PTC_HPP_
