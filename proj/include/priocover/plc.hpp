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

// Priority line cover: valleys, the primal-dual 2-approximation with its dual
// certificate, segment completion, the exact interval dynamic program and the
// integrality-gap family generator.

#ifndef PRIOCOVER_PLC_HPP_
#define PRIOCOVER_PLC_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/oracles.hpp"
#include "priocover/rational.hpp"

namespace priocover {

// Closed edge interval [l, r].
struct EdgeInterval {
  int l = 0;
  int r = 0;
  bool operator==(const EdgeInterval&) const = default;
};

// Per segment: maximal runs of covered edges (valleys) and of spanned but
// uncovered edges (mountains), both left to right.
struct ValleyDecomposition {
  std::vector<std::vector<EdgeInterval>> valleys;
  std::vector<std::vector<EdgeInterval>> mountains;
};

inline ValleyDecomposition ComputeValleys(const LineInstance& line) {
  ValleyDecomposition vd;
  for (const Segment& s : line.segments) {
    std::vector<EdgeInterval> val, mnt;
    for (int e = s.left; e <= s.right; ++e) {
      auto& target = line.Priority(e) <= s.supply ? val : mnt;
      if (!target.empty() && target.back().r == e - 1) {
        target.back().r = e;
      } else {
        target.push_back({e, e});
      }
    }
    vd.valleys.push_back(std::move(val));
    vd.mountains.push_back(std::move(mnt));
  }
  return vd;
}

// ---------------------------------------------------------------------------
// Primal-dual.

struct DualCertificate {
  std::vector<Rational> y;  // per edge (index e-1)
  std::vector<bool> tight;  // per segment, at termination of the growth phase
};

struct PrimalDualResult {
  IntSolution x;  // 0/1 per segment
  DualCertificate dual;
  std::vector<int> insertion_order;  // segments in the order they joined Q
  Rational dual_value = 0;
  int64_t cost = 0;
};

inline PrimalDualResult PrimalDualPlc(const LineInstance& line) {
  RequireValid(line);
  const int n = line.num_edges;
  const int k = static_cast<int>(line.segments.size());
  std::vector<std::vector<int>> covering(n + 1);
  for (int e = 1; e <= n; ++e) {
    for (int j = 0; j < k; ++j) {
      if (line.Covers(j, e)) covering[e].push_back(j);
    }
    if (covering[e].empty()) throw Infeasible("edge " + std::to_string(e) + " is not covered by any segment");
  }
  std::vector<Rational> slack;
  for (const auto& s : line.segments) slack.emplace_back(s.cost);
  PrimalDualResult res;
  res.dual.y.assign(n, Rational(0));
  std::vector<bool> in_q(k, false), covered(n + 1, false);
  auto add = [&](int j) {
    if (in_q[j]) return;
    in_q[j] = true;
    res.insertion_order.push_back(j);
    for (int e = line.segments[j].left; e <= line.segments[j].right; ++e) {
      if (line.Covers(j, e)) covered[e] = true;
    }
  };
  for (;;) {
    int e = -1;
    for (int f = 1; f <= n; ++f) {
      if (!covered[f] && (e < 0 || line.Priority(f) > line.Priority(e))) e = f;
    }
    if (e < 0) break;
    Rational delta = slack[covering[e][0]];
    for (int j : covering[e]) delta = std::min(delta, slack[j]);
    res.dual.y[e - 1] += delta;
    for (int j : covering[e]) slack[j] -= delta;
    int jl = -1, jr = -1;
    for (int j : covering[e]) {
      if (slack[j] != 0) continue;
      if (jl < 0 || line.segments[j].left < line.segments[jl].left) jl = j;
      if (jr < 0 || line.segments[j].right > line.segments[jr].right) jr = j;
    }
    add(jl);
    add(jr);
    // Every uncovered edge inside [left(jl), right(jr)] has priority at most
    // pi_e and is therefore covered by jl or jr.
    for (int f = line.segments[jl].left; f <= line.segments[jr].right; ++f) {
      if (!covered[f]) throw CertificateViolated("edge " + std::to_string(f) + " left uncovered inside the tight span");
    }
  }
  for (int j = 0; j < k; ++j) res.dual.tight.push_back(slack[j] == 0);
  // Reverse delete.
  for (auto it = res.insertion_order.rbegin(); it != res.insertion_order.rend(); ++it) {
    in_q[*it] = false;
    bool ok = true;
    for (int e = 1; e <= n && ok; ++e) {
      bool c = false;
      for (int j : covering[e]) c = c || in_q[j];
      ok = c;
    }
    if (!ok) in_q[*it] = true;
  }
  res.x.assign(k, 0);
  for (int j = 0; j < k; ++j) res.x[j] = in_q[j] ? 1 : 0;
  res.cost = IntCost(Costs(line), res.x);
  for (const auto& v : res.dual.y) res.dual_value += v;
  // Certificate checks.
  for (int j = 0; j < k; ++j) {
    Rational load = 0;
    for (int e = 1; e <= n; ++e) {
      if (line.Covers(j, e)) load += res.dual.y[e - 1];
    }
    if (load > Rational(line.segments[j].cost)) throw CertificateViolated("dual infeasible at segment " + std::to_string(j));
  }
  if (Rational(res.cost) > 2 * res.dual_value) throw CertificateViolated("primal cost exceeds twice the dual value");
  for (int e = 1; e <= n; ++e) {
    if (res.dual.y[e - 1] == 0) continue;
    int cnt = 0;
    for (int j : covering[e]) cnt += in_q[j] ? 1 : 0;
    if (cnt > 2) throw CertificateViolated("edge " + std::to_string(e) + " with positive dual covered " + std::to_string(cnt) + " times");
  }
  if (!IsFeasible(line, res.x)) throw CertificateViolated("primal-dual output infeasible");
  return res;
}

// Priority-CIP oracle with factor 2: requires every column to be an interval
// of rows (a priority line cover in matrix form). Columns with empty support
// are dropped before the line instance is built.
inline IntSolution PrimalDualPcipSolve(const PriorityCIP& pcip) {
  PriorityCIP reduced = pcip;
  std::vector<int> keep;
  for (int j = 0; j < pcip.base.num_cols; ++j) {
    bool any = false;
    for (int i = 0; i < pcip.base.num_rows; ++i) any = any || pcip.base.matrix[i][j] == 1;
    if (any) keep.push_back(j);
  }
  IntSolution out(pcip.base.num_cols, 0);
  if (pcip.base.num_rows == 0) return out;
  if (keep.empty()) throw Infeasible("priority CIP has no usable column");
  reduced.base.num_cols = static_cast<int>(keep.size());
  for (int i = 0; i < pcip.base.num_rows; ++i) {
    reduced.base.matrix[i].clear();
    for (int j : keep) reduced.base.matrix[i].push_back(pcip.base.matrix[i][j]);
  }
  reduced.base.costs.clear();
  reduced.base.upper_bounds.clear();
  reduced.priority_supplies.clear();
  for (int j : keep) {
    reduced.base.costs.push_back(pcip.base.costs[j]);
    reduced.base.upper_bounds.push_back(pcip.base.upper_bounds[j]);
    reduced.priority_supplies.push_back(pcip.priority_supplies[j]);
  }
  LineInstance line = PriorityCIPToLine(reduced);
  PrimalDualResult pd = PrimalDualPlc(line);
  for (size_t t = 0; t < keep.size(); ++t) out[keep[t]] = pd.x[t];
  return out;
}

inline PcipOracle PrimalDualLineOracle() {
  return {"primal-dual-line", Rational(2),
          [](const PriorityCIP& pcip, const FracSolution&) { return PrimalDualPcipSolve(pcip); }};
}

// ---------------------------------------------------------------------------
// Segment completion.

struct CompletedLine {
  LineInstance line;
  std::vector<int> origin;  // completed segment -> original segment index
};

// Adds every sub-interval of every segment (same supply and cost), keeps the
// cheapest copy per (l, r, s) and, when `prune` is set, drops a segment if
// another one on the identical interval has at least its supply and at most
// its cost. Ties keep the smallest original index.
inline CompletedLine CompleteSegments(const LineInstance& line, bool prune = true) {
  std::map<std::tuple<int, int, int64_t>, std::pair<int64_t, int>> best;  // -> (cost, origin)
  for (int j = 0; j < static_cast<int>(line.segments.size()); ++j) {
    const Segment& s = line.segments[j];
    for (int l = s.left; l <= s.right; ++l) {
      for (int r = l; r <= s.right; ++r) {
        auto key = std::make_tuple(l, r, s.supply);
        auto it = best.find(key);
        if (it == best.end() || s.cost < it->second.first) best[key] = {s.cost, j};
      }
    }
  }
  CompletedLine out;
  out.line.num_edges = line.num_edges;
  out.line.edge_priorities = line.edge_priorities;
  std::vector<std::tuple<int, int, int64_t, int64_t, int>> items;
  for (const auto& [key, val] : best) {
    items.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), val.first, val.second);
  }
  for (size_t a = 0; a < items.size(); ++a) {
    const auto& [l, r, s, c, o] = items[a];
    bool dominated = false;
    if (prune) {
      for (size_t b = 0; b < items.size() && !dominated; ++b) {
        if (a == b) continue;
        const auto& [l2, r2, s2, c2, o2] = items[b];
        if (l2 != l || r2 != r) continue;
        // Strictly better in one coordinate, or identical and earlier.
        dominated = s2 >= s && c2 <= c && (s2 > s || c2 < c);
      }
    }
    if (dominated) continue;
    out.line.segments.push_back({l, r, s, c});
    out.origin.push_back(o);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact dynamic program.

// Shortest-path graph for one interval [l, r]: node 0 is the source, node 1
// the sink, and nodes 2.. correspond to (segment, valley) pairs.
struct ValleyGraphNode {
  int segment = -1;
  int valley = -1;
};

struct ValleyGraphArc {
  int from = 0;
  int to = 0;
  std::optional<int64_t> cost;  // nullopt: unreachable (infeasible gap)
};

struct ValleyGraph {
  int l = 0, r = 0;
  std::vector<ValleyGraphNode> nodes;
  std::vector<ValleyGraphArc> arcs;
};

struct ExactPlcResult {
  std::optional<int64_t> cost;  // nullopt: infeasible
  IntSolution x;                // 0/1 over the original segments
};

namespace internal {

inline std::optional<int64_t> AddCost(std::optional<int64_t> a, std::optional<int64_t> b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

inline bool Better(std::optional<int64_t> a, std::optional<int64_t> b) {
  return a && (!b || *a < *b);
}

// DP over all sub-intervals of a completed instance.
class IntervalDp {
 public:
  IntervalDp(const LineInstance& completed, const ValleyDecomposition& valleys)
      : line_(completed), valleys_(valleys), n_(completed.num_edges) {
    opt_.assign(n_ + 2, std::vector<std::optional<int64_t>>(n_ + 2));
    choice_.assign(n_ + 2, std::vector<Choice>(n_ + 2));
    by_left_.assign(n_ + 2, {});
    for (int j = 0; j < static_cast<int>(line_.segments.size()); ++j) by_left_[line_.segments[j].left].push_back(j);
    for (int len = 1; len <= n_; ++len) {
      for (int l = 1; l + len - 1 <= n_; ++l) Solve(l, l + len - 1);
    }
  }

  std::optional<int64_t> Opt(int l, int r) const {
    if (l > r) return 0;
    return opt_[l][r];
  }

  // Candidates for interval [l, r]: segments starting at l, ending by r,
  // whose first valley starts at l.
  std::vector<int> Candidates(int l, int r) const {
    std::vector<int> out;
    for (int j : by_left_[l]) {
      if (line_.segments[j].right <= r && !valleys_.valleys[j].empty() && valleys_.valleys[j][0].l == l) {
        out.push_back(j);
      }
    }
    return out;
  }

  ValleyGraph BuildGraph(int l, int r) const {
    ValleyGraph g;
    g.l = l;
    g.r = r;
    g.nodes.push_back({});  // source
    g.nodes.push_back({});  // sink
    for (int j : Candidates(l, r)) {
      const auto& vals = valleys_.valleys[j];
      const int base = static_cast<int>(g.nodes.size());
      for (int q = 0; q < static_cast<int>(vals.size()); ++q) g.nodes.push_back({j, q});
      g.arcs.push_back({0, base, line_.segments[j].cost});
      for (int q = 0; q < static_cast<int>(vals.size()); ++q) {
        for (int q2 = q + 1; q2 < static_cast<int>(vals.size()); ++q2) {
          g.arcs.push_back({base + q, base + q2, Opt(vals[q].r + 1, vals[q2].l - 1)});
        }
        g.arcs.push_back({base + q, 1, Opt(vals[q].r + 1, r)});
      }
    }
    return g;
  }

  // Appends the completed-segment indices of an optimal cover of [l, r].
  void Reconstruct(int l, int r, std::vector<int>& out) const {
    if (l > r) return;
    const Choice& ch = choice_[l][r];
    out.push_back(ch.segment);
    const auto& vals = valleys_.valleys[ch.segment];
    for (size_t t = 0; t + 1 < ch.path.size(); ++t) {
      Reconstruct(vals[ch.path[t]].r + 1, vals[ch.path[t + 1]].l - 1, out);
    }
    Reconstruct(vals[ch.path.back()].r + 1, r, out);
  }

 private:
  struct Choice {
    int segment = -1;
    std::vector<int> path;  // chosen valley indices, starting with 0
  };

  // Shortest source-sink path in the valley graph, computed per segment
  // since arcs never connect nodes of different segments.
  void Solve(int l, int r) {
    ValleyGraph g = BuildGraph(l, r);
    const int nn = static_cast<int>(g.nodes.size());
    std::vector<std::optional<int64_t>> dist(nn);
    std::vector<int> pred(nn, -1);
    dist[0] = 0;
    // Nodes are created in topological order (source, sink, then per segment
    // valleys left to right); relax arcs grouped by their tail node.
    std::vector<std::vector<const ValleyGraphArc*>> out(nn);
    for (const auto& a : g.arcs) out[a.from].push_back(&a);
    std::vector<int> order;
    order.push_back(0);
    for (int v = 2; v < nn; ++v) order.push_back(v);
    for (int v : order) {
      if (!dist[v]) continue;
      for (const ValleyGraphArc* a : out[v]) {
        auto cand = AddCost(dist[v], a->cost);
        if (Better(cand, dist[a->to])) {
          dist[a->to] = cand;
          pred[a->to] = v;
        }
      }
    }
    opt_[l][r] = dist[1];
    if (!dist[1]) return;
    Choice ch;
    for (int v = pred[1]; v != 0; v = pred[v]) ch.path.push_back(g.nodes[v].valley);
    std::reverse(ch.path.begin(), ch.path.end());
    ch.segment = g.nodes[pred[1]].segment;
    choice_[l][r] = ch;
  }

  const LineInstance& line_;
  const ValleyDecomposition& valleys_;
  int n_;
  std::vector<std::vector<std::optional<int64_t>>> opt_;
  std::vector<std::vector<Choice>> choice_;
  std::vector<std::vector<int>> by_left_;
};

}  // namespace internal

inline ExactPlcResult ExactPlc(const LineInstance& line) {
  RequireValid(line);
  CompletedLine comp = CompleteSegments(line);
  ValleyDecomposition vd = ComputeValleys(comp.line);
  internal::IntervalDp dp(comp.line, vd);
  ExactPlcResult res;
  res.x.assign(line.segments.size(), 0);
  res.cost = dp.Opt(1, line.num_edges);
  if (!res.cost) return res;
  std::vector<int> used;
  dp.Reconstruct(1, line.num_edges, used);
  for (int j : used) res.x[comp.origin[j]] = 1;
  if (!IsFeasible(line, res.x)) throw CertificateViolated("exact PLC reconstruction is infeasible");
  if (IntCost(Costs(line), res.x) != *res.cost) {
    throw CertificateViolated("exact PLC reconstruction cost differs from the DP value");
  }
  return res;
}

// Valley graph of interval [l, r] of the completed instance (exposed for
// inspection and tests).
inline ValleyGraph BuildValleyGraph(const LineInstance& line, int l, int r) {
  CompletedLine comp = CompleteSegments(line);
  ValleyDecomposition vd = ComputeValleys(comp.line);
  internal::IntervalDp dp(comp.line, vd);
  return dp.BuildGraph(l, r);
}

// ---------------------------------------------------------------------------
// Integrality-gap family.
//
// k edges (k odd): odd edges have priority 1, even edges priority 2. Paths
// are numbered 1..k, all unit cost. Odd-numbered paths have supply 2 and
// form a ladder over the even edges: path 1 = [1,2], path 2a-1 = [2a-2, 2a]
// for 2 <= a <= (k-1)/2, path k = [k-1, k]. Even-numbered path 2a has supply
// 1 and spans [2a-1, 2a+1], covering the two odd edges at its ends. Taking
// every odd-numbered path is optimal, with cost (k+1)/2.
inline LineInstance GenGapLine(int k) {
  if (k < 3 || k % 2 == 0) throw ValidationError("gap line requires an odd k >= 3");
  LineInstance line;
  line.num_edges = k;
  for (int e = 1; e <= k; ++e) line.edge_priorities.push_back(e % 2 == 1 ? 1 : 2);
  const int t = (k - 1) / 2;
  for (int p = 1; p <= k; ++p) {
    if (p % 2 == 1) {
      const int a = (p + 1) / 2;
      if (a == 1) {
        line.segments.push_back({1, 2, 2, 1});
      } else if (a == t + 1) {
        line.segments.push_back({k - 1, k, 2, 1});
      } else {
        line.segments.push_back({2 * a - 2, 2 * a, 2, 1});
      }
    } else {
      const int a = p / 2;
      line.segments.push_back({2 * a - 1, 2 * a + 1, 1, 1});
    }
  }
  return line;
}

}  // namespace priocover

#endif  // PRIOCOVER_PLC_HPP_
