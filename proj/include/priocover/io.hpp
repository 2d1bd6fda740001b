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

// JSON document format for instances, solutions and verification reports.
//
// Every document is an object with "kind" and "version" (currently 1).
// Instance payloads hold integers only; upper bounds are integers or the
// string "unbounded"; rationals are {"num": ..., "den": ...} with numerator
// and denominator as integers (or decimal strings when they exceed 64 bits).
// Field order is fixed so serialization is byte-for-byte deterministic.

#ifndef PRIOCOVER_IO_HPP_
#define PRIOCOVER_IO_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "priocover/errors.hpp"
#include "priocover/model.hpp"
#include "priocover/ptc.hpp"
#include "priocover/rational.hpp"

namespace priocover {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

// A solution: integral or fractional x plus its cost. `details` carries
// algorithm-specific certificates and audit data (an object, or null).
struct SolutionDocument {
  std::string algorithm;
  std::variant<IntSolution, FracSolution> x;
  Rational cost = 0;
  Json details;
  bool operator==(const SolutionDocument&) const = default;
};

struct ReportDocument {
  bool feasible = true;
  bool within_bounds = true;
  std::vector<std::string> uncovered;
  Rational cost = 0;
  Json details;
  bool operator==(const ReportDocument&) const = default;
};

using Document = std::variant<ZeroOneCIP, ColumnRestrictedCIP, PriorityCIP, LineInstance, TwoPriorityLineInstance,
                              TreeInstance, RectCoverInstance, SolutionDocument, ReportDocument, Graph>;

inline const char* DocumentKind(const Document& d) {
  static const char* const kKinds[] = {"zero_one_cip", "ccip", "pcip",     "line",   "two_plc",
                                       "tree",         "rect", "solution", "report", "graph"};
  return kKinds[d.index()];
}

// ---------------------------------------------------------------------------
// Scalar encoders.

inline Json BigIntToJson(const BigInt& v) {
  if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return v.convert_to<int64_t>();
  return v.str();
}

inline Json RationalToJson(const Rational& q) {
  Json j = Json::object();
  j["num"] = BigIntToJson(Numerator(q));
  j["den"] = BigIntToJson(Denominator(q));
  return j;
}

inline Json RationalsToJson(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(RationalToJson(q));
  return j;
}

inline Json BoundToJson(const UpperBound& d) {
  if (IsFinite(d)) return FiniteValue(d);
  return "unbounded";
}

// ---------------------------------------------------------------------------
// Reader with field-path context for error messages.

class JsonReader {
 public:
  JsonReader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

  const Json& node() const { return node_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("field " + (path_.empty() ? std::string("<document>") : path_) + ": " + what);
  }

  bool Has(const std::string& key) const { return node_.is_object() && node_.contains(key); }

  JsonReader At(const std::string& key) const {
    if (!node_.is_object()) Fail("expected an object");
    auto it = node_.find(key);
    const std::string sub = path_.empty() ? key : path_ + "." + key;
    if (it == node_.end()) throw ParseError("field " + sub + ": missing");
    return JsonReader(*it, sub);
  }

  size_t Size() const {
    if (!node_.is_array()) Fail("expected an array");
    return node_.size();
  }

  JsonReader At(size_t k) const { return JsonReader(node_.at(k), path_ + "[" + std::to_string(k) + "]"); }

  int64_t Int() const {
    if (!node_.is_number_integer()) Fail("expected an integer");
    if (node_.is_number_unsigned() && node_.get<uint64_t>() > static_cast<uint64_t>(INT64_MAX)) {
      Fail("integer out of range");
    }
    return node_.get<int64_t>();
  }

  int SmallInt() const {
    const int64_t v = Int();
    if (v < INT32_MIN || v > INT32_MAX) Fail("integer out of range");
    return static_cast<int>(v);
  }

  bool Bool() const {
    if (!node_.is_boolean()) Fail("expected a boolean");
    return node_.get<bool>();
  }

  std::string Str() const {
    if (!node_.is_string()) Fail("expected a string");
    return node_.get<std::string>();
  }

  BigInt Big() const {
    if (node_.is_number_integer()) return BigInt(Int());
    if (node_.is_string()) {
      try {
        return BigInt(node_.get<std::string>());
      } catch (const std::exception&) {
        Fail("malformed integer string");
      }
    }
    Fail("expected an integer");
  }

  // Accepts {"num","den"} objects and plain integers.
  Rational Rat() const {
    if (node_.is_number_integer() || node_.is_string()) return Rational(Big());
    if (!node_.is_object()) Fail("expected a rational {\"num\", \"den\"}");
    const BigInt num = At("num").Big();
    const BigInt den = At("den").Big();
    if (den == 0) Fail("zero denominator");
    return Rational(num, den);
  }

  UpperBound Bound() const {
    if (node_.is_string()) {
      if (node_.get<std::string>() != "unbounded") Fail("expected an integer or \"unbounded\"");
      return Unbounded{};
    }
    return Int();
  }

  template <typename T, typename F>
  std::vector<T> List(F&& read) const {
    std::vector<T> out;
    const size_t n = Size();
    for (size_t k = 0; k < n; ++k) out.push_back(read(At(k)));
    return out;
  }

  std::vector<int64_t> Ints() const {
    return List<int64_t>([](const JsonReader& r) { return r.Int(); });
  }

  std::vector<Rational> Rats() const {
    return List<Rational>([](const JsonReader& r) { return r.Rat(); });
  }

 private:
  const Json& node_;
  std::string path_;
};

// ---------------------------------------------------------------------------
// Encoders per kind.

inline Json Header(const char* kind) {
  Json j = Json::object();
  j["kind"] = kind;
  j["version"] = kDocumentVersion;
  return j;
}

inline void PutCipBase(Json& j, const ZeroOneCIP& a, bool with_demands) {
  j["matrix"] = a.matrix;
  if (with_demands) j["b"] = a.demands;
  j["c"] = a.costs;
  Json d = Json::array();
  for (const auto& u : a.upper_bounds) d.push_back(BoundToJson(u));
  j["d"] = d;
}

inline Json ToJson(const ZeroOneCIP& a) {
  Json j = Header("zero_one_cip");
  PutCipBase(j, a, true);
  return j;
}

inline Json ToJson(const ColumnRestrictedCIP& c) {
  Json j = Header("ccip");
  PutCipBase(j, c.base, true);
  j["s"] = c.supplies;
  return j;
}

inline Json ToJson(const PriorityCIP& p) {
  Json j = Header("pcip");
  PutCipBase(j, p.base, false);
  j["s"] = p.priority_supplies;
  j["pi"] = p.priority_demands;
  return j;
}

inline Json ToJson(const LineInstance& line) {
  Json j = Header("line");
  Json edges = Json::array();
  for (int64_t p : line.edge_priorities) edges.push_back({{"pi", p}});
  j["edges"] = edges;
  Json segs = Json::array();
  for (const auto& s : line.segments) segs.push_back({{"l", s.left}, {"r", s.right}, {"s", s.supply}, {"c", s.cost}});
  j["segments"] = segs;
  return j;
}

inline Json ToJson(const TwoPriorityLineInstance& line) {
  Json j = Header("two_plc");
  Json edges = Json::array();
  for (const auto& p : line.edge_priorities) edges.push_back({{"pi", {p.first, p.second}}});
  j["edges"] = edges;
  Json segs = Json::array();
  for (const auto& s : line.segments) {
    segs.push_back({{"l", s.left}, {"r", s.right}, {"s", {s.supply.first, s.supply.second}}, {"c", s.cost}});
  }
  j["segments"] = segs;
  return j;
}

inline Json ToJson(const TreeInstance& t) {
  Json j = Header("tree");
  j["num_nodes"] = t.num_nodes;
  j["root"] = t.root;
  j["parent"] = t.parent;
  j["child_order"] = t.child_order;
  Json edges = Json::array();
  for (int v = 0; v < t.num_nodes; ++v) {
    if (v != t.root) edges.push_back({{"node", v}, {"pi", t.edge_priorities[v]}});
  }
  j["edges"] = edges;
  Json segs = Json::array();
  for (const auto& s : t.segments) {
    segs.push_back({{"top", s.top}, {"bottom", s.bottom}, {"s", s.supply}, {"c", s.cost}});
  }
  j["segments"] = segs;
  return j;
}

inline Json ToJson(const RectCoverInstance& r) {
  Json j = Header("rect");
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back({{"x", p.x}, {"y", p.y}, {"z", p.z}});
  j["points"] = pts;
  Json boxes = Json::array();
  for (const auto& b : r.boxes) {
    boxes.push_back({{"x_lo", b.x_lo}, {"x_hi", b.x_hi}, {"y_hi", b.y_hi}, {"z_hi", b.z_hi}, {"c", b.cost}});
  }
  j["boxes"] = boxes;
  return j;
}

inline Json ToJson(const SolutionDocument& s) {
  Json j = Header("solution");
  if (!s.algorithm.empty()) j["algorithm"] = s.algorithm;
  if (std::holds_alternative<IntSolution>(s.x)) {
    j["x"] = std::get<IntSolution>(s.x);
  } else {
    j["x"] = RationalsToJson(std::get<FracSolution>(s.x));
  }
  j["cost"] = IsInteger(s.cost) ? BigIntToJson(Numerator(s.cost)) : RationalToJson(s.cost);
  if (!s.details.is_null()) j["details"] = s.details;
  return j;
}

inline Json ToJson(const ReportDocument& r) {
  Json j = Header("report");
  j["feasible"] = r.feasible;
  j["within_bounds"] = r.within_bounds;
  j["uncovered"] = r.uncovered;
  j["cost"] = IsInteger(r.cost) ? BigIntToJson(Numerator(r.cost)) : RationalToJson(r.cost);
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

inline Json ToJson(const Graph& g) {
  Json j = Header("graph");
  j["num_vertices"] = g.num_vertices;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

inline Json ToJson(const Document& d) {
  return std::visit([](const auto& v) { return ToJson(v); }, d);
}

inline std::string SerializeDocument(const Document& d) { return ToJson(d).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Decoders.

namespace internal {

inline ZeroOneCIP ReadCipBase(const JsonReader& r, bool with_demands) {
  ZeroOneCIP a;
  JsonReader m = r.At("matrix");
  for (size_t i = 0; i < m.Size(); ++i) {
    a.matrix.push_back(m.At(i).List<int>([](const JsonReader& e) { return e.SmallInt(); }));
  }
  a.costs = r.At("c").Ints();
  a.upper_bounds = r.At("d").List<UpperBound>([](const JsonReader& e) { return e.Bound(); });
  a.num_rows = static_cast<int>(a.matrix.size());
  a.num_cols = static_cast<int>(a.costs.size());
  if (with_demands) {
    a.demands = r.At("b").Ints();
  } else {
    a.demands.assign(a.num_rows, 1);
  }
  return a;
}

inline std::pair<int64_t, int64_t> ReadPair(const JsonReader& r) {
  if (r.Size() != 2) r.Fail("expected a pair of integers");
  return {r.At(size_t{0}).Int(), r.At(size_t{1}).Int()};
}

inline LineInstance ReadLine(const JsonReader& r) {
  LineInstance line;
  line.edge_priorities = r.At("edges").List<int64_t>([](const JsonReader& e) { return e.At("pi").Int(); });
  line.num_edges = static_cast<int>(line.edge_priorities.size());
  line.segments = r.At("segments").List<Segment>([](const JsonReader& s) {
    return Segment{s.At("l").SmallInt(), s.At("r").SmallInt(), s.At("s").Int(), s.At("c").Int()};
  });
  return line;
}

inline TwoPriorityLineInstance ReadTwoPlc(const JsonReader& r) {
  TwoPriorityLineInstance line;
  line.edge_priorities =
      r.At("edges").List<PriorityPair>([](const JsonReader& e) { return ReadPair(e.At("pi")); });
  line.num_edges = static_cast<int>(line.edge_priorities.size());
  line.segments = r.At("segments").List<TwoPrioritySegment>([](const JsonReader& s) {
    return TwoPrioritySegment{s.At("l").SmallInt(), s.At("r").SmallInt(), ReadPair(s.At("s")), s.At("c").Int()};
  });
  return line;
}

// child_order may be omitted, in which case children are listed by id.
inline TreeInstance ReadTree(const JsonReader& r) {
  TreeInstance t;
  t.parent = r.At("parent").List<int>([](const JsonReader& e) { return e.SmallInt(); });
  t.num_nodes = r.Has("num_nodes") ? r.At("num_nodes").SmallInt() : static_cast<int>(t.parent.size());
  if (t.num_nodes != static_cast<int>(t.parent.size())) r.At("num_nodes").Fail("does not match parent length");
  t.root = r.At("root").SmallInt();
  if (r.Has("child_order")) {
    JsonReader co = r.At("child_order");
    for (size_t v = 0; v < co.Size(); ++v) {
      t.child_order.push_back(co.At(v).List<int>([](const JsonReader& e) { return e.SmallInt(); }));
    }
  } else {
    t.child_order.assign(t.num_nodes, {});
    for (int v = 0; v < t.num_nodes; ++v) {
      const int p = t.parent[v];
      if (v != t.root && p >= 0 && p < t.num_nodes) t.child_order[p].push_back(v);
    }
  }
  t.edge_priorities.assign(t.num_nodes, 0);
  JsonReader edges = r.At("edges");
  std::vector<bool> seen(t.num_nodes, false);
  for (size_t k = 0; k < edges.Size(); ++k) {
    JsonReader e = edges.At(k);
    const int v = e.At("node").SmallInt();
    if (v < 0 || v >= t.num_nodes || v == t.root) e.At("node").Fail("not a non-root node");
    if (seen[v]) e.At("node").Fail("duplicate edge entry");
    seen[v] = true;
    t.edge_priorities[v] = e.At("pi").Int();
  }
  t.segments = r.At("segments").List<TreeSegment>([](const JsonReader& s) {
    return TreeSegment{s.At("top").SmallInt(), s.At("bottom").SmallInt(), s.At("s").Int(), s.At("c").Int()};
  });
  return t;
}

inline RectCoverInstance ReadRect(const JsonReader& r) {
  RectCoverInstance out;
  out.points = r.At("points").List<Point3>([](const JsonReader& p) {
    return Point3{p.At("x").Int(), p.At("y").Int(), p.At("z").Int()};
  });
  out.boxes = r.At("boxes").List<Box>([](const JsonReader& b) {
    return Box{b.At("x_lo").Int(), b.At("x_hi").Int(), b.At("y_hi").Int(), b.At("z_hi").Int(), b.At("c").Int()};
  });
  return out;
}

// x is integral when every entry is a plain integer.
inline SolutionDocument ReadSolution(const JsonReader& r) {
  SolutionDocument s;
  if (r.Has("algorithm")) s.algorithm = r.At("algorithm").Str();
  JsonReader x = r.At("x");
  bool integral = true;
  for (size_t k = 0; k < x.Size(); ++k) integral = integral && x.At(k).node().is_number_integer();
  if (integral) {
    s.x = x.Ints();
  } else {
    s.x = x.Rats();
  }
  if (r.Has("cost")) s.cost = r.At("cost").Rat();
  if (r.Has("details")) s.details = r.At("details").node();
  return s;
}

inline ReportDocument ReadReport(const JsonReader& r) {
  ReportDocument rep;
  rep.feasible = r.At("feasible").Bool();
  rep.within_bounds = r.At("within_bounds").Bool();
  rep.uncovered = r.At("uncovered").List<std::string>([](const JsonReader& e) { return e.Str(); });
  rep.cost = r.At("cost").Rat();
  if (r.Has("details")) rep.details = r.At("details").node();
  return rep;
}

inline Graph ReadGraph(const JsonReader& r) {
  Graph g;
  g.num_vertices = r.At("num_vertices").SmallInt();
  g.edges = r.At("edges").List<std::pair<int, int>>([](const JsonReader& e) {
    auto [a, b] = ReadPair(e);
    return std::pair<int, int>(static_cast<int>(a), static_cast<int>(b));
  });
  return g;
}

}  // namespace internal

inline Document FromJson(const Json& j) {
  JsonReader r(j, "");
  if (!j.is_object()) r.Fail("expected a JSON object");
  const std::string kind = r.At("kind").Str();
  const int64_t version = r.At("version").Int();
  if (version != kDocumentVersion) {
    r.At("version").Fail("unsupported version " + std::to_string(version) + " (expected " +
                         std::to_string(kDocumentVersion) + ")");
  }
  if (kind == "zero_one_cip") return internal::ReadCipBase(r, true);
  if (kind == "ccip") return ColumnRestrictedCIP{internal::ReadCipBase(r, true), r.At("s").Ints()};
  if (kind == "pcip") return PriorityCIP{internal::ReadCipBase(r, false), r.At("s").Ints(), r.At("pi").Ints()};
  if (kind == "line") return internal::ReadLine(r);
  if (kind == "two_plc") return internal::ReadTwoPlc(r);
  if (kind == "tree") return internal::ReadTree(r);
  if (kind == "rect") return internal::ReadRect(r);
  if (kind == "solution") return internal::ReadSolution(r);
  if (kind == "report") return internal::ReadReport(r);
  if (kind == "graph") return internal::ReadGraph(r);
  r.At("kind").Fail("unknown document kind '" + kind + "'");
}

inline Document ParseDocument(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column position.
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  return FromJson(j);
}

template <typename T>
T ExpectKind(const Document& d, const char* kind) {
  if (!std::holds_alternative<T>(d)) {
    throw ParseError(std::string("expected a '") + kind + "' document, got '" + DocumentKind(d) + "'");
  }
  return std::get<T>(d);
}

inline std::string ReadTextFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace priocover

#endif  // PRIOCOVER_IO_HPP_
