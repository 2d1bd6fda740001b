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


#include <gtest/gtest.h>

#include "priocover/generators.hpp"
#include "priocover/io.hpp"
#include "priocover/plc.hpp"
#include "priocover/ptc.hpp"
#include "priocover/reductions.hpp"

namespace priocover {
namespace {

void ExpectRoundTrip(const Document& d) {
  const std::string text = SerializeDocument(d);
  const Document back = ParseDocument(text);
  EXPECT_EQ(back, d) << text;
  EXPECT_EQ(SerializeDocument(back), text);
}

TEST(IoTest, RoundTripsEveryKind) {
  Rng rng(91);
  const Broom broom = GenBroom({3, {{0, 1}, {1, 2}}});
  ExpectRoundTrip(GenGapLine(5));
  ExpectRoundTrip(RandomLine(rng));
  ExpectRoundTrip(RandomTree(rng));
  ExpectRoundTrip(broom.tree);
  ExpectRoundTrip(PtcTo2Plc(broom.tree));
  ExpectRoundTrip(TwoPlcToRect(PtcTo2Plc(broom.tree)));
  const ColumnRestrictedCIP c = RandomLineCcip(rng);
  ExpectRoundTrip(c);
  ExpectRoundTrip(c.base);
  ZeroOneCIP unit_base = c.base;
  unit_base.demands.assign(unit_base.num_rows, 1);  // PCIP rows always have unit demand
  ExpectRoundTrip(PriorityCIP{unit_base, c.supplies, std::vector<int64_t>(c.base.num_rows, 1)});
  ExpectRoundTrip(broom.spec.graph);
  ExpectRoundTrip(SolutionDocument{"plc-exact", IntSolution{1, 0, 2}, 3, Json{{"nodes", 4}}});
  ExpectRoundTrip(SolutionDocument{"lp", FracSolution{Rational(8, 3), 0}, Rational(8, 3), Json()});
  ExpectRoundTrip(ReportDocument{false, true, {"edge 2"}, 7, Json()});
}

TEST(IoTest, RationalEncoding) {
  EXPECT_EQ(RationalToJson(Rational(8, 3)).dump(), R"({"num":8,"den":3})");
  EXPECT_EQ(RationalToJson(Rational(-4, 2)).dump(), R"({"num":-2,"den":1})");
  const SolutionDocument s{"x", FracSolution{Rational(8, 3)}, Rational(8, 3), Json()};
  const auto back = std::get<SolutionDocument>(ParseDocument(SerializeDocument(s)));
  EXPECT_EQ(std::get<FracSolution>(back.x)[0], Rational(8, 3));
}

TEST(IoTest, UnboundedUpperBound) {
  EXPECT_EQ(BoundToJson(UpperBound{Unbounded{}}).dump(), R"("unbounded")");
  EXPECT_EQ(BoundToJson(UpperBound{int64_t{3}}).dump(), "3");
  const std::string text = R"({"kind":"zero_one_cip","version":1,"matrix":[[1,1]],"b":[2],"c":[1,1],"d":["unbounded",1]})";
  const ZeroOneCIP a = std::get<ZeroOneCIP>(ParseDocument(text));
  EXPECT_FALSE(IsFinite(a.upper_bounds[0]));
  EXPECT_EQ(FiniteValue(a.upper_bounds[1]), 1);
}

TEST(IoTest, StructurallyInvalidLineParsesButFailsValidation) {
  const std::string text =
      R"({"kind":"line","version":1,"edges":[{"pi":1},{"pi":1}],"segments":[{"l":2,"r":1,"s":1,"c":1}]})";
  const LineInstance line = std::get<LineInstance>(ParseDocument(text));
  EXPECT_FALSE(ValidateInstance(line).empty());
  EXPECT_THROW(RequireValid(line), ValidationError);
}

TEST(IoTest, VersionMismatchIsRejected) {
  try {
    ParseDocument(R"({"kind":"graph","version":2,"num_vertices":1,"edges":[]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos);
  }
}

TEST(IoTest, MissingFieldReportsPath) {
  const std::string text =
      R"({"kind":"line","version":1,"edges":[{"pi":1}],"segments":[{"l":1,"r":1,"s":1,"c":1},{"r":1,"s":1,"c":1}]})";
  try {
    ParseDocument(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("segments[1].l"), std::string::npos) << e.what();
  }
}

TEST(IoTest, MalformedJsonReportsLine) {
  try {
    ParseDocument("{\n  \"kind\": \"line\",,\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(IoTest, UnknownKindAndWrongKind) {
  EXPECT_THROW(ParseDocument(R"({"kind":"banana","version":1})"), ParseError);
  EXPECT_THROW(ExpectKind<TreeInstance>(Document{GenGapLine(3)}, "tree"), ParseError);
}

TEST(IoTest, TreeChildOrderIsOptional) {
  const std::string text =
      R"({"kind":"tree","version":1,"num_nodes":3,"root":0,"parent":[-1,0,0],)"
      R"("edges":[{"node":1,"pi":1},{"node":2,"pi":2}],"segments":[{"top":0,"bottom":2,"s":2,"c":1}]})";
  const TreeInstance t = std::get<TreeInstance>(ParseDocument(text));
  EXPECT_EQ(t.child_order[0], (std::vector<int>{1, 2}));
  EXPECT_EQ(t.edge_priorities[2], 2);
  EXPECT_TRUE(ValidateInstance(t).empty());
}

}  // namespace
}  // namespace priocover
