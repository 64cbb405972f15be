// Copyright 2026 The Edgeouter Authors.
//
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

#include "edgeouter/io.h"

#include <gtest/gtest.h>

#include <regex>

#include "edgeouter/errors.h"
#include "edgeouter/optimal.h"
#include "edgeouter/reporter.h"
#include "test_graphs.h"

namespace edgeouter {
namespace {

constexpr char kK4[] =
    "graph 4 6\n"
    "edge 0 0 1\nedge 1 0 2\nedge 2 0 3\nedge 3 1 2\nedge 4 1 3\nedge 5 2 3\n"
    "rot 0 0.0 1.0 2.0\nrot 1 3.0 0.1 4.0\nrot 2 5.0 1.1 3.1\nrot 3 4.1 2.1 5.1\n";

int CountMatches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<int>(std::distance(
      std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

int ErrorLine(std::string_view text) {
  try {
    ParseGraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseGraphTest, ThetaWithoutRotation) {
  GraphFile f = ParseGraph("# theta\ngraph 2 3\nedge 0 0 1\nedge 1 0 1\n\nedge 2 0 1\n");
  EXPECT_EQ(f.graph.vertex_count(), 2);
  EXPECT_EQ(f.graph.edge_count(), 3);
  EXPECT_FALSE(f.embedding.has_value());
}

TEST(ParseGraphTest, ThetaWithRotation) {
  GraphFile f = ParseGraph(
      "graph 2 3\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\n"
      "rot 0 0.0 1.0 2.0\nrot 1 0.1 1.1 2.1\n");
  ASSERT_TRUE(f.embedding.has_value());
  EXPECT_EQ(TraceFaces(*f.embedding).size(), 1);
  EXPECT_EQ(Genus(*f.embedding), 1);
}

TEST(ParseGraphTest, EdgesInAnyOrder) {
  GraphFile f = ParseGraph("graph 3 2\nedge 1 1 2\nedge 0 0 1\n");
  EXPECT_EQ(f.graph.edges()[0], (std::pair<int, int>{0, 1}));
  EXPECT_EQ(f.graph.edges()[1], (std::pair<int, int>{1, 2}));
}

TEST(ParseGraphTest, K4WithRotation) {
  GraphFile f = ParseGraph(kK4);
  ASSERT_TRUE(f.embedding.has_value());
  EXPECT_EQ(Genus(*f.embedding), 0);
  EXPECT_EQ(f.embedding->Successor(Dart{0, 0}), (Dart{1, 0}));
}

TEST(ParseGraphTest, ErrorsNameTheLine) {
  EXPECT_EQ(ErrorLine("grph 2 1\nedge 0 0 1\n"), 1);
  EXPECT_EQ(ErrorLine("graph 2 2\nedge 0 0 1\nedge 0 0 1\n"), 3);
  EXPECT_EQ(ErrorLine("graph 2 1\nedge 1 0 1\n"), 2);
  EXPECT_EQ(ErrorLine("graph 2 1\nedge 0 0 2\n"), 2);
  EXPECT_EQ(ErrorLine("graph 2 1\nedge 0 0 1\nrot 0 0.0\nrot 1 0x1\n"), 4);
  EXPECT_EQ(ErrorLine("graph 2 2\nedge 0 0 1\nedge 1 0 1\nrot 0 0.0 0.0\nrot 1 0.1 1.1\n"), 4);
  EXPECT_EQ(ErrorLine("graph 2 1\nedge 0 0 1\nrot 0 0.0\n"), 3);
  EXPECT_EQ(ErrorLine("graph 2 1\nedge 0 0 1\nbogus\n"), 3);
}

TEST(ParseGraphTest, MissingEdgesIsAnError) {
  EXPECT_THROW(ParseGraph("graph 2 2\nedge 0 0 1\n"), ParseError);
  EXPECT_THROW(ParseGraph(""), ParseError);
}

TEST(SerializeGraphTest, RoundTripIsStable) {
  for (const std::string text : {std::string(kK4), SerializeGraph(testing::Petersen())}) {
    GraphFile f = ParseGraph(text);
    std::string once = SerializeGraph(f.graph, f.embedding ? &*f.embedding : nullptr);
    GraphFile g = ParseGraph(once);
    std::string twice = SerializeGraph(g.graph, g.embedding ? &*g.embedding : nullptr);
    EXPECT_EQ(once, twice);
    EXPECT_EQ(g.graph.edges(), f.graph.edges());
  }
}

TEST(SerializeGraphTest, RandomEmbeddingsRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::RandomConnectedMultigraph(rng, 6, 9);
    Embedding emb = testing::RandomEmbedding(rng, g);
    GraphFile f = ParseGraph(SerializeGraph(g, &emb));
    ASSERT_TRUE(f.embedding.has_value());
    for (int e = 0; e < g.edge_count(); ++e) {
      for (Dart d : {Dart{e, 0}, Dart{e, 1}}) {
        EXPECT_EQ(f.embedding->Successor(d), emb.Successor(d));
      }
    }
  }
}

TEST(WalkIoTest, RoundTrip) {
  Walk w{{Dart{0, 0}, Dart{1, 1}, Dart{0, 0}, Dart{1, 1}}};
  std::string text = SerializeWalk(w);
  EXPECT_EQ(text, "walk closed 4\n0.0 1.1 0.0 1.1\n");
  Graph theta = testing::Theta();
  EXPECT_EQ(ParseWalk(text, &theta), w);
}

TEST(WalkIoTest, Errors) {
  EXPECT_THROW(ParseWalk("walk closed 3\n0.0 1.1\n"), ParseError);
  EXPECT_THROW(ParseWalk("walk open 2\n0.0 1.1\n"), ParseError);
  EXPECT_THROW(ParseWalk("walk closed 2\n0.0 1.7\n"), ParseError);
  Graph theta = testing::Theta();
  EXPECT_THROW(ParseWalk("walk closed 2\n0.0 1.0\n", &theta), InvalidInput);
  EXPECT_THROW(ParseWalk("walk closed 2\n0.0 9.1\n", &theta), InvalidInput);
}

TEST(GadgetMapIoTest, RoundTrip) {
  GadgetGraph q = BuildQ(testing::K4Planar());
  std::string text = SerializeGadgetMap(q.map);
  GadgetMap back = ParseGadgetMap(text);
  EXPECT_EQ(back.stage(), GadgetStage::kQ);
  EXPECT_EQ(back.vertex_names(), q.map.vertex_names());
  EXPECT_EQ(back.edge_names(), q.map.edge_names());
  EXPECT_EQ(back.bracing(), q.map.bracing());
  EXPECT_EQ(SerializeGadgetMap(back), text);
  EXPECT_THROW(ParseGadgetMap("map x 0 0\n"), ParseError);
}

TEST(DotTest, PlainGraph) {
  std::string dot = ExportDot(testing::K4());
  EXPECT_EQ(CountMatches(dot, " -- "), 6);
  EXPECT_EQ(CountMatches(dot, "style="), 0);
  EXPECT_NE(dot.find("graph"), std::string::npos);
}

TEST(DotTest, EmbeddingAddsRotationComments) {
  Embedding emb = testing::K4Planar();
  std::string dot = ExportDot(emb.graph(), nullptr, &emb);
  EXPECT_EQ(CountMatches(dot, "comment=\"rot "), 4);
}

TEST(DotTest, CprsWalkOnK4) {
  Graph k4 = testing::K4();
  std::vector<Walk> walks = EnumerateCprs(k4);
  ASSERT_FALSE(walks.empty());
  std::string dot = ExportDot(k4, &walks.front());
  // A CPRS walk of a cubic graph doubles a perfect matching.
  EXPECT_EQ(CountMatches(dot, "style=bold"), 2);
  EXPECT_EQ(CountMatches(dot, "style=solid"), 4);
  EXPECT_EQ(CountMatches(dot, "uses=2"), 2);
  EXPECT_EQ(CountMatches(dot, "style=dashed"), 0);
}

TEST(DotTest, ThetaDoubleCover) {
  Graph theta = testing::Theta();
  Walk w = ReporterStrandWalk(IdentityEmbedding(theta)).walk;
  ASSERT_EQ(w.length(), 6);
  std::string dot = ExportDot(theta, &w);
  EXPECT_EQ(CountMatches(dot, "style=bold"), 3);
}

TEST(DotTest, UnusedEdgesAreDashed) {
  Graph theta = testing::Theta();
  Walk w{{Dart{0, 0}, Dart{1, 1}}};
  std::string dot = ExportDot(theta, &w);
  EXPECT_EQ(CountMatches(dot, "style=solid"), 2);
  EXPECT_EQ(CountMatches(dot, "style=dashed"), 1);
  Walk bad{{Dart{0, 0}, Dart{1, 0}}};
  EXPECT_THROW(ExportDot(theta, &bad), InvalidInput);
}

}  // namespace
}  // namespace edgeouter
