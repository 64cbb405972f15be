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

#include "edgeouter/optimal.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>
#include <random>

#include "edgeouter/errors.h"
#include "edgeouter/reporter.h"
#include "test_graphs.h"

namespace edgeouter {
namespace {

using testing::K4;
using testing::Theta;

// Independent cp oracle: Floyd-Warshall distances and plain recursive
// pairing of odd vertices.
int CpOracle(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (auto [u, v] : g.edges()) {
    if (u != v) dist[u][v] = dist[v][u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) % 2) odd.push_back(v);
  }
  std::function<int(std::vector<int>)> pair = [&](std::vector<int> rest) {
    if (rest.empty()) return 0;
    int best = inf;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<int> next;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        if (k != j) next.push_back(rest[k]);
      }
      best = std::min(best, dist[rest[0]][rest[j]] + pair(next));
    }
    return best;
  };
  return g.edge_count() + pair(odd);
}

// Independent hamilton oracle: try every permutation fixing vertex 0.
bool HamiltonianOracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = adj[0][perm[0]] && adj[perm.back()][0];
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = adj[perm[i]][perm[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph RandomSimpleGraph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

TEST(ChinesePostmanTest, Examples) {
  EXPECT_EQ(ChinesePostmanLength(K4()), 8);
  EXPECT_EQ(ChinesePostmanLength(Theta()), 4);
  EXPECT_EQ(ChinesePostmanLength(testing::Triangle()), 3);
  EXPECT_EQ(ChinesePostmanLength(testing::Path(4)), 6);
  EXPECT_EQ(ChinesePostmanLength(testing::Petersen()), 20);
}

TEST(ChinesePostmanTest, Errors) {
  EXPECT_THROW(ChinesePostmanLength(Graph(3, {{0, 1}})), InvalidInput);
  std::vector<Edge> star;
  for (int i = 1; i <= 17; ++i) star.emplace_back(0, i);
  EXPECT_THROW(ChinesePostmanLength(Graph(18, star)), InvalidInput);
}

TEST(ChinesePostmanTest, MatchesOracleOnRandomMultigraphs) {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = testing::RandomConnectedMultigraph(rng, 10, 16);
    EXPECT_EQ(ChinesePostmanLength(g), CpOracle(g));
  }
}

TEST(ChinesePostmanTest, TwoConnectedCubicIsTwiceVertexCount) {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 * std::uniform_int_distribution<int>(2, 7)(rng);
    Graph g = testing::RandomCubic2Connected(rng, n);
    EXPECT_EQ(ChinesePostmanLength(g), 2 * n);
  }
}

TEST(RotationSystemCountTest, Values) {
  EXPECT_EQ(RotationSystemCount(K4()), 16);
  EXPECT_EQ(RotationSystemCount(Theta()), 4);
  EXPECT_EQ(RotationSystemCount(testing::Path(5)), 1);
  std::vector<Edge> star;
  for (int i = 1; i <= 40; ++i) star.emplace_back(0, i);
  EXPECT_EQ(RotationSystemCount(Graph(41, star)), INT64_MAX);
}

TEST(ExactSrsTest, Examples) {
  SrsResult k4 = ExactShortestReporterStrand(K4());
  EXPECT_EQ(k4.length, 8);
  EXPECT_TRUE(IsReporterStrandWalk(K4(), k4.walk));
  EXPECT_EQ(k4.walk.length(), 8);
  SrsResult theta = ExactShortestReporterStrand(Theta());
  EXPECT_EQ(theta.length, 6);
  EXPECT_TRUE(IsReporterStrandWalk(Theta(), theta.walk));
  EXPECT_EQ(ExactShortestReporterStrand(testing::Triangle()).length, 3);
}

TEST(ExactSrsTest, WitnessIsAFaceOfItsEmbedding) {
  SrsResult r = ExactShortestReporterStrand(testing::Petersen());
  FaceSet faces = TraceFaces(r.embedding);
  bool found = false;
  for (int f = 0; f < faces.size(); ++f) {
    found = found || SameClosedWalk(FaceWalk(faces, f), r.walk);
  }
  EXPECT_TRUE(found);
  EXPECT_GE(r.length, ChinesePostmanLength(testing::Petersen()));
}

TEST(ExactSrsTest, BudgetAndInputErrors) {
  EXPECT_THROW(ExactShortestReporterStrand(K4(), 15), BudgetExceeded);
  EXPECT_NO_THROW(ExactShortestReporterStrand(K4(), 16));
  EXPECT_THROW(ExactShortestReporterStrand(Graph(2, {})), InvalidInput);
  EXPECT_THROW(ExactShortestReporterStrand(Graph(1, {})), InvalidInput);
}

TEST(MaxGenusTest, Examples) {
  EXPECT_EQ(MaxGenusExhaustive(Theta()).genus, 1);
  EXPECT_EQ(MaxGenusExhaustive(K4()).genus, 1);
  EXPECT_EQ(MaxGenusExhaustive(testing::Path(5)).genus, 0);
  MaxGenusResult k33 = MaxGenusExhaustive(testing::K33());
  EXPECT_EQ(k33.genus, 2);
  EXPECT_EQ(Genus(k33.embedding), 2);
  EXPECT_THROW(MaxGenusExhaustive(K4(), 3), BudgetExceeded);
}

TEST(CprsTraceTest, K4Success) {
  Graph g = K4();
  // Matching {01, 23}; the solo cycle 0 2 1 3 in one of its orientations.
  for (bool reversed : {false, true}) {
    CprsTraceResult r = CprsTrace(g, {{0, 5}, {reversed}});
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.walk.length(), 8);
    EXPECT_TRUE(IsCprsWalk(g, r.walk, 8));
  }
}

TEST(CprsTraceTest, ThetaAlwaysClosesEarly) {
  Graph g = Theta();
  for (int e = 0; e < 3; ++e) {
    for (bool reversed : {false, true}) {
      CprsTraceResult r = CprsTrace(g, {{e}, {reversed}});
      EXPECT_FALSE(r.success);
      EXPECT_LT(r.walk.length(), 4);
    }
  }
}

TEST(CprsTraceTest, PrismEarlyClosureReportsShortWalk) {
  // Matching of the three spokes leaves two solo triangles; orienting them
  // the same way round the drawing closes after one spoke pair.
  Graph g = testing::PrismPlanar().graph();
  int closed_early = 0;
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      CprsTraceResult r = CprsTrace(g, {{6, 7, 8}, {a, b}});
      if (!r.success) {
        ++closed_early;
        EXPECT_LT(r.walk.length(), 12);
        CheckClosedWalk(g, r.walk);
      } else {
        EXPECT_TRUE(IsCprsWalk(g, r.walk, 12));
      }
    }
  }
  EXPECT_GT(closed_early, 0);
}

TEST(CprsTraceTest, RejectsBadCandidates) {
  EXPECT_THROW(CprsTrace(K4(), {{0}, {}}), InvalidInput);
  EXPECT_THROW(CprsTrace(testing::Path(3), {{0}, {}}), InvalidInput);
  EXPECT_THROW(CprsTrace(K4(), {{0, 5}, {false, false}}), InvalidInput);
}

TEST(PerfectMatchingTest, Counts) {
  auto count = [](const Graph& g) {
    return ForEachPerfectMatching(g, 1'000'000, [](std::span<const int>) {});
  };
  EXPECT_EQ(count(K4()), 3);
  EXPECT_EQ(count(Theta()), 3);
  EXPECT_EQ(count(testing::Petersen()), 6);
  EXPECT_EQ(count(testing::CubePlanar().graph()), 9);
  EXPECT_EQ(count(testing::Triangle()), 0);
  EXPECT_THROW(ForEachPerfectMatching(testing::Petersen(), 5, [](std::span<const int>) {}),
               BudgetExceeded);
}

TEST(PerfectMatchingTest, MatchingsArePerfect) {
  Graph g = testing::CubePlanar().graph();
  ForEachPerfectMatching(g, 100, [&](std::span<const int> m) {
    std::vector<int> hit(g.vertex_count(), 0);
    for (int e : m) {
      ++hit[g.edge(e).first];
      ++hit[g.edge(e).second];
    }
    for (int h : hit) EXPECT_EQ(h, 1);
  });
}

TEST(EnumerateCprsTest, K4) {
  std::vector<Walk> walks = EnumerateCprs(K4());
  ASSERT_FALSE(walks.empty());
  for (const Walk& w : walks) {
    EXPECT_EQ(w.length(), 8);
    WalkReport r = ValidateWalk(K4(), w);
    EXPECT_TRUE(r.IsReporterStrandWalk());
    EXPECT_EQ(r.double_edges.size(), 2u);
    EXPECT_EQ(Canonical(w), w);
  }
  EXPECT_TRUE(std::is_sorted(walks.begin(), walks.end(), [](const Walk& a, const Walk& b) {
    return a.darts < b.darts;
  }));
}

TEST(EnumerateCprsTest, ThetaHasNone) { EXPECT_TRUE(EnumerateCprs(Theta()).empty()); }

TEST(EnumerateCprsTest, RejectsUnsupportedGraphs) {
  EXPECT_THROW(EnumerateCprs(testing::Triangle()), InvalidInput);
  // Two K4s with one edge subdivided each, subdivision vertices bridged.
  Graph bridged(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {4, 3}, {2, 3},
                     {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 9}, {9, 8}, {7, 8},
                     {4, 9}});
  ASSERT_TRUE(GetDegreeProfile(bridged).is_cubic);
  EXPECT_THROW(EnumerateCprs(bridged), InvalidInput);
  EXPECT_THROW(EnumerateCprs(Graph(2, {{0, 0}, {1, 1}, {0, 1}})), InvalidInput);
}

// Structural conditions hold for every enumerated walk, and a CPRS walk
// exists exactly when srs = cp.
TEST(EnumerateCprsTest, NonemptyIffSrsEqualsCp) {
  std::mt19937 rng(43);
  std::vector<Graph> graphs = {K4(), Theta(), testing::PrismPlanar().graph(),
                               testing::CubePlanar().graph(), testing::K33()};
  for (int i = 0; i < 12; ++i) {
    int n = 2 * std::uniform_int_distribution<int>(2, 5)(rng);
    graphs.push_back(testing::RandomCubic2Connected(rng, n));
  }
  for (const Graph& g : graphs) {
    int cp = ChinesePostmanLength(g);
    std::vector<Walk> walks = EnumerateCprs(g);
    for (const Walk& w : walks) {
      WalkReport r = ValidateWalk(g, w);
      EXPECT_TRUE(r.edge_spanning && r.orientable && r.rotation_compatible);
      EXPECT_EQ(w.length(), cp);
      std::vector<int> hit(g.vertex_count(), 0);
      for (int e : r.double_edges) {
        ++hit[g.edge(e).first];
        ++hit[g.edge(e).second];
      }
      for (int h : hit) EXPECT_EQ(h, 1);
    }
    int srs = ExactShortestReporterStrand(g).length;
    EXPECT_GE(srs, cp);
    EXPECT_EQ(!walks.empty(), srs == cp) << "n=" << g.vertex_count();
  }
}

TEST(HamiltonTest, Examples) {
  auto k4 = HamiltonCycle(K4());
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->size(), 4u);
  EXPECT_TRUE(IsHamiltonCycle(K4(), *k4));
  auto c5 = HamiltonCycle(Cycle(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(*c5, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(HamiltonCycle(testing::Petersen()).has_value());
  EXPECT_THROW(HamiltonCycle(Theta()), InvalidInput);
}

TEST(HamiltonTest, IsHamiltonCycleRejects) {
  std::vector<int> short_cycle = {0, 1, 2};
  std::vector<int> repeat = {0, 1, 0, 2};
  std::vector<int> non_edge = {0, 2, 1, 3, 4};
  EXPECT_FALSE(IsHamiltonCycle(K4(), short_cycle));
  EXPECT_FALSE(IsHamiltonCycle(K4(), repeat));
  EXPECT_FALSE(IsHamiltonCycle(Cycle(5), non_edge));
}

TEST(HamiltonTest, MatchesPermutationOracle) {
  std::mt19937 rng(44);
  for (int iter = 0; iter < 150; ++iter) {
    int n = std::uniform_int_distribution<int>(3, 8)(rng);
    Graph g = RandomSimpleGraph(rng, n, 0.45);
    auto cycle = HamiltonCycle(g);
    EXPECT_EQ(cycle.has_value(), HamiltonianOracle(g));
    if (cycle) EXPECT_TRUE(IsHamiltonCycle(g, *cycle));
  }
}

// The flipping algorithm lands between srs and 2|E|.
TEST(OptimalPropertyTest, ReporterWalkIsAtLeastSrs) {
  std::mt19937 rng(45);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = testing::RandomConnectedMultigraph(rng, 6, 9);
    if (g.edge_count() == 0 || RotationSystemCount(g) > 20000) continue;
    int srs = ExactShortestReporterStrand(g).length;
    EXPECT_GE(srs, ChinesePostmanLength(g));
    ReporterResult r = ReporterStrandWalk(testing::RandomEmbedding(rng, g));
    EXPECT_GE(r.walk.length(), srs);
    EXPECT_LE(r.walk.length(), 2 * g.edge_count());
  }
}

}  // namespace
}  // namespace edgeouter
