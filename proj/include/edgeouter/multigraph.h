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

// Undirected multigraphs described through darts (edge-ends). Loops and
// parallel edges are allowed everywhere.

#ifndef EDGEOUTER_MULTIGRAPH_H_
#define EDGEOUTER_MULTIGRAPH_H_

#include <compare>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace edgeouter {

// One end of an edge. Side 0 sits at the first endpoint of the edge, side 1
// at the second. Darts order by (edge, side), which is also the order of
// their dense index 2 * edge + side.
struct Dart {
  int edge = 0;
  int side = 0;

  constexpr int index() const { return 2 * edge + side; }
  constexpr Dart opposite() const { return Dart{edge, 1 - side}; }
  static constexpr Dart FromIndex(int index) {
    return Dart{index / 2, index % 2};
  }

  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput if an endpoint is outside [0, vertex_count).
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // The vertex a dart is attached to; a walk along `d` leaves this vertex.
  int Tail(Dart d) const {
    return d.side == 0 ? edges_[d.edge].first : edges_[d.edge].second;
  }
  // The vertex reached by traversing `d`.
  int Head(Dart d) const { return Tail(d.opposite()); }

  // Darts at `v` in edge-list order. A loop contributes both of its darts.
  std::span<const Dart> incident(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

  bool IsLoop(int e) const { return edges_[e].first == edges_[e].second; }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> incidence_;
};

struct DegreeProfile {
  bool is_cubic = false;
  bool is_simple = false;
  std::vector<int> degrees;
};

DegreeProfile GetDegreeProfile(const Graph& g);

bool IsConnected(const Graph& g);

// True iff g is connected and deleting any set of fewer than k vertices
// leaves a connected graph (k in 1..3). Removal sets that would leave fewer
// than two vertices are not considered, so K_{k+1} and the two-vertex theta
// graph qualify. Brute force over all removal sets.
bool VertexConnectivityAtLeast(const Graph& g, int k);

// Number of edge-disjoint u-v paths, computed by unit-capacity augmenting
// paths and capped at `cap`. Loops never contribute.
int EdgeDisjointPaths(const Graph& g, int u, int v, int cap);

// Classes of the relation "joined by three edge-disjoint paths", each class
// sorted, classes ordered by smallest member. Throws InvalidInput for a
// disconnected graph.
std::vector<std::vector<int>> E3Classes(const Graph& g);

// For each vertex, its neighbours through non-loop edges, one entry per edge.
std::vector<std::vector<int>> AdjacencyLists(const Graph& g);

// Edge id joining u and v in a graph with at most one such edge, or -1.
// Throws InvalidInput if several u-v edges exist.
int FindUniqueEdge(const Graph& g, int u, int v);

}  // namespace edgeouter

#endif  // EDGEOUTER_MULTIGRAPH_H_
