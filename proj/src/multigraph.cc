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

#include "edgeouter/multigraph.h"

#include <algorithm>
#include <set>
#include <string>

#include "edgeouter/errors.h"

namespace edgeouter {

Graph::Graph(int vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count), edges_(edges.begin(), edges.end()) {
  if (vertex_count < 0) throw InvalidInput("negative vertex count");
  incidence_.resize(vertex_count);
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw InvalidInput("edge " + std::to_string(e) + " has endpoint out of range");
    }
    incidence_[u].push_back(Dart{e, 0});
    incidence_[v].push_back(Dart{e, 1});
  }
}

DegreeProfile GetDegreeProfile(const Graph& g) {
  DegreeProfile profile;
  profile.degrees.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) profile.degrees[v] = g.degree(v);
  profile.is_cubic = std::all_of(profile.degrees.begin(), profile.degrees.end(),
                                 [](int d) { return d == 3; });
  profile.is_simple = true;
  std::set<Edge> seen;
  for (const auto& [u, v] : g.edges()) {
    if (u == v || !seen.insert(std::minmax(u, v)).second) {
      profile.is_simple = false;
      break;
    }
  }
  return profile;
}

namespace {

// Number of vertices reachable from the first non-removed vertex, and the
// number of non-removed vertices.
std::pair<int, int> ReachCount(const Graph& g, const std::vector<char>& removed) {
  int alive = 0;
  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (start < 0) return {0, 0};
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (Dart d : g.incident(v)) {
      int w = g.Head(d);
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return {reached, alive};
}

}  // namespace

bool IsConnected(const Graph& g) {
  std::vector<char> removed(g.vertex_count(), 0);
  auto [reached, alive] = ReachCount(g, removed);
  return reached == alive;
}

bool VertexConnectivityAtLeast(const Graph& g, int k) {
  if (k < 1 || k > 3) throw InvalidInput("connectivity level must be 1, 2 or 3");
  if (g.vertex_count() == 0 || !IsConnected(g)) return false;
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  auto still_connected = [&]() {
    auto [reached, alive] = ReachCount(g, removed);
    return alive < 2 || reached == alive;
  };
  if (k >= 2) {
    for (int a = 0; a < n; ++a) {
      removed[a] = 1;
      if (!still_connected()) return false;
      if (k >= 3) {
        for (int b = a + 1; b < n; ++b) {
          removed[b] = 1;
          bool ok = still_connected();
          removed[b] = 0;
          if (!ok) return false;
        }
      }
      removed[a] = 0;
    }
  }
  return true;
}

int EdgeDisjointPaths(const Graph& g, int u, int v, int cap) {
  if (u == v) return cap;
  // Each undirected edge is a pair of opposite arcs of capacity one; the
  // arc along dart d carries flow[d.index()].
  std::vector<int> flow(g.dart_count(), 0);
  int total = 0;
  std::vector<int> via(g.vertex_count());
  while (total < cap) {
    std::fill(via.begin(), via.end(), -1);
    std::vector<int> queue{u};
    via[u] = g.dart_count();  // sentinel
    for (size_t i = 0; i < queue.size() && via[v] < 0; ++i) {
      int x = queue[i];
      for (Dart d : g.incident(x)) {
        if (g.IsLoop(d.edge)) continue;
        int y = g.Head(d);
        // Residual capacity of arc d: 1 - flow(d) + flow(opposite).
        int residual = 1 - flow[d.index()] + flow[d.opposite().index()];
        if (residual > 0 && via[y] < 0) {
          via[y] = d.index();
          queue.push_back(y);
        }
      }
    }
    if (via[v] < 0) break;
    for (int y = v; y != u;) {
      Dart d = Dart::FromIndex(via[y]);
      int back = d.opposite().index();
      if (flow[back] > 0) {
        --flow[back];
      } else {
        ++flow[d.index()];
      }
      y = g.Tail(d);
    }
    ++total;
  }
  return total;
}

std::vector<std::vector<int>> E3Classes(const Graph& g) {
  if (!IsConnected(g)) throw InvalidInput("E3 classes need a connected graph");
  const int n = g.vertex_count();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = static_cast<int>(classes.size());
    classes.push_back({u});
    for (int v = u + 1; v < n; ++v) {
      if (cls[v] < 0 && EdgeDisjointPaths(g, u, v, 3) >= 3) {
        cls[v] = cls[u];
        classes.back().push_back(v);
      }
    }
  }
  return classes;
}

std::vector<std::vector<int>> AdjacencyLists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (Dart d : g.incident(v)) {
      if (!g.IsLoop(d.edge)) adj[v].push_back(g.Head(d));
    }
  }
  return adj;
}

int FindUniqueEdge(const Graph& g, int u, int v) {
  int found = -1;
  for (Dart d : g.incident(u)) {
    if (g.Head(d) != v) continue;
    if (u == v && d.side == 1) continue;
    if (found >= 0 && found != d.edge) {
      throw InvalidInput("several edges join " + std::to_string(u) + " and " +
                         std::to_string(v));
    }
    found = d.edge;
  }
  return found;
}

}  // namespace edgeouter
