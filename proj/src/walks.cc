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

#include "edgeouter/walks.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgeouter/errors.h"

namespace edgeouter {

void CheckClosedWalk(const Graph& g, const Walk& w) {
  if (!w.closed) throw InvalidInput("walk is not closed");
  if (w.darts.empty()) throw InvalidInput("walk is empty");
  for (Dart d : w.darts) {
    if (d.edge < 0 || d.edge >= g.edge_count() || d.side < 0 || d.side > 1) {
      throw InvalidInput("walk uses a dart that is not in the graph");
    }
  }
  const int k = w.length();
  for (int i = 0; i < k; ++i) {
    Dart d = w.darts[i];
    Dart next = w.darts[(i + 1) % k];
    if (g.Head(d) != g.Tail(next)) {
      throw InvalidInput("walk darts " + std::to_string(i) + " and " +
                         std::to_string((i + 1) % k) + " are not consecutive");
    }
  }
}

Walk Reverse(const Walk& w) {
  Walk r;
  r.closed = w.closed;
  r.darts.reserve(w.darts.size());
  for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it) {
    r.darts.push_back(it->opposite());
  }
  return r;
}

namespace {

// Index of the lexicographically least rotation of `s` (quadratic, fine for
// walks of a few thousand darts).
size_t LeastRotation(const std::vector<Dart>& s) {
  const size_t k = s.size();
  size_t best = 0;
  for (size_t r = 1; r < k; ++r) {
    for (size_t i = 0; i < k; ++i) {
      Dart a = s[(r + i) % k];
      Dart b = s[(best + i) % k];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  return best;
}

std::vector<Dart> Rotated(const std::vector<Dart>& s, size_t start) {
  std::vector<Dart> out(s.begin() + start, s.end());
  out.insert(out.end(), s.begin(), s.begin() + start);
  return out;
}

}  // namespace

Walk Canonical(const Walk& w) {
  if (w.darts.empty()) return w;
  Walk reversed = Reverse(w);
  auto forward = Rotated(w.darts, LeastRotation(w.darts));
  auto backward = Rotated(reversed.darts, LeastRotation(reversed.darts));
  Walk out;
  out.closed = w.closed;
  out.darts = std::min(forward, backward);
  return out;
}

bool SameClosedWalk(const Walk& a, const Walk& b) {
  return a.length() == b.length() && Canonical(a) == Canonical(b);
}

std::vector<int> VertexSequence(const Graph& g, const Walk& w) {
  std::vector<int> out;
  out.reserve(w.darts.size());
  for (Dart d : w.darts) out.push_back(g.Tail(d));
  return out;
}

Walk WalkFromVertices(const Graph& g, std::span<const int> vertices) {
  std::vector<int> seq(vertices.begin(), vertices.end());
  if (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
  if (seq.empty()) throw InvalidInput("empty vertex sequence");
  Walk w;
  for (size_t i = 0; i < seq.size(); ++i) {
    int u = seq[i];
    int v = seq[(i + 1) % seq.size()];
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
      throw InvalidInput("vertex out of range in walk");
    }
    int e = FindUniqueEdge(g, u, v);
    if (e < 0) {
      throw InvalidInput("no edge between " + std::to_string(u) + " and " +
                         std::to_string(v));
    }
    w.darts.push_back(g.edge(e).first == u ? Dart{e, 0} : Dart{e, 1});
  }
  return w;
}

Walk FaceWalk(const FaceSet& faces, int f) {
  Walk w;
  w.darts = faces.faces.at(f).darts;
  return w;
}

RotGraph BuildRotGraph(const Graph& g, const Walk& w, int v) {
  RotGraph rg;
  rg.vertex = v;
  rg.nodes.assign(g.incident(v).begin(), g.incident(v).end());
  const int k = w.length();
  for (int i = 0; i < k; ++i) {
    Dart in = w.darts[i];
    Dart out = w.darts[(i + 1) % k];
    if (g.Head(in) == v) rg.links.push_back({in.opposite(), out});
  }
  return rg;
}

bool RotGraph::IsCompatible() const {
  const int n = static_cast<int>(nodes.size());
  const int links_count = static_cast<int>(links.size());
  auto position = [&](Dart d) {
    return static_cast<int>(std::find(nodes.begin(), nodes.end(), d) - nodes.begin());
  };
  std::vector<int> degree(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool self_loop = false;
  int merges = 0;
  for (auto [a, b] : links) {
    int i = position(a);
    int j = position(b);
    ++degree[i];
    ++degree[j];
    if (i == j) self_loop = true;
    int ri = find(i);
    int rj = find(j);
    if (ri != rj) {
      parent[ri] = rj;
      ++merges;
    }
  }
  bool max_degree_two = std::all_of(degree.begin(), degree.end(),
                                    [](int d) { return d <= 2; });
  if (!max_degree_two) return false;
  // Spanning cycle: n links, all degrees 2, one component.
  if (links_count == n && n > 0 && merges == n - 1 &&
      std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) {
    return true;
  }
  // Disjoint paths: a forest with no self-loops.
  return !self_loop && links_count == merges;
}

WalkReport ValidateWalk(const Graph& g, const Walk& w) {
  CheckClosedWalk(g, w);
  WalkReport report;
  std::vector<int> uses(g.edge_count(), 0);
  std::vector<int> dart_uses(g.dart_count(), 0);
  for (Dart d : w.darts) {
    ++uses[d.edge];
    ++dart_uses[d.index()];
  }
  report.edge_spanning = std::all_of(uses.begin(), uses.end(), [](int u) { return u >= 1; });
  report.edge_2_bounded = std::all_of(uses.begin(), uses.end(), [](int u) { return u <= 2; });
  report.orientable =
      std::all_of(dart_uses.begin(), dart_uses.end(), [](int u) { return u <= 1; });
  for (int e = 0; e < g.edge_count(); ++e) {
    if (uses[e] == 1) report.solo_edges.push_back(e);
    if (uses[e] == 2) report.double_edges.push_back(e);
  }
  report.retraction_free = true;
  const int k = w.length();
  for (int i = 0; i < k; ++i) {
    if (w.darts[(i + 1) % k] == w.darts[i].opposite()) {
      report.retraction_free = false;
      break;
    }
  }
  report.rotation_compatible = true;
  for (int v = 0; v < g.vertex_count() && report.rotation_compatible; ++v) {
    report.rotation_compatible = BuildRotGraph(g, w, v).IsCompatible();
  }
  return report;
}

bool IsReporterStrandWalk(const Graph& g, const Walk& w) {
  return ValidateWalk(g, w).IsReporterStrandWalk();
}

bool IsCprsWalk(const Graph& g, const Walk& w, int chinese_postman_length) {
  return w.length() == chinese_postman_length && IsReporterStrandWalk(g, w);
}

Embedding RealizeAsFace(const Graph& g, const Walk& w) {
  WalkReport report = ValidateWalk(g, w);
  if (!report.orientable || !report.rotation_compatible) {
    throw InvalidInput("walk is not orientable and rotation-compatible");
  }
  const int darts = g.dart_count();
  // Transitions arrive on one end at a vertex and leave along another;
  // the face-tracing rule makes the departure the successor of the arrival.
  std::vector<int> next(darts, -1);
  std::vector<int> prev(darts, -1);
  std::vector<std::vector<Dart>> first_use(g.vertex_count());
  const int k = w.length();
  for (int i = 0; i < k; ++i) {
    Dart arrive = w.darts[i].opposite();
    Dart leave = w.darts[(i + 1) % k];
    next[arrive.index()] = leave.index();
    prev[leave.index()] = arrive.index();
    first_use[g.Tail(leave)].push_back(arrive);
  }
  std::vector<std::vector<Dart>> rotation(g.vertex_count());
  std::vector<char> placed(darts, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& rot = rotation[v];
    for (Dart a : first_use[v]) {
      if (placed[a.index()]) continue;
      int start = a.index();
      while (prev[start] >= 0 && prev[start] != a.index()) start = prev[start];
      for (int x = start; x >= 0 && !placed[x]; x = next[x]) {
        placed[x] = 1;
        rot.push_back(Dart::FromIndex(x));
      }
    }
    for (Dart d : g.incident(v)) {
      if (!placed[d.index()]) {
        placed[d.index()] = 1;
        rot.push_back(d);
      }
    }
  }
  return Embedding(g, std::move(rotation));
}

std::vector<std::vector<int>> PassagesThrough(const Graph& g, const Walk& w,
                                              const std::vector<char>& inside) {
  CheckClosedWalk(g, w);
  const int k = w.length();
  int start = -1;
  for (int i = 0; i < k; ++i) {
    if (!inside[g.Tail(w.darts[i])]) {
      start = i;
      break;
    }
  }
  if (start < 0) throw InvalidInput("walk never leaves the vertex set");
  std::vector<std::vector<int>> passages;
  std::vector<int> piece{g.Tail(w.darts[start])};
  for (int j = 0; j < k; ++j) {
    Dart d = w.darts[(start + j) % k];
    int h = g.Head(d);
    piece.push_back(h);
    if (!inside[h]) {
      if (piece.size() >= 3) passages.push_back(piece);
      piece.assign(1, h);
    }
  }
  return passages;
}

}  // namespace edgeouter
