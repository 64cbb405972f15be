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

#include "edgeouter/embedding.h"

#include <algorithm>
#include <string>

#include "edgeouter/errors.h"

namespace edgeouter {

Embedding::Embedding(Graph graph, std::vector<std::vector<Dart>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(rotation_.size()) != n) {
    throw InvalidInput("rotation count does not match vertex count");
  }
  successor_.assign(graph_.dart_count(), Dart{-1, 0});
  predecessor_.assign(graph_.dart_count(), Dart{-1, 0});
  for (int v = 0; v < n; ++v) {
    const auto& rot = rotation_[v];
    if (static_cast<int>(rot.size()) != graph_.degree(v)) {
      throw InvalidInput("rotation at vertex " + std::to_string(v) +
                         " has the wrong number of darts");
    }
    for (size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d.edge < 0 || d.edge >= graph_.edge_count() || d.side < 0 ||
          d.side > 1 || graph_.Tail(d) != v) {
        throw InvalidInput("rotation at vertex " + std::to_string(v) +
                           " lists a dart of another vertex");
      }
      if (successor_[d.index()].edge >= 0) {
        throw InvalidInput("rotation at vertex " + std::to_string(v) +
                           " repeats a dart");
      }
      Dart next = rot[(i + 1) % rot.size()];
      successor_[d.index()] = next;
      predecessor_[next.index()] = d;
    }
  }
}

Embedding Embedding::Anchored() const {
  auto rotation = rotation_;
  for (auto& rot : rotation) {
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  return Embedding(graph_, std::move(rotation));
}

Embedding Embedding::Mirrored() const {
  auto rotation = rotation_;
  for (auto& rot : rotation) std::reverse(rot.begin(), rot.end());
  return Embedding(graph_, std::move(rotation));
}

Embedding IdentityEmbedding(const Graph& g) {
  std::vector<std::vector<Dart>> rotation(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    rotation[v].assign(g.incident(v).begin(), g.incident(v).end());
  }
  return Embedding(g, std::move(rotation));
}

Embedding EmbeddingFromNeighborOrder(const Graph& g,
                                     const std::vector<std::vector<int>>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw InvalidInput("neighbour order count does not match vertex count");
  }
  std::vector<std::vector<Dart>> rotation(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : order[v]) {
      int e = FindUniqueEdge(g, v, w);
      if (e < 0) {
        throw InvalidInput("vertex " + std::to_string(v) + " has no neighbour " +
                           std::to_string(w));
      }
      rotation[v].push_back(g.edge(e).first == v ? Dart{e, 0} : Dart{e, 1});
    }
  }
  return Embedding(g, std::move(rotation));
}

bool Face::HasEdge(int e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

FaceSet TraceFaces(const Embedding& emb) {
  const int darts = emb.graph().dart_count();
  FaceSet result;
  result.face_of.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (result.face_of[start] >= 0) continue;
    Face face;
    const int id = result.size();
    Dart d = Dart::FromIndex(start);
    do {
      result.face_of[d.index()] = id;
      face.darts.push_back(d);
      face.edges.push_back(d.edge);
      d = emb.Next(d);
    } while (d.index() != start);
    std::sort(face.edges.begin(), face.edges.end());
    face.edges.erase(std::unique(face.edges.begin(), face.edges.end()),
                     face.edges.end());
    result.faces.push_back(std::move(face));
  }
  return result;
}

int Genus(const Embedding& emb) { return Genus(emb, TraceFaces(emb)); }

int Genus(const Embedding& emb, const FaceSet& faces) {
  const Graph& g = emb.graph();
  if (!IsConnected(g)) throw InvalidInput("genus needs a connected graph");
  if (g.edge_count() == 0) return 0;
  int euler = g.vertex_count() - g.edge_count() + faces.size();
  return (2 - euler) / 2;
}

std::vector<Corner> CornersOfFace(const Embedding& emb, const FaceSet& faces,
                                  int f, int v) {
  std::vector<Corner> corners;
  for (Dart d : faces.faces.at(f).darts) {
    if (emb.graph().Tail(d) == v) corners.push_back({emb.Predecessor(d), d});
  }
  return corners;
}

Embedding Flip(const Embedding& emb, const FaceSet& faces, Dart d, int f,
               Corner corner) {
  const Graph& g = emb.graph();
  if (d.edge < 0 || d.edge >= g.edge_count()) throw InvalidInput("no such dart");
  if (f < 0 || f >= faces.size()) throw InvalidInput("no such face");
  if (faces.FaceOf(d) == f || faces.FaceOf(d.opposite()) == f) {
    throw InvalidInput("the flipped edge already lies on the target face");
  }
  const int v = g.Tail(d);
  if (g.Tail(corner.after) != v || emb.Successor(corner.before) != corner.after) {
    throw InvalidInput("corner is not a pair of consecutive darts at the vertex");
  }
  if (faces.FaceOf(corner.after) != f) {
    throw InvalidInput("corner does not belong to the target face");
  }
  auto rotation = emb.rotations();
  auto& rot = rotation[v];
  rot.erase(std::find(rot.begin(), rot.end(), d));
  rot.insert(std::find(rot.begin(), rot.end(), corner.after), d);
  return Embedding(g, std::move(rotation));
}

int ClockwiseNeighbor(const Embedding& emb, int u, int v) {
  const Graph& g = emb.graph();
  int e = FindUniqueEdge(g, u, v);
  if (e < 0 || u == v) {
    throw InvalidInput(std::to_string(u) + " and " + std::to_string(v) +
                       " are not adjacent");
  }
  Dart at_u = g.edge(e).first == u ? Dart{e, 0} : Dart{e, 1};
  return g.Head(emb.Successor(at_u));
}

}  // namespace edgeouter
